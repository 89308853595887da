"""Public SDK exports."""

from .client import WalkForge
from .config import Config
from .exceptions import (
    BoundTooSmall,
    ConfigError,
    ContractError,
    DecompositionFailure,
    DimensionMismatch,
    EdgeListParseError,
    HorizonExceeded,
    IndexFormatError,
    LengthOverflow,
    Singular,
    SizeGuard,
    VerificationMismatch,
    VertexOutOfRange,
    WalkForgeError,
    ZeroInverse,
)
from .field import NTT_PRIMES, FieldElem, PrimeField
from .frobenius import CompanionBlock, FrobeniusForm, companion_power_window, frobenius_decompose, verify_form
from .graph import Graph, bfs_reachability, random_digraph, random_strongly_connected
from .graph_algos import (
    ansc,
    apaw,
    audit_diameter_bounds,
    cycle_profile,
    cycle_sets,
    diameter_mu_report,
    iter_apaw,
    naive_apaw,
)
from .hankel import HankelSpec, hankel_matvec
from .matrix import DenseMatrix, mat_inverse, mat_mul, mat_pow
from .models import (
    BenchRow,
    CycleProfile,
    CycleSets,
    DiameterAudit,
    DiameterReport,
    Distance,
    VerifyReport,
    WalkCountVector,
)
from .walk_oracle import (
    WalkIndex,
    build_index,
    crt_exact_counts,
    distance,
    fallback_power_row,
    query_all_lengths,
    query_prefix_count,
    query_walk_count,
)

__all__ = [
    "WalkForge",
    "Config",
    "PrimeField",
    "FieldElem",
    "NTT_PRIMES",
    "DenseMatrix",
    "mat_mul",
    "mat_inverse",
    "mat_pow",
    "CompanionBlock",
    "FrobeniusForm",
    "frobenius_decompose",
    "verify_form",
    "companion_power_window",
    "HankelSpec",
    "hankel_matvec",
    "Graph",
    "bfs_reachability",
    "random_digraph",
    "random_strongly_connected",
    "WalkIndex",
    "build_index",
    "query_walk_count",
    "query_prefix_count",
    "query_all_lengths",
    "distance",
    "fallback_power_row",
    "crt_exact_counts",
    "apaw",
    "iter_apaw",
    "naive_apaw",
    "cycle_profile",
    "ansc",
    "cycle_sets",
    "diameter_mu_report",
    "audit_diameter_bounds",
    "WalkCountVector",
    "Distance",
    "CycleProfile",
    "CycleSets",
    "DiameterReport",
    "DiameterAudit",
    "BenchRow",
    "VerifyReport",
    "WalkForgeError",
    "ConfigError",
    "EdgeListParseError",
    "IndexFormatError",
    "ContractError",
    "ZeroInverse",
    "LengthOverflow",
    "DimensionMismatch",
    "Singular",
    "DecompositionFailure",
    "HorizonExceeded",
    "BoundTooSmall",
    "SizeGuard",
    "VertexOutOfRange",
    "VerificationMismatch",
]
