"""Result models shared by the walkforge SDK and CLI."""

from dataclasses import asdict, dataclass, field
from typing import Dict, FrozenSet, List, Literal, Optional, Tuple

Exactness = Literal["mod_p", "exact_crt"]
DistanceStatus = Literal["dist", "unreachable", "beyond_horizon"]


@dataclass(frozen=True)
class WalkCountVector:
    """Walk counts ``w_1..w_K`` for one ordered pair."""
    u: int
    v: int
    counts: Tuple[int, ...]
    p: int
    exactness: Exactness = "mod_p"
    primes: Tuple[int, ...] = ()

    def __getitem__(self, k: int) -> int:
        """Count for length ``k`` (1-based)."""
        if not 1 <= k <= len(self.counts):
            raise IndexError(f"Length {k} outside 1..{len(self.counts)}")
        return self.counts[k - 1]

    def __len__(self) -> int:
        return len(self.counts)

    def to_dict(self) -> Dict:
        data = {"u": self.u, "v": self.v, "counts": list(self.counts), "p": self.p, "exactness": self.exactness}
        if self.primes:
            data["primes"] = list(self.primes)
        return data


@dataclass(frozen=True)
class Distance:
    status: DistanceStatus
    value: Optional[int] = None
    via_fallback: bool = False

    @classmethod
    def dist(cls, k: int, via_fallback: bool = False) -> "Distance":
        return cls("dist", k, via_fallback)

    @classmethod
    def unreachable(cls) -> "Distance":
        return cls("unreachable")

    @classmethod
    def beyond_horizon(cls) -> "Distance":
        return cls("beyond_horizon")

    @property
    def is_finite(self) -> bool:
        return self.status == "dist"


@dataclass(frozen=True)
class CycleProfile:
    """Closed-walk counts ``c_u^1..c_u^K`` through ``u`` and the shortest cycle length."""
    u: int
    counts: Tuple[int, ...]
    shortest: Optional[int]
    via_fallback: bool = False


@dataclass(frozen=True)
class CycleSets:
    """``sets[c - 1]`` holds the vertices on a cycle of length at most ``c``."""
    sets: Tuple[FrozenSet[int], ...]

    def __getitem__(self, c: int) -> FrozenSet[int]:
        return self.sets[c - 1]

    def __len__(self) -> int:
        return len(self.sets)

    def is_monotone(self) -> bool:
        return all(a <= b for a, b in zip(self.sets, self.sets[1:]))

    def to_lists(self) -> List[List[int]]:
        return [sorted(s) for s in self.sets]


@dataclass(frozen=True)
class DiameterReport:
    n: int
    diameter: int
    strongly_connected: bool
    mu_min: int
    minpoly_deg: int

    @property
    def within_mu_min(self) -> bool:
        return self.diameter <= self.mu_min

    @property
    def within_minpoly(self) -> bool:
        return self.diameter <= self.minpoly_deg

    def to_dict(self) -> Dict:
        data = asdict(self)
        data.update(within_mu_min=self.within_mu_min, within_minpoly=self.within_minpoly)
        return data


@dataclass
class DiameterAudit:
    reports: List[DiameterReport] = field(default_factory=list)
    p: Optional[int] = None

    @property
    def total(self) -> int:
        return len(self.reports)

    @property
    def mu_min_violations(self) -> int:
        return sum(not r.within_mu_min for r in self.reports)

    @property
    def minpoly_violations(self) -> int:
        return sum(not r.within_minpoly for r in self.reports)

    def to_dict(self) -> Dict:
        data = {
            "total": self.total,
            "mu_min_violations": self.mu_min_violations,
            "minpoly_violations": self.minpoly_violations,
        }
        if self.p is not None:
            data["p"] = self.p
        return data


@dataclass
class BenchRow:
    n: int
    m: int
    mu: int
    preprocess_seconds: float
    apaw_seconds: float
    naive_seconds: Optional[float] = None

    @property
    def speedup(self) -> Optional[float]:
        if self.naive_seconds is None or self.apaw_seconds <= 0:
            return None
        return self.naive_seconds / self.apaw_seconds

    def to_dict(self) -> Dict:
        data = asdict(self)
        data["speedup"] = self.speedup
        return data


@dataclass
class VerifyReport:
    trials: int
    p: int
    checked_queries: int = 0
    rechecked_zeros: List[Dict] = field(default_factory=list)
    diameter_audit: DiameterAudit = field(default_factory=DiameterAudit)

    def to_dict(self) -> Dict:
        return {
            "trials": self.trials,
            "p": self.p,
            "checked_queries": self.checked_queries,
            "rechecked_zeros": self.rechecked_zeros,
            "diameter_audit": self.diameter_audit.to_dict(),
        }


__all__ = [
    "Exactness",
    "DistanceStatus",
    "WalkCountVector",
    "Distance",
    "CycleProfile",
    "CycleSets",
    "DiameterReport",
    "DiameterAudit",
    "BenchRow",
    "VerifyReport",
]
