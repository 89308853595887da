"""Polynomials over Z_p as dense high-first coefficient lists.

Thin wrappers over ``sympy.polys.galoistools``; the zero polynomial is ``[]``.
"""

from typing import List, Sequence

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_add,
    gf_degree,
    gf_div,
    gf_monic,
    gf_mul,
    gf_rem,
    gf_strip,
    gf_sub_mul,
)

Poly = List[int]


def from_block(coeffs: Sequence[int], p: int) -> Poly:
    """Monic ``x^r + c_{r-1}x^{r-1} + ... + c_0`` from ``c_0..c_{r-1}``."""
    return [1] + [int(c) % p for c in reversed(coeffs)]


def to_block(poly: Poly, p: int) -> List[int]:
    """Inverse of :func:`from_block`; the polynomial is made monic first."""
    monic_poly = monic(poly, p)
    return [int(c) for c in reversed(monic_poly[1:])]


def normalize(coeffs: Sequence[int], p: int) -> Poly:
    return gf_strip([int(c) % p for c in coeffs])


def degree(poly: Poly) -> int:
    return gf_degree(poly)


def monic(poly: Poly, p: int) -> Poly:
    if not poly:
        return []
    return list(gf_monic(poly, p, ZZ)[1])


def add(f: Poly, g: Poly, p: int) -> Poly:
    return list(gf_add(f, g, p, ZZ))


def mul(f: Poly, g: Poly, p: int) -> Poly:
    return list(gf_mul(f, g, p, ZZ))


def divmod_poly(f: Poly, g: Poly, p: int):
    quotient, remainder = gf_div(f, g, p, ZZ)
    return list(quotient), list(remainder)


def rem(f: Poly, g: Poly, p: int) -> Poly:
    return list(gf_rem(f, g, p, ZZ))


def sub_mul(f: Poly, g: Poly, h: Poly, p: int) -> Poly:
    """``f - g*h``."""
    return list(gf_sub_mul(f, g, h, p, ZZ))


def divides(f: Poly, g: Poly, p: int) -> bool:
    """True when ``f | g`` over Z_p."""
    if not f:
        return not g
    return not rem(g, f, p)


def format_poly(poly: Poly, var: str = "x") -> str:
    if not poly:
        return "0"
    deg = len(poly) - 1
    terms = []
    for i, c in enumerate(poly):
        if c == 0:
            continue
        power = deg - i
        if power == 0:
            terms.append(str(c))
        else:
            mono = var if power == 1 else f"{var}^{power}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(terms)


__all__ = [
    "Poly",
    "from_block",
    "to_block",
    "normalize",
    "degree",
    "monic",
    "add",
    "mul",
    "divmod_poly",
    "rem",
    "sub_mul",
    "divides",
    "format_poly",
]
