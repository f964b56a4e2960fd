"""Exact and numeric tooling for the points at infinity of map images."""

from .errors import (
    ArityError,
    InfimapError,
    ParseError,
    PoleOnPathError,
    PreconditionError,
)
from .polyring import (
    LaurentPoly,
    MPoly,
    NEG_INF,
    Rat,
    compose_path,
    format_poly,
    gcd_reduce,
    homogenize,
    mpoly_gcd,
    squarefree_part,
    x0_valuation,
)

__version__ = "0.1.0"

__all__ = [
    "ArityError",
    "InfimapError",
    "LaurentPoly",
    "MPoly",
    "NEG_INF",
    "ParseError",
    "PoleOnPathError",
    "PreconditionError",
    "Rat",
    "compose_path",
    "format_poly",
    "gcd_reduce",
    "homogenize",
    "mpoly_gcd",
    "squarefree_part",
    "x0_valuation",
]
