"""Points of real projective m-space and exact limits along rational paths.

A ``ProjPoint`` stores the canonical representative of a projective class:
the first nonzero coordinate is scaled to 1 (scanning from index 0), so
projective equality is plain tuple equality.  Every point also exposes a
float unit-vector shadow (first nonzero coordinate positive) that feeds
the antipodal metric; equality decisions never touch the shadow.

``path_limit`` realizes the evaluation engine for limits at t -> 0+ of a
regular map along a Laurent path: compose every numerator (and the
denominator) with the path, take the common minimal order nu, and read
off the coefficient vector at t^nu.  This is exact and always converges
for Laurent input; the sign convention is t -> 0 from above, so the
coefficient at t^nu is taken as-is.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ArityError, PoleOnPathError
from .maps import RationalPath, RegularMap
from .polyring import format_rational


@dataclass(frozen=True)
class ProjPoint:
    """Canonically normalized point of RP^m."""

    coords: tuple

    def __post_init__(self):
        if not self.coords or all(c == 0 for c in self.coords):
            raise ValueError("projective point needs a nonzero coordinate vector")

    @classmethod
    def from_raw(cls, values) -> "ProjPoint":
        values = [Fraction(v) if not isinstance(v, Fraction) else v for v in values]
        pivot = next((v for v in values if v != 0), None)
        if pivot is None:
            raise ValueError("cannot normalize the zero vector")
        return cls(tuple(v / pivot for v in values))

    @property
    def m(self) -> int:
        return len(self.coords) - 1

    @property
    def at_infinity(self) -> bool:
        return self.coords[0] == 0

    def unit_vector(self):
        """Float shadow: unit vector with first nonzero coordinate positive."""
        floats = [float(c) for c in self.coords]
        norm = math.sqrt(sum(v * v for v in floats))
        vec = [v / norm for v in floats]
        for v in vec:
            if v != 0:
                if v < 0:
                    vec = [-w for w in vec]
                break
        return vec

    def affine_part(self):
        """The finite point (x1/x0, ..., xm/x0); requires x0 != 0."""
        if self.at_infinity:
            raise ValueError("point lies on the infinity hyperplane")
        return tuple(c / self.coords[0] for c in self.coords[1:])

    def direction(self):
        """For an infinity point, the unit direction (x1, ..., xm)/|.|."""
        if not self.at_infinity:
            raise ValueError("finite points have no direction at infinity")
        return _unit(self.coords[1:])

    def integer_representative(self):
        """Primitive integer coordinate vector in the same class.

        Lets reports display (0 : 4 : 1) instead of the canonical
        (0 : 1 : 1/4); equality checks always use the canonical form.
        """
        lcm = 1
        for c in self.coords:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in self.coords]
        g = 0
        for v in ints:
            g = math.gcd(g, abs(v))
        return tuple(v // g for v in ints)

    def to_text(self) -> str:
        return "(" + " : ".join(format_rational(c) for c in self.coords) + ")"

    def to_display(self) -> str:
        return "(" + " : ".join(str(v) for v in self.integer_representative()) + ")"

    def to_json(self) -> dict:
        return {"coords": [format_rational(c) for c in self.coords]}


def _unit(values):
    floats = [float(v) for v in values]
    norm = math.sqrt(sum(v * v for v in floats))
    vec = [v / norm for v in floats]
    for v in vec:
        if v != 0:
            if v < 0:
                vec = [-w for w in vec]
            break
    return vec


def normalize(raw) -> ProjPoint:
    """Canonical representative of a nonzero rational coordinate vector."""
    return ProjPoint.from_raw(raw)


def proj_equal(a: ProjPoint, b: ProjPoint) -> bool:
    return a.coords == b.coords


def proj_distance(a: ProjPoint, b: ProjPoint) -> float:
    """Antipodal metric min(|u - v|, |u + v|) on the float shadows."""
    if a.m != b.m:
        raise ArityError("projective points of different dimension")
    u = a.unit_vector()
    v = b.unit_vector()
    d_minus = math.sqrt(sum((x - y) ** 2 for x, y in zip(u, v)))
    d_plus = math.sqrt(sum((x + y) ** 2 for x, y in zip(u, v)))
    return min(d_minus, d_plus)


@dataclass(frozen=True)
class LimitResult:
    """Exact projective limit of a map along a path.

    ``nu`` is the common minimal order of the composed numerator/denominator
    tuple and ``leading`` its coefficient vector at t^nu (zero where a
    component has higher order).
    """

    point: ProjPoint
    nu: int
    leading: tuple

    def to_json(self) -> dict:
        return {
            "point": self.point.to_json(),
            "nu": self.nu,
            "leading": [format_rational(c) for c in self.leading],
            "at_infinity": self.point.at_infinity,
        }


def path_limit(f: RegularMap, path: RationalPath) -> LimitResult:
    """lim_{t->0+} of (f0 : f1 : ... : fm) along the path, exactly.

    Raises ``PoleOnPathError`` when the denominator composes to the zero
    Laurent polynomial (the path lies inside the pole locus; impossible
    for a genuinely nonvanishing denominator).
    """
    composed = f.compose_path_tuple(path)
    if composed[0].is_zero():
        raise PoleOnPathError(
            "denominator is identically zero along the path; the map is not"
            " regular on this curve")
    nu = min(g.order() for g in composed if not g.is_zero())
    leading = tuple(g.coefficient(nu) for g in composed)
    return LimitResult(normalize(leading), int(nu), leading)
