"""Value types for maps, paths, and semialgebraic sets, plus the
map-level operations: gcd reduction, range/domain shears with the
deterministic normalizing search, and exact composition of maps.

A ``RegularMap`` is a map R^n -> R^m written as ``(f1/f0, ..., fm/f0)``
with a single common denominator.  A polynomial map is the ``f0 = 1``
case.  Nonvanishing of ``f0`` on R^n is the *user's* responsibility; the
parser attaches a warning when a cheap numeric falsifier finds evidence
against it, and downstream operations raise when they actually hit a pole.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction

from .errors import ArityError, PreconditionError
from .polyring import (
    NEG_INF,
    POS_INF,
    LaurentPoly,
    MPoly,
    compose_path,
    default_names,
    format_poly,
    gcd_reduce,
    homogenize,
)


@dataclass(frozen=True)
class RegularMap:
    """(f1/f0, ..., fm/f0) with shared denominator f0.

    ``reduced`` records that gcd reduction has been applied, which several
    operations (homogenization, classification) require.
    """

    f0: MPoly
    components: tuple
    reduced: bool = False
    warnings: tuple = ()

    def __post_init__(self):
        if self.f0.is_zero():
            raise ValueError("denominator must be nonzero")
        if not self.components:
            raise ValueError("a map needs at least one component")
        n = self.f0.nvars
        for c in self.components:
            if c.nvars != n:
                raise ArityError("all components must share the domain arity")

    @property
    def n(self) -> int:
        return self.f0.nvars

    @property
    def m(self) -> int:
        return len(self.components)

    def is_polynomial(self) -> bool:
        return self.f0.is_constant()

    def is_constant(self) -> bool:
        """True when every ratio f_i/f0 is a constant function."""
        for c in self.components:
            if c.is_zero():
                continue
            # f_i/f0 constant iff f_i is a rational multiple of f0
            le, lc = c.lead_term()
            fe, fc = self.f0.lead_term()
            if le != fe or c * fc != self.f0 * lc:
                return False
        return True

    def reduce(self) -> "RegularMap":
        """Divide out the gcd of (f0, f1, ..., fm)."""
        if self.reduced:
            return self
        _, family = gcd_reduce(self.f0, self.components)
        return RegularMap(family[0], tuple(family[1:]), reduced=True,
                          warnings=self.warnings)

    def with_warning(self, message: str) -> "RegularMap":
        return replace(self, warnings=self.warnings + (message,))

    def numerator_tuple(self):
        """(f0, f1, ..., fm)."""
        return (self.f0,) + self.components

    def eval_exact(self, point):
        den = self.f0.eval_exact(point)
        if den == 0:
            raise ZeroDivisionError("denominator vanishes at the sample point")
        return [c.eval_exact(point) / den for c in self.components]

    def compose_path_tuple(self, path: "RationalPath"):
        """Laurent tuple (f0, f1, ..., fm) evaluated along the path."""
        if path.n != self.n:
            raise ArityError(
                f"path has {path.n} components, map domain has dimension {self.n}")
        return [compose_path(p, path.components) for p in self.numerator_tuple()]

    def to_text(self) -> str:
        names = default_names(self.n)
        body = ", ".join(format_poly(c, names) for c in self.components)
        if self.is_polynomial() and self.f0.constant_value() == 1:
            return f"({body})"
        return f"({body}) / ({format_poly(self.f0, names)})"

    @classmethod
    def polynomial(cls, components, reduced=False) -> "RegularMap":
        components = tuple(components)
        one = MPoly.constant(components[0].nvars, 1)
        return cls(one, components, reduced=reduced)


@dataclass(frozen=True)
class RationalPath:
    """Tuple of Laurent polynomials in t describing an approach curve.

    ``i0`` marks the component of minimal order (ties broken by the
    smallest index) and is reported 1-based to match the variable naming
    x1..xn.
    """

    components: tuple

    def __post_init__(self):
        if not self.components:
            raise ValueError("a path needs at least one component")

    @property
    def n(self) -> int:
        return len(self.components)

    @property
    def orders(self):
        return tuple(c.order() for c in self.components)

    @property
    def i0(self) -> int:
        orders = self.orders
        return 1 + min(range(len(orders)), key=lambda i: (orders[i], i))

    def min_order(self):
        return min(self.orders)

    def goes_to_infinity(self) -> bool:
        return any(o is not POS_INF and o < 0 for o in self.orders)

    def substitute_power(self, s: int) -> "RationalPath":
        return RationalPath(tuple(c.substitute_power(s) for c in self.components))

    def eval_float(self, t: float):
        return [c.eval_float(t) for c in self.components]

    def to_text(self) -> str:
        return "(" + ", ".join(c.to_text() for c in self.components) + ")"


# ----------------------------------------------------------------------
# Semialgebraic sets

RELATIONS = ("<", "<=", "=", ">=", ">")


@dataclass(frozen=True)
class Atom:
    """poly REL 0 after folding the right-hand side."""

    poly: MPoly
    relation: str

    def __post_init__(self):
        if self.relation not in RELATIONS:
            raise ValueError(f"unknown relation {self.relation!r}")

    def holds(self, value) -> bool:
        if self.relation == "<":
            return value < 0
        if self.relation == "<=":
            return value <= 0
        if self.relation == "=":
            return value == 0
        if self.relation == ">=":
            return value >= 0
        return value > 0


@dataclass(frozen=True)
class BoolNode:
    """'and'/'or' over atoms and sub-nodes."""

    op: str
    children: tuple

    def __post_init__(self):
        if self.op not in ("and", "or"):
            raise ValueError(f"unknown boolean operator {self.op!r}")


@dataclass(frozen=True)
class SemialgebraicSet:
    nvars: int
    tree: object  # Atom | BoolNode

    def _eval(self, node, values: dict) -> bool:
        if isinstance(node, Atom):
            return node.holds(values[id(node.poly)])
        results = (self._eval(c, values) for c in node.children)
        return all(results) if node.op == "and" else any(results)

    def atoms(self):
        out = []

        def walk(node):
            if isinstance(node, Atom):
                out.append(node)
            else:
                for c in node.children:
                    walk(c)

        walk(self.tree)
        return out

    def contains_float(self, point) -> bool:
        values = {id(a.poly): a.poly.eval_float(point) for a in self.atoms()}
        return self._eval(self.tree, values)

    def contains_exact(self, point) -> bool:
        values = {id(a.poly): a.poly.eval_exact(point) for a in self.atoms()}
        return self._eval(self.tree, values)

    def to_text(self) -> str:
        names = default_names(self.nvars)

        def walk(node, parent_op=None):
            if isinstance(node, Atom):
                return f"{format_poly(node.poly, names)} {node.relation} 0"
            joined = f" {node.op} ".join(walk(c, node.op) for c in node.children)
            if parent_op is not None and parent_op != node.op:
                return f"({joined})"
            return joined

        return walk(self.tree)


# ----------------------------------------------------------------------
# Shears


def shear_range(f: RegularMap, coefficients) -> RegularMap:
    """Compose an invertible linear map after f.

    ``(y1, ..., ym) -> (y1, y2 + b2*y1, ..., ym + bm*y1)``: component j
    becomes ``fj + bj*f1``; the denominator is untouched.  Coefficients
    are given for components 2..m.
    """
    coefficients = [Fraction(b) for b in coefficients]
    if len(coefficients) != f.m - 1:
        raise ArityError(f"need {f.m - 1} range shear coefficients")
    first = f.components[0]
    new = [first]
    for b, comp in zip(coefficients, f.components[1:]):
        new.append(comp + first * b if b else comp)
    return RegularMap(f.f0, tuple(new), reduced=f.reduced, warnings=f.warnings)


def shear_domain(f: RegularMap, coefficients) -> RegularMap:
    """Precompose with ``(x1, ..., xn) -> (x1, x2 + a2*x1, ..., xn + an*x1)``.

    Substitutes inside every numerator and the denominator; invertible, so
    the image of the map is unchanged.
    """
    coefficients = [Fraction(a) for a in coefficients]
    if len(coefficients) != f.n - 1:
        raise ArityError(f"need {f.n - 1} domain shear coefficients")
    if all(a == 0 for a in coefficients):
        return f
    n = f.n
    x1 = MPoly.variable(n, 0)
    substitution = {}
    for i, a in enumerate(coefficients, start=1):
        if a:
            substitution[i] = MPoly.variable(n, i) + x1 * a
    new = [p.substitute(substitution) for p in f.numerator_tuple()]
    return RegularMap(new[0], tuple(new[1:]), reduced=f.reduced, warnings=f.warnings)


def permute_range(f: RegularMap, order) -> RegularMap:
    """Reorder the components (an invertible linear change of the range)."""
    order = tuple(order)
    if sorted(order) != list(range(f.m)):
        raise ArityError("order must be a permutation of the components")
    return RegularMap(f.f0, tuple(f.components[i] for i in order),
                      reduced=f.reduced, warnings=f.warnings)


@dataclass(frozen=True)
class ShearPlan:
    """Deterministic normalization making the degree preconditions hold.

    Application order: permute the range so a maximal-degree component
    comes first, shear the range so every component reaches the common
    degree d > deg f0, then shear the domain so deg = deg_{x1} for every
    numerator and the denominator.
    """

    range_order: tuple
    range_coefficients: tuple
    domain_coefficients: tuple

    def is_identity(self) -> bool:
        return (list(self.range_order) == sorted(self.range_order)
                and all(b == 0 for b in self.range_coefficients)
                and all(a == 0 for a in self.domain_coefficients))

    def apply(self, f: RegularMap) -> RegularMap:
        g = permute_range(f, self.range_order)
        g = shear_range(g, self.range_coefficients)
        return shear_domain(g, self.domain_coefficients)

    def to_json(self):
        return {
            "range_order": [i + 1 for i in self.range_order],
            "range_coefficients": [str(b) for b in self.range_coefficients],
            "domain_coefficients": [str(a) for a in self.domain_coefficients],
        }


def find_normalizing_shear(f: RegularMap, max_tries: int = 256) -> ShearPlan:
    """Search the deterministic coefficient sequence for a working shear.

    Range side: move a maximal-degree component first, then for each later
    component take the smallest b in 0, 1, 2, ... with
    ``deg(fj + b*f1) = d``.  Domain side: try k = 0, 1, 2, ... with
    ``a_i = k^(i-1)`` until every numerator and the denominator have their
    total degree realized in x1.  Termination is guaranteed because each
    failure condition is a nonzero polynomial constraint evaluated along a
    rational normal curve.
    """
    degrees = [c.total_degree() for c in f.components]
    if all(d is NEG_INF for d in degrees):
        raise PreconditionError("nonzero-map", "all components are zero")
    dmax = max(degrees)
    lead = degrees.index(dmax)
    order = (lead,) + tuple(i for i in range(f.m) if i != lead)
    g = permute_range(f, order)

    first = g.components[0]
    bs = []
    for comp in g.components[1:]:
        for b in range(max_tries):
            if (comp + first * b).total_degree() == dmax:
                bs.append(Fraction(b))
                break
        else:
            raise PreconditionError("range-shear", "no coefficient found")
    g = shear_range(g, bs)

    polys = g.numerator_tuple()
    for k in range(max_tries):
        coeffs = [Fraction(k) ** (i - 1) for i in range(2, f.n + 1)]
        candidate = shear_domain(g, coeffs)
        if all(p.total_degree() == p.degree_in(0) for p in candidate.numerator_tuple()):
            return ShearPlan(order, tuple(bs), tuple(coeffs))
    raise PreconditionError("domain-shear", "no coefficient tuple found")


# ----------------------------------------------------------------------
# Composition of maps


def compose_maps(outer: RegularMap, inner: RegularMap) -> RegularMap:
    """Exact composition outer o inner as a single regular map.

    Clears denominators by plugging the homogenized outer numerators with
    the tuple ``(inner_f0, inner_f1, ...)``; the result is not reduced.
    The caller is responsible for the composition being defined on all of
    R^n (the inner image must avoid the outer pole locus).
    """
    if inner.m != outer.n:
        raise ArityError("inner range dimension must match outer domain dimension")
    degs = [p.total_degree() for p in outer.numerator_tuple() if not p.is_zero()]
    d = max(degs)
    arguments = list(inner.numerator_tuple())
    homogenized = [homogenize(p, d) for p in outer.numerator_tuple()]
    composed = [H.compose(arguments) for H in homogenized]
    if composed[0].is_zero():
        raise ZeroDivisionError("composed denominator is identically zero")
    return RegularMap(composed[0], tuple(composed[1:]), reduced=False,
                      warnings=outer.warnings + inner.warnings)
