"""Homogenization of regular maps and the quasi-polynomial decision.

A reduced map ``(f1/f0, ..., fm/f0)`` homogenizes to the tuple
``(F0 : F1 : ... : Fm)`` of degree ``d = max deg f_i``; writing
``F0 = x0^e * F0'`` with x0 not dividing F0' isolates the denominator
data ``(e, F0')``.  The map is *quasi-polynomial* when

* the infinity hyperplane maps into the infinity hyperplane, which is
  equivalent to ``e > 0``, and
* no real indeterminacy point lies on the denominator zero locus
  ``{F0' = 0}``; for a reduced map that locus intersected with the
  indeterminacy set is exactly the real projective common zero set of
  ``{F0', F1, ..., Fm}``.

For a one-dimensional domain the degree condition alone decides.  The
real-emptiness test is exact for domains of dimension <= 2 (chart
decomposition of RP^1 / RP^2, resultant elimination, Sturm isolation,
exact back-substitution); beyond that a randomized numeric falsifier can
produce witnesses but never certify emptiness, so the verdict becomes
three-valued with ``UNKNOWN`` an honest answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ArityError, PreconditionError
from .maps import RegularMap
from .polyring import (
    MPoly,
    divexact,
    format_poly,
    homogenize,
    mpoly_gcd,
    mpoly_gcd_list,
    resultant_wrt,
    squarefree_part,
    x0_valuation,
)
from .projective import ProjPoint
from . import realroots

EMPTY = "Empty"
NONEMPTY = "NonEmpty"
UNKNOWN = "Unknown"

QUASI_POLYNOMIAL = "QuasiPolynomial"
NOT_QUASI_POLYNOMIAL = "NotQuasiPolynomial"
VERDICT_UNKNOWN = "Unknown"

REASON_DEGREE = "degree_condition_failed"
REASON_INDETERMINACY = "real_indeterminacy_on_denominator_locus"
REASON_UNDECIDED = "emptiness_undecided"

_WITNESS_WIDTH = Fraction(1, 2 ** 40)


@dataclass(frozen=True)
class HomogenizedMap:
    """(d, e, F0', F1..Fm) attached to a reduced regular map."""

    d: int
    e: int
    f0_prime: MPoly
    components: tuple
    n: int
    m: int

    @property
    def f0_hom(self) -> MPoly:
        x0 = MPoly.variable(self.n + 1, 0)
        return x0 ** self.e * self.f0_prime

    def system(self):
        """{F0', F1, ..., Fm}: the polynomials whose common real zeros are
        the real indeterminacy points on the denominator locus."""
        return (self.f0_prime,) + self.components


def homogenize_map(f: RegularMap) -> HomogenizedMap:
    if not f.reduced:
        raise PreconditionError("reduced", "apply gcd reduction before homogenizing")
    if all(c.is_zero() for c in f.components):
        raise ValueError("cannot homogenize the zero map")
    d = max(p.total_degree() for p in f.numerator_tuple() if not p.is_zero())
    d = int(d)
    e, f0_prime = x0_valuation(homogenize(f.f0, d))
    components = tuple(homogenize(c, d) for c in f.components)
    return HomogenizedMap(d=d, e=e, f0_prime=f0_prime, components=components,
                          n=f.n, m=f.m)


def degree_condition(h: HomogenizedMap) -> bool:
    """True iff the infinity hyperplane maps into the infinity hyperplane
    (max numerator degree exceeds the denominator degree)."""
    return h.e > 0


def is_positive_definite_even_sum(form: MPoly) -> bool:
    """Syntactic positivity: sums of even-exponent terms with coefficients
    of one sign, containing a pure even power of every variable.

    Sound but incomplete (products in expanded form often qualify; general
    positive forms do not).  A nonzero constant qualifies trivially.
    """
    if form.is_zero():
        return False
    if form.is_constant():
        return True
    coeffs = list(form.terms.values())
    sign = 1 if coeffs[0] > 0 else -1
    pure = set()
    for exps, coeff in form.terms.items():
        if coeff * sign <= 0:
            return False
        if any(e % 2 for e in exps):
            return False
        support = [i for i, e in enumerate(exps) if e]
        if len(support) == 1:
            pure.add(support[0])
    return pure == set(range(form.nvars))


# ----------------------------------------------------------------------
# Witnesses and solver results


@dataclass(frozen=True)
class ZeroWitness:
    """A certified (or sign-condition supported) common real zero.

    ``point`` is set for rational witnesses.  Algebraic/interval witnesses
    describe one projective cell: coordinates before ``chart`` are 0, the
    chart coordinate is 1, and ``box`` lists the remaining coordinates as
    exact rationals or isolating intervals.
    """

    chart: int
    exact: bool
    point: ProjPoint = None
    box: tuple = ()
    detail: str = ""

    def to_json(self) -> dict:
        out = {"chart": self.chart, "exact": self.exact, "detail": self.detail}
        if self.point is not None:
            out["point"] = self.point.to_json()
        if self.box:
            out["box"] = [
                str(entry) if isinstance(entry, Fraction)
                else [str(entry[0]), str(entry[1])]
                for entry in self.box
            ]
        return out


@dataclass(frozen=True)
class SolveResult:
    status: str
    witnesses: tuple = ()
    evidence: dict = None

    def to_json(self) -> dict:
        out = {"status": self.status,
               "witnesses": [w.to_json() for w in self.witnesses]}
        if self.evidence:
            out["evidence"] = self.evidence
        return out


def _cell_point(nvars: int, chart: int, tail):
    coords = [Fraction(0)] * nvars
    coords[chart] = Fraction(1)
    for i, v in enumerate(tail):
        coords[chart + 1 + i] = v
    return ProjPoint.from_raw(coords)


# ----------------------------------------------------------------------
# Exact solver: chart decomposition down to points


def real_projective_common_zeros(polys, mode: str = "exact",
                                 numeric_options: dict = None) -> SolveResult:
    """Real common zeros of homogeneous polynomials in RP^(nvars-1).

    Exact mode supports at most 3 variables (projective line and plane).
    Numeric mode never certifies emptiness: it returns ``NonEmpty`` with a
    witness (refined to exact when possible) or ``Unknown``.
    """
    polys = list(polys)
    if not polys:
        raise ValueError("empty polynomial system")
    nvars = polys[0].nvars
    for p in polys:
        if p.nvars != nvars:
            raise ArityError("system polynomials live in different rings")
        if not p.is_homogeneous():
            raise ValueError("system polynomials must be homogeneous")
    if mode == "exact":
        if nvars > 3:
            raise ValueError(
                "exact emptiness decision is limited to domains of dimension <= 2")
        return _solve_projective_exact(polys)
    if mode == "numeric":
        return _numeric_common_zeros(polys, **(numeric_options or {}))
    raise ValueError(f"unknown mode {mode!r}")


def _solve_projective_exact(polys) -> SolveResult:
    nvars = polys[0].nvars
    witnesses = []
    unknown_evidence = []
    for chart in range(nvars):
        cell = []
        for p in polys:
            q = p
            for _ in range(chart):
                q = q.specialize(0, 0)
            q = q.specialize(0, 1)
            cell.append(q)
        outcome = _solve_affine(cell, nvars, chart, depth=0)
        if outcome.status == NONEMPTY:
            witnesses.extend(outcome.witnesses)
        elif outcome.status == UNKNOWN:
            unknown_evidence.append({"chart": chart, **(outcome.evidence or {})})
    if witnesses:
        return SolveResult(NONEMPTY, tuple(witnesses))
    if unknown_evidence:
        return SolveResult(UNKNOWN, (), {"cells": unknown_evidence})
    return SolveResult(EMPTY)


def _solve_affine(cell, nvars: int, chart: int, depth: int = 0) -> SolveResult:
    """Common real zeros of arbitrary polynomials in 0, 1, or 2 variables."""
    live = [p for p in cell if not p.is_zero()]
    if not live:
        return SolveResult(NONEMPTY, (_make_witness_all_zero(nvars, chart, cell),))
    if any(p.is_constant() for p in live):
        return SolveResult(EMPTY)
    dim = live[0].nvars
    if dim == 1:
        return _solve_affine_1d(live, nvars, chart)
    if dim == 2:
        return _solve_affine_2d(live, nvars, chart, depth)
    raise ValueError(f"unexpected affine dimension {dim}")


def _make_witness_all_zero(nvars, chart, cell):
    free = nvars - chart - 1
    point = _cell_point(nvars, chart, [Fraction(0)] * free)
    return ZeroWitness(chart=chart, exact=True, point=point,
                       detail="every system polynomial vanishes on the whole cell")


def _coeff_list(p: MPoly):
    deg = int(p.total_degree())
    out = [Fraction(0)] * (deg + 1)
    for exps, coeff in p.terms.items():
        out[exps[0]] = coeff
    return out


def _solve_affine_1d(live, nvars, chart) -> SolveResult:
    g = mpoly_gcd_list(live)
    if g.is_constant():
        return SolveResult(EMPTY)
    roots = realroots.isolate_real_roots(_coeff_list(g))
    if not roots:
        return SolveResult(EMPTY)
    witnesses = []
    for root in roots:
        if root[0] == "rational":
            point = _cell_point(nvars, chart, [root[1]])
            witnesses.append(ZeroWitness(
                chart=chart, exact=True, point=point,
                detail="rational root of the gcd of the cell system"))
        else:
            witnesses.append(ZeroWitness(
                chart=chart, exact=True, box=((root[1], root[2]),),
                detail="algebraic root of the gcd of the cell system;"
                       " every system polynomial is a multiple of the gcd"))
    # prefer rational witnesses in the report
    witnesses.sort(key=lambda w: w.point is None)
    return SolveResult(NONEMPTY, tuple(witnesses))


# -- bivariate machinery ------------------------------------------------

_SCAN_VALUES = tuple(Fraction(v) for v in
                     (0, 1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2), 3, -3))


def _solve_affine_2d(live, nvars, chart, depth: int = 0) -> SolveResult:
    if depth > 3:
        return SolveResult(UNKNOWN, (), {"reason": "degeneracy retries exhausted"})
    ps = []
    for p in live:
        q = squarefree_part(p)
        if q not in ps:
            ps.append(q)
    g = mpoly_gcd_list(ps)
    if not g.is_constant():
        curve = _real_point_on_curve(g, nvars, chart, depth + 1)
        if curve.status == NONEMPTY:
            return curve
        cof = [divexact(p, g) for p in ps]
        rest = _solve_affine(cof, nvars, chart, depth + 1)
        if rest.status == NONEMPTY:
            return rest
        if curve.status == EMPTY and rest.status == EMPTY:
            return SolveResult(EMPTY)
        return SolveResult(UNKNOWN, (), {"reason": "positive-dimensional gcd"})
    return _solve_zero_dim_2d(ps, nvars, chart, depth)


def _real_point_on_curve(g: MPoly, nvars, chart, depth: int = 0) -> SolveResult:
    """Does the plane curve {g = 0} have a real point?  Exact both ways.

    Scan a few rational lines first; then use the fact that a nonempty
    closed real curve attains its distance to the origin, so the critical
    system {g, x*dg/dy - y*dg/dx} has a real solution iff the curve is
    nonempty.  A vanishing critical polynomial means rotational symmetry
    and reduces to a line scan.
    """
    for value in _SCAN_VALUES:
        for axis in (0, 1):
            restricted = g.specialize(axis, value)
            if restricted.is_zero():
                tail = [value, Fraction(0)] if axis == 0 else [Fraction(0), value]
                return SolveResult(NONEMPTY, (ZeroWitness(
                    chart=chart, exact=True,
                    point=_cell_point(nvars, chart, tail),
                    detail="system gcd vanishes on a rational line"),))
            if restricted.is_constant():
                continue
            roots = realroots.isolate_real_roots(_coeff_list(restricted))
            for root in roots:
                if root[0] != "rational":
                    continue
                tail = [value, root[1]] if axis == 0 else [root[1], value]
                return SolveResult(NONEMPTY, (ZeroWitness(
                    chart=chart, exact=True,
                    point=_cell_point(nvars, chart, tail),
                    detail="rational point on the zero curve of the system gcd"),))
            if roots:
                entry = roots[0]
                box = ((value, value), (entry[1], entry[2])) if axis == 0 \
                    else ((entry[1], entry[2]), (value, value))
                return SolveResult(NONEMPTY, (ZeroWitness(
                    chart=chart, exact=True, box=box,
                    detail="algebraic point on the zero curve of the system gcd"
                           " (rational line section)"),))
    x = MPoly.variable(2, 0)
    y = MPoly.variable(2, 1)
    angular = x * g.partial(1) - y * g.partial(0)
    if angular.is_zero():
        # level sets are rotation invariant, so the curve is nonempty iff
        # it meets the x-axis; the axis section was already scanned above
        # and found no real roots
        return SolveResult(EMPTY)
    return _solve_zero_dim_2d([g, squarefree_part(angular)], nvars, chart,
                              depth + 1, verify=[g])


def _solve_zero_dim_2d(ps, nvars, chart, depth, verify=None) -> SolveResult:
    """Resultant elimination for an (expected) zero-dimensional system.

    ``verify`` optionally restricts which polynomials a witness must
    satisfy (used by the curve-point search where the critical equation is
    auxiliary); by default every system polynomial counts.
    """
    if depth > 3:
        return SolveResult(UNKNOWN, (), {"reason": "resultant degeneracy retries exhausted"})
    checks = ps if verify is None else verify
    if len(ps) == 1:
        return _real_point_on_curve(ps[0], nvars, chart)
    ranked = sorted(ps, key=lambda p: (len(p.terms), int(p.total_degree())))
    p, q = ranked[0], ranked[1]
    res = resultant_wrt(p, q, 1)
    if res.is_zero():
        w = mpoly_gcd(p, q)
        rest = [r for r in ps if r is not p and r is not q]
        outcome_a = _solve_affine([w] + rest, nvars, chart, depth + 1)
        if outcome_a.status == NONEMPTY:
            return outcome_a
        outcome_b = _solve_affine([divexact(p, w), divexact(q, w)] + rest,
                                  nvars, chart, depth + 1)
        if outcome_b.status == NONEMPTY:
            return outcome_b
        if EMPTY == outcome_a.status == outcome_b.status:
            return SolveResult(EMPTY)
        return SolveResult(UNKNOWN, (), {"reason": "degenerate resultant split"})

    res_coeffs = _coeff_list(MPoly(1, {(e[0],): c for e, c in res.terms.items()}))
    candidates = realroots.isolate_real_roots(res_coeffs)
    if not candidates:
        return SolveResult(EMPTY)
    witnesses = []
    undecided = []
    for cand in candidates:
        if cand[0] == "rational":
            outcome = _lift_rational_abscissa(cand[1], ps, checks, nvars, chart)
            if outcome is not None:
                witnesses.append(outcome)
        else:
            status, witness = _lift_interval_abscissa(
                cand[1], cand[2], res_coeffs, p, q, checks, nvars, chart)
            if status == NONEMPTY:
                witnesses.append(witness)
            elif status == UNKNOWN:
                undecided.append([str(cand[1]), str(cand[2])])
    if witnesses:
        witnesses.sort(key=lambda w: (w.point is None, not w.exact))
        return SolveResult(NONEMPTY, tuple(witnesses))
    if undecided:
        return SolveResult(UNKNOWN, (), {"undecided_abscissae": undecided})
    return SolveResult(EMPTY)


def _lift_rational_abscissa(a0, ps, checks, nvars, chart):
    lines = [p.specialize(0, a0) for p in checks]
    live = [p for p in lines if not p.is_zero()]
    if not live:
        return ZeroWitness(chart=chart, exact=True,
                           point=_cell_point(nvars, chart, [a0, Fraction(0)]),
                           detail="system vanishes on a whole vertical line")
    if any(p.is_constant() for p in live):
        return None
    g = mpoly_gcd_list(live)
    if g.is_constant():
        return None
    roots = realroots.isolate_real_roots(_coeff_list(g))
    if not roots:
        return None
    for root in roots:
        if root[0] == "rational":
            return ZeroWitness(
                chart=chart, exact=True,
                point=_cell_point(nvars, chart, [a0, root[1]]),
                detail="rational witness by exact back-substitution")
    entry = roots[0]
    return ZeroWitness(
        chart=chart, exact=True,
        box=((a0, a0), (entry[1], entry[2])),
        detail="algebraic ordinate: every restricted polynomial is a"
               " multiple of the certified gcd")


def _interval_eval(poly: MPoly, box):
    lo_acc, hi_acc = Fraction(0), Fraction(0)
    for exps, coeff in poly.terms.items():
        lo, hi = Fraction(1), Fraction(1)
        for (blo, bhi), e in zip(box, exps):
            for _ in range(e):
                products = (lo * blo, lo * bhi, hi * blo, hi * bhi)
                lo, hi = min(products), max(products)
        if coeff >= 0:
            lo_acc += coeff * lo
            hi_acc += coeff * hi
        else:
            lo_acc += coeff * hi
            hi_acc += coeff * lo
    return lo_acc, hi_acc


def _corner_sign_change(poly: MPoly, box) -> bool:
    signs = set()
    for a in box[0]:
        for b in box[1]:
            v = poly.eval_exact((a, b))
            signs.add(0 if v == 0 else (1 if v > 0 else -1))
    return 0 in signs or {1, -1} <= signs


def _lift_interval_abscissa(lo, hi, res_coeffs, p, q, checks, nvars, chart):
    """Candidate common zero above an irrational abscissa.

    The abscissa is a certified root of the eliminant; ordinates must be
    real roots of the opposite-direction eliminant.  Remaining equations
    are screened by exact interval arithmetic: an interval excluding zero
    refutes the candidate; full containment plus corner sign changes of
    the eliminating pair is reported as a sign-condition witness.
    """
    other = resultant_wrt(p, q, 0)
    if other.is_zero():
        return UNKNOWN, None
    ord_coeffs = _coeff_list(MPoly(1, {(e[1],): c for e, c in other.terms.items()}))
    ordinates = realroots.isolate_real_roots(ord_coeffs)
    if not ordinates:
        return EMPTY, None
    lo, hi = realroots.refine_to_width(res_coeffs, lo, hi, _WITNESS_WIDTH)
    undecided = False
    for entry in ordinates:
        if entry[0] == "rational":
            jlo = jhi = entry[1]
        else:
            jlo, jhi = realroots.refine_to_width(ord_coeffs, entry[1], entry[2],
                                                 _WITNESS_WIDTH)
        box = ((lo, hi), (jlo, jhi))
        intervals = [_interval_eval(c, box) for c in checks]
        if any(vlo > 0 or vhi < 0 for vlo, vhi in intervals):
            continue
        if _corner_sign_change(p, box) and _corner_sign_change(q, box):
            witness = ZeroWitness(
                chart=chart, exact=False, box=box,
                detail="interval witness: Sturm-certified eliminant roots,"
                       " remaining equations verified by sign conditions")
            return NONEMPTY, witness
        undecided = True
    return (UNKNOWN, None) if undecided else (EMPTY, None)


# ----------------------------------------------------------------------
# Numeric falsifier


def _compile_system(polys):
    tables = []
    for p in polys:
        exps = np.array(sorted(p.terms), dtype=np.int64)
        coeffs = np.array([float(p.terms[tuple(e)]) for e in exps], dtype=float)
        tables.append((exps, coeffs))
    return tables


def _system_values(tables, x):
    vals = []
    for exps, coeffs in tables:
        monos = np.prod(np.power(x[None, :], exps), axis=1)
        vals.append(float(coeffs @ monos))
    return np.array(vals)


def _system_jacobian(tables, x, nvars):
    rows = []
    for exps, coeffs in tables:
        row = np.zeros(nvars)
        for j in range(nvars):
            mask = exps[:, j] > 0
            if not mask.any():
                continue
            de = exps[mask].copy()
            dc = coeffs[mask] * de[:, j]
            de[:, j] -= 1
            row[j] = dc @ np.prod(np.power(x[None, :], de), axis=1)
        rows.append(row)
    return np.vstack(rows)


def _numeric_common_zeros(polys, starts: int = 512, iterations: int = 100,
                          tolerance: float = 1e-12, seed: int = 0) -> SolveResult:
    nvars = polys[0].nvars
    tables = _compile_system(polys)
    rng = np.random.default_rng(seed)
    raw = rng.standard_normal((starts, nvars))
    best = (np.inf, -1, None)
    for idx in range(starts):
        x = raw[idx]
        x = x / np.linalg.norm(x)
        for _ in range(iterations):
            values = _system_values(tables, x)
            residual = float(np.linalg.norm(values))
            if residual < tolerance * 1e-3:
                break
            jac = _system_jacobian(tables, x, nvars)
            step, *_ = np.linalg.lstsq(jac, -values, rcond=None)
            norm = np.linalg.norm(step)
            if not np.isfinite(norm) or norm == 0:
                break
            if norm > 0.5:
                step = step * (0.5 / norm)
            x = x + step
            x = x / np.linalg.norm(x)
        residual = float(np.linalg.norm(_system_values(tables, x)))
        if residual < best[0]:
            best = (residual, idx, x.copy())
    residual, idx, x = best
    evidence = {"best_residual": residual, "starts": starts,
                "iterations": iterations, "seed": seed}
    if x is None or residual >= tolerance:
        return SolveResult(UNKNOWN, (), evidence)
    exact = _refine_to_exact(polys, x)
    if exact is not None:
        witness = ZeroWitness(chart=_chart_of(exact), exact=True, point=exact,
                              detail="numeric witness refined to an exact rational point")
        return SolveResult(NONEMPTY, (witness,), evidence)
    witness = ZeroWitness(chart=int(np.argmax(np.abs(x))), exact=False,
                          box=(), detail=f"float witness {x.tolist()} with residual {residual:.3e}")
    return SolveResult(NONEMPTY, (witness,), evidence)


def _chart_of(point: ProjPoint) -> int:
    for i, c in enumerate(point.coords):
        if c != 0:
            return i
    return 0


def _refine_to_exact(polys, x):
    # coarse denominators first: sloppy coordinates of flat systems snap
    # to clean rationals that then verify exactly or not at all
    pivot = int(np.argmax(np.abs(x)))
    scaled = x / x[pivot]
    for max_denominator in (1, 8, 64, 2 ** 10, 2 ** 20):
        coords = [Fraction(float(v)).limit_denominator(max_denominator)
                  for v in scaled]
        if all(c == 0 for c in coords):
            continue
        point = ProjPoint.from_raw(coords)
        if all(p.eval_exact(point.coords) == 0 for p in polys):
            return point
    return None


# ----------------------------------------------------------------------
# The verdict


@dataclass(frozen=True)
class QPVerdict:
    """Three-valued quasi-polynomiality verdict with its certificate."""

    status: str
    reason: str = None
    witness: ZeroWitness = None
    certificate: dict = None
    d: int = None
    e: int = None
    f0_prime: MPoly = None

    def to_json(self) -> dict:
        out = {"status": self.status, "d": self.d, "e": self.e}
        if self.reason:
            out["reason"] = self.reason
        if self.f0_prime is not None:
            out["F0prime"] = format_poly(
                self.f0_prime,
                names=[f"x{i}" for i in range(self.f0_prime.nvars)])
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        if self.certificate:
            out["certificate"] = self.certificate
        return out


def classify(f: RegularMap, mode: str = "auto", use_shortcut: bool = True,
             numeric_options: dict = None) -> QPVerdict:
    """Decide quasi-polynomiality of a reduced regular map.

    Pipeline: degree condition first; dimension-one domains are decided by
    it alone; then a syntactic positivity shortcut on F0'; finally the
    real-emptiness test of {F0', F1, ..., Fm} (exact for n <= 2, numeric
    evidence otherwise).  ``mode`` forces "exact" or "numeric"; "auto"
    picks exact when available.
    """
    if not f.reduced:
        raise PreconditionError("reduced", "classify requires a gcd-reduced map")
    h = homogenize_map(f)
    base = {"d": h.d, "e": h.e, "f0_prime": h.f0_prime}
    if not degree_condition(h):
        return QPVerdict(NOT_QUASI_POLYNOMIAL, reason=REASON_DEGREE,
                         certificate={"kind": "degree-condition",
                                      "note": "infinity hyperplane is not"
                                              " mapped into itself"},
                         **base)
    if f.n == 1:
        return QPVerdict(QUASI_POLYNOMIAL,
                         certificate={"kind": "dimension-one",
                                      "note": "for a one-dimensional domain the"
                                              " degree condition is equivalent"},
                         **base)
    if use_shortcut and is_positive_definite_even_sum(h.f0_prime):
        return QPVerdict(QUASI_POLYNOMIAL,
                         certificate={"kind": "positivity-pattern",
                                      "note": "denominator form has an empty real"
                                              " projective zero set"},
                         **base)
    if mode == "exact" and f.n > 2:
        raise ValueError("exact mode supports domains of dimension <= 2")
    chosen = mode
    if mode == "auto":
        chosen = "exact" if f.n <= 2 else "numeric"
    result = real_projective_common_zeros(h.system(), mode=chosen,
                                          numeric_options=numeric_options)
    if result.status == EMPTY:
        return QPVerdict(QUASI_POLYNOMIAL,
                         certificate={"kind": "empty-indeterminacy",
                                      "mode": chosen},
                         **base)
    if result.status == NONEMPTY:
        witness = result.witnesses[0]
        if chosen == "numeric" and not witness.exact:
            # an unrefined float witness never certifies
            return QPVerdict(VERDICT_UNKNOWN, reason=REASON_UNDECIDED,
                             witness=witness,
                             certificate={"kind": "numeric-evidence",
                                          **(result.evidence or {})},
                             **base)
        return QPVerdict(NOT_QUASI_POLYNOMIAL, reason=REASON_INDETERMINACY,
                         witness=witness,
                         certificate={"kind": "witness", "mode": chosen,
                                      "count": len(result.witnesses)},
                         **base)
    return QPVerdict(VERDICT_UNKNOWN, reason=REASON_UNDECIDED,
                     certificate={"kind": "undecided", "mode": chosen,
                                  **(result.evidence or {})},
                     **base)
