"""Exact sparse polynomial arithmetic over the rationals.

Two carrier types live here:

* ``MPoly`` -- a multivariate polynomial with ``Fraction`` coefficients,
  stored sparsely as ``{exponent tuple: coefficient}``.  This is the value
  type for every map component and every homogeneous form in the package.
* ``LaurentPoly`` -- a univariate Laurent polynomial in the path parameter
  ``t`` (integer exponents, possibly negative).

On top of the ring operations the module provides homogenization,
``x0``-valuation, multivariate gcd (primitive-part/content recursion with
univariate Euclid at the base -- fine at desk scale, exponential in the
worst case), exact division, squarefree parts, resultants by fraction-free
Gaussian elimination of the Sylvester matrix, and composition of a
polynomial with a tuple of Laurent paths.

All arithmetic is exact; no floats enter this module except through the
explicit ``*_float`` evaluation helpers.

The global term order is graded lexicographic (total degree first, then
lexicographic with earlier variables larger); it is used for canonical
printing and for normalizing leading coefficients, nothing else.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .errors import ArityError

# Degree of the zero polynomial.  A genuine -inf keeps comparisons like
# ``d >= f.total_degree()`` honest without a magic integer.
NEG_INF = float("-inf")
POS_INF = float("inf")

#: Rational scalar type used everywhere (normalized, positive denominator).
Rat = Fraction


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def grlex_key(exps):
    """Sort key realizing the graded lexicographic order."""
    return (sum(exps), exps)


class MPoly:
    """Sparse multivariate polynomial over Q.

    ``terms`` maps exponent tuples (length ``nvars``, nonnegative ints) to
    nonzero ``Fraction`` coefficients.  Instances are immutable by
    convention: no method mutates ``terms`` after construction.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != nvars:
                    raise ArityError(
                        f"exponent tuple {exps} does not match nvars={nvars}")
                if any(e < 0 for e in exps):
                    raise ValueError(f"negative exponent in {exps}")
                coeff = _as_fraction(coeff)
                if coeff != 0:
                    clean[exps] = clean.get(exps, Fraction(0)) + coeff
                    if clean[exps] == 0:
                        del clean[exps]
        self.nvars = nvars
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "MPoly":
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, value) -> "MPoly":
        value = _as_fraction(value)
        if value == 0:
            return cls.zero(nvars)
        return cls(nvars, {tuple([0] * nvars): value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MPoly":
        if not 0 <= index < nvars:
            raise ArityError(f"variable index {index} out of range for nvars={nvars}")
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, nvars: int, exps, coeff=1) -> "MPoly":
        return cls(nvars, {tuple(exps): _as_fraction(coeff)})

    # -- basic predicates ---------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- ring operations ----------------------------------------------

    def _check_same_ring(self, other: "MPoly"):
        if self.nvars != other.nvars:
            raise ArityError(
                f"nvars mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(self.nvars, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check_same_ring(other)
        res = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = res.get(exps, Fraction(0)) + coeff
            if acc == 0:
                res.pop(exps, None)
            else:
                res[exps] = acc
        out = MPoly.__new__(MPoly)
        out.nvars = self.nvars
        out.terms = res
        return out

    __radd__ = __add__

    def __neg__(self):
        out = MPoly.__new__(MPoly)
        out.nvars = self.nvars
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(self.nvars, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _as_fraction(other)
            if other == 0:
                return MPoly.zero(self.nvars)
            out = MPoly.__new__(MPoly)
            out.nvars = self.nvars
            out.terms = {e: c * other for e, c in self.terms.items()}
            return out
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check_same_ring(other)
        res: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                acc = res.get(exps, Fraction(0)) + c1 * c2
                if acc == 0:
                    res.pop(exps, None)
                else:
                    res[exps] = acc
        out = MPoly.__new__(MPoly)
        out.nvars = self.nvars
        out.terms = res
        return out

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MPoly.constant(self.nvars, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- degrees and leading data --------------------------------------

    def total_degree(self):
        """Maximal term degree; NEG_INF for the zero polynomial."""
        if not self.terms:
            return NEG_INF
        return max(sum(e) for e in self.terms)

    def degree_in(self, index: int):
        """Maximal exponent of one variable; NEG_INF for zero."""
        if not 0 <= index < self.nvars:
            raise ArityError(f"variable index {index} out of range")
        if not self.terms:
            return NEG_INF
        return max(e[index] for e in self.terms)

    def lead_term(self):
        """(exponents, coefficient) of the graded-lex leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms, key=grlex_key)
        return exps, self.terms[exps]

    def coefficient(self, exps) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    # -- evaluation and substitution -----------------------------------

    def eval_exact(self, point) -> Fraction:
        point = [_as_fraction(v) for v in point]
        if len(point) != self.nvars:
            raise ArityError("point length does not match nvars")
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            value = coeff
            for v, e in zip(point, exps):
                if e:
                    value *= v ** e
            total += value
        return total

    def eval_float(self, point) -> float:
        total = 0.0
        for exps, coeff in self.terms.items():
            value = float(coeff)
            for v, e in zip(point, exps):
                if e:
                    value *= float(v) ** e
            total += value
        return total

    def substitute(self, replacements: dict) -> "MPoly":
        """Substitute ``MPoly`` values for variables (by index).

        Unreplaced variables stay themselves; all replacement values must
        share this polynomial's variable count.
        """
        for poly in replacements.values():
            self._check_same_ring(poly)
        cache: dict = {}

        def power(i: int, e: int) -> MPoly:
            base = replacements.get(i)
            if base is None:
                return MPoly.monomial(self.nvars, tuple(
                    e if j == i else 0 for j in range(self.nvars)))
            key = (i, e)
            if key not in cache:
                cache[key] = base ** e
            return cache[key]

        total = MPoly.zero(self.nvars)
        for exps, coeff in self.terms.items():
            term = MPoly.constant(self.nvars, coeff)
            for i, e in enumerate(exps):
                if e:
                    term = term * power(i, e)
            total = total + term
        return total

    def compose(self, arguments) -> "MPoly":
        """Full composition: plug ``arguments[i]`` in for variable ``i``.

        The arguments may live in a different ring; the result inherits
        their variable count.
        """
        arguments = list(arguments)
        if len(arguments) != self.nvars:
            raise ArityError("need one argument per variable")
        if not arguments:
            raise ArityError("composition needs at least one variable")
        target_nvars = arguments[0].nvars
        for a in arguments:
            if a.nvars != target_nvars:
                raise ArityError("composition arguments live in different rings")
        cache: dict = {}

        def power(i: int, e: int) -> MPoly:
            key = (i, e)
            if key not in cache:
                cache[key] = arguments[i] ** e
            return cache[key]

        total = MPoly.zero(target_nvars)
        for exps, coeff in self.terms.items():
            term = MPoly.constant(target_nvars, coeff)
            for i, e in enumerate(exps):
                if e:
                    term = term * power(i, e)
            total = total + term
        return total

    def specialize(self, index: int, value, drop: bool = True) -> "MPoly":
        """Set one variable to a rational constant.

        With ``drop`` the variable is removed from the ring (used by the
        projective chart decomposition); otherwise arity is preserved.
        """
        value = _as_fraction(value)
        new_nvars = self.nvars - 1 if drop else self.nvars
        res: dict = {}
        for exps, coeff in self.terms.items():
            scaled = coeff * value ** exps[index] if exps[index] else coeff
            if scaled == 0:
                continue
            if drop:
                new_exps = exps[:index] + exps[index + 1:]
            else:
                new_exps = exps[:index] + (0,) + exps[index + 1:]
            acc = res.get(new_exps, Fraction(0)) + scaled
            if acc == 0:
                res.pop(new_exps, None)
            else:
                res[new_exps] = acc
        out = MPoly.__new__(MPoly)
        out.nvars = new_nvars
        out.terms = res
        return out

    def insert_variable(self, index: int) -> "MPoly":
        """Reinterpret in a ring with one extra (unused) variable at ``index``."""
        res = {}
        for exps, coeff in self.terms.items():
            res[exps[:index] + (0,) + exps[index:]] = coeff
        out = MPoly.__new__(MPoly)
        out.nvars = self.nvars + 1
        out.terms = res
        return out

    def permute_variables(self, order) -> "MPoly":
        """Relabel variables: new variable ``j`` is old variable ``order[j]``."""
        order = tuple(order)
        if sorted(order) != list(range(self.nvars)):
            raise ArityError("order must be a permutation of the variables")
        res = {}
        for exps, coeff in self.terms.items():
            res[tuple(exps[i] for i in order)] = coeff
        out = MPoly.__new__(MPoly)
        out.nvars = self.nvars
        out.terms = res
        return out

    def partial(self, index: int) -> "MPoly":
        """Partial derivative with respect to one variable."""
        res = {}
        for exps, coeff in self.terms.items():
            e = exps[index]
            if e:
                new = exps[:index] + (e - 1,) + exps[index + 1:]
                res[new] = res.get(new, Fraction(0)) + coeff * e
        return MPoly(self.nvars, res)

    # -- presentation ---------------------------------------------------

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]),
                      reverse=True)

    def __repr__(self):
        return f"MPoly({self.nvars}, {dict(self.sorted_terms())!r})"


# ----------------------------------------------------------------------
# Formatting


def default_names(nvars: int, homogeneous: bool = False):
    """Variable names used for canonical text.

    Affine rings with at most three variables use the aliases x, y, z;
    larger rings use x1..xn.  Homogeneous rings are always x0..xn.
    """
    if homogeneous:
        return tuple(f"x{i}" for i in range(nvars))
    if nvars <= 3:
        return ("x", "y", "z")[:nvars]
    return tuple(f"x{i + 1}" for i in range(nvars))


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _format_monomial(exps, names):
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(poly: MPoly, names=None) -> str:
    """Canonical text: descending graded-lex, explicit ``^``, explicit ``*``."""
    if names is None:
        names = default_names(poly.nvars)
    if poly.is_zero():
        return "0"
    pieces = []
    for exps, coeff in poly.sorted_terms():
        mono = _format_monomial(exps, names)
        mag = abs(coeff)
        if not mono:
            body = format_rational(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_rational(mag)}*{mono}"
        if not pieces:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f" + {body}" if coeff > 0 else f" - {body}")
    return "".join(pieces)


# ----------------------------------------------------------------------
# Homogenization and x0-valuation


def homogenize(poly: MPoly, degree: int) -> MPoly:
    """Homogenize to the given degree by prepending a variable x0.

    Each term ``c*x^a`` becomes ``c*x0^(degree-|a|)*x^a``; the result is
    homogeneous of the requested degree (or zero) and restricting to
    ``x0 = 1`` recovers the input exactly.
    """
    deg = poly.total_degree()
    if deg is not NEG_INF and degree < deg:
        raise ValueError(f"cannot homogenize degree-{deg} polynomial to degree {degree}")
    res = {}
    for exps, coeff in poly.terms.items():
        res[(degree - sum(exps),) + exps] = coeff
    out = MPoly.__new__(MPoly)
    out.nvars = poly.nvars + 1
    out.terms = res
    return out


def dehomogenize(poly: MPoly) -> MPoly:
    """Restrict to the affine chart ``x0 = 1`` (dropping x0)."""
    return poly.specialize(0, 1)


def x0_valuation(poly: MPoly):
    """Factor out the largest power of the first variable.

    Returns ``(e, rest)`` with ``poly == x0^e * rest`` exactly and x0 not
    dividing ``rest``.
    """
    if poly.is_zero():
        raise ValueError("zero polynomial has no x0-valuation")
    e = min(exps[0] for exps in poly.terms)
    if e == 0:
        return 0, poly
    res = {(exps[0] - e,) + exps[1:]: coeff for exps, coeff in poly.terms.items()}
    out = MPoly.__new__(MPoly)
    out.nvars = poly.nvars
    out.terms = res
    return e, out


# ----------------------------------------------------------------------
# Exact division, content, gcd


def try_divexact(num: MPoly, den: MPoly):
    """Exact multivariate division; returns the quotient or None.

    Standard single-divisor division with graded-lex leading terms; a
    nonzero remainder means the division is not exact.
    """
    num._check_same_ring(den)
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return MPoly.zero(num.nvars)
    if den.is_constant():
        inv = 1 / den.constant_value()
        return num * inv
    lead_e, lead_c = den.lead_term()
    quotient = MPoly.zero(num.nvars)
    rest = num
    while not rest.is_zero():
        r_e, r_c = rest.lead_term()
        diff = tuple(a - b for a, b in zip(r_e, lead_e))
        if any(d < 0 for d in diff):
            return None
        piece = MPoly.monomial(num.nvars, diff, r_c / lead_c)
        quotient = quotient + piece
        rest = rest - piece * den
    return quotient


def divexact(num: MPoly, den: MPoly) -> MPoly:
    q = try_divexact(num, den)
    if q is None:
        raise ValueError("division is not exact")
    return q


def normalize_sign_primitive(poly: MPoly) -> MPoly:
    """Scale by a rational so coefficients are coprime integers and the
    graded-lex leading coefficient is positive."""
    if poly.is_zero():
        return poly
    nums = [c.numerator for c in poly.terms.values()]
    dens = [c.denominator for c in poly.terms.values()]
    g = 0
    for v in nums:
        g = int_gcd(g, abs(v))
    lcm = 1
    for v in dens:
        lcm = lcm * v // int_gcd(lcm, v)
    scale = Fraction(lcm, g)
    _, lead_c = poly.lead_term()
    if lead_c < 0:
        scale = -scale
    return poly * scale


def _univar_coeffs(poly: MPoly):
    # dense coefficient list (ascending) of a one-variable MPoly
    deg = poly.total_degree()
    n = 0 if deg is NEG_INF else int(deg)
    coeffs = [Fraction(0)] * (n + 1)
    for exps, coeff in poly.terms.items():
        coeffs[exps[0]] = coeff
    return coeffs


def _univar_from_coeffs(coeffs):
    return MPoly(1, {(i,): c for i, c in enumerate(coeffs) if c != 0})


def _univar_gcd(f: MPoly, g: MPoly) -> MPoly:
    a = _univar_coeffs(f)
    b = _univar_coeffs(g)

    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    def rem(p, q):
        p = p[:]
        dq = len(q) - 1
        inv = 1 / q[-1]
        while len(p) - 1 >= dq and p:
            factor = p[-1] * inv
            shift = len(p) - 1 - dq
            for i, qc in enumerate(q):
                p[shift + i] -= factor * qc
            trim(p)
        return p

    a, b = trim(a), trim(b)
    while b:
        a, b = b, rem(a, b)
    return _univar_from_coeffs(a)


def _main_var_view(poly: MPoly, var: int):
    """Dense list of MPoly coefficients of ``poly`` seen in one variable.

    Coefficients keep the full arity with the main variable zeroed out.
    """
    deg = poly.degree_in(var)
    n = 0 if deg is NEG_INF else int(deg)
    buckets = [dict() for _ in range(n + 1)]
    for exps, coeff in poly.terms.items():
        stripped = exps[:var] + (0,) + exps[var + 1:]
        buckets[exps[var]][stripped] = coeff
    out = []
    for terms in buckets:
        p = MPoly.__new__(MPoly)
        p.nvars = poly.nvars
        p.terms = terms
        out.append(p)
    return out


def _from_main_var_view(coeffs, var: int):
    total = MPoly.zero(coeffs[0].nvars) if coeffs else None
    res: dict = {}
    nvars = coeffs[0].nvars
    for power, coeff_poly in enumerate(coeffs):
        for exps, coeff in coeff_poly.terms.items():
            new = exps[:var] + (power,) + exps[var + 1:]
            res[new] = coeff
    out = MPoly.__new__(MPoly)
    out.nvars = nvars
    out.terms = res
    return out


def mpoly_gcd(f: MPoly, g: MPoly) -> MPoly:
    """Multivariate gcd, normalized integer-primitive with positive
    graded-lex leading coefficient.

    Primitive-part/content recursion over the last active variable with a
    primitive pseudo-remainder sequence; univariate Euclid at the base.
    Can blow up on adversarial dense inputs, which is acceptable at the
    degrees (< ~40) and arities (<= 4) this package handles.
    """
    f._check_same_ring(g)
    if f.is_zero():
        return normalize_sign_primitive(g)
    if g.is_zero():
        return normalize_sign_primitive(f)
    if f.is_constant() or g.is_constant():
        return MPoly.constant(f.nvars, 1)

    active = [i for i in range(f.nvars)
              if f.degree_in(i) not in (NEG_INF, 0) or g.degree_in(i) not in (NEG_INF, 0)]
    if not active:
        return MPoly.constant(f.nvars, 1)
    if len(active) == 1:
        var = active[0]
        fm = MPoly(1, {(e[var],): c for e, c in f.terms.items()})
        gm = MPoly(1, {(e[var],): c for e, c in g.terms.items()})
        h = _univar_gcd(fm, gm)
        lifted = MPoly(f.nvars, {tuple(e[0] if i == var else 0 for i in range(f.nvars)): c
                                 for e, c in h.terms.items()})
        return normalize_sign_primitive(lifted)

    var = active[-1]

    def content_and_pp(p: MPoly):
        view = _main_var_view(p, var)
        content = MPoly.zero(p.nvars)
        for c in view:
            if not c.is_zero():
                content = mpoly_gcd(content, c)
                if content.is_constant():
                    content = MPoly.constant(p.nvars, 1)
                    break
        return content, divexact(p, content)

    cf, pf = content_and_pp(f)
    cg, pg = content_and_pp(g)
    cont = mpoly_gcd(cf, cg)

    # primitive PRS in the main variable
    a, b = pf, pg
    if a.degree_in(var) < b.degree_in(var):
        a, b = b, a
    while True:
        db = b.degree_in(var)
        if db is NEG_INF:
            result = a
            break
        if db == 0:
            result = MPoly.constant(f.nvars, 1)
            break
        r = _pseudo_rem(a, b, var)
        if r.is_zero():
            result = b
            break
        _, r = content_and_pp(r)
        a, b = b, r
    _, result = content_and_pp(result) if not result.is_constant() else (None, result)
    return normalize_sign_primitive(cont * result)


def _pseudo_rem(a: MPoly, b: MPoly, var: int) -> MPoly:
    """Pseudo-remainder of a by b in the chosen variable."""
    da = a.degree_in(var)
    db = b.degree_in(var)
    if da is NEG_INF or da < db:
        return a
    bv = _main_var_view(b, var)
    lead_b = bv[-1]
    r = a
    steps = int(da) - int(db) + 1
    for _ in range(steps):
        dr = r.degree_in(var)
        if dr is NEG_INF or dr < db:
            r = r * (lead_b ** 0)  # no-op, keeps types simple
            break
        rv = _main_var_view(r, var)
        lead_r = rv[-1]
        shift = MPoly.monomial(a.nvars, tuple(
            int(dr) - int(db) if i == var else 0 for i in range(a.nvars)))
        r = r * lead_b - b * lead_r * shift
    return r


def mpoly_gcd_list(polys) -> MPoly:
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        raise ValueError("gcd of an empty/all-zero family")
    acc = polys[0]
    for p in polys[1:]:
        acc = mpoly_gcd(acc, p)
        if acc.is_constant():
            break
    return normalize_sign_primitive(acc)


def gcd_reduce(f0: MPoly, fs):
    """Divide out the gcd of a polynomial family.

    Returns ``(g, reduced)`` with every input equal to ``g`` times its
    reduced counterpart and the reduced family coprime.  ``g`` is
    integer-primitive with positive graded-lex leading coefficient.
    """
    family = [f0] + list(fs)
    if all(p.is_zero() for p in family):
        raise ValueError("cannot reduce an all-zero family")
    g = mpoly_gcd_list(family)
    if g.is_constant() and g.constant_value() == 1:
        return g, family
    return g, [divexact(p, g) for p in family]


def squarefree_part(poly: MPoly) -> MPoly:
    """Radical of a nonzero polynomial: same zero set, multiplicity one.

    Uses ``poly / gcd(poly, d(poly)/dx_i for all i)`` over Q (char 0).
    """
    if poly.is_zero():
        raise ValueError("zero polynomial has no squarefree part")
    if poly.is_constant():
        return MPoly.constant(poly.nvars, 1)
    g = poly
    for i in range(poly.nvars):
        d = poly.partial(i)
        if not d.is_zero():
            g = mpoly_gcd(g, d)
        if g.is_constant():
            return normalize_sign_primitive(poly)
    return normalize_sign_primitive(divexact(poly, g))


# ----------------------------------------------------------------------
# Resultants


def resultant_wrt(f: MPoly, g: MPoly, var: int) -> MPoly:
    """Resultant of two polynomials in one designated variable.

    Computed as the determinant of the Sylvester matrix by fraction-free
    (Bareiss) elimination over the coefficient ring, so the result is
    exact.  Returns a polynomial with the designated variable absent;
    identically zero iff the inputs share a factor of positive degree in
    that variable (or one of them is zero).
    """
    f._check_same_ring(g)
    df, dg = f.degree_in(var), g.degree_in(var)
    if df is NEG_INF or dg is NEG_INF:
        return MPoly.zero(f.nvars)
    df, dg = int(df), int(dg)
    if df == 0 and dg == 0:
        return MPoly.constant(f.nvars, 1)
    fv = _main_var_view(f, var)
    gv = _main_var_view(g, var)
    n = df + dg
    zero = MPoly.zero(f.nvars)
    rows = []
    for i in range(dg):
        row = [zero] * n
        for j, c in enumerate(reversed(fv)):
            row[i + j] = c
        rows.append(row)
    for i in range(df):
        row = [zero] * n
        for j, c in enumerate(reversed(gv)):
            row[i + j] = c
        rows.append(row)
    return _bareiss_determinant(rows)


def _bareiss_determinant(matrix) -> MPoly:
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    nvars = matrix[0][0].nvars
    m = [row[:] for row in matrix]
    sign = 1
    prev = MPoly.constant(nvars, 1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            pivot_row = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if pivot_row is None:
                return MPoly.zero(nvars)
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = divexact(num, prev)
            m[i][k] = MPoly.zero(nvars)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


# ----------------------------------------------------------------------
# Laurent polynomials in t


class LaurentPoly:
    """Univariate Laurent polynomial in the path parameter t over Q."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exp, coeff in terms.items():
                coeff = _as_fraction(coeff)
                if coeff != 0:
                    clean[int(exp)] = coeff
        self.terms = clean

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls({})

    @classmethod
    def constant(cls, value) -> "LaurentPoly":
        return cls({0: value})

    @classmethod
    def t_power(cls, k: int, coeff=1) -> "LaurentPoly":
        return cls({k: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def order(self):
        """Minimal exponent with nonzero coefficient; +inf for zero."""
        if not self.terms:
            return POS_INF
        return min(self.terms)

    def coefficient(self, exp: int) -> Fraction:
        return self.terms.get(exp, Fraction(0))

    def leading_coefficient(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        return self.terms[min(self.terms)]

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        res = dict(self.terms)
        for e, c in other.terms.items():
            acc = res.get(e, Fraction(0)) + c
            if acc == 0:
                res.pop(e, None)
            else:
                res[e] = acc
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = res
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _as_fraction(other)
            out = LaurentPoly.__new__(LaurentPoly)
            out.terms = {} if other == 0 else {e: c * other for e, c in self.terms.items()}
            return out
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        res: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                acc = res.get(e, Fraction(0)) + c1 * c2
                if acc == 0:
                    res.pop(e, None)
                else:
                    res[e] = acc
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = res
        return out

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = LaurentPoly.constant(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def substitute_power(self, s: int) -> "LaurentPoly":
        """Reparametrize t -> t^s (s >= 1)."""
        if s < 1:
            raise ValueError("power substitution needs s >= 1")
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = {e * s: c for e, c in self.terms.items()}
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k (k may be negative)."""
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = {e + k: c for e, c in self.terms.items()}
        return out

    def polynomial_part(self) -> MPoly:
        """View as an ordinary polynomial; requires no negative exponents."""
        if self.terms and min(self.terms) < 0:
            raise ValueError("Laurent polynomial has negative exponents")
        return MPoly(1, {(e,): c for e, c in self.terms.items()})

    def eval_exact(self, t) -> Fraction:
        t = _as_fraction(t)
        if t == 0:
            raise ZeroDivisionError("cannot evaluate a Laurent polynomial at t=0")
        return sum((c * t ** e for e, c in self.terms.items()), Fraction(0))

    def eval_float(self, t: float) -> float:
        return sum(float(c) * t ** e for e, c in self.terms.items())

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mag = abs(c)
            if e == 0:
                body = format_rational(mag)
            else:
                t_part = "t" if e == 1 else f"t^{e}"
                body = t_part if mag == 1 else f"{format_rational(mag)}*{t_part}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(pieces)

    def __repr__(self):
        return f"LaurentPoly({self.to_text()!r})"


def mpoly_from_laurent_shift(p: LaurentPoly, k: int) -> MPoly:
    """The ordinary polynomial t^(-k) * p, for p with order >= k."""
    return p.shift(-k).polynomial_part()


def compose_path(poly: MPoly, components) -> LaurentPoly:
    """Evaluate a polynomial along a tuple of Laurent paths.

    Exact; a ring homomorphism in the polynomial argument.
    """
    components = list(components)
    if len(components) != poly.nvars:
        raise ArityError(
            f"path has {len(components)} components, polynomial has {poly.nvars} variables")
    cache: dict = {}

    def power(i: int, e: int) -> LaurentPoly:
        key = (i, e)
        if key not in cache:
            cache[key] = components[i] ** e
        return cache[key]

    total = LaurentPoly.zero()
    for exps, coeff in poly.terms.items():
        term = LaurentPoly.constant(coeff)
        for i, e in enumerate(exps):
            if e:
                term = term * power(i, e)
        total = total + term
    return total
