"""Exact real-root location for univariate polynomials over Q.

Dense coefficient lists (ascending powers, ``Fraction`` entries) keep this
module independent of the sparse multivariate representation.  Provides
Euclidean division, gcd, squarefree parts, Sturm sequences, root counting
and isolation by bisection, interval refinement, and reconstruction of
rational roots from an isolating interval via continued fractions.

Isolating intervals are half-open in spirit: a returned root is either an
exact ``Fraction`` or an open interval ``(lo, hi)`` with rational endpoints
containing exactly one real root, certified by a Sturm count and carrying a
sign change of the squarefree polynomial.
"""

from __future__ import annotations

from fractions import Fraction


def trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def degree(coeffs):
    return len(coeffs) - 1


def evaluate(coeffs, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def derivative(coeffs):
    return [c * i for i, c in enumerate(coeffs)][1:]


def remainder(a, b):
    """Remainder of Euclidean division over Q."""
    a = list(a)
    db = degree(b)
    inv = 1 / b[-1]
    while len(a) - 1 >= db and a:
        factor = a[-1] * inv
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            a[shift + i] -= factor * c
        a = trim(a)
    return a


def poly_gcd(a, b):
    a, b = trim(a), trim(b)
    while b:
        a, b = b, remainder(a, b)
    if a:
        inv = 1 / a[-1]
        a = [c * inv for c in a]
    return a


def squarefree(coeffs):
    coeffs = trim(coeffs)
    if degree(coeffs) < 1:
        return coeffs
    g = poly_gcd(coeffs, derivative(coeffs))
    if degree(g) < 1:
        return coeffs
    q, rest = [], list(coeffs)
    # exact division coeffs / g
    dg = degree(g)
    inv = 1 / g[-1]
    out = [Fraction(0)] * (len(coeffs) - dg)
    while len(rest) - 1 >= dg and rest:
        factor = rest[-1] * inv
        shift = len(rest) - 1 - dg
        out[shift] = factor
        for i, c in enumerate(g):
            rest[shift + i] -= factor * c
        rest = trim(rest)
    return trim(out)


def sturm_sequence(coeffs):
    seq = [trim(coeffs), trim(derivative(coeffs))]
    while seq[-1]:
        rem = remainder(seq[-2], seq[-1])
        if not rem:
            break
        seq.append([-c for c in rem])
    return [p for p in seq if p]


def sign_variations_at(seq, x: Fraction) -> int:
    signs = []
    for p in seq:
        v = evaluate(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sign_variations_at_inf(seq, positive: bool) -> int:
    signs = []
    for p in seq:
        lead = p[-1]
        s = 1 if lead > 0 else -1
        if not positive and degree(p) % 2 == 1:
            s = -s
        signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(coeffs, lo=None, hi=None) -> int:
    """Number of distinct real roots in (lo, hi]; None means +-infinity."""
    sf = squarefree(coeffs)
    if degree(sf) < 1:
        return 0
    seq = sturm_sequence(sf)
    va = sign_variations_at(seq, lo) if lo is not None else sign_variations_at_inf(seq, False)
    vb = sign_variations_at(seq, hi) if hi is not None else sign_variations_at_inf(seq, True)
    return va - vb


def root_bound(coeffs) -> Fraction:
    """Cauchy bound: all real roots lie in [-B, B]."""
    coeffs = trim(coeffs)
    lead = abs(coeffs[-1])
    b = max((abs(c) / lead for c in coeffs[:-1]), default=Fraction(0))
    return b + 1


def isolate_real_roots(coeffs, width=Fraction(1, 2 ** 40)):
    """Isolate every distinct real root of a nonzero polynomial.

    Returns a list of entries, each either ``("rational", r)`` for an
    exactly identified rational root or ``("interval", lo, hi)`` with
    ``hi - lo <= width``, exactly one root inside, and a strict sign
    change of the squarefree part between the endpoints.
    """
    sf = squarefree(coeffs)
    if degree(sf) < 1:
        return []
    seq = sturm_sequence(sf)
    bound = root_bound(sf)

    def count(lo, hi):
        return sign_variations_at(seq, lo) - sign_variations_at(seq, hi)

    total = count(-bound, bound)
    found = []
    stack = [(-bound, bound, total)]
    while stack:
        lo, hi, k = stack.pop()
        if k == 0:
            continue
        if k == 1:
            found.append(_refine(sf, seq, lo, hi, width))
            continue
        mid = (lo + hi) / 2
        if evaluate(sf, mid) == 0:
            found.append(("rational", mid))
            # carve out a punctured neighbourhood holding only this root
            eps = (hi - lo) / 4
            while (evaluate(sf, mid - eps) == 0 or evaluate(sf, mid + eps) == 0
                   or count(mid - eps, mid) != 1 or count(mid, mid + eps) != 0):
                eps /= 2
            stack.append((lo, mid - eps, count(lo, mid - eps)))
            stack.append((mid + eps, hi, count(mid + eps, hi)))
        else:
            stack.append((lo, mid, count(lo, mid)))
            stack.append((mid, hi, count(mid, hi)))

    def sort_key(entry):
        return entry[1]

    return sorted(found, key=sort_key)


def _refine(sf, seq, lo, hi, width):
    # bisect a single-root interval down to the requested width, watching
    # for the root landing exactly on a midpoint
    while hi - lo > width:
        mid = (lo + hi) / 2
        vm = evaluate(sf, mid)
        if vm == 0:
            return ("rational", mid)
        if sign_variations_at(seq, lo) - sign_variations_at(seq, mid) == 1:
            hi = mid
        else:
            lo = mid
    r = rational_root_in_interval(sf, lo, hi)
    if r is not None:
        return ("rational", r)
    return ("interval", lo, hi)


def rational_root_in_interval(coeffs, lo: Fraction, hi: Fraction, max_denominator=2 ** 32):
    """Try to recognize the unique root in (lo, hi) as a small rational.

    Walks the continued-fraction convergents of the midpoint and returns
    the first candidate that is an exact root inside the interval.
    """
    mid = (lo + hi) / 2
    for q in _convergents(mid, max_denominator):
        if lo < q < hi and evaluate(coeffs, q) == 0:
            return q
    for q in (lo, hi):
        if evaluate(coeffs, q) == 0 and lo <= q <= hi:
            return q
    return None


def _convergents(x: Fraction, max_denominator):
    p0, q0, p1, q1 = 0, 1, 1, 0
    n, d = x.numerator, x.denominator
    while d:
        a = n // d
        n, d = d, n - a * d
        p0, q0, p1, q1 = p1, q1, a * p1 + p0, a * q1 + q0
        if q1 > max_denominator:
            return
        yield Fraction(p1, q1)


def refine_to_width(coeffs, lo: Fraction, hi: Fraction, width: Fraction):
    """Shrink a certified single-root interval below ``width`` by bisection."""
    sf = squarefree(coeffs)
    seq = sturm_sequence(sf)
    while hi - lo > width:
        mid = (lo + hi) / 2
        if evaluate(sf, mid) == 0:
            eps = min(width / 2, (hi - lo) / 4)
            return mid - eps, mid + eps
        if sign_variations_at(seq, lo) - sign_variations_at(seq, mid) == 1:
            hi = mid
        else:
            lo = mid
    return lo, hi
