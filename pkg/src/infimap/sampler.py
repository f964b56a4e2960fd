"""Monte-Carlo estimation of the set of points at infinity.

The estimator never proves anything: it samples the domain (for maps) or
an annulus (for sets), keeps image/sample directions whose magnitude
exceeds an escalating family of escape radii, and counts connected
components of the antipodal epsilon-graph on the unit sphere.  Agreement
of the component count across all radii is the stability signal; the
obstruction verdict built on top is one-sided by design, since a
connected-looking sample can never certify being a polynomial image.

Domain sampling for maps combines straight rays with a deterministic
sweep of simple rational Laurent paths (exponent patterns like
(t, c/t)) plus seeded random paths: the escapes of regular maps
concentrate along thin algebraic directions that straight rays miss, and
simple rational coefficient combinations hit them exactly.  This is the
promised heuristic ray search; paths that realize a given infinity point
can always be supplied to the exact limit machinery instead.

Everything is deterministic for a fixed config: random draws happen in
fixed-size batches whose seeds derive from (seed, batch index) by SHA-256,
and batches merge in index order, so parallel and serial runs agree.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy.spatial import cKDTree

from .errors import ArityError, InfimapError
from .maps import RegularMap, SemialgebraicSet
from .polyring import MPoly
from .projective import ProjPoint

_POLE_GUARD = 1e-30
_SEAM_EPS = 1e-13


def derive_seed(seed: int, *tags) -> int:
    text = ":".join([str(seed)] + [str(t) for t in tags])
    return int.from_bytes(hashlib.sha256(text.encode()).digest()[:8], "big")


@dataclass(frozen=True)
class SampleConfig:
    """Knobs for the infinity sampler.

    ``n_samples`` is the size of the evaluated sample pool; every escape
    radius filters the same pool, which is what makes the per-radius
    component counts comparable.
    """

    radii: tuple = (1e4, 1e6, 1e8)
    n_samples: int = 20000
    epsilon: float = 0.05
    seed: int = 42
    max_norm: float = 1e8
    batch_size: int = 512

    def __post_init__(self):
        radii = tuple(float(r) for r in self.radii)
        object.__setattr__(self, "radii", radii)
        if any(b <= a for a, b in zip(radii, radii[1:])) or not radii:
            raise ValueError("radii must be strictly increasing and nonempty")
        if not 0 < self.epsilon < 1:
            raise ValueError("epsilon must lie in (0, 1)")
        if self.n_samples < 100:
            raise ValueError("n_samples must be at least 100")

    @classmethod
    def from_json(cls, data: dict) -> "SampleConfig":
        kwargs = {}
        for key in ("radii", "n_samples", "epsilon", "seed", "max_norm",
                    "batch_size"):
            if key in data:
                kwargs[key] = tuple(data[key]) if key == "radii" else data[key]
        return cls(**kwargs)

    def to_json(self) -> dict:
        return {
            "radii": list(self.radii),
            "n_samples": self.n_samples,
            "epsilon": self.epsilon,
            "seed": self.seed,
            "max_norm": self.max_norm,
            "batch_size": self.batch_size,
        }


# ----------------------------------------------------------------------
# Antipodal clustering


_SNAP = 1e-3


def _cluster_exact(pts: np.ndarray, epsilon: float):
    count = pts.shape[0]
    doubled = np.vstack([pts, -pts])
    tree = cKDTree(doubled)
    pairs = tree.query_pairs(r=epsilon, output_type="ndarray")
    parent = np.arange(count)

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for a, b in pairs:
        ra, rb = find(a % count), find(b % count)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    labels = np.empty(count, dtype=int)
    seen = {}
    for i in range(count):
        root = find(i)
        if root not in seen:
            seen[root] = len(seen)
        labels[i] = seen[root]
    return labels, len(seen)


def _snap_dedupe(pts: np.ndarray, resolution: float):
    keys = np.round(pts / resolution).astype(np.int64)
    seen = {}
    reps = []
    inverse = np.empty(pts.shape[0], dtype=int)
    for i, key in enumerate(map(tuple, keys)):
        j = seen.get(key)
        if j is None:
            j = len(reps)
            seen[key] = j
            reps.append(pts[i])
        inverse[i] = j
    return np.array(reps), inverse


def component_count(directions, epsilon: float):
    """Union-find components of the antipodal epsilon-graph.

    Edges join directions with min(|u - v|, |u + v|) below epsilon; the
    doubled point set trick turns that into plain Euclidean neighbour
    queries.  Deterministic given input order (labels are numbered by
    first appearance).

    Large inputs are thinned to a fixed resolution (1e-3, far below any
    usable epsilon) before building the graph: points inside one snap
    cell are mutually closer than any such epsilon, so gluing them first
    only avoids enumerating quadratically many redundant edges.
    """
    pts = np.asarray(directions, dtype=float)
    if pts.size == 0:
        return np.zeros(0, dtype=int), 0
    if pts.shape[0] > 2000 and epsilon > 16 * _SNAP:
        reps, inverse = _snap_dedupe(pts, _SNAP)
        rep_labels, _ = _cluster_exact(reps, epsilon)
        raw = rep_labels[inverse]
        seen = {}
        labels = np.empty(pts.shape[0], dtype=int)
        for i, value in enumerate(raw):
            if value not in seen:
                seen[value] = len(seen)
            labels[i] = seen[value]
        return labels, len(seen)
    return _cluster_exact(pts, epsilon)


def _canonical_direction(vec: np.ndarray) -> np.ndarray:
    for v in vec:
        if abs(v) > _SEAM_EPS:
            return vec if v > 0 else -vec
    return vec


def _antipodal_dist(u, v) -> float:
    return min(float(np.linalg.norm(u - v)), float(np.linalg.norm(u + v)))


@dataclass(frozen=True)
class ClusterSummary:
    size: int
    centroid: tuple
    extent: float
    nearest_candidate: str = None
    nearest_distance: float = None

    def to_json(self) -> dict:
        out = {"size": self.size, "centroid": list(self.centroid),
               "extent": self.extent}
        if self.nearest_candidate is not None:
            out["nearest_candidate"] = self.nearest_candidate
            out["nearest_distance"] = self.nearest_distance
        return out


def summarize_clusters(directions: np.ndarray, labels, count: int,
                       candidates=()):
    """Centroid/extent per cluster plus the nearest declared exact point.

    Candidates are projective points on the infinity hyperplane; matching
    uses the same antipodal chord metric as the clustering itself.
    """
    cand_dirs = []
    for point in candidates:
        if not point.at_infinity:
            raise ValueError("candidate points must lie on the infinity hyperplane")
        cand_dirs.append((point.to_display(), np.array(point.direction())))
    summaries = []
    for label in range(count):
        members = directions[np.asarray(labels) == label]
        ref = members[0]
        aligned = np.where((members @ ref)[:, None] < 0, -members, members)
        centroid = aligned.mean(axis=0)
        norm = np.linalg.norm(centroid)
        centroid = centroid / norm if norm > 0 else ref
        extent = max(_antipodal_dist(m, centroid) for m in members)
        nearest = None
        nearest_dist = None
        for text, cdir in cand_dirs:
            dist = _antipodal_dist(centroid, cdir)
            if nearest_dist is None or dist < nearest_dist:
                nearest, nearest_dist = text, dist
        summaries.append(ClusterSummary(
            size=int(members.shape[0]),
            centroid=tuple(float(v) for v in _canonical_direction(centroid)),
            extent=float(extent),
            nearest_candidate=nearest,
            nearest_distance=None if nearest_dist is None else float(nearest_dist)))
    summaries.sort(key=lambda s: (-s.size, s.centroid))
    return summaries


# ----------------------------------------------------------------------
# Report


@dataclass(frozen=True)
class RadiusSummary:
    radius: float
    n_escaped: int
    component_count: int
    clusters: tuple

    def to_json(self) -> dict:
        return {"radius": self.radius, "n_escaped": self.n_escaped,
                "component_count": self.component_count,
                "clusters": [c.to_json() for c in self.clusters]}


@dataclass(frozen=True)
class InfinityReport:
    kind: str
    config: SampleConfig
    per_radius: tuple
    stable_count: object  # int or "unstable" or None
    possibly_empty: bool
    directions: tuple = ()
    labels: tuple = ()
    warnings: tuple = ()

    def component_counts(self):
        return [r.component_count for r in self.per_radius]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "config": self.config.to_json(),
            "per_radius": [r.to_json() for r in self.per_radius],
            "stable_count": self.stable_count,
            "possibly_empty": self.possibly_empty,
            "directions": [list(d) for d in self.directions],
            "labels": list(self.labels),
            "warnings": list(self.warnings),
        }


def _assemble_report(kind, cfg, kept_per_radius, candidates, warnings):
    """kept_per_radius: list of (radius, directions ndarray)."""
    per_radius = []
    counts = []
    final_directions = np.zeros((0, 0))
    final_labels = np.zeros(0, dtype=int)
    for radius, dirs in kept_per_radius:
        labels, count = component_count(dirs, cfg.epsilon)
        clusters = summarize_clusters(dirs, labels, count, candidates) if count else []
        per_radius.append(RadiusSummary(
            radius=radius, n_escaped=int(dirs.shape[0]),
            component_count=count, clusters=tuple(clusters)))
        counts.append(count)
        if dirs.shape[0]:
            final_directions, final_labels = dirs, labels
    possibly_empty = per_radius[-1].n_escaped == 0
    if possibly_empty:
        stable = None
    elif all(c == counts[-1] and c > 0 for c in counts):
        stable = counts[-1]
    else:
        stable = "unstable"
    return InfinityReport(
        kind=kind, config=cfg, per_radius=tuple(per_radius),
        stable_count=stable, possibly_empty=possibly_empty,
        directions=tuple(tuple(float(v) for v in d) for d in final_directions),
        labels=tuple(int(v) for v in final_labels),
        warnings=tuple(warnings))


# ----------------------------------------------------------------------
# Vectorized polynomial evaluation


def _compile(polys):
    tables = []
    for p in polys:
        if p.is_zero():
            tables.append((np.zeros((1, p.nvars), dtype=np.int64),
                           np.zeros(1)))
            continue
        exps = np.array(sorted(p.terms), dtype=np.int64)
        coeffs = np.array([float(p.terms[tuple(e)]) for e in exps])
        tables.append((exps, coeffs))
    return tables


# float64 carries ~1e-16 relative error; a sum whose float value is this
# far below the largest contributing monomial has lost all signal through
# cancellation and must be recomputed exactly (or dropped)
_TRUST = 1e-9


def _eval_with_bound(table, points: np.ndarray):
    exps, coeffs = table
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        monomials = np.abs(points)[:, None, :] ** exps[None, :, :]
        bound = np.prod(monomials, axis=2) @ np.abs(coeffs)
        signs = np.prod(np.sign(points)[:, None, :] ** exps[None, :, :], axis=2)
        values = (np.prod(monomials, axis=2) * signs) @ coeffs
    return values, bound


def _eval_table(table, points: np.ndarray) -> np.ndarray:
    exps, coeffs = table
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        monomials = np.prod(points[:, None, :] ** exps[None, :, :], axis=2)
        return monomials @ coeffs


# ----------------------------------------------------------------------
# Domain sample generation for maps

# simple rational coefficients, ordered roughly by simplicity; the sweep
# of exact coefficient combinations is what reaches escapes that need
# exact relations like c1*c2 = 1 or points on a rational line
_CORE_NUMERATORS = (1, 2, 3, 4, 5, 6)


def _core_coefficients():
    values = []
    seen = set()
    for p in _CORE_NUMERATORS:
        for q in _CORE_NUMERATORS:
            v = Fraction(p, q)
            if v not in seen:
                seen.add(v)
                values.append(v)
    values.sort(key=lambda v: (v.numerator + v.denominator, abs(math.log(v))))
    return values


_CORE = _core_coefficients()

# key exponent patterns cover exact escapes (on-a-line, reciprocal
# products, one-axis blowup); the exploration patterns only see the
# simplest coefficients
_KEY_PATTERNS_2D = ((-1, -1), (1, -1), (-1, 1), (-1, 0), (0, -1))
_EXTRA_PATTERNS_2D = ((-2, 1), (1, -2), (-1, -2), (-2, -1), (-1, 2),
                      (2, -1), (-2, -2), (-3, 1), (1, -3))


def _pair_families(c: Fraction):
    inv = 1 / c
    return ((c, Fraction(1)), (Fraction(1), c), (c, c), (c, inv), (c, -inv),
            (c, -c), (c, Fraction(-1)), (c, Fraction(0)), (Fraction(0), c))


def _grid_paths(n: int, budget: int):
    """Deterministic Laurent-path sweep.

    Pairs iterate coefficient-simplicity-major so that truncating at the
    budget keeps every key pattern alive for the simple coefficients."""
    paths = []
    seen = set()

    def push(exps, coeffs):
        if len(paths) >= budget:
            return
        live = [(k, c) for k, c in zip(exps, coeffs) if c != 0]
        if not live or not any(k < 0 for k, _ in live):
            return
        key = (exps, coeffs)
        if key in seen:
            return
        seen.add(key)
        paths.append((exps, coeffs, ()))

    if n == 1:
        for c in _CORE:
            for sign in (1, -1):
                for k in (-1, -2, -3):
                    push((k,), (sign * c,))
        return paths
    if n == 2:
        pairs = []
        for c in _CORE:
            for signed in (c, -c):
                pairs.extend(_pair_families(signed))
        for pair in pairs:
            for pattern in _KEY_PATTERNS_2D:
                push(pattern, pair)
            if len(paths) >= budget:
                return paths
        for pair in pairs[:120]:
            for pattern in _EXTRA_PATTERNS_2D:
                push(pattern, pair)
            if len(paths) >= budget:
                return paths
        return paths
    if n == 3:
        tiny = [Fraction(v) for v in (0, 1, -1, 2, -2)] + [Fraction(1, 2), Fraction(-1, 2)]
        patterns = ((-1, 0, 0), (0, -1, 0), (0, 0, -1), (-1, -1, 0),
                    (-1, 0, -1), (0, -1, -1), (-1, -1, -1), (-1, 1, 0),
                    (1, -1, 0), (-1, 1, 1))
        for a in tiny:
            for b in tiny:
                for c in tiny:
                    for pattern in patterns:
                        push(pattern, (a, b, c))
                        if len(paths) >= budget:
                            return paths
        return paths
    return paths  # higher dimensions rely on the random generator


def _random_paths(n: int, count: int, cfg: SampleConfig, stream: int):
    exponent_choices = (-2, -1, 0, 1, 2)
    exponent_weights = (0.15, 0.40, 0.20, 0.15, 0.10)
    paths = []
    batch = 0
    while len(paths) < count:
        rng = np.random.default_rng(derive_seed(cfg.seed, "laurent", stream, batch))
        for _ in range(min(cfg.batch_size, count - len(paths))):
            for _attempt in range(10):
                exps = tuple(int(rng.choice(exponent_choices, p=exponent_weights))
                             for _ in range(n))
                coeffs = []
                for _ in range(n):
                    if rng.random() < 0.05:
                        coeffs.append(Fraction(0))
                    else:
                        num = int(rng.integers(-6, 7)) or 1
                        den = int(rng.integers(1, 7))
                        coeffs.append(Fraction(num, den))
                live = [(k, c) for k, c in zip(exps, coeffs) if c != 0]
                if live and any(k < 0 for k, _ in live):
                    break
            else:
                continue
            perturbations = []
            if rng.random() < 0.3:
                index = int(rng.integers(0, n))
                num = int(rng.integers(-4, 5)) or 1
                perturbations.append((index,
                                      exps[index] + int(rng.integers(1, 4)),
                                      Fraction(num, int(rng.integers(1, 5)))))
            paths.append((exps, tuple(coeffs), tuple(perturbations)))
        batch += 1
    return paths[:count]


_T_EXPONENTS = (2, 3, 4, 6, 8)
_T_GRID = tuple(10.0 ** -j for j in _T_EXPONENTS)


def _realize_paths(paths, max_norm: float):
    """Evaluate each path on the t-grid; exact rational coordinates ride
    along so cancellation-hit samples can be recomputed exactly."""
    floats = []
    exacts = []
    for exps, coeffs, perturbations in paths:
        for j in _T_EXPONENTS:
            t = Fraction(1, 10 ** j)
            coords = [c * t ** k for c, k in zip(coeffs, exps)]
            for index, exp, coeff in perturbations:
                coords[index] += coeff * t ** exp
            fl = [float(c) for c in coords]
            norm = math.sqrt(sum(v * v for v in fl))
            if _DOMAIN_FLOOR <= norm <= max_norm:
                floats.append(fl)
                exacts.append(tuple(coords))
    return floats, exacts


# image directions carry O(1/|x|) finite-size error, so samples below
# this domain norm would scatter far from the asymptotic direction set
# and fragment the clusters; genuinely large image values at small |x|
# only happen next to poles, which the Laurent paths reach at depth
_DOMAIN_FLOOR = 1e3


def _ray_points(n: int, count: int, cfg: SampleConfig, degree: int):
    s_cap = max(min(cfg.max_norm, 10.0 ** (280.0 / max(degree, 1))),
                10 * _DOMAIN_FLOOR)
    if n == 1:
        magnitudes = np.geomspace(_DOMAIN_FLOOR, s_cap, max(count // 2, 4))
        return np.concatenate([magnitudes, -magnitudes])[:, None]
    if n == 2:
        # a dense top ring resolves the asymptotic direction curve; the
        # lower rings catch slower escapes
        rings = ((s_cap, 0.55), (s_cap * 1e-2, 0.2), (s_cap * 1e-4, 0.15),
                 (3 * _DOMAIN_FLOOR, 0.1))
        chunks = []
        for index, (magnitude, share) in enumerate(rings):
            magnitude = max(magnitude, _DOMAIN_FLOOR)
            n_angles = max(int(count * share), 8)
            offset = 0.5 + index / len(rings)
            angles = (np.arange(n_angles) + offset) * (2 * np.pi / n_angles)
            chunks.append(magnitude * np.column_stack(
                [np.cos(angles), np.sin(angles)]))
        return np.vstack(chunks)
    magnitudes = np.geomspace(_DOMAIN_FLOOR, s_cap, 8)
    n_dirs = max(count // len(magnitudes), 8)
    rng = np.random.default_rng(derive_seed(cfg.seed, "rays"))
    raw = rng.standard_normal((n_dirs, n))
    dirs = raw / np.linalg.norm(raw, axis=1, keepdims=True)
    return (dirs[:, None, :] * magnitudes[None, :, None]).reshape(-1, n)


# ----------------------------------------------------------------------
# Map sampler


def sample_map_infinity(f: RegularMap, cfg: SampleConfig = None,
                        candidates=()) -> InfinityReport:
    """Estimate the points at infinity of the image of a regular map.

    Keeps a sample direction when the image magnitude exceeds the escape
    radius, comparing numerators against the denominator to avoid
    dividing by nearly-zero values; the report carries per-radius
    component counts and their stability verdict.
    """
    cfg = cfg or SampleConfig()
    warnings = list(f.warnings)
    degree = max(int(p.total_degree()) for p in f.numerator_tuple()
                 if not p.is_zero())
    ray_budget = int(cfg.n_samples * 0.45)
    path_point_budget = cfg.n_samples - ray_budget
    path_budget = max(path_point_budget // len(_T_GRID), 4)
    grid = _grid_paths(f.n, int(path_budget * 0.6))
    random_count = max(path_budget - len(grid), 0)
    paths = grid + _random_paths(f.n, random_count, cfg, stream=0)

    ray_pts = _ray_points(f.n, ray_budget, cfg, degree)
    path_floats, path_exacts = _realize_paths(paths, cfg.max_norm)
    exact_coords = [None] * ray_pts.shape[0] + path_exacts
    points = (np.vstack([ray_pts, np.array(path_floats)])
              if path_floats else ray_pts)

    tables = _compile(f.numerator_tuple())
    values = []
    trusted = np.ones(points.shape[0], dtype=bool)
    for table in tables:
        vals, bound = _eval_with_bound(table, points)
        trusted &= np.isfinite(vals) & (np.abs(vals) >= _TRUST * bound)
        values.append(vals)
    den = values[0]
    numerators = np.column_stack(values[1:])

    # float values destroyed by cancellation are recomputed exactly when
    # the sample has exact rational coordinates, otherwise dropped
    n_rescued = n_dropped = n_pole = 0
    directions = []
    escapes = []
    for i in range(points.shape[0]):
        if trusted[i]:
            if abs(den[i]) < _POLE_GUARD:
                n_pole += 1
                continue
            scale = float(np.max(np.abs(numerators[i])))
            if scale == 0.0:
                continue
            # scale first: squaring raw values near 1e170 overflows
            vec = numerators[i] / scale
            mag = float(np.linalg.norm(vec))
            directions.append(vec / mag)
            escapes.append(scale * mag / abs(den[i]))
            continue
        exact = exact_coords[i]
        if exact is None:
            n_dropped += 1
            continue
        exact_values = [p.eval_exact(exact) for p in f.numerator_tuple()]
        if exact_values[0] == 0:
            n_pole += 1
            continue
        nums = exact_values[1:]
        if all(v == 0 for v in nums):
            continue
        scale = max(abs(v) for v in nums)
        vec = np.array([float(v / scale) for v in nums])
        mag = float(np.linalg.norm(vec))
        directions.append(vec / mag)
        ratio = (sum(v * v for v in nums)
                 / (exact_values[0] * exact_values[0]))
        escapes.append(math.sqrt(min(float(ratio), 1e300)))
        n_rescued += 1
    if n_rescued:
        warnings.append(
            f"{n_rescued} cancellation-hit samples recomputed exactly")
    if n_dropped:
        warnings.append(
            f"{n_dropped} float samples dropped: catastrophic cancellation"
            " and no exact coordinates available")
    if n_pole:
        warnings.append(
            f"{n_pole} samples dropped at (near-)poles of the denominator"
            " (is the denominator really nonvanishing?)")
    directions = (np.array([_canonical_direction(d) for d in directions])
                  if directions else np.zeros((0, f.m)))
    escape = np.array(escapes)

    kept = []
    for radius in cfg.radii:
        mask = escape > radius if escape.size else np.zeros(0, dtype=bool)
        kept.append((radius, directions[mask]))
    return _assemble_report("map", cfg, kept, candidates, warnings)


# ----------------------------------------------------------------------
# Set sampler


def _set_proposals(n: int, radius: float, cfg: SampleConfig, batch: int):
    """One batch of annulus proposals: (float coords, exact coords or None)."""
    rng = np.random.default_rng(derive_seed(cfg.seed, "set", radius, batch))
    out = []
    r_int = int(radius)
    j_max = int(math.log2(2 * radius))
    for _ in range(cfg.batch_size):
        mode = rng.random()
        if mode < 0.4:
            u = rng.standard_normal(n)
            u /= np.linalg.norm(u)
            r = radius * (1.0 + rng.random())
            out.append((r * u, None))
        elif mode < 0.8:
            # one dominant exact coordinate, dyadic or zero elsewhere
            axis = int(rng.integers(0, n))
            sign = 1 if rng.random() < 0.5 else -1
            big = Fraction(sign * r_int * (8 + int(rng.integers(0, 8))), 8)
            coords = [Fraction(0)] * n
            coords[axis] = big
            for i in range(n):
                if i == axis or rng.random() < 0.25:
                    continue
                j = int(rng.integers(-10, max(j_max - 2, -9)))
                value = Fraction(2) ** j if j >= 0 else Fraction(1, 2 ** -j)
                coords[i] = value if rng.random() < 0.5 else -value
            floats = np.array([float(c) for c in coords])
            norm = np.linalg.norm(floats)
            if radius <= norm <= 2 * radius:
                out.append((floats, tuple(coords)))
        else:
            logs = rng.uniform(-3, math.log10(2 * radius), size=n)
            signs = np.where(rng.random(n) < 0.5, 1.0, -1.0)
            coords = signs * 10.0 ** logs
            norm = np.linalg.norm(coords)
            if radius <= norm <= 2 * radius:
                out.append((coords, None))
    return out


def sample_set_infinity(s: SemialgebraicSet, cfg: SampleConfig = None,
                        candidates=()) -> InfinityReport:
    """Estimate the points at infinity of a semialgebraic set.

    Rejection sampling in the annulus radius <= |x| <= 2*radius with a
    proposal mix that also covers thin slabs near coordinate hyperplanes;
    samples with exact rational coordinates are tested exactly, so
    boundary equalities count.  Lower-dimensional sets (pure equations)
    are practically invisible to rejection sampling and come back as
    "possibly empty at infinity"; that is a documented limitation, not a
    certification.
    """
    cfg = cfg or SampleConfig()
    warnings = []
    kept = []
    acceptance_last = None
    for radius in cfg.radii:
        accepted = []
        proposals = 0
        n_batches = max(cfg.n_samples // cfg.batch_size, 1)
        for batch in range(n_batches):
            for floats, exact in _set_proposals(s.nvars, radius, cfg, batch):
                proposals += 1
                try:
                    inside = (s.contains_exact(exact) if exact is not None
                              else s.contains_float(floats))
                except OverflowError:
                    continue
                if inside:
                    norm = float(np.linalg.norm(floats))
                    accepted.append(np.asarray(floats) / norm)
        rate = len(accepted) / max(proposals, 1)
        acceptance_last = rate
        dirs = (np.array([_canonical_direction(d) for d in accepted])
                if accepted else np.zeros((0, s.nvars)))
        kept.append((radius, dirs))
    if acceptance_last is not None and acceptance_last < 1e-4:
        warnings.append(
            f"acceptance rate {acceptance_last:.2e} at the largest radius;"
            " possibly empty at infinity (or lower-dimensional)")
    return _assemble_report("set", cfg, kept, candidates, warnings)


# ----------------------------------------------------------------------
# Obstruction verdict


def polynomial_image_obstruction(target, cfg: SampleConfig = None) -> dict:
    """Connectivity obstruction test for being a polynomial image.

    A stable component count of at least 2 reports OBSTRUCTED: a set
    whose points at infinity are disconnected is not the image of any
    non-constant polynomial map, in any number of variables.  Anything
    else reports NO OBSTRUCTION FOUND; the test never claims that a set
    *is* a polynomial image.
    """
    cfg = cfg or SampleConfig()
    if isinstance(target, RegularMap):
        report = sample_map_infinity(target, cfg)
    elif isinstance(target, SemialgebraicSet):
        report = sample_set_infinity(target, cfg)
    else:
        raise ArityError("obstruction test expects a map or a semialgebraic set")
    counts = report.component_counts()
    if report.possibly_empty:
        verdict = "NO OBSTRUCTION FOUND"
        message = ("no escaping samples at the largest radius: the set of"
                   " points at infinity is possibly empty (bounded or"
                   " lower-dimensional); connectivity shows nothing")
    elif report.stable_count == "unstable":
        verdict = "NO OBSTRUCTION FOUND"
        message = (f"component counts {counts} disagree across radii;"
                   " no stable disconnection was observed")
    elif report.stable_count >= 2:
        verdict = "OBSTRUCTED"
        message = (f"the set of points at infinity appears disconnected"
                   f" ({report.stable_count} stable components): a set with"
                   " disconnected points at infinity is not the image of any"
                   " non-constant polynomial map")
    else:
        verdict = "NO OBSTRUCTION FOUND"
        message = ("points at infinity appear connected; note that"
                   " connectedness never certifies being a polynomial image")
    return {
        "verdict": verdict,
        "message": message,
        "stable_count": report.stable_count,
        "component_counts": counts,
        "confidence": {
            "n_samples": cfg.n_samples,
            "radii": list(cfg.radii),
            "epsilon": cfg.epsilon,
            "seed": cfg.seed,
            "escaped_per_radius": [r.n_escaped for r in report.per_radius],
        },
        "report": report.to_json(),
    }


# ----------------------------------------------------------------------
# Seeded polynomial maps (test corpus helpers)


def seeded_polynomial_maps(count: int = 5, nvars: int = 2, ncomps: int = 2,
                           max_degree: int = 3, seed: int = 7):
    """Deterministic pseudo-random polynomial maps R^n -> R^m.

    Components have small integer coefficients and degree between 2 and
    ``max_degree``; for planar maps the pair of top-degree forms is kept
    coprime (checked exactly) and bounded away from a common near-zero on
    the circle, so the image direction curve is well conditioned and the
    connectivity sampler can resolve it.
    """
    from .polyring import mpoly_gcd

    maps = []
    attempt = 0
    while len(maps) < count:
        rng = np.random.default_rng(derive_seed(seed, "polymap", attempt))
        attempt += 1
        # one degree per map: equal component degrees give a
        # magnitude-independent asymptotic direction curve
        deg = int(rng.integers(2, max_degree + 1))
        comps = []
        ok = True
        for _ in range(ncomps):
            terms = {}
            for exps in _exponents_up_to(nvars, deg):
                coeff = int(rng.integers(-3, 4))
                if coeff:
                    terms[exps] = Fraction(coeff)
            poly = MPoly(nvars, terms)
            if poly.is_zero() or poly.total_degree() != deg:
                ok = False
                break
            comps.append(poly)
        if not ok:
            continue
        tops = [_top_form(c) for c in comps]
        if nvars == 2 and len(tops) >= 2:
            if not mpoly_gcd(tops[0], tops[1]).is_constant():
                continue
            if not _well_conditioned_at_infinity(tops):
                continue
        maps.append(RegularMap.polynomial(tuple(comps), reduced=True))
    return maps


def _exponents_up_to(nvars: int, degree: int):
    out = []

    def walk(prefix, slots):
        if slots == 0:
            out.append(prefix)
            return
        for e in range(degree + 1 - sum(prefix)):
            walk(prefix + (e,), slots - 1)

    walk((), nvars)
    return out


def _top_form(poly: MPoly) -> MPoly:
    d = int(poly.total_degree())
    return MPoly(poly.nvars, {e: c for e, c in poly.terms.items() if sum(e) == d})


def _well_conditioned_at_infinity(tops, min_norm: float = 0.3,
                                  max_gap: float = 0.04,
                                  n_angles: int = 4500) -> bool:
    """The image direction curve of the top forms must be resolvable.

    Requires the top-form value vector bounded away from zero on the
    circle and the asymptotic direction curve, sampled at the default
    top-ring density, to step less than the clustering radius."""
    angles = np.linspace(0, 2 * np.pi, n_angles, endpoint=False)
    pts = np.column_stack([np.cos(angles), np.sin(angles)])
    values = np.column_stack([_eval_table(_compile([t])[0], pts) for t in tops])
    norms = np.linalg.norm(values, axis=1)
    if norms.min() < min_norm:
        return False
    dirs = values / norms[:, None]
    nxt = np.roll(dirs, -1, axis=0)
    gaps = np.minimum(np.linalg.norm(dirs - nxt, axis=1),
                      np.linalg.norm(dirs + nxt, axis=1))
    return float(gaps.max()) < max_gap
