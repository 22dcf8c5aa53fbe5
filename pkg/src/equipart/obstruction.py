"""Moment-curve evaluation of the equipartition obstruction.

Consecutive parameter intervals on the moment curve carry the test
measures.  A configuration of k hyperplanes in R^d meets the curve in at
most k*d points; when the constraints use all of them, a zero of the test
map is pinned down by its :class:`CrossingPattern` (which plane crosses
where, in curve order), and the crossings sit at equal subdivisions of each
interval.  Counting zeros up to the hyperoctahedral group is then pure
combinatorics, and every pattern can be realized by explicit hyperplanes.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .errors import (ChartBreakdown, DegenerateIntervals, InfeasibleSpec, RealizationFailed)
from .geometry import (Configuration, OrientedHyperplane, hyperplane_from_roots, side_on_curve)
from .graycode import (BISECTOR, FULL, CrossingPattern, canonical_pattern, flip_counts,
                       flip_sequences, is_hamiltonian, relabel, stabilizer_size)
from .measures import IntervalMeasure, curve_crossings, orthant_masses
from .testmap import full_test_map

# Type cases for the (d=5, k=3, [F, F, B]) problem, keyed by the types of the
# two full intervals once the first one is brought to its reference sequence.
TYPE_CASES = {
    ((4, 2, 1), (1, 2, 4)): 1,
    ((4, 2, 1), (1, 3, 3)): 2,
    ((3, 3, 1), (1, 2, 4)): 3,
    ((3, 3, 1), (2, 1, 4)): 3,
    ((3, 3, 1), (2, 2, 3)): 4,
    ((3, 2, 2), (1, 3, 3)): 5,
    ((3, 2, 2), (2, 3, 2)): 6,
    ((3, 2, 2), (2, 2, 3)): 7,
}
CASE_COUNTS = {1: 1, 2: 2, 3: 2, 4: 2, 5: 2, 6: 2, 7: 2}

RESIDUAL_TOL = 1e-9
JACOBIAN_THRESHOLD = 1e-6


@dataclass(frozen=True)
class ProblemSpec:
    d: int
    k: int
    constraints: tuple

    def __post_init__(self):
        cons = tuple(c.strip().upper() for c in self.constraints)
        if any(c not in (FULL, BISECTOR) for c in cons):
            raise ValueError(f"constraints must be F or B, got {cons}")
        object.__setattr__(self, "constraints", cons)

    @classmethod
    def parse(cls, d: int, k: int, constraints: str) -> "ProblemSpec":
        """Accepts ``"F,F,B"``, ``"F F B"`` or the compact ``"FFB"``."""
        parts = constraints.replace(",", " ").split()
        if len(parts) == 1:
            parts = list(parts[0])
        return cls(d, k, tuple(parts))

    @property
    def n_full(self) -> int:
        return self.constraints.count(FULL)

    @property
    def n_bisector(self) -> int:
        return self.constraints.count(BISECTOR)

    def check(self) -> None:
        if self.d < 1 or self.k < 1 or not self.constraints:
            raise InfeasibleSpec(f"need d >= 1, k >= 1 and at least one constraint: {self}")
        used = self.n_full * ((1 << self.k) - 1) + self.n_bisector
        if used != self.k * self.d:
            raise InfeasibleSpec(
                f"{self.n_full} full interval(s) x (2^{self.k} - 1) + {self.n_bisector} "
                f"bisector(s) = {used} crossings, but {self.k} hyperplanes meet the moment "
                f"curve in k*d = {self.k * self.d} points; the count must use all of them"
            )

    def label(self) -> str:
        return f"({self.d},{self.k},[{','.join(self.constraints)}])"

    def to_json(self) -> dict:
        return {"d": self.d, "k": self.k, "constraints": list(self.constraints)}


def default_intervals(kinds: Sequence[str], k: int) -> list:
    """Consecutive intervals with unit gaps: full ones of length 2^k,
    bisector ones of length 2."""
    out, lo = [], 0
    for kind in kinds:
        length = 1 << k if kind == FULL else 2
        out.append((lo, lo + length))
        lo += length + 1
    return out


def validate_intervals(intervals: Sequence, n: int) -> list:
    ivs = [(iv[0], iv[1]) for iv in intervals]
    if len(ivs) != n:
        raise DegenerateIntervals(f"expected {n} intervals, got {len(ivs)}")
    for lo, hi in ivs:
        if not lo < hi:
            raise DegenerateIntervals(f"empty interval [{lo}, {hi}]")
    for (_, hi), (lo, _) in zip(ivs, ivs[1:]):
        if lo < hi:
            raise DegenerateIntervals(f"intervals overlap or are out of order: {ivs}")
    return ivs


def enumerate_patterns(spec: ProblemSpec) -> list:
    """All crossing patterns with start label 0, in lexicographic order."""
    spec.check()
    k, d = spec.k, spec.d
    seqs = [s.seq for s in flip_sequences(k)]
    choices = [seqs if c == FULL else [(b,) for b in range(k)] for c in spec.constraints]
    out = []

    def rec(j, counts, acc):
        if j == len(choices):
            if all(c == d for c in counts):
                out.append(CrossingPattern(k, spec.constraints, tuple(acc)))
            return
        for s in choices[j]:
            nxt = list(counts)
            for b in s:
                nxt[b] += 1
            if max(nxt) > d:
                continue
            acc.append(s)
            rec(j + 1, nxt, acc)
            acc.pop()

    rec(0, [0] * k, [])
    return out



def reference_sequence(counts: Sequence[int]) -> tuple:
    """Lexicographically first flip sequence with exactly these counts."""
    k = len(counts)
    for s in flip_sequences(k):
        if flip_counts(s) == tuple(counts):
            return s.seq
    raise ValueError(f"no Hamiltonian flip sequence has counts {tuple(counts)}")


@dataclass(frozen=True)
class Classification:
    i1_type: tuple
    i2_type: Optional[tuple]
    bisector_index: Optional[int]
    case: Optional[int]


def classify(p: CrossingPattern, spec: ProblemSpec) -> Classification:
    """Bring the first full interval to its reference sequence and read off
    the types of the first two full intervals and the bisecting plane.

    A Hamiltonian flip sequence uses every bit, so no nontrivial relabeling
    fixes it and the relabeling is unique.  Patterns without full intervals
    get an empty type.
    """
    full = [j for j, c in enumerate(p.kinds) if c == FULL]
    if not full:
        bis = [s[0] for s in p.steps]
        return Classification((), None, bis[0] if bis else None, None)
    first = p.steps[full[0]]
    target_counts = tuple(sorted((first.count(i) for i in range(p.k)), reverse=True))
    ref = reference_sequence(target_counts)
    for perm in itertools.permutations(range(p.k)):
        if relabel(first, perm) == ref:
            q = p.relabeled(perm)
            break
    else:  # pragma: no cover - every count vector has a sorted relabeling
        raise AssertionError("reference relabeling not found")
    i1 = q.interval_counts(full[0])
    i2 = q.interval_counts(full[1]) if len(full) > 1 else None
    bis = [q.steps[j][0] for j, c in enumerate(q.kinds) if c == BISECTOR]
    bisector_index = bis[0] if bis else None
    case = None
    if (spec.d, spec.k, spec.constraints) == (5, 3, (FULL, FULL, BISECTOR)):
        case = TYPE_CASES.get((i1, i2))
    return Classification(i1, i2, bisector_index, case)


@dataclass(frozen=True)
class OrbitReport:
    spec: ProblemSpec
    representatives: tuple
    stabilizers: tuple
    classifications: tuple
    raw_count: int

    @property
    def orbit_count(self) -> int:
        return len(self.representatives)

    @property
    def theta(self) -> int:
        return self.orbit_count % 2

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json(),
            "orbit_count": self.orbit_count,
            "theta": self.theta,
            "raw_patterns": self.raw_count,
            "orbits": [
                {
                    "orbit_id": i,
                    "pattern": p.to_json(),
                    "stabilizer": s,
                    "i1_type": list(c.i1_type),
                    "i2_type": list(c.i2_type) if c.i2_type else None,
                    "bisector_index": c.bisector_index,
                    "claim_case": c.case,
                }
                for i, (p, s, c) in enumerate(zip(self.representatives, self.stabilizers,
                                                  self.classifications))
            ],
        }

    def csv_rows(self) -> list:
        rows = [("orbit_id", "i1_type", "i2_type", "bisector_index", "claim_case")]
        for i, c in enumerate(self.classifications):
            fmt = lambda t: "" if t is None else "-".join(map(str, t))  # noqa: E731
            rows.append((i, fmt(c.i1_type), fmt(c.i2_type),
                         "" if c.bisector_index is None else c.bisector_index,
                         "" if c.case is None else c.case))
        return rows


def enumerate_orbits(spec: ProblemSpec) -> OrbitReport:
    """Group orbits of zeros for the moment-curve measures of ``spec``."""
    raw = enumerate_patterns(spec)
    reps = sorted({canonical_pattern(p) for p in raw})
    return OrbitReport(
        spec=spec,
        representatives=tuple(reps),
        stabilizers=tuple(stabilizer_size(p) for p in reps),
        classifications=tuple(classify(p, spec) for p in reps),
        raw_count=len(raw),
    )


@dataclass(frozen=True)
class MatchRow:
    i1_type: tuple
    i2_type: tuple
    count: int
    case: Optional[int]


def match_table(spec_or_report) -> list:
    """Orbit counts per (first-interval type, second-interval type)."""
    report = spec_or_report
    if isinstance(spec_or_report, ProblemSpec):
        report = enumerate_orbits(spec_or_report)
    counts: dict = {}
    for c in report.classifications:
        key = (c.i1_type, c.i2_type)
        counts[key] = counts.get(key, 0) + 1
    rows = [MatchRow(a, b, n, TYPE_CASES.get((a, b)) if report.spec.label() == "(5,3,[F,F,B])"
                     else None) for (a, b), n in counts.items()]
    rows.sort(key=lambda r: (r.case or 0, tuple(-x for x in r.i1_type), r.i2_type or ()))
    return rows


def case_counts(rows: Sequence[MatchRow]) -> dict:
    """Collapse match-table rows onto type cases."""
    out: dict = {}
    for r in rows:
        if r.case is not None:
            out[r.case] = out.get(r.case, 0) + r.count
    return dict(sorted(out.items()))


# ---------------------------------------------------------------- realization

@dataclass(frozen=True)
class RealizedZero:
    pattern: CrossingPattern
    configuration: Configuration
    intervals: tuple
    crossings: tuple
    crossing_planes: tuple
    orientations: tuple
    residual: float
    exact_residual: float
    chart: tuple = field(default=())
    det_estimate: Optional[float] = None

    @property
    def d(self) -> int:
        return self.configuration.d

    def to_json(self) -> dict:
        return {
            "pattern": self.pattern.to_json(),
            "configuration": self.configuration.to_json(),
            "intervals": [[float(a), float(b)] for a, b in self.intervals],
            "crossings": [float(x) for x in self.crossings],
            "crossing_planes": list(self.crossing_planes),
            "residual": self.residual,
            "exact_residual": self.exact_residual,
            "det_estimate": self.det_estimate,
        }


def _measures_for(kinds, intervals, d):
    full, bis = [], []
    for kind, (a, b) in zip(kinds, intervals):
        mu = IntervalMeasure(d, float(a), float(b))
        (full if kind == FULL else bis).append(mu)
    return full, bis


def _crossing_positions(p: CrossingPattern, intervals) -> list:
    """(parameter, plane) pairs in curve order, exact when endpoints are."""
    out = []
    n = 1 << p.k
    for kind, steps, (a, b) in zip(p.kinds, p.steps, intervals):
        a, b = Fraction(a), Fraction(b)
        if kind == FULL:
            out.extend((a + (j + 1) * (b - a) / n, plane) for j, plane in enumerate(steps))
        else:
            out.append(((a + b) / 2, steps[0]))
    return out


def _orientations(start: int, k: int, d: int) -> tuple:
    # left of every root, orientation * prod(t - r) has sign orientation * (-1)^d
    base = -1 if d % 2 else 1
    return tuple(base if not start >> i & 1 else -base for i in range(k))


def _exact_residual(p: CrossingPattern, planes, intervals) -> Fraction:
    """Largest deviation of the exact orthant walk from the pattern's target."""
    worst = Fraction(0)
    n = 1 << p.k
    walks = p.walk()
    for kind, steps, (a, b), walk in zip(p.kinds, p.steps, intervals, walks):
        a, b = Fraction(a), Fraction(b)
        cuts = ([a + j * (b - a) / n for j in range(n + 1)] if kind == FULL
                else [a, (a + b) / 2, b])
        target = (b - a) / n
        masses: dict = {}
        for s, e, want in zip(cuts, cuts[1:], walk):
            mid = (s + e) / 2
            got = sum(1 << i for i, h in enumerate(planes) if side_on_curve(h, mid) < 0)
            if got != want:
                return Fraction(b - a)
            masses[got] = masses.get(got, 0) + (e - s)
        if kind == FULL:
            worst = max([worst] + [abs(masses.get(J, 0) - target) for J in range(n)])
        else:
            plane = steps[0]
            pos = sum(m for J, m in masses.items() if not J >> plane & 1)
            worst = max(worst, abs(2 * pos - (b - a)))
    return worst


def pattern_from_configuration(c: Configuration, intervals: Sequence, kinds: Sequence[str]):
    """Read the crossing pattern of ``c`` off the moment curve.

    Raises ``RealizationFailed`` if the orthant walk is not of zero type
    (a full interval not traversed by a Hamiltonian path, a bisector interval
    not crossed exactly once, or crossings between intervals).
    """
    k = c.k
    steps, start, prev_end = [], None, None
    for kind, (a, b) in zip(kinds, intervals):
        a, b = float(a), float(b)
        hits = sorted((t, i) for i, h in enumerate(c.planes) if not h.at_infinity
                      for t in curve_crossings(h, (a, b)))
        if hits and (hits[0][0] <= a or hits[-1][0] >= b):
            raise RealizationFailed(f"crossing on the boundary of [{a}, {b}]")
        first_mid = (a + hits[0][0]) / 2 if hits else (a + b) / 2
        label = sum(1 << i for i, h in enumerate(c.planes) if side_on_curve(h, first_mid) < 0)
        if start is None:
            start = label
        elif label != prev_end:
            raise RealizationFailed("orthant label changes between intervals")
        seq = tuple(i for _, i in hits)
        if kind == FULL and not is_hamiltonian(seq, k, label):
            raise RealizationFailed(f"interval [{a}, {b}] is not traversed by a Gray path: {seq}")
        if kind == BISECTOR and len(seq) != 1:
            raise RealizationFailed(f"bisector interval [{a}, {b}] crossed {len(seq)} times")
        for i in seq:
            label ^= 1 << i
        prev_end = label
        steps.append(seq)
    return CrossingPattern(k, tuple(kinds), tuple(steps), start)


def realize(pattern: CrossingPattern, intervals: Optional[Sequence] = None,
            measures: Optional[Sequence] = None, tol: float = RESIDUAL_TOL) -> RealizedZero:
    """Explicit hyperplanes whose zero pattern is ``pattern``.

    Crossings are placed at the equal-measure subdivision points of each
    interval (the midpoint for bisector intervals) and each plane is the
    hyperplane through its crossings, oriented to match the start label.
    The construction is exact over the rationals; the returned residual is
    the float test map on ``measures`` (default: the interval measures),
    relative to the largest total mass.
    """
    k = pattern.k
    totals = pattern.plane_totals()
    if len(set(totals)) != 1:
        raise InfeasibleSpec(f"planes use unequal numbers of crossings: {totals}")
    d = totals[0]
    if intervals is None:
        intervals = default_intervals(pattern.kinds, k)
    intervals = validate_intervals(intervals, len(pattern.kinds))
    exact_ivs = [(Fraction(a), Fraction(b)) for a, b in intervals]

    positions = _crossing_positions(pattern, exact_ivs)
    roots = [[t for t, i in positions if i == plane] for plane in range(k)]
    orient = _orientations(pattern.start, k, d)
    exact_planes = [hyperplane_from_roots(roots[i], orient[i], d) for i in range(k)]
    exact_res = _exact_residual(pattern, exact_planes, exact_ivs)

    config = Configuration(d, tuple(h.to_float() for h in exact_planes))
    if measures is None:
        full, bis = _measures_for(pattern.kinds, intervals, d)
    else:
        full = [m for m, kind in zip(measures, pattern.kinds) if kind == FULL]
        bis = [m for m, kind in zip(measures, pattern.kinds) if kind == BISECTOR]
    tv = full_test_map(config, full, bis)
    scale = max(m.total for m in full + bis)
    residual = tv.norm / scale
    if exact_res != 0 or residual > tol:
        raise RealizationFailed(
            f"pattern {pattern.steps}: exact residual {exact_res}, float residual {residual:.3g}")
    back = pattern_from_configuration(config, intervals, pattern.kinds)
    if back != pattern:
        raise RealizationFailed(f"orthant walk gives {back.steps}, expected {pattern.steps}")
    return RealizedZero(
        pattern=pattern,
        configuration=config,
        intervals=tuple((float(a), float(b)) for a, b in intervals),
        crossings=tuple(float(t) for t, _ in positions),
        crossing_planes=tuple(i for _, i in positions),
        orientations=orient,
        residual=float(residual),
        exact_residual=float(exact_res),
        chart=tuple(range(len(positions))),
    )


# ---------------------------------------------------------------- Jacobian

@dataclass(frozen=True)
class JacobianCheck:
    det_estimate: float
    ok: bool
    steps: tuple


def _interval_of(z: RealizedZero, t: float) -> tuple:
    for a, b in z.intervals:
        if a <= t <= b:
            return a, b
    raise ValueError(f"crossing {t} outside every interval")


def _test_vector_at(z: RealizedZero, crossings: Sequence[float]) -> np.ndarray:
    k = z.configuration.k
    roots = [[t for t, i in zip(crossings, z.crossing_planes) if i == plane] for plane in range(k)]
    planes = tuple(hyperplane_from_roots(roots[i], z.orientations[i], z.d) for i in range(k))
    full, bis = _measures_for(z.pattern.kinds, z.intervals, z.d)
    return full_test_map(Configuration(z.d, planes), full, bis).vector


def _order_preserved(z: RealizedZero, moved: Sequence[float], idx: int) -> bool:
    a, b = _interval_of(z, z.crossings[idx])
    t = moved[idx]
    if not a < t < b:
        return False
    return np.argsort(moved, kind="stable").tolist() == np.argsort(z.crossings, kind="stable").tolist()


def crossing_jacobian(z: RealizedZero, step_scale: float = 1e-5, max_retries: int = 3):
    """Central-difference Jacobian of the test map in the crossing chart.

    Column ``c`` differentiates with respect to crossing ``z.chart[c]``; the
    step is ``step_scale`` times the length of that crossing's interval and
    is halved (at most ``max_retries`` times) if the perturbation would
    reorder crossings or leave the interval.
    """
    base = list(z.crossings)
    chart = z.chart or tuple(range(len(base)))
    cols, steps = [], []
    for idx in chart:
        a, b = _interval_of(z, base[idx])
        h = step_scale * (b - a)
        for _ in range(max_retries + 1):
            plus, minus = list(base), list(base)
            plus[idx] += h
            minus[idx] -= h
            if _order_preserved(z, plus, idx) and _order_preserved(z, minus, idx):
                break
            h /= 2
        else:
            raise ChartBreakdown(f"crossing {idx} cannot move without reordering the chart")
        cols.append((_test_vector_at(z, plus) - _test_vector_at(z, minus)) / (2 * h))
        steps.append(h)
    return np.column_stack(cols), tuple(steps)


def jacobian_nondegenerate(z: RealizedZero, step_scale: float = 1e-5,
                           threshold: float = JACOBIAN_THRESHOLD) -> JacobianCheck:
    """Determinant of the row-normalized crossing Jacobian."""
    jac, steps = crossing_jacobian(z, step_scale)
    if jac.shape[0] != jac.shape[1]:
        raise ValueError(f"Jacobian is {jac.shape}, not square: the constraints do not use all crossings")
    norms = np.linalg.norm(jac, axis=1)
    if np.any(norms == 0):
        return JacobianCheck(0.0, False, steps)
    det = float(np.linalg.det(jac / norms[:, None]))
    return JacobianCheck(det, abs(det) > threshold, steps)


def verify_all(spec: ProblemSpec, intervals: Optional[Sequence] = None, workers: int = 1) -> list:
    """Realize every orbit of ``spec`` and check its Jacobian."""
    report = enumerate_orbits(spec)

    def one(p):
        z = realize(p, intervals)
        jc = jacobian_nondegenerate(z)
        return RealizedZero(**{**z.__dict__, "det_estimate": jc.det_estimate}), jc

    if workers > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(one, report.representatives))
    return [one(p) for p in report.representatives]


# ---------------------------------------------------------------- corollary

@dataclass(frozen=True)
class CorollaryResult:
    bisector: OrientedHyperplane
    planes: tuple
    masses: tuple
    zero: RealizedZero
    theta: int


def corollary_pipeline(mu: IntervalMeasure, nu3: Optional[IntervalMeasure] = None,
                       orbit_index: int = 0, tol: float = RESIDUAL_TOL) -> CorollaryResult:
    """Four hyperplanes equipartitioning one interval measure in R^5.

    ``H`` halves ``mu``; the restrictions ``mu+`` and ``mu-`` become the two
    fully equipartitioned measures of the three-plane problem, and ``nu3``
    (default: an interval just past ``mu``) the bisector measure.
    """
    if not isinstance(mu, IntervalMeasure) or mu.d != 5:
        raise ValueError("the four-plane reduction needs an interval measure in R^5")
    lo, hi = Fraction(mu.lo), Fraction(mu.hi)
    mid = (lo + hi) / 2
    H = OrientedHyperplane((-mid, 1, 0, 0, 0, 0))
    if nu3 is None:
        nu3 = IntervalMeasure(5, float(hi) + 1.0, float(hi) + 3.0)
    report = enumerate_orbits(ProblemSpec(5, 3, (FULL, FULL, BISECTOR)))
    pattern = report.representatives[orbit_index]
    z = realize(pattern, [(lo, mid), (mid, hi), (nu3.lo, nu3.hi)])
    planes = z.configuration.planes + (H.to_float(),)
    masses = orthant_masses(mu, Configuration(5, planes))
    target = mu.total / 16
    if np.max(np.abs(masses - target)) > tol * target:
        raise RealizationFailed(f"orthant masses {masses} are not all {target}")
    return CorollaryResult(H, planes, tuple(float(m) for m in masses), z, report.theta)


# ---------------------------------------------------------------- invariance

@dataclass(frozen=True)
class InvarianceResult:
    ok: bool
    counts: tuple
    thetas: tuple
    placements: tuple

    def __bool__(self) -> bool:
        return self.ok


def random_placement(kinds: Sequence[str], rng: np.random.Generator) -> list:
    """Disjoint consecutive intervals with random start, lengths and gaps.

    Placements stay in a window of roughly [-5, 11].  Float hyperplanes are
    unit coefficient vectors in the monomial basis, so rounding moves a
    cluster of crossings near parameter t by about eps * |t|^d / |p'(t)|;
    far from the origin that alone exceeds the 1e-9 residual bound even
    though the exact construction is perfect.
    """
    lo = float(rng.uniform(-5.0, 0.0))
    out = []
    for _ in kinds:
        length = float(rng.uniform(1.0, 3.5))
        out.append((lo, lo + length))
        lo += length + float(rng.uniform(0.1, 1.5))
    return out


def census_at(spec: ProblemSpec, intervals: Sequence) -> int:
    """Count orbits by realizing every canonical pattern on ``intervals``
    and canonicalizing the patterns read back from the geometry."""
    report = enumerate_orbits(spec)
    seen = set()
    for p in report.representatives:
        z = realize(p, intervals)
        seen.add(canonical_pattern(pattern_from_configuration(
            z.configuration, z.intervals, spec.constraints)))
    return len(seen)


def perturbation_parity_invariance(spec: ProblemSpec, trials: int = 100, seed: int = 0,
                                   placements: Optional[Sequence] = None) -> InvarianceResult:
    """Check that the orbit census survives repositioning the intervals.

    Explicit ``placements`` are validated before any trial runs; otherwise
    ``trials`` random placements are drawn from ``seed``.
    """
    spec.check()
    if placements is not None:
        placements = [validate_intervals(p, len(spec.constraints)) for p in placements]
    else:
        rng = np.random.default_rng(seed)
        placements = [random_placement(spec.constraints, rng) for _ in range(trials)]
    baseline = enumerate_orbits(spec).orbit_count
    counts = tuple(census_at(spec, p) for p in placements)
    thetas = tuple(c % 2 for c in counts)
    ok = all(c == baseline for c in counts)
    return InvarianceResult(ok, counts, thetas, tuple(tuple(p) for p in placements))
