"""Test measures and hyperorthant masses.

Interval measures are push-forwards of Lebesgue measure on a parameter
interval of the moment curve.  Their orthant masses are computed exactly as
sums of sub-interval lengths between consecutive curve crossings, not by
quadrature.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from .errors import DegenerateTangency, DimensionMismatch, InvalidDimension
from .geometry import Configuration, OrientedHyperplane, label_of, side_on_curve

# candidate roots with |imag| below this (relative) are treated as real
_IMAG_TOL = 1e-6


@dataclass(frozen=True)
class IntervalMeasure:
    d: int
    lo: float
    hi: float

    def __post_init__(self):
        if self.d < 1:
            raise InvalidDimension(f"d must be >= 1, got {self.d}")
        if not self.lo < self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def total(self) -> float:
        return self.hi - self.lo

    def to_json(self) -> dict:
        return {"kind": "interval", "d": self.d, "lo": float(self.lo), "hi": float(self.hi)}


@dataclass(frozen=True)
class DiscreteMeasure:
    """Weighted point masses.

    Not a continuous measure, so none of the equipartition theorems apply;
    useful for desk-scale checks in general position.
    """

    points: tuple

    def __post_init__(self):
        pts = tuple((tuple(float(v) for v in x), float(w)) for x, w in self.points)
        if not pts:
            raise ValueError("a discrete measure needs at least one point")
        dims = {len(x) for x, _ in pts}
        if len(dims) != 1:
            raise DimensionMismatch(f"points of mixed dimension {sorted(dims)}")
        if any(w <= 0 for _, w in pts):
            raise ValueError("weights must be positive")
        object.__setattr__(self, "points", pts)

    @property
    def d(self) -> int:
        return len(self.points[0][0])

    @property
    def total(self) -> float:
        return sum(w for _, w in self.points)

    def to_json(self) -> dict:
        return {"kind": "discrete", "points": [{"x": list(x), "w": w} for x, w in self.points]}


Measure = Union[IntervalMeasure, DiscreteMeasure]


def measure_from_json(obj: dict) -> Measure:
    kind = obj.get("kind")
    if kind == "interval":
        return IntervalMeasure(int(obj["d"]), float(obj["lo"]), float(obj["hi"]))
    if kind == "discrete":
        return DiscreteMeasure(tuple((p["x"], p["w"]) for p in obj["points"]))
    raise ValueError(f"unknown measure kind {kind!r}")


def _float_coeffs(h: OrientedHyperplane) -> np.ndarray:
    c = np.asarray([float(x) for x in h.coeffs])
    nz = np.nonzero(c)[0]
    return c[: nz[-1] + 1]


def _candidate_roots(h: OrientedHyperplane) -> np.ndarray:
    """Real parts of (nearly) real polynomial roots, polished by Newton steps."""
    c = _float_coeffs(h)
    if len(c) < 2:
        return np.empty(0)
    roots = np.polynomial.polynomial.polyroots(c)
    real = roots[np.abs(roots.imag) <= _IMAG_TOL * np.maximum(1.0, np.abs(roots))].real
    dc = np.polynomial.polynomial.polyder(c)
    for _ in range(3):
        p = np.polynomial.polynomial.polyval(real, c)
        dp = np.polynomial.polynomial.polyval(real, dc)
        step = np.divide(p, dp, out=np.zeros_like(p), where=dp != 0)
        # Newton may run away near a double root; keep the raw value then
        ok = np.abs(step) < 1e-3 * np.maximum(1.0, np.abs(real))
        real = np.where(ok, real - step, real)
    return np.sort(real)


def curve_crossings(h: OrientedHyperplane, window: Sequence[float]) -> list:
    """Parameters in ``window`` where the moment curve meets ``h``.

    Every returned crossing is simple (the side function changes sign);
    a real root without a sign change raises :class:`DegenerateTangency`.
    """
    a, b = float(window[0]), float(window[1])
    if h.at_infinity:
        raise ValueError("hyperplane at infinity has no curve crossings")
    c = _float_coeffs(h)
    cands = _candidate_roots(h)
    span = max(1.0, abs(a), abs(b))
    out = []
    for i, t in enumerate(cands):
        if t < a - 1e-12 * span or t > b + 1e-12 * span:
            continue
        gap = min([abs(t - s) for j, s in enumerate(cands) if j != i] or [1.0])
        delta = min(1e-7 * max(1.0, abs(t)), gap / 3 if gap > 0 else 1e-7)
        left = np.polynomial.polynomial.polyval(t - delta, c)
        right = np.polynomial.polynomial.polyval(t + delta, c)
        if left * right < 0:
            if not out or t - out[-1] > 1e-12 * span:
                out.append(float(min(max(t, a), b)))
            continue
        # no sign change: a double real root, or the real part of a
        # complex pair close to the axis
        val = abs(np.polynomial.polynomial.polyval(t, c))
        mag = np.polynomial.polynomial.polyval(abs(t), np.abs(c))
        if val <= 1e-9 * mag:
            raise DegenerateTangency(f"non-simple crossing near t={t:.12g}")
    return out


def _signs_between_roots(h: OrientedHyperplane, mids: np.ndarray,
                         roots: Optional[np.ndarray] = None) -> np.ndarray:
    """Sign of the side function at points away from its real roots.

    Read off the factorization (leading coefficient times one sign flip per
    real root to the right) rather than by evaluation, which is unreliable
    within rounding distance of clustered roots.  Consistent with the
    breakpoints by construction: ``h`` and its antipode always get
    opposite signs.
    """
    if h.at_infinity:
        return np.full(len(mids), 1 if float(h.a0) >= 0 else -1)
    c = _float_coeffs(h)
    if roots is None:
        roots = _candidate_roots(h)
    right = (roots[None, :] > mids[:, None]).sum(axis=1)
    return np.where(right % 2 == 0, 1, -1) * (1 if c[-1] > 0 else -1)


def _interval_masses(mu: IntervalMeasure, c: Configuration) -> np.ndarray:
    k = c.k
    pts = [float(mu.lo), float(mu.hi)]
    roots = [None if h.at_infinity else _candidate_roots(h) for h in c.planes]
    for r in roots:
        if r is None:
            continue
        pts.extend(r[(r > mu.lo) & (r < mu.hi)].tolist())
    pts = np.unique(np.asarray(pts))
    lengths = np.diff(pts)
    mids = (pts[:-1] + pts[1:]) / 2
    labels = np.zeros(len(mids), dtype=np.int64)
    for i, h in enumerate(c.planes):
        labels |= (_signs_between_roots(h, mids, roots[i]) < 0).astype(np.int64) << i
    return np.bincount(labels, weights=lengths, minlength=1 << k).astype(float)


def _discrete_masses(mu: DiscreteMeasure, c: Configuration) -> np.ndarray:
    out = np.zeros(1 << c.k)
    for x, w in mu.points:
        out[label_of(c, x)] += w
    return out


def orthant_masses(mu: Measure, c: Configuration) -> np.ndarray:
    """Masses of all 2^k hyperorthants, indexed by label."""
    if mu.d != c.d:
        raise DimensionMismatch(f"measure in R^{mu.d}, configuration in R^{c.d}")
    if isinstance(mu, IntervalMeasure):
        return _interval_masses(mu, c)
    return _discrete_masses(mu, c)


def orthant_mass(mu: Measure, c: Configuration, label: int) -> float:
    if not 0 <= label < 1 << c.k:
        raise ValueError(f"label {label} out of range for k={c.k}")
    return float(orthant_masses(mu, c)[label])


def bisector_defect(mu: Measure, h: OrientedHyperplane) -> float:
    """``mu(h+) - mu(h-)``."""
    m = orthant_masses(mu, Configuration(h.d, (h,)))
    return float(m[0] - m[1])
