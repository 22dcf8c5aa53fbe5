"""Mod-2 degree of PL maps by zero counts and ray crossings.

``zero_parity`` counts the n-simplices whose image contains the origin.
``ray_parity`` counts the boundary (n-1)-simplices whose image meets a half
ray from the origin; for a generic map the two agree.  With the default ray
``e_n`` the ray count is the number of zeros of the first n-1 coordinates
``r'`` on the boundary at which the last coordinate ``r''`` is positive,
which is what the decomposition and symmetry tools below split up.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Optional, Sequence, Union

import numpy as np

from .._linalg import affine_coordinates, is_exact, origin_in_hull, solve
from ..errors import GenericityError, InvalidSymmetry, NonTransverseRay, ShieldViolation
from .complex import PLCycle, PLManifoldMap, _faces

TOL = 1e-12
MAX_JITTER = 20


@dataclass(frozen=True)
class RaySpec:
    direction: tuple

    def __post_init__(self):
        d = tuple(self.direction)
        if not d or all(x == 0 for x in d):
            raise ValueError("ray direction must be nonzero")
        object.__setattr__(self, "direction", d)

    @classmethod
    def axis(cls, n: int, i: Optional[int] = None) -> "RaySpec":
        i = n - 1 if i is None else i
        return cls(tuple(1 if j == i else 0 for j in range(n)))


def zero_parity(m: PLManifoldMap) -> int:
    """Parity of the number of simplices whose image contains 0."""
    m.check_generic()
    count = 0
    for s in m.simplices:
        verdict = origin_in_hull(m.points(s))
        if verdict is None:
            raise GenericityError(f"0 is too close to the image of simplex {s}", s)
        count += bool(verdict)
    return count & 1


def _hits(points: Sequence, v: Sequence, face) -> bool:
    """Does the image of ``face`` meet the half ray ``{lam v : lam >= 0}``?"""
    n = len(v)
    k = len(points)
    A = [[p[i] for p in points] + [-v[i]] for i in range(n)] + [[1] * k + [0]]
    b = [0] * n + [1]
    status, x = solve(A, b, TOL)
    if status == "inconsistent":
        return False
    if status == "underdetermined":
        raise NonTransverseRay(f"ray lies in the affine hull of the image of {face}", face)
    exact = is_exact(points) and is_exact(v)
    mu, lam = x[:-1], x[-1]
    tol = 0 if exact else TOL
    if lam < -tol or min(mu) < -tol:
        return False
    if lam <= tol:
        raise GenericityError(f"0 lies on (or too close to) the image of {face}", face)
    if min(mu) <= tol:
        raise NonTransverseRay(f"ray passes through the boundary of the image of {face}", face)
    return True


def _count(cycle: PLCycle, v: Sequence) -> int:
    return sum(_hits(cycle.points(f), v, f) for f in cycle.facets) & 1


def _jittered(v: Sequence, rng: np.random.Generator, attempt: int, exact: bool) -> tuple:
    scale = 1e-3 * attempt
    if exact:
        den = 10 ** 6
        return tuple(Fraction(x) + Fraction(int(round(scale * den * rng.standard_normal())), den)
                     for x in v)
    norm = float(np.linalg.norm(np.asarray(v, dtype=float)))
    return tuple(float(x) + scale * norm * float(rng.standard_normal()) for x in v)


def _seed_for(cycle: PLCycle, v) -> int:
    key = repr((cycle.facets, cycle.values, tuple(v))).encode()
    return int.from_bytes(hashlib.sha256(key).digest()[:8], "little")


def ray_parity(boundary: Union[PLManifoldMap, PLCycle], ray: Optional[RaySpec] = None,
               jitter: bool = True) -> int:
    """Parity of boundary simplices whose image meets the ray.

    On a non-transverse ray the direction is perturbed, up to
    ``MAX_JITTER`` times, by a generator seeded from a hash of the input, so
    repeated calls give the same answer.
    """
    cycle = boundary.boundary_cycle() if isinstance(boundary, PLManifoldMap) else boundary
    ray = ray or RaySpec.axis(cycle.n)
    if len(ray.direction) != cycle.n:
        raise ValueError(f"ray in R^{len(ray.direction)} for values in R^{cycle.n}")
    v = ray.direction
    try:
        return _count(cycle, v)
    except NonTransverseRay:
        if not jitter:
            raise
    rng = np.random.default_rng(_seed_for(cycle, v))
    exact = is_exact(cycle.values) and is_exact(v)
    last = None
    for attempt in range(1, MAX_JITTER + 1):
        try:
            return _count(cycle, _jittered(v, rng, attempt, exact))
        except NonTransverseRay as err:
            last = err
    raise NonTransverseRay(f"no transverse ray after {MAX_JITTER} jitters: {last}")


@dataclass(frozen=True)
class BoundaryIdentity:
    lhs: int
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def boundary_identity(m: PLManifoldMap, ray: Optional[RaySpec] = None) -> BoundaryIdentity:
    """Zero parity of the map against the ray-crossing parity of its boundary."""
    return BoundaryIdentity(zero_parity(m), ray_parity(m, ray))


# ---------------------------------------------------------------- splitting

def _split_values(values: Sequence, ray: RaySpec):
    """Project values onto (r', r''): r'' along the ray, r' complementary.

    For a coordinate-axis ray the projection is a coordinate deletion and
    keeps exact values exact.
    """
    v = ray.direction
    nz = [i for i, x in enumerate(v) if x != 0]
    if len(nz) == 1:
        i = nz[0]
        s = 1 if v[i] > 0 else -1
        return ([tuple(x for j, x in enumerate(p) if j != i) for p in values],
                [s * p[i] for p in values])
    u = np.asarray(v, dtype=float)
    u = u / np.linalg.norm(u)
    q, _ = np.linalg.qr(np.column_stack([u, np.eye(len(u))]))
    basis = q[:, 1:len(u)]
    arr = np.asarray(values, dtype=float)
    return [tuple(r) for r in arr @ basis], [float(x) for x in arr @ u]


@dataclass(frozen=True)
class DecompositionPiece:
    """Boundary facets forming one piece; ``shield`` optionally names a
    coordinate of ``r'`` promised nonzero on the piece's frontier."""

    facets: tuple
    shield: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "facets", tuple(sorted(tuple(sorted(f)) for f in self.facets)))


@dataclass(frozen=True)
class DecompositionResult:
    parities: tuple
    total: int
    zero_parity: int

    @property
    def equal(self) -> bool:
        return self.total == self.zero_parity


def frontier(piece_facets: Sequence, all_facets: Sequence) -> list:
    """(n-2)-faces shared by a facet of the piece and a facet outside it."""
    inside = set(piece_facets)
    size = len(piece_facets[0]) - 1 if piece_facets else 0
    if size == 0:
        return []
    mine = {f for s in inside for f in _faces(s, size)}
    theirs = {f for s in all_facets if s not in inside for f in _faces(s, size)}
    return sorted(mine & theirs)


def _check_frontier(piece: DecompositionPiece, faces, rprime, n_prime: int) -> None:
    for f in faces:
        pts = [rprime[v] for v in f]
        if piece.shield is not None:
            if not 0 <= piece.shield < n_prime:
                raise ValueError(f"shield coordinate {piece.shield} is not a coordinate of r'")
            vals = [p[piece.shield] for p in pts]
            tol = 0 if is_exact(vals) else TOL
            if not (min(vals) > tol or max(vals) < -tol):
                raise ShieldViolation(
                    f"declared shield coordinate {piece.shield} vanishes on frontier face {f}", f)
            continue
        verdict = origin_in_hull(pts)
        if verdict is None or verdict:
            raise ShieldViolation(
                f"r' has a zero on frontier face {f} and no shield is declared", f)


def decompose_parity(m: PLManifoldMap, pieces: Sequence[DecompositionPiece],
                     ray: Optional[RaySpec] = None) -> DecompositionResult:
    """Split the boundary ray count over interior-disjoint pieces.

    Every piece frontier is validated first: either ``r'`` has no zero on
    it or a declared shield coordinate is nonzero there.  Anything else
    raises :class:`ShieldViolation` instead of returning a parity.
    """
    ray = ray or RaySpec.axis(m.n)
    all_facets = m.boundary
    seen = [f for p in pieces for f in p.facets]
    if sorted(seen) != sorted(all_facets):
        raise ValueError("pieces must cover the boundary facets exactly once")
    rprime, _ = _split_values(m.values, ray)
    for p in pieces:
        _check_frontier(p, frontier(p.facets, all_facets), rprime, m.n - 1)
    parities = tuple(ray_parity(PLCycle(m.n, p.facets, m.values), ray, jitter=False)
                     for p in pieces)
    return DecompositionResult(parities, sum(parities) & 1, zero_parity(m))


# ---------------------------------------------------------------- symmetry

@dataclass(frozen=True)
class SymmetricCancel:
    value: int
    half_zero_parity: int
    direct: int
    a: int

    @property
    def consistent(self) -> bool:
        return self.value == self.direct


def _rprime_zero(pts_prime, pts_last, face):
    """Barycentric zero of r' on a facet and the value of r'' there, or None."""
    verdict = origin_in_hull(pts_prime)
    if verdict is None:
        raise GenericityError(f"r' zero too close to the boundary of {face}", face)
    if not verdict:
        return None
    status, lam = affine_coordinates(pts_prime, tol=TOL)
    if status != "unique":
        raise GenericityError(f"r' is degenerate on {face}", face)
    val = sum(l * x for l, x in zip(lam, pts_last))
    tol = 0 if is_exact(list(lam) + list(pts_last)) else TOL
    if abs(val) <= tol:
        raise GenericityError(f"0 lies in the image of {face}", face)
    return 1 if val > 0 else -1


def symmetric_cancel(m: PLManifoldMap, half1: Sequence, half2: Sequence,
                     beta: Union[Mapping[int, int], Callable[[int], int]], a: int,
                     ray: Optional[RaySpec] = None) -> SymmetricCancel:
    """Reduce the ray count on ``half1 + half2`` to a zero count on ``half1``.

    ``beta`` is a vertex map carrying ``half1`` onto ``half2``.  It must
    carry the zeros of ``r'`` in ``half1`` bijectively to those in ``half2``
    with ``r''`` multiplied by ``(-1)^a`` there; the ray count is then
    ``a`` times the parity of the zeros of ``r'`` on ``half1``.
    """
    if a not in (0, 1):
        raise ValueError("a acts as a mod-2 scalar and must be 0 or 1")
    ray = ray or RaySpec.axis(m.n)
    b = beta if callable(beta) else beta.__getitem__
    h1 = [tuple(sorted(f)) for f in half1]
    h2 = {tuple(sorted(f)) for f in half2}
    if len(h2) != len(h1) or {tuple(sorted(b(v) for v in f)) for f in h1} != h2:
        raise InvalidSymmetry("beta does not map the first half onto the second")
    rprime, rlast = _split_values(m.values, ray)

    # r' must not vanish on the (n-2)-faces of either half
    for half in (h1, sorted(h2)):
        for face in {g for f in half if len(f) > 1 for g in _faces(f, len(f) - 1)}:
            verdict = origin_in_hull([rprime[v] for v in face])
            if verdict is None or verdict:
                raise ShieldViolation(f"r' vanishes on the sub-frontier face {face}", face)

    def zero_sign(f):
        return _rprime_zero([rprime[v] for v in f], [rlast[v] for v in f], f)

    zeros1 = 0
    want = 1 if a == 0 else -1
    for f in h1:
        s1 = zero_sign(f)
        img = tuple(sorted(b(v) for v in f))
        s2 = zero_sign(img)
        if (s1 is None) != (s2 is None):
            raise InvalidSymmetry(f"beta does not match the zeros of r' on {f} and {img}")
        if s1 is None:
            continue
        zeros1 += 1
        if s2 != want * s1:
            raise InvalidSymmetry(
                f"r'' does not transform by (-1)^{a} between the zeros on {f} and {img}")
    half_parity = zeros1 & 1
    direct = ray_parity(PLCycle(m.n, tuple(h1) + tuple(sorted(h2)), m.values), ray, jitter=False)
    return SymmetricCancel(a * half_parity, half_parity, direct, a)
