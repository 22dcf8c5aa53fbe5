"""Mesh generators, random maps and the Borsuk-Ulam reduction.

The cube ``[-N/2, N/2]^n`` (integer grid coordinates) is cut by the Kuhn
triangulation: every unit cell with lower corner ``c`` is split into the
``n!`` simplices ``c, c + e_p1, c + e_p1 + e_p2, ...``.  For even ``N`` this
triangulation is invariant under ``x -> -x``, which the Borsuk-Ulam tools
rely on.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..errors import GenericityError, NonTransverseRay, ShieldViolation
from .complex import PLManifoldMap
from .degree import (DecompositionPiece, RaySpec, boundary_identity, decompose_parity,
                     ray_parity, symmetric_cancel, zero_parity)

VALUE_RANGE = 12
MAX_RESAMPLES = 200


@dataclass(frozen=True)
class Grid:
    n: int
    coords: tuple
    simplices: tuple

    def index(self) -> dict:
        return {c: i for i, c in enumerate(self.coords)}


def kuhn_cube(n: int, size: int = 2) -> Grid:
    if size < 1:
        raise ValueError("grid size must be positive")
    half = size // 2
    lo = -half
    coords = sorted(itertools.product(range(lo, lo + size + 1), repeat=n))
    idx = {c: i for i, c in enumerate(coords)}
    simplices = []
    for corner in itertools.product(range(lo, lo + size), repeat=n):
        for perm in itertools.permutations(range(n)):
            v = list(corner)
            simplex = [idx[tuple(v)]]
            for axis in perm:
                v[axis] += 1
                simplex.append(idx[tuple(v)])
            simplices.append(tuple(sorted(simplex)))
    return Grid(n, tuple(coords), tuple(simplices))


def _on_boundary(c, half) -> bool:
    return any(abs(x) == half for x in c)


def random_values(grid: Grid, rng: np.random.Generator, odd_boundary: bool = False,
                  bound: int = VALUE_RANGE) -> list:
    """Random integer vertex values, antipodally odd on the boundary if asked."""
    half = max(abs(x) for c in grid.coords for x in c)
    idx = grid.index()
    values = [None] * len(grid.coords)
    for i, c in enumerate(grid.coords):
        if values[i] is not None:
            continue
        w = tuple(int(x) for x in rng.integers(-bound, bound + 1, size=grid.n))
        while all(x == 0 for x in w):
            w = tuple(int(x) for x in rng.integers(-bound, bound + 1, size=grid.n))
        values[i] = w
        if odd_boundary and _on_boundary(c, half):
            values[idx[tuple(-x for x in c)]] = tuple(-x for x in w)
    return values


def random_generic_map(n: int, rng: np.random.Generator, odd_boundary: bool = False,
                       size: int = 2) -> PLManifoldMap:
    """Random integer map on the Kuhn cube, resampled until generic."""
    grid = kuhn_cube(n, size)
    for _ in range(MAX_RESAMPLES):
        m = PLManifoldMap(n, grid.simplices, random_values(grid, rng, odd_boundary), grid.coords)
        try:
            m.check_generic()
        except GenericityError:
            continue
        return m
    raise GenericityError(f"no generic map after {MAX_RESAMPLES} samples")


def hemispheres(m: PLManifoldMap, axis: int):
    """Boundary facets split by the sign of the centroid's ``axis`` coordinate."""
    upper, lower = [], []
    for f in m.boundary:
        s = sum(m.coords[v][axis] for v in f)
        if s == 0:
            raise GenericityError(f"boundary facet {f} straddles the splitting hyperplane", f)
        (upper if s > 0 else lower).append(f)
    return upper, lower


def antipodal_vertex_map(m: PLManifoldMap) -> dict:
    idx = {c: i for i, c in enumerate(m.coords)}
    out = {}
    for i, c in enumerate(m.coords):
        j = idx.get(tuple(-x for x in c))
        if j is not None:
            out[i] = j
    return out


def hemisphere_map(m: PLManifoldMap, upper) -> PLManifoldMap:
    """The upper hemisphere as a PL manifold with values ``r'`` (last coordinate dropped)."""
    used = sorted({v for f in upper for v in f})
    relabel = {v: i for i, v in enumerate(used)}
    return PLManifoldMap(
        m.n - 1,
        [tuple(relabel[v] for v in f) for f in upper],
        [m.values[v][:-1] for v in used],
        [m.coords[v] for v in used],
    )


@dataclass(frozen=True)
class ReductionStep:
    n: int
    zero_parity: int
    ray_parity: int
    hemisphere_parity: Optional[int]


def bu_reduction(m: PLManifoldMap) -> list:
    """Follow the Borsuk-Ulam induction down to dimension 1.

    At each level: zero parity, boundary ray parity along the last axis, and
    the antipodal cancellation (a = 1) that leaves the zero parity of ``r'``
    on the upper hemisphere, which is the next level's problem.
    """
    steps = []
    cur = m
    while True:
        zp = zero_parity(cur)
        rp = ray_parity(cur, RaySpec.axis(cur.n), jitter=False)
        if cur.n == 1:
            steps.append(ReductionStep(1, zp, rp, None))
            return steps
        # split along x_n, then x_{n-1} on the equator, and so on
        upper, lower = hemispheres(cur, cur.n - 1)
        sc = symmetric_cancel(cur, upper, lower, antipodal_vertex_map(cur), 1)
        if not sc.consistent:
            raise AssertionError("antipodal cancellation disagrees with the direct ray count")
        steps.append(ReductionStep(cur.n, zp, rp, sc.value))
        cur = hemisphere_map(cur, upper)


@dataclass(frozen=True)
class BUReport:
    n: int
    seed: int
    trials: int
    parities: tuple
    resamples: int

    @property
    def parity(self) -> Optional[int]:
        return self.parities[0] if len(set(self.parities)) == 1 else None

    @property
    def ok(self) -> bool:
        return self.parity == 1

    def to_json(self) -> dict:
        return {"n": self.n, "seed": self.seed, "trials": self.trials, "parity": self.parity,
                "ok": self.ok, "resamples": self.resamples}


def bu_check(n: int, seed: int = 0, trials: int = 100) -> BUReport:
    """Zero parity of random boundary-odd maps on the n-cube, each checked
    against the full recursive reduction."""
    rng = np.random.default_rng(seed)
    parities, resamples = [], 0
    while len(parities) < trials:
        m = random_generic_map(n, rng, odd_boundary=True)
        try:
            steps = bu_reduction(m)
        except (GenericityError, ShieldViolation, NonTransverseRay):
            resamples += 1
            if resamples > MAX_RESAMPLES * trials:
                raise
            continue
        values = {p for s in steps for p in (s.zero_parity, s.ray_parity, s.hemisphere_parity)
                  if p is not None}
        parities.append(values.pop() if len(values) == 1 else -1)
    return BUReport(n, seed, trials, tuple(parities), resamples)


def adversarial_instance() -> tuple:
    """A generic disc map whose ``r'`` vanishes on the frontier of a
    hemispheric split, with no shield declared.

    Returns ``(map, pieces)``; :func:`decompose_parity` must refuse it.
    """
    grid = kuhn_cube(2, 2)
    idx = grid.index()
    base = {
        (-1, -1): (-3, -2), (0, -1): (1, -4), (1, -1): (4, -1),
        (-1, 0): (-4, 1), (0, 0): (1, 1), (1, 0): (0, -1),
        (-1, 1): (-2, 3), (0, 1): (-1, 4), (1, 1): (3, 2),
    }
    values = [base[c] for c in grid.coords]
    m = PLManifoldMap(2, grid.simplices, values, grid.coords)
    upper, lower = hemispheres(m, 1)
    assert idx[(1, 0)] in {v for f in upper for v in f}
    return m, [DecompositionPiece(upper), DecompositionPiece(lower)]


def hemisphere_pieces(m: PLManifoldMap, axis: Optional[int] = None) -> list:
    upper, lower = hemispheres(m, m.n - 1 if axis is None else axis)
    return [DecompositionPiece(upper), DecompositionPiece(lower)]


def identity_suite(count: int = 200, seed: int = 0, max_n: int = 3) -> list:
    """Boundary identity on seeded random generic maps, cycling n = 1..max_n."""
    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        m = random_generic_map(i % max_n + 1, rng)
        out.append(boundary_identity(m))
    return out


__all__ = [
    "Grid", "kuhn_cube", "random_values", "random_generic_map", "hemispheres",
    "antipodal_vertex_map", "hemisphere_map", "ReductionStep", "bu_reduction", "BUReport",
    "bu_check", "adversarial_instance", "hemisphere_pieces", "identity_suite",
    "decompose_parity",
]
