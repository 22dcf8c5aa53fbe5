"""Triangulated manifolds with vertex values in R^n.

A :class:`PLManifoldMap` is a pure n-dimensional simplicial complex
(n <= 3) whose vertices carry values in R^n; the map is the affine
interpolation on each simplex.  Values given as ints or Fractions keep every
later predicate exact.
"""
from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass
from typing import Optional, Sequence

from .._linalg import is_exact, origin_in_hull
from ..errors import DimensionMismatch, GenericityError, InvalidDimension

MAX_DIM = 3


def _faces(simplex: Sequence[int], size: int):
    return itertools.combinations(sorted(simplex), size)


def _clean_values(values, n: int) -> tuple:
    out = tuple(tuple(v) for v in values)
    for v in out:
        if len(v) != n:
            raise DimensionMismatch(f"vertex value {v} is not in R^{n}")
    if is_exact(out):
        return out
    return tuple(tuple(float(x) for x in v) for v in out)


@dataclass(frozen=True)
class PLCycle:
    """(n-1)-simplices with vertex values in R^n, e.g. the boundary of a
    PL manifold map or a piece of it."""

    n: int
    facets: tuple
    values: tuple

    def points(self, face) -> list:
        return [self.values[v] for v in face]


@dataclass(frozen=True)
class PLManifoldMap:
    n: int
    simplices: tuple
    values: tuple
    coords: Optional[tuple] = None
    boundary: Optional[tuple] = None

    def __post_init__(self):
        if not 1 <= self.n <= MAX_DIM:
            raise InvalidDimension(f"manifold dimension must be 1..{MAX_DIM}, got {self.n}")
        values = _clean_values(self.values, self.n)
        simplices = tuple(tuple(sorted(int(v) for v in s)) for s in self.simplices)
        if not simplices:
            raise ValueError("empty complex")
        for s in simplices:
            if len(s) != self.n + 1 or len(set(s)) != len(s):
                raise ValueError(f"{s} is not an {self.n}-simplex")
            if s[0] < 0 or s[-1] >= len(values):
                raise ValueError(f"simplex {s} uses a vertex without a value")
        if len(set(simplices)) != len(simplices):
            raise ValueError("repeated simplex")
        incidence = Counter(f for s in simplices for f in _faces(s, self.n))
        bad = [f for f, c in incidence.items() if c > 2]
        if bad:
            raise ValueError(f"not a pseudomanifold: face {bad[0]} bounds {incidence[bad[0]]} simplices")
        computed = tuple(sorted(f for f, c in incidence.items() if c == 1))
        if self.boundary is not None:
            given = tuple(sorted(tuple(sorted(f)) for f in self.boundary))
            if given != computed:
                raise ValueError("declared boundary differs from the faces bounding one simplex")
        coords = None if self.coords is None else tuple(tuple(c) for c in self.coords)
        if coords is not None and len(coords) != len(values):
            raise DimensionMismatch("one coordinate vector per vertex")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "simplices", simplices)
        object.__setattr__(self, "boundary", computed)
        object.__setattr__(self, "coords", coords)

    @property
    def exact(self) -> bool:
        return is_exact(self.values)

    def faces(self, dim: int) -> list:
        """All ``dim``-dimensional faces, sorted."""
        return sorted({f for s in self.simplices for f in _faces(s, dim + 1)})

    def points(self, face) -> list:
        return [self.values[v] for v in face]

    def boundary_cycle(self) -> PLCycle:
        return PLCycle(self.n, self.boundary, self.values)

    def check_generic(self) -> None:
        """Raise :class:`GenericityError` if 0 lies in (or too close to) the
        image of some (n-1)-face."""
        for f in self.faces(self.n - 1):
            verdict = origin_in_hull(self.points(f))
            if verdict is None:
                raise GenericityError(f"0 is too close to the image of face {f}", f)
            if verdict:
                raise GenericityError(f"0 lies in the image of face {f}", f)

    def with_values(self, values) -> "PLManifoldMap":
        return PLManifoldMap(self.n, self.simplices, values, self.coords)

    def to_json(self) -> dict:
        def num(x):
            return x if isinstance(x, int) else float(x)

        out = {
            "n": self.n,
            "simplices": [list(s) for s in self.simplices],
            "values": [[num(x) for x in v] for v in self.values],
            "boundary": [list(f) for f in self.boundary],
        }
        if self.coords is not None:
            out["coords_at_vertices"] = [[num(x) for x in c] for c in self.coords]
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "PLManifoldMap":
        return cls(int(obj["n"]), obj["simplices"], obj["values"],
                   obj.get("coords_at_vertices"), obj.get("boundary"))


def load_mesh(path) -> PLManifoldMap:
    with open(path) as fh:
        return PLManifoldMap.from_json(json.load(fh))


def save_mesh(m: PLManifoldMap, path) -> None:
    with open(path, "w") as fh:
        json.dump(m.to_json(), fh, sort_keys=True)
