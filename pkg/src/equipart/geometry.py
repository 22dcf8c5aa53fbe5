"""Moment curve, oriented hyperplanes and the hyperoctahedral group.

Conventions used throughout the package:

* An oriented hyperplane in R^d is a nonzero vector ``(a0, a1, ..., ad)``;
  its positive side is ``a0 + a.x >= 0``.  Restricted to the moment curve
  ``t -> (t, t^2, ..., t^d)`` the side function is the polynomial
  ``a0 + a1 t + ... + ad t^d``, so the coefficient tuple doubles as the
  polynomial's coefficients in increasing degree.
* Orthant labels are ints: bit ``i`` is 0 when a point is on the positive
  side of plane ``i`` (points on the plane count as positive) and 1 when
  it is on the negative side.
* A group element ``(perm, flips)`` of Z_2^k x| S_k sends plane ``j`` to
  slot ``perm[j]`` and then reverses the orientation of slot ``i`` when bit
  ``i`` of ``flips`` is set.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from ._linalg import is_exact
from .errors import DegenerateRoots, DimensionMismatch, InvalidDimension

REL_TOL = 1e-9


@dataclass(frozen=True)
class CurvePoint:
    t: object
    d: int
    coords: tuple


def moment_point(t, d: int) -> CurvePoint:
    """The point of the moment curve in R^d with parameter ``t``."""
    if d < 1:
        raise InvalidDimension(f"moment curve needs d >= 1, got {d}")
    return CurvePoint(t, d, tuple(t ** (i + 1) for i in range(d)))


@dataclass(frozen=True)
class OrientedHyperplane:
    """Point of the sphere S^d standing for an oriented affine hyperplane.

    Float coefficients are normalized to unit Euclidean length.  Exact
    (rational) coefficients are normalized to unit max-norm instead, which
    keeps them rational and picks the same point of S^d after radial
    projection; :meth:`to_float` converts to the Euclidean representative.
    """

    coeffs: tuple

    def __post_init__(self):
        c = tuple(self.coeffs)
        if len(c) < 2:
            raise InvalidDimension("a hyperplane needs at least (a0, a1)")
        if is_exact(c):
            m = max(abs(Fraction(x)) for x in c)
            if m == 0:
                raise ValueError("zero vector does not define a hyperplane")
            c = tuple(Fraction(x) / m for x in c)
        else:
            arr = np.asarray(c, dtype=float)
            norm = float(np.linalg.norm(arr))
            if not np.isfinite(norm) or norm == 0.0:
                raise ValueError("zero vector does not define a hyperplane")
            c = tuple(float(x) for x in arr / norm)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_parts(cls, a0, a: Sequence) -> "OrientedHyperplane":
        return cls((a0, *a))

    @property
    def d(self) -> int:
        return len(self.coeffs) - 1

    @property
    def a0(self):
        return self.coeffs[0]

    @property
    def a(self) -> tuple:
        return self.coeffs[1:]

    @property
    def exact(self) -> bool:
        return isinstance(self.a0, Fraction)

    @property
    def at_infinity(self) -> bool:
        return all(x == 0 for x in self.a)

    def antipode(self) -> "OrientedHyperplane":
        # negate without renormalizing so that h and antipode(h) are exact
        # negatives of each other (renormalizing would perturb the roots)
        out = object.__new__(OrientedHyperplane)
        object.__setattr__(out, "coeffs", tuple(-x for x in self.coeffs))
        return out

    def to_float(self) -> "OrientedHyperplane":
        return OrientedHyperplane(tuple(float(x) for x in self.coeffs))

    def isclose(self, other: "OrientedHyperplane", tol: float = 1e-12) -> bool:
        u = np.asarray(self.to_float().coeffs)
        v = np.asarray(other.to_float().coeffs)
        return u.shape == v.shape and bool(np.max(np.abs(u - v)) <= tol)

    def to_json(self) -> dict:
        return {"a0": float(self.a0), "a": [float(x) for x in self.a]}

    @classmethod
    def from_json(cls, obj: dict) -> "OrientedHyperplane":
        return cls.from_parts(obj["a0"], obj["a"])


def side(h: OrientedHyperplane, x: Sequence):
    """Evaluate ``a0 + a.x``: positive on h+, negative on h-, zero on h."""
    if isinstance(x, CurvePoint):
        x = x.coords
    if len(x) != h.d:
        raise DimensionMismatch(f"point has dimension {len(x)}, hyperplane {h.d}")
    return h.a0 + sum(ai * xi for ai, xi in zip(h.a, x))


def side_on_curve(h: OrientedHyperplane, t):
    """``side(h, moment_point(t, d))`` evaluated as a polynomial in t."""
    if isinstance(t, np.ndarray):
        return np.polynomial.polynomial.polyval(t, np.asarray(h.coeffs, dtype=float))
    acc = 0
    for c in reversed(h.coeffs):
        acc = acc * t + c
    return acc


def poly_from_roots(roots: Sequence) -> list:
    """Coefficients (increasing degree) of the monic polynomial prod(t - r)."""
    coeffs = [1]
    for r in roots:
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c
            nxt[i] -= r * c
        coeffs = nxt
    return coeffs


def hyperplane_from_roots(roots: Sequence, orientation: int, d: int) -> OrientedHyperplane:
    """The hyperplane meeting the moment curve exactly at the given parameters.

    Before normalization the coefficients are those of ``orientation *
    prod(t - r)``, so along the curve ``side`` has the sign of that product.
    Rational roots give an exact hyperplane.
    """
    if d < 1:
        raise InvalidDimension(f"d must be >= 1, got {d}")
    if len(roots) != d:
        raise InvalidDimension(f"need exactly d={d} roots, got {len(roots)}")
    if orientation not in (1, -1):
        raise ValueError("orientation must be +1 or -1")
    if len(set(roots)) != len(roots):
        raise DegenerateRoots(f"repeated roots in {list(roots)}")
    if not is_exact(list(roots)):
        srt = sorted(float(r) for r in roots)
        scale = max(1.0, max(abs(r) for r in srt))
        if any(b - a <= 1e-14 * scale for a, b in zip(srt, srt[1:])):
            raise DegenerateRoots(f"numerically repeated roots in {srt}")
    coeffs = poly_from_roots(roots)
    return OrientedHyperplane(tuple(orientation * c for c in coeffs))


@dataclass(frozen=True)
class Configuration:
    d: int
    planes: tuple

    def __post_init__(self):
        planes = tuple(self.planes)
        if not planes:
            raise ValueError("a configuration needs at least one hyperplane")
        for h in planes:
            if h.d != self.d:
                raise DimensionMismatch(f"plane of dimension {h.d} in a d={self.d} configuration")
        object.__setattr__(self, "planes", planes)

    @property
    def k(self) -> int:
        return len(self.planes)

    def to_float(self) -> "Configuration":
        return Configuration(self.d, tuple(h.to_float() for h in self.planes))

    def to_json(self) -> dict:
        return {"d": self.d, "planes": [h.to_json() for h in self.planes]}

    @classmethod
    def from_json(cls, obj: dict) -> "Configuration":
        return cls(int(obj["d"]), tuple(OrientedHyperplane.from_json(p) for p in obj["planes"]))


def label_of(c: Configuration, x: Sequence) -> int:
    """Orthant label of point ``x`` (boundary points go to the positive side)."""
    label = 0
    for i, h in enumerate(c.planes):
        if side(h, x) < 0:
            label |= 1 << i
    return label


def label_str(label: int, k: int) -> str:
    """``j1 j2 ... jk`` as a string, plane 1 first."""
    return "".join("1" if label >> i & 1 else "0" for i in range(k))


def parse_label(s: str) -> int:
    return sum(1 << i for i, ch in enumerate(s) if ch == "1")


def popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True)
class GroupElement:
    """Element of the hyperoctahedral group Z_2^k x| S_k."""

    perm: tuple
    flips: int = 0

    def __post_init__(self):
        perm = tuple(int(p) for p in self.perm)
        if sorted(perm) != list(range(len(perm))):
            raise ValueError(f"not a permutation: {perm}")
        if not 0 <= self.flips < 1 << len(perm):
            raise ValueError(f"flip mask {self.flips} out of range for k={len(perm)}")
        object.__setattr__(self, "perm", perm)

    @property
    def k(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, k: int) -> "GroupElement":
        return cls(tuple(range(k)), 0)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        # (g*h).c == g.(h.c)
        if self.k != other.k:
            raise DimensionMismatch("group elements of different rank")
        perm = tuple(self.perm[other.perm[j]] for j in range(self.k))
        moved = permute_bits(other.flips, self.perm)
        return GroupElement(perm, self.flips ^ moved)

    def inverse(self) -> "GroupElement":
        inv = [0] * self.k
        for j, p in enumerate(self.perm):
            inv[p] = j
        inv = tuple(inv)
        return GroupElement(inv, permute_bits(self.flips, inv))


def permute_bits(label: int, perm: Sequence[int]) -> int:
    """Move bit ``j`` of ``label`` to position ``perm[j]``."""
    out = 0
    for j, p in enumerate(perm):
        if label >> j & 1:
            out |= 1 << p
    return out


def elements(k: int) -> Iterator[GroupElement]:
    """All 2^k * k! elements, in a fixed order."""
    for perm in itertools.permutations(range(k)):
        for flips in range(1 << k):
            yield GroupElement(perm, flips)


def group_order(k: int) -> int:
    return (1 << k) * math.factorial(k)


def act(g: GroupElement, c: Configuration) -> Configuration:
    if g.k != c.k:
        raise DimensionMismatch(f"group rank {g.k} vs configuration with {c.k} planes")
    planes = [None] * c.k
    for j, h in enumerate(c.planes):
        i = g.perm[j]
        planes[i] = h.antipode() if g.flips >> i & 1 else h
    return Configuration(c.d, tuple(planes))


def act_label(g: GroupElement, label: int) -> int:
    return permute_bits(label, g.perm) ^ g.flips
