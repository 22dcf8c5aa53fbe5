"""Hamiltonian flip sequences of the k-cube and crossing patterns.

A flip sequence lists which bit changes at each step of a Hamiltonian path
on {0,1}^k.  Whether a sequence is Hamiltonian does not depend on the start
vertex (XOR-translation is a cube automorphism), so sequences are stored
without one.  Bits are 0-based: bit ``i`` is plane ``i``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import DimensionMismatch
from .geometry import act_label, permute_bits

MAX_BITS = 4

FULL = "F"
BISECTOR = "B"


def is_hamiltonian(seq: Sequence[int], k: int, start: int = 0) -> bool:
    if len(seq) != (1 << k) - 1:
        return False
    seen = {start}
    v = start
    for b in seq:
        if not 0 <= b < k:
            return False
        v ^= 1 << b
        if v in seen:
            return False
        seen.add(v)
    return True


@dataclass(frozen=True, order=True)
class FlipSequence:
    k: int
    seq: tuple

    def __post_init__(self):
        seq = tuple(int(b) for b in self.seq)
        if not is_hamiltonian(seq, self.k):
            raise ValueError(f"{seq} is not a Hamiltonian flip sequence of the {self.k}-cube")
        object.__setattr__(self, "seq", seq)


@lru_cache(maxsize=None)
def _dfs_sequences(k: int) -> tuple:
    out = []
    n = 1 << k
    seen = [False] * n
    seen[0] = True
    path = []

    def dfs(v):
        if len(path) == n - 1:
            out.append(tuple(path))
            return
        for b in range(k):
            w = v ^ (1 << b)
            if not seen[w]:
                seen[w] = True
                path.append(b)
                dfs(w)
                path.pop()
                seen[w] = False

    dfs(0)
    return tuple(sorted(out))


def flip_sequences(k: int, allow_large: bool = False) -> list:
    """All Hamiltonian flip sequences of the k-cube in lexicographic order."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if k > MAX_BITS and not allow_large:
        raise ValueError(f"k={k} > {MAX_BITS}: enumeration blows up; pass allow_large=True")
    return [FlipSequence(k, s) for s in _dfs_sequences(k)]


def flip_counts(s: FlipSequence) -> tuple:
    return tuple(s.seq.count(i) for i in range(s.k))


def end_vertex(s: FlipSequence, start: int) -> int:
    if not 0 <= start < 1 << s.k:
        raise DimensionMismatch(f"start label {start:b} does not fit in {s.k} bits")
    out = start
    for i, n in enumerate(flip_counts(s)):
        if n & 1:
            out ^= 1 << i
    return out


def relabel(seq: Sequence[int], perm: Sequence[int]) -> tuple:
    return tuple(perm[b] for b in seq)


@dataclass(frozen=True, order=True)
class CrossingPattern:
    """Combinatorial type of a zero on the moment curve.

    ``steps[j]`` lists, in curve order, which plane crosses interval ``j``:
    a full Hamiltonian flip sequence for a ``"F"`` interval, a single plane
    index for a ``"B"`` interval.  ``start`` is the orthant label at the
    left end of the first interval; later intervals start where the previous
    one ended since no crossings lie between intervals.
    """

    k: int
    kinds: tuple
    steps: tuple
    start: int = 0

    def __post_init__(self):
        kinds = tuple(self.kinds)
        steps = tuple(tuple(int(b) for b in s) for s in self.steps)
        if len(kinds) != len(steps):
            raise ValueError("one step list per interval")
        if not 0 <= self.start < 1 << self.k:
            raise ValueError(f"start label out of range for k={self.k}")
        for kind, s in zip(kinds, steps):
            if kind == FULL:
                if not is_hamiltonian(s, self.k):
                    raise ValueError(f"{s} is not a Hamiltonian flip sequence")
            elif kind == BISECTOR:
                if len(s) != 1 or not 0 <= s[0] < self.k:
                    raise ValueError(f"bisector interval needs one plane index, got {s}")
            else:
                raise ValueError(f"unknown interval kind {kind!r}")
        object.__setattr__(self, "kinds", kinds)
        object.__setattr__(self, "steps", steps)

    def plane_totals(self) -> tuple:
        return tuple(sum(s.count(i) for s in self.steps) for i in range(self.k))

    def interval_counts(self, j: int) -> tuple:
        return tuple(self.steps[j].count(i) for i in range(self.k))

    def walk(self) -> list:
        """Orthant labels along the curve: one list per interval."""
        out = []
        v = self.start
        for s in self.steps:
            labels = [v]
            for b in s:
                v ^= 1 << b
                labels.append(v)
            out.append(labels)
        return out

    def relabeled(self, perm: Sequence[int]) -> "CrossingPattern":
        """Rename plane ``i`` to ``perm[i]`` everywhere (start label included)."""
        return CrossingPattern(self.k, self.kinds, tuple(relabel(s, perm) for s in self.steps),
                               permute_bits(self.start, perm))

    def translated(self, start: int) -> "CrossingPattern":
        return CrossingPattern(self.k, self.kinds, self.steps, start)

    def act(self, g) -> "CrossingPattern":
        """Image under a hyperoctahedral group element."""
        p = self.relabeled(g.perm)
        return p.translated(act_label(g, self.start))

    def to_json(self) -> dict:
        return {"k": self.k, "kinds": "".join(self.kinds), "start": self.start,
                "steps": [list(s) for s in self.steps]}

    @classmethod
    def from_json(cls, obj: dict) -> "CrossingPattern":
        return cls(int(obj["k"]), tuple(obj["kinds"]), tuple(tuple(s) for s in obj["steps"]),
                   int(obj.get("start", 0)))


def canonical_pattern(p: CrossingPattern) -> CrossingPattern:
    """Canonical representative of the orbit of ``p``.

    Orientation changes only move the start label, freely and transitively,
    so the start is pinned to 0; the remaining S_k relabelings are searched
    for the lexicographically smallest step list.
    """
    best = min(tuple(relabel(s, perm) for s in p.steps)
               for perm in itertools.permutations(range(p.k)))
    return CrossingPattern(p.k, p.kinds, best, 0)


def stabilizer_size(p: CrossingPattern) -> int:
    """Number of plane permutations fixing the (start-pinned) pattern."""
    return sum(1 for perm in itertools.permutations(range(p.k))
               if tuple(relabel(s, perm) for s in p.steps) == p.steps)
