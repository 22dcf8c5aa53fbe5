"""Equipartition test maps.

For a measure ``mu`` and configuration ``c`` the orthant masses ``a_J`` are
turned into DFT components ``f_I = sum_J (-1)^<I,J> a_J``.  A configuration
equipartitions ``mu`` exactly when every ``f_I`` with ``I != 0`` vanishes.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import TrivialSolution
from .geometry import Configuration, GroupElement, act_label, permute_bits, popcount
from .measures import Measure, bisector_defect, orthant_masses


def sign_matrix(k: int) -> np.ndarray:
    """The 2^k x 2^k matrix ``(-1)^<I,J>`` (rows I, columns J)."""
    n = 1 << k
    return np.array([[-1 if popcount(i & j) & 1 else 1 for j in range(n)] for i in range(n)])


def dft_components(mu: Measure, c: Configuration) -> np.ndarray:
    return sign_matrix(c.k) @ orthant_masses(mu, c)


def dft_component(mu: Measure, c: Configuration, label: int) -> float:
    return float(dft_components(mu, c)[label])


def orthant_basis_components(mu: Measure, c: Configuration) -> np.ndarray:
    """Coefficients ``mu(O_eps) - mu(R^d)/2^k``; they sum to zero."""
    return orthant_masses(mu, c) - mu.total / (1 << c.k)


def orthant_basis_component(mu: Measure, c: Configuration, label: int) -> float:
    return float(orthant_basis_components(mu, c)[label])


def bisector_product(mu: Measure, c: Configuration) -> float:
    """Product over the planes of ``mu(h+) - mu(h-)``."""
    out = 1.0
    for h in c.planes:
        out *= bisector_defect(mu, h)
    return out


@dataclass(frozen=True)
class TestVector:
    """Value of the test map: one DFT block per fully equipartitioned
    measure (components ``I = 1 .. 2^k - 1``) and one product per bisector
    measure.  The orthant-basis view of each block is kept alongside."""

    __test__ = False  # not a pytest class

    k: int
    dft: tuple
    orthant: tuple
    bisector: tuple
    totals: tuple

    @property
    def vector(self) -> np.ndarray:
        parts = [np.asarray(b, dtype=float) for b in self.dft]
        parts.append(np.asarray(self.bisector, dtype=float))
        return np.concatenate(parts) if parts else np.empty(0)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.vector))

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "dft": [[float(x) for x in b] for b in self.dft],
            "orthant": [[float(x) for x in b] for b in self.orthant],
            "bisector": [float(x) for x in self.bisector],
            "norm": self.norm,
        }


def full_test_map(c: Configuration, full_measures: Sequence[Measure],
                  bisector_measure: Optional[object] = None) -> TestVector:
    """Evaluate the test map.

    ``bisector_measure`` may be a single measure or a sequence of them.
    Refuses the degenerate case where every fully equipartitioned measure
    has zero mass: then any common bisector repeated k times is a zero.
    """
    if bisector_measure is None:
        bis = []
    elif isinstance(bisector_measure, (list, tuple)):
        bis = list(bisector_measure)
    else:
        bis = [bisector_measure]
    if not full_measures or all(mu.total <= 0 for mu in full_measures):
        raise TrivialSolution(
            "all equipartitioned measures have zero mass: (H, ..., H) for a common "
            "bisector H is a trivial zero, so the test map carries no information"
        )
    dft, orth = [], []
    for mu in full_measures:
        masses = orthant_masses(mu, c)
        dft.append(tuple((sign_matrix(c.k) @ masses)[1:]))
        orth.append(tuple(masses - mu.total / (1 << c.k)))
    return TestVector(
        k=c.k,
        dft=tuple(dft),
        orthant=tuple(orth),
        bisector=tuple(bisector_product(mu, c) for mu in bis),
        totals=tuple(mu.total for mu in full_measures),
    )


def act_on_test_vector(g: GroupElement, tv: TestVector) -> TestVector:
    """The representation of the group on the test space.

    Satisfies ``full_test_map(act(g, c), ...) == act_on_test_vector(g,
    full_test_map(c, ...))``.
    """
    n = 1 << tv.k
    inv = g.inverse()
    dft = []
    for block in tv.dft:
        full = np.concatenate([[np.nan], block])
        out = np.empty(n)
        for i in range(n):
            src = permute_bits(i, inv.perm)
            out[i] = (-1) ** popcount(i & g.flips) * full[src]
        dft.append(tuple(out[1:]))
    orth = []
    for block in tv.orthant:
        out = np.empty(n)
        for j in range(n):
            out[act_label(g, j)] = block[j]
        orth.append(tuple(out))
    s = (-1) ** popcount(g.flips)
    return TestVector(tv.k, tuple(dft), tuple(orth), tuple(s * b for b in tv.bisector), tv.totals)


@dataclass(frozen=True)
class ShieldCheck:
    shielded: bool
    value: Optional[float]
    case: str  # "equal", "antipodal" or "not-applicable"


def shielding_check(mu: Measure, c: Configuration, label: int, tol: float = 1e-12) -> ShieldCheck:
    """Check whether ``f_I`` is forced nonzero by coincident planes.

    If every pair of planes indexed by ``I`` coincides, ``f_I`` equals the
    total mass; if ``I`` has two planes that are antipodal, it equals minus
    the total mass.  Any other input is not covered.
    """
    idx = [i for i in range(c.k) if label >> i & 1]
    if not idx or len(idx) % 2:
        return ShieldCheck(False, None, "not-applicable")
    first = c.planes[idx[0]]
    if all(c.planes[i].isclose(first, tol) for i in idx[1:]):
        case = "equal"
    elif len(idx) == 2 and c.planes[idx[1]].isclose(first.antipode(), tol):
        case = "antipodal"
    else:
        return ShieldCheck(False, None, "not-applicable")
    value = dft_component(mu, c, label)
    return ShieldCheck(value != 0.0, value, case)
