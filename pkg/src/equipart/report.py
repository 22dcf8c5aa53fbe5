"""Reproduction bundle: every headline number recomputed with a pass/fail mark."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .geometry import Configuration, hyperplane_from_roots
from .graycode import flip_counts, flip_sequences
from .measures import IntervalMeasure
from .obstruction import (CASE_COUNTS, ProblemSpec, case_counts, corollary_pipeline,
                          enumerate_orbits, match_table)
from .parity_pl import boundary_identity, bu_check, random_generic_map
from .testmap import shielding_check

# regression value recorded on the first run of the (7,3,[F,F,F]) census
ORBITS_7_3_FFF = 60


@dataclass(frozen=True)
class Criterion:
    name: str
    expected: object
    observed: object

    @property
    def passed(self) -> bool:
        return self.expected == self.observed

    def to_json(self) -> dict:
        def plain(x):
            if isinstance(x, (list, tuple)):
                return [plain(y) for y in x]
            if isinstance(x, dict):
                return {str(k): plain(v) for k, v in x.items()}
            return x

        return {"name": self.name, "expected": plain(self.expected),
                "observed": plain(self.observed), "passed": self.passed}


def random_singular_configuration(rng: np.random.Generator, mu: IntervalMeasure, k: int = 3,
                                  antipodal: bool = False) -> Configuration:
    """Planes 1 and 2 equal (or antipodal); the rest generic.  Every plane
    crosses the curve at random points of the measure's interval."""
    def plane():
        roots = np.sort(rng.uniform(mu.lo, mu.hi, size=mu.d))
        return hyperplane_from_roots(list(roots), int(rng.choice([-1, 1])), mu.d)

    h = plane()
    planes = [h, h.antipode() if antipodal else h] + [plane() for _ in range(k - 2)]
    return Configuration(mu.d, tuple(planes))


def shield_values(samples: int, seed: int, d: int = 5) -> tuple:
    """Largest deviation of the shield component from +1 (equal planes) and
    from -1 (antipodal planes) over seeded random singular configurations."""
    rng = np.random.default_rng(seed)
    worst_eq = worst_anti = 0.0
    for i in range(samples):
        lo = float(rng.uniform(-3, 3))
        mu = IntervalMeasure(d, lo, lo + 1.0)
        anti = bool(i & 1)
        c = random_singular_configuration(rng, mu, 3, anti)
        chk = shielding_check(mu, c, 0b011)
        if anti:
            worst_anti = max(worst_anti, abs(chk.value + 1.0))
        else:
            worst_eq = max(worst_eq, abs(chk.value - 1.0))
    return worst_eq, worst_anti


def paper_report(enumerator: Optional[Callable] = None, seed: int = 0,
                 bu_trials: int = 10, shield_samples: int = 200) -> list:
    enum = enumerator or enumerate_orbits
    out = []

    r = enum(ProblemSpec(5, 3, ("F", "F", "B")))
    out.append(Criterion("orbit census (5,3,[F,F,B])", 13, r.orbit_count))
    out.append(Criterion("parity (5,3,[F,F,B])", 1, r.theta))
    counts = case_counts(match_table(r))
    for case in sorted(CASE_COUNTS):
        out.append(Criterion(f"case row ({case})", CASE_COUNTS[case], counts.get(case, 0)))

    types = sorted({tuple(sorted(flip_counts(s), reverse=True)) for s in flip_sequences(3)},
                   reverse=True)
    out.append(Criterion("3-bit flip-count types", [(4, 2, 1), (3, 3, 1), (3, 2, 2)], types))

    r7 = enum(ProblemSpec(7, 3, ("F", "F", "F")))
    out.append(Criterion("parity (7,3,[F,F,F])", 0, r7.theta))
    out.append(Criterion("orbit count (7,3,[F,F,F]) regression", ORBITS_7_3_FFF, r7.orbit_count))

    r3 = enum(ProblemSpec(3, 2, ("F", "F")))
    out.append(Criterion("parity (3,2,[F,F])", 1, r3.theta))

    eq, anti = shield_values(shield_samples, seed)
    out.append(Criterion("shield value, equal planes = +1", True, eq <= 1e-12))
    out.append(Criterion("shield value, antipodal planes = -1", True, anti <= 1e-12))

    cor = corollary_pipeline(IntervalMeasure(5, 0.0, 16.0))
    out.append(Criterion("four-plane equipartition of [0,16]", True,
                         bool(np.max(np.abs(np.asarray(cor.masses) - 1.0)) <= 1e-9)))

    for n in (1, 2, 3):
        out.append(Criterion(f"Borsuk-Ulam parity n={n}", 1, bu_check(n, seed, bu_trials).parity))
    m = random_generic_map(2, np.random.default_rng(seed), odd_boundary=True)
    bi = boundary_identity(m)
    out.append(Criterion("boundary identity on a Borsuk-Ulam disc", [1, 1], [bi.lhs, bi.rhs]))
    return out


def case_table_text(report=None) -> str:
    """Orbit counts per pair of interval types, one line per case row."""
    r = report or enumerate_orbits(ProblemSpec(5, 3, ("F", "F", "B")))
    rows = match_table(r)
    lines = [f"{'case':>4}  {'I1 type':<10} {'I2 type':<10} {'orbits':>6}"]
    for row in rows:
        fmt = "(" + ",".join(map(str, row.i1_type)) + ")"
        fmt2 = "(" + ",".join(map(str, row.i2_type)) + ")"
        lines.append(f"{row.case!s:>4}  {fmt:<10} {fmt2:<10} {row.count:>6}")
    lines.append(f"{'':>4}  {'total':<21} {r.orbit_count:>6}   theta = {r.theta}")
    return "\n".join(lines)
