"""Counting zeros of PL maps mod 2.

For a generic piecewise-linear map of a disc, the number of zeros mod 2
equals the number of times a ray from the origin crosses the image of the
boundary.  Splitting the boundary into pieces only works if the ray misses
the places where pieces meet.  For maps that are odd on the boundary the
count is always 1: the Borsuk-Ulam theorem, checked one dimension at a time.
"""
import numpy as np

from equipart.errors import GenericityError, NonTransverseRay, ShieldViolation
from equipart.parity_pl import (RaySpec, adversarial_instance, boundary_identity, bu_check,
                                bu_reduction, decompose_parity, kuhn_cube, random_generic_map,
                                ray_parity, zero_parity)

rng = np.random.default_rng(7)

# %% The boundary identity on one random map of the square
m = random_generic_map(2, rng)
print(f"square: {len(m.simplices)} triangles, zero parity {zero_parity(m)}, "
      f"ray parity {ray_parity(m, RaySpec.axis(2))}")
print("identity holds:", bool(boundary_identity(m)))

# %% The reduction on an odd map of the 3-cube
grid = kuhn_cube(3)
print(f"\ncube: {len(grid.simplices)} tetrahedra")
while True:
    m = random_generic_map(3, rng, odd_boundary=True)
    try:
        steps = bu_reduction(m)
        break
    except (GenericityError, NonTransverseRay, ShieldViolation):
        continue
for s in steps:
    print(f"  n={s.n}: zeros {s.zero_parity}, ray {s.ray_parity}, upper half {s.hemisphere_parity}")

# %% Many maps at once
for n in (1, 2, 3):
    rep = bu_check(n, seed=n, trials=20)
    print(f"n={n}: parity {rep.parity} over {rep.trials} maps ({rep.resamples} resampled)")

# %% Where a naive split goes wrong
# This map sends a vertex on the equator of the split onto the ray, so the
# per-piece counts are ambiguous.  The engine refuses instead of guessing.
m, pieces = adversarial_instance()
try:
    decompose_parity(m, pieces)
except ShieldViolation as exc:
    print("\nrefused:", exc)
