"""Building the zeros explicitly.

Each orbit representative fixes where every plane meets the curve, so the
plane is the polynomial with those roots.  Choosing the crossings at the
dyadic points of the intervals makes the construction exact over the
rationals; floats only enter for the residual and the Jacobian.
"""
from fractions import Fraction

import numpy as np

from equipart import (Configuration, IntervalMeasure, ProblemSpec, corollary_pipeline, enumerate_orbits,
                      jacobian_nondegenerate, realize)
from equipart.measures import orthant_masses

spec = ProblemSpec(5, 3, ("F", "F", "B"))
report = enumerate_orbits(spec)

# %% Realize the first orbit on the default intervals
z = realize(report.representatives[0])
print("intervals:", [(float(a), float(b)) for a, b in z.intervals])
print("crossings:", np.round(z.crossings, 4))
print("plane at each crossing:", z.crossing_planes)
print(f"exact residual {z.exact_residual}, float residual {z.residual:.2e}")

# %% Nondegeneracy
# Moving the 15 crossings moves the 15 test-map coordinates; a nonzero
# determinant means the zero is transverse.
dets = []
for p in report.representatives:
    chk = jacobian_nondegenerate(realize(p))
    dets.append(chk.det_estimate)
    assert chk.ok
print(f"\n|det| over all orbits: {min(map(abs, dets)):.3f} .. {max(map(abs, dets)):.3f}")

# %% Rational intervals
z = realize(report.representatives[5], [(Fraction(0), Fraction(2)), (Fraction(3), Fraction(5)),
                                         (Fraction(6), Fraction(7))])
print("\nrational placement, exact residual:", z.exact_residual)

# %% Four planes for one measure
# A bisector H of mu splits it into mu+ and mu-; three more planes that
# equipartition both halves give sixteen equal pieces of mu.
mu = IntervalMeasure(5, -1.0, 1.0)
res = corollary_pipeline(mu)
masses = orthant_masses(mu, Configuration(5, res.planes))
print("\n16 orthant masses of mu:", np.round(masses, 12))
print("all equal to total/16:", np.allclose(masses, mu.total / 16, rtol=0, atol=1e-9))
