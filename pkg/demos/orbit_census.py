"""Counting zeros of the three-plane problem on the moment curve.

Three hyperplanes in R^5 must cut two interval measures into eight equal
pieces each and bisect a third.  Every zero is described by the order in
which the planes cross the curve, so counting zeros up to symmetry is a
finite enumeration of Gray-code patterns.
"""
import numpy as np

from equipart import ProblemSpec, enumerate_orbits, flip_counts, flip_sequences, match_table
from equipart.graycode import end_vertex

# %% Hamiltonian paths of the 3-cube
# A full interval is crossed 7 times, once per edge of a Hamiltonian path on
# {0,1}^3.  The flip counts say how often each plane crosses it.
seqs = flip_sequences(3)
print(f"{len(seqs)} flip sequences of the 3-cube")
for s in seqs[:4]:
    print("  ", s.seq, "counts", flip_counts(s), "ends at", format(end_vertex(s, 0), "03b"))

# %% The census
spec = ProblemSpec(5, 3, ("F", "F", "B"))
spec.check()
report = enumerate_orbits(spec)
print(f"\n{spec.label()}: {report.raw_count} patterns with start 0, "
      f"{report.orbit_count} orbits, parity {report.theta}")

# %% How the orbits split by interval types
print("\ncase  I1 type    I2 type    orbits")
for row in match_table(report):
    print(f"{row.case!s:>4}  {str(row.i1_type):<10} {str(row.i2_type):<10} {row.count:>6}")

# %% Stabilizers
# The group acts freely, so the orbit count is the raw count divided by |S_3|.
print("\nstabilizer sizes:", sorted(set(report.stabilizers)))
assert report.raw_count == 6 * report.orbit_count

# %% A smaller and a larger problem
for d, k, kinds in [(3, 2, "FF"), (7, 3, "FFF")]:
    r = enumerate_orbits(ProblemSpec(d, k, tuple(kinds)))
    print(f"{r.spec.label()}: {r.orbit_count} orbits, parity {r.theta}")

sizes = np.array([len(flip_sequences(k)) for k in (1, 2, 3, 4)])
print("\nflip sequences per cube dimension 1..4:", sizes)
