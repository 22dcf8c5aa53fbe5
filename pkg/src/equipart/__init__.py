"""Hyperplane mass equipartitions on the moment curve.

Orbit counting of crossing patterns, explicit realization of zeros, the DFT
test map with its shielding components, and a PL mod-2 degree engine.
"""
from .errors import EquipartError, ValidationRefusal
from .geometry import (Configuration, GroupElement, OrientedHyperplane, act, act_label,
                       hyperplane_from_roots, moment_point, side)
from .graycode import CrossingPattern, FlipSequence, canonical_pattern, flip_counts, flip_sequences
from .measures import DiscreteMeasure, IntervalMeasure, curve_crossings, orthant_mass
from .obstruction import (OrbitReport, ProblemSpec, RealizedZero, corollary_pipeline,
                          enumerate_orbits, jacobian_nondegenerate, match_table,
                          perturbation_parity_invariance, realize)
from .testmap import TestVector, dft_component, full_test_map, shielding_check

__version__ = "0.1.0"

__all__ = [
    "EquipartError", "ValidationRefusal",
    "Configuration", "GroupElement", "OrientedHyperplane", "act", "act_label",
    "hyperplane_from_roots", "moment_point", "side",
    "CrossingPattern", "FlipSequence", "canonical_pattern", "flip_counts", "flip_sequences",
    "DiscreteMeasure", "IntervalMeasure", "curve_crossings", "orthant_mass",
    "OrbitReport", "ProblemSpec", "RealizedZero", "corollary_pipeline", "enumerate_orbits",
    "jacobian_nondegenerate", "match_table", "perturbation_parity_invariance", "realize",
    "TestVector", "dft_component", "full_test_map", "shielding_check",
    "__version__",
]
