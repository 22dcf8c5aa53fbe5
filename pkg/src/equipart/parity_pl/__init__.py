"""Piecewise-linear mod-2 degree engine."""
from .complex import PLCycle, PLManifoldMap, load_mesh, save_mesh
from .degree import (BoundaryIdentity, DecompositionPiece, DecompositionResult, RaySpec,
                     SymmetricCancel, boundary_identity, decompose_parity, frontier,
                     ray_parity, symmetric_cancel, zero_parity)
from .meshes import (BUReport, adversarial_instance, antipodal_vertex_map, bu_check,
                     bu_reduction, hemisphere_map, hemisphere_pieces, hemispheres,
                     identity_suite, kuhn_cube, random_generic_map)

__all__ = [
    "PLCycle", "PLManifoldMap", "load_mesh", "save_mesh",
    "BoundaryIdentity", "DecompositionPiece", "DecompositionResult", "RaySpec",
    "SymmetricCancel", "boundary_identity", "decompose_parity", "frontier", "ray_parity",
    "symmetric_cancel", "zero_parity",
    "BUReport", "adversarial_instance", "antipodal_vertex_map", "bu_check", "bu_reduction",
    "hemisphere_map", "hemisphere_pieces", "hemispheres", "identity_suite", "kuhn_cube",
    "random_generic_map",
]
