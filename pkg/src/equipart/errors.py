"""Exception hierarchy.

``ValidationRefusal`` subclasses are raised when an input is well-formed but
the requested computation is not allowed (infeasible problem, unshielded
decomposition, ...).  The CLI maps them to exit code 2.
"""


class EquipartError(Exception):
    pass


class ValidationRefusal(EquipartError):
    pass


class InvalidDimension(EquipartError, ValueError):
    pass


class DimensionMismatch(EquipartError, ValueError):
    pass


class DegenerateRoots(EquipartError, ValueError):
    pass


class DegenerateTangency(EquipartError):
    pass


class TrivialSolution(ValidationRefusal, ValueError):
    pass


class InfeasibleSpec(ValidationRefusal, ValueError):
    pass


class DegenerateIntervals(ValidationRefusal, ValueError):
    pass


class RealizationFailed(EquipartError):
    pass


class ChartBreakdown(EquipartError):
    pass


class GenericityError(ValidationRefusal):
    def __init__(self, message, face=None):
        super().__init__(message)
        self.face = face


class NonTransverseRay(EquipartError):
    def __init__(self, message, facet=None):
        super().__init__(message + " (retry with a jittered ray)")
        self.facet = facet


class ShieldViolation(ValidationRefusal):
    def __init__(self, message, face=None):
        super().__init__(message)
        self.face = face


class InvalidSymmetry(ValidationRefusal):
    pass
