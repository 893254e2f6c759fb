# -------------------------------------------
# Customized exceptions for better maintainability
# -------------------------------------------
from typing import Any, Optional


class InterfaceMethodException(Exception):
    """
    Raised when the interface method is not implemented.
    """


# region Numeric kernel
class NonConvergenceException(Exception):
    """
    Raised when an adaptive scheme reaches its iteration limit before meeting the requested tolerance.
    Carries the best (partial) result obtained so far.
    """

    def __init__(self, message: str, partial_result: Optional[Any] = None):
        super().__init__(message)
        self.partial_result = partial_result


class SingularityOnPathException(Exception):
    """
    Raised when an integrand evaluates non-finite at an interior point of a contour.
    """


class DegenerateLeadingCoefficientException(Exception):
    """
    Raised when a cubic polynomial has a (numerically) vanishing leading coefficient.
    """


class NoSignChangeException(Exception):
    """
    Raised when a root bracket does not enclose a sign change.
    """


class RadicandVanishesOnPathException(Exception):
    """
    Raised when a tracked square root meets a zero of its radicand inside the path.
    """
# endregion


# region Fibration
class OnBranchPointException(Exception):
    """
    Raised when the fiber discriminant vanishes at the requested point (t2-sheets coincide).
    """


class FormSingularException(Exception):
    """
    Raised when the density of the holomorphic form is evaluated where 1 - t1 t2^2 vanishes.
    """
# endregion


# region Homology
class BasisMismatchException(Exception):
    """
    Raised when homology classes expressed in different bases are combined.
    """
# endregion


# region Periods
class NearCriticalValueException(Exception):
    """
    Raised when a base point or base path comes closer to a critical value than the allowed clearance.
    """


class PathExitsDomainException(Exception):
    """
    Raised when a base path leaves the simply connected domain W_j (crosses a forbidden cut ray).
    """


class LatticeRecognitionFailedException(Exception):
    """
    Raised when a numeric period combination cannot be certified as an integer lattice element.
    Carries the unrounded matrix and its residual.
    """

    def __init__(self, message: str, raw_matrix: Optional[Any] = None, residual: Optional[float] = None):
        super().__init__(message)
        self.raw_matrix = raw_matrix
        self.residual = residual


class SignConditionViolatedException(Exception):
    """
    Raised when the square-root sign condition fails along a deformed contour.
    """


class DeformationMismatchException(Exception):
    """
    Raised when a deformed-contour period disagrees with the directly continued period.
    """
# endregion


# region Affine structure
class BracketNotFoundException(Exception):
    """
    Raised when a scalar function fails to change sign on the scanned range.
    """


class TraceLostException(Exception):
    """
    Raised when the level-set corrector fails to converge. Carries the last accepted point.
    """

    def __init__(self, message: str, last_point: Optional[complex] = None, trace: Optional[Any] = None):
        super().__init__(message)
        self.last_point = last_point
        self.trace = trace
# endregion


# region Cut model
class LoopHitsCutException(Exception):
    """
    Raised when a polygonal loop has a vertex on a cut ray, passes through a singular point,
    or starts inside a removed sector.
    """


class MatrixMismatchException(Exception):
    """
    Raised when a monodromy matrix and its gluing counterpart disagree.
    """
# endregion


# region Mirror atlas
class OnExcludedLocusException(Exception):
    """
    Raised when an immersed chart point lies on the excluded locus uv = 1.
    """
# endregion


# region Command line
class InvalidArgumentException(ValueError):
    """
    Raised when command line arguments cannot be parsed or do not name a valid input.
    """
# endregion
