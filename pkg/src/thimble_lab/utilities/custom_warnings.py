# -------------------------------------------
# Customized warnings for better maintainability
# -------------------------------------------
import warnings


class WhileLoopSafetyExceededWarning(Warning):
    """
    Raised when while-loop safety counter exceeds the allowed number of iterations.
    """

    # region Class Methods
    @classmethod
    def warning_format(cls, max_iter: int) -> dict:
        return dict(
            message=f"Max iterations reached ({max_iter}/{max_iter}), exiting loop.",
            category=cls,
        )
    # endregion


class StepSizeReductionWarning(Warning):
    """
    Raised when period continuation has to shrink its step far below the nominal size.
    """

    # region Class Methods
    @classmethod
    def warning_format(cls, position: complex, step: float) -> dict:
        return dict(
            message=f"Continuation step reduced to {step:.3e} near q = {position:.6g}.",
            category=cls,
        )
    # endregion


class ChartSampleFailedWarning(Warning):
    """
    Raised when a single affine chart sample could not be computed (recorded, not fatal).
    """

    # region Class Methods
    @classmethod
    def warning_format(cls, position: complex, reason: str) -> dict:
        return dict(
            message=f"Affine chart sample at q = {position:.6g} failed: {reason}",
            category=cls,
        )
    # endregion


class DoubleRootProximityWarning(Warning):
    """
    Raised when cubic roots are flagged as a double root by the separation heuristic.
    """

    # region Class Methods
    @classmethod
    def warning_format(cls, separation: float, threshold: float) -> dict:
        return dict(
            message=f"Roots separated by {separation:.3e} < {threshold:.3e} are treated as a double root.",
            category=cls,
        )
    # endregion


# Apply Global warning filters
warnings.simplefilter("once", StepSizeReductionWarning)
warnings.simplefilter("once", DoubleRootProximityWarning)
