# -------------------------------------------
# Module containing bracketed real root finding.
# -------------------------------------------
from typing import Callable, Tuple
import numpy as np
from scipy.optimize import brentq
from thimble_lab.numkernel.quadrature import DEFAULT_TOLERANCE
from thimble_lab.utilities.custom_exceptions import (
    NoSignChangeException,
    NonConvergenceException,
)

MAX_ITERATIONS: int = 200


def find_root_1d(function: Callable[[float], float], bracket: Tuple[float, float], tol: float = DEFAULT_TOLERANCE) -> float:
    """
    Brent's method on a sign-changing bracket.
    :param function: Continuous real function.
    :param bracket: (lo, hi) with function(lo) * function(hi) <= 0.
    :param tol: Absolute tolerance on the root location.
    :return: Root x with bracket width <= tol around it.
    :raises NonConvergenceException: when either end value is NaN or infinite.
    """
    lower, upper = float(min(bracket)), float(max(bracket))
    value_lower: float = function(lower)
    value_upper: float = function(upper)
    if not (np.isfinite(value_lower) and np.isfinite(value_upper)):
        raise NonConvergenceException(
            f"Non-finite value at the bracket ends [{lower}, {upper}]: f(lo) = {value_lower}, f(hi) = {value_upper}.",
            partial_result=None,
        )
    if value_lower == 0:
        return lower
    if value_upper == 0:
        return upper
    if np.sign(value_lower) == np.sign(value_upper):
        raise NoSignChangeException(
            f"No sign change on [{lower}, {upper}]: f(lo) = {value_lower:.3e}, f(hi) = {value_upper:.3e}."
        )
    root, report = brentq(
        function,
        lower,
        upper,
        xtol=tol,
        rtol=4.0 * np.finfo(float).eps,
        maxiter=MAX_ITERATIONS,
        full_output=True,
        disp=False,
    )
    if not report.converged:
        raise NonConvergenceException(
            f"Root finding did not converge in {report.iterations} iterations ({report.flag}).",
            partial_result=root,
        )
    return float(root)
