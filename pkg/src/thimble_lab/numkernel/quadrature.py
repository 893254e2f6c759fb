# -------------------------------------------
# Module containing adaptive contour quadrature.
# Gauss-Kronrod panels (scipy.integrate.quad_vec) on the real and imaginary part,
# with a square-root substitution on the terminal panels of open contours
# so that inverse-square-root endpoint singularities integrate smoothly.
# -------------------------------------------
from dataclasses import dataclass
from enum import Enum, unique
from typing import Callable, Optional, Tuple
import numpy as np
from numpy.polynomial.chebyshev import chebgauss
from scipy.integrate import quad_vec
from thimble_lab.numkernel.contour import Contour, IContourSegment
from thimble_lab.utilities.custom_exceptions import (
    NonConvergenceException,
    SingularityOnPathException,
)

DEFAULT_TOLERANCE: float = 1e-9
DEFAULT_SUBDIVISION_LIMIT: int = 4000
CHEBYSHEV_INITIAL_ORDER: int = 32
CHEBYSHEV_MAX_ORDER: int = 2 ** 16
ContourIntegrand = Callable[[complex], complex]
ParametrizedIntegrand = Callable[[int, float], complex]
VectorIntegrand = Callable[[np.ndarray], np.ndarray]


@unique
class QuadratureRule(Enum):
    GAUSS_KRONROD_21 = 'gk21'
    GAUSS_KRONROD_15 = 'gk15'


@dataclass(frozen=True)
class QuadratureResult:
    """
    Data class, containing integral value, absolute error estimate and integrand evaluation count.
    """
    value: complex
    abs_error_estimate: float
    n_evaluations: int

    # region Class Methods
    def __add__(self, other: 'QuadratureResult') -> 'QuadratureResult':
        return QuadratureResult(
            value=self.value + other.value,
            abs_error_estimate=self.abs_error_estimate + other.abs_error_estimate,
            n_evaluations=self.n_evaluations + other.n_evaluations,
        )

    def scaled(self, factor: complex) -> 'QuadratureResult':
        return QuadratureResult(
            value=self.value * factor,
            abs_error_estimate=self.abs_error_estimate * abs(factor),
            n_evaluations=self.n_evaluations,
        )
    # endregion


def _terminal_substitution(u: float, substitute_start: bool, substitute_end: bool) -> Tuple[float, float]:
    """
    Maps u in [0, 2] onto the segment parameter s in [0, 1].
    The first half covers [0, 1/2], the second [1/2, 1]. A substituted half uses s ~ u^2
    towards its terminal point, cancelling an inverse-square-root endpoint singularity.
    :return: Tuple of (s, ds/du).
    """
    if u <= 1.0:
        if substitute_start:
            return 0.5 * u * u, u
        return 0.5 * u, 0.5
    w: float = 2.0 - u
    if substitute_end:
        return 1.0 - 0.5 * w * w, w
    return 1.0 - 0.5 * w, 0.5


def _integrate_segment(
        integrand: ParametrizedIntegrand,
        segment_index: int,
        segment: IContourSegment,
        substitute_start: bool,
        substitute_end: bool,
        tol: float,
        rule: QuadratureRule,
        limit: int) -> QuadratureResult:
    """:return: Integral of integrand(segment_index, s) dz over a single segment."""

    def real_vector(u: float) -> np.ndarray:
        s, jacobian = _terminal_substitution(u, substitute_start, substitute_end)
        value: complex = integrand(segment_index, s) * segment.derivative(s) * jacobian
        if not np.isfinite(value):
            raise SingularityOnPathException(
                f"Integrand is not finite at z = {complex(segment.point(s))} (segment {segment_index}, s = {s})."
            )
        return np.array([value.real, value.imag])

    result, error, info = quad_vec(
        real_vector,
        0.0,
        2.0,
        epsabs=tol,
        epsrel=tol,
        norm='max',
        limit=limit,
        points=(1.0,),
        quadrature=rule.value,
        full_output=True,
    )
    partial: QuadratureResult = QuadratureResult(
        value=complex(result[0], result[1]),
        abs_error_estimate=float(error),
        n_evaluations=int(info.neval),
    )
    if info.status != 0 and not error <= max(tol, tol * np.max(np.abs(result))):
        raise NonConvergenceException(
            f"Adaptive quadrature did not reach tolerance {tol:.1e} on segment {segment_index} "
            f"(estimate {error:.2e}, status {info.status}).",
            partial_result=partial,
        )
    return partial


def integrate_parametrized(
        integrand: ParametrizedIntegrand,
        contour: Contour,
        tol: float = DEFAULT_TOLERANCE,
        rule: QuadratureRule = QuadratureRule.GAUSS_KRONROD_21,
        endpoint_substitution: Optional[bool] = None,
        limit: int = DEFAULT_SUBDIVISION_LIMIT) -> QuadratureResult:
    """
    Integrates integrand(segment_index, s) dz along the contour.
    Use this form when the integrand is a function of the contour parameter,
    for example data continued along the path that is multi-valued as a function of z.
    :param integrand: Callable of (segment index, local parameter s in [0, 1]).
    :param contour: Integration contour.
    :param tol: Absolute (and relative) tolerance, > 0.
    :param rule: Gauss-Kronrod rule per panel.
    :param endpoint_substitution: Square-root substitution at the contour end points.
        Defaults to True for open contours, False for closed ones.
    :param limit: Maximum number of subintervals per segment.
    :return: Quadrature result.
    """
    if tol <= 0:
        raise ValueError(f"Tolerance must be positive, got {tol}.")
    if endpoint_substitution is None:
        endpoint_substitution = not contour.is_closed
    segment_count: int = contour.segment_count
    # Junctions are interior nodes of the contour
    for segment_index in range(1, segment_count):
        if not np.isfinite(integrand(segment_index, 0.0)):
            raise SingularityOnPathException(f"Integrand is not finite at contour node {contour.nodes[segment_index]}.")

    total: QuadratureResult = QuadratureResult(value=0j, abs_error_estimate=0.0, n_evaluations=0)
    for segment_index, segment in enumerate(contour.segments):
        try:
            partial: QuadratureResult = _integrate_segment(
                integrand=integrand,
                segment_index=segment_index,
                segment=segment,
                substitute_start=endpoint_substitution and segment_index == 0,
                substitute_end=endpoint_substitution and segment_index == segment_count - 1,
                tol=tol / segment_count,
                rule=rule,
                limit=limit,
            )
        except NonConvergenceException as exception:
            raise NonConvergenceException(str(exception), partial_result=total + exception.partial_result) from exception
        total = total + partial
    return total


def integrate_contour(
        integrand: ContourIntegrand,
        contour: Contour,
        tol: float = DEFAULT_TOLERANCE,
        rule: QuadratureRule = QuadratureRule.GAUSS_KRONROD_21,
        endpoint_substitution: Optional[bool] = None,
        limit: int = DEFAULT_SUBDIVISION_LIMIT) -> QuadratureResult:
    """
    Integrates f(z) dz along the contour.
    Endpoint singularities of at worst inverse-square-root type are allowed on open contours.
    :param integrand: Callable f(z), analytic on a neighbourhood of the contour interior.
    :param contour: Integration contour.
    :param tol: Absolute (and relative) tolerance, > 0.
    :return: Quadrature result.
    """
    return integrate_parametrized(
        integrand=lambda segment_index, s: integrand(complex(contour.point_at(segment_index, s))),
        contour=contour,
        tol=tol,
        rule=rule,
        endpoint_substitution=endpoint_substitution,
        limit=limit,
    )


def integrate_chebyshev_weighted(
        integrand: VectorIntegrand,
        tol: float = DEFAULT_TOLERANCE,
        initial_order: int = CHEBYSHEV_INITIAL_ORDER,
        max_order: int = CHEBYSHEV_MAX_ORDER) -> QuadratureResult:
    """
    Integrates g(x) / sqrt(1 - x^2) over [-1, 1] with Gauss-Chebyshev rules of doubling order.
    Spectrally accurate for g analytic on a neighbourhood of [-1, 1], which is the shape of every
    integral between two square-root branch points after factoring out the endpoint behaviour.
    :param integrand: Vectorized g(x), evaluated at interior nodes only.
    :param tol: Absolute (and relative) tolerance on successive orders, > 0.
    :return: Quadrature result, error estimate is the difference between the last two orders.
    """
    if tol <= 0:
        raise ValueError(f"Tolerance must be positive, got {tol}.")
    order: int = initial_order
    nodes, weights = chebgauss(order)
    previous: complex = complex(np.dot(weights, integrand(nodes)))
    evaluations: int = order
    while order < max_order:
        order *= 2
        nodes, weights = chebgauss(order)
        values: np.ndarray = np.asarray(integrand(nodes), dtype=complex)
        if not np.all(np.isfinite(values)):
            raise SingularityOnPathException(f"Weighted integrand is not finite on [-1, 1] (order {order}).")
        current: complex = complex(np.dot(weights, values))
        evaluations += order
        error: float = abs(current - previous)
        if error <= max(tol, tol * abs(current)):
            return QuadratureResult(value=current, abs_error_estimate=error, n_evaluations=evaluations)
        previous = current
    raise NonConvergenceException(
        f"Gauss-Chebyshev rule did not reach tolerance {tol:.1e} up to order {max_order} (estimate {error:.2e}).",
        partial_result=QuadratureResult(value=current, abs_error_estimate=error, n_evaluations=evaluations),
    )
