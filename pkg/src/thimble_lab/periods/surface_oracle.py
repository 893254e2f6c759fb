# -------------------------------------------
# Module containing an independent evaluation of G_0(q) for real q < 3.
# The thimble is swept by the circles V_0(q') for q' in [q, 3]; the inner integral over each circle
# uses the explicit deformed contours with the sheet difference of the form density, and the outer
# integral over q' uses Romberg refinement. Nothing here shares the lattice transport, so agreement
# with the transported thimble integral cross-validates both.
# -------------------------------------------
from dataclasses import dataclass
from typing import List, Tuple
import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.integrate import romb
from thimble_lab.numkernel.branch_tracking import branch_sqrt
from thimble_lab.fibration.sheets import radicand
from thimble_lab.fibration.family import CRITICAL_VALUE_MODULUS
from thimble_lab.periods.appendix_contours import DeformedPiece, deformed_pieces
from thimble_lab.periods.cycle_transport import vanishing_period
from thimble_lab.utilities.custom_exceptions import NonConvergenceException

ARC_THRESHOLD: float = 0.5
INNER_ORDER: int = 64
ORACLE_TOLERANCE: float = 1e-8
MIN_LEVEL: int = 4
MAX_LEVEL: int = 15
_INNER_RULE: Tuple[np.ndarray, np.ndarray] = leggauss(INNER_ORDER)


@dataclass(frozen=True)
class OracleResult:
    """
    Data class, oracle value of G_0(q) with the difference of the last two Romberg levels.
    """
    q: float
    value: complex
    error: float
    level: int


def _mapped_rule(start_singular: bool, end_singular: bool) -> Tuple[np.ndarray, np.ndarray]:
    """
    :return: Nodes s in (0, 1) and weights for integrals with inverse-square-root behaviour at the flagged ends.
        Both ends use s = (1 - cos(pi u)) / 2, one end a quadratic map, none the plain rule.
    """
    abscissae, weights = _INNER_RULE
    u: np.ndarray = 0.5 * (abscissae + 1.0)
    w: np.ndarray = 0.5 * weights
    if start_singular and end_singular:
        return 0.5 * (1.0 - np.cos(np.pi * u)), w * 0.5 * np.pi * np.sin(np.pi * u)
    if start_singular:
        return u * u, w * 2.0 * u
    if end_singular:
        return 1.0 - (1.0 - u) ** 2, w * 2.0 * (1.0 - u)
    return u, w


def _piece_integral(q: float, piece: DeformedPiece, start_singular: bool, end_singular: bool) -> complex:
    s, weights = _mapped_rule(start_singular, end_singular)
    t: np.ndarray = np.asarray(piece.segment.point(s))
    # Density of the form on the lower sheet minus the upper sheet: 2i / (t1 sqrt(D))
    density: np.ndarray = 2j / (t * branch_sqrt(radicand(q, t), 0.0))
    return complex(np.sum(weights * density * np.asarray(piece.segment.derivative(s))))


def oracle_vanishing_period(q: float) -> complex:
    """:return: Period of V_0 over real q < 3 from the explicit deformed contour and fixed-order mapped rules."""
    if q >= CRITICAL_VALUE_MODULUS:
        return vanishing_period(0)
    pieces: List[DeformedPiece] = deformed_pieces(q, 'arc' if q > ARC_THRESHOLD else 'segments')
    total: complex = 0j
    for index, piece in enumerate(pieces):
        total += _piece_integral(q, piece, start_singular=index == 0, end_singular=index == len(pieces) - 1)
    return total


def surface_integral_oracle(q: float, tol: float = ORACLE_TOLERANCE) -> OracleResult:
    """
    :param q: Real point below 3.
    :param tol: Relative agreement of successive Romberg levels.
    :return: G_0(q) = -integral of the V_0 period over [q, 3].
    """
    q = float(q)
    if q >= CRITICAL_VALUE_MODULUS:
        raise ValueError(f"Oracle is defined for real q < 3, got {q}.")
    width: float = CRITICAL_VALUE_MODULUS - q

    # q' = 3 - width s^2 smooths the logarithmic behaviour of the period at the critical value
    def integrand(s: float) -> complex:
        return 2.0 * width * s * oracle_vanishing_period(CRITICAL_VALUE_MODULUS - width * s * s)

    previous: complex = complex(np.nan)
    value: complex = previous
    error: float = np.inf
    samples: np.ndarray = np.array([integrand(0.0), integrand(1.0)])
    for level in range(1, MAX_LEVEL + 1):
        grid: np.ndarray = np.linspace(0.0, 1.0, 2 ** level + 1)
        refined: np.ndarray = np.empty(grid.shape, dtype=complex)
        refined[::2] = samples
        refined[1::2] = [integrand(point) for point in grid[1::2]]
        samples = refined
        value = -complex(romb(samples, dx=1.0 / 2 ** level))
        error = abs(value - previous)
        if level >= MIN_LEVEL and error <= tol * max(1.0, abs(value)):
            return OracleResult(q=q, value=value, error=error, level=level)
        previous = value
    raise NonConvergenceException(
        f"Surface oracle did not reach tolerance {tol:.1e} at q = {q} (estimate {error:.2e}).",
        partial_result=OracleResult(q=q, value=value, error=error, level=MAX_LEVEL),
    )
