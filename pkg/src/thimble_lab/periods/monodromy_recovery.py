# -------------------------------------------
# Module recovering monodromy matrices numerically.
# The periods of c and d are continued around a closed loop; the continued pair is a real-linear
# integral combination of the original pair, read off by solving a real 2x2 system and rounding.
# -------------------------------------------
from dataclasses import dataclass
from typing import Tuple
import numpy as np
from thimble_lab.numkernel.quadrature import DEFAULT_TOLERANCE
from thimble_lab.homology.monodromy import LoopLabel, MonodromyMatrix
from thimble_lab.periods.base_path import BasePath, lasso, DEFAULT_PATH_CLEARANCE, LASSO_RADIUS
from thimble_lab.periods.cycle_transport import CycleTransport
from thimble_lab.periods.thimble_integrals import REFERENCE_POINT, ReferencePeriods, reference_periods
from thimble_lab.utilities.custom_exceptions import LatticeRecognitionFailedException

CERTIFICATION_THRESHOLD: float = 1e-6


@dataclass(frozen=True)
class MonodromyRecovery:
    """
    Data class, numerically recovered monodromy with its rounding residual and error bound.
    """
    around: LoopLabel
    matrix: MonodromyMatrix
    raw_matrix: np.ndarray
    residual: float
    error_bound: float


def _real_coordinates(values: Tuple[complex, complex], basis: Tuple[complex, complex]) -> np.ndarray:
    """:return: Rows n with values[i] = n[i, 0] basis[0] + n[i, 1] basis[1] over the reals."""
    system: np.ndarray = np.array([
        [basis[0].real, basis[1].real],
        [basis[0].imag, basis[1].imag],
    ])
    rows = [np.linalg.solve(system, np.array([value.real, value.imag])) for value in values]
    return np.array(rows)


def numeric_monodromy(
        around: LoopLabel,
        base_q: complex = REFERENCE_POINT,
        tol: float = DEFAULT_TOLERANCE,
        radius: float = LASSO_RADIUS,
        clearance: float = DEFAULT_PATH_CLEARANCE) -> MonodromyRecovery:
    """
    :param around: Loop label; finite loops are lassos around one critical value, Infinity a large circle.
    :param base_q: Base point of the loop; the periods are first continued to it along the straight segment from 0.
    :param tol: Quadrature tolerance.
    :return: Monodromy matrix acting on coefficient columns in the {c, d} basis.
    :raises LatticeRecognitionFailedException: when rounding residual plus error bound is not below the threshold.
    """
    reference: ReferencePeriods = reference_periods(tol)
    periods: np.ndarray = np.array([reference.c, reference.d], dtype=complex)
    base_q = complex(base_q)
    if base_q != REFERENCE_POINT:
        approach: CycleTransport = CycleTransport(BasePath.from_nodes([REFERENCE_POINT, base_q], clearance=clearance), periods, tol=tol)
        periods = approach.final_values
    loop: BasePath = lasso(around, base=base_q, radius=radius, clearance=clearance)
    transport: CycleTransport = CycleTransport(loop, periods, tol=tol)
    continued: np.ndarray = transport.final_values

    raw: np.ndarray = _real_coordinates((complex(continued[0]), complex(continued[1])), (complex(periods[0]), complex(periods[1])))
    rounded: np.ndarray = np.rint(raw)
    residual: float = float(np.max(np.abs(raw - rounded)))
    scale: float = float(np.min(np.abs(periods)))
    error_bound: float = max(tol, (transport.error + reference.error) / scale)
    if residual + error_bound >= CERTIFICATION_THRESHOLD:
        raise LatticeRecognitionFailedException(
            f"Monodromy around {around.value} not certified: residual {residual:.2e} + error bound {error_bound:.2e} "
            f">= {CERTIFICATION_THRESHOLD:.0e}.",
            raw_matrix=raw.T,
            residual=residual,
        )
    entries = tuple(tuple(int(value) for value in row) for row in rounded.T)
    if entries[0][0] * entries[1][1] - entries[0][1] * entries[1][0] != 1:
        raise LatticeRecognitionFailedException(
            f"Recovered matrix {entries} around {around.value} is not in SL(2, Z).",
            raw_matrix=raw.T,
            residual=residual,
        )
    return MonodromyRecovery(
        around=around,
        matrix=MonodromyMatrix(entries=entries),
        raw_matrix=raw.T,
        residual=residual,
        error_bound=error_bound,
    )
