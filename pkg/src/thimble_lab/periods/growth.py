# -------------------------------------------
# Module sampling the growth of G_0 towards q = -infinity along the negative real axis.
# -------------------------------------------
from dataclasses import dataclass
from typing import List, Sequence, Tuple
import numpy as np
from thimble_lab.numkernel.quadrature import DEFAULT_TOLERANCE
from thimble_lab.fibration.family import CRITICAL_VALUE_MODULUS
from thimble_lab.periods.base_path import BasePath
from thimble_lab.periods.thimble_integrals import ThimbleIntegral, thimble_sweep

DEFAULT_GROWTH_SAMPLES: Tuple[float, ...] = (-1.0, -10.0, -100.0, -1000.0)


@dataclass(frozen=True)
class GrowthReport:
    """
    Data class, Im G_0 at decreasing negative samples and its fit against log|q|.
    """
    samples: Tuple[float, ...]
    values: Tuple[complex, ...]
    errors: Tuple[float, ...]
    monotone: bool
    slope: float
    pairwise_slopes: Tuple[float, ...]

    # region Class Properties
    @property
    def imaginary_parts(self) -> Tuple[float, ...]:
        return tuple(value.imag for value in self.values)
    # endregion


def growth_at_minus_infinity(samples: Sequence[float] = DEFAULT_GROWTH_SAMPLES, tol: float = DEFAULT_TOLERANCE) -> GrowthReport:
    """
    :param samples: Negative, strictly decreasing sample points.
    :param tol: Quadrature tolerance.
    :return: Growth report; monotone is True when Im G_0 strictly increases as q decreases.
    """
    samples = tuple(float(sample) for sample in samples)
    if len(samples) < 2:
        raise ValueError("At least two samples are required.")
    if any(sample >= 0 for sample in samples) or any(b >= a for a, b in zip(samples[:-1], samples[1:])):
        raise ValueError(f"Samples must be negative and strictly decreasing, got {samples}.")
    path: BasePath = BasePath.from_nodes([CRITICAL_VALUE_MODULUS, *samples], anchor=0)
    integrals: List[ThimbleIntegral] = thimble_sweep(0, path, tol=tol)
    imaginary: np.ndarray = np.array([integral.value.imag for integral in integrals])
    logarithms: np.ndarray = np.log(np.abs(np.array(samples)))
    slope: float = float(np.polyfit(logarithms, imaginary, 1)[0])
    pairwise: np.ndarray = np.diff(imaginary) / np.diff(logarithms)
    return GrowthReport(
        samples=samples,
        values=tuple(integral.value for integral in integrals),
        errors=tuple(integral.error for integral in integrals),
        monotone=bool(np.all(np.diff(imaginary) > 0)),
        slope=slope,
        pairwise_slopes=tuple(float(value) for value in pairwise),
    )
