# -------------------------------------------
# Module describing the fibration W = t1 + t2 + 1/(t1 t2) over the q-plane.
# -------------------------------------------
from dataclasses import dataclass, field
from typing import Tuple, Union
import numpy as np

ZETA: complex = complex(-0.5, np.sqrt(3.0) / 2.0)
CRITICAL_VALUE_MODULUS: float = 3.0


def zeta_power(k: int) -> complex:
    """:return: Exact-as-possible zeta^k for integer k (reduced mod 3)."""
    return (1.0 + 0j, ZETA, ZETA.conjugate())[k % 3]


def z3_rotate(value: Union[complex, np.ndarray], k: int) -> Union[complex, np.ndarray]:
    """:return: value multiplied by zeta^k."""
    return value * zeta_power(k)


def potential(t1: complex, t2: complex) -> complex:
    """:return: W(t1, t2) = t1 + t2 + 1/(t1 t2)."""
    return t1 + t2 + 1.0 / (t1 * t2)


def critical_values() -> Tuple[complex, complex, complex]:
    """:return: (3, 3 zeta, 3 zeta^2), the critical values lambda_j of W."""
    return tuple(CRITICAL_VALUE_MODULUS * zeta_power(k) for k in range(3))


def critical_points() -> Tuple[Tuple[complex, complex], ...]:
    """:return: Critical points (zeta^j, zeta^j) of W; W takes the value 3 zeta^j there."""
    return tuple((zeta_power(k), zeta_power(k)) for k in range(3))


def distance_to_critical_values(q: complex) -> float:
    """:return: Distance from q to the nearest critical value."""
    return float(min(abs(q - value) for value in critical_values()))


@dataclass(frozen=True)
class Family:
    """
    Data class, normalization record of the family E_q = {W = q}.
    The holomorphic 2-form is i (dt1/t1) ^ (dt2/t2); only its dq ^ dt1 density is used.
    """
    zeta: complex = field(default=ZETA)
    form_prefactor: complex = field(default=1j)

    # region Class Methods
    def critical_values(self) -> Tuple[complex, complex, complex]:
        return critical_values()

    def critical_points(self) -> Tuple[Tuple[complex, complex], ...]:
        return critical_points()

    def potential(self, t1: complex, t2: complex) -> complex:
        return potential(t1, t2)
    # endregion
