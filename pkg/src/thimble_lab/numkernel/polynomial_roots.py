# -------------------------------------------
# Module containing cubic root solving with multiplicity detection.
# -------------------------------------------
import warnings
from dataclasses import dataclass
from typing import List, Sequence, Tuple
import numpy as np
from thimble_lab.numkernel.quadrature import DEFAULT_TOLERANCE
from thimble_lab.utilities.custom_exceptions import DegenerateLeadingCoefficientException
from thimble_lab.utilities.custom_warnings import DoubleRootProximityWarning

NEWTON_POLISH_ITERATIONS: int = 3


@dataclass(frozen=True)
class CubicRoots:
    """
    Data class, containing the three roots of a cubic (with repetition) and their multiplicities.
    """
    roots: Tuple[complex, complex, complex]
    multiplicities: Tuple[int, int, int]

    # region Class Properties
    @property
    def has_repeated_root(self) -> bool:
        return max(self.multiplicities) > 1

    @property
    def distinct_roots(self) -> List[complex]:
        result: List[complex] = []
        for root in self.roots:
            if not any(root == other for other in result):
                result.append(root)
        return result
    # endregion

    # region Class Methods
    def __iter__(self):
        return iter(self.roots)

    def __len__(self) -> int:
        return 3

    def __getitem__(self, index: int) -> complex:
        return self.roots[index]
    # endregion


def root_sort_key(root: complex, tol: float = 1e-14) -> Tuple[float, float]:
    """:return: Deterministic (argument in [0, 2 pi), modulus) ordering key; near-real roots snap to arg 0 or pi."""
    if abs(root.imag) <= tol * max(1.0, abs(root)):
        angle: float = 0.0 if root.real >= 0 else np.pi
    else:
        angle = float(np.angle(root)) % (2.0 * np.pi)
    return round(angle, 12), abs(root)


def _polish(coefficients: np.ndarray, root: complex) -> complex:
    derivative: np.ndarray = np.polyder(coefficients)
    current: complex = complex(root)
    current_residual: float = abs(np.polyval(coefficients, current))
    for _ in range(NEWTON_POLISH_ITERATIONS):
        slope: complex = np.polyval(derivative, current)
        if slope == 0:
            break
        candidate: complex = current - np.polyval(coefficients, current) / slope
        candidate_residual: float = abs(np.polyval(coefficients, candidate))
        if candidate_residual >= current_residual:
            break
        current, current_residual = complex(candidate), candidate_residual
    return current


def solve_cubic(coefficients: Sequence[complex], tol: float = DEFAULT_TOLERANCE) -> CubicRoots:
    """
    Solves c0 t^3 + c1 t^2 + c2 t + c3 = 0.
    Roots closer than sqrt(tol) (relative to their size) are flagged as a repeated root
    and replaced by their mean.
    :param coefficients: Four coefficients, leading first.
    :param tol: Tolerance; sqrt(tol) is the repeated-root separation threshold.
    :return: Roots sorted by (argument, modulus) with multiplicities.
    """
    coefficients = np.asarray(coefficients, dtype=complex)
    if coefficients.shape != (4,):
        raise ValueError(f"Expected 4 coefficients, got {coefficients.shape}.")
    scale: float = float(np.max(np.abs(coefficients)))
    if scale == 0 or abs(coefficients[0]) <= tol * scale:
        raise DegenerateLeadingCoefficientException(f"Leading coefficient {coefficients[0]} is (numerically) zero.")

    roots: List[complex] = [_polish(coefficients, root) for root in np.roots(coefficients)]
    threshold: float = float(np.sqrt(tol))
    # Cluster roots by separation
    clusters: List[List[int]] = []
    for index, root in enumerate(roots):
        for cluster in clusters:
            if any(abs(root - roots[other]) < threshold * max(1.0, abs(root)) for other in cluster):
                cluster.append(index)
                break
        else:
            clusters.append([index])

    values: List[complex] = [0j, 0j, 0j]
    multiplicities: List[int] = [1, 1, 1]
    for cluster in clusters:
        mean: complex = complex(np.mean([roots[index] for index in cluster]))
        if len(cluster) > 1:
            separation: float = max(abs(roots[i] - roots[j]) for i in cluster for j in cluster)
            warnings.warn(**DoubleRootProximityWarning.warning_format(separation=separation, threshold=threshold))
        for index in cluster:
            values[index] = mean
            multiplicities[index] = len(cluster)

    order: List[int] = sorted(range(3), key=lambda index: root_sort_key(values[index]))
    return CubicRoots(
        roots=tuple(values[index] for index in order),
        multiplicities=tuple(multiplicities[index] for index in order),
    )
