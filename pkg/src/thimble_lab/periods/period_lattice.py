# -------------------------------------------
# Module computing the period lattice of the fiber E_q.
# E_q is the double cover of the t1-line branched over the four points {0, r1, r2, r3}.
# The integrand i dt1 / (t1 sqrt(...)) is i / sqrt of the quartic with these roots,
# so the period of the cycle around two branch points is a Chebyshev-weighted integral
# over the segment joining them.
# -------------------------------------------
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import List, Sequence, Tuple
import numpy as np
from thimble_lab.numkernel.quadrature import DEFAULT_TOLERANCE, QuadratureResult, integrate_chebyshev_weighted
from thimble_lab.fibration.branch_data import BranchData, branch_points
from thimble_lab.utilities.custom_context_managers import WhileLoopSafety
from thimble_lab.utilities.custom_exceptions import NearCriticalValueException, NonConvergenceException

LATTICE_ROOT_TOLERANCE: float = 1e-14
PREFERRED_RELATIVE_CLEARANCE: float = 5e-2
MIN_RELATIVE_CLEARANCE: float = 1e-3
REDUCTION_MAX_ITERATIONS: int = 200
LATTICE_CACHE_SIZE: int = 65536


@dataclass(frozen=True)
class LatticeMatch:
    """
    Data class, nearest lattice vector to a query point and the distance to the runner-up.
    """
    vector: complex
    coefficients: Tuple[int, int]
    distance: float
    runner_up_distance: float


@dataclass(frozen=True)
class PeriodLattice:
    """
    Data class, Lagrange-reduced basis (|w1| <= |w2|) of the period lattice of E_q.
    """
    q: complex
    basis: Tuple[complex, complex]
    error: float = field(default=0.0)

    # region Class Properties
    @property
    def shortest_length(self) -> float:
        return abs(self.basis[0])

    @property
    def covolume(self) -> float:
        w1, w2 = self.basis
        return abs((w1.conjugate() * w2).imag)
    # endregion

    # region Class Methods
    def coordinates(self, z: complex) -> np.ndarray:
        """:return: Real coordinates (a, b) with z = a w1 + b w2."""
        w1, w2 = self.basis
        matrix: np.ndarray = np.array([[w1.real, w2.real], [w1.imag, w2.imag]])
        return np.linalg.solve(matrix, np.array([z.real, z.imag]))

    def nearest_vector(self, z: complex) -> LatticeMatch:
        """:return: Lattice vector closest to z (exhaustive over the rounding neighbourhood of a reduced basis)."""
        w1, w2 = self.basis
        center: np.ndarray = np.rint(self.coordinates(complex(z)))
        candidates: List[Tuple[float, int, int]] = []
        for da in (-1, 0, 1):
            for db in (-1, 0, 1):
                a, b = int(center[0]) + da, int(center[1]) + db
                candidates.append((abs(z - (a * w1 + b * w2)), a, b))
        candidates.sort()
        distance, a, b = candidates[0]
        return LatticeMatch(
            vector=a * w1 + b * w2,
            coefficients=(a, b),
            distance=float(distance),
            runner_up_distance=float(candidates[1][0]),
        )

    def contains(self, z: complex, rel_tol: float = 1e-6) -> bool:
        """:return: Whether z is a lattice vector up to rel_tol times the shortest vector."""
        return self.nearest_vector(z).distance <= rel_tol * self.shortest_length
    # endregion


def segment_period(start: complex, end: complex, others: Sequence[complex], tol: float = DEFAULT_TOLERANCE) -> QuadratureResult:
    """
    Period of the cycle encircling the branch points start and end, defined up to sign.
    With t = m + (L/2) x on the segment, the integrand reduces to 2 / (sqrt(t - e) sqrt(t - e')) against 1/sqrt(1 - x^2),
    where e, e' are the remaining branch points. Each root is continued from the segment midpoint
    so that it stays single valued along the segment.
    """
    midpoint: complex = 0.5 * (start + end)
    half_length: complex = 0.5 * (end - start)

    def weighted(x: np.ndarray) -> np.ndarray:
        t: np.ndarray = midpoint + half_length * x
        product: np.ndarray = np.ones_like(t, dtype=complex)
        for other in others:
            offset: complex = midpoint - other
            product = product * np.sqrt(offset) * np.sqrt((t - other) / offset)
        return 2.0 / product

    return integrate_chebyshev_weighted(weighted, tol=tol)


def _relative_clearance(start: complex, end: complex, others: Sequence[complex]) -> float:
    """:return: Distance of the other branch points to the segment, relative to its length."""
    direction: complex = end - start
    length: float = abs(direction)
    distances: List[float] = []
    for other in others:
        projection: float = min(max(((other - start) * direction.conjugate()).real / length ** 2, 0.0), 1.0)
        distances.append(abs(other - (start + projection * direction)))
    return min(distances) / length


def _select_configuration(points: Tuple[complex, ...]) -> Tuple[int, int, int]:
    """
    :return: (hub, first target, second target) indices of two short segments sharing a hub.
        Configurations where the remaining branch points stay clearly away from both segments are preferred.
    """
    best_key = None
    best: Tuple[int, int, int] = (0, 1, 2)
    for hub in range(4):
        for first, second in combinations([index for index in range(4) if index != hub], 2):
            remaining = [index for index in range(4) if index not in (hub, first, second)]
            clearance: float = min(
                _relative_clearance(points[hub], points[first], [points[second], points[remaining[0]]]),
                _relative_clearance(points[hub], points[second], [points[first], points[remaining[0]]]),
            )
            if clearance <= MIN_RELATIVE_CLEARANCE:
                continue
            length: float = abs(points[first] - points[hub]) + abs(points[second] - points[hub])
            key = (clearance < PREFERRED_RELATIVE_CLEARANCE, length)
            if best_key is None or key < best_key:
                best_key, best = key, (hub, first, second)
    if best_key is None:
        raise NearCriticalValueException(f"No admissible segment configuration among branch points {points}.")
    return best


def gauss_reduce(first: complex, second: complex) -> Tuple[complex, complex]:
    """:return: Lagrange-Gauss reduced basis of the lattice spanned by first and second, shortest vector first."""
    if abs((first.conjugate() * second).imag) <= 1e-300:
        raise ValueError(f"Vectors {first} and {second} are linearly dependent over the reals.")
    with WhileLoopSafety(max_iterations=REDUCTION_MAX_ITERATIONS) as loop:
        while loop.safety_condition():
            if abs(second) < abs(first):
                first, second = second, first
            multiple: int = int(round((second * first.conjugate()).real / abs(first) ** 2))
            if multiple == 0:
                break
            second = second - multiple * first
    if loop.exceeded:
        raise NonConvergenceException(f"Lattice reduction did not terminate for basis ({first}, {second}).")
    return first, second


@lru_cache(maxsize=LATTICE_CACHE_SIZE)
def _cached_period_lattice(q: complex, tol: float) -> PeriodLattice:
    data: BranchData = branch_points(q, tol=LATTICE_ROOT_TOLERANCE)
    if data.has_double_root:
        raise NearCriticalValueException(f"Fiber over q = {q} is singular (double branch point).")
    points: Tuple[complex, ...] = data.ramification_points
    hub, first, second = _select_configuration(points)
    remaining: int = ({0, 1, 2, 3} - {hub, first, second}).pop()
    first_period: QuadratureResult = segment_period(points[hub], points[first], (points[second], points[remaining]), tol=tol)
    second_period: QuadratureResult = segment_period(points[hub], points[second], (points[first], points[remaining]), tol=tol)
    basis: Tuple[complex, complex] = gauss_reduce(first_period.value, second_period.value)
    return PeriodLattice(
        q=q,
        basis=basis,
        error=first_period.abs_error_estimate + second_period.abs_error_estimate,
    )


def compute_period_lattice(q: complex, tol: float = DEFAULT_TOLERANCE) -> PeriodLattice:
    """
    :param q: Base point, not a critical value.
    :param tol: Quadrature tolerance of the two segment periods.
    :return: Reduced period lattice of E_q.
    """
    if tol <= 0:
        raise ValueError(f"Tolerance must be positive, got {tol}.")
    return _cached_period_lattice(complex(q), float(tol))
