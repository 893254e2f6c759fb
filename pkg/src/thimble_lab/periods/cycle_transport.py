# -------------------------------------------
# Module continuing cycle periods along base paths.
# The periods of a fixed cycle form an analytic function of q; at each step it is
# predicted by linear extrapolation and snapped onto the period lattice of the fiber,
# so the transported values stay exact lattice vectors and the homology class is preserved.
# -------------------------------------------
import warnings
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple
import numpy as np
from numpy.polynomial.legendre import leggauss
from thimble_lab.numkernel.contour import IContourSegment
from thimble_lab.numkernel.quadrature import DEFAULT_TOLERANCE
from thimble_lab.fibration.family import zeta_power, distance_to_critical_values
from thimble_lab.periods.base_path import BasePath
from thimble_lab.periods.period_lattice import PeriodLattice, LatticeMatch, compute_period_lattice
from thimble_lab.utilities.custom_context_managers import WhileLoopSafety
from thimble_lab.utilities.custom_exceptions import NonConvergenceException
from thimble_lab.utilities.custom_warnings import StepSizeReductionWarning

MAX_STEP_FRACTION: float = 0.05
ANCHOR_OFFSET: float = 1e-4
MATCH_FRACTION: float = 0.25
AMBIGUITY_RATIO: float = 0.5
MAX_STEP_HALVINGS: int = 40
STEP_WARNING_FRACTION: float = 1e-3
GAUSS_ORDER: int = 6
ESTIMATE_ORDER: int = 4
_GAUSS_RULES = {order: leggauss(order) for order in (GAUSS_ORDER, ESTIMATE_ORDER)}


@dataclass(frozen=True)
class TransportNode:
    """
    Data class, transported cycle periods at one accepted step of the base path.
    """
    tau: float
    position: complex
    values: Tuple[complex, ...]
    error: float


class CycleTransport:
    """
    Behaviour class, continuation of one or several cycle periods along a base path.
    Anchored paths start at a critical value where only vanishing-cycle periods are finite;
    their initial values are the limits at the critical value and the first node sits at a small offset.
    """

    # region Class Properties
    @property
    def path(self) -> BasePath:
        return self._path

    @property
    def tol(self) -> float:
        return self._tol

    @property
    def nodes(self) -> List[TransportNode]:
        return self._nodes

    @property
    def cycle_count(self) -> int:
        return len(self._initial_values)

    @property
    def initial_values(self) -> np.ndarray:
        """:return: Values at the path start (limits at the critical value for anchored paths)."""
        return np.array(self._initial_values, dtype=complex)

    @property
    def final_values(self) -> np.ndarray:
        return np.array(self._nodes[-1].values, dtype=complex)

    @property
    def taus(self) -> np.ndarray:
        """:return: Global path parameters of the nodes, increasing."""
        return self._taus

    @property
    def is_anchored(self) -> bool:
        return self._path.anchor is not None

    @property
    def error(self) -> float:
        """:return: Largest quadrature error of the lattice bases used at the nodes."""
        return float(max(node.error for node in self._nodes))
    # endregion

    # region Class Constructor
    def __init__(self, path: BasePath, initial_values: Sequence[complex], tol: float = DEFAULT_TOLERANCE):
        """
        :param path: Base path; an anchored path starts at its critical value.
        :param initial_values: Cycle periods at the path start.
        :param tol: Quadrature tolerance of the period lattices.
        """
        if tol <= 0:
            raise ValueError(f"Tolerance must be positive, got {tol}.")
        if len(initial_values) == 0:
            raise ValueError("At least one cycle period is required.")
        self._path: BasePath = path
        self._tol: float = tol
        self._initial_values: Tuple[complex, ...] = tuple(complex(value) for value in initial_values)
        self._nodes: List[TransportNode] = self._transport()
        self._taus: np.ndarray = np.array([node.tau for node in self._nodes])
    # endregion

    # region Class Methods
    def lattice_at(self, position: complex) -> PeriodLattice:
        return compute_period_lattice(position, tol=self._tol)

    def values_at(self, tau: float) -> np.ndarray:
        """:return: Transported periods at global path parameter tau."""
        index: int = int(np.searchsorted(self._taus, tau, side='left'))
        if index < len(self._nodes) and self._taus[index] == tau:
            return np.array(self._nodes[index].values, dtype=complex)
        position: complex = self._path.point(tau)
        if index == 0:
            if not self.is_anchored:
                raise ValueError(f"Parameter {tau} lies before the path start.")
            # Inside the anchor offset the periods are interpolated, not snapped
            first: TransportNode = self._nodes[0]
            weight: complex = (position - self._path.start) / (first.position - self._path.start)
            return self.initial_values + (np.array(first.values) - self.initial_values) * weight
        if index >= len(self._nodes):
            raise ValueError(f"Parameter {tau} lies beyond the path end.")
        left, right = self._nodes[index - 1], self._nodes[index]
        weight = (position - left.position) / (right.position - left.position)
        predicted: np.ndarray = np.array(left.values) + (np.array(right.values) - np.array(left.values)) * weight
        snapped: Optional[Tuple[np.ndarray, float]] = self._snap(position, predicted)
        if snapped is None:
            raise NonConvergenceException(f"Ambiguous lattice match between transport nodes at q = {position:.6g}.")
        return snapped[0]

    def _snap(self, position: complex, predicted: np.ndarray) -> Optional[Tuple[np.ndarray, float]]:
        """:return: Predicted periods snapped onto the lattice at position and the lattice error, None when ambiguous."""
        lattice: PeriodLattice = self.lattice_at(position)
        snapped: List[complex] = []
        for value in predicted:
            match: LatticeMatch = lattice.nearest_vector(complex(value))
            if match.distance >= MATCH_FRACTION * lattice.shortest_length:
                return None
            if match.distance >= AMBIGUITY_RATIO * match.runner_up_distance:
                return None
            snapped.append(match.vector)
        coefficient_size: float = max(abs(value) for value in snapped) / lattice.shortest_length
        return np.array(snapped, dtype=complex), lattice.error * (1.0 + coefficient_size)

    def _start(self) -> Tuple[float, complex, np.ndarray, float, Optional[Tuple[complex, np.ndarray]]]:
        """:return: (tau, position, values, error, previous) of the first node."""
        initial: np.ndarray = self.initial_values
        if not self.is_anchored:
            snapped = self._snap(self._path.start, initial)
            if snapped is None:
                raise NonConvergenceException(f"Initial periods are not lattice vectors at q = {self._path.start:.6g}.")
            return 0.0, self._path.start, snapped[0], snapped[1], None
        first_segment: IContourSegment = self._path.segments[0]
        tau: float = min(ANCHOR_OFFSET / first_segment.length, 0.5)
        position: complex = complex(first_segment.point(tau))
        snapped = self._snap(position, initial)
        if snapped is None:
            raise NonConvergenceException(f"Anchor periods do not match the lattice at q = {position:.6g}.")
        return tau, position, snapped[0], snapped[1], (self._path.start, initial)

    def _transport(self) -> List[TransportNode]:
        tau, position, values, error, previous = self._start()
        nodes: List[TransportNode] = [TransportNode(tau=tau, position=position, values=tuple(values), error=error)]
        for index, segment in enumerate(self._path.segments):
            end_tau: float = float(index + 1)
            while end_tau - tau > 1e-15:
                nominal: float = MAX_STEP_FRACTION * distance_to_critical_values(position) / segment.length
                step: float = min(nominal, end_tau - tau)
                accepted = None
                with WhileLoopSafety(max_iterations=MAX_STEP_HALVINGS) as loop:
                    while loop.safety_condition():
                        candidate_tau: float = min(tau + step, end_tau)
                        candidate: complex = complex(segment.point(candidate_tau - index))
                        if previous is None:
                            predicted: np.ndarray = values
                        else:
                            slope: np.ndarray = (values - previous[1]) / (position - previous[0])
                            predicted = values + slope * (candidate - position)
                        accepted = self._snap(candidate, predicted)
                        if accepted is not None:
                            break
                        step *= 0.5
                if accepted is None:
                    raise NonConvergenceException(
                        f"Cycle transport lost the lattice match near q = {position:.6g} after {MAX_STEP_HALVINGS} step halvings.",
                        partial_result=nodes,
                    )
                if step < STEP_WARNING_FRACTION * nominal:
                    warnings.warn(**StepSizeReductionWarning.warning_format(position=position, step=step * segment.length))
                previous = (position, values)
                tau, position = candidate_tau, candidate
                values, error = accepted
                nodes.append(TransportNode(tau=tau, position=position, values=tuple(values), error=error))
        return nodes
    # endregion


class TransportIntegral:
    """
    Behaviour class, cumulative integrals of transported periods along the base path.
    Each transport step is integrated with Gauss-Legendre rules on snapped periods;
    the difference between two orders is the error estimate.
    """

    # region Class Properties
    @property
    def transport(self) -> CycleTransport:
        return self._transport

    @property
    def cumulative(self) -> np.ndarray:
        """:return: Integrals from the path start to each transport node, shape (node count, cycle count)."""
        return self._cumulative

    @property
    def final_value(self) -> np.ndarray:
        return self._cumulative[-1]

    @property
    def error(self) -> float:
        """:return: Step quadrature error plus the lattice error integrated along the path."""
        return self._error

    @property
    def n_evaluations(self) -> int:
        """:return: Number of transported period evaluations spent on the quadrature."""
        return self._evaluations
    # endregion

    # region Class Constructor
    def __init__(self, transport: CycleTransport):
        self._transport: CycleTransport = transport
        self._evaluations: int = 0
        nodes: List[TransportNode] = transport.nodes
        cumulative: List[np.ndarray] = [self._anchor_integral(nodes[0].position)]
        error: float = 0.0
        for left, right in zip(nodes[:-1], nodes[1:]):
            increment, step_error = self._interval_integral(left.tau, right.tau)
            cumulative.append(cumulative[-1] + increment)
            error += step_error + right.error * abs(right.position - left.position)
        self._cumulative: np.ndarray = np.array(cumulative, dtype=complex)
        self._error: float = error
    # endregion

    # region Class Methods
    def value_at(self, tau: float) -> np.ndarray:
        """:return: Integrals from the path start to global parameter tau."""
        taus: np.ndarray = self._transport.taus
        index: int = int(np.searchsorted(taus, tau, side='right')) - 1
        if index < 0:
            return self._anchor_integral(self._transport.path.point(tau))
        if taus[index] == tau:
            return self._cumulative[index]
        increment, _ = self._interval_integral(float(taus[index]), tau)
        return self._cumulative[index] + increment

    def _anchor_integral(self, position: complex) -> np.ndarray:
        """:return: Integral from an anchored start to position inside the anchor offset (trapezoid on a linear interpolant)."""
        path: BasePath = self._transport.path
        if not self._transport.is_anchored:
            return np.zeros(self._transport.cycle_count, dtype=complex)
        first: TransportNode = self._transport.nodes[0]
        weight: complex = (position - path.start) / (first.position - path.start)
        end_values: np.ndarray = self._transport.initial_values + (np.array(first.values) - self._transport.initial_values) * weight
        return 0.5 * (self._transport.initial_values + end_values) * (position - path.start)

    def _interval_integral(self, tau_start: float, tau_end: float) -> Tuple[np.ndarray, float]:
        """:return: Integral over [tau_start, tau_end] inside one segment and the two-order error estimate."""
        path: BasePath = self._transport.path
        index: int = min(int(np.floor(tau_start)), path.segment_count - 1)
        segment: IContourSegment = path.segments[index]
        local_start, local_end = tau_start - index, tau_end - index
        half: float = 0.5 * (local_end - local_start)
        estimates: List[np.ndarray] = []
        for order in (GAUSS_ORDER, ESTIMATE_ORDER):
            abscissae, weights = _GAUSS_RULES[order]
            local: np.ndarray = local_start + half * (abscissae + 1.0)
            values: np.ndarray = np.array([self._transport.values_at(index + s) for s in local])
            self._evaluations += len(local)
            jacobian: np.ndarray = np.asarray(segment.derivative(local)) * half * weights
            estimates.append(jacobian @ values)
        return estimates[0], float(np.max(np.abs(estimates[0] - estimates[1])))
    # endregion


def vanishing_period(j: int) -> complex:
    """:return: Limit of the period of the vanishing cycle V_j at its critical value 3 zeta^j: zeta^-j (-2 pi i / sqrt 3)."""
    return zeta_power(-j) * (-2j * np.pi / np.sqrt(3.0))
