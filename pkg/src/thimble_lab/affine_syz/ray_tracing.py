# -------------------------------------------
# Module tracing affine rays as level sets of Im H, where H is the integral of a transported period.
# The exact derivative dH/dq is the period itself, so the tangent of {Im H = level} is +-conj(P)/|P|;
# each predictor step along the tangent is followed by Newton corrections along the normal.
# H and P are carried from point to point by continuing the period along the short connecting segments.
# -------------------------------------------
from dataclasses import dataclass, field
from enum import Enum, unique
from typing import List, Optional, Tuple
import numpy as np
from thimble_lab.numkernel.quadrature import DEFAULT_TOLERANCE
from thimble_lab.fibration.family import critical_values, CRITICAL_VALUE_MODULUS
from thimble_lab.homology.homology_class import HomologyClass
from thimble_lab.homology.monodromy import LoopLabel, cut_invariant_cycle
from thimble_lab.periods.base_path import BasePath, DEFAULT_PATH_CLEARANCE
from thimble_lab.periods.cycle_transport import CycleTransport, TransportIntegral, vanishing_period
from thimble_lab.periods.thimble_integrals import REFERENCE_POINT, reference_periods
from thimble_lab.affine_syz.affine_chart import DEFAULT_DETOUR_RADIUS, radial_path
from thimble_lab.affine_syz.triple_point import reference_scale
from thimble_lab.utilities.custom_context_managers import WhileLoopSafety
from thimble_lab.utilities.custom_exceptions import NonConvergenceException, TraceLostException

DEFAULT_RAY_STEP: float = 0.02
DEFAULT_RAY_LENGTH: float = 12.0
CORRECTOR_TOLERANCE: float = 1e-9
MAX_CORRECTOR_ITERATIONS: int = 8
MAX_TRACE_STEPS: int = 5000
CUT_START_OFFSET: float = 0.25


@unique
class RayKind(Enum):
    L_MINUS_C_MINUS_D = 'l_-c-d'
    L_MINUS_2C_PLUS_D = 'l_-2c+d'
    NEGATIVE_REAL_AXIS = 'negative_real_axis'
    POSITIVE_REAL_CUT = 'positive_real_cut'

    # region Class Methods
    @classmethod
    def from_name(cls, name: str) -> 'RayKind':
        for kind in cls:
            if kind.value == name or kind.name.lower() == name.lower():
                return kind
        raise ValueError(f"Unknown ray '{name}', expected one of {[kind.value for kind in cls]}.")
    # endregion


@dataclass(frozen=True)
class AffineRay:
    """
    Data class, traced level set {Im H = level} with the integral values along the trace.
    Origin is None for rays starting at the reference point.
    """
    kind: RayKind
    direction_class: HomologyClass
    origin: Optional[LoopLabel]
    trace: Tuple[complex, ...]
    values: Tuple[complex, ...]
    level: float
    scale: float
    axis_crossing: Optional[float] = field(default=None)

    # region Class Properties
    @property
    def start(self) -> complex:
        return self.trace[0]

    @property
    def end(self) -> complex:
        return self.trace[-1]

    @property
    def length(self) -> float:
        return float(np.sum(np.abs(np.diff(np.array(self.trace)))))

    @property
    def max_residual(self) -> float:
        """:return: Largest |Im H - level| along the trace."""
        return float(np.max(np.abs(np.array(self.values).imag - self.level)))
    # endregion

    # region Class Methods
    def distance_to(self, z: complex) -> float:
        """:return: Distance from z to the polygonal trace."""
        points: np.ndarray = np.array(self.trace)
        starts, ends = points[:-1], points[1:]
        directions: np.ndarray = ends - starts
        lengths_squared: np.ndarray = np.abs(directions) ** 2
        with np.errstate(invalid='ignore', divide='ignore'):
            local: np.ndarray = np.clip(np.real((z - starts) * np.conj(directions)) / lengths_squared, 0.0, 1.0)
        local = np.nan_to_num(local)
        return float(np.min(np.abs(starts + local * directions - z)))
    # endregion


@dataclass(frozen=True)
class _TracePoint:
    q: complex
    value: complex
    period: complex


class LevelSetTracer:
    """
    Behaviour class, predictor-corrector continuation of {Im H = level} from a start point.
    The orientation picks the tangent +orientation * conj(P) / |P|, along which Re H increases for +1.
    """

    # region Class Constructor
    def __init__(self, level: float, orientation: int, step: float, tol: float, clearance: float, corrector_tolerance: float):
        if step <= 0:
            raise ValueError(f"Step must be positive, got {step}.")
        self._level: float = level
        self._orientation: int = 1 if orientation >= 0 else -1
        self._step: float = step
        self._tol: float = tol
        self._clearance: float = clearance
        self._corrector_tolerance: float = corrector_tolerance
    # endregion

    # region Class Methods
    def tangent(self, period: complex) -> complex:
        return self._orientation * period.conjugate() / abs(period)

    def advance(self, point: _TracePoint, target: complex, anchor: Optional[int] = None) -> _TracePoint:
        """:return: Point at target with H and P continued along the straight segment."""
        path: BasePath = BasePath.from_nodes([point.q, target], clearance=self._clearance, anchor=anchor)
        integral: TransportIntegral = TransportIntegral(CycleTransport(path, [point.period], tol=self._tol))
        return _TracePoint(
            q=target,
            value=point.value + complex(integral.final_value[0]),
            period=complex(integral.transport.final_values[0]),
        )

    def correct(self, predicted: _TracePoint, direction: complex, trace: List[_TracePoint]) -> _TracePoint:
        """:return: Point moved along the normal i * direction until |Im H - level| <= corrector tolerance."""
        current: _TracePoint = predicted
        normal: complex = 1j * direction
        with WhileLoopSafety(max_iterations=MAX_CORRECTOR_ITERATIONS) as loop:
            while abs(current.value.imag - self._level) > self._corrector_tolerance and loop.safety_condition():
                rate: float = (current.period * normal).imag
                if rate == 0:
                    break
                shift: float = -(current.value.imag - self._level) / rate
                current = self.advance(current, current.q + shift * normal)
        if abs(current.value.imag - self._level) > self._corrector_tolerance:
            raise TraceLostException(
                f"Corrector did not reach |Im H - level| <= {self._corrector_tolerance:.1e} near q = {predicted.q:.6g}.",
                last_point=trace[-1].q,
                trace=[point.q for point in trace],
            )
        return current

    def step_from(self, point: _TracePoint, trace: List[_TracePoint], anchor: Optional[int] = None) -> _TracePoint:
        direction: complex = self.tangent(point.period)
        try:
            predicted: _TracePoint = self.advance(point, point.q + self._step * direction, anchor=anchor)
            return self.correct(predicted, direction, trace)
        except NonConvergenceException as exception:
            raise TraceLostException(
                f"Period continuation failed near q = {point.q:.6g}: {exception}",
                last_point=trace[-1].q,
                trace=[node.q for node in trace],
            ) from exception

    def refine_axis_crossing(self, before: _TracePoint, after: _TracePoint, trace: List[_TracePoint]) -> _TracePoint:
        """:return: Point on the real axis between two trace points with Im H = level (Newton along the axis)."""
        weight: float = before.q.imag / (before.q.imag - after.q.imag)
        current: _TracePoint = self.advance(before, complex((before.q + weight * (after.q - before.q)).real, 0.0))
        with WhileLoopSafety(max_iterations=MAX_CORRECTOR_ITERATIONS) as loop:
            while abs(current.value.imag - self._level) > self._corrector_tolerance and loop.safety_condition():
                shift: float = -(current.value.imag - self._level) / current.period.imag
                current = self.advance(current, current.q + shift)
        if abs(current.value.imag - self._level) > self._corrector_tolerance:
            raise TraceLostException(
                f"Real axis crossing did not converge near q = {current.q:.6g}.",
                last_point=trace[-1].q,
                trace=[point.q for point in trace],
            )
        return current
    # endregion


def _ray_start(kind: RayKind, tol: float, clearance: float, detour_radius: float) -> Tuple[_TracePoint, Optional[int], HomologyClass, Optional[LoopLabel], int]:
    """:return: (start point, anchor index, direction class, origin, orientation)."""
    if kind == RayKind.L_MINUS_C_MINUS_D:
        start = _TracePoint(q=critical_values()[1], value=0j, period=vanishing_period(1))
        return start, 1, HomologyClass.from_cd(-1, -1), LoopLabel.B, +1
    if kind == RayKind.L_MINUS_2C_PLUS_D:
        start = _TracePoint(q=critical_values()[2], value=0j, period=vanishing_period(2))
        return start, 2, HomologyClass.from_cd(-2, 1), LoopLabel.C, -1
    if kind == RayKind.NEGATIVE_REAL_AXIS:
        period_c: complex = reference_periods(tol).c
        start = _TracePoint(q=REFERENCE_POINT, value=0j, period=period_c)
        orientation: int = -1 if period_c.real > 0 else +1
        return start, None, HomologyClass.from_cd(1, 0), None, orientation
    cycle: HomologyClass = cut_invariant_cycle()
    origin: _TracePoint = _TracePoint(q=REFERENCE_POINT, value=0j, period=reference_periods(tol).period_of(cycle))
    path: BasePath = radial_path(CRITICAL_VALUE_MODULUS + CUT_START_OFFSET, detour_radius=detour_radius, clearance=clearance)
    integral: TransportIntegral = TransportIntegral(CycleTransport(path, [origin.period], tol=tol))
    period: complex = complex(integral.transport.final_values[0])
    start = _TracePoint(q=path.end, value=complex(integral.final_value[0]), period=period)
    orientation = +1 if period.real > 0 else -1
    return start, None, cycle, LoopLabel.A, orientation


def trace_ray(
        kind: RayKind,
        step: float = DEFAULT_RAY_STEP,
        max_length: float = DEFAULT_RAY_LENGTH,
        tol: float = DEFAULT_TOLERANCE,
        clearance: float = DEFAULT_PATH_CLEARANCE,
        detour_radius: float = DEFAULT_DETOUR_RADIUS) -> AffineRay:
    """
    :param kind: l_{-c-d} ({G_1 in R_+} from B), l_{-2c+d} ({G_2 in R_-} from C), the negative real axis
        (level set of f_c from 0) or the positive real cut (level set of the c - d integral, reached below A).
    :param step: Predictor step length.
    :param max_length: Trace length at which the axis rays stop; the thimble rays must cross the real axis within it.
    :return: Traced ray; the two thimble rays stop at their refined crossing with the real axis.
    :raises TraceLostException: when the corrector or the period continuation fails,
        or when a thimble ray ends without crossing the real axis.
    """
    scale: float = reference_scale(tol)
    start, anchor, direction_class, origin, orientation = _ray_start(kind, tol, clearance, detour_radius)
    level: float = start.value.imag
    tracer: LevelSetTracer = LevelSetTracer(
        level=level,
        orientation=orientation,
        step=step,
        tol=tol,
        clearance=clearance,
        corrector_tolerance=CORRECTOR_TOLERANCE * scale,
    )
    stops_on_axis: bool = anchor is not None
    trace: List[_TracePoint] = [start]
    crossing: Optional[float] = None
    length: float = 0.0
    with WhileLoopSafety(max_iterations=MAX_TRACE_STEPS) as loop:
        while length < max_length and loop.safety_condition():
            point: _TracePoint = tracer.step_from(trace[-1], trace, anchor=anchor if len(trace) == 1 else None)
            length += abs(point.q - trace[-1].q)
            if stops_on_axis and np.sign(point.q.imag) != np.sign(start.q.imag):
                refined: _TracePoint = tracer.refine_axis_crossing(trace[-1], point, trace)
                trace.append(refined)
                crossing = refined.q.real
                break
            trace.append(point)
    if stops_on_axis and crossing is None:
        raise TraceLostException(
            f"Ray {kind.value} did not reach the real axis within length {max_length} ({len(trace) - 1} steps).",
            last_point=trace[-1].q,
            trace=tuple(point.q for point in trace),
        )
    return AffineRay(
        kind=kind,
        direction_class=direction_class,
        origin=origin,
        trace=tuple(point.q for point in trace),
        values=tuple(point.value for point in trace),
        level=level,
        scale=scale,
        axis_crossing=crossing,
    )
