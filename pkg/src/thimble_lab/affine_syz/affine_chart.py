# -------------------------------------------
# Module containing the complex affine coordinates on the base of the fibration.
# f_c(q), f_d(q) are the imaginary parts of the integrals of the periods of c and d along a
# base path from the reference point 0; the radial path schema fixes the path for every q.
# A radial path that would pass within the detour radius of 3 zeta^k beyond it is bent around
# 3 zeta^k on the side where q lies, so the data only jumps across the three cut rays.
# -------------------------------------------
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple
import numpy as np
from tqdm import tqdm
from thimble_lab.numkernel.contour import Contour, LineSegment, ArcSegment, IContourSegment
from thimble_lab.numkernel.quadrature import DEFAULT_TOLERANCE
from thimble_lab.fibration.family import zeta_power, CRITICAL_VALUE_MODULUS
from thimble_lab.homology.monodromy import (
    LoopLabel,
    LatticeAutomorphism,
    monodromy_around,
    conjugation_action,
)
from thimble_lab.periods.base_path import BasePath, DEFAULT_PATH_CLEARANCE
from thimble_lab.periods.cycle_transport import CycleTransport, TransportIntegral
from thimble_lab.periods.thimble_integrals import REFERENCE_POINT, ReferencePeriods, reference_periods
from thimble_lab.utilities.custom_exceptions import (
    NearCriticalValueException,
    NonConvergenceException,
)
from thimble_lab.utilities.custom_warnings import ChartSampleFailedWarning

DEFAULT_DETOUR_RADIUS: float = 0.1
MAX_DETOUR_RADIUS: float = 1.0
AffineValue = Tuple[float, float]


@dataclass(frozen=True)
class AffineChartSample:
    """
    Data class, affine coordinates (f_c, f_d) at one grid point with its chamber.
    Failed samples keep their position and chamber and carry the failure reason instead of f.
    """
    q: complex
    f: Optional[AffineValue]
    chamber_id: int
    failure: Optional[str] = field(default=None)

    # region Class Properties
    @property
    def succeeded(self) -> bool:
        return self.f is not None
    # endregion


def _validate_detour_radius(detour_radius: float) -> None:
    if not 0 < detour_radius <= MAX_DETOUR_RADIUS:
        raise ValueError(f"Detour radius must lie in (0, {MAX_DETOUR_RADIUS}], got {detour_radius}.")


def _shadow(q: complex, detour_radius: float) -> Optional[Tuple[int, complex]]:
    """:return: (k, q rotated by zeta^-k) when the segment 0 -> q passes within the detour radius of 3 zeta^k beyond its foot point."""
    for k in range(3):
        rotated: complex = q * zeta_power(-k)
        modulus_squared: float = abs(rotated) ** 2
        if modulus_squared == 0:
            continue
        foot: float = CRITICAL_VALUE_MODULUS * rotated.real / modulus_squared
        distance: float = CRITICAL_VALUE_MODULUS * abs(rotated.imag) / abs(rotated)
        if 0 < foot < 1 and distance < detour_radius:
            return k, rotated
    return None


def chamber_of(q: complex, detour_radius: float = DEFAULT_DETOUR_RADIUS) -> int:
    """
    :param q: Point of the base.
    :param detour_radius: Radius of the detour discs around the critical values.
    :return: k + 1 when the radial path passes 3 zeta^k on its clockwise side (q on or clockwise of the cut ray), else 0.
    """
    _validate_detour_radius(detour_radius)
    shadow = _shadow(complex(q), detour_radius)
    if shadow is None:
        return 0
    k, rotated = shadow
    return k + 1 if rotated.imag <= 0 else 0


def radial_path(q: complex, detour_radius: float = DEFAULT_DETOUR_RADIUS, clearance: float = DEFAULT_PATH_CLEARANCE) -> BasePath:
    """
    :param q: End point, not the reference point.
    :param detour_radius: Radius of the detour discs around the critical values.
    :param clearance: Minimal distance of the path to the critical values.
    :return: Straight path 0 -> q, or the path bent around the shadowing critical value on the side of q.
    :raises NearCriticalValueException: when q lies within clearance of a critical value.
    """
    _validate_detour_radius(detour_radius)
    q = complex(q)
    if q == REFERENCE_POINT:
        raise ValueError("The radial path to the reference point is empty.")
    shadow = _shadow(q, detour_radius)
    if shadow is None:
        return BasePath.from_nodes([REFERENCE_POINT, q], clearance=clearance)
    k, rotated = shadow
    offset: complex = rotated - CRITICAL_VALUE_MODULUS
    radius: float = min(detour_radius, abs(offset))
    if radius <= clearance:
        raise NearCriticalValueException(f"Target {q} lies within {clearance} of the critical value {CRITICAL_VALUE_MODULUS * zeta_power(k):.6g}.")
    clockwise_side: bool = rotated.imag <= 0
    if abs(offset) <= detour_radius:
        angle: float = float(np.angle(offset))
        sweep: float = np.pi + angle if clockwise_side else angle - np.pi
    else:
        sweep = np.pi if clockwise_side else -np.pi
    segments: List[IContourSegment] = [
        LineSegment(start_point=REFERENCE_POINT, end_point=complex(CRITICAL_VALUE_MODULUS - radius)),
        ArcSegment(center=complex(CRITICAL_VALUE_MODULUS), radius=radius, start_angle=np.pi, sweep=sweep),
    ]
    if abs(offset) > detour_radius:
        segments.append(LineSegment(start_point=complex(CRITICAL_VALUE_MODULUS + radius), end_point=rotated))
    contour: Contour = Contour(segments=tuple(segments)).transformed(zeta_power(k))
    return BasePath(contour=contour, clearance=clearance)


def _periods_at(base: complex, tol: float, clearance: float, detour_radius: float) -> np.ndarray:
    """:return: Periods of (c, d) at base, continued along the radial path."""
    reference: ReferencePeriods = reference_periods(tol)
    initial: np.ndarray = np.array([reference.c, reference.d], dtype=complex)
    if base == REFERENCE_POINT:
        return initial
    return CycleTransport(radial_path(base, detour_radius, clearance), initial, tol=tol).final_values


def affine_coordinates(
        q: complex,
        base: complex = REFERENCE_POINT,
        path: Optional[BasePath] = None,
        tol: float = DEFAULT_TOLERANCE,
        clearance: float = DEFAULT_PATH_CLEARANCE,
        detour_radius: float = DEFAULT_DETOUR_RADIUS) -> AffineValue:
    """
    :param q: End point.
    :param base: Start point; the periods of c, d at base are continued along its radial path.
    :param path: Path from base to q, defaults to the radial path (base = 0) or the straight segment.
    :param tol: Quadrature tolerance.
    :return: (f_c, f_d) = Im of the integrals of the periods of c and d along the path.
    :raises NearCriticalValueException: when the path passes within clearance of a critical value.
    """
    q, base = complex(q), complex(base)
    if path is None:
        if q == base:
            return 0.0, 0.0
        path = radial_path(q, detour_radius, clearance) if base == REFERENCE_POINT else BasePath.from_nodes([base, q], clearance=clearance)
    if abs(path.start - base) > 1e-12 * max(1.0, abs(base)) or abs(path.end - q) > 1e-12 * max(1.0, abs(q)):
        raise ValueError(f"Path runs from {path.start} to {path.end}, expected {base} to {q}.")
    initial: np.ndarray = _periods_at(base, tol, clearance, detour_radius)
    integral: TransportIntegral = TransportIntegral(CycleTransport(path, initial, tol=tol))
    f_c, f_d = integral.final_value.imag
    return float(f_c), float(f_d)


def affine_monodromy(label: LoopLabel) -> LatticeAutomorphism:
    """:return: Linear part of the affine monodromy acting on (f_c, f_d): transpose of the fiber monodromy."""
    return monodromy_around(label).transpose()


def conjugation_image(f: AffineValue) -> AffineValue:
    """:return: Affine coordinates at conj(q) from those at q, -M^T f with M the conjugation action."""
    image: np.ndarray = -conjugation_action().transpose().as_array() @ np.asarray(f, dtype=float)
    return float(image[0]), float(image[1])


def _sample(q: complex, tol: float, clearance: float, detour_radius: float) -> AffineChartSample:
    chamber: int = chamber_of(q, detour_radius)
    try:
        f: AffineValue = affine_coordinates(q, tol=tol, clearance=clearance, detour_radius=detour_radius)
    except (NearCriticalValueException, NonConvergenceException, ValueError) as exception:
        warnings.warn(**ChartSampleFailedWarning.warning_format(position=q, reason=str(exception)))
        return AffineChartSample(q=q, f=None, chamber_id=chamber, failure=str(exception))
    return AffineChartSample(q=q, f=f, chamber_id=chamber)


def chart_grid(window: Tuple[float, float, float, float], resolution: Tuple[int, int]) -> List[complex]:
    """:return: Grid points of the window (re0, re1, im0, im1), rows of constant imaginary part from im0 upwards."""
    re_start, re_stop, im_start, im_stop = window
    columns, rows = resolution
    if columns < 1 or rows < 1:
        raise ValueError(f"Resolution must be positive, got {resolution}.")
    real_parts: np.ndarray = np.linspace(re_start, re_stop, columns)
    imaginary_parts: np.ndarray = np.linspace(im_start, im_stop, rows)
    return [complex(x, y) for y in imaginary_parts for x in real_parts]


def export_chart(
        window: Tuple[float, float, float, float],
        resolution: Tuple[int, int],
        tol: float = DEFAULT_TOLERANCE,
        clearance: float = DEFAULT_PATH_CLEARANCE,
        detour_radius: float = DEFAULT_DETOUR_RADIUS,
        threads: int = 1) -> List[AffineChartSample]:
    """
    :param window: (re0, re1, im0, im1).
    :param resolution: (columns, rows).
    :param threads: Worker count; the sample order does not depend on it.
    :return: Affine chart samples in grid order, failures recorded per point.
    """
    _validate_detour_radius(detour_radius)
    points: List[complex] = chart_grid(window, resolution)
    with ThreadPoolExecutor(max_workers=max(1, int(threads))) as executor:
        samples: List[AffineChartSample] = list(tqdm(
            executor.map(lambda point: _sample(point, tol, clearance, detour_radius), points),
            total=len(points),
            desc="Sampling Affine Chart",
        ))
    return samples


def chamber_ids(samples: Sequence[AffineChartSample]) -> List[int]:
    """:return: Sorted distinct chamber ids of the samples."""
    return sorted({sample.chamber_id for sample in samples})
