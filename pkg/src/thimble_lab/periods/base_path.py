# -------------------------------------------
# Module describing base paths in the q-plane.
# Thimble paths live in W_j, the plane minus the rays {r zeta^k, r >= 3};
# the path of thimble j may start at its own critical value 3 zeta^j.
# -------------------------------------------
from dataclasses import dataclass, field
from typing import Optional, Sequence
import numpy as np
from thimble_lab.numkernel.contour import Contour, LineSegment, ArcSegment
from thimble_lab.fibration.family import critical_values, zeta_power, CRITICAL_VALUE_MODULUS
from thimble_lab.homology.monodromy import LoopLabel
from thimble_lab.utilities.custom_exceptions import (
    NearCriticalValueException,
    PathExitsDomainException,
)

DEFAULT_PATH_CLEARANCE: float = 1e-3
LASSO_RADIUS: float = 1.0
INFINITY_LOOP_RADIUS: float = 5.0
ARC_CROSSING_SAMPLES: int = 2048
GEOMETRY_TOLERANCE: float = 1e-12


@dataclass(frozen=True)
class BasePath:
    """
    Data class, oriented path in the q-plane avoiding the critical values.
    An anchored path starts exactly at the critical value 3 zeta^anchor;
    only its first segment is allowed to approach that value.
    """
    contour: Contour
    clearance: float = field(default=DEFAULT_PATH_CLEARANCE)
    anchor: Optional[int] = field(default=None)

    # region Class Properties
    @property
    def nodes(self):
        return self.contour.nodes

    @property
    def start(self) -> complex:
        return self.contour.start

    @property
    def end(self) -> complex:
        return self.contour.end

    @property
    def length(self) -> float:
        return self.contour.length

    @property
    def segments(self):
        return self.contour.segments

    @property
    def segment_count(self) -> int:
        return self.contour.segment_count

    @property
    def is_closed(self) -> bool:
        return self.contour.is_closed
    # endregion

    # region Class Methods
    def __post_init__(self):
        if self.clearance <= 0:
            raise ValueError(f"Path clearance must be positive, got {self.clearance}.")
        if self.anchor is not None:
            object.__setattr__(self, 'anchor', int(self.anchor) % 3)
            anchor_value: complex = critical_values()[self.anchor]
            if abs(self.start - anchor_value) > GEOMETRY_TOLERANCE * CRITICAL_VALUE_MODULUS:
                raise ValueError(f"Anchored path must start at {anchor_value}, got {self.start}.")
            if not isinstance(self.segments[0], LineSegment):
                raise ValueError("Anchored path must leave its critical value along a straight segment.")
        distance: float = self.critical_distance()
        if distance <= self.clearance:
            raise NearCriticalValueException(
                f"Base path comes within {distance:.3e} of a critical value (clearance {self.clearance:.1e})."
            )

    def critical_distance(self) -> float:
        """:return: Minimal distance to the critical values, ignoring the anchor on the first segment."""
        distances = []
        for k, value in enumerate(critical_values()):
            if k == self.anchor:
                if self.segment_count > 1:
                    distances.append(min(segment.distance_to(value) for segment in self.segments[1:]))
                continue
            distances.append(self.contour.distance_to(value))
        return float(min(distances)) if distances else np.inf

    def point(self, tau: float) -> complex:
        """:return: Point at global parameter tau in [0, segment_count]."""
        return complex(self.contour.point_at_global(tau)[0])

    def reversed(self) -> 'BasePath':
        return BasePath(contour=self.contour.reversed(), clearance=self.clearance)

    def concatenate(self, other: 'BasePath') -> 'BasePath':
        return BasePath(contour=self.contour.concatenate(other.contour), clearance=self.clearance, anchor=self.anchor)

    def transformed(self, factor: complex) -> 'BasePath':
        """:return: Path multiplied by factor; a zeta-power factor moves the anchor along."""
        anchor: Optional[int] = None
        if self.anchor is not None:
            image: complex = critical_values()[self.anchor] * factor
            matches = [k for k, value in enumerate(critical_values()) if abs(value - image) <= 1e-9]
            anchor = matches[0] if matches else None
        return BasePath(contour=self.contour.transformed(factor), clearance=self.clearance, anchor=anchor)

    def in_domain(self, j: int) -> bool:
        """:return: Whether the path stays inside W_j."""
        try:
            check_in_domain(self, j)
        except PathExitsDomainException:
            return False
        return True

    @classmethod
    def from_nodes(cls, nodes: Sequence[complex], clearance: float = DEFAULT_PATH_CLEARANCE, anchor: Optional[int] = None) -> 'BasePath':
        return BasePath(contour=Contour.from_nodes(nodes), clearance=clearance, anchor=anchor)
    # endregion


def _line_hits_ray(start: complex, end: complex, k: int, allow_start: bool) -> bool:
    """:return: Whether the segment meets the ray {r zeta^k, r >= 3} (the start point excepted when allowed)."""
    rotation: complex = zeta_power(-k)
    a: complex = start * rotation
    b: complex = end * rotation
    scale: float = GEOMETRY_TOLERANCE * max(1.0, abs(a), abs(b))
    if abs(a.imag) <= scale and abs(b.imag) <= scale:
        high: float = max(a.real, b.real)
        if high < CRITICAL_VALUE_MODULUS - scale:
            return False
        if allow_start and abs(a - CRITICAL_VALUE_MODULUS) <= scale and b.real <= a.real:
            return False
        return True
    if (a.imag > scale and b.imag > scale) or (a.imag < -scale and b.imag < -scale):
        return False
    fraction: float = a.imag / (a.imag - b.imag)
    crossing: complex = a + (b - a) * fraction
    if crossing.real < CRITICAL_VALUE_MODULUS - scale:
        return False
    if allow_start and fraction <= scale and abs(a - CRITICAL_VALUE_MODULUS) <= scale:
        return False
    return True


def _arc_hits_ray(segment: ArcSegment, k: int) -> bool:
    """:return: Whether a sampled arc crosses or touches the ray {r zeta^k, r >= 3}."""
    samples: np.ndarray = np.asarray(segment.point(np.linspace(0.0, 1.0, ARC_CROSSING_SAMPLES + 1))) * zeta_power(-k)
    for a, b in zip(samples[:-1], samples[1:]):
        if _line_hits_ray(complex(a), complex(b), 0, allow_start=False):
            return True
    return False


def check_in_domain(path: BasePath, j: int) -> None:
    """
    :param path: Base path.
    :param j: Thimble index; the start 3 zeta^j is allowed when the path is anchored there.
    :raises PathExitsDomainException: when a segment meets one of the three cut rays.
    """
    for k in range(3):
        for index, segment in enumerate(path.segments):
            allow_start: bool = k == j % 3 and index == 0 and path.anchor == j % 3
            if isinstance(segment, ArcSegment):
                hit: bool = _arc_hits_ray(segment, k)
            else:
                hit = _line_hits_ray(segment.start, segment.end, k, allow_start=allow_start)
            if hit:
                raise PathExitsDomainException(
                    f"Segment {index} ({segment.start:.6g} -> {segment.end:.6g}) crosses the ray through {critical_values()[k]:.6g}."
                )


def thimble_path(j: int, q: complex, clearance: float = DEFAULT_PATH_CLEARANCE) -> BasePath:
    """
    :param j: Thimble index.
    :param q: Target point.
    :return: Straight path from 3 zeta^j to q when it stays in W_j, else the path through 0.
    """
    origin: complex = critical_values()[j % 3]
    q = complex(q)
    if abs(q - origin) <= GEOMETRY_TOLERANCE:
        raise ValueError(f"Target {q} coincides with the thimble start; the integral is zero.")
    straight: BasePath = BasePath.from_nodes([origin, q], clearance=clearance, anchor=j)
    if straight.in_domain(j):
        return straight
    if abs(q) > GEOMETRY_TOLERANCE:
        bent: BasePath = BasePath.from_nodes([origin, 0j, q], clearance=clearance, anchor=j)
        if bent.in_domain(j):
            return bent
    raise PathExitsDomainException(f"Target {q} is not in the domain W_{j % 3}.")


def lasso(label: LoopLabel, base: complex = 0j, radius: float = LASSO_RADIUS, clearance: float = DEFAULT_PATH_CLEARANCE) -> BasePath:
    """
    :return: Closed loop from base to the circle of given radius around the critical value of label,
        once counterclockwise around it, and back along the same ray.
    """
    if label == LoopLabel.INFINITY:
        return infinity_loop(base=base, clearance=clearance)
    center: complex = critical_values()[label.critical_index]
    direction: complex = (center - base) / abs(center - base)
    entry: complex = center - radius * direction
    circle: ArcSegment = ArcSegment(center=center, radius=radius, start_angle=float(np.angle(entry - center)), sweep=2.0 * np.pi)
    contour: Contour = Contour(segments=(
        LineSegment(start_point=complex(base), end_point=entry),
        circle,
        LineSegment(start_point=entry, end_point=complex(base)),
    ))
    return BasePath(contour=contour, clearance=clearance)


def infinity_loop(base: complex = 0j, radius: float = INFINITY_LOOP_RADIUS, clearance: float = DEFAULT_PATH_CLEARANCE) -> BasePath:
    """:return: Closed loop from base out to -radius, once counterclockwise around the circle of given radius, and back."""
    if radius <= CRITICAL_VALUE_MODULUS:
        raise ValueError(f"Loop around infinity needs radius > {CRITICAL_VALUE_MODULUS}, got {radius}.")
    entry: complex = complex(-radius, 0.0)
    contour: Contour = Contour(segments=(
        LineSegment(start_point=complex(base), end_point=entry),
        ArcSegment(center=0j, radius=radius, start_angle=np.pi, sweep=2.0 * np.pi),
        LineSegment(start_point=entry, end_point=complex(base)),
    ))
    return BasePath(contour=contour, clearance=clearance)
