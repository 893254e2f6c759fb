# -------------------------------------------
# Module describing integration contours in the complex plane.
# A contour is an ordered sequence of straight and circular-arc segments,
# each parametrized over s in [0, 1].
# -------------------------------------------
from abc import ABCMeta, abstractmethod
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple, Union
import numpy as np
from thimble_lab.utilities.custom_exceptions import InterfaceMethodException

TWO_PI: float = 2.0 * np.pi
ComplexArray = np.ndarray
Parameter = Union[float, np.ndarray]


class IContourSegment(metaclass=ABCMeta):
    """
    Interface class, describing a single smooth contour segment parametrized over [0, 1].
    """

    # region Interface Properties
    @property
    @abstractmethod
    def start(self) -> complex:
        """:return: Point at s = 0."""
        raise InterfaceMethodException

    @property
    @abstractmethod
    def end(self) -> complex:
        """:return: Point at s = 1."""
        raise InterfaceMethodException

    @property
    @abstractmethod
    def length(self) -> float:
        """:return: Arc length of segment."""
        raise InterfaceMethodException
    # endregion

    # region Interface Methods
    @abstractmethod
    def point(self, s: Parameter) -> Union[complex, ComplexArray]:
        """:return: Point(s) on segment at parameter s (vectorized)."""
        raise InterfaceMethodException

    @abstractmethod
    def derivative(self, s: Parameter) -> Union[complex, ComplexArray]:
        """:return: dz/ds at parameter s (vectorized)."""
        raise InterfaceMethodException

    @abstractmethod
    def reversed(self) -> 'IContourSegment':
        """:return: Same point set traversed from end to start."""
        raise InterfaceMethodException

    @abstractmethod
    def distance_to(self, z: complex) -> float:
        """:return: Euclidean distance from z to the segment point set."""
        raise InterfaceMethodException
    # endregion


@dataclass(frozen=True)
class LineSegment(IContourSegment):
    """
    Data class, straight segment from start to end.
    """
    start_point: complex
    end_point: complex

    # region Class Properties
    @property
    def start(self) -> complex:
        return complex(self.start_point)

    @property
    def end(self) -> complex:
        return complex(self.end_point)

    @property
    def length(self) -> float:
        return abs(self.end_point - self.start_point)
    # endregion

    # region Class Methods
    def point(self, s: Parameter) -> Union[complex, ComplexArray]:
        return self.start_point + (self.end_point - self.start_point) * s

    def derivative(self, s: Parameter) -> Union[complex, ComplexArray]:
        difference: complex = complex(self.end_point - self.start_point)
        if np.ndim(s) == 0:
            return difference
        return np.full(np.shape(s), difference, dtype=complex)

    def reversed(self) -> 'LineSegment':
        return LineSegment(start_point=self.end_point, end_point=self.start_point)

    def distance_to(self, z: complex) -> float:
        direction: complex = self.end_point - self.start_point
        if direction == 0:
            return abs(z - self.start_point)
        projection: float = ((z - self.start_point) * direction.conjugate()).real / abs(direction) ** 2
        projection = min(max(projection, 0.0), 1.0)
        return abs(z - self.point(projection))
    # endregion


@dataclass(frozen=True)
class ArcSegment(IContourSegment):
    """
    Data class, circular arc around center with signed angular sweep (positive is counterclockwise).
    """
    center: complex
    radius: float
    start_angle: float
    sweep: float

    # region Class Properties
    @property
    def start(self) -> complex:
        return complex(self.point(0.0))

    @property
    def end(self) -> complex:
        return complex(self.point(1.0))

    @property
    def length(self) -> float:
        return abs(self.sweep) * self.radius

    @property
    def is_full_circle(self) -> bool:
        return bool(np.isclose(abs(self.sweep), TWO_PI, rtol=0.0, atol=1e-14))
    # endregion

    # region Class Methods
    def point(self, s: Parameter) -> Union[complex, ComplexArray]:
        return self.center + self.radius * np.exp(1j * (self.start_angle + self.sweep * np.asarray(s)))

    def derivative(self, s: Parameter) -> Union[complex, ComplexArray]:
        return 1j * self.sweep * self.radius * np.exp(1j * (self.start_angle + self.sweep * np.asarray(s)))

    def reversed(self) -> 'ArcSegment':
        return ArcSegment(
            center=self.center,
            radius=self.radius,
            start_angle=self.start_angle + self.sweep,
            sweep=-self.sweep,
        )

    def distance_to(self, z: complex) -> float:
        relative: complex = z - self.center
        if relative == 0:
            return self.radius
        angle: float = float(np.angle(relative))
        # Angular offset of the radial projection, measured along the sweep
        if self.sweep >= 0:
            offset: float = (angle - self.start_angle) % TWO_PI
        else:
            offset = (self.start_angle - angle) % TWO_PI
        if offset <= abs(self.sweep):
            return abs(abs(relative) - self.radius)
        return min(abs(z - self.start), abs(z - self.end))

    @classmethod
    def from_endpoints(cls, center: complex, start: complex, end: complex, counterclockwise: bool) -> 'ArcSegment':
        """
        :param center: Arc center.
        :param start: Start point (defines the radius).
        :param end: End point, only its angle is used.
        :param counterclockwise: Orientation of the sweep.
        :return: Arc from start to the angle of end with the requested orientation.
        """
        start_angle: float = float(np.angle(start - center))
        end_angle: float = float(np.angle(end - center))
        sweep: float = (end_angle - start_angle) % TWO_PI
        if not counterclockwise:
            sweep = sweep - TWO_PI if sweep > 0 else 0.0
        return ArcSegment(center=complex(center), radius=abs(start - center), start_angle=start_angle, sweep=sweep)
    # endregion


@dataclass(frozen=True)
class Contour:
    """
    Data class, ordered chain of contour segments. Consecutive segments share end points.
    """
    segments: Tuple[IContourSegment, ...] = field(default_factory=tuple)

    # region Class Properties
    @property
    def nodes(self) -> List[complex]:
        """:return: Segment junction points, including start and end."""
        return [segment.start for segment in self.segments] + [self.segments[-1].end]

    @property
    def start(self) -> complex:
        return self.segments[0].start

    @property
    def end(self) -> complex:
        return self.segments[-1].end

    @property
    def length(self) -> float:
        return float(sum(segment.length for segment in self.segments))

    @property
    def segment_count(self) -> int:
        return len(self.segments)

    @property
    def is_closed(self) -> bool:
        return abs(self.end - self.start) <= 1e-12 * max(1.0, abs(self.start))
    # endregion

    # region Class Methods
    def __post_init__(self):
        object.__setattr__(self, 'segments', tuple(self.segments))
        if len(self.segments) == 0:
            raise ValueError("Contour requires at least one segment (two nodes).")
        for segment in self.segments:
            if segment.length == 0:
                raise ValueError(f"Contour segment {segment} has zero length (consecutive nodes must be distinct).")
        for previous, following in zip(self.segments[:-1], self.segments[1:]):
            if abs(previous.end - following.start) > 1e-9 * max(1.0, abs(previous.end)):
                raise ValueError(f"Contour segments are not connected: {previous.end} != {following.start}.")

    def point_at(self, segment_index: int, s: Parameter) -> Union[complex, ComplexArray]:
        return self.segments[segment_index].point(s)

    def derivative_at(self, segment_index: int, s: Parameter) -> Union[complex, ComplexArray]:
        return self.segments[segment_index].derivative(s)

    def point_at_global(self, tau: np.ndarray) -> ComplexArray:
        """
        :param tau: Global parameter(s) in [0, segment_count]; integer part selects the segment.
        :return: Contour points.
        """
        tau = np.atleast_1d(np.asarray(tau, dtype=float))
        index: np.ndarray = np.clip(np.floor(tau).astype(int), 0, self.segment_count - 1)
        local: np.ndarray = tau - index
        result: ComplexArray = np.empty(tau.shape, dtype=complex)
        for segment_index, segment in enumerate(self.segments):
            mask: np.ndarray = index == segment_index
            if np.any(mask):
                result[mask] = segment.point(local[mask])
        return result

    def distance_to(self, z: complex) -> float:
        """:return: Distance from z to the contour point set."""
        return min(segment.distance_to(z) for segment in self.segments)

    def reversed(self) -> 'Contour':
        return Contour(segments=tuple(segment.reversed() for segment in reversed(self.segments)))

    def concatenate(self, other: 'Contour') -> 'Contour':
        return Contour(segments=self.segments + other.segments)

    def conjugated(self) -> 'Contour':
        """:return: Mirror image under complex conjugation, same traversal direction."""
        segments: List[IContourSegment] = []
        for segment in self.segments:
            if isinstance(segment, ArcSegment):
                segments.append(ArcSegment(
                    center=complex(segment.center).conjugate(),
                    radius=segment.radius,
                    start_angle=-segment.start_angle,
                    sweep=-segment.sweep,
                ))
            else:
                segments.append(LineSegment(start_point=segment.start.conjugate(), end_point=segment.end.conjugate()))
        return Contour(segments=tuple(segments))

    def transformed(self, factor: complex) -> 'Contour':
        """:return: Contour multiplied by a complex factor (rotation and scaling about the origin)."""
        segments: List[IContourSegment] = []
        for segment in self.segments:
            if isinstance(segment, ArcSegment):
                segments.append(ArcSegment(
                    center=segment.center * factor,
                    radius=segment.radius * abs(factor),
                    start_angle=segment.start_angle + float(np.angle(factor)),
                    sweep=segment.sweep,
                ))
            else:
                segments.append(LineSegment(start_point=segment.start * factor, end_point=segment.end * factor))
        return Contour(segments=tuple(segments))

    @classmethod
    def from_nodes(cls, nodes: Sequence[complex]) -> 'Contour':
        """:return: Polygonal contour through nodes."""
        nodes = [complex(node) for node in nodes]
        if len(nodes) < 2:
            raise ValueError("Contour requires at least two nodes.")
        return Contour(segments=tuple(
            LineSegment(start_point=a, end_point=b)
            for a, b in zip(nodes[:-1], nodes[1:])
        ))

    @classmethod
    def circle(cls, center: complex, radius: float, start_angle: float = 0.0, counterclockwise: bool = True) -> 'Contour':
        """:return: Closed circle starting (and ending) at center + radius * exp(i start_angle)."""
        sweep: float = TWO_PI if counterclockwise else -TWO_PI
        return Contour(segments=(ArcSegment(center=complex(center), radius=radius, start_angle=start_angle, sweep=sweep),))
    # endregion
