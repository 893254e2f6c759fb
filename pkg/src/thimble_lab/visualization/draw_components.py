# -------------------------------------------
# Module containing draw components of plane figures.
# Every component tags its artists with a gid so the SVG output keeps one named group per component.
# -------------------------------------------
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple
import numpy as np
import matplotlib.pyplot as plt
from matplotlib.patches import Wedge
from thimble_lab.visualization.intrf_draw_component import IDrawComponent
from thimble_lab.visualization.style_manager import (
    StyleManager,
    PointStyleSettings,
    LineStyleSettings,
    RegionStyleSettings,
    ScatterStyleSettings,
)

PlanePoint = Tuple[float, float]
LABEL_OFFSET: Tuple[float, float] = (4.0, 4.0)


@dataclass(frozen=True)
class PointMarker(IDrawComponent):
    """
    Data class, containing information to draw a labelled point marker.
    """
    position: PlanePoint
    name: str
    label: Optional[str] = field(default=None)
    style_settings: PointStyleSettings = field(default=StyleManager.read_config().singular_point_style)

    # region Interface Properties
    @property
    def group_id(self) -> str:
        return self.name
    # endregion

    # region Interface Methods
    def draw(self, axes: plt.Axes) -> plt.Axes:
        """Method used for drawing component on Axes."""
        marker, = axes.plot(
            [self.position[0]],
            [self.position[1]],
            linestyle='none',
            marker=self.style_settings.marker,
            color=self.style_settings.color,
            markersize=self.style_settings.marker_size,
            zorder=self.style_settings.zorder,
        )
        marker.set_gid(self.group_id)
        if self.label is not None:
            annotation = axes.annotate(
                self.label,
                xy=self.position,
                xytext=LABEL_OFFSET,
                textcoords='offset points',
                color=self.style_settings.text_color,
                fontsize=self.style_settings.font_size,
                zorder=self.style_settings.zorder,
            )
            annotation.set_gid(f'{self.group_id}_label')
        return axes
    # endregion


@dataclass(frozen=True)
class Polyline(IDrawComponent):
    """
    Data class, containing information to draw an open or closed polyline.
    """
    points: Tuple[PlanePoint, ...]
    name: str
    closed: bool = field(default=False)
    style_settings: LineStyleSettings = field(default=StyleManager.read_config().cut_style)

    # region Interface Properties
    @property
    def group_id(self) -> str:
        return self.name
    # endregion

    # region Class Methods
    def __post_init__(self):
        object.__setattr__(self, 'points', tuple((float(x), float(y)) for x, y in self.points))
        if len(self.points) < 2:
            raise ValueError(f"Polyline '{self.name}' needs at least two points, got {len(self.points)}.")
    # endregion

    # region Interface Methods
    def draw(self, axes: plt.Axes) -> plt.Axes:
        """Method used for drawing component on Axes."""
        vertices: np.ndarray = np.array(self.points + (self.points[0],) if self.closed else self.points)
        line, = axes.plot(
            vertices[:, 0],
            vertices[:, 1],
            color=self.style_settings.color,
            linewidth=self.style_settings.line_width,
            linestyle=self.style_settings.line_style,
            zorder=self.style_settings.zorder,
        )
        line.set_gid(self.group_id)
        return axes
    # endregion


@dataclass(frozen=True)
class SectorWedge(IDrawComponent):
    """
    Data class, containing information to draw the sector swept counterclockwise from start to end direction.
    """
    apex: PlanePoint
    start_direction: PlanePoint
    end_direction: PlanePoint
    radius: float
    name: str
    style_settings: RegionStyleSettings = field(default=StyleManager.read_config().sector_style)

    # region Interface Properties
    @property
    def group_id(self) -> str:
        return self.name
    # endregion

    # region Interface Methods
    def draw(self, axes: plt.Axes) -> plt.Axes:
        """Method used for drawing component on Axes."""
        patch = Wedge(
            center=self.apex,
            r=self.radius,
            theta1=float(np.degrees(np.arctan2(self.start_direction[1], self.start_direction[0]))),
            theta2=float(np.degrees(np.arctan2(self.end_direction[1], self.end_direction[0]))),
            facecolor=self.style_settings.face_color,
            edgecolor=self.style_settings.edge_color,
            alpha=self.style_settings.alpha,
            zorder=self.style_settings.zorder,
        )
        patch.set_gid(self.group_id)
        axes.add_patch(patch)
        return axes
    # endregion


@dataclass(frozen=True)
class ScatterCloud(IDrawComponent):
    """
    Data class, containing information to draw a colored sample cloud.
    Samples without value (NaN) are drawn in the failure color.
    """
    points: Tuple[PlanePoint, ...]
    values: Tuple[float, ...]
    name: str
    style_settings: ScatterStyleSettings = field(default=StyleManager.read_config().sample_style)

    # region Interface Properties
    @property
    def group_id(self) -> str:
        return self.name
    # endregion

    # region Class Methods
    def __post_init__(self):
        if len(self.points) != len(self.values):
            raise ValueError(f"Got {len(self.points)} points but {len(self.values)} values.")
    # endregion

    # region Interface Methods
    def draw(self, axes: plt.Axes) -> plt.Axes:
        """Method used for drawing component on Axes."""
        if not self.points:
            return axes
        points: np.ndarray = np.array(self.points, dtype=float)
        values: np.ndarray = np.array(self.values, dtype=float)
        valid: np.ndarray = np.isfinite(values)
        if np.any(valid):
            cloud = axes.scatter(
                points[valid, 0],
                points[valid, 1],
                c=values[valid],
                cmap=self.style_settings.color_map,
                s=self.style_settings.marker_size,
                zorder=self.style_settings.zorder,
            )
            cloud.set_gid(self.group_id)
        if not np.all(valid):
            failures = axes.scatter(
                points[~valid, 0],
                points[~valid, 1],
                color=self.style_settings.failure_color,
                s=self.style_settings.marker_size,
                zorder=self.style_settings.zorder,
            )
            failures.set_gid(f'{self.group_id}_failed')
        return axes
    # endregion


def ray_segment(origin: PlanePoint, direction: PlanePoint, length: float) -> Tuple[PlanePoint, PlanePoint]:
    """:return: Segment from origin along direction, scaled to the given length."""
    norm: float = float(np.hypot(*direction))
    if norm == 0:
        raise ValueError("Ray direction must be non-zero.")
    return origin, (origin[0] + length * direction[0] / norm, origin[1] + length * direction[1] / norm)


def complex_to_point(value: complex) -> PlanePoint:
    return float(np.real(value)), float(np.imag(value))
