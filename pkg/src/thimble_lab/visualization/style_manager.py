# -------------------------------------------
# Module for the style manager of thimble-lab figures.
# -------------------------------------------
import os
from dataclasses import dataclass, field
from thimble_lab.utilities.singleton_base import Singleton
from thimble_lab.utilities.readwrite_yaml import (
    get_yaml_file_path,
    write_yaml,
    read_yaml,
)


@dataclass(frozen=True)
class PointStyleSettings:
    """
    Data class, containing marker specific style settings.
    """
    color: str
    text_color: str
    marker: str
    marker_size: float
    font_size: float
    zorder: int


@dataclass(frozen=True)
class LineStyleSettings:
    """
    Data class, containing polyline specific style settings.
    """
    color: str
    line_width: float
    line_style: str
    zorder: int


@dataclass(frozen=True)
class RegionStyleSettings:
    """
    Data class, containing filled region specific style settings.
    """
    face_color: str
    edge_color: str
    alpha: float
    zorder: int


@dataclass(frozen=True)
class ScatterStyleSettings:
    """
    Data class, containing scatter (sample cloud) specific style settings.
    """
    color_map: str
    failure_color: str
    marker_size: float
    zorder: int


@dataclass(frozen=True)
class StyleSettings:
    """
    Data class, describing a variety of parameter settings for stylization.
    """
    # Color schemes
    color_text: str = field(default='black')
    color_singular_point: str = field(default='black')
    color_cut: str = field(default='tab:red')
    color_sector: str = field(default='tab:red')
    color_ray: str = field(default='tab:blue')
    color_axis_ray: str = field(default='tab:green')
    color_triangle: str = field(default='tab:purple')
    color_failed_sample: str = field(default='lightgrey')
    color_map: str = field(default='viridis')

    # Widths
    width_line: float = field(default=1.5)
    width_line_small: float = field(default=0.8)

    # Marker sizes
    size_marker: float = field(default=6.0)
    size_marker_small: float = field(default=2.0)
    size_scatter: float = field(default=4.0)

    # Transparency
    alpha_sector: float = field(default=0.15)

    # Font sizes
    font_size: float = field(default=10.0)

    # Z-orders
    zorder_region: int = field(default=1)
    zorder_sample: int = field(default=2)
    zorder_line: int = field(default=3)
    zorder_marker: int = field(default=4)

    # region Class Properties
    @property
    def singular_point_style(self) -> PointStyleSettings:
        return PointStyleSettings(
            color=self.color_singular_point,
            text_color=self.color_text,
            marker='x',
            marker_size=self.size_marker,
            font_size=self.font_size,
            zorder=self.zorder_marker,
        )

    @property
    def vertex_style(self) -> PointStyleSettings:
        return PointStyleSettings(
            color=self.color_triangle,
            text_color=self.color_triangle,
            marker='o',
            marker_size=self.size_marker,
            font_size=self.font_size,
            zorder=self.zorder_marker,
        )

    @property
    def cut_style(self) -> LineStyleSettings:
        return LineStyleSettings(
            color=self.color_cut,
            line_width=self.width_line,
            line_style='solid',
            zorder=self.zorder_line,
        )

    @property
    def ray_style(self) -> LineStyleSettings:
        return LineStyleSettings(
            color=self.color_ray,
            line_width=self.width_line,
            line_style='solid',
            zorder=self.zorder_line,
        )

    @property
    def axis_ray_style(self) -> LineStyleSettings:
        return LineStyleSettings(
            color=self.color_axis_ray,
            line_width=self.width_line_small,
            line_style='dashed',
            zorder=self.zorder_line,
        )

    @property
    def triangle_style(self) -> LineStyleSettings:
        return LineStyleSettings(
            color=self.color_triangle,
            line_width=self.width_line_small,
            line_style='dotted',
            zorder=self.zorder_line,
        )

    @property
    def sector_style(self) -> RegionStyleSettings:
        return RegionStyleSettings(
            face_color=self.color_sector,
            edge_color='none',
            alpha=self.alpha_sector,
            zorder=self.zorder_region,
        )

    @property
    def sample_style(self) -> ScatterStyleSettings:
        return ScatterStyleSettings(
            color_map=self.color_map,
            failure_color=self.color_failed_sample,
            marker_size=self.size_scatter,
            zorder=self.zorder_sample,
        )
    # endregion


class StyleManager(metaclass=Singleton):
    """
    Behaviour Class, manages import of figure style file.
    """
    CONFIG_NAME: str = 'config_thimble_lab_style.yaml'

    # region Class Methods
    @classmethod
    def _default_config_object(cls) -> dict:
        """:return: Default config dict."""
        return StyleSettings().__dict__

    @classmethod
    def read_config(cls) -> StyleSettings:
        """:return: File-manager config file."""
        path = get_yaml_file_path(filename=cls.CONFIG_NAME)
        if not os.path.exists(path):
            # Construct config dict
            default_dict: dict = cls._default_config_object()
            write_yaml(
                filename=cls.CONFIG_NAME,
                packable=default_dict,
                make_file=True,
            )
        return StyleSettings(**read_yaml(filename=cls.CONFIG_NAME))
    # endregion
