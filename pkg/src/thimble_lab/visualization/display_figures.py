# -------------------------------------------
# Module containing the figures of thimble-lab: the CPS atlas, the orientation picture of
# the traced rays in the base, the affine chart grid and the superpotential image of the mirror atlas.
# Figures are data-faithful; SVG output is byte-identical for identical inputs.
# -------------------------------------------
import io
from pathlib import Path
from typing import List, Optional, Sequence, Union
import numpy as np
import matplotlib.pyplot as plt
from thimble_lab.fibration.family import critical_values
from thimble_lab.homology.monodromy import LoopLabel
from thimble_lab.cps_model.cut_atlas import CutAtlas, build_atlas
from thimble_lab.affine_syz.affine_chart import AffineChartSample
from thimble_lab.affine_syz.ray_tracing import AffineRay, RayKind
from thimble_lab.affine_syz.triple_point import TriplePoint
from thimble_lab.mirror_atlas.charts import TorusChartPoint
from thimble_lab.mirror_atlas.superpotential import NovikovScale, eval_W
from thimble_lab.utilities.custom_context_managers import atomic_write
from thimble_lab.visualization.intrf_draw_component import IDrawComponent
from thimble_lab.visualization.plotting_functionality import (
    IFigureAxesPair,
    LabelFormat,
    PlaneAxesFormat,
    SubplotKeywordEnum,
    construct_subplot,
)
from thimble_lab.visualization.style_manager import StyleManager, StyleSettings
from thimble_lab.visualization.draw_components import (
    PointMarker,
    Polyline,
    SectorWedge,
    ScatterCloud,
    ray_segment,
    complex_to_point,
)

SVG_HASH_SALT: str = 'thimble-lab'
CPS_EXTENT: float = 3.0
BASE_EXTENT: float = 6.0
AXIS_RAYS: tuple = (RayKind.NEGATIVE_REAL_AXIS, RayKind.POSITIVE_REAL_CUT)


def _prepare_kwargs(kwargs: dict, label_format: LabelFormat) -> dict:
    kwargs[SubplotKeywordEnum.FIGURE_SIZE.value] = kwargs.get(SubplotKeywordEnum.FIGURE_SIZE.value, (6, 6))
    kwargs[SubplotKeywordEnum.AXES_FORMAT.value] = kwargs.get(SubplotKeywordEnum.AXES_FORMAT.value, PlaneAxesFormat())
    kwargs[SubplotKeywordEnum.LABEL_FORMAT.value] = kwargs.get(SubplotKeywordEnum.LABEL_FORMAT.value, label_format)
    return kwargs


def _draw_all(components: Sequence[IDrawComponent], axes: plt.Axes) -> plt.Axes:
    for draw_component in components:
        draw_component.draw(axes=axes)
    return axes


def base_components(extent: float = BASE_EXTENT, style: Optional[StyleSettings] = None) -> List[IDrawComponent]:
    """:return: Critical values A, B, C at 3 zeta^j with the cut rays {r zeta^j, r >= 3} up to the extent."""
    style = style if style is not None else StyleManager.read_config()
    components: List[IDrawComponent] = []
    for label in (LoopLabel.A, LoopLabel.B, LoopLabel.C):
        value: complex = critical_values()[label.critical_index]
        components.append(Polyline(
            points=ray_segment(complex_to_point(value), complex_to_point(value), extent * np.sqrt(2.0)),
            name=f'base_cut_{label.value}',
            style_settings=style.cut_style,
        ))
        components.append(PointMarker(
            position=complex_to_point(value),
            name=f'critical_value_{label.value}',
            label=label.value,
            style_settings=style.singular_point_style,
        ))
    return components


def cps_components(atlas: CutAtlas, extent: float = CPS_EXTENT, style: Optional[StyleSettings] = None) -> List[IDrawComponent]:
    """:return: Removed sectors, the six cuts, the singular points and the candidate triangle of the atlas."""
    style = style if style is not None else StyleManager.read_config()
    reach: float = 2.0 * extent
    components: List[IDrawComponent] = []
    for glue in atlas.glue_maps:
        components.append(SectorWedge(
            apex=glue.apex.as_floats(),
            start_direction=glue.minus_ray.direction.as_floats(),
            end_direction=glue.plus_ray.direction.as_floats(),
            radius=reach,
            name=f'sector_{glue.index}',
            style_settings=style.sector_style,
        ))
    for cut in atlas.cuts:
        components.append(Polyline(
            points=ray_segment(cut.origin.as_floats(), cut.direction.as_floats(), reach),
            name=f'cut_{cut.name}',
            style_settings=style.cut_style,
        ))
    for label, point in sorted(atlas.singular_points.items(), key=lambda item: item[0].name):
        components.append(PointMarker(
            position=point.as_floats(),
            name=f'singular_point_{label.name}',
            label=label.value,
            style_settings=style.singular_point_style,
        ))
    triangle = atlas.candidate_triangle()
    components.append(Polyline(
        points=tuple(vertex.as_floats() for vertex in triangle),
        name='candidate_triangle',
        closed=True,
        style_settings=style.triangle_style,
    ))
    for i, vertex in enumerate(triangle, start=1):
        components.append(PointMarker(
            position=vertex.as_floats(),
            name=f'vertex_v{i}',
            label=f"v{i}'",
            style_settings=style.vertex_style,
        ))
    return components


def plot_cps_atlas(atlas: Optional[CutAtlas] = None, extent: float = CPS_EXTENT, **kwargs) -> IFigureAxesPair:
    """
    :param atlas: Affine model with cuts, defaults to build_atlas().
    :param extent: Half width of the plotted square.
    :return: Tuple of plotted figure and axis.
    """
    atlas = atlas if atlas is not None else build_atlas()
    kwargs = _prepare_kwargs(kwargs, LabelFormat(x_label='x', y_label='y'))
    fig, ax = construct_subplot(**kwargs)
    _draw_all(cps_components(atlas, extent=extent), axes=ax)
    ax.set_xlim([-extent, extent])
    ax.set_ylim([-extent, extent])
    return fig, ax


def plot_orientation(rays: Sequence[AffineRay], triple_point: Optional[TriplePoint] = None, extent: float = BASE_EXTENT, **kwargs) -> IFigureAxesPair:
    """
    :param rays: Traced affine rays; the axis rays are drawn dashed.
    :param triple_point: (Optional) triple point, drawn with its Z_3 images.
    :param extent: Half width of the plotted square.
    :return: Tuple of plotted figure and axis.
    """
    style: StyleSettings = StyleManager.read_config()
    kwargs = _prepare_kwargs(kwargs, LabelFormat.complex_plane())
    fig, ax = construct_subplot(**kwargs)
    components: List[IDrawComponent] = base_components(extent=extent, style=style)
    for ray in rays:
        components.append(Polyline(
            points=tuple(complex_to_point(q) for q in ray.trace),
            name=f'ray_{ray.kind.value}',
            style_settings=style.axis_ray_style if ray.kind in AXIS_RAYS else style.ray_style,
        ))
    if triple_point is not None:
        for i, point in enumerate(triple_point.points, start=1):
            components.append(PointMarker(
                position=complex_to_point(point),
                name=f'triple_point_v{i}',
                label=f'v{i}',
                style_settings=style.vertex_style,
            ))
    _draw_all(components, axes=ax)
    ax.set_xlim([-extent, extent])
    ax.set_ylim([-extent, extent])
    return fig, ax


def plot_affine_grid(samples: Sequence[AffineChartSample], component: int = 0, **kwargs) -> IFigureAxesPair:
    """
    :param samples: Affine chart samples; failed samples are drawn in the failure color.
    :param component: 0 colors by f_c, 1 by f_d.
    :return: Tuple of plotted figure and axis.
    """
    if component not in (0, 1):
        raise ValueError(f"Affine component must be 0 (f_c) or 1 (f_d), got {component}.")
    style: StyleSettings = StyleManager.read_config()
    kwargs = _prepare_kwargs(kwargs, LabelFormat.complex_plane())
    fig, ax = construct_subplot(**kwargs)
    components: List[IDrawComponent] = [ScatterCloud(
        points=tuple(complex_to_point(sample.q) for sample in samples),
        values=tuple(sample.f[component] if sample.succeeded else float('nan') for sample in samples),
        name=f'affine_samples_{"fc" if component == 0 else "fd"}',
        style_settings=style.sample_style,
    )]
    if samples:
        positions: np.ndarray = np.array([sample.q for sample in samples])
        extent: float = float(max(np.max(np.abs(positions.real)), np.max(np.abs(positions.imag)), 1.0))
    else:
        extent = BASE_EXTENT
    components.extend(base_components(extent=extent, style=style))
    _draw_all(components, axes=ax)
    ax.set_xlim([-extent, extent])
    ax.set_ylim([-extent, extent])
    return fig, ax


def plot_mirror_atlas(points: Sequence[TorusChartPoint], scale: NovikovScale = NovikovScale(), **kwargs) -> IFigureAxesPair:
    """
    :param points: Torus chart samples.
    :param scale: Novikov scale of W.
    :return: Tuple of plotted figure and axis; the image W(points) colored by log|z_1 z_2| over the critical values.
    """
    style: StyleSettings = StyleManager.read_config()
    kwargs = _prepare_kwargs(kwargs, LabelFormat(x_label='Re W', y_label='Im W'))
    fig, ax = construct_subplot(**kwargs)
    images: List[complex] = [eval_W(point, scale) for point in points]
    components: List[IDrawComponent] = [ScatterCloud(
        points=tuple(complex_to_point(value) for value in images),
        values=tuple(float(np.log(abs(point.z1 * point.z2))) for point in points),
        name='superpotential_image',
        style_settings=style.sample_style,
    )]
    extent: float = float(max([abs(value) for value in images] + [BASE_EXTENT]))
    components.extend(base_components(extent=extent, style=style))
    _draw_all(components, axes=ax)
    ax.set_xlim([-extent, extent])
    ax.set_ylim([-extent, extent])
    return fig, ax


def svg_bytes(figure: plt.Figure) -> bytes:
    """:return: SVG rendering with fixed id salt and without date metadata."""
    buffer = io.BytesIO()
    with plt.rc_context({'svg.hashsalt': SVG_HASH_SALT}):
        figure.savefig(buffer, format='svg', metadata={'Date': None})
    return buffer.getvalue()


def save_svg(figure: plt.Figure, file_path: Union[str, Path]) -> Path:
    """
    :param figure: Figure to render.
    :param file_path: Destination, replaced atomically.
    :return: Absolute path of the written file.
    """
    file_path = Path(file_path).absolute()
    content: bytes = svg_bytes(figure)
    with atomic_write(file_path, mode='wb') as handle:
        handle.write(content)
    return file_path
