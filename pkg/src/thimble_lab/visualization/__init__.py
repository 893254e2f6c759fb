# Import the desired classes
from .plotting_functionality import (
    IFigureAxesPair,
    IAxesFormat,
    LabelFormat,
    AxesFormat,
    PlaneAxesFormat,
    EmptyAxesFormat,
    SubplotKeywordEnum,
    construct_subplot,
)
from .intrf_draw_component import IDrawComponent
from .style_manager import (
    StyleSettings,
    StyleManager,
)
from .draw_components import (
    PointMarker,
    Polyline,
    SectorWedge,
    ScatterCloud,
)
from .display_figures import (
    SVG_HASH_SALT,
    plot_cps_atlas,
    plot_orientation,
    plot_affine_grid,
    plot_mirror_atlas,
    svg_bytes,
    save_svg,
)
