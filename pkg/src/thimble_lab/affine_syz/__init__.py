# Import the desired classes
from .affine_chart import (
    DEFAULT_DETOUR_RADIUS,
    AffineChartSample,
    chamber_of,
    radial_path,
    affine_coordinates,
    affine_monodromy,
    conjugation_image,
    chart_grid,
    export_chart,
    chamber_ids,
)
from .triple_point import (
    TriplePoint,
    origin_thimble_integral,
    reference_scale,
    compute_F1,
    find_triple_point,
    oracle_triple_point,
    triangle_coordinates,
)
from .ray_tracing import (
    RayKind,
    AffineRay,
    LevelSetTracer,
    trace_ray,
)
