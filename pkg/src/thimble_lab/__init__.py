# Import the desired classes
from .fibration.family import (
    potential,
    critical_values,
    critical_points,
)
from .fibration.branch_data import branch_points
from .homology.homology_class import (
    BasisTag,
    HomologyClass,
    vanishing_cycle,
)
from .homology.monodromy import (
    LoopLabel,
    MonodromyMatrix,
    picard_lefschetz,
    monodromy_around,
    total_monodromy,
)
from .periods.thimble_integrals import (
    cycle_period,
    thimble_integral,
)
from .periods.monodromy_recovery import numeric_monodromy
from .periods.appendix_contours import verify_appendix_contours
from .affine_syz.affine_chart import (
    affine_coordinates,
    export_chart,
)
from .affine_syz.triple_point import find_triple_point
from .affine_syz.ray_tracing import (
    RayKind,
    trace_ray,
)
from .cps_model.cut_atlas import build_atlas
from .cps_model.holonomy import holonomy
from .cps_model.isomorphism import verify_isomorphism
from .mirror_atlas.charts import (
    TorusChartPoint,
    ImmersedChartPoint,
    torus_to_immersed,
)
from .mirror_atlas.superpotential import (
    eval_W,
    critical_values_of_W_atlas,
)
from .mirror_atlas.relations import cubic_relation
from .visualization.display_figures import (
    plot_cps_atlas,
    plot_orientation,
    plot_affine_grid,
    plot_mirror_atlas,
    save_svg,
)

__all__ = [
    "potential",
    "critical_values",
    "critical_points",
    "branch_points",
    "BasisTag",
    "HomologyClass",
    "vanishing_cycle",
    "LoopLabel",
    "MonodromyMatrix",
    "picard_lefschetz",
    "monodromy_around",
    "total_monodromy",
    "cycle_period",
    "thimble_integral",
    "numeric_monodromy",
    "verify_appendix_contours",
    "affine_coordinates",
    "export_chart",
    "find_triple_point",
    "RayKind",
    "trace_ray",
    "build_atlas",
    "holonomy",
    "verify_isomorphism",
    "TorusChartPoint",
    "ImmersedChartPoint",
    "torus_to_immersed",
    "eval_W",
    "critical_values_of_W_atlas",
    "cubic_relation",
    "plot_cps_atlas",
    "plot_orientation",
    "plot_affine_grid",
    "plot_mirror_atlas",
    "save_svg",
]
