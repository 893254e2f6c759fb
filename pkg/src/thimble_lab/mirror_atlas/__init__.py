# Import the desired classes
from .charts import (
    TorusChartPoint,
    ImmersedChartPoint,
    torus_to_immersed,
    immersed_to_torus,
    immersed_coordinates,
    sample_torus_points,
)
from .superpotential import (
    NovikovScale,
    CriticalFiber,
    eval_W,
    fiber_equation_check,
    chart_agreement,
    critical_values_of_W_atlas,
    matches_fibration,
    symbolic_critical_values,
)
from .relations import (
    CubicConstancy,
    cubic_relation,
    cubic_relation_at,
    cubic_constancy,
    symbolic_cubic_constant,
    power_sum_form,
)
