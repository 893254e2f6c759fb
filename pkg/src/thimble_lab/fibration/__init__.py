# Import the desired classes
from .family import (
    ZETA,
    Family,
    zeta_power,
    z3_rotate,
    potential,
    critical_values,
    critical_points,
    distance_to_critical_values,
)
from .branch_data import (
    BranchData,
    branch_points,
    branch_cubic_coefficients,
)
from .sheets import (
    SheetValue,
    radicand,
    period_integrand,
    t2_sheets,
    omega_density,
)
