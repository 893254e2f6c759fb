# Import the desired classes
from .base_path import (
    DEFAULT_PATH_CLEARANCE,
    BasePath,
    check_in_domain,
    thimble_path,
    lasso,
    infinity_loop,
)
from .period_lattice import (
    LatticeMatch,
    PeriodLattice,
    segment_period,
    gauss_reduce,
    compute_period_lattice,
)
from .cycle_transport import (
    TransportNode,
    CycleTransport,
    TransportIntegral,
    vanishing_period,
)
from .thimble_integrals import (
    REFERENCE_POINT,
    ReferencePeriods,
    CyclePeriod,
    ThimbleIntegral,
    ThimbleSweep,
    reference_periods,
    cycle_period,
    thimble_integral,
    thimble_sweep,
)
from .monodromy_recovery import (
    MonodromyRecovery,
    numeric_monodromy,
)
from .appendix_contours import (
    AppendixReport,
    DeformedPiece,
    deformation_case,
    deformed_pieces,
    deformed_contour,
    verify_appendix_contours,
)
from .growth import (
    DEFAULT_GROWTH_SAMPLES,
    GrowthReport,
    growth_at_minus_infinity,
)
from .surface_oracle import (
    OracleResult,
    oracle_vanishing_period,
    surface_integral_oracle,
)
