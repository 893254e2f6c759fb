# Import the desired classes
from .contour import (
    IContourSegment,
    LineSegment,
    ArcSegment,
    Contour,
)
from .quadrature import (
    DEFAULT_TOLERANCE,
    QuadratureRule,
    QuadratureResult,
    integrate_contour,
    integrate_parametrized,
    integrate_chebyshev_weighted,
)
from .polynomial_roots import (
    CubicRoots,
    solve_cubic,
    root_sort_key,
)
from .root_finding import find_root_1d
from .branch_tracking import (
    BranchTracker,
    TrackedSqrt,
    branch_sqrt,
    track_sqrt,
)
