# Import the desired classes
from .rational_geometry import (
    RationalVec2D,
    AffineMap,
    segment_ray_intersection,
)
from .cut_atlas import (
    SingularLabel,
    CutRay,
    GlueMap,
    InvariantLine,
    CutAtlas,
    build_atlas,
    atlas_to_dict,
)
from .holonomy import (
    CutCrossing,
    DevelopedPath,
    develop_path,
    holonomy,
    concatenate_loops,
    small_loop,
    encircling_loop,
)
from .isomorphism import (
    MatrixCheck,
    CutDirectionCheck,
    IsomorphismReport,
    triangle_affine_map,
    verify_isomorphism,
    report_to_dict,
)
