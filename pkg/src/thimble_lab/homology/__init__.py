# Import the desired classes
from .homology_class import (
    BasisTag,
    HomologyClass,
    convert_basis,
    intersection,
    vanishing_cycle,
)
from .monodromy import (
    LoopLabel,
    LatticeAutomorphism,
    MonodromyMatrix,
    compose,
    picard_lefschetz,
    monodromy_around,
    total_monodromy,
    conjugation_action,
    z3_rotation,
    content,
    is_unipotent_conjugate,
    invariant_direction,
    cut_invariant_cycle,
)
