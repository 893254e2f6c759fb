# -------------------------------------------
# Module comparing the affine structure from the thimble periods with the cut-and-glue model.
# The affine monodromy on (f_c, f_d) is the transpose of the Picard-Lefschetz matrix, so
# crossing a cut on either side must apply the same integral matrix.
# -------------------------------------------
from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple
import numpy as np
from thimble_lab.homology.homology_class import HomologyClass, vanishing_cycle
from thimble_lab.homology.monodromy import (
    LatticeAutomorphism,
    LoopLabel,
    MonodromyMatrix,
    invariant_direction,
    is_unipotent_conjugate,
    monodromy_around,
)
from thimble_lab.cps_model.rational_geometry import RationalVec2D, AffineMap
from thimble_lab.cps_model.cut_atlas import CutAtlas, GlueMap, SingularLabel, build_atlas
from thimble_lab.cps_model.holonomy import holonomy, encircling_loop
from thimble_lab.utilities.custom_exceptions import MatrixMismatchException

TOTAL_SHEAR: int = 9


@dataclass(frozen=True)
class MatrixCheck:
    """
    Data class, transpose of a Picard-Lefschetz matrix against the glue matrix of the matching singular point.
    """
    label: SingularLabel
    picard_lefschetz: LatticeAutomorphism
    glue: LatticeAutomorphism

    # region Class Properties
    @property
    def transpose(self) -> LatticeAutomorphism:
        return self.picard_lefschetz.transpose()

    @property
    def matches(self) -> bool:
        return self.transpose.entries == self.glue.entries
    # endregion


@dataclass(frozen=True)
class CutDirectionCheck:
    """
    Data class, invariant directions on both sides of one singular point.
    The fiber side fixes the vanishing cycle; the glue side fixes the direction of its invariant line
    and maps the direction of l+ onto that of l-.
    """
    label: SingularLabel
    vanishing_class: HomologyClass
    fiber_invariant: HomologyClass
    glue_invariant: RationalVec2D
    glue_fixes_invariant: bool
    glue_pairs_cuts: bool

    # region Class Properties
    @property
    def matches(self) -> bool:
        return (
            self.fiber_invariant in (self.vanishing_class, -self.vanishing_class)
            and self.glue_fixes_invariant
            and self.glue_pairs_cuts
        )
    # endregion


@dataclass(frozen=True)
class IsomorphismReport:
    """
    Data class, outcome of the comparison; the triangle map is only present when affine coordinates of v_1, v_2, v_3 are given.
    """
    matrix_checks: Tuple[MatrixCheck, ...]
    direction_checks: Tuple[CutDirectionCheck, ...]
    encircling_holonomy: AffineMap
    encircling_matches: bool
    candidate_triangle: Tuple[RationalVec2D, RationalVec2D, RationalVec2D]
    triangle_map: Optional[np.ndarray] = field(default=None)
    triangle_translation: Optional[np.ndarray] = field(default=None)

    # region Class Properties
    @property
    def passed(self) -> bool:
        return (
            all(check.matches for check in self.matrix_checks)
            and all(check.matches for check in self.direction_checks)
            and self.encircling_matches
        )
    # endregion


def _direction_check(glue: GlueMap) -> CutDirectionCheck:
    linear: AffineMap = AffineMap(matrix=glue.transformation.matrix)
    generator: HomologyClass = invariant_direction(glue.transformation.linear_part())
    glue_invariant: RationalVec2D = RationalVec2D(*generator.coeffs)
    vanishing: HomologyClass = vanishing_cycle(glue.label.loop_label.critical_index)
    return CutDirectionCheck(
        label=glue.label,
        vanishing_class=vanishing,
        fiber_invariant=invariant_direction(monodromy_around(glue.label.loop_label)),
        glue_invariant=glue_invariant,
        glue_fixes_invariant=linear.linear(glue_invariant) == glue_invariant,
        glue_pairs_cuts=glue.minus_ray.direction.is_parallel(linear.linear(glue.plus_ray.direction)),
    )


def triangle_affine_map(source: Sequence[Tuple[float, float]], target: Sequence[RationalVec2D]) -> Tuple[np.ndarray, np.ndarray]:
    """
    :param source: Affine coordinates of v_1, v_2, v_3.
    :param target: Candidate images v_1', v_2', v_3'.
    :return: (L, b) with L source_i + b = target_i.
    :raises ValueError: when the source triangle is degenerate.
    """
    points: np.ndarray = np.asarray(source, dtype=float)
    images: np.ndarray = np.array([vertex.as_floats() for vertex in target], dtype=float)
    system: np.ndarray = np.hstack([points, np.ones((3, 1))])
    if abs(np.linalg.det(system)) < 1e-14 * max(1.0, float(np.max(np.abs(points))) ** 2):
        raise ValueError(f"Source triangle {points.tolist()} is degenerate.")
    solution: np.ndarray = np.linalg.solve(system, images)
    return solution[:2].T, solution[2]


def verify_isomorphism(
        syz_triangle: Optional[Sequence[Tuple[float, float]]] = None,
        recovered: Optional[Dict[LoopLabel, MonodromyMatrix]] = None,
        atlas: Optional[CutAtlas] = None) -> IsomorphismReport:
    """
    :param syz_triangle: Affine coordinates (f_c, f_d) of the triple point and its rotations.
    :param recovered: Numerically recovered monodromies to compare instead of the Picard-Lefschetz matrices.
    :param atlas: Cut atlas, defaults to build_atlas().
    :return: Report on the exact matrix and direction identities.
    :raises MatrixMismatchException: when a transposed monodromy differs from its glue matrix.
    """
    atlas = atlas if atlas is not None else build_atlas()
    recovered = recovered or {}
    matrix_checks = []
    for glue in atlas.glue_maps:
        loop_label: LoopLabel = glue.label.loop_label
        check = MatrixCheck(
            label=glue.label,
            picard_lefschetz=recovered.get(loop_label, monodromy_around(loop_label)),
            glue=glue.transformation.linear_part(),
        )
        if not check.matches:
            raise MatrixMismatchException(
                f"Transpose {check.transpose.as_lists()} of the monodromy around {loop_label.value} "
                f"differs from the glue matrix {check.glue.as_lists()} at {glue.label.value}."
            )
        matrix_checks.append(check)

    encircling: AffineMap = holonomy(encircling_loop(), atlas)
    # Crossing order B', C', A' is a cyclic conjugate of C B A
    m_a: MonodromyMatrix = monodromy_around(LoopLabel.A)
    expected: LatticeAutomorphism = (m_a @ monodromy_around(LoopLabel.INFINITY) @ m_a.inverse()).transpose()
    linear: LatticeAutomorphism = encircling.linear_part()
    encircling_matches: bool = linear.entries == expected.entries and is_unipotent_conjugate(linear, TOTAL_SHEAR)

    triangle: Tuple[RationalVec2D, RationalVec2D, RationalVec2D] = atlas.candidate_triangle()
    triangle_map, triangle_translation = (None, None) if syz_triangle is None else triangle_affine_map(syz_triangle, triangle)
    return IsomorphismReport(
        matrix_checks=tuple(matrix_checks),
        direction_checks=tuple(_direction_check(glue) for glue in atlas.glue_maps),
        encircling_holonomy=encircling,
        encircling_matches=encircling_matches,
        candidate_triangle=triangle,
        triangle_map=triangle_map,
        triangle_translation=triangle_translation,
    )


def report_to_dict(report: IsomorphismReport) -> dict:
    return {
        'passed': report.passed,
        'matrices': [
            {
                'singular_point': check.label.value,
                'monodromy': check.picard_lefschetz.as_lists(),
                'transpose': check.transpose.as_lists(),
                'glue': check.glue.as_lists(),
                'matches': check.matches,
            }
            for check in report.matrix_checks
        ],
        'directions': [
            {
                'singular_point': check.label.value,
                'vanishing_class': list(check.vanishing_class.coeffs),
                'fiber_invariant': list(check.fiber_invariant.coeffs),
                'glue_invariant': check.glue_invariant.to_dict(),
                'matches': check.matches,
            }
            for check in report.direction_checks
        ],
        'encircling_holonomy': report.encircling_holonomy.to_dict(),
        'encircling_matches': report.encircling_matches,
        'candidate_triangle': [vertex.to_dict() for vertex in report.candidate_triangle],
        'triangle_map': None if report.triangle_map is None else {
            'linear': report.triangle_map.tolist(),
            'translation': report.triangle_translation.tolist(),
        },
    }
