# -------------------------------------------
# Module containing the cut-and-glue model of the affine base: three singular points in R^2,
# a pair of cut rays l_i+, l_i- at each of them, the removed sector between each pair and the
# affine glue map identifying l_i+ with l_i-. All data is exact.
# -------------------------------------------
from dataclasses import dataclass
from enum import Enum, unique
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple
from thimble_lab.homology.homology_class import HomologyClass
from thimble_lab.homology.monodromy import LoopLabel, invariant_direction
from thimble_lab.cps_model.rational_geometry import RationalVec2D, AffineMap

SCHEMA_VERSION: int = 1


@unique
class SingularLabel(Enum):
    A = "A'"
    B = "B'"
    C = "C'"

    # region Class Properties
    @property
    def loop_label(self) -> LoopLabel:
        """:return: Loop label of the corresponding critical value of the fibration."""
        return LoopLabel[self.name]
    # endregion

    # region Class Methods
    @classmethod
    def from_name(cls, name: str) -> 'SingularLabel':
        for label in cls:
            if name in (label.value, label.name):
                return label
        raise ValueError(f"Unknown singular point '{name}', expected one of {[label.value for label in cls]}.")
    # endregion


@dataclass(frozen=True)
class CutRay:
    """
    Data class, closed ray origin + t direction, t >= 0.
    """
    name: str
    label: SingularLabel
    origin: RationalVec2D
    direction: RationalVec2D

    # region Class Methods
    def point_at(self, t) -> RationalVec2D:
        return self.origin + Fraction(t) * self.direction

    def contains(self, point: RationalVec2D) -> bool:
        offset: RationalVec2D = point - self.origin
        return offset.cross(self.direction) == 0 and offset.dot(self.direction) >= 0

    def to_dict(self) -> dict:
        return {
            'name': self.name,
            'singular_point': self.label.value,
            'origin': self.origin.to_dict(),
            'direction': self.direction.to_dict(),
        }
    # endregion


@dataclass(frozen=True)
class GlueMap:
    """
    Data class, affine map identifying the cut l_i+ with l_i- and fixing the singular point.
    The removed sector is swept counterclockwise from l_i- to l_i+.
    """
    index: int
    label: SingularLabel
    plus_ray: CutRay
    minus_ray: CutRay
    transformation: AffineMap

    # region Class Properties
    @property
    def apex(self) -> RationalVec2D:
        return self.plus_ray.origin
    # endregion

    # region Class Methods
    def in_sector(self, point: RationalVec2D) -> bool:
        """:return: Whether the point lies in the closed removed sector (apex and both rays included)."""
        offset: RationalVec2D = point - self.apex
        return self.minus_ray.direction.cross(offset) >= 0 and offset.cross(self.plus_ray.direction) >= 0

    def to_dict(self) -> dict:
        return {
            'index': self.index,
            'singular_point': self.label.value,
            'plus': self.plus_ray.name,
            'minus': self.minus_ray.name,
            **self.transformation.to_dict(),
        }
    # endregion


@dataclass(frozen=True)
class InvariantLine:
    """
    Data class, affine line through a singular point along the invariant direction of its glue matrix.
    """
    label: SingularLabel
    point: RationalVec2D
    direction: RationalVec2D

    # region Class Methods
    def intersection(self, other: 'InvariantLine') -> RationalVec2D:
        denominator: Fraction = self.direction.cross(other.direction)
        if denominator == 0:
            raise ValueError(f"Invariant lines through {self.label.value} and {other.label.value} are parallel.")
        t: Fraction = (other.point - self.point).cross(other.direction) / denominator
        return self.point + t * self.direction
    # endregion


@dataclass(frozen=True)
class CutAtlas:
    """
    Data class, singular points, cut rays and glue maps of the affine plane with three singularities.
    Glue maps are listed in clockwise order of their singular points around the origin.
    """
    singular_points: Dict[SingularLabel, RationalVec2D]
    cuts: Tuple[CutRay, ...]
    glue_maps: Tuple[GlueMap, ...]

    # region Class Methods
    def glue_map(self, label: SingularLabel) -> GlueMap:
        for glue in self.glue_maps:
            if glue.label == label:
                return glue
        raise KeyError(label)

    def cut(self, name: str) -> CutRay:
        for ray in self.cuts:
            if ray.name == name:
                return ray
        raise KeyError(name)

    def in_removed_sector(self, point: RationalVec2D) -> bool:
        """:return: Whether the point lies in a removed sector, on a cut or at a singular point."""
        return any(glue.in_sector(point) for glue in self.glue_maps)

    def invariant_lines(self) -> Dict[SingularLabel, InvariantLine]:
        lines: Dict[SingularLabel, InvariantLine] = {}
        for glue in self.glue_maps:
            generator: HomologyClass = invariant_direction(glue.transformation.linear_part())
            lines[glue.label] = InvariantLine(label=glue.label, point=glue.apex, direction=RationalVec2D(*generator.coeffs))
        return lines

    def candidate_triangle(self) -> Tuple[RationalVec2D, RationalVec2D, RationalVec2D]:
        """:return: (L_B' & L_C', L_C' & L_A', L_A' & L_B'), the proposed images of v_1, v_2, v_3."""
        lines = self.invariant_lines()
        a, b, c = (lines[label] for label in (SingularLabel.A, SingularLabel.B, SingularLabel.C))
        return b.intersection(c), c.intersection(a), a.intersection(b)
    # endregion


_POINTS: Dict[SingularLabel, Tuple[Fraction, Fraction]] = {
    SingularLabel.A: (Fraction(0), Fraction(-1, 2)),
    SingularLabel.B: (Fraction(1, 2), Fraction(1, 2)),
    SingularLabel.C: (Fraction(-1, 2), Fraction(0)),
}
# (index, singular point, direction of l_i+, direction of l_i-, glue matrix)
_CUT_DATA = (
    (1, SingularLabel.B, (0, 1), (1, 0), ((2, 1), (-1, 0))),
    (2, SingularLabel.A, (1, 0), (-1, -1), ((-1, 4), (-1, 3))),
    (3, SingularLabel.C, (-1, -1), (0, 1), ((-1, 1), (-4, 3))),
)


@lru_cache(maxsize=1)
def build_atlas() -> CutAtlas:
    """
    :return: Atlas with A' = (0, -1/2), B' = (1/2, 1/2), C' = (-1/2, 0) and the cuts
        l_1+ = {(1/2, y), y >= 1/2}, l_1- = {(x, 1/2), x >= 1/2},
        l_2+ = {(x, -1/2), x >= 0}, l_2- = {(-t, -1/2 - t)},
        l_3+ = {(-1/2 - t, -t)}, l_3- = {(-1/2, y), y >= 0}.
    """
    points: Dict[SingularLabel, RationalVec2D] = {label: RationalVec2D(*xy) for label, xy in _POINTS.items()}
    cuts = []
    glue_maps = []
    for index, label, plus_direction, minus_direction, matrix in _CUT_DATA:
        apex: RationalVec2D = points[label]
        plus_ray = CutRay(name=f'l{index}+', label=label, origin=apex, direction=RationalVec2D(*plus_direction))
        minus_ray = CutRay(name=f'l{index}-', label=label, origin=apex, direction=RationalVec2D(*minus_direction))
        cuts.extend((plus_ray, minus_ray))
        glue_maps.append(GlueMap(
            index=index,
            label=label,
            plus_ray=plus_ray,
            minus_ray=minus_ray,
            transformation=AffineMap.fixing(matrix, apex),
        ))
    return CutAtlas(singular_points=points, cuts=tuple(cuts), glue_maps=tuple(glue_maps))


def atlas_to_dict(atlas: CutAtlas) -> dict:
    """:return: JSON form, rationals as {"num", "den"}."""
    return {
        'schema_version': SCHEMA_VERSION,
        'singular_points': {label.value: point.to_dict() for label, point in atlas.singular_points.items()},
        'cuts': [ray.to_dict() for ray in atlas.cuts],
        'glue_maps': [glue.to_dict() for glue in atlas.glue_maps],
        'candidate_triangle': [vertex.to_dict() for vertex in atlas.candidate_triangle()],
    }
