# -------------------------------------------
# Module containing the developing map of polygonal paths through the glued plane.
# A straight edge that runs through a removed sector enters through one cut ray and leaves
# through the other; entering through l_i- and leaving through l_i+ continues the development
# with the glue map g_i, the reverse passage with its inverse.
# -------------------------------------------
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union
from thimble_lab.cps_model.rational_geometry import (
    RationalVec2D,
    AffineMap,
    segment_ray_intersection,
)
from thimble_lab.cps_model.cut_atlas import CutAtlas, GlueMap, build_atlas
from thimble_lab.utilities.custom_exceptions import LoopHitsCutException
PointLike = Union[RationalVec2D, Tuple]


@dataclass(frozen=True)
class CutCrossing:
    """
    Data class, passage of one edge through the removed sector of a glue map.
    """
    edge_index: int
    glue_index: int
    entry_point: RationalVec2D
    exit_point: RationalVec2D
    inverted: bool

    # region Class Properties
    @property
    def entry_ray(self) -> str:
        return f"l{self.glue_index}{'+' if self.inverted else '-'}"

    @property
    def exit_ray(self) -> str:
        return f"l{self.glue_index}{'-' if self.inverted else '+'}"
    # endregion


@dataclass(frozen=True)
class DevelopedPath:
    """
    Data class, polygonal path with its development into a single affine chart.
    The holonomy is the composite of the crossed glue maps in crossing order.
    """
    vertices: Tuple[RationalVec2D, ...]
    developed_vertices: Tuple[RationalVec2D, ...]
    crossings: Tuple[CutCrossing, ...]
    holonomy: AffineMap

    # region Class Properties
    @property
    def is_closed(self) -> bool:
        return self.vertices[0] == self.vertices[-1]
    # endregion


def _as_point(point: PointLike) -> RationalVec2D:
    if isinstance(point, RationalVec2D):
        return point
    x, y = point
    return RationalVec2D(x, y)


def _passes_through(start: RationalVec2D, end: RationalVec2D, point: RationalVec2D) -> bool:
    edge: RationalVec2D = end - start
    offset: RationalVec2D = point - start
    return edge.cross(offset) == 0 and 0 <= edge.dot(offset) <= edge.dot(edge)


def _edge_crossing(edge_index: int, start: RationalVec2D, end: RationalVec2D, glue: GlueMap) -> Optional[Tuple[Fraction, CutCrossing]]:
    """:return: (entry parameter, crossing) when the edge runs through the removed sector of glue."""
    try:
        plus_hit = segment_ray_intersection(start, end, glue.plus_ray.origin, glue.plus_ray.direction)
        minus_hit = segment_ray_intersection(start, end, glue.minus_ray.origin, glue.minus_ray.direction)
    except ValueError as exception:
        raise LoopHitsCutException(f"Edge {start} -> {end} runs along a cut of {glue.label.value}; perturb the path.") from exception
    if plus_hit is None and minus_hit is None:
        return None
    if plus_hit is None or minus_hit is None:
        raise LoopHitsCutException(f"Edge {start} -> {end} touches a cut of {glue.label.value} without crossing the sector; perturb the path.")
    edge: RationalVec2D = end - start
    plus_s, minus_s = plus_hit[0], minus_hit[0]
    inverted: bool = plus_s < minus_s
    entry_s, exit_s = (plus_s, minus_s) if inverted else (minus_s, plus_s)
    crossing = CutCrossing(
        edge_index=edge_index,
        glue_index=glue.index,
        entry_point=start + entry_s * edge,
        exit_point=start + exit_s * edge,
        inverted=inverted,
    )
    return entry_s, crossing


def _validate_vertex(atlas: CutAtlas, vertex: RationalVec2D) -> None:
    if atlas.in_removed_sector(vertex):
        raise LoopHitsCutException(f"Vertex {vertex} lies on a cut or inside a removed sector; perturb the path.")


def develop_path(points: Sequence[PointLike], atlas: Optional[CutAtlas] = None) -> DevelopedPath:
    """
    :param points: Polygonal path, vertices outside the removed sectors.
    :param atlas: Cut atlas, defaults to build_atlas().
    :return: Developed path; the holonomy is the map continuing the chart of the first vertex to the last.
    :raises LoopHitsCutException: when a vertex lies on a cut or in a removed sector, an edge runs through
        a singular point or along a cut.
    """
    atlas = atlas if atlas is not None else build_atlas()
    vertices: List[RationalVec2D] = [_as_point(point) for point in points]
    if len(vertices) < 2:
        raise ValueError(f"A path needs at least two vertices, got {len(vertices)}.")
    for vertex in vertices:
        _validate_vertex(atlas, vertex)

    development: AffineMap = AffineMap.identity()
    developed: List[RationalVec2D] = [vertices[0]]
    crossings: List[CutCrossing] = []
    for edge_index, (start, end) in enumerate(zip(vertices[:-1], vertices[1:])):
        if start != end:
            for label, singular_point in atlas.singular_points.items():
                if _passes_through(start, end, singular_point):
                    raise LoopHitsCutException(f"Edge {start} -> {end} passes through the singular point {label.value}.")
            hits = [hit for hit in (_edge_crossing(edge_index, start, end, glue) for glue in atlas.glue_maps) if hit is not None]
            for _, crossing in sorted(hits, key=lambda hit: hit[0]):
                transformation: AffineMap = atlas.glue_maps[crossing.glue_index - 1].transformation
                development = development @ (transformation.inverse() if crossing.inverted else transformation)
                crossings.append(crossing)
        developed.append(development(end))
    return DevelopedPath(
        vertices=tuple(vertices),
        developed_vertices=tuple(developed),
        crossings=tuple(crossings),
        holonomy=development,
    )


def holonomy(loop: Sequence[PointLike], atlas: Optional[CutAtlas] = None) -> AffineMap:
    """
    :param loop: Closed polygonal loop; it is closed automatically when the last vertex differs from the first.
    :return: Holonomy of the affine structure along the loop.
    """
    points: List[RationalVec2D] = [_as_point(point) for point in loop]
    if points and points[0] != points[-1]:
        points.append(points[0])
    return develop_path(points, atlas).holonomy


def concatenate_loops(first: Sequence[PointLike], second: Sequence[PointLike]) -> List[RationalVec2D]:
    """:return: Loop running through first, then second; both closed at a common base point."""
    first_points: List[RationalVec2D] = [_as_point(point) for point in first]
    second_points: List[RationalVec2D] = [_as_point(point) for point in second]
    for points in (first_points, second_points):
        if points[0] != points[-1]:
            points.append(points[0])
    if first_points[0] != second_points[0]:
        raise ValueError(f"Loops are based at {first_points[0]} and {second_points[0]}.")
    return first_points + second_points[1:]


def small_loop(glue: GlueMap, size: Fraction = Fraction(1, 4), offset: Fraction = Fraction(1, 16)) -> List[RationalVec2D]:
    """
    :param glue: Glue map whose singular point is encircled.
    :param size: Distance of the vertices from the singular point along the cut directions.
    :param offset: Distance of the vertices next to the cuts from the cut rays, below size.
    :return: Counterclockwise triangle around the singular point, crossing its removed sector once from l- to l+.
    """
    if not 0 < offset < size:
        raise ValueError(f"Expected 0 < offset < size, got offset {offset} and size {size}.")
    minus, plus = glue.minus_ray.direction, glue.plus_ray.direction
    apex: RationalVec2D = glue.apex
    opposite: RationalVec2D = apex - size * (minus + plus)
    near_minus: RationalVec2D = apex + size * minus - offset * RationalVec2D(-minus.y, minus.x)
    near_plus: RationalVec2D = apex + size * plus + offset * RationalVec2D(-plus.y, plus.x)
    return [opposite, near_minus, near_plus, opposite]


def encircling_loop() -> List[RationalVec2D]:
    """:return: Counterclockwise loop around all singular points with vertices in the strips between parallel cuts."""
    return [RationalVec2D(10, 0), RationalVec2D(0, 10), RationalVec2D(-10, -10), RationalVec2D(10, 0)]
