# -------------------------------------------
# Module containing exact rational plane geometry: vectors, affine maps and ray intersections.
# -------------------------------------------
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple, Union
import numpy as np
from thimble_lab.homology.monodromy import LatticeAutomorphism
RationalLike = Union[int, str, Fraction]
RationalMatrix = Tuple[Tuple[Fraction, Fraction], Tuple[Fraction, Fraction]]


def to_fraction(value: RationalLike) -> Fraction:
    """:return: Exact fraction; floats are refused to keep all arithmetic exact."""
    if isinstance(value, float):
        raise TypeError(f"Expected an exact rational, got float {value}.")
    return Fraction(value)


def rational_to_dict(value: Fraction) -> Dict[str, int]:
    return {'num': value.numerator, 'den': value.denominator}


@dataclass(frozen=True)
class RationalVec2D:
    """
    Data class, exact point or direction in the plane.
    """
    x: Fraction
    y: Fraction

    # region Class Methods
    def __post_init__(self):
        object.__setattr__(self, 'x', to_fraction(self.x))
        object.__setattr__(self, 'y', to_fraction(self.y))

    def __add__(self, other: 'RationalVec2D') -> 'RationalVec2D':
        return RationalVec2D(self.x + other.x, self.y + other.y)

    def __sub__(self, other: 'RationalVec2D') -> 'RationalVec2D':
        return RationalVec2D(self.x - other.x, self.y - other.y)

    def __neg__(self) -> 'RationalVec2D':
        return RationalVec2D(-self.x, -self.y)

    def __rmul__(self, scalar: RationalLike) -> 'RationalVec2D':
        factor: Fraction = to_fraction(scalar)
        return RationalVec2D(factor * self.x, factor * self.y)

    def cross(self, other: 'RationalVec2D') -> Fraction:
        return self.x * other.y - self.y * other.x

    def dot(self, other: 'RationalVec2D') -> Fraction:
        return self.x * other.x + self.y * other.y

    def is_parallel(self, other: 'RationalVec2D') -> bool:
        """:return: Whether other is a positive multiple of self."""
        return self.cross(other) == 0 and self.dot(other) > 0

    def as_floats(self) -> Tuple[float, float]:
        return float(self.x), float(self.y)

    def to_dict(self) -> dict:
        return {'x': rational_to_dict(self.x), 'y': rational_to_dict(self.y)}

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"
    # endregion


@dataclass(frozen=True)
class AffineMap:
    """
    Data class, exact affine map x -> M x + b of the plane.
    """
    matrix: RationalMatrix
    translation: RationalVec2D = field(default=RationalVec2D(0, 0))

    # region Class Properties
    @property
    def determinant(self) -> Fraction:
        (m11, m12), (m21, m22) = self.matrix
        return m11 * m22 - m12 * m21

    @property
    def trace(self) -> Fraction:
        return self.matrix[0][0] + self.matrix[1][1]

    @property
    def is_identity(self) -> bool:
        return self == AffineMap.identity()
    # endregion

    # region Class Methods
    def __post_init__(self):
        rows = tuple(tuple(to_fraction(value) for value in row) for row in self.matrix)
        if len(rows) != 2 or any(len(row) != 2 for row in rows):
            raise ValueError(f"Expected a 2x2 matrix, got {self.matrix}.")
        object.__setattr__(self, 'matrix', rows)

    def linear(self, vector: RationalVec2D) -> RationalVec2D:
        (m11, m12), (m21, m22) = self.matrix
        return RationalVec2D(m11 * vector.x + m12 * vector.y, m21 * vector.x + m22 * vector.y)

    def __call__(self, point: RationalVec2D) -> RationalVec2D:
        return self.linear(point) + self.translation

    def __matmul__(self, other: 'AffineMap') -> 'AffineMap':
        """:return: Composition self o other."""
        (a11, a12), (a21, a22) = self.matrix
        (b11, b12), (b21, b22) = other.matrix
        matrix = (
            (a11 * b11 + a12 * b21, a11 * b12 + a12 * b22),
            (a21 * b11 + a22 * b21, a21 * b12 + a22 * b22),
        )
        return AffineMap(matrix=matrix, translation=self(other.translation))

    def inverse(self) -> 'AffineMap':
        determinant: Fraction = self.determinant
        if determinant == 0:
            raise ValueError(f"Affine map with matrix {self.matrix} is not invertible.")
        (m11, m12), (m21, m22) = self.matrix
        matrix = ((m22 / determinant, -m12 / determinant), (-m21 / determinant, m11 / determinant))
        linear_inverse: AffineMap = AffineMap(matrix=matrix)
        return AffineMap(matrix=matrix, translation=-linear_inverse.linear(self.translation))

    def linear_part(self) -> LatticeAutomorphism:
        """:return: Matrix as an integral lattice automorphism."""
        if any(value.denominator != 1 for row in self.matrix for value in row):
            raise ValueError(f"Matrix {self.matrix} is not integral.")
        return LatticeAutomorphism.from_array(np.array([[int(value) for value in row] for row in self.matrix]))

    def to_dict(self) -> dict:
        return {
            'matrix': [[rational_to_dict(value) for value in row] for row in self.matrix],
            'translation': self.translation.to_dict(),
        }

    @classmethod
    def identity(cls) -> 'AffineMap':
        return AffineMap(matrix=((1, 0), (0, 1)))

    @classmethod
    def fixing(cls, matrix: Tuple[Tuple[int, int], Tuple[int, int]], point: RationalVec2D) -> 'AffineMap':
        """:return: x -> M (x - p) + p."""
        linear: AffineMap = AffineMap(matrix=matrix)
        return AffineMap(matrix=linear.matrix, translation=point - linear.linear(point))
    # endregion


def segment_ray_intersection(start: RationalVec2D, end: RationalVec2D, origin: RationalVec2D, direction: RationalVec2D) -> Optional[Tuple[Fraction, Fraction]]:
    """
    :return: (s, t) with start + s (end - start) = origin + t direction, s in [0, 1], t >= 0; None without intersection.
    :raises ValueError: when the segment is collinear with the ray and overlaps it.
    """
    edge: RationalVec2D = end - start
    denominator: Fraction = edge.cross(direction)
    offset: RationalVec2D = origin - start
    if denominator == 0:
        if offset.cross(edge) != 0:
            return None
        # Collinear: overlap iff some point of the segment has t >= 0
        t_start: Fraction = (start - origin).dot(direction) / direction.dot(direction)
        t_end: Fraction = (end - origin).dot(direction) / direction.dot(direction)
        if max(t_start, t_end) >= 0:
            raise ValueError("Segment runs along the ray.")
        return None
    s: Fraction = offset.cross(direction) / denominator
    t: Fraction = offset.cross(edge) / denominator
    if 0 <= s <= 1 and t >= 0:
        return s, t
    return None
