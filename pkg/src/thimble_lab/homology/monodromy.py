# -------------------------------------------
# Module containing exact integral 2x2 matrices acting on H_1(E_0, Z) in the {c, d} basis:
# Picard-Lefschetz transformations, the total monodromy, the anti-holomorphic involution
# and the order three rotation.
# -------------------------------------------
from dataclasses import dataclass
from enum import Enum, unique
from functools import reduce
from math import gcd
from typing import Tuple
import numpy as np
from multipledispatch import dispatch
from thimble_lab.homology.homology_class import (
    BasisTag,
    HomologyClass,
    convert_basis,
    intersection,
    vanishing_cycle,
)
IntegerEntries = Tuple[Tuple[int, int], Tuple[int, int]]


@unique
class LoopLabel(Enum):
    A = 'A'
    B = 'B'
    C = 'C'
    INFINITY = 'Infinity'

    # region Class Properties
    @property
    def critical_index(self) -> int:
        """:return: Index j of the enclosed critical value 3 zeta^j (finite loops only)."""
        if self == LoopLabel.INFINITY:
            raise ValueError("The loop around infinity encloses all critical values.")
        return {LoopLabel.A: 0, LoopLabel.B: 1, LoopLabel.C: 2}[self]
    # endregion

    # region Class Methods
    @classmethod
    def from_name(cls, name: str) -> 'LoopLabel':
        for label in cls:
            if label.value.lower() == name.lower():
                return label
        raise ValueError(f"Unknown loop label '{name}', expected one of {[label.value for label in cls]}.")
    # endregion


@dataclass(frozen=True)
class LatticeAutomorphism:
    """
    Data class, integral 2x2 matrix with determinant +-1 acting on coefficient columns.
    """
    entries: IntegerEntries

    # region Class Properties
    @property
    def determinant(self) -> int:
        (m11, m12), (m21, m22) = self.entries
        return m11 * m22 - m12 * m21

    @property
    def trace(self) -> int:
        return self.entries[0][0] + self.entries[1][1]
    # endregion

    # region Class Methods
    def __post_init__(self):
        rows = tuple(tuple(int(value) for value in row) for row in self.entries)
        if len(rows) != 2 or any(len(row) != 2 for row in rows):
            raise ValueError(f"Expected a 2x2 matrix, got {self.entries}.")
        object.__setattr__(self, 'entries', rows)
        self._validate()

    def _validate(self):
        if abs(self.determinant) != 1:
            raise ValueError(f"Matrix {self.entries} is not invertible over the integers (det = {self.determinant}).")

    def __matmul__(self, other):
        return compose(self, other)

    def inverse(self) -> 'LatticeAutomorphism':
        (m11, m12), (m21, m22) = self.entries
        det: int = self.determinant
        return _wrap(((m22 * det, -m12 * det), (-m21 * det, m11 * det)))

    def transpose(self) -> 'LatticeAutomorphism':
        (m11, m12), (m21, m22) = self.entries
        return _wrap(((m11, m21), (m12, m22)))

    def power(self, exponent: int) -> 'LatticeAutomorphism':
        base: LatticeAutomorphism = self if exponent >= 0 else self.inverse()
        return reduce(lambda result, _: result @ base, range(abs(exponent)), _wrap(((1, 0), (0, 1))))

    def minus_identity(self) -> np.ndarray:
        """:return: M - I as integer array."""
        return self.as_array() - np.eye(2, dtype=int)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.entries, dtype=int)

    def as_lists(self) -> list:
        return [list(row) for row in self.entries]

    @classmethod
    def identity(cls) -> 'LatticeAutomorphism':
        return _wrap(((1, 0), (0, 1)))

    @classmethod
    def from_array(cls, array: np.ndarray) -> 'LatticeAutomorphism':
        """:return: Matrix from (integer valued) array, rounding entries."""
        rounded = np.rint(np.asarray(array, dtype=float)).astype(int)
        return _wrap(tuple(tuple(int(value) for value in row) for row in rounded))
    # endregion


@dataclass(frozen=True)
class MonodromyMatrix(LatticeAutomorphism):
    """
    Data class, monodromy of the fiber homology around a loop (determinant 1).
    """

    # region Class Methods
    def _validate(self):
        if self.determinant != 1:
            raise ValueError(f"Monodromy matrix {self.entries} must have determinant 1, got {self.determinant}.")
    # endregion


def _wrap(entries: IntegerEntries) -> LatticeAutomorphism:
    (m11, m12), (m21, m22) = entries
    if m11 * m22 - m12 * m21 == 1:
        return MonodromyMatrix(entries=entries)
    return LatticeAutomorphism(entries=entries)


@dispatch(LatticeAutomorphism, LatticeAutomorphism)
def compose(left: LatticeAutomorphism, right: LatticeAutomorphism) -> LatticeAutomorphism:
    """:return: Matrix product left * right."""
    (a11, a12), (a21, a22) = left.entries
    (b11, b12), (b21, b22) = right.entries
    return _wrap((
        (a11 * b11 + a12 * b21, a11 * b12 + a12 * b22),
        (a21 * b11 + a22 * b21, a21 * b12 + a22 * b22),
    ))


@dispatch(LatticeAutomorphism, HomologyClass)
def compose(left: LatticeAutomorphism, right: HomologyClass) -> HomologyClass:
    """:return: Image of a class (converted to the {c, d} basis)."""
    p, q = convert_basis(right, BasisTag.CD).coeffs
    (m11, m12), (m21, m22) = left.entries
    return HomologyClass(coeffs=(m11 * p + m12 * q, m21 * p + m22 * q), basis_tag=BasisTag.CD)


def picard_lefschetz(delta: HomologyClass) -> MonodromyMatrix:
    """
    Counterclockwise monodromy T(v) = v + <delta, v> delta around a node with vanishing cycle delta.
    :param delta: Vanishing class p c + q d.
    :return: [[1 + pq, -p^2], [q^2, 1 - pq]].
    """
    p, q = convert_basis(delta, BasisTag.CD).coeffs
    return MonodromyMatrix(entries=((1 + p * q, -p * p), (q * q, 1 - p * q)))


def monodromy_around(label: LoopLabel) -> MonodromyMatrix:
    """:return: Monodromy around a single critical value, or the total monodromy for the loop at infinity."""
    if label == LoopLabel.INFINITY:
        return total_monodromy()
    return picard_lefschetz(vanishing_cycle(label.critical_index, BasisTag.CD))


def total_monodromy() -> MonodromyMatrix:
    """:return: M_C M_B M_A, monodromy along a large counterclockwise circle from the negative real axis."""
    m_a, m_b, m_c = (picard_lefschetz(vanishing_cycle(j)) for j in range(3))
    return m_c @ m_b @ m_a


def conjugation_action() -> LatticeAutomorphism:
    """:return: Action of the anti-holomorphic involution of E_0 on H_1, [[1, 1], [0, -1]]."""
    return LatticeAutomorphism(entries=((1, 1), (0, -1)))


def z3_rotation() -> MonodromyMatrix:
    """:return: [[-1, -1], [1, 0]], sending [V_0] -> [V_1] -> [V_2] -> [V_0]."""
    return MonodromyMatrix(entries=((-1, -1), (1, 0)))


def content(matrix: LatticeAutomorphism) -> int:
    """:return: gcd of the entries of M - I (0 for the identity)."""
    return int(reduce(gcd, (abs(int(value)) for value in matrix.minus_identity().flat), 0))


def is_unipotent_conjugate(matrix: LatticeAutomorphism, shear: int) -> bool:
    """:return: Whether M is conjugate in SL(2, Z) to [[1, shear], [0, 1]] (trace 2, (M - I)^2 = 0, content |shear|)."""
    difference: np.ndarray = matrix.minus_identity()
    return (
        matrix.determinant == 1
        and matrix.trace == 2
        and not np.any(difference @ difference)
        and content(matrix) == abs(shear)
    )


def invariant_direction(matrix: LatticeAutomorphism) -> HomologyClass:
    """
    :param matrix: Matrix with one-dimensional fixed space (M - I of rank 1).
    :return: Primitive generator of ker(M - I), first non-zero coefficient positive.
    """
    (n11, n12), (n21, n22) = matrix.minus_identity().tolist()
    if n11 == n12 == n21 == n22 == 0:
        raise ValueError("Identity matrix has no distinguished invariant direction.")
    if n11 * n22 - n12 * n21 != 0:
        raise ValueError(f"Matrix {matrix.entries} has no non-zero fixed vector.")
    p, q = (-n12, n11) if (n11, n12) != (0, 0) else (-n22, n21)
    divisor: int = gcd(p, q)
    p, q = p // divisor, q // divisor
    if p < 0 or (p == 0 and q < 0):
        p, q = -p, -q
    return HomologyClass.from_cd(p, q)


def cut_invariant_cycle() -> HomologyClass:
    """
    :return: Class fixed by M_A^-1 composed with the conjugation action. Its period is real along
        the positive real cut {q > 3} when reached from below A. Equals c - d, the fixed class of the total monodromy.
    """
    m_a: MonodromyMatrix = picard_lefschetz(vanishing_cycle(0))
    return invariant_direction(m_a.inverse() @ conjugation_action())
