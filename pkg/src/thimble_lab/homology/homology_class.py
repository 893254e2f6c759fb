# -------------------------------------------
# Module containing integral first homology classes of the reference fiber E_0.
# Two bases are in use: {a, b} and {c, d}, related by a = -c + d, b = c.
# -------------------------------------------
from dataclasses import dataclass, field
from enum import Enum, unique
from typing import Tuple
import numpy as np
from thimble_lab.utilities.custom_exceptions import BasisMismatchException


@unique
class BasisTag(Enum):
    AB = 'ab'
    CD = 'cd'


@dataclass(frozen=True)
class HomologyClass:
    """
    Data class, integer coefficients of a class in H_1(E_0, Z) with respect to a tagged basis.
    """
    coeffs: Tuple[int, int]
    basis_tag: BasisTag = field(default=BasisTag.CD)

    # region Class Properties
    @property
    def first(self) -> int:
        return self.coeffs[0]

    @property
    def second(self) -> int:
        return self.coeffs[1]

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (0, 0)
    # endregion

    # region Class Methods
    def __post_init__(self):
        first, second = self.coeffs
        if int(first) != first or int(second) != second:
            raise ValueError(f"Homology coefficients must be integers, got {self.coeffs}.")
        object.__setattr__(self, 'coeffs', (int(first), int(second)))

    def _assert_same_basis(self, other: 'HomologyClass'):
        if self.basis_tag != other.basis_tag:
            raise BasisMismatchException(f"Classes are expressed in different bases: {self.basis_tag.name} and {other.basis_tag.name}.")

    def __add__(self, other: 'HomologyClass') -> 'HomologyClass':
        self._assert_same_basis(other)
        return HomologyClass(coeffs=(self.first + other.first, self.second + other.second), basis_tag=self.basis_tag)

    def __sub__(self, other: 'HomologyClass') -> 'HomologyClass':
        return self + (-other)

    def __neg__(self) -> 'HomologyClass':
        return HomologyClass(coeffs=(-self.first, -self.second), basis_tag=self.basis_tag)

    def __rmul__(self, scalar: int) -> 'HomologyClass':
        return HomologyClass(coeffs=(scalar * self.first, scalar * self.second), basis_tag=self.basis_tag)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.coeffs, dtype=int)

    def convert(self, target: BasisTag) -> 'HomologyClass':
        """:return: Same class expressed in the target basis."""
        return convert_basis(self, target)

    def __str__(self) -> str:
        names: Tuple[str, str] = ('a', 'b') if self.basis_tag == BasisTag.AB else ('c', 'd')
        terms = [f"{coefficient}{name}" for coefficient, name in zip(self.coeffs, names) if coefficient != 0]
        return ' + '.join(terms).replace('+ -', '- ') if terms else '0'

    @classmethod
    def from_cd(cls, p: int, q: int) -> 'HomologyClass':
        return HomologyClass(coeffs=(p, q), basis_tag=BasisTag.CD)

    @classmethod
    def from_ab(cls, x: int, y: int) -> 'HomologyClass':
        return HomologyClass(coeffs=(x, y), basis_tag=BasisTag.AB)
    # endregion


# Vanishing cycle classes [V_0], [V_1], [V_2]
VANISHING_CYCLES_AB: Tuple[Tuple[int, int], ...] = ((-2, -1), (1, 2), (1, -1))
VANISHING_CYCLES_CD: Tuple[Tuple[int, int], ...] = ((1, -2), (1, 1), (-2, 1))


def convert_basis(cycle: HomologyClass, target: BasisTag) -> HomologyClass:
    """
    x a + y b = (y - x) c + x d, and p c + q d = q a + (p + q) b.
    :return: Class in target basis.
    """
    if cycle.basis_tag == target:
        return cycle
    first, second = cycle.coeffs
    if target == BasisTag.CD:
        return HomologyClass(coeffs=(second - first, first), basis_tag=BasisTag.CD)
    return HomologyClass(coeffs=(second, first + second), basis_tag=BasisTag.AB)


def intersection(x: HomologyClass, y: HomologyClass) -> int:
    """
    Antisymmetric intersection pairing normalized by <d, c> = 1 (so <a, b> = 1 as well).
    :return: Integer intersection number.
    """
    if x.basis_tag != y.basis_tag:
        raise BasisMismatchException(f"Cannot pair classes in bases {x.basis_tag.name} and {y.basis_tag.name}.")
    x_cd, y_cd = convert_basis(x, BasisTag.CD), convert_basis(y, BasisTag.CD)
    return x_cd.second * y_cd.first - x_cd.first * y_cd.second


def vanishing_cycle(j: int, basis: BasisTag = BasisTag.CD) -> HomologyClass:
    """:return: Class of the cycle V_j vanishing at the critical value 3 zeta^j."""
    if j not in (0, 1, 2):
        raise ValueError(f"Vanishing cycle index must be 0, 1 or 2, got {j}.")
    table = VANISHING_CYCLES_AB if basis == BasisTag.AB else VANISHING_CYCLES_CD
    return HomologyClass(coeffs=table[j], basis_tag=basis)
