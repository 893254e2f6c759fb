# -------------------------------------------
# Module locating the triple point v_1 on the negative real axis.
# F_1(q) = Im G_1(q) on q <= 0 reduces to -1/2 Im G_0(q) + 3/2 Im G_0(0); F_1(0) > 0 and
# F_1 decreases to -infinity, so its unique zero is bracketed by scanning outwards.
# -------------------------------------------
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Tuple
from thimble_lab.numkernel.quadrature import DEFAULT_TOLERANCE
from thimble_lab.numkernel.root_finding import find_root_1d
from thimble_lab.fibration.family import zeta_power, CRITICAL_VALUE_MODULUS
from thimble_lab.periods.base_path import BasePath
from thimble_lab.periods.thimble_integrals import ThimbleIntegral, ThimbleSweep, thimble_integral
from thimble_lab.periods.surface_oracle import surface_integral_oracle
from thimble_lab.affine_syz.affine_chart import AffineValue, affine_coordinates
from thimble_lab.utilities.custom_exceptions import BracketNotFoundException

ROOT_TOLERANCE: float = 1e-12
ORACLE_ROOT_TOLERANCE: float = 1e-8
SCAN_EXPONENTS: Tuple[int, ...] = tuple(range(11))


@dataclass(frozen=True)
class TriplePoint:
    """
    Data class, common point v_1 of the negative real axis, l_{-c-d} and l_{-2c+d}, with its Z_3 images.
    """
    v1: float
    residual: float
    scale: float
    bracket: Tuple[float, float]
    crossing_residual: float

    # region Class Properties
    @property
    def v2(self) -> complex:
        return zeta_power(1) * self.v1

    @property
    def v3(self) -> complex:
        return zeta_power(2) * self.v1

    @property
    def points(self) -> Tuple[complex, complex, complex]:
        return complex(self.v1), self.v2, self.v3
    # endregion


@lru_cache(maxsize=16)
def origin_thimble_integral(tol: float = DEFAULT_TOLERANCE) -> ThimbleIntegral:
    """:return: G_0(0), whose modulus is the scale of all relative tolerances on the base."""
    return thimble_integral(0, 0.0, tol=tol)


def reference_scale(tol: float = DEFAULT_TOLERANCE) -> float:
    return abs(origin_thimble_integral(tol).value)


@lru_cache(maxsize=1024)
def _imaginary_g0(q: float, tol: float) -> float:
    return thimble_integral(0, q, tol=tol).value.imag


def compute_F1(q: float, tol: float = DEFAULT_TOLERANCE) -> float:
    """
    :param q: Real point, q <= 0.
    :param tol: Quadrature tolerance.
    :return: F_1(q) = -1/2 Im G_0(q) + 3/2 Im G_0(0).
    """
    q = float(q)
    if q > 0:
        raise ValueError(f"F_1 is evaluated on q <= 0, got {q}.")
    at_origin: float = origin_thimble_integral(tol).value.imag
    at_q: float = at_origin if q == 0 else _imaginary_g0(q, tol)
    return -0.5 * at_q + 1.5 * at_origin


def _scan_bracket(function: Callable[[float], float], nodes: Tuple[float, ...]) -> Tuple[float, float]:
    """:return: First interval (node, previous node) on which function turns negative."""
    previous: float = 0.0
    for node in nodes:
        if function(node) < 0:
            return node, previous
        previous = node
    raise BracketNotFoundException(f"F_1 does not change sign on [{nodes[-1]}, 0].")


def find_triple_point(tol: float = DEFAULT_TOLERANCE) -> TriplePoint:
    """
    :param tol: Quadrature tolerance.
    :return: Triple point from one thimble sweep of G_0 along the negative real axis.
    :raises BracketNotFoundException: when F_1 stays positive on the scanned range.
    """
    scan_nodes: Tuple[float, ...] = tuple(-float(2 ** exponent) for exponent in SCAN_EXPONENTS)
    path: BasePath = BasePath.from_nodes([CRITICAL_VALUE_MODULUS, 0.0, *scan_nodes], anchor=0)
    sweep: ThimbleSweep = ThimbleSweep(0, path, tol=tol)
    at_origin: complex = sweep.value_at(1.0)

    def f1(x: float) -> float:
        return -0.5 * sweep.value_at_point(complex(x)).imag + 1.5 * at_origin.imag

    bracket: Tuple[float, float] = _scan_bracket(f1, scan_nodes)
    v1: float = find_root_1d(f1, bracket, tol=ROOT_TOLERANCE)
    # On the real axis G_1 - G_2 is real, so the thimble of V_2 crosses zero at the same point
    crossing: float = abs(thimble_integral(2, v1, tol=tol).value.imag)
    return TriplePoint(
        v1=v1,
        residual=abs(f1(v1)),
        scale=abs(at_origin),
        bracket=bracket,
        crossing_residual=crossing,
    )


def oracle_triple_point(bracket: Tuple[float, float], tol: float = ORACLE_ROOT_TOLERANCE) -> float:
    """:return: Zero of F_1 computed with the surface-integral oracle instead of lattice transport."""
    at_origin: float = surface_integral_oracle(0.0).value.imag

    def f1(x: float) -> float:
        return -0.5 * surface_integral_oracle(x).value.imag + 1.5 * at_origin

    return find_root_1d(f1, bracket, tol=tol)


def triangle_coordinates(triple_point: TriplePoint, tol: float = DEFAULT_TOLERANCE) -> Tuple[AffineValue, AffineValue, AffineValue]:
    """:return: Affine coordinates (f_c, f_d) at v_1, v_2, v_3 along their radial paths."""
    return tuple(affine_coordinates(point, tol=tol) for point in triple_point.points)
