# -------------------------------------------
# Module containing the cubic relation among u_1, u_2, u_3.
# With u_i = e_1 - z_i and z_1 z_2 z_3 = 1 the polynomial
# P = sum u_i^3 + 2 u_1 u_2 u_3 - sum_{i != j} u_i^2 u_j is the constant -8.
# -------------------------------------------
from dataclasses import dataclass
from typing import Sequence, Tuple
import numpy as np
import sympy as sym
from thimble_lab.mirror_atlas.charts import TorusChartPoint, immersed_coordinates


@dataclass(frozen=True)
class CubicConstancy:
    """
    Data class, value of the cubic relation over a sample with its relative spread.
    """
    constant: complex
    spread: float
    sample_count: int


def cubic_relation(u1: complex, u2: complex, u3: complex) -> complex:
    """:return: u1^3 + u2^3 + u3^3 + 2 u1 u2 u3 - sum_{i != j} u_i^2 u_j."""
    cubes: complex = u1 ** 3 + u2 ** 3 + u3 ** 3
    mixed: complex = u1 * u1 * (u2 + u3) + u2 * u2 * (u1 + u3) + u3 * u3 * (u1 + u2)
    return cubes + 2 * u1 * u2 * u3 - mixed


def cubic_relation_at(point: TorusChartPoint) -> complex:
    return cubic_relation(*immersed_coordinates(point))


def cubic_constancy(points: Sequence[TorusChartPoint]) -> CubicConstancy:
    """:return: Mean value of the cubic relation and max |P - mean| / |mean| over the sample."""
    if not points:
        raise ValueError("Cubic constancy needs at least one sample.")
    values: np.ndarray = np.array([cubic_relation_at(point) for point in points])
    mean: complex = complex(np.mean(values))
    spread: float = float(np.max(np.abs(values - mean)) / max(abs(mean), np.finfo(float).tiny))
    return CubicConstancy(constant=mean, spread=spread, sample_count=len(points))


def symbolic_cubic_constant() -> sym.Expr:
    """:return: P after substituting u_i = z_{i+1} + z_{i+2} with z_3 = 1 / (z_1 z_2), simplified."""
    z1, z2 = sym.symbols('z1 z2', nonzero=True)
    z = (z1, z2, 1 / (z1 * z2))
    u = tuple(z[(i + 1) % 3] + z[(i + 2) % 3] for i in range(3))
    return sym.simplify(sym.expand(cubic_relation(*u)))


def power_sum_form(u: Tuple[complex, complex, complex]) -> complex:
    """:return: s1^3 - 4 s1 s2 + 8 s3 in the elementary symmetric functions of u; equals the cubic relation."""
    s1: complex = u[0] + u[1] + u[2]
    s2: complex = u[0] * u[1] + u[0] * u[2] + u[1] * u[2]
    s3: complex = u[0] * u[1] * u[2]
    return s1 ** 3 - 4.0 * s1 * s2 + 8.0 * s3
