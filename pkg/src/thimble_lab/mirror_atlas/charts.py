# -------------------------------------------
# Module containing the chart atlas of the mirror: the torus chart (z_1, z_2) with z_1 z_2 z_3 = 1
# and three immersed charts (u_i, v_i) on C^2 minus {uv = 1}. On the overlap
# v_i = 1 / z_{i+1} and u_i = z_{i+1} + z_{i+2}, so u_i v_i = 1 + w_{i+1} with w_{i+1} = z_{i+2} / z_{i+1}.
# Indices are taken mod 3 with z_0 = z_3.
# -------------------------------------------
from dataclasses import dataclass
from typing import List, Tuple
import numpy as np
from thimble_lab.utilities.custom_exceptions import OnExcludedLocusException
from thimble_lab.utilities.readwrite_json import format_complex

CHART_INDICES: Tuple[int, int, int] = (1, 2, 3)


def _validate_chart_index(i: int) -> int:
    if i not in CHART_INDICES:
        raise ValueError(f"Immersed chart index must be one of {CHART_INDICES}, got {i}.")
    return i


@dataclass(frozen=True)
class TorusChartPoint:
    """
    Data class, point (z_1, z_2) of the torus chart; z_3 = 1 / (z_1 z_2).
    """
    z1: complex
    z2: complex

    # region Class Properties
    @property
    def z3(self) -> complex:
        return 1.0 / (self.z1 * self.z2)

    @property
    def coordinates(self) -> Tuple[complex, complex, complex]:
        return self.z1, self.z2, self.z3
    # endregion

    # region Class Methods
    def __post_init__(self):
        object.__setattr__(self, 'z1', complex(self.z1))
        object.__setattr__(self, 'z2', complex(self.z2))
        if self.z1 == 0 or self.z2 == 0:
            raise ValueError(f"Torus chart coordinates must be non-zero, got ({self.z1}, {self.z2}).")

    def z(self, index: int) -> complex:
        """:return: z_index with indices mod 3 (z_0 = z_3)."""
        return self.coordinates[(index - 1) % 3]

    def w(self, index: int) -> complex:
        """:return: w_index = z_{index+1} / z_index."""
        return self.z(index + 1) / self.z(index)

    def cycled(self) -> 'TorusChartPoint':
        """:return: Point with coordinates (z_2, z_3, z_1)."""
        return TorusChartPoint(z1=self.z2, z2=self.z3)

    def to_dict(self) -> dict:
        return {'chart': 'torus', 'z1': format_complex(self.z1), 'z2': format_complex(self.z2)}
    # endregion


@dataclass(frozen=True)
class ImmersedChartPoint:
    """
    Data class, point (u, v) of the immersed chart i, off the excluded locus uv = 1.
    """
    i: int
    u: complex
    v: complex

    # region Class Methods
    def __post_init__(self):
        _validate_chart_index(self.i)
        object.__setattr__(self, 'u', complex(self.u))
        object.__setattr__(self, 'v', complex(self.v))
        if self.u * self.v == 1:
            raise OnExcludedLocusException(f"Point (u, v) = ({self.u}, {self.v}) of chart {self.i} lies on uv = 1.")

    def to_dict(self) -> dict:
        return {'chart': f'immersed_{self.i}', 'u': format_complex(self.u), 'v': format_complex(self.v)}
    # endregion


def torus_to_immersed(point: TorusChartPoint, i: int) -> ImmersedChartPoint:
    """:return: (u_i, v_i) = (z_{i+1} + z_{i+2}, 1 / z_{i+1})."""
    _validate_chart_index(i)
    return ImmersedChartPoint(i=i, u=point.z(i + 1) + point.z(i + 2), v=1.0 / point.z(i + 1))


def immersed_to_torus(point: ImmersedChartPoint) -> TorusChartPoint:
    """
    Overlap inverse: z_{i+1} = 1 / v, z_{i+2} = u - 1 / v.
    :raises ValueError: when v = 0, the section of the chart that the torus chart misses.
    """
    if point.v == 0:
        raise ValueError(f"Point (u, v) = ({point.u}, 0) of chart {point.i} is not in the torus chart.")
    coordinates: List[complex] = [0j, 0j, 0j]
    z_next: complex = 1.0 / point.v
    z_after: complex = point.u - z_next
    coordinates[point.i % 3] = z_next
    coordinates[(point.i + 1) % 3] = z_after
    coordinates[(point.i - 1) % 3] = 1.0 / (z_next * z_after)
    return TorusChartPoint(z1=coordinates[0], z2=coordinates[1])


def immersed_coordinates(point: TorusChartPoint) -> Tuple[complex, complex, complex]:
    """:return: (u_1, u_2, u_3) of a torus chart point."""
    return tuple(torus_to_immersed(point, i).u for i in CHART_INDICES)


def sample_torus_points(n: int, seed: int) -> List[TorusChartPoint]:
    """
    :param n: Sample count.
    :param seed: Seed of the numpy generator.
    :return: Points with log-uniform moduli in [1/2, 2] and uniform phases.
    """
    if n < 0:
        raise ValueError(f"Sample count must be non-negative, got {n}.")
    generator: np.random.Generator = np.random.default_rng(seed)
    moduli: np.ndarray = np.exp(generator.uniform(np.log(0.5), np.log(2.0), size=(n, 2)))
    phases: np.ndarray = generator.uniform(0.0, 2.0 * np.pi, size=(n, 2))
    values: np.ndarray = moduli * np.exp(1j * phases)
    return [TorusChartPoint(z1=complex(row[0]), z2=complex(row[1])) for row in values]
