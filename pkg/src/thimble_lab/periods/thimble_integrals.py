# -------------------------------------------
# Module containing cycle periods and thimble integrals.
# dG_j/dq is the period of the vanishing cycle V_j, so G_j(q) is the integral of the
# transported vanishing period along a base path from 3 zeta^j, with G_j(3 zeta^j) = 0.
# -------------------------------------------
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional, Tuple, Union
import numpy as np
from thimble_lab.numkernel.contour import Contour, LineSegment
from thimble_lab.numkernel.quadrature import DEFAULT_TOLERANCE
from thimble_lab.fibration.family import critical_values
from thimble_lab.homology.homology_class import BasisTag, HomologyClass, convert_basis, vanishing_cycle
from thimble_lab.periods.base_path import BasePath, DEFAULT_PATH_CLEARANCE, check_in_domain, thimble_path
from thimble_lab.periods.cycle_transport import CycleTransport, TransportIntegral, vanishing_period

REFERENCE_POINT: complex = 0j


@dataclass(frozen=True)
class ReferencePeriods:
    """
    Data class, periods of V_0, V_1, V_2 on the reference fiber E_0 and the derived periods of the basis {c, d}.
    """
    vanishing: Tuple[complex, complex, complex]
    error: float = field(default=0.0)

    # region Class Properties
    @property
    def c(self) -> complex:
        """:return: Period of c = (2 V_1 + V_0) / 3."""
        return (2.0 * self.vanishing[1] + self.vanishing[0]) / 3.0

    @property
    def d(self) -> complex:
        """:return: Period of d = (V_1 - V_0) / 3."""
        return (self.vanishing[1] - self.vanishing[0]) / 3.0
    # endregion

    # region Class Methods
    def period_of(self, cycle: HomologyClass) -> complex:
        p, q = convert_basis(cycle, BasisTag.CD).coeffs
        return p * self.c + q * self.d
    # endregion


@dataclass(frozen=True)
class CyclePeriod:
    """
    Data class, period of a cycle (expressed in {c, d} on E_0) continued to the fiber over q.
    """
    q: complex
    cycle: HomologyClass
    value: complex
    error: float


@dataclass(frozen=True)
class ThimbleIntegral:
    """
    Data class, integral of the holomorphic form over the thimble of V_j along path.
    """
    j: int
    target: complex
    value: complex
    error: float
    path: Optional[BasePath] = field(default=None)
    n_evaluations: int = field(default=0)


@lru_cache(maxsize=16)
def reference_periods(tol: float = DEFAULT_TOLERANCE) -> ReferencePeriods:
    """:return: Vanishing-cycle periods on E_0, each transported from its critical value along the straight segment."""
    values: List[complex] = []
    error: float = 0.0
    for j in range(3):
        transport: CycleTransport = CycleTransport(thimble_path(j, REFERENCE_POINT), [vanishing_period(j)], tol=tol)
        values.append(complex(transport.final_values[0]))
        error = max(error, transport.error)
    return ReferencePeriods(vanishing=tuple(values), error=error)


def cycle_period(q: complex, j: Union[int, HomologyClass], continuation_path: Optional[BasePath] = None, tol: float = DEFAULT_TOLERANCE) -> CyclePeriod:
    """
    :param q: Base point, not a critical value.
    :param j: Vanishing cycle index, or any class on E_0.
    :param continuation_path: Path from the reference point 0 to q, straight by default.
    :param tol: Quadrature tolerance.
    :return: Period of the continued cycle over q.
    """
    q = complex(q)
    cycle: HomologyClass = vanishing_cycle(j) if isinstance(j, (int, np.integer)) else convert_basis(j, BasisTag.CD)
    reference: ReferencePeriods = reference_periods(tol)
    initial: complex = reference.period_of(cycle)
    if continuation_path is None:
        if q == REFERENCE_POINT:
            return CyclePeriod(q=q, cycle=cycle, value=initial, error=reference.error)
        continuation_path = BasePath.from_nodes([REFERENCE_POINT, q])
    if abs(continuation_path.start - REFERENCE_POINT) > 1e-12:
        raise ValueError(f"Continuation path must start at the reference point 0, got {continuation_path.start}.")
    if abs(continuation_path.end - q) > 1e-12 * max(1.0, abs(q)):
        raise ValueError(f"Continuation path ends at {continuation_path.end}, expected {q}.")
    transport: CycleTransport = CycleTransport(continuation_path, [initial], tol=tol)
    return CyclePeriod(q=q, cycle=cycle, value=complex(transport.final_values[0]), error=max(transport.error, reference.error))


class ThimbleSweep:
    """
    Behaviour class, thimble integral of V_j along one base path, available at every point of the path.
    """

    # region Class Properties
    @property
    def j(self) -> int:
        return self._j

    @property
    def path(self) -> BasePath:
        return self._path

    @property
    def transport(self) -> CycleTransport:
        return self._integral.transport

    @property
    def error(self) -> float:
        return self._integral.error

    @property
    def final(self) -> ThimbleIntegral:
        return ThimbleIntegral(j=self._j, target=self._path.end, value=complex(self._integral.final_value[0]), error=self.error, path=self._path, n_evaluations=self._integral.n_evaluations)
    # endregion

    # region Class Constructor
    def __init__(self, j: int, path: BasePath, tol: float = DEFAULT_TOLERANCE):
        """
        :param j: Thimble index.
        :param path: Path in W_j anchored at 3 zeta^j.
        :param tol: Quadrature tolerance.
        """
        self._j: int = j % 3
        if path.anchor != self._j:
            raise ValueError(f"Thimble path must be anchored at {critical_values()[self._j]}.")
        check_in_domain(path, self._j)
        self._path: BasePath = path
        self._integral: TransportIntegral = TransportIntegral(CycleTransport(path, [vanishing_period(self._j)], tol=tol))
    # endregion

    # region Class Methods
    def value_at(self, tau: float) -> complex:
        """:return: G_j at global path parameter tau."""
        return complex(self._integral.value_at(tau)[0])

    def period_at(self, tau: float) -> complex:
        """:return: Transported period of V_j (dG_j/dq) at global path parameter tau."""
        return complex(self._integral.transport.values_at(tau)[0])

    def parameter_of(self, z: complex) -> float:
        """:return: Global parameter of the point z on a straight segment of the path."""
        for index, segment in enumerate(self._path.segments):
            if not isinstance(segment, LineSegment):
                continue
            if segment.distance_to(z) <= 1e-12 * max(1.0, abs(z)):
                direction: complex = segment.end - segment.start
                local: float = ((z - segment.start) * direction.conjugate()).real / abs(direction) ** 2
                return index + min(max(local, 0.0), 1.0)
        raise ValueError(f"Point {z} does not lie on a straight segment of the path.")

    def value_at_point(self, z: complex) -> complex:
        return self.value_at(self.parameter_of(complex(z)))

    def node_integrals(self) -> List[ThimbleIntegral]:
        """:return: Thimble integrals at every path node after the start, with the corresponding sub-paths."""
        result: List[ThimbleIntegral] = []
        for index in range(1, self._path.segment_count + 1):
            sub_path: BasePath = BasePath(
                contour=Contour(segments=self._path.segments[:index]),
                clearance=self._path.clearance,
                anchor=self._j,
            )
            result.append(ThimbleIntegral(j=self._j, target=sub_path.end, value=self.value_at(float(index)), error=self.error, path=sub_path))
        return result
    # endregion


def thimble_integral(j: int, target_q: complex, path: Optional[BasePath] = None, tol: float = DEFAULT_TOLERANCE, clearance: float = DEFAULT_PATH_CLEARANCE) -> ThimbleIntegral:
    """
    :param j: Thimble index.
    :param target_q: End point of the path.
    :param path: Base path from 3 zeta^j inside W_j, defaults to thimble_path(j, target_q).
    :param tol: Quadrature tolerance.
    :return: G_j(target_q).
    """
    target_q = complex(target_q)
    origin: complex = critical_values()[j % 3]
    if path is None:
        if abs(target_q - origin) <= 1e-12:
            return ThimbleIntegral(j=j % 3, target=origin, value=0j, error=0.0)
        path = thimble_path(j, target_q, clearance=clearance)
    elif abs(path.end - target_q) > 1e-12 * max(1.0, abs(target_q)):
        raise ValueError(f"Path ends at {path.end}, expected {target_q}.")
    return ThimbleSweep(j, path, tol=tol).final


def thimble_sweep(j: int, path: BasePath, tol: float = DEFAULT_TOLERANCE) -> List[ThimbleIntegral]:
    """:return: Thimble integrals at the nodes of path, computed with a single transport."""
    return ThimbleSweep(j, path, tol=tol).node_integrals()
