# -------------------------------------------
# Module evaluating the superpotential on the chart atlas.
# Torus chart: W = z_1 + z_2 + z_3; immersed chart: W = u + v^2 / (uv - 1).
# Both are scaled by T^(A/3) when a Novikov value is given.
# -------------------------------------------
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple
import numpy as np
import sympy as sym
from multipledispatch import dispatch
from thimble_lab.fibration.family import critical_points, critical_values
from thimble_lab.fibration.branch_data import BranchData, branch_points
from thimble_lab.mirror_atlas.charts import (
    CHART_INDICES,
    TorusChartPoint,
    ImmersedChartPoint,
    torus_to_immersed,
)
from thimble_lab.utilities.custom_exceptions import OnExcludedLocusException


@dataclass(frozen=True)
class NovikovScale:
    """
    Data class, area A of the line class and the value of T; T = None stands for T = 1.
    """
    area: float = field(default=1.0)
    t_value: Optional[float] = field(default=None)

    # region Class Properties
    @property
    def factor(self) -> float:
        """:return: T^(A/3)."""
        return 1.0 if self.t_value is None else float(self.t_value) ** (self.area / 3.0)
    # endregion

    # region Class Methods
    def __post_init__(self):
        if self.area <= 0:
            raise ValueError(f"Area must be positive, got {self.area}.")
        if self.t_value is not None and self.t_value <= 0:
            raise ValueError(f"T must be positive, got {self.t_value}.")
    # endregion


@dispatch(TorusChartPoint, NovikovScale)
def eval_W(point: TorusChartPoint, scale: NovikovScale) -> complex:
    return scale.factor * (point.z1 + point.z2 + point.z3)


@dispatch(ImmersedChartPoint, NovikovScale)
def eval_W(point: ImmersedChartPoint, scale: NovikovScale) -> complex:
    denominator: complex = point.u * point.v - 1.0
    if denominator == 0:
        raise OnExcludedLocusException(f"W is undefined on uv = 1, got (u, v) = ({point.u}, {point.v}).")
    return scale.factor * (point.u + point.v * point.v / denominator)


@dispatch(object)
def eval_W(point) -> complex:
    return eval_W(point, NovikovScale())


def fiber_equation_check(c: complex, point: ImmersedChartPoint) -> float:
    """:return: |u (uv - 1) + v^2 - c (uv - 1)|, zero on the fiber W = c."""
    excess: complex = point.u * point.v - 1.0
    return float(abs(point.u * excess + point.v * point.v - complex(c) * excess))


def chart_agreement(points: Sequence[TorusChartPoint], scale: NovikovScale = NovikovScale()) -> float:
    """:return: Largest relative discrepancy between W in the torus chart and in the immersed charts."""
    worst: float = 0.0
    for point in points:
        reference: complex = eval_W(point, scale)
        for i in CHART_INDICES:
            value: complex = eval_W(torus_to_immersed(point, i), scale)
            worst = max(worst, abs(value - reference) / max(1.0, abs(reference)))
    return worst


@dataclass(frozen=True)
class CriticalFiber:
    """
    Data class, critical value of W with the branch data of its fiber over the t1-line.
    """
    value: complex
    point: TorusChartPoint
    branch_data: BranchData

    # region Class Properties
    @property
    def node_count(self) -> int:
        """:return: Number of double roots of the branch cubic, one per node of the fiber."""
        return sum(1 for multiplicity in self.branch_data.multiplicities if multiplicity == 2) // 2
    # endregion


def critical_values_of_W_atlas() -> Tuple[CriticalFiber, CriticalFiber, CriticalFiber]:
    """
    The immersed charts add the sections {v_i = 0}, on which dW/du = 1, so all critical points lie in the torus chart.
    :return: Critical values with their nodal fibers.
    """
    fibers: List[CriticalFiber] = []
    for t1, t2 in critical_points():
        point = TorusChartPoint(z1=t1, z2=t2)
        value: complex = eval_W(point)
        fibers.append(CriticalFiber(value=value, point=point, branch_data=branch_points(value)))
    return tuple(fibers)


def matches_fibration(fibers: Sequence[CriticalFiber], tol: float = 1e-12) -> bool:
    """:return: Whether the critical values equal those of the fibration as sets."""
    expected: np.ndarray = np.array(critical_values())
    return all(np.min(np.abs(expected - fiber.value)) <= tol for fiber in fibers) and len(fibers) == len(expected)


def _add_distinct(values: List[sym.Expr], candidate: sym.Expr) -> None:
    if all(abs(complex(sym.N(candidate - value))) > 1e-12 for value in values):
        values.append(candidate)


def symbolic_critical_values() -> List[sym.Expr]:
    """:return: Distinct critical values of W from solving dW = 0 on the torus chart and on an immersed chart."""
    values: List[sym.Expr] = []
    z1, z2 = sym.symbols('z1 z2')
    torus = z1 + z2 + 1 / (z1 * z2)
    torus_equations = [sym.numer(sym.together(sym.diff(torus, symbol))) for symbol in (z1, z2)]
    for solution in sym.solve(torus_equations, [z1, z2], dict=True):
        if sym.simplify(z1 * z2).subs(solution) != 0:
            _add_distinct(values, sym.expand(sym.simplify(torus.subs(solution))))

    u, v = sym.symbols('u v')
    immersed = u + v ** 2 / (u * v - 1)
    immersed_equations = [sym.numer(sym.together(sym.diff(immersed, symbol))) for symbol in (u, v)]
    for solution in sym.solve(immersed_equations, [u, v], dict=True):
        if sym.simplify(u * v - 1).subs(solution) != 0:
            _add_distinct(values, sym.expand(sym.simplify(immersed.subs(solution))))
    return sorted(values, key=lambda value: float(sym.arg(value)) % (2 * np.pi))
