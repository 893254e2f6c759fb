# -------------------------------------------
# Module containing the two t2-sheets over the t1-line and the density of the form.
# Fiber quadratic: t1 t2^2 + (t1^2 - q t1) t2 + 1 = 0, so
# t2 = ((q - t1) +- sqrt(D)) / 2 with D = (q - t1)^2 - 4/t1.
# -------------------------------------------
from dataclasses import dataclass
from typing import Optional, Union
import numpy as np
from thimble_lab.numkernel.quadrature import DEFAULT_TOLERANCE
from thimble_lab.numkernel.branch_tracking import BranchTracker, branch_sqrt
from thimble_lab.utilities.custom_exceptions import (
    OnBranchPointException,
    FormSingularException,
)
ArrayLike = Union[complex, np.ndarray]


def radicand(q: complex, t1: ArrayLike) -> ArrayLike:
    """:return: D(q, t1) = (q - t1)^2 - 4/t1 (vectorized in t1)."""
    return (q - t1) ** 2 - 4.0 / t1


def period_integrand(t1: ArrayLike, sqrt_value: ArrayLike) -> ArrayLike:
    """:return: i / (t1 sqrt(D)), the t1-density whose doubled integral over a branch-point pair is a cycle period."""
    return 1j / (t1 * sqrt_value)


@dataclass(frozen=True)
class SheetValue:
    """
    Data class, the two solutions t2 of the fiber quadratic at (q, t1).
    """
    t2_plus: complex
    t2_minus: complex

    # region Class Properties
    @property
    def difference(self) -> complex:
        """:return: t2_plus - t2_minus, the tracked square root of D."""
        return self.t2_plus - self.t2_minus

    @property
    def total(self) -> complex:
        return self.t2_plus + self.t2_minus

    @property
    def product(self) -> complex:
        return self.t2_plus * self.t2_minus
    # endregion

    # region Class Methods
    def select(self, sheet: int) -> complex:
        """:return: t2 on sheet +1 or -1."""
        if sheet not in (1, -1):
            raise ValueError(f"Sheet must be +1 or -1, got {sheet}.")
        return self.t2_plus if sheet == 1 else self.t2_minus
    # endregion


def _sqrt_discriminant(q: complex, t1: complex, tracker: Optional[BranchTracker]) -> complex:
    value: complex = complex(radicand(q, t1))
    if tracker is None:
        return branch_sqrt(value, 0.0)
    return tracker.advance(point=t1, radicand_value=value)


def t2_sheets(q: complex, t1: complex, tracker: Optional[BranchTracker] = None, tol: float = DEFAULT_TOLERANCE) -> SheetValue:
    """
    :param q: Base point.
    :param t1: Non-zero t1 coordinate.
    :param tracker: Optional branch tracker following one sheet along a path.
        Without tracker the branch sqrt(z) = exp(log(z)/2), arg z in [0, 2 pi) labels the sheets.
    :param tol: Threshold below which the radicand counts as zero.
    :return: Both t2 solutions.
    """
    if t1 == 0:
        raise ValueError("t1 must be non-zero.")
    discriminant: complex = complex(radicand(q, t1))
    if abs(discriminant) < tol * max(1.0, abs(q - t1) ** 2):
        if tracker is not None:
            # Sheet continuation is undefined on the branch point itself
            raise OnBranchPointException(f"Radicand {discriminant:.3e} vanishes at t1 = {t1} (q = {q}).")
        half: complex = 0.5 * (q - t1)
        return SheetValue(t2_plus=half, t2_minus=half)
    root: complex = _sqrt_discriminant(q, t1, tracker)
    return SheetValue(
        t2_plus=0.5 * ((q - t1) + root),
        t2_minus=0.5 * ((q - t1) - root),
    )


def omega_density(q: complex, t1: complex, sheet: int, tracker: Optional[BranchTracker] = None, tol: float = DEFAULT_TOLERANCE) -> complex:
    """
    :return: i t2 / (1 - t1 t2^2), the dq ^ dt1 density of the form on the chosen sheet.
        Since 1 - t1 t2^2 = t1 t2 (q - t1 - 2 t2), this equals -+ i / (t1 sqrt(D)) on sheet +-.
    """
    if t1 == 0:
        raise ValueError("t1 must be non-zero.")
    if sheet not in (1, -1):
        raise ValueError(f"Sheet must be +1 or -1, got {sheet}.")
    root: complex = _sqrt_discriminant(q, t1, tracker)
    t2: complex = 0.5 * ((q - t1) + sheet * root)
    denominator: complex = 1.0 - t1 * t2 * t2
    if abs(denominator) < tol:
        raise FormSingularException(f"1 - t1 t2^2 = {denominator:.3e} at (q, t1) = ({q}, {t1}).")
    return 1j * t2 / denominator
