# -------------------------------------------
# Module verifying explicit deformations of the vanishing cycle for real q < 3.
# For 0 < q < 3 the cycle is the circular arc |t1| = |x| from x to conj(x) through the positive axis.
# For q <= 0 it is the union of an arc at radius |x| down to the imaginary axis, the segment
# i|x| -> i eps, the quarter circle of radius eps to the positive axis, and the mirror image.
# Along these contours the radicand never meets the positive real axis, so the principal-cut
# square root (argument in [0, 2 pi)) is continuous and the period is an ordinary contour integral.
# -------------------------------------------
from dataclasses import dataclass, field
from typing import List, Optional, Tuple
import numpy as np
from thimble_lab.numkernel.contour import Contour, LineSegment, ArcSegment, IContourSegment
from thimble_lab.numkernel.branch_tracking import branch_sqrt
from thimble_lab.numkernel.quadrature import QuadratureResult, integrate_contour
from thimble_lab.fibration.branch_data import BranchData, branch_points
from thimble_lab.fibration.sheets import radicand
from thimble_lab.fibration.family import CRITICAL_VALUE_MODULUS
from thimble_lab.periods.base_path import thimble_path
from thimble_lab.periods.cycle_transport import CycleTransport, vanishing_period
from thimble_lab.periods.period_lattice import segment_period
from thimble_lab.utilities.custom_exceptions import (
    DeformationMismatchException,
    SignConditionViolatedException,
)

APPENDIX_QUADRATURE_TOLERANCE: float = 1e-11
APPENDIX_AGREEMENT_TOLERANCE: float = 1e-8
SIGN_SAMPLES_PER_SEGMENT: int = 400
SIGN_SLACK: float = 1e-12


@dataclass(frozen=True)
class DeformedPiece:
    """
    Data class, one piece of a deformed contour with its sign requirement.
    'arc' pieces require Im sqrt >= 0, 'segment' pieces a positive real part of the root.
    """
    label: str
    segment: IContourSegment
    condition: str


@dataclass(frozen=True)
class AppendixReport:
    """
    Data class, outcome of the deformed-contour checks at one real q.
    """
    q: float
    case: str
    deformed_value: complex
    transported_value: complex
    relative_difference: float
    sample_count: int
    min_arc_imaginary_part: float
    min_segment_real_part: Optional[float] = field(default=None)
    straight_value: Optional[complex] = field(default=None)
    symmetry_residual: Optional[float] = field(default=None)


def deformation_case(q: float) -> str:
    """:return: 'arc' for 0 < q < 3, 'segments' for q <= 0."""
    if q >= CRITICAL_VALUE_MODULUS:
        raise ValueError(f"Deformed contours are defined for real q < 3, got {q}.")
    return 'arc' if q > 0 else 'segments'


def deformed_pieces(q: float, case: Optional[str] = None) -> List[DeformedPiece]:
    """
    :param q: Real base point below 3.
    :param case: 'arc' or 'segments', defaults to deformation_case(q).
    :return: Pieces of the deformed vanishing cycle from x to conj(x), upper half first.
    """
    case = case or deformation_case(q)
    data: BranchData = branch_points(complex(q, 0.0))
    upper, lower = data.conjugate_pair
    if case == 'arc':
        return [DeformedPiece('arc', ArcSegment.from_endpoints(0j, upper, lower, counterclockwise=False), 'arc')]
    radius: float = abs(upper)
    inner_radius: float = 0.5 * data.real_root.real
    upper_half: Contour = Contour(segments=(
        ArcSegment.from_endpoints(0j, upper, 1j * radius, counterclockwise=False),
        LineSegment(start_point=1j * radius, end_point=1j * inner_radius),
        ArcSegment(center=0j, radius=inner_radius, start_angle=0.5 * np.pi, sweep=-0.5 * np.pi),
    ))
    lower_half: Contour = upper_half.conjugated().reversed()
    labels: Tuple[str, ...] = ('I', 'II', 'III')
    conditions: Tuple[str, ...] = ('arc', 'segment', 'arc')
    pieces: List[DeformedPiece] = [
        DeformedPiece(label, segment, condition)
        for label, segment, condition in zip(labels, upper_half.segments, conditions)
    ]
    pieces += [
        DeformedPiece(f"{label}'", segment, condition)
        for label, segment, condition in zip(reversed(labels), lower_half.segments, reversed(conditions))
    ]
    return pieces


def deformed_contour(q: float, case: Optional[str] = None) -> Contour:
    return Contour(segments=tuple(piece.segment for piece in deformed_pieces(q, case)))


def _sqrt_along(q: float, segment: IContourSegment) -> np.ndarray:
    samples: np.ndarray = np.linspace(0.0, 1.0, SIGN_SAMPLES_PER_SEGMENT + 2)[1:-1]
    return branch_sqrt(radicand(q, np.asarray(segment.point(samples))), 0.0)


def check_sign_conditions(q: float, pieces: List[DeformedPiece]) -> Tuple[int, float, Optional[float]]:
    """
    :return: (sample count, minimal Im sqrt on arcs, minimal Re sqrt on segment pieces of the upper half).
    :raises SignConditionViolatedException: on a sign flip between consecutive samples or a violated sign condition.
    """
    count: int = 0
    min_imaginary: float = np.inf
    min_real: Optional[float] = None
    previous: Optional[complex] = None
    for piece in pieces:
        values: np.ndarray = _sqrt_along(q, piece.segment)
        count += len(values)
        for value in values:
            if previous is not None and abs(value - previous) >= abs(value + previous):
                raise SignConditionViolatedException(f"Square root flips sign on piece {piece.label} at q = {q}.")
            previous = value
        if piece.condition == 'arc':
            min_imaginary = min(min_imaginary, float(np.min(values.imag)))
            if min_imaginary < -SIGN_SLACK:
                raise SignConditionViolatedException(f"Im sqrt < 0 on arc piece {piece.label} at q = {q}.")
        elif not piece.label.endswith("'"):
            piece_min: float = float(np.min(values.real))
            min_real = piece_min if min_real is None else min(min_real, piece_min)
            if piece_min <= 0:
                raise SignConditionViolatedException(f"Re sqrt <= 0 on segment piece {piece.label} at q = {q}.")
    return count, min_imaginary, min_real


def deformed_period(q: float, contour: Contour, tol: float = APPENDIX_QUADRATURE_TOLERANCE) -> QuadratureResult:
    """:return: 2 * integral of i / (t1 sqrt(radicand)) along the contour with the principal-cut root."""
    return integrate_contour(
        lambda t: 2j / (t * branch_sqrt(radicand(q, t), 0.0)),
        contour,
        tol=tol,
        endpoint_substitution=True,
    )


def verify_appendix_contours(q: float, tol: float = APPENDIX_QUADRATURE_TOLERANCE, agreement: float = APPENDIX_AGREEMENT_TOLERANCE) -> AppendixReport:
    """
    :param q: Real base point, q < 3.
    :param tol: Quadrature tolerance.
    :param agreement: Relative agreement required between the deformed and the transported period.
    :return: Report of the sign checks and integral comparisons.
    :raises SignConditionViolatedException: when a sign condition fails.
    :raises DeformationMismatchException: when the deformed integral disagrees with the transported period.
    """
    q = float(q)
    case: str = deformation_case(q)
    pieces: List[DeformedPiece] = deformed_pieces(q, case)
    count, min_imaginary, min_real = check_sign_conditions(q, pieces)
    contour: Contour = Contour(segments=tuple(piece.segment for piece in pieces))
    deformed: complex = deformed_period(q, contour, tol=tol).value

    transported: complex = complex(CycleTransport(thimble_path(0, q), [vanishing_period(0)], tol=min(tol, 1e-9)).final_values[0])
    difference: float = abs(deformed - transported) / abs(transported)
    if difference > agreement:
        raise DeformationMismatchException(
            f"Deformed period {deformed:.12g} differs from the transported period {transported:.12g} at q = {q} "
            f"(relative {difference:.2e})."
        )

    straight: Optional[complex] = None
    symmetry: Optional[float] = None
    data: BranchData = branch_points(complex(q, 0.0))
    upper, lower = data.conjugate_pair
    if case == 'arc':
        straight = segment_period(upper, lower, (0j, data.real_root), tol=tol).value
        mismatch: float = min(abs(deformed - straight), abs(deformed + straight)) / abs(deformed)
        if mismatch > agreement:
            raise DeformationMismatchException(
                f"Arc period {deformed:.12g} differs from the straight pair period {straight:.12g} at q = {q}."
            )
    else:
        half: int = len(pieces) // 2
        upper_value: complex = deformed_period(q, Contour(segments=tuple(piece.segment for piece in pieces[:half])), tol=tol).value
        lower_value: complex = deformed_period(q, Contour(segments=tuple(piece.segment for piece in pieces[half:])), tol=tol).value
        symmetry = abs(lower_value + upper_value.conjugate()) / abs(deformed)
        if symmetry > agreement:
            raise DeformationMismatchException(f"Lower half is not the mirror of the upper half at q = {q} ({symmetry:.2e}).")
    return AppendixReport(
        q=q,
        case=case,
        deformed_value=deformed,
        transported_value=transported,
        relative_difference=difference,
        sample_count=count,
        min_arc_imaginary_part=min_imaginary,
        min_segment_real_part=min_real,
        straight_value=straight,
        symmetry_residual=symmetry,
    )
