# -------------------------------------------
# Module containing square-root branch conventions and continuous tracking of
# square roots along contours.
# -------------------------------------------
from dataclasses import dataclass, field
from typing import Callable, Optional, Union
import numpy as np
from thimble_lab.numkernel.contour import Contour
from thimble_lab.utilities.custom_exceptions import RadicandVanishesOnPathException

TWO_PI: float = 2.0 * np.pi
SAMPLES_PER_SEGMENT: int = 64
MAX_REFINEMENT_PASSES: int = 40
MAX_SAMPLE_COUNT: int = 200_000
MAX_RADICAND_PHASE_STEP: float = np.pi / 4
Radicand = Callable[[Union[complex, np.ndarray]], Union[complex, np.ndarray]]


def branch_sqrt(z: Union[complex, np.ndarray], cut_angle: float = 0.0) -> Union[complex, np.ndarray]:
    """
    Square root exp(log(z) / 2) with the argument of z taken in [cut_angle, cut_angle + 2 pi).
    cut_angle = 0 puts the cut on the positive real axis, giving Im(sqrt) >= 0.
    """
    values: np.ndarray = np.asarray(z, dtype=complex)
    angle: np.ndarray = np.mod(np.angle(values) - cut_angle, TWO_PI) + cut_angle
    result: np.ndarray = np.sqrt(np.abs(values)) * np.exp(0.5j * angle)
    if result.ndim == 0:
        return complex(result)
    return result


@dataclass
class BranchTracker:
    """
    Data class, single-owner state for following one square-root sheet pointwise.
    The tracked value is current_sheet * branch_sqrt(radicand, base_cut_angle);
    the sheet flips whenever the radicand crosses the cut ray between two updates.
    """
    current_sheet: int = field(default=1)
    last_point: Optional[complex] = field(default=None)
    base_cut_angle: float = field(default=0.0)
    last_value: Optional[complex] = field(default=None)

    # region Class Methods
    def __post_init__(self):
        if self.current_sheet not in (1, -1):
            raise ValueError(f"Sheet must be +1 or -1, got {self.current_sheet}.")
        self.base_cut_angle = float(self.base_cut_angle) % TWO_PI

    def advance(self, point: complex, radicand_value: complex) -> complex:
        """
        Moves the tracker to a new point.
        :param point: New position along the tracked path.
        :param radicand_value: Radicand at the new position.
        :return: Continuous square root at the new position.
        """
        candidate: complex = branch_sqrt(radicand_value, self.base_cut_angle)
        if self.last_value is not None:
            if abs(self.current_sheet * candidate - self.last_value) > abs(-self.current_sheet * candidate - self.last_value):
                self.current_sheet = -self.current_sheet
        self.last_point = complex(point)
        self.last_value = self.current_sheet * candidate
        return self.last_value
    # endregion


class TrackedSqrt:
    """
    Behaviour class, continuous square root of a radicand along a contour.
    Evaluation at a point picks the sign of the principal root closest to the nearest sample.
    """

    # region Class Properties
    @property
    def contour(self) -> Contour:
        return self._contour

    @property
    def positions(self) -> np.ndarray:
        return self._positions

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def initial_value(self) -> complex:
        return complex(self._values[0])

    @property
    def terminal_value(self) -> complex:
        """:return: Continued value at the last sample (the contour end point, if finite and non-zero there)."""
        return complex(self._values[-1])
    # endregion

    # region Class Constructor
    def __init__(self, radicand: Radicand, contour: Contour, parameters: np.ndarray, positions: np.ndarray, values: np.ndarray):
        self._radicand: Radicand = radicand
        self._contour: Contour = contour
        self._parameters: np.ndarray = parameters
        self._positions: np.ndarray = positions
        self._values: np.ndarray = values
    # endregion

    # region Class Methods
    def __call__(self, z: complex) -> complex:
        nearest: complex = complex(self._values[int(np.argmin(np.abs(self._positions - z)))])
        return self._continue_from(nearest, complex(self._radicand(z)))

    def at_parameter(self, tau: float) -> complex:
        """:return: Tracked value at global contour parameter tau (unambiguous on closed contours)."""
        index: int = int(np.clip(np.searchsorted(self._parameters, tau), 1, len(self._parameters) - 1))
        if abs(self._parameters[index - 1] - tau) < abs(self._parameters[index] - tau):
            index -= 1
        z: complex = complex(self._contour.point_at_global(np.asarray([tau]))[0])
        return self._continue_from(complex(self._values[index]), complex(self._radicand(z)))

    @staticmethod
    def _continue_from(reference: complex, radicand_value: complex) -> complex:
        candidate: complex = complex(np.sqrt(radicand_value))
        if abs(candidate - reference) <= abs(candidate + reference):
            return candidate
        return -candidate
    # endregion


def _refine_parameters(radicand: Radicand, contour: Contour, parameters: np.ndarray) -> np.ndarray:
    """:return: Parameters refined until the radicand phase changes by at most pi/4 between neighbours."""
    for _ in range(MAX_REFINEMENT_PASSES):
        radicand_values: np.ndarray = np.asarray(radicand(contour.point_at_global(parameters)), dtype=complex)
        ratio: np.ndarray = radicand_values[1:] / radicand_values[:-1]
        coarse: np.ndarray = np.abs(np.angle(ratio)) > MAX_RADICAND_PHASE_STEP
        if not np.any(coarse) or len(parameters) > MAX_SAMPLE_COUNT:
            return parameters
        midpoints: np.ndarray = 0.5 * (parameters[:-1][coarse] + parameters[1:][coarse])
        parameters = np.sort(np.concatenate([parameters, midpoints]))
    return parameters


def track_sqrt(radicand: Radicand, path: Contour, initial_value: complex) -> TrackedSqrt:
    """
    Continues a square root of the radicand along the path.
    :param radicand: Vectorized callable of z.
    :param path: Contour along which to continue; the radicand may vanish (or blow up) only at the end point.
    :param initial_value: Square root of the radicand at the path start.
    :return: Tracked square root.
    """
    start_radicand: complex = complex(radicand(path.start))
    if abs(initial_value ** 2 - start_radicand) > 1e-8 * max(1.0, abs(start_radicand)):
        raise ValueError(f"Initial value {initial_value} does not square to radicand {start_radicand} at the path start.")

    segment_count: int = path.segment_count
    parameters: np.ndarray = np.linspace(0.0, float(segment_count), SAMPLES_PER_SEGMENT * segment_count + 1)
    end_radicand: complex = complex(radicand(path.end))
    if not np.isfinite(end_radicand) or end_radicand == 0:
        # Keep the end point itself out of the samples
        parameters[-1] = segment_count * (1.0 - 1e-12)
    parameters = _refine_parameters(radicand, path, parameters)

    positions: np.ndarray = path.point_at_global(parameters)
    radicand_values: np.ndarray = np.asarray(radicand(positions), dtype=complex)
    magnitude_scale: float = float(np.max(np.abs(radicand_values[np.isfinite(radicand_values)])))
    interior: np.ndarray = np.abs(radicand_values[1:-1])
    if np.any(~np.isfinite(radicand_values[1:-1])) or np.any(interior <= 1e-14 * magnitude_scale):
        raise RadicandVanishesOnPathException("Radicand vanishes (or is singular) in the interior of the tracking path.")
    phase_steps: np.ndarray = np.abs(np.angle(radicand_values[1:] / radicand_values[:-1]))
    if np.any(phase_steps > MAX_RADICAND_PHASE_STEP):
        raise RadicandVanishesOnPathException(
            f"Radicand phase jumps by {np.max(phase_steps):.3f} rad between samples; the path passes through (or too close to) a zero."
        )

    roots: np.ndarray = np.sqrt(radicand_values)
    values: np.ndarray = np.empty_like(roots)
    values[0] = initial_value
    for index in range(1, len(roots)):
        candidate: complex = roots[index]
        values[index] = candidate if abs(candidate - values[index - 1]) <= abs(candidate + values[index - 1]) else -candidate
    return TrackedSqrt(radicand=radicand, contour=path, parameters=parameters, positions=positions, values=values)
