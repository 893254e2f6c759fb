# -------------------------------------------
# Module containing the branch points of the t1-projection of the fiber E_q.
# E_q is a double cover of the t1-line, ramified over t1 = 0 and the roots of t1 (q - t1)^2 = 4.
# -------------------------------------------
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Tuple
import numpy as np
from thimble_lab.numkernel.quadrature import DEFAULT_TOLERANCE
from thimble_lab.numkernel.polynomial_roots import solve_cubic, CubicRoots


@dataclass(frozen=True)
class BranchData:
    """
    Data class, containing the roots of the branch cubic at q.
    For real q <= 3 the conjugate pair (x, conj(x)) with Im x >= 0 and the real root y are identified.
    """
    q: complex
    roots: Tuple[complex, complex, complex]
    multiplicities: Tuple[int, int, int] = field(default=(1, 1, 1))
    conjugate_pair: Optional[Tuple[complex, complex]] = field(default=None)
    real_root: Optional[complex] = field(default=None)

    # region Class Properties
    @property
    def ramification_points(self) -> Tuple[complex, ...]:
        """:return: All four branch points of the double cover: 0 and the three cubic roots."""
        return (0j,) + tuple(self.roots)

    @property
    def has_double_root(self) -> bool:
        return max(self.multiplicities) > 1
    # endregion

    # region Class Methods
    def residuals(self) -> np.ndarray:
        """:return: |r (q - r)^2 - 4| for each root."""
        roots = np.asarray(self.roots)
        return np.abs(roots * (self.q - roots) ** 2 - 4.0)
    # endregion


def branch_cubic_coefficients(q: complex) -> Tuple[complex, complex, complex, complex]:
    """:return: Coefficients of t^3 - 2q t^2 + q^2 t - 4 (leading first)."""
    return 1.0 + 0j, -2.0 * q, q * q, -4.0 + 0j


def branch_points(q: complex, tol: float = DEFAULT_TOLERANCE) -> BranchData:
    """
    :param q: Base point.
    :param tol: Tolerance forwarded to the cubic solver (sqrt(tol) double-root threshold).
    :return: Branch data at q.
    """
    q = complex(q)
    cubic: CubicRoots = solve_cubic(branch_cubic_coefficients(q), tol=tol)
    roots: Tuple[complex, ...] = cubic.roots
    conjugate_pair: Optional[Tuple[complex, complex]] = None
    real_root: Optional[complex] = None
    if abs(q.imag) <= tol * max(1.0, abs(q)) and q.real <= 3.0 + tol:
        # Pair nearest-conjugates; the remaining root is the real one
        i, j = min(combinations(range(3), 2), key=lambda pair: abs(roots[pair[0]] - roots[pair[1]].conjugate()))
        k: int = ({0, 1, 2} - {i, j}).pop()
        upper, lower = (roots[i], roots[j]) if roots[i].imag >= roots[j].imag else (roots[j], roots[i])
        conjugate_pair = (upper, lower)
        real_root = complex(roots[k].real, 0.0)
    return BranchData(
        q=q,
        roots=roots,
        multiplicities=cubic.multiplicities,
        conjugate_pair=conjugate_pair,
        real_root=real_root,
    )
