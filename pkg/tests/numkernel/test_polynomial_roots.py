import unittest
import warnings
import numpy as np
from thimble_lab.numkernel.polynomial_roots import solve_cubic, CubicRoots
from thimble_lab.numkernel.root_finding import find_root_1d
from thimble_lab.utilities.custom_exceptions import (
    DegenerateLeadingCoefficientException,
    NoSignChangeException,
    NonConvergenceException,
)

ZETA: complex = np.exp(2j * np.pi / 3)


class SolveCubicTestCase(unittest.TestCase):

    # region Setup
    def setUp(self) -> None:
        """Set up for every test case"""
        warnings.simplefilter('ignore')
    # endregion

    # region Test Cases
    def test_double_root(self):
        """Tests (t-1)^2 (t-4): double root at 1 is flagged."""
        result: CubicRoots = solve_cubic([1, -6, 9, -4])
        self.assertTrue(result.has_repeated_root)
        self.assertEqual(sorted(result.multiplicities), [1, 2, 2])
        distinct = sorted(result.distinct_roots, key=lambda root: root.real)
        self.assertAlmostEqual(abs(distinct[0] - 1.0), 0.0, delta=1e-9)
        self.assertAlmostEqual(abs(distinct[1] - 4.0), 0.0, delta=1e-12)

    def test_radicals_of_four(self):
        """Tests t^3 - 4: the three cube roots of 4."""
        result = solve_cubic([1, 0, 0, -4])
        expected = [4 ** (1 / 3) * ZETA ** k for k in range(3)]
        for root, target in zip(result.roots, expected):
            self.assertAlmostEqual(abs(root - target), 0.0, delta=1e-12)
        self.assertEqual(result.multiplicities, (1, 1, 1))

    def test_roots_of_unity(self):
        """Tests t^3 - 1, ordered by argument."""
        result = solve_cubic([1, 0, 0, -1])
        for root, target in zip(result.roots, [1, ZETA, ZETA ** 2]):
            self.assertAlmostEqual(abs(root - target), 0.0, delta=1e-12)

    def test_coefficients_reproduced(self):
        """Tests that the roots re-multiply to the input coefficients."""
        coefficients = np.array([2.0, 1 - 3j, 0.5j, -7 + 2j])
        result = solve_cubic(coefficients)
        rebuilt = coefficients[0] * np.poly(result.roots)
        np.testing.assert_allclose(rebuilt, coefficients, rtol=1e-10, atol=1e-10)

    def test_degenerate_leading_coefficient(self):
        """Tests rejection of a vanishing leading coefficient."""
        with self.assertRaises(DegenerateLeadingCoefficientException):
            solve_cubic([0, 1, 2, 3])
    # endregion


class FindRootTestCase(unittest.TestCase):

    # region Test Cases
    def test_square_root_of_two(self):
        """Tests x^2 - 2 on [1, 2]."""
        root = find_root_1d(lambda x: x * x - 2.0, (1.0, 2.0), tol=1e-12)
        self.assertAlmostEqual(root, np.sqrt(2.0), delta=1e-11)

    def test_identity(self):
        """Tests x on [-1, 1]."""
        self.assertAlmostEqual(find_root_1d(lambda x: x, (-1.0, 1.0), tol=1e-12), 0.0, delta=1e-12)

    def test_no_sign_change(self):
        """Tests rejection of a bracket without sign change."""
        with self.assertRaises(NoSignChangeException):
            find_root_1d(lambda x: x * x + 1.0, (-1.0, 1.0))

    def test_non_finite_end_value(self):
        """Tests a NaN or infinite value at a bracket end is rejected before Brent's method."""
        for function in (lambda x: np.nan if x > 0 else -1.0, lambda x: np.inf if x < 0 else 1.0):
            with self.subTest(function=function):
                with self.assertRaises(NonConvergenceException):
                    find_root_1d(function, (-1.0, 1.0))
    # endregion


if __name__ == '__main__':
    unittest.main()
