import unittest
import warnings
import numpy as np
from thimble_lab.fibration.family import (
    ZETA,
    Family,
    critical_values,
    critical_points,
    potential,
    z3_rotate,
    distance_to_critical_values,
)
from thimble_lab.fibration.branch_data import BranchData, branch_points


class CriticalValueTestCase(unittest.TestCase):

    # region Test Cases
    def test_closed_form(self):
        """Tests critical values are 3, 3 zeta, 3 zeta^2."""
        values = critical_values()
        self.assertEqual(values[0], 3.0 + 0j)
        self.assertAlmostEqual(abs(values[1] - 3 * np.exp(2j * np.pi / 3)), 0.0, delta=1e-15)
        self.assertAlmostEqual(abs(values[2] - 3 * np.exp(4j * np.pi / 3)), 0.0, delta=1e-15)

    def test_sum_vanishes(self):
        """Tests roots-of-unity sum of the critical values."""
        self.assertAlmostEqual(abs(sum(critical_values())), 0.0, delta=1e-14)

    def test_values_at_critical_points(self):
        """Tests W at each critical point equals the matching critical value."""
        for (t1, t2), value in zip(critical_points(), critical_values()):
            self.assertAlmostEqual(abs(potential(t1, t2) - value), 0.0, delta=1e-14)
        self.assertEqual(potential(1.0, 1.0), 3.0)

    def test_family_record(self):
        """Tests family record forwards to module functions."""
        family = Family()
        self.assertEqual(family.zeta, ZETA)
        self.assertEqual(family.form_prefactor, 1j)
        self.assertEqual(family.critical_values(), critical_values())

    def test_rotation(self):
        """Tests z3 rotation maps critical values cyclically."""
        values = critical_values()
        for k in range(3):
            self.assertAlmostEqual(abs(z3_rotate(values[k], 1) - values[(k + 1) % 3]), 0.0, delta=1e-14)
        self.assertAlmostEqual(distance_to_critical_values(0j), 3.0, delta=1e-15)
    # endregion


class BranchPointTestCase(unittest.TestCase):

    # region Setup
    def setUp(self) -> None:
        """Set up for every test case"""
        warnings.simplefilter('ignore')
    # endregion

    # region Test Cases
    def test_double_root_at_three(self):
        """Tests q=3: roots 1 (double) and 4."""
        data: BranchData = branch_points(3.0)
        self.assertTrue(data.has_double_root)
        upper, lower = data.conjugate_pair
        self.assertAlmostEqual(abs(upper - 1.0), 0.0, delta=1e-6)
        self.assertAlmostEqual(abs(lower - 1.0), 0.0, delta=1e-6)
        self.assertAlmostEqual(abs(data.real_root - 4.0), 0.0, delta=1e-10)

    def test_cube_roots_at_zero(self):
        """Tests q=0: roots are the cube roots of 4."""
        data = branch_points(0.0)
        for k, root in enumerate(data.roots):
            self.assertAlmostEqual(abs(root - 4 ** (1 / 3) * ZETA ** k), 0.0, delta=1e-12)
        self.assertAlmostEqual(data.real_root.real, 4 ** (1 / 3), delta=1e-12)
        self.assertEqual(len(data.ramification_points), 4)

    def test_rotated_double_root(self):
        """Tests q=3 zeta: roots zeta (double) and 4 zeta."""
        data = branch_points(3.0 * ZETA)
        self.assertTrue(data.has_double_root)
        distinct = sorted({complex(np.round(root, 5)) for root in data.roots}, key=abs)
        self.assertEqual(len(distinct), 2)
        self.assertAlmostEqual(abs(distinct[0] - ZETA), 0.0, delta=1e-4)
        self.assertAlmostEqual(abs(distinct[1] - 4 * ZETA), 0.0, delta=1e-4)
        self.assertIsNone(data.conjugate_pair)

    def test_residuals(self):
        """Tests every root solves the branch cubic."""
        for q in (0.3 + 0.7j, -2.0, 1.5, 5.0 - 1j):
            self.assertTrue(np.all(branch_points(q).residuals() < 1e-9))

    def test_real_base_pairing(self):
        """Tests real q < 3: one real root and a conjugate pair with Im x > 0."""
        for q in (-5.0, -2.0, 0.5, 1.5, 2.9):
            data = branch_points(q)
            upper, lower = data.conjugate_pair
            self.assertGreater(upper.imag, 0.0)
            self.assertAlmostEqual(abs(upper - lower.conjugate()), 0.0, delta=1e-10)
            self.assertEqual(data.real_root.imag, 0.0)

    def test_z3_equivariance(self):
        """Tests branch points at zeta q are zeta times those at q."""
        q = 0.8 - 0.4j
        rotated = sorted(np.asarray(branch_points(ZETA * q).roots), key=lambda root: (root.real, root.imag))
        expected = sorted(ZETA * np.asarray(branch_points(q).roots), key=lambda root: (root.real, root.imag))
        for root, target in zip(rotated, expected):
            self.assertAlmostEqual(abs(root - target), 0.0, delta=1e-10)

    def test_pair_collision(self):
        """Tests the conjugate pair collides at 1 as q approaches 3 radially."""
        separations = []
        for k in range(2, 7):
            upper, lower = branch_points(3.0 * (1 - 10.0 ** -k), tol=1e-14).conjugate_pair
            separations.append(abs(upper - lower))
        self.assertTrue(all(a > b for a, b in zip(separations[:-1], separations[1:])))
        self.assertLess(separations[-1], 1e-2)
    # endregion
