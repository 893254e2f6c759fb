import unittest
import warnings
import numpy as np
from thimble_lab.fibration.family import ZETA
from thimble_lab.homology.homology_class import HomologyClass, vanishing_cycle
from thimble_lab.periods.base_path import BasePath, thimble_path
from thimble_lab.periods.cycle_transport import CycleTransport, TransportIntegral, vanishing_period
from thimble_lab.periods.period_lattice import compute_period_lattice
from thimble_lab.periods.thimble_integrals import (
    ThimbleSweep,
    reference_periods,
    cycle_period,
    thimble_integral,
    thimble_sweep,
)
from thimble_lab.utilities.custom_exceptions import PathExitsDomainException


class VanishingPeriodTestCase(unittest.TestCase):

    # region Test Cases
    def test_limit_values(self):
        """Tests the vanishing period limits at the three critical values."""
        self.assertAlmostEqual(abs(vanishing_period(0) + 2j * np.pi / np.sqrt(3.0)), 0.0, delta=1e-14)
        for j in range(3):
            self.assertAlmostEqual(abs(vanishing_period(j) - vanishing_period(0) * ZETA ** (-j)), 0.0, delta=1e-14)
    # endregion


class ReferencePeriodTestCase(unittest.TestCase):

    # region Setup
    @classmethod
    def setUpClass(cls) -> None:
        """Set up for all test cases"""
        warnings.simplefilter('ignore')
        cls.reference = reference_periods()
    # endregion

    # region Test Cases
    def test_relation_between_vanishing_cycles(self):
        """Tests [V_0] + [V_1] + [V_2] = 0 on the periods."""
        scale: float = abs(self.reference.vanishing[0])
        self.assertAlmostEqual(abs(sum(self.reference.vanishing)), 0.0, delta=1e-8 * scale)

    def test_rotation_symmetry(self):
        """Tests P_j(0) = zeta^-j P_0(0) and equal moduli."""
        first = self.reference.vanishing[0]
        for j in range(3):
            self.assertAlmostEqual(abs(self.reference.vanishing[j] - first * ZETA ** (-j)), 0.0, delta=1e-8 * abs(first))

    def test_v0_period_is_negative_imaginary(self):
        """Tests P_0(0) lies on the negative imaginary axis."""
        first = self.reference.vanishing[0]
        self.assertLess(first.imag, 0.0)
        self.assertAlmostEqual(first.real, 0.0, delta=1e-9 * abs(first))

    def test_basis_periods(self):
        """Tests the c-period is real negative and the d-period follows from it."""
        self.assertLess(self.reference.c.real, 0.0)
        self.assertAlmostEqual(self.reference.c.imag, 0.0, delta=1e-9 * abs(self.reference.c))
        self.assertAlmostEqual(
            abs(self.reference.period_of(vanishing_cycle(1)) - self.reference.vanishing[1]), 0.0,
            delta=1e-12 * abs(self.reference.c),
        )

    def test_periods_are_lattice_vectors(self):
        """Tests the reference periods are vectors of the period lattice of E_0."""
        lattice = compute_period_lattice(0.0)
        for value in (self.reference.c, self.reference.d):
            self.assertTrue(lattice.contains(value))
    # endregion


class CyclePeriodTestCase(unittest.TestCase):

    # region Setup
    @classmethod
    def setUpClass(cls) -> None:
        """Set up for all test cases"""
        warnings.simplefilter('ignore')
    # endregion

    # region Test Cases
    def test_real_segment_sign(self):
        """Tests the V_0 period over q in (0, 3) is negative imaginary."""
        period = cycle_period(1.5, 0)
        self.assertLess(period.value.imag, 0.0)
        self.assertAlmostEqual(period.value.real, 0.0, delta=1e-8 * abs(period.value))

    def test_linearity(self):
        """Tests the continued periods of V_0, V_1, V_2 sum to zero."""
        q = 0.5 + 0.5j
        values = [cycle_period(q, j) for j in range(3)]
        total = sum(value.value for value in values)
        self.assertAlmostEqual(abs(total), 0.0, delta=3 * sum(value.error for value in values) + 1e-8)

    def test_class_argument(self):
        """Tests that a class argument is linear in the classes."""
        q = -0.4 + 0.9j
        c_period = cycle_period(q, HomologyClass.from_cd(1, 0)).value
        d_period = cycle_period(q, HomologyClass.from_cd(0, 1)).value
        combined = cycle_period(q, HomologyClass.from_cd(2, -3)).value
        self.assertAlmostEqual(abs(combined - (2 * c_period - 3 * d_period)), 0.0, delta=1e-8 * abs(combined))

    def test_reference_point(self):
        """Tests the period at the reference point needs no continuation."""
        expected = reference_periods().vanishing[1]
        self.assertAlmostEqual(abs(cycle_period(0.0, 1).value - expected), 0.0, delta=1e-12 * abs(expected))

    def test_path_must_start_at_reference(self):
        """Tests rejection of a continuation path not starting at 0."""
        with self.assertRaises(ValueError):
            cycle_period(1.0, 0, continuation_path=BasePath.from_nodes([0.5, 1.0]))
    # endregion


class ThimbleIntegralTestCase(unittest.TestCase):

    # region Setup
    @classmethod
    def setUpClass(cls) -> None:
        """Set up for all test cases"""
        warnings.simplefilter('ignore')
        cls.samples = (-10.0, -5.0, -2.0, -1.0, 0.0, 1.0, 2.0, 2.9)
        cls.sweep = ThimbleSweep(0, BasePath.from_nodes([3.0, 2.9, 2.0, 1.0, 0.0, -1.0, -2.0, -5.0, -10.0], anchor=0))
        cls.g_origin = cls.sweep.value_at_point(0.0)
    # endregion

    # region Test Cases
    def test_value_at_critical_point(self):
        """Tests G(3) = 0."""
        self.assertEqual(thimble_integral(0, 3.0).value, 0j)
        self.assertAlmostEqual(abs(self.sweep.value_at(0.0)), 0.0, delta=1e-8 * abs(self.g_origin))

    def test_positive_imaginary_on_real_axis(self):
        """Tests Im G > 0 and negligible real part for real q < 3."""
        for q in self.samples:
            value = self.sweep.value_at_point(q)
            self.assertGreater(value.imag, 0.0)
            self.assertLessEqual(abs(value.real), 1e-6 * abs(value))

    def test_monotone_on_real_axis(self):
        """Tests Im G decreases as q increases."""
        values = [self.sweep.value_at_point(q).imag for q in self.samples]
        self.assertTrue(all(a > b for a, b in zip(values[:-1], values[1:])))

    def test_sweep_matches_single_integral(self):
        """Tests a sweep node against a separate thimble integral."""
        single = thimble_integral(0, -1.0)
        self.assertAlmostEqual(abs(single.value - self.sweep.value_at_point(-1.0)), 0.0, delta=1e-8 * abs(single.value))

    def test_path_independence(self):
        """Tests two homotopic paths in W_0 give the same integral."""
        target = -1.0 + 1.0j
        straight = thimble_integral(0, target)
        bent = thimble_integral(0, target, path=BasePath.from_nodes([3.0, 1.0 + 1.0j, target], anchor=0))
        self.assertAlmostEqual(
            abs(straight.value - bent.value), 0.0,
            delta=2 * (straight.error + bent.error) + 1e-9 * abs(straight.value),
        )

    def test_rotation_equivariance(self):
        """Tests G_1(zeta q) = G_0(q) along the rotated path."""
        rotated = thimble_integral(1, ZETA * -2.0, path=thimble_path(0, -2.0).transformed(ZETA))
        self.assertAlmostEqual(abs(rotated.value - self.sweep.value_at_point(-2.0)), 0.0, delta=1e-8 * abs(rotated.value))

    def test_reality_of_difference(self):
        """Tests Im of the integral over Gamma_1 - Gamma_2 vanishes on the negative axis."""
        for q in (-0.5, -1.0, -2.0, -5.0):
            difference = thimble_integral(1, q).value - thimble_integral(2, q).value
            self.assertAlmostEqual(difference.imag, 0.0, delta=1e-7 * abs(self.g_origin))

    def test_node_integrals(self):
        """Tests the sweep helper returns one integral per path node."""
        integrals = thimble_sweep(0, BasePath.from_nodes([3.0, 1.0, -1.0], anchor=0))
        self.assertEqual(len(integrals), 2)
        self.assertEqual(integrals[0].target, 1.0)
        self.assertAlmostEqual(abs(integrals[1].value - self.sweep.value_at_point(-1.0)), 0.0, delta=1e-8 * abs(integrals[1].value))

    def test_outside_domain(self):
        """Tests PathExitsDomain for a target on the cut."""
        with self.assertRaises(PathExitsDomainException):
            thimble_integral(0, 5.0)
    # endregion


class TransportTestCase(unittest.TestCase):

    # region Setup
    @classmethod
    def setUpClass(cls) -> None:
        """Set up for all test cases"""
        warnings.simplefilter('ignore')
    # endregion

    # region Test Cases
    def test_step_control(self):
        """Tests steps stay below the fraction of the distance to the critical values."""
        transport = CycleTransport(thimble_path(0, 0.0), [vanishing_period(0)])
        for left, right in zip(transport.nodes[:-1], transport.nodes[1:]):
            self.assertLessEqual(abs(right.position - left.position), 0.05 * abs(left.position - 3.0) + 1e-12)
        self.assertAlmostEqual(transport.nodes[-1].tau, 1.0)

    def test_integral_against_simpson(self):
        """Tests the transport integral over a short segment against Simpson's rule on transported values."""
        reference = reference_periods()
        transport = CycleTransport(BasePath.from_nodes([0.0, 0.2j]), [reference.c, reference.d])
        integral = TransportIntegral(transport)
        simpson = (transport.initial_values + 4.0 * transport.values_at(0.5) + transport.final_values) * 0.2j / 6.0
        self.assertTrue(np.allclose(integral.final_value, simpson, rtol=1e-6))
        self.assertTrue(np.allclose(integral.value_at(0.0), 0.0))
    # endregion


if __name__ == '__main__':
    unittest.main()
