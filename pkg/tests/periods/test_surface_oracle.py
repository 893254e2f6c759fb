import unittest
import warnings
from thimble_lab.periods.base_path import thimble_path
from thimble_lab.periods.cycle_transport import CycleTransport, vanishing_period
from thimble_lab.periods.thimble_integrals import thimble_integral
from thimble_lab.periods.surface_oracle import (
    oracle_vanishing_period,
    surface_integral_oracle,
)


class OracleVanishingPeriodTestCase(unittest.TestCase):

    # region Test Cases
    def test_agrees_with_transport(self):
        """Tests the deformed-contour V_0 period against lattice transport on both sides of the arc threshold."""
        for q in (1.5, 0.25, -2.0):
            with self.subTest(q=q):
                transported = complex(CycleTransport(thimble_path(0, q), [vanishing_period(0)], tol=1e-10).final_values[0])
                self.assertAlmostEqual(abs(oracle_vanishing_period(q) - transported) / abs(transported), 0.0, delta=1e-9)

    def test_at_critical_value(self):
        """Tests the analytic value is returned at q = 3."""
        self.assertEqual(oracle_vanishing_period(3.0), vanishing_period(0))
    # endregion


class SurfaceIntegralOracleTestCase(unittest.TestCase):

    # region Setup
    @classmethod
    def setUpClass(cls) -> None:
        """Set up for all test cases"""
        warnings.simplefilter('ignore')
        cls.oracle = surface_integral_oracle(0.0)
        cls.transported = thimble_integral(0, 0.0)
    # endregion

    # region Test Cases
    def test_agreement_at_origin(self):
        """Tests the Romberg surface integral reproduces the transported G_0(0)."""
        difference = abs(self.oracle.value - self.transported.value) / abs(self.transported.value)
        self.assertLessEqual(difference, 1e-6)
        self.assertGreaterEqual(self.oracle.level, 4)

    def test_invalid_point(self):
        """Tests the oracle rejects q >= 3."""
        with self.assertRaises(ValueError):
            surface_integral_oracle(3.0)
    # endregion


if __name__ == '__main__':
    unittest.main()
