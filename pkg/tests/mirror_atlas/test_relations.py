import unittest
import sympy as sym
from thimble_lab.mirror_atlas.charts import TorusChartPoint, immersed_coordinates, sample_torus_points
from thimble_lab.mirror_atlas.relations import (
    cubic_relation,
    cubic_relation_at,
    cubic_constancy,
    symbolic_cubic_constant,
    power_sum_form,
)


class CubicRelationTestCase(unittest.TestCase):

    # region Setup
    @classmethod
    def setUpClass(cls) -> None:
        """Set up for all test cases"""
        cls.samples = sample_torus_points(100, seed=7)
    # endregion

    # region Test Cases
    def test_unit_point(self):
        """Tests P(2, 2, 2) = -8."""
        self.assertEqual(cubic_relation(2, 2, 2), -8)
        self.assertEqual(cubic_relation_at(TorusChartPoint(z1=1, z2=1)), -8)

    def test_constant(self):
        """Tests P is constant over seeded samples."""
        result = cubic_constancy(self.samples)
        self.assertLessEqual(result.spread, 1e-10)
        self.assertAlmostEqual(abs(result.constant + 8.0), 0.0, places=9)
        self.assertEqual(result.sample_count, 100)

    def test_symbolic_constant(self):
        """Tests the symbolic substitution gives -8."""
        self.assertEqual(symbolic_cubic_constant(), sym.Integer(-8))

    def test_power_sum_form(self):
        """Tests the elementary symmetric form agrees with the cubic relation."""
        for torus in self.samples[:20]:
            u = immersed_coordinates(torus)
            self.assertAlmostEqual(abs(power_sum_form(u) - cubic_relation(*u)), 0.0, places=9)

    def test_cycling_invariance(self):
        """Tests cycling the torus coordinates fixes P."""
        for torus in self.samples[:20]:
            self.assertAlmostEqual(abs(cubic_relation_at(torus.cycled()) - cubic_relation_at(torus)), 0.0, places=9)

    def test_empty_sample(self):
        """Tests constancy needs samples."""
        with self.assertRaises(ValueError):
            cubic_constancy([])
    # endregion
