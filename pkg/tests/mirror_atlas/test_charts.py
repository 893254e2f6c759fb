import unittest
import numpy as np
from thimble_lab.fibration.family import ZETA
from thimble_lab.mirror_atlas.charts import (
    TorusChartPoint,
    ImmersedChartPoint,
    torus_to_immersed,
    immersed_to_torus,
    immersed_coordinates,
    sample_torus_points,
)
from thimble_lab.utilities.custom_exceptions import OnExcludedLocusException


class TorusChartTestCase(unittest.TestCase):

    # region Test Cases
    def test_product_is_one(self):
        """Tests z1 z2 z3 = 1."""
        point = TorusChartPoint(z1=0.7 + 0.2j, z2=-1.3j)
        self.assertAlmostEqual(abs(point.z1 * point.z2 * point.z3 - 1.0), 0.0, places=14)

    def test_zero_coordinate(self):
        """Tests zero coordinates are rejected."""
        with self.assertRaises(ValueError):
            TorusChartPoint(z1=0, z2=1)

    def test_index_wraps(self):
        """Tests z_0 = z_3 and z_4 = z_1."""
        point = TorusChartPoint(z1=2.0, z2=0.25j)
        self.assertEqual(point.z(0), point.z3)
        self.assertEqual(point.z(4), point.z1)
        self.assertEqual(point.w(1), point.z2 / point.z1)
    # endregion


class ChartTransitionTestCase(unittest.TestCase):

    # region Setup
    @classmethod
    def setUpClass(cls) -> None:
        """Set up for all test cases"""
        cls.samples = sample_torus_points(1000, seed=7)
    # endregion

    # region Test Cases
    def test_unit_point(self):
        """Tests (z1, z2) = (1, 1) maps to (u, v) = (2, 1) in every chart."""
        for i in (1, 2, 3):
            with self.subTest(i=i):
                point = torus_to_immersed(TorusChartPoint(z1=1, z2=1), i)
                self.assertEqual((point.u, point.v), (2, 1))

    def test_gluing_relation(self):
        """Tests u_i v_i = 1 + w_{i+1} at (1, zeta)."""
        torus = TorusChartPoint(z1=1, z2=ZETA)
        self.assertAlmostEqual(abs(torus.z3 - ZETA ** 2), 0.0, places=14)
        for i in (1, 2, 3):
            with self.subTest(i=i):
                point = torus_to_immersed(torus, i)
                self.assertAlmostEqual(abs(point.u * point.v - 1.0 - torus.w(i + 1)), 0.0, places=14)

    def test_round_trip(self):
        """Tests the overlap inverse recovers the torus point."""
        for torus in self.samples[:100]:
            for i in (1, 2, 3):
                recovered = immersed_to_torus(torus_to_immersed(torus, i))
                self.assertLessEqual(abs(recovered.z1 - torus.z1), 1e-12 * abs(torus.z1))
                self.assertLessEqual(abs(recovered.z2 - torus.z2), 1e-12 * abs(torus.z2))

    def test_round_trip_from_immersed(self):
        """Tests torus_to_immersed returns (u, v) from the recovered torus point."""
        point = ImmersedChartPoint(i=2, u=0.3 - 1.1j, v=0.8 + 0.4j)
        image = torus_to_immersed(immersed_to_torus(point), 2)
        self.assertAlmostEqual(abs(image.u - point.u), 0.0, places=12)
        self.assertAlmostEqual(abs(image.v - point.v), 0.0, places=12)

    def test_section_not_in_torus_chart(self):
        """Tests points with v = 0 have no torus chart image."""
        with self.assertRaises(ValueError):
            immersed_to_torus(ImmersedChartPoint(i=1, u=3, v=0))

    def test_excluded_locus(self):
        """Tests the chart excludes uv = 1."""
        with self.assertRaises(OnExcludedLocusException):
            ImmersedChartPoint(i=1, u=2, v=0.5)

    def test_invalid_chart_index(self):
        """Tests chart indices outside 1, 2, 3 are rejected."""
        with self.assertRaises(ValueError):
            torus_to_immersed(TorusChartPoint(z1=1, z2=1), 0)

    def test_cycling(self):
        """Tests cycling (z1, z2, z3) cycles (u1, u2, u3)."""
        for torus in self.samples[:50]:
            u1, u2, u3 = immersed_coordinates(torus)
            np.testing.assert_allclose(immersed_coordinates(torus.cycled()), (u2, u3, u1), rtol=1e-12)

    def test_sampling_deterministic(self):
        """Tests seeded sampling is reproducible with moduli in [1/2, 2]."""
        again = sample_torus_points(1000, seed=7)
        self.assertEqual(again, self.samples)
        moduli = np.abs([[point.z1, point.z2] for point in self.samples])
        self.assertGreaterEqual(moduli.min(), 0.5)
        self.assertLessEqual(moduli.max(), 2.0)
        self.assertNotEqual(sample_torus_points(5, seed=8), self.samples[:5])
    # endregion
