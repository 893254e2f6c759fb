import unittest
import warnings
import numpy as np
from thimble_lab.numkernel.contour import ArcSegment
from thimble_lab.fibration.family import zeta_power
from thimble_lab.homology.monodromy import LoopLabel
from thimble_lab.periods.base_path import BasePath, lasso
from thimble_lab.affine_syz.affine_chart import (
    chamber_of,
    radial_path,
    affine_coordinates,
    affine_monodromy,
    conjugation_image,
    chart_grid,
    export_chart,
    chamber_ids,
)
from thimble_lab.utilities.custom_exceptions import NearCriticalValueException


class RadialPathTestCase(unittest.TestCase):

    # region Test Cases
    def test_straight_path(self):
        """Tests points away from the cut rays use the straight segment from 0."""
        path = radial_path(1 + 1j)
        self.assertEqual(path.segment_count, 1)
        self.assertEqual(chamber_of(1 + 1j), 0)

    def test_clockwise_detour(self):
        """Tests points on or below the ray through 3 pass the critical value on its lower side."""
        for q in (4.0 + 0.0j, 4.0 - 0.05j):
            with self.subTest(q=q):
                path = radial_path(q)
                arc = path.segments[1]
                self.assertIsInstance(arc, ArcSegment)
                self.assertGreater(arc.sweep, 0.0)
                self.assertAlmostEqual(abs(arc.point(0.5) - (3.0 - 0.1j)), 0.0, places=12)
                self.assertAlmostEqual(abs(path.end - q), 0.0, places=12)
                self.assertEqual(chamber_of(q), 1)

    def test_counterclockwise_detour(self):
        """Tests points above the ray through 3 pass the critical value on its upper side in chamber 0."""
        path = radial_path(4.0 + 0.05j)
        self.assertLess(path.segments[1].sweep, 0.0)
        self.assertEqual(chamber_of(4.0 + 0.05j), 0)

    def test_end_inside_detour_disc(self):
        """Tests the arc ends on the target when it lies inside the detour disc."""
        q = 3.05 - 0.02j
        path = radial_path(q)
        self.assertEqual(path.segment_count, 2)
        self.assertAlmostEqual(abs(path.end - q), 0.0, places=12)

    def test_rotated_chambers(self):
        """Tests the chamber ids of the rotated cut rays."""
        for k in range(3):
            self.assertEqual(chamber_of(zeta_power(k) * (4.0 - 0.05j)), k + 1)

    def test_grid_chamber_count(self):
        """Tests a grid crossing the three cut rays meets four chambers."""
        grid = chart_grid((-6.0, 6.0, -6.0, 6.0), (121, 121))
        self.assertEqual(sorted({chamber_of(q) for q in grid}), [0, 1, 2, 3])

    def test_near_critical_value(self):
        """Tests targets too close to a critical value are rejected."""
        with self.assertRaises(NearCriticalValueException):
            radial_path(3.0 + 1e-4)

    def test_invalid_detour_radius(self):
        """Tests the detour radius is validated."""
        with self.assertRaises(ValueError):
            chamber_of(1.0, detour_radius=0.0)
        with self.assertRaises(ValueError):
            radial_path(0j)
    # endregion


class AffineCoordinatesTestCase(unittest.TestCase):

    # region Setup
    @classmethod
    def setUpClass(cls) -> None:
        """Set up for all test cases"""
        warnings.simplefilter('ignore')
    # endregion

    # region Test Cases
    def test_reference_point(self):
        """Tests the empty cylinder at the reference point."""
        self.assertEqual(affine_coordinates(0j), (0.0, 0.0))

    def test_additivity(self):
        """Tests f(0 -> q1 -> q2) = f(0 -> q1) + f(q1 -> q2) with periods continued to q1."""
        q1, q2 = 1.0 + 1.0j, 1.5 + 0.25j
        combined = affine_coordinates(q2, path=BasePath.from_nodes([0j, q1, q2]))
        first = affine_coordinates(q1)
        second = affine_coordinates(q2, base=q1)
        np.testing.assert_allclose(combined, np.add(first, second), atol=1e-8)

    def test_conjugation_symmetry(self):
        """Tests affine data at conj(q) is the image under the conjugation action, across the detour chambers."""
        for q in (1.0 + 1.0j, -2.0 + 0.5j, 4.0 + 0.05j, -1.6 + 2.7j):
            with self.subTest(q=q):
                direct = affine_coordinates(q)
                mirrored = affine_coordinates(q.conjugate())
                np.testing.assert_allclose(mirrored, conjugation_image(direct), atol=1e-8)

    def test_monodromy_around_b(self):
        """Tests a loop around B acts on (f_c, f_d) by the transposed monodromy matrix."""
        q = 0.5 + 0.5j
        loop = lasso(LoopLabel.B)
        segment = BasePath.from_nodes([0j, q])
        after_loop = np.array(affine_coordinates(q, path=loop.concatenate(segment)))
        loop_only = np.array(affine_coordinates(0j, path=loop))
        direct = np.array(affine_coordinates(q, path=segment))
        expected = affine_monodromy(LoopLabel.B).as_array() @ direct
        np.testing.assert_allclose(after_loop - loop_only, expected, atol=1e-8)

    def test_affine_monodromy_matrices(self):
        """Tests the affine monodromy is the transpose of the fiber monodromy."""
        self.assertEqual(affine_monodromy(LoopLabel.B).entries, ((2, 1), (-1, 0)))
        self.assertEqual(affine_monodromy(LoopLabel.A).entries, ((-1, 4), (-1, 3)))

    def test_path_mismatch(self):
        """Tests a path that does not end at q is rejected."""
        with self.assertRaises(ValueError):
            affine_coordinates(1.0, path=BasePath.from_nodes([0j, 1j]))
    # endregion


class ExportChartTestCase(unittest.TestCase):

    # region Setup
    @classmethod
    def setUpClass(cls) -> None:
        """Set up for all test cases"""
        warnings.simplefilter('ignore')
        cls.origin_samples = export_chart((-0.5, 0.5, -0.5, 0.5), (3, 3), threads=2)
        cls.cut_samples = export_chart((2.5, 3.5, -0.5, 0.5), (3, 3))
    # endregion

    # region Test Cases
    def test_grid_order(self):
        """Tests samples follow the grid order independent of the worker count."""
        self.assertEqual([sample.q for sample in self.origin_samples], chart_grid((-0.5, 0.5, -0.5, 0.5), (3, 3)))

    def test_reference_sample(self):
        """Tests a grid containing the reference point holds the (0, 0) sample."""
        center = self.origin_samples[4]
        self.assertEqual(center.q, 0j)
        self.assertEqual(center.f, (0.0, 0.0))

    def test_failure_recorded(self):
        """Tests the sample on the critical value fails without aborting the grid."""
        center = self.cut_samples[4]
        self.assertEqual(center.q, 3 + 0j)
        self.assertFalse(center.succeeded)
        self.assertIsNotNone(center.failure)
        self.assertEqual(sum(sample.succeeded for sample in self.cut_samples), 8)

    def test_cut_chamber(self):
        """Tests the sample on the cut ray lies in the chamber of A."""
        self.assertEqual(self.cut_samples[5].chamber_id, 1)
        self.assertEqual(chamber_ids(self.cut_samples), [0, 1])
    # endregion


if __name__ == '__main__':
    unittest.main()
