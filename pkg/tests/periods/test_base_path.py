import unittest
import numpy as np
from thimble_lab.fibration.family import ZETA, critical_values
from thimble_lab.homology.monodromy import LoopLabel
from thimble_lab.periods.base_path import (
    BasePath,
    check_in_domain,
    thimble_path,
    lasso,
    infinity_loop,
)
from thimble_lab.utilities.custom_exceptions import NearCriticalValueException, PathExitsDomainException


class ThimblePathTestCase(unittest.TestCase):

    # region Test Cases
    def test_straight_path_on_real_axis(self):
        """Tests that the segment from 3 to a negative point stays in W_0."""
        path = thimble_path(0, -2.0)
        self.assertEqual(path.segment_count, 1)
        self.assertEqual(path.anchor, 0)
        self.assertAlmostEqual(abs(path.end + 2.0), 0.0)

    def test_leaving_the_start_sideways(self):
        """Tests that touching the own cut only at the start point is allowed."""
        path = thimble_path(0, 4.0 + 1.0j)
        self.assertEqual(path.segment_count, 1)

    def test_path_through_origin(self):
        """Tests fallback to the path through 0 when the straight segment crosses another cut."""
        path = thimble_path(0, -3.0 + 4.0j)
        self.assertEqual(path.segment_count, 2)
        self.assertAlmostEqual(abs(path.nodes[1]), 0.0)
        check_in_domain(path, 0)

    def test_points_on_the_cut(self):
        """Tests that targets on the cut rays are outside W_j."""
        with self.assertRaises(PathExitsDomainException):
            thimble_path(0, 5.0)
        with self.assertRaises(PathExitsDomainException):
            thimble_path(1, 5.0)
        with self.assertRaises(PathExitsDomainException):
            thimble_path(0, 4.0 * ZETA)

    def test_degenerate_target(self):
        """Tests rejection of a target equal to the critical value."""
        with self.assertRaises(ValueError):
            thimble_path(0, 3.0)

    def test_rotated_path_moves_anchor(self):
        """Tests that rotating a thimble path by zeta gives a path of the next thimble."""
        rotated = thimble_path(0, -2.0).transformed(ZETA)
        self.assertEqual(rotated.anchor, 1)
        self.assertTrue(rotated.in_domain(1))
        self.assertAlmostEqual(abs(rotated.start - critical_values()[1]), 0.0, places=12)
    # endregion


class BasePathTestCase(unittest.TestCase):

    # region Test Cases
    def test_clearance_violation(self):
        """Tests NearCriticalValue for a path ending next to a critical value."""
        with self.assertRaises(NearCriticalValueException):
            BasePath.from_nodes([0.0, 2.9995])
        path = BasePath.from_nodes([0.0, 2.9995], clearance=1e-4)
        self.assertGreater(path.critical_distance(), 1e-4)

    def test_anchor_must_be_start(self):
        """Tests rejection of an anchor that is not the start point."""
        with self.assertRaises(ValueError):
            BasePath.from_nodes([1.0, 0.0], anchor=0)

    def test_anchor_ignored_on_first_segment_only(self):
        """Tests that an anchored path may not return to its critical value later."""
        with self.assertRaises(NearCriticalValueException):
            BasePath.from_nodes([3.0, 1.0, 3.0 + 1e-4j], anchor=0)

    def test_invalid_clearance(self):
        """Tests rejection of a non-positive clearance."""
        with self.assertRaises(ValueError):
            BasePath.from_nodes([0.0, 1.0], clearance=0.0)

    def test_reversed_path(self):
        """Tests that reversal swaps the end points."""
        path = BasePath.from_nodes([0.0, 1.0 + 1.0j, -1.0]).reversed()
        self.assertIsNone(path.anchor)
        self.assertAlmostEqual(abs(path.start + 1.0), 0.0)
        self.assertAlmostEqual(abs(path.end), 0.0)
        self.assertEqual(path.nodes[1], 1.0 + 1.0j)
    # endregion


class LoopTestCase(unittest.TestCase):

    # region Test Cases
    def test_lasso_geometry(self):
        """Tests that each lasso is closed and circles its critical value at unit distance."""
        for label in (LoopLabel.A, LoopLabel.B, LoopLabel.C):
            loop = lasso(label)
            center = critical_values()[label.critical_index]
            self.assertTrue(loop.is_closed)
            self.assertEqual(loop.segment_count, 3)
            self.assertAlmostEqual(loop.segments[1].sweep, 2.0 * np.pi)
            self.assertAlmostEqual(loop.contour.distance_to(center), 1.0, places=12)

    def test_infinity_loop(self):
        """Tests the large loop encloses all critical values."""
        loop = lasso(LoopLabel.INFINITY)
        self.assertTrue(loop.is_closed)
        self.assertAlmostEqual(loop.segments[1].radius, 5.0)
        self.assertAlmostEqual(abs(loop.segments[0].end + 5.0), 0.0)

    def test_infinity_loop_radius(self):
        """Tests rejection of a radius that does not enclose the critical values."""
        with self.assertRaises(ValueError):
            infinity_loop(radius=2.0)
    # endregion


if __name__ == '__main__':
    unittest.main()
