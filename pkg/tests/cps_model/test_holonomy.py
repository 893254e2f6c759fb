import unittest
from fractions import Fraction
from thimble_lab.homology.monodromy import content, is_unipotent_conjugate
from thimble_lab.cps_model.rational_geometry import RationalVec2D
from thimble_lab.cps_model.cut_atlas import SingularLabel, build_atlas
from thimble_lab.cps_model.holonomy import (
    develop_path,
    holonomy,
    concatenate_loops,
    small_loop,
    encircling_loop,
)
from thimble_lab.utilities.custom_exceptions import LoopHitsCutException

LOOP_AROUND_B = [(0, 0), (1, Fraction(3, 8)), (Fraction(3, 8), 1), (0, 0)]
LOOP_AROUND_C = [(0, 0), (Fraction(-1, 4), 1), (-1, Fraction(-3, 4)), (0, 0)]


class HolonomyTestCase(unittest.TestCase):

    # region Setup
    @classmethod
    def setUpClass(cls) -> None:
        """Set up for all test cases"""
        cls.atlas = build_atlas()
    # endregion

    # region Test Cases
    def test_small_loops(self):
        """Tests a small counterclockwise loop around each singular point returns its glue map."""
        expected = {
            SingularLabel.A: ((-1, 4), (-1, 3)),
            SingularLabel.B: ((2, 1), (-1, 0)),
            SingularLabel.C: ((-1, 1), (-4, 3)),
        }
        for label, entries in expected.items():
            with self.subTest(label=label):
                glue = self.atlas.glue_map(label)
                result = holonomy(small_loop(glue))
                self.assertEqual(result.linear_part().entries, entries)
                self.assertEqual(result, glue.transformation)

    def test_contractible_loop(self):
        """Tests a loop crossing no cut has trivial holonomy."""
        result = holonomy([(0, 2), (Fraction(1, 4), 2), (0, Fraction(9, 4))])
        self.assertTrue(result.is_identity)

    def test_crossing_back(self):
        """Tests crossing a cut and crossing back cancels."""
        path = develop_path([(0, 0), (1, Fraction(3, 8)), (Fraction(3, 8), 1), (1, Fraction(3, 8)), (0, 0)])
        self.assertEqual(len(path.crossings), 2)
        self.assertFalse(path.crossings[0].inverted)
        self.assertTrue(path.crossings[1].inverted)
        self.assertEqual(path.crossings[1].entry_ray, 'l1+')
        self.assertTrue(path.holonomy.is_identity)

    def test_reversed_loop(self):
        """Tests the reversed loop has the inverse holonomy."""
        forward = holonomy(LOOP_AROUND_B)
        backward = holonomy(list(reversed(LOOP_AROUND_B)))
        self.assertEqual(backward, forward.inverse())

    def test_functoriality(self):
        """Tests the holonomy of concatenated loops is the product of holonomies."""
        first, second = holonomy(LOOP_AROUND_B), holonomy(LOOP_AROUND_C)
        self.assertEqual(holonomy(concatenate_loops(LOOP_AROUND_B, LOOP_AROUND_C)), first @ second)
        self.assertEqual(holonomy(concatenate_loops(LOOP_AROUND_C, LOOP_AROUND_B)), second @ first)
        self.assertEqual(first, self.atlas.glue_map(SingularLabel.B).transformation)
        self.assertEqual(second, self.atlas.glue_map(SingularLabel.C).transformation)

    def test_encircling_loop(self):
        """Tests the loop around all singular points is a unipotent conjugate of content 9."""
        path = develop_path(encircling_loop())
        self.assertEqual([crossing.glue_index for crossing in path.crossings], [1, 3, 2])
        linear = path.holonomy.linear_part()
        self.assertEqual(linear.trace, 2)
        self.assertEqual(content(linear), 9)
        self.assertTrue(is_unipotent_conjugate(linear, 9))

    def test_developed_vertices(self):
        """Tests the developed path closes up exactly by the holonomy."""
        path = develop_path(small_loop(self.atlas.glue_map(SingularLabel.A)))
        self.assertTrue(path.is_closed)
        self.assertEqual(path.developed_vertices[-1], path.holonomy(path.vertices[0]))
        self.assertEqual(path.developed_vertices[0], path.vertices[0])

    def test_vertex_on_cut(self):
        """Tests a vertex on a cut ray is rejected."""
        with self.assertRaises(LoopHitsCutException):
            holonomy([(0, 0), (Fraction(1, 2), 1), (0, 1)])

    def test_vertex_in_sector(self):
        """Tests a vertex inside a removed sector is rejected."""
        with self.assertRaises(LoopHitsCutException):
            holonomy([(0, 0), (1, 1), (0, 1)])

    def test_edge_through_singular_point(self):
        """Tests an edge through a singular point is rejected."""
        with self.assertRaises(LoopHitsCutException):
            holonomy([(Fraction(-1, 4), Fraction(1, 2)), (Fraction(-3, 4), Fraction(-1, 2)), (0, 0)])

    def test_too_short(self):
        """Tests a path needs two vertices."""
        with self.assertRaises(ValueError):
            develop_path([RationalVec2D(0, 0)])

    def test_mismatched_base_points(self):
        """Tests loops with different base points cannot be concatenated."""
        with self.assertRaises(ValueError):
            concatenate_loops(LOOP_AROUND_B, [(0, 2), (Fraction(1, 4), 2), (0, Fraction(9, 4))])
    # endregion
