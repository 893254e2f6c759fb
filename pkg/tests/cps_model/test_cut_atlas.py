import unittest
import json
from fractions import Fraction
from thimble_lab.cps_model.rational_geometry import RationalVec2D, AffineMap, segment_ray_intersection
from thimble_lab.cps_model.cut_atlas import SingularLabel, build_atlas, atlas_to_dict
from thimble_lab.utilities.custom_context_managers import clear_lru_cache


class RationalGeometryTestCase(unittest.TestCase):

    # region Test Cases
    def test_float_refused(self):
        """Tests floats are refused as coordinates."""
        with self.assertRaises(TypeError):
            RationalVec2D(0.5, 0)

    def test_inverse_composition(self):
        """Tests an affine map composed with its inverse is the identity."""
        transformation = AffineMap.fixing(((2, 1), (-1, 0)), RationalVec2D(Fraction(1, 2), Fraction(1, 2)))
        self.assertTrue((transformation @ transformation.inverse()).is_identity)
        self.assertTrue((transformation.inverse() @ transformation).is_identity)

    def test_composition_order(self):
        """Tests (f @ g)(x) = f(g(x))."""
        f = AffineMap(matrix=((1, 1), (0, 1)), translation=RationalVec2D(1, 0))
        g = AffineMap(matrix=((0, -1), (1, 0)), translation=RationalVec2D(0, Fraction(1, 3)))
        point = RationalVec2D(Fraction(2, 5), -3)
        self.assertEqual((f @ g)(point), f(g(point)))

    def test_segment_ray_intersection(self):
        """Tests the exact intersection parameters of a segment with a ray."""
        hit = segment_ray_intersection(RationalVec2D(0, 0), RationalVec2D(2, 2), RationalVec2D(1, 0), RationalVec2D(0, 1))
        self.assertEqual(hit, (Fraction(1, 2), Fraction(1)))
        self.assertIsNone(segment_ray_intersection(RationalVec2D(0, 0), RationalVec2D(2, 2), RationalVec2D(1, 2), RationalVec2D(0, 1)))

    def test_collinear_overlap(self):
        """Tests a segment running along a ray is rejected."""
        with self.assertRaises(ValueError):
            segment_ray_intersection(RationalVec2D(0, 1), RationalVec2D(0, 3), RationalVec2D(0, 0), RationalVec2D(0, 1))
    # endregion


class CutAtlasTestCase(unittest.TestCase):

    # region Setup
    @classmethod
    def setUpClass(cls) -> None:
        """Set up for all test cases"""
        cls.atlas = build_atlas()
    # endregion

    # region Test Cases
    def test_singular_points(self):
        """Tests the singular points are the three exact rational points."""
        self.assertEqual(self.atlas.singular_points[SingularLabel.A], RationalVec2D(0, Fraction(-1, 2)))
        self.assertEqual(self.atlas.singular_points[SingularLabel.B], RationalVec2D(Fraction(1, 2), Fraction(1, 2)))
        self.assertEqual(self.atlas.singular_points[SingularLabel.C], RationalVec2D(Fraction(-1, 2), 0))

    def test_glue_matrices(self):
        """Tests the linear parts of the glue maps."""
        expected = {
            SingularLabel.A: ((-1, 4), (-1, 3)),
            SingularLabel.B: ((2, 1), (-1, 0)),
            SingularLabel.C: ((-1, 1), (-4, 3)),
        }
        for label, entries in expected.items():
            with self.subTest(label=label):
                self.assertEqual(self.atlas.glue_map(label).transformation.linear_part().entries, entries)

    def test_rebuilt_atlas_is_equal(self):
        """Tests an atlas rebuilt after clearing the cache equals the cached one."""
        with clear_lru_cache(build_atlas):
            rebuilt = build_atlas()
        self.assertEqual(rebuilt, self.atlas)
        self.assertIsNot(rebuilt, self.atlas)

    def test_glue_order(self):
        """Tests the glue maps are listed clockwise starting at B'."""
        self.assertEqual([glue.label for glue in self.atlas.glue_maps], [SingularLabel.B, SingularLabel.A, SingularLabel.C])

    def test_unipotent(self):
        """Tests every glue matrix has trace 2 and determinant 1."""
        for glue in self.atlas.glue_maps:
            with self.subTest(label=glue.label):
                self.assertEqual(glue.transformation.trace, 2)
                self.assertEqual(glue.transformation.determinant, 1)

    def test_fixes_singular_point(self):
        """Tests every glue map fixes its singular point."""
        for glue in self.atlas.glue_maps:
            with self.subTest(label=glue.label):
                self.assertEqual(glue.transformation(glue.apex), glue.apex)

    def test_glue_pairs_cuts(self):
        """Tests every glue map sends l+ onto l-."""
        for glue in self.atlas.glue_maps:
            with self.subTest(label=glue.label):
                for t in (0, Fraction(1, 3), 5):
                    self.assertTrue(glue.minus_ray.contains(glue.transformation(glue.plus_ray.point_at(t))))

    def test_cut_rays(self):
        """Tests sample points of the six cut rays."""
        self.assertTrue(self.atlas.cut('l1+').contains(RationalVec2D(Fraction(1, 2), 7)))
        self.assertTrue(self.atlas.cut('l1-').contains(RationalVec2D(7, Fraction(1, 2))))
        self.assertTrue(self.atlas.cut('l2+').contains(RationalVec2D(3, Fraction(-1, 2))))
        self.assertTrue(self.atlas.cut('l2-').contains(RationalVec2D(-2, Fraction(-5, 2))))
        self.assertTrue(self.atlas.cut('l3+').contains(RationalVec2D(Fraction(-5, 2), -2)))
        self.assertTrue(self.atlas.cut('l3-').contains(RationalVec2D(Fraction(-1, 2), 4)))
        self.assertFalse(self.atlas.cut('l1+').contains(RationalVec2D(Fraction(1, 2), 0)))

    def test_removed_sectors(self):
        """Tests membership of the removed sectors."""
        self.assertTrue(self.atlas.in_removed_sector(RationalVec2D(1, 1)))
        self.assertTrue(self.atlas.in_removed_sector(RationalVec2D(1, -1)))
        self.assertTrue(self.atlas.in_removed_sector(RationalVec2D(-2, 1)))
        self.assertTrue(self.atlas.in_removed_sector(RationalVec2D(Fraction(1, 2), Fraction(1, 2))))
        self.assertFalse(self.atlas.in_removed_sector(RationalVec2D(0, 0)))
        self.assertFalse(self.atlas.in_removed_sector(RationalVec2D(10, 0)))
        self.assertFalse(self.atlas.in_removed_sector(RationalVec2D(0, 10)))
        self.assertFalse(self.atlas.in_removed_sector(RationalVec2D(-10, -10)))

    def test_invariant_lines(self):
        """Tests each glue matrix fixes the direction of its invariant line."""
        for label, line in self.atlas.invariant_lines().items():
            with self.subTest(label=label):
                linear = AffineMap(matrix=self.atlas.glue_map(label).transformation.matrix)
                self.assertEqual(linear.linear(line.direction), line.direction)

    def test_candidate_triangle(self):
        """Tests the pairwise intersections of the invariant lines."""
        self.assertEqual(
            self.atlas.candidate_triangle(),
            (RationalVec2D(0, 1), RationalVec2D(-1, -1), RationalVec2D(1, 0)),
        )

    def test_json_form(self):
        """Tests the JSON form carries rationals as numerator and denominator."""
        data = json.loads(json.dumps(atlas_to_dict(self.atlas)))
        self.assertEqual(data['singular_points']["B'"]['x'], {'num': 1, 'den': 2})
        self.assertEqual(len(data['cuts']), 6)
        self.assertEqual(data['glue_maps'][0]['matrix'][0][0], {'num': 2, 'den': 1})
        self.assertEqual(data['schema_version'], 1)
    # endregion
