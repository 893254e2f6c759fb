import unittest
import json
import numpy as np
from thimble_lab.homology.monodromy import LoopLabel, MonodromyMatrix
from thimble_lab.cps_model.rational_geometry import RationalVec2D
from thimble_lab.cps_model.cut_atlas import SingularLabel
from thimble_lab.cps_model.isomorphism import (
    verify_isomorphism,
    triangle_affine_map,
    report_to_dict,
)
from thimble_lab.utilities.custom_exceptions import MatrixMismatchException


class VerifyIsomorphismTestCase(unittest.TestCase):

    # region Setup
    @classmethod
    def setUpClass(cls) -> None:
        """Set up for all test cases"""
        cls.report = verify_isomorphism()
    # endregion

    # region Test Cases
    def test_passed(self):
        """Tests all exact identities hold."""
        self.assertTrue(self.report.passed)
        self.assertIsNone(self.report.triangle_map)

    def test_transpose_identities(self):
        """Tests each transposed monodromy equals the glue matrix at the matching singular point."""
        expected = {
            SingularLabel.A: (((-1, -1), (4, 3)), ((-1, 4), (-1, 3))),
            SingularLabel.B: (((2, -1), (1, 0)), ((2, 1), (-1, 0))),
            SingularLabel.C: (((-1, -4), (1, 3)), ((-1, 1), (-4, 3))),
        }
        for check in self.report.matrix_checks:
            with self.subTest(label=check.label):
                monodromy, glue = expected[check.label]
                self.assertEqual(check.picard_lefschetz.entries, monodromy)
                self.assertEqual(check.glue.entries, glue)
                self.assertTrue(check.matches)

    def test_cut_directions(self):
        """Tests the invariant classes are the vanishing cycles and the glue maps pair the cuts."""
        for check in self.report.direction_checks:
            with self.subTest(label=check.label):
                self.assertTrue(check.matches)

    def test_encircling_holonomy(self):
        """Tests the holonomy around all singular points is the transposed cyclic conjugate of the total monodromy."""
        self.assertTrue(self.report.encircling_matches)
        self.assertEqual(self.report.encircling_holonomy.trace, 2)

    def test_mismatch(self):
        """Tests a wrong monodromy raises."""
        wrong = {LoopLabel.B: MonodromyMatrix(entries=((1, 1), (0, 1)))}
        with self.assertRaises(MatrixMismatchException):
            verify_isomorphism(recovered=wrong)

    def test_triangle_map(self):
        """Tests the triangle map sends the given triangle onto the candidate triangle."""
        source = [(1.0, 2.0), (-3.0, 0.5), (0.25, -1.0)]
        report = verify_isomorphism(syz_triangle=source)
        for point, vertex in zip(source, report.candidate_triangle):
            image = report.triangle_map @ np.asarray(point) + report.triangle_translation
            np.testing.assert_allclose(image, vertex.as_floats(), atol=1e-12)

    def test_degenerate_triangle(self):
        """Tests a collinear triangle is rejected."""
        with self.assertRaises(ValueError):
            triangle_affine_map([(0.0, 0.0), (1.0, 1.0), (2.0, 2.0)], [RationalVec2D(0, 1), RationalVec2D(-1, -1), RationalVec2D(1, 0)])

    def test_json_form(self):
        """Tests the report serializes to JSON."""
        data = json.loads(json.dumps(report_to_dict(self.report)))
        self.assertTrue(data['passed'])
        self.assertEqual(data['matrices'][0]['transpose'], [[2, 1], [-1, 0]])
    # endregion
