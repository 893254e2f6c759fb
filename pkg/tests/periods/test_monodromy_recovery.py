import unittest
import warnings
import numpy as np
from thimble_lab.homology.homology_class import vanishing_cycle
from thimble_lab.homology.monodromy import (
    LoopLabel,
    picard_lefschetz,
    monodromy_around,
    content,
)
from thimble_lab.periods.monodromy_recovery import numeric_monodromy
from thimble_lab.utilities.custom_exceptions import LatticeRecognitionFailedException, NonConvergenceException


class NumericMonodromyTestCase(unittest.TestCase):

    # region Setup
    @classmethod
    def setUpClass(cls) -> None:
        """Set up for all test cases"""
        warnings.simplefilter('ignore')
        cls.recovered = {label: numeric_monodromy(label) for label in LoopLabel}
    # endregion

    # region Test Cases
    def test_finite_loops(self):
        """Tests exact matrices around A, B and C."""
        self.assertEqual(self.recovered[LoopLabel.A].matrix.entries, ((-1, -1), (4, 3)))
        self.assertEqual(self.recovered[LoopLabel.B].matrix.entries, ((2, -1), (1, 0)))
        self.assertEqual(self.recovered[LoopLabel.C].matrix.entries, ((-1, -4), (1, 3)))

    def test_picard_lefschetz_consistency(self):
        """Tests numeric monodromy equals the Picard-Lefschetz formula for each vanishing cycle."""
        for label in (LoopLabel.A, LoopLabel.B, LoopLabel.C):
            self.assertEqual(self.recovered[label].matrix, picard_lefschetz(vanishing_cycle(label.critical_index)))

    def test_certified_residuals(self):
        """Tests rounding residuals and error bounds stay below the certification threshold."""
        for recovery in self.recovered.values():
            self.assertLess(recovery.residual + recovery.error_bound, 1e-6)

    def test_infinity_loop(self):
        """Tests the large loop is unipotent of content 9 and equals the ordered product of the finite loops."""
        matrix = self.recovered[LoopLabel.INFINITY].matrix
        self.assertEqual(matrix.trace, 2)
        shifted = matrix.minus_identity()
        self.assertTrue(np.array_equal(shifted @ shifted, np.zeros((2, 2), dtype=int)))
        self.assertEqual(content(matrix), 9)
        expected = monodromy_around(LoopLabel.B) @ monodromy_around(LoopLabel.A) @ monodromy_around(LoopLabel.C)
        self.assertEqual(matrix, expected)

    def test_composition_of_finite_loops(self):
        """Tests the numeric finite-loop matrices compose to the numeric infinity matrix."""
        product = self.recovered[LoopLabel.B].matrix @ self.recovered[LoopLabel.A].matrix @ self.recovered[LoopLabel.C].matrix
        self.assertEqual(product, self.recovered[LoopLabel.INFINITY].matrix)

    def test_loose_tolerance_fails_certification(self):
        """Tests a loose quadrature tolerance cannot certify the integer matrix."""
        with self.assertRaises((LatticeRecognitionFailedException, NonConvergenceException)):
            numeric_monodromy(LoopLabel.B, tol=1e-2)
    # endregion


if __name__ == '__main__':
    unittest.main()
