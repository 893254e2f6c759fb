import unittest
from thimble_lab.homology.homology_class import (
    BasisTag,
    HomologyClass,
    convert_basis,
    intersection,
    vanishing_cycle,
)
from thimble_lab.utilities.custom_exceptions import BasisMismatchException


class VanishingCycleTestCase(unittest.TestCase):

    # region Test Cases
    def test_classes(self):
        """Tests vanishing cycle classes in both bases."""
        self.assertEqual(vanishing_cycle(0, BasisTag.AB), HomologyClass.from_ab(-2, -1))
        self.assertEqual(vanishing_cycle(0, BasisTag.CD), HomologyClass.from_cd(1, -2))
        self.assertEqual(vanishing_cycle(1), HomologyClass.from_cd(1, 1))
        self.assertEqual(vanishing_cycle(2), HomologyClass.from_cd(-2, 1))

    def test_sum_vanishes(self):
        """Tests [V0] + [V1] + [V2] = 0 in both bases."""
        for basis in BasisTag:
            total = vanishing_cycle(0, basis) + vanishing_cycle(1, basis) + vanishing_cycle(2, basis)
            self.assertTrue(total.is_zero)

    def test_basis_conversion(self):
        """Tests a + 2b converts to c + d and back."""
        converted = convert_basis(HomologyClass.from_ab(1, 2), BasisTag.CD)
        self.assertEqual(converted, HomologyClass.from_cd(1, 1))
        self.assertEqual(converted.convert(BasisTag.AB), HomologyClass.from_ab(1, 2))
        for j in range(3):
            self.assertEqual(vanishing_cycle(j, BasisTag.AB).convert(BasisTag.CD), vanishing_cycle(j, BasisTag.CD))

    def test_invalid_index(self):
        """Tests vanishing cycle index outside 0..2 is rejected."""
        with self.assertRaises(ValueError):
            vanishing_cycle(3)

    def test_string_form(self):
        """Tests readable class names."""
        self.assertEqual(str(HomologyClass.from_cd(1, -2)), '1c - 2d')
        self.assertEqual(str(HomologyClass.from_ab(0, 0)), '0')
    # endregion


class IntersectionTestCase(unittest.TestCase):

    # region Test Cases
    def test_normalization(self):
        """Tests <d, c> = 1 and <c, d> = -1."""
        c, d = HomologyClass.from_cd(1, 0), HomologyClass.from_cd(0, 1)
        self.assertEqual(intersection(d, c), 1)
        self.assertEqual(intersection(c, d), -1)
        self.assertEqual(intersection(c, c), 0)

    def test_bilinear_expansion(self):
        """Tests <c - 2d, c + d> = -3."""
        self.assertEqual(intersection(vanishing_cycle(0), vanishing_cycle(1)), -3)

    def test_induced_form(self):
        """Tests the pairing in the {a, b} basis agrees with the converted one."""
        a, b = HomologyClass.from_ab(1, 0), HomologyClass.from_ab(0, 1)
        self.assertEqual(intersection(a, b), 1)
        for i in range(3):
            for j in range(3):
                self.assertEqual(
                    intersection(vanishing_cycle(i, BasisTag.AB), vanishing_cycle(j, BasisTag.AB)),
                    intersection(vanishing_cycle(i), vanishing_cycle(j)),
                )

    def test_basis_mismatch(self):
        """Tests pairing across bases raises."""
        with self.assertRaises(BasisMismatchException):
            intersection(HomologyClass.from_ab(1, 0), HomologyClass.from_cd(1, 0))
        with self.assertRaises(BasisMismatchException):
            _ = HomologyClass.from_ab(1, 0) + HomologyClass.from_cd(1, 0)
    # endregion
