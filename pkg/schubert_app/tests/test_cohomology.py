import numpy as np
from django.test import SimpleTestCase

from schubert_app import cohomology
from schubert_app.exceptions import InvalidWeight, WindowMismatch
from schubert_app.weyl import Permutation, Weight, all_permutations, longest_element, rho


def perm(text):
    return Permutation.from_string(text)


class CupProductTests(SimpleTestCase):
    def test_divisor_products_in_fl3(self):
        self.assertEqual(cohomology.basis_cup(perm("2,3,1"), perm("2,3,1")), {perm("1,3,2"): 1})
        self.assertEqual(cohomology.basis_cup(perm("2,3,1"), perm("3,1,2")),
                         {perm("1,3,2"): 1, perm("2,1,3"): 1})
        self.assertEqual(cohomology.basis_cup(perm("3,1,2"), perm("3,1,2")), {perm("2,1,3"): 1})

    def test_routes_agree(self):
        for v in all_permutations(3):
            for w in all_permutations(3):
                self.assertEqual(cohomology.basis_cup(v, w, "reduced"),
                                 cohomology.basis_cup(v, w, "stable"))

    def test_fundamental_class_is_the_unit(self):
        alpha = cohomology.schubert_class(perm("2,3,1")) + 2 * cohomology.point_class(3)
        self.assertEqual(cohomology.cup(cohomology.fundamental_class(3), alpha), alpha)

    def test_point_squares_to_zero(self):
        point = cohomology.point_class(3)
        self.assertFalse(cohomology.cup(point, point))

    def test_windows_must_match(self):
        with self.assertRaises(WindowMismatch):
            cohomology.basis_cup(perm("2,1"), perm("2,1,3"))

    def test_structure_constants_are_nonnegative(self):
        table = cohomology.structure_constants(3)
        self.assertEqual(len(table), 36)
        for products in table.values():
            self.assertTrue(all(c > 0 for c in products.values()))


class DualityTests(SimpleTestCase):
    def test_poincare_matrix_is_identity(self):
        for n in (2, 3):
            size = len(all_permutations(n))
            self.assertTrue((cohomology.poincare_matrix(n) == np.identity(size, dtype=object)).all())

    def test_pairing_with_opposite_classes(self):
        for w in all_permutations(3):
            for v in all_permutations(3):
                value = cohomology.pairing(cohomology.schubert_class(w), cohomology.opposite_class(v))
                self.assertEqual(value, 1 if v == w else 0)

    def test_diagonal_class(self):
        diagonal = cohomology.diagonal_class_cohomology(2)
        self.assertEqual(diagonal, {(perm("1,2"), perm("1,2")): 1, (perm("2,1"), perm("2,1")): 1})

    def test_diagonal_contracts_to_delta(self):
        contraction = cohomology.diagonal_contraction(3)
        for (w, v), value in contraction.items():
            self.assertEqual(value, 1 if v == w else 0)


class ChevalleyTests(SimpleTestCase):
    def test_rho_on_top_class(self):
        product = cohomology.chevalley_cup(rho(3), longest_element(3))
        self.assertEqual(product.terms, {perm("2,3,1"): 1, perm("3,1,2"): 1})

    def test_agrees_with_cup_by_first_chern_class(self):
        for weight in (Weight((1, 0, 0)), Weight((2, 1, 0)), Weight((0, 0, 1))):
            divisor = cohomology.c1_class(weight)
            for w in all_permutations(3):
                self.assertEqual(cohomology.chevalley_cup(weight, w),
                                 cohomology.cup(divisor, cohomology.schubert_class(w)))

    def test_divisor_of_section(self):
        divisor = cohomology.divisor_of_section(Weight((1, 1, 0)), longest_element(3))
        self.assertEqual(divisor, {perm("2,3,1"): 0, perm("3,1,2"): 1})
        with self.assertRaises(InvalidWeight):
            cohomology.divisor_of_section(Weight((0, 1, 0)), longest_element(3))

    def test_canonical_divisor(self):
        self.assertEqual(cohomology.canonical_divisor(perm("2,1")), {perm("1,2"): -2})
        self.assertEqual(cohomology.canonical_divisor(longest_element(3)),
                         {perm("2,3,1"): -2, perm("3,1,2"): -2})

    def test_positivity_and_picard_kernel(self):
        self.assertEqual(cohomology.line_bundle_positivity(rho(3)), cohomology.Positivity.AMPLE)
        self.assertEqual(cohomology.line_bundle_positivity(Weight((1, 1, 0))),
                         cohomology.Positivity.GLOBALLY_GENERATED)
        self.assertEqual(cohomology.line_bundle_positivity(Weight((0, 1, 0))),
                         cohomology.Positivity.NEITHER)
        self.assertTrue(cohomology.pic_kernel_check(perm("1,3,2"), Weight((1, 0, 0))))
        self.assertFalse(cohomology.pic_kernel_check(perm("2,1,3"), Weight((1, 0, 0))))
