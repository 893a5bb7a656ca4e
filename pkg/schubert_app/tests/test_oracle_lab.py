from django.test import SimpleTestCase, override_settings

from schubert_app import cohomology, ktheory, oracle_lab
from schubert_app.exceptions import InvalidPermutation, UnstableFit
from schubert_app.polyring import Family, Poly, grothendieck_poly, schubert_poly
from schubert_app.weyl import Permutation, all_permutations, bruhat_leq, longest_element


def perm(text):
    return Permutation.from_string(text)


class ProductOracleTests(SimpleTestCase):
    def test_monk_iteration_matches_cup(self):
        for v in all_permutations(3):
            for w in all_permutations(3):
                self.assertEqual(oracle_lab.monk_iterated_product(v, w).terms,
                                 cohomology.basis_cup(v, w))

    def test_top_down_polynomials(self):
        for w in all_permutations(4):
            self.assertEqual(oracle_lab.top_down_polynomial(w), schubert_poly(w))
            self.assertEqual(oracle_lab.top_down_polynomial(w, Family.GROTHENDIECK),
                             grothendieck_poly(w))

    def test_coefficient_extraction(self):
        f = schubert_poly(perm("1,3,2")) + 2 * schubert_poly(perm("2,3,1"))
        self.assertEqual(oracle_lab.coefficient_extraction(f, perm("2,3,1")), 2)
        self.assertEqual(oracle_lab.coefficient_extraction(f, perm("1,3,2")), 1)
        self.assertEqual(oracle_lab.coefficient_extraction(f, perm("3,1,2")), 0)

    def test_dual_by_substitution(self):
        for w in all_permutations(3):
            alpha = ktheory.k_class(w)
            self.assertTrue(oracle_lab.dual_by_substitution(alpha).same_class(ktheory.dualize(alpha)))


class BruhatOracleTests(SimpleTestCase):
    def test_mobius_recursive(self):
        self.assertEqual(oracle_lab.mobius_recursive(Permutation.identity(3), longest_element(3)), -1)
        self.assertEqual(oracle_lab.mobius_recursive(perm("2,1,3"), perm("2,1,3")), 1)
        with self.assertRaises(InvalidPermutation):
            oracle_lab.mobius_recursive(perm("2,1,3"), perm("1,3,2"))

    def test_subword_criterion(self):
        for v in all_permutations(4):
            for w in all_permutations(4):
                self.assertEqual(oracle_lab.subword_leq(v, w), bruhat_leq(v, w))

    def test_scan(self):
        report = oracle_lab.mobius_oracle_scan(3)
        self.assertTrue(report.passed)
        self.assertEqual(report.counts["subword"], 36)
        self.assertEqual(report.counts["mobius"], 19)


class ConeTests(SimpleTestCase):
    def test_curve_model(self):
        model = oracle_lab.SemigroupCurveModel(4)
        self.assertEqual(model.curve_hilbert(1), 4)
        self.assertEqual(model.gaps(1), 1)
        self.assertEqual(model.curve_hilbert(2), 9)
        self.assertEqual(model.cone_hilbert(2), 14)

    def test_twisted_cubic_cone(self):
        result = oracle_lab.cone_counterexample(3)
        self.assertEqual((result.c2, result.c1, result.c0), (3, -2, 0))
        self.assertFalse(result.violates_signs)

    def test_quartic_cone_breaks_the_sign_pattern(self):
        result = oracle_lab.cone_counterexample(4)
        self.assertEqual((result.c2, result.c1, result.c0), (4, -3, -1))
        self.assertTrue(result.violates_signs)
        self.assertEqual(result.hilbert.coefficients, [0, 3, 2])

    @override_settings(SCHUBERT_CALC={"cone_fit_window": 2, "cone_check_points": 3, "cone_retry_cap": 0})
    def test_short_windows_are_unstable(self):
        with self.assertRaises(UnstableFit):
            oracle_lab.cone_counterexample(3)

    def test_rejects_small_degrees(self):
        with self.assertRaises(ValueError):
            oracle_lab.SemigroupCurveModel(2)


class ScanTests(SimpleTestCase):
    def test_sign_scan(self):
        report = oracle_lab.sign_theorem_scan(3)
        self.assertTrue(report.passed, report.witnesses)
        self.assertIn("layer_0", report.counts)

    def test_window_stability(self):
        report = oracle_lab.window_stability(3, 5)
        self.assertTrue(report.passed, report.witnesses)
        self.assertEqual(report.counts["schubert_top_down"], 12)
        self.assertEqual(report.counts["grothendieck_top_down"], 12)

    def test_richardson_terms_can_leave_the_interval(self):
        s1 = perm("2,1")
        product = ktheory.multiply(ktheory.k_class(s1), ktheory.k_class(s1, "O_opp"))
        self.assertEqual(product.terms, {Permutation.identity(2): 1})
        for n in (2, 3):
            report = oracle_lab.richardson_sign_scan(n)
            self.assertTrue(report.passed, report.witnesses)

    def test_coefficient_extraction_scan(self):
        report = oracle_lab.coefficient_extraction_scan(5, window=4, seed=7)
        self.assertTrue(report.passed, report.witnesses)
        self.assertEqual(report.counts["coefficient_extraction"], 5 * 24)

    def test_expansion_round_trips(self):
        for family in Family:
            report = oracle_lab.expansion_delta_check(5, window=3, family=family, seed=3)
            self.assertTrue(report.passed, report.witnesses)
            self.assertEqual(report.counts["round_trip"], 5)

    def test_zero_polynomial_has_no_coefficients(self):
        self.assertEqual(oracle_lab.coefficient_extraction(Poly.zero(), perm("2,1")), 0)
