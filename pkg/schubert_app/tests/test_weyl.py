from django.test import SimpleTestCase, override_settings

from schubert_app.exceptions import (
    InvalidComposition,
    InvalidPermutation,
    WindowMismatch,
    WordLimitExceeded,
)
from schubert_app.weyl import (
    Composition,
    Permutation,
    Weight,
    all_permutations,
    bruhat_interval,
    bruhat_leq,
    bruhat_poset,
    count_reduced_words,
    coset_reps,
    covers,
    dimension_partial_flag,
    fundamental_weight,
    longest_element,
    min_coset_representatives,
    mobius,
    parabolic_longest,
    reduced_word,
    reduced_words,
    rho,
    support,
    word_product,
)


def perm(text):
    return Permutation.from_string(text)


class PermutationTests(SimpleTestCase):
    def test_length_and_code(self):
        w = perm("2,3,1")
        self.assertEqual(w.length(), 2)
        self.assertEqual(w.code(), (1, 1, 0))
        self.assertEqual(Permutation.from_code((1, 1, 0)), w)

    def test_rejects_non_permutations(self):
        with self.assertRaises(InvalidPermutation):
            Permutation((1, 1, 2))
        with self.assertRaises(InvalidPermutation):
            Permutation.from_string("1,x")

    def test_inverse_and_compose(self):
        w = perm("3,1,4,2")
        self.assertEqual(w * w.inverse(), Permutation.identity(4))
        with self.assertRaises(WindowMismatch):
            w.compose(Permutation.identity(3))

    def test_embed_and_trim(self):
        self.assertEqual(perm("2,1").embed(4), perm("2,1,3,4"))
        self.assertEqual(perm("2,1,3,4").embed(2), perm("2,1"))
        with self.assertRaises(WindowMismatch):
            perm("1,3,2").embed(2)

    def test_canonical_order(self):
        perms = all_permutations(3)
        self.assertEqual(len(perms), 6)
        self.assertEqual(perms[0], Permutation.identity(3))
        self.assertEqual(perms[-1], longest_element(3))
        self.assertEqual([p.length() for p in perms], [0, 1, 1, 2, 2, 3])


class BruhatOrderTests(SimpleTestCase):
    def test_comparisons(self):
        self.assertTrue(bruhat_leq(Permutation.identity(3), longest_element(3)))
        self.assertFalse(bruhat_leq(perm("2,1,3"), perm("1,3,2")))
        self.assertFalse(bruhat_leq(perm("1,3,2"), perm("2,1,3")))
        self.assertTrue(bruhat_leq(perm("2,1,3"), perm("3,1,2")))

    def test_covers_of_longest_element(self):
        self.assertEqual(covers(longest_element(3)), [perm("2,3,1"), perm("3,1,2")])

    def test_mobius(self):
        self.assertEqual(mobius(Permutation.identity(3), longest_element(3)), -1)
        self.assertEqual(mobius(perm("2,1,3"), perm("1,3,2")), 0)

    def test_interval(self):
        self.assertEqual(len(bruhat_interval(Permutation.identity(3), longest_element(3))), 6)
        self.assertEqual(bruhat_interval(perm("2,1,3"), perm("3,1,2")), [perm("2,1,3"), perm("3,1,2")])

    def test_poset_has_eight_covers_in_s3(self):
        poset = bruhat_poset(3)
        self.assertEqual(len(poset), 6)
        self.assertEqual(len(poset.cover_pairs), 8)
        self.assertEqual(poset.lower_covers(perm("2,1,3")), [Permutation.identity(3)])


class ReducedWordTests(SimpleTestCase):
    def test_counts(self):
        self.assertEqual(count_reduced_words(longest_element(3)), 2)
        self.assertEqual(count_reduced_words(longest_element(4)), 16)

    def test_words_of_longest_element(self):
        self.assertEqual(reduced_words(longest_element(3)), [(1, 2, 1), (2, 1, 2)])

    def test_limit(self):
        with self.assertRaises(WordLimitExceeded):
            reduced_words(longest_element(4), limit=10)

    @override_settings(SCHUBERT_CALC={"reduced_word_limit": 3})
    def test_limit_comes_from_settings(self):
        with self.assertRaises(WordLimitExceeded):
            reduced_words(longest_element(4))
        self.assertEqual(len(reduced_words(longest_element(4), limit=16)), 16)

    def test_greedy_word_multiplies_back(self):
        for w in all_permutations(4):
            word = reduced_word(w)
            self.assertEqual(len(word), w.length())
            self.assertEqual(word_product(word, 4), w)


class ParabolicTests(SimpleTestCase):
    def test_coset_representatives(self):
        w = perm("3,1,4,2")
        composition = Composition((2, 2))
        self.assertEqual(coset_reps(w, composition, "min"), perm("1,3,2,4"))
        self.assertEqual(coset_reps(w, composition, "max"), perm("3,1,4,2"))
        with self.assertRaises(InvalidComposition):
            coset_reps(w, Composition((1, 2)))

    def test_parabolic_data(self):
        composition = Composition.from_string("2,2")
        self.assertEqual(parabolic_longest(composition), perm("2,1,4,3"))
        self.assertEqual(dimension_partial_flag(composition), 4)
        self.assertEqual(dimension_partial_flag(Composition((1, 1, 1))), 3)
        self.assertEqual(len(min_coset_representatives(composition)), 6)

    def test_support(self):
        self.assertEqual(support(longest_element(3)), {1, 2})
        self.assertEqual(support(Permutation.identity(3)), set())
        self.assertEqual(support(perm("2,1,3")), {1})


class WeightTests(SimpleTestCase):
    def test_dominance(self):
        self.assertTrue(rho(3).is_regular_dominant())
        self.assertTrue(fundamental_weight(2, 3).is_dominant())
        self.assertFalse(fundamental_weight(2, 3).is_regular_dominant())
        self.assertFalse(Weight((0, 1, 0)).is_dominant())

    def test_split(self):
        positive, negative = Weight((2, -1, 0)).split()
        self.assertEqual(positive, Weight((2, 0, 0)))
        self.assertEqual(negative, Weight((0, 1, 0)))
        self.assertEqual(positive - negative, Weight((2, -1, 0)))
