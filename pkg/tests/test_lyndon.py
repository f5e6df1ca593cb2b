import math

import pytest

from loopspace.errors import ComputationFailure, PresentationError
from loopspace.lyndon import (
    LyndonWord,
    bracket_of,
    enumerate_lyndon,
    exclusion_bigram,
    independence_certificate,
    is_lyndon,
    lie_dims,
    standard_factorization,
    standard_lyndon,
)
from loopspace.manifold import ManifoldModel, loop_alphabet, loop_presentation
from loopspace.numtheory import divisors, mobius
from loopspace.rewrite import QuadraticPresentation
from loopspace.series import sphere_summand_counts
from loopspace.words import Alphabet, NCPoly, Word

AB = Alphabet.from_degrees((1, 1), labels=("a", "b"))


def necklace_count(q, m):
    """Witt formula: number of length-m Lyndon words over q letters."""
    return sum(mobius(d) * q ** (m // d) for d in divisors(m)) // m


def rotations(indices):
    return [indices[i:] + indices[:i] for i in range(1, len(indices))]


class TestIsLyndon:
    def test_rotation_criterion_brute_force(self):
        # compare against the definition on every short word over 3 letters
        for length in range(1, 6):
            for word in _all_words(3, length):
                expected = all(word < rot for rot in rotations(word))
                assert is_lyndon(word) == expected

    def test_single_letter_power_not_lyndon(self):
        assert is_lyndon((1,))
        assert not is_lyndon((1, 1))
        assert not is_lyndon((1, 1, 1))


def _all_words(q, length):
    words = [()]
    for _ in range(length):
        words = [w + (i,) for w in words for i in range(1, q + 1)]
    return words


class TestEnumeration:
    def test_two_letters_length_three(self):
        found = [l.word.indices for l in enumerate_lyndon(AB, 3)[3]]
        assert found == [(1, 1, 2), (1, 2, 2)]
        assert len(found) == necklace_count(2, 3)

    def test_single_letter_alphabet(self):
        single = Alphabet.from_degrees((1,), labels=("a",))
        by_degree = enumerate_lyndon(single, 5)
        assert [l.word.indices for l in by_degree[1]] == [(1,)]
        assert all(not by_degree[d] for d in range(2, 6))

    def test_manifold_alphabet_degree_two(self):
        # u1', u2' (single letters of degree 2) and u1u2; exhaustive check
        a = loop_alphabet(2, 2)
        found = {str(l) for l in enumerate_lyndon(a, 2)[2]}
        assert found == {"u1'", "u2'", "u1u2"}
        brute = {
            w
            for w in _all_words(4, 1) + _all_words(4, 2)
            if sum(a.degrees[i - 1] for i in w) == 2 and is_lyndon(w)
        }
        assert len(brute) == 3

    @pytest.mark.parametrize("q", [2, 3])
    def test_witt_formula_equal_weights(self, q):
        alphabet = Alphabet.from_degrees((1,) * q)
        by_degree = enumerate_lyndon(alphabet, 7)
        for m in range(1, 8):
            assert len(by_degree[m]) == necklace_count(q, m)

    def test_enumeration_complete_and_duplicate_free(self):
        a = loop_alphabet(2, 2)
        by_degree = enumerate_lyndon(a, 5)
        for d in range(1, 6):
            words = [l.word.indices for l in by_degree[d]]
            assert len(words) == len(set(words))
            brute = {
                w
                for length in range(1, d + 1)
                for w in _all_words(4, length)
                if sum(a.degrees[i - 1] for i in w) == d and is_lyndon(w)
            }
            assert set(words) == brute


class TestFactorization:
    def test_soundness(self):
        by_degree = enumerate_lyndon(AB, 7)
        for d in range(2, 8):
            for l in by_degree[d]:
                left, right = l.standard_factorization
                assert is_lyndon(left.word.indices)
                assert is_lyndon(right.word.indices)
                assert left.word.indices + right.word.indices == l.word.indices
                assert left.word.indices < right.word.indices
                # right factor is the longest proper Lyndon suffix
                idx = l.word.indices
                lengths = [
                    len(idx) - s for s in range(1, len(idx)) if is_lyndon(idx[s:])
                ]
                assert len(right.word.indices) == max(lengths)

    def test_single_letters_do_not_factor(self):
        with pytest.raises(ValueError):
            standard_factorization((1,))


class TestBracketing:
    def test_single_letter(self):
        l = LyndonWord(Word(AB, (1,)))
        assert bracket_of(l).bracketing == NCPoly.letter(AB, 1)

    def test_two_letters(self):
        l = LyndonWord(Word(AB, (1, 2)))
        expected = NCPoly(AB, {Word(AB, (1, 2)): 1, Word(AB, (2, 1)): -1})
        assert bracket_of(l).bracketing == expected

    def test_aab_expansion(self):
        # [a,[a,b]] expanded by hand: aab - 2 aba + baa
        l = LyndonWord(Word(AB, (1, 1, 2)))
        expected = NCPoly(
            AB,
            {Word(AB, (1, 1, 2)): 1, Word(AB, (1, 2, 1)): -2, Word(AB, (2, 1, 1)): 1},
        )
        assert bracket_of(l).bracketing == expected

    def test_leading_term_triangularity(self):
        a = loop_alphabet(2, 2)
        by_degree = enumerate_lyndon(a, 6)
        for d in range(1, 7):
            for l in by_degree[d]:
                el = bracket_of(l)
                assert el.bracketing.min_lex_word() == l.word
                assert el.bracketing.coeff(l.word) == 1
                assert el.sphere_dim == d + 1

    def test_integer_coefficients(self):
        a = loop_alphabet(2, 2)
        for l in enumerate_lyndon(a, 6)[6]:
            for _w, c in bracket_of(l).bracketing.terms():
                assert isinstance(c, int)


class TestStandardWords:
    def test_exclusion_bigram_canonical(self):
        assert exclusion_bigram(loop_presentation(ManifoldModel(2, 2))) == (1, 2)

    def test_exclusion_for_free_presentation(self):
        assert exclusion_bigram(QuadraticPresentation(AB)) is None

    def test_non_commutator_relation_rejected(self):
        rel = NCPoly.monomial(Word(AB, (1, 2)))  # ab alone is not antisymmetric
        pres = QuadraticPresentation(AB, rel)
        with pytest.raises(PresentationError):
            exclusion_bigram(pres)

    def test_rank_one_standard_words(self):
        pres = loop_presentation(ManifoldModel(2, 1))
        std = standard_lyndon(pres, 5)
        assert [str(e.lyndon) for e in std[1]] == ["u1"]
        assert [str(e.lyndon) for e in std[2]] == ["u1'"]
        assert all(not std[d] for d in range(3, 6))

    def test_rank_two_degree_three(self):
        pres = loop_presentation(ManifoldModel(2, 2))
        std = standard_lyndon(pres, 3)
        words = {str(e.lyndon) for e in std[3]}
        assert len(words) == 5
        assert "u1u1'" not in words
        # PBW oracle: dim A_3 = 15 decomposes as
        # L3 + L2*L1 + C(L1 + 2, 3) with L1 = 2, L2 = 3
        l1, l2 = len(std[1]), len(std[2])
        assert (l1, l2) == (2, 3)
        l3 = 15 - l2 * l1 - math.comb(l1 + 2, 3)
        assert len(std[3]) == l3 == 5

    def test_free_standard_is_all_lyndon(self):
        pres = QuadraticPresentation(AB)
        std = standard_lyndon(pres, 5)
        all_lyndon = enumerate_lyndon(AB, 5)
        for d in range(1, 6):
            assert [e.lyndon for e in std[d]] == all_lyndon[d]


class TestLieDims:
    def test_rank_two(self):
        pres = loop_presentation(ManifoldModel(2, 2))
        dims = lie_dims(pres, 3)
        assert dims == {1: 2, 2: 3, 3: 5}

    def test_rank_one_abelian(self):
        pres = loop_presentation(ManifoldModel(2, 1))
        dims = lie_dims(pres, 8)
        assert dims[1] == 1 and dims[2] == 1
        assert all(dims[d] == 0 for d in range(3, 9))

    def test_n3_rank_one(self):
        pres = loop_presentation(ManifoldModel(3, 1))
        dims = lie_dims(pres, 6)
        assert dims == {1: 0, 2: 1, 3: 1, 4: 0, 5: 0, 6: 0}

    def test_counts_match_enumeration(self):
        pres = loop_presentation(ManifoldModel(2, 3))
        std = standard_lyndon(pres, 6)
        dims = lie_dims(pres, 6)
        for d in range(1, 7):
            assert dims[d] == len(std[d])

    @pytest.mark.parametrize("n,r", [(2, 1), (2, 2), (3, 2), (4, 2)])
    def test_cross_oracle_against_mobius(self, n, r):
        pres = loop_presentation(ManifoldModel(n, r))
        assert lie_dims(pres, 10) == sphere_summand_counts(n, r, 10)


class TestIndependence:
    def test_degree_one_rank_is_letter_count(self):
        pres = loop_presentation(ManifoldModel(2, 2))
        report = independence_certificate(pres, 1)
        assert report[1] == (2, 2, 2)

    def test_rank_two_degree_three_full_rank(self):
        pres = loop_presentation(ManifoldModel(2, 2))
        report = independence_certificate(pres, 3)
        assert report[3] == (5, 5, 15)

    def test_rank_one_degree_three_empty(self):
        pres = loop_presentation(ManifoldModel(2, 1))
        report = independence_certificate(pres, 3)
        assert report[3] == (0, 0, 2)

    def test_shared_letter_relation_still_full_rank(self):
        # [a,b] + [a,c] is [a, b+c] after a change of basis, so the standard
        # words must still be independent
        abc = Alphabet.from_degrees((1, 1, 1), labels=("a", "b", "c"))
        rel = NCPoly(
            abc,
            {
                Word(abc, (1, 2)): 1,
                Word(abc, (2, 1)): -1,
                Word(abc, (1, 3)): 1,
                Word(abc, (3, 1)): -1,
            },
        )
        pres = QuadraticPresentation(abc, rel)
        report = independence_certificate(pres, 4)
        for d, (count, rank, _dim) in report.items():
            assert count == rank, d

    def test_rank_deficiency_is_hard_failure(self, monkeypatch):
        # force a dependent row to exercise the defensive error path
        import loopspace.lyndon as lyndon_mod

        pres = loop_presentation(ManifoldModel(2, 2))
        real = lyndon_mod.standard_lyndon

        def duplicated(p, cap):
            table = real(p, cap)
            table[1] = [table[1][0], table[1][0]]
            return table

        monkeypatch.setattr(lyndon_mod, "standard_lyndon", duplicated)
        with pytest.raises(ComputationFailure) as err:
            independence_certificate(pres, 1)
        assert "degree 1" in str(err.value)
