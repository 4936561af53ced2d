import pytest

from prism_silt.algebra.complexes import hom_complex_nonzero
from prism_silt.errors import CrossingPair, RankMismatch, VerificationFailed, WordNotInComplex, WrongCount
from prism_silt.perms import Permutation, all_permutations
from prism_silt.silting import (
    MIZUNO_ORDER,
    SiltingComplex,
    calibrate_convention,
    direct_sum_complexes,
    is_presilting_realized,
    mizuno_ideal,
    mizuno_pair,
    mutate,
    pair_of_silting,
    silting_of_triangulation,
    triangulation_of_silting,
)
from prism_silt.triangulations import enumerate_triangulations
from prism_silt.words import validate_word

W = validate_word


def silt(*words):
    return SiltingComplex.of(W(w) for w in words)


class TestSiltingComplex:
    def test_wrong_count(self):
        with pytest.raises(WrongCount):
            silt("aab")
        with pytest.raises(WrongCount):
            SiltingComplex.of([])

    def test_crossing(self):
        with pytest.raises(CrossingPair):
            silt("aba", "bab")

    def test_mixed_rank(self):
        with pytest.raises(RankMismatch):
            SiltingComplex(2, frozenset({W("aab"), W("aabb")}))

    def test_order_and_json(self):
        s = silt("bab", "aab")
        assert [str(w) for w in s.ordered] == ["aab", "bab"]
        assert s.to_json() == {"n": 2, "words": ["aab", "bab"]}
        assert s.g_vectors() == {"aab": (0, 1), "bab": (-1, 1)}

    @pytest.mark.parametrize("n", range(1, 5))
    def test_round_trip(self, n):
        for t in enumerate_triangulations(n):
            assert triangulation_of_silting(silting_of_triangulation(t)) == t


class TestMutation:
    def test_example(self):
        assert mutate(silt("aab", "abb"), W("abb")) == silt("aab", "bab")

    @pytest.mark.parametrize("n", range(1, 5))
    def test_involution(self, n):
        for t in enumerate_triangulations(n):
            s = silting_of_triangulation(t)
            for x in s.words:
                m = mutate(s, x)
                (y,) = m.words - s.words
                assert mutate(m, y) == s

    def test_missing_word(self):
        with pytest.raises(WordNotInComplex):
            mutate(silt("aab", "abb"), W("bba"))


class TestRealization:
    @pytest.mark.parametrize("n", range(1, 4))
    def test_presilting(self, n, pi):
        for t in enumerate_triangulations(n):
            assert is_presilting_realized(pi(n), t.words)

    def test_crossing_not_presilting(self, pibar):
        assert not is_presilting_realized(pibar(2), [W("aba"), W("bab")])

    def test_direct_sum(self, pi):
        s = silt("aba", "abb")
        c = s.realize(pi(2))
        assert c.minus == (2,) and sorted(c.zero) == [1, 1]
        assert not hom_complex_nonzero(c, c)
        with pytest.raises(ValueError):
            direct_sum_complexes([])


class TestPairs:
    @pytest.mark.parametrize("words, modules, shifted", [
        (("aab", "abb"), ("aab", "abb"), ()),
        (("baa", "bab"), ("bab",), (1,)),
        (("baa", "bba"), (), (1, 2)),
    ])
    def test_split(self, words, modules, shifted):
        p = pair_of_silting(silt(*words))
        assert tuple(str(w) for w in p.module_words) == modules
        assert p.shifted == shifted and p.size == 2

    @pytest.mark.parametrize("n", range(1, 5))
    def test_support_avoids_shifted(self, n, pi):
        for t in enumerate_triangulations(n):
            p = pair_of_silting(silting_of_triangulation(t))
            m = p.module(pi(n))
            assert all(m.dim_at(k) == 0 for k in p.shifted)


class TestMizuno:
    def test_convention(self):
        assert calibrate_convention(2) == MIZUNO_ORDER == "forward"

    def test_reverse_fails_somewhere(self):
        assert not all(mizuno_pair(w, order="reverse").verdict for w in all_permutations(2))

    def test_identity_and_longest(self):
        for n in range(1, 4):
            r = mizuno_pair(Permutation.identity(n))
            assert r.verdict and r.pair.shifted == ()
            r = mizuno_pair(Permutation.longest(n))
            assert r.verdict and r.module.is_zero() and r.pair.shifted == tuple(range(1, n + 1))

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_all(self, n):
        for w in all_permutations(n):
            assert mizuno_pair(w, strict=True).verdict

    def test_reduced_word_independence(self, pi):
        for w in all_permutations(3):
            assert mizuno_ideal(w, pi(3), "smallest") == mizuno_ideal(w, pi(3), "largest")

    def test_json(self):
        out = mizuno_pair(Permutation.parse("231")).to_json()
        assert out["shifted"] == [1] and out["module_words"] == ["bab"] and out["verdict"]

    def test_bad_order(self):
        with pytest.raises(ValueError):
            mizuno_ideal(Permutation.identity(2), order="sideways")

    def test_rank_mismatch(self, pi):
        with pytest.raises(RankMismatch):
            mizuno_pair(Permutation.identity(2), pi(3))

    def test_require(self, pi):
        r = mizuno_pair(Permutation.identity(2))
        r.checks["module_iso"] = False
        with pytest.raises(VerificationFailed):
            r.require()
