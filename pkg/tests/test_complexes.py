import pytest

from prism_silt.algebra.complexes import (
    hom_complex_nonzero,
    minimal_presentation,
    tau,
    word_complex,
    word_module,
)
from prism_silt.algebra.modules import iso_test, projective
from prism_silt.errors import NotModuleWord
from prism_silt.words import Kind, classify, shifted_projective_word, support_interval, enumerate_words, g_vector, projective_word, tau_word, validate_word

W = validate_word


def module_words(n):
    return [w for w in enumerate_words(n) if classify(w).is_module]


class TestWordComplex:
    @pytest.mark.parametrize("word, minus, zero", [
        ("abb", (), (1,)),
        ("aab", (), (2,)),
        ("bba", (2,), ()),
        ("bab", (1,), (2,)),
        ("aba", (2,), (1,)),
        ("aabbbab", (5,), (2, 6)),
        ("bababaa", (1, 3, 5), (2, 4)),
    ])
    def test_terms(self, pibar, word, minus, zero):
        w = W(word)
        c = word_complex(pibar(w.n), w)
        assert (c.minus, c.zero) == (minus, zero)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_g_vectors_and_radical(self, n, pi, pibar):
        for w in enumerate_words(n):
            for alg in (pi(n), pibar(n)):
                c = word_complex(alg, w)
                assert c.g_vector() == g_vector(w)
                assert c.is_radical()

    @pytest.mark.parametrize("n", range(1, 5))
    def test_cokernel_is_word_module_over_pibar(self, n, pibar):
        for w in module_words(n):
            assert iso_test(word_complex(pibar(n), w).cokernel(), word_module(pibar(n), w)).isomorphic

    @pytest.mark.parametrize("n", range(1, 5))
    def test_presentation_recovers_complex_over_pi(self, n, pi):
        for w in module_words(n):
            m = word_complex(pi(n), w).cokernel()
            assert minimal_presentation(m).g_vector() == g_vector(w)

    def test_projective_presentation(self, pi):
        for i in range(1, 4):
            c = minimal_presentation(projective(pi(3), i))
            assert c.minus == () and c.zero == (i,)


class TestWordModule:
    @pytest.mark.parametrize("n", range(1, 5))
    def test_projective_words(self, n, pibar):
        for j in range(1, n + 1):
            assert iso_test(word_module(pibar(n), projective_word(n, j)), projective(pibar(n), j)).isomorphic

    @pytest.mark.parametrize("word", ["bba", "baa", "bbba"])
    def test_shifted_rejected(self, pibar, word):
        w = W(word)
        with pytest.raises(NotModuleWord):
            word_module(pibar(w.n), w)

    def test_dims(self, pibar):
        assert word_module(pibar(2), W("bab")).dims == (0, 1)
        assert word_module(pibar(3), W("abab")).dims == (1, 1, 1)


class TestHomComplex:
    def test_self(self, pi):
        for w in enumerate_words(3):
            c = word_complex(pi(3), w)
            assert not hom_complex_nonzero(c, c)

    def test_known_pairs(self, pibar):
        alg = pibar(2)
        bab, abb, aab = (word_complex(alg, W(s)) for s in ("bab", "abb", "aab"))
        assert hom_complex_nonzero(bab, abb)
        assert not hom_complex_nonzero(aab, bab)

    def test_shifted_target(self, pibar):
        alg = pibar(3)
        for k in range(1, 4):
            q = word_complex(alg, shifted_projective_word(3, k))
            for w in enumerate_words(3):
                assert not hom_complex_nonzero(word_complex(alg, w), q)


class TestTau:
    @pytest.mark.parametrize("n", range(2, 5))
    def test_matches_word_rule(self, n, pibar):
        alg = pibar(n)
        for w in module_words(n):
            if classify(w).kind is Kind.PROJECTIVE:
                assert tau(word_module(alg, w)).is_zero()
                continue
            assert iso_test(tau(word_module(alg, w)), word_module(alg, tau_word(w))).isomorphic

    def test_example(self, pibar):
        alg = pibar(5)
        assert iso_test(tau(word_module(alg, W("aababa"))), word_module(alg, W("bbaabb"))).isomorphic

    def test_projective(self, pi):
        assert tau(projective(pi(3), 2)).is_zero()


@pytest.mark.parametrize("n", range(1, 6))
def test_support_matches_interval(n, pi, pibar):
    for w in module_words(n):
        expected = set(support_interval(w))
        thin = word_module(pibar(n), w)
        assert {v for v in range(1, n + 1) if thin.dim_at(v)} == expected
        assert thin.dims == tuple(int(v in expected) for v in range(1, n + 1))
        full = word_complex(pi(n), w).cokernel()
        assert {v for v in range(1, n + 1) if full.dim_at(v)} == expected
