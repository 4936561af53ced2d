import itertools
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from prism_silt.errors import DegenerateSimplex, NotWordSimplex, RankMismatch
from prism_silt.geometry import (
    PrismGeometry,
    affine_rank,
    affinely_independent,
    bareiss_det,
    bareiss_rank,
    circuit_witness,
    interiors_intersect,
    is_internal,
    reference_total_sq,
    simplex_of_word,
    simplex_volume_sq,
    verify_triangulation_geometry,
    word_of_simplex,
)
from prism_silt.perms import Permutation, all_permutations, triangulation_of
from prism_silt.triangulations import enumerate_triangulations
from prism_silt.words import crossing, enumerate_words, validate_word

W = validate_word
small_ints = st.integers(-4, 4)


def fraction_rank(rows):
    """Plain Gaussian elimination over Q, as an independent oracle."""
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((k for k in range(rank, len(m)) if m[k][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for k in range(len(m)):
            if k != rank and m[k][c] != 0:
                f = m[k][c] / m[rank][c]
                m[k] = [x - f * y for x, y in zip(m[k], m[rank])]
        rank += 1
    return rank


class TestExactLinearAlgebra:
    @given(st.lists(st.lists(small_ints, min_size=4, max_size=4), min_size=1, max_size=5))
    def test_rank_matches_rational_elimination(self, rows):
        assert bareiss_rank(rows) == fraction_rank(rows)

    @given(st.integers(1, 5).flatmap(lambda k: st.lists(st.lists(small_ints, min_size=k, max_size=k), min_size=k, max_size=k)))
    def test_det_matches_numpy(self, m):
        assert bareiss_det(m) == round(np.linalg.det(np.array(m, dtype=float)))

    def test_fraction_entries(self):
        assert bareiss_rank([[Fraction(1, 2), 1], [1, 2]]) == 1

    def test_det_non_square(self):
        with pytest.raises(ValueError):
            bareiss_det([[1, 2]])


class TestPrism:
    def test_points_match_matrix(self):
        g = PrismGeometry(2)
        assert g.points[("a", 1)] == (0, 1, 0, 1, 0)
        assert g.points[("b", 2)] == (0, 0, 1, 0, 1)
        assert all(isinstance(x, Fraction) for x in g.points[("a", 0)])

    def test_facets_and_circuits(self):
        g = PrismGeometry(3)
        assert len(g.facets) == 2 + 4
        assert len(g.circuits) == math.comb(4, 2)
        assert (frozenset({("a", 0), ("b", 1)}), frozenset({("a", 1), ("b", 0)})) in g.circuits

    @pytest.mark.parametrize("n", range(1, 5))
    def test_dimension(self, n):
        g = PrismGeometry(n)
        assert affine_rank(list(g.points.values())) == n + 1

    def test_bad_rank(self):
        with pytest.raises(ValueError):
            PrismGeometry(0)


class TestSimplices:
    def test_simplex_of_word(self):
        g = PrismGeometry(2)
        assert simplex_of_word(g, W("abb")) == {("a", 0), ("b", 1), ("b", 2)}
        assert simplex_of_word(g, W("aab")) == {("a", 0), ("a", 1), ("b", 2)}
        with pytest.raises(RankMismatch):
            simplex_of_word(g, W("ab"))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_injective_and_inverse(self, n):
        g = PrismGeometry(n)
        simp = {w: simplex_of_word(g, w) for w in enumerate_words(n)}
        assert len(set(simp.values())) == len(simp)
        assert all(word_of_simplex(g, s) == w for w, s in simp.items())

    def test_not_word_simplex(self):
        g = PrismGeometry(2)
        with pytest.raises(NotWordSimplex):
            word_of_simplex(g, {("a", 0), ("b", 0), ("a", 1)})
        with pytest.raises(NotWordSimplex):
            word_of_simplex(g, {("a", 0), ("a", 1), ("a", 2)})

    @pytest.mark.parametrize("n", range(1, 6))
    def test_word_simplices_independent(self, n):
        g = PrismGeometry(n)
        assert all(affinely_independent(g.coordinates(simplex_of_word(g, w))) for w in enumerate_words(n))

    def test_repeated_point(self):
        g = PrismGeometry(2)
        assert not affinely_independent([g.points[("a", 0)], g.points[("a", 0)]])

    def test_circuit_is_planar(self):
        g = PrismGeometry(3)
        pts = [g.points[v] for v in [("a", 0), ("b", 2), ("a", 2), ("b", 0)]]
        assert not affinely_independent(pts)
        assert affine_rank(pts) == 2


class TestInternal:
    def test_examples(self):
        g = PrismGeometry(2)
        assert is_internal(g, {("a", 0), ("a", 1), ("b", 2)})
        assert not is_internal(g, {("a", 0), ("a", 1), ("a", 2)})

    def test_unknown_vertex(self):
        with pytest.raises(ValueError):
            is_internal(PrismGeometry(1), {("c", 0)})

    @pytest.mark.parametrize("n", range(1, 6))
    def test_exactly_word_simplices(self, n):
        g = PrismGeometry(n)
        internal = {
            "".join(c) for c in itertools.product("ab", repeat=n + 1)
            if is_internal(g, {(x, i) for i, x in enumerate(c)})
        }
        assert internal == {str(w) for w in enumerate_words(n)}

    @pytest.mark.parametrize("n", range(1, 5))
    def test_skipping_an_index_is_boundary(self, n):
        g = PrismGeometry(n)
        for s in itertools.combinations(g.vertices, n + 1):
            if len({i for _, i in s}) < n + 1:
                assert not is_internal(g, s)


class TestIntersection:
    def test_examples(self):
        g = PrismGeometry(2)
        s = lambda t: simplex_of_word(g, W(t))
        assert interiors_intersect(g, s("abb"), s("bab"))
        assert circuit_witness(g, s("abb"), s("bab")) == (
            frozenset({("a", 0), ("b", 1)}), frozenset({("a", 1), ("b", 0)})
        )
        assert not interiors_intersect(g, s("aab"), s("abb"))
        assert not interiors_intersect(g, s("aba"), s("aba"))

    def test_requires_word_simplices(self):
        g = PrismGeometry(2)
        with pytest.raises(NotWordSimplex):
            interiors_intersect(g, {("a", 0), ("a", 1)}, simplex_of_word(g, W("abb")))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_matches_crossing(self, n):
        g = PrismGeometry(n)
        ws = enumerate_words(n)
        simp = {w: simplex_of_word(g, w) for w in ws}
        for x, y in itertools.product(ws, repeat=2):
            assert interiors_intersect(g, simp[x], simp[y]) == crossing(x, y)

    @pytest.mark.parametrize("n", [2, 3])
    def test_matches_linear_programming(self, n):
        """Relative interiors meet iff a strictly positive LP is feasible (float oracle)."""
        scipy_opt = pytest.importorskip("scipy.optimize")
        g = PrismGeometry(n)
        ws = enumerate_words(n)
        for x, y in itertools.combinations(ws, 2):
            p = np.array(g.coordinates(simplex_of_word(g, x)), dtype=float)
            q = np.array(g.coordinates(simplex_of_word(g, y)), dtype=float)
            k = n + 1
            # variables: lambda (k), mu (k), t; maximise t with lambda, mu >= t
            a_eq = np.zeros((p.shape[1] + 2, 2 * k + 1))
            a_eq[: p.shape[1], :k] = p.T
            a_eq[: p.shape[1], k:2 * k] = -q.T
            a_eq[p.shape[1], :k] = 1
            a_eq[p.shape[1] + 1, k:2 * k] = 1
            b_eq = np.zeros(p.shape[1] + 2)
            b_eq[-2:] = 1
            a_ub = np.zeros((2 * k, 2 * k + 1))
            a_ub[:, :2 * k] = -np.eye(2 * k)
            a_ub[:, -1] = 1
            c = np.zeros(2 * k + 1)
            c[-1] = -1
            res = scipy_opt.linprog(c, A_ub=a_ub, b_ub=np.zeros(2 * k), A_eq=a_eq, b_eq=b_eq,
                                    bounds=[(0, 1)] * (2 * k + 1))
            meets = res.status == 0 and -res.fun > 1e-9
            assert meets == crossing(x, y), (x, y)


class TestVolumes:
    def test_unit_segment(self):
        assert simplex_volume_sq([(0,), (1,)]) == 1

    def test_triangle(self):
        assert simplex_volume_sq([(0, 0), (1, 0), (0, 1)]) == Fraction(1, 4)

    def test_degenerate(self):
        with pytest.raises(DegenerateSimplex):
            simplex_volume_sq([(0, 0), (1, 1), (2, 2)])
        with pytest.raises(DegenerateSimplex):
            simplex_volume_sq([])

    @pytest.mark.parametrize("n", range(1, 5))
    def test_cells_share_volume_and_total(self, n):
        g = PrismGeometry(n)
        values, totals = set(), set()
        for w in all_permutations(n):
            vols = {simplex_volume_sq(g.coordinates(c)) for c in triangulation_of(w).maximal_cells}
            values |= vols
            totals.add((n + 1) ** 2 * min(vols))
        assert len(values) == 1 and len(totals) == 1
        assert totals == {reference_total_sq(g)} == {g.volume_sq()}

    def test_prism_volume_value(self):
        # triangle of area sqrt(3)/2 times a segment of length sqrt(2)
        assert PrismGeometry(2).volume_sq() == Fraction(3, 2)


class TestReport:
    def test_identity_passes(self):
        g = PrismGeometry(2)
        report = verify_triangulation_geometry(g, triangulation_of(Permutation.parse("012")))
        assert report.passed
        assert set(report.checks) >= {"equal_volumes", "reference_total", "shared_facets", "interiors_disjoint"}

    def test_crossing_pair_witness(self):
        g = PrismGeometry(2)
        report = verify_triangulation_geometry(g, [W("abb"), W("bab")])
        assert not report.passed
        assert not report.checks["interiors_disjoint"]
        assert report.witnesses["interiors_disjoint"]["circuit"] == [["a0", "b1"], ["a1", "b0"]]

    def test_wrong_count(self):
        report = verify_triangulation_geometry(PrismGeometry(2), [W("abb")])
        assert not report.checks["word_count"]

    def test_rank_one(self):
        g = PrismGeometry(1)
        assert all(verify_triangulation_geometry(g, t).passed for t in enumerate_triangulations(1))

    @pytest.mark.parametrize("n", range(1, 5))
    def test_all_triangulations_pass(self, n):
        g = PrismGeometry(n)
        for t in enumerate_triangulations(n):
            report = verify_triangulation_geometry(g, t)
            assert report.passed, report.to_json()

    def test_json(self):
        data = verify_triangulation_geometry(PrismGeometry(1), [W("ab")]).to_json()
        assert data["passed"] and data["words"] == ["ab"]
