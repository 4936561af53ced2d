import math

import networkx as nx
import pytest

from prism_silt.errors import CrossingPair, RankMismatch, WordNotInTriangulation, WrongCount
from prism_silt.perms import all_permutations, perm_of_triangulation, triangulation_of, weak_neighbors
from prism_silt.triangulations import (
    compatibility_graph,
    completions,
    enumerate_triangulations,
    flip,
    flip_graph,
    maximal_cells,
    maximal_compatible_sets,
    validate_triangulation,
)
from prism_silt.words import validate_word

W = validate_word


def T(*texts):
    return validate_triangulation([W(t) for t in texts])


class TestValidate:
    def test_valid(self):
        t = T("aab", "abb")
        assert t.n == 2 and len(t) == 2 and W("aab") in t

    def test_crossing(self):
        with pytest.raises(CrossingPair) as exc:
            T("abb", "bab")
        assert {str(exc.value.x), str(exc.value.y)} == {"abb", "bab"}

    def test_wrong_count(self):
        with pytest.raises(WrongCount):
            T("aab")
        with pytest.raises(WrongCount):
            validate_triangulation([])

    def test_rank_mismatch(self):
        with pytest.raises(RankMismatch):
            T("ab", "aab")

    def test_order_and_json(self):
        t = T("abb", "aab")
        assert [str(w) for w in t.ordered] == ["abb", "aab"]
        assert t.to_json() == {"n": 2, "words": ["abb", "aab"]}
        assert str(t) == "{abb, aab}"

    def test_equality_ignores_input_order(self):
        assert T("abb", "aab") == T("aab", "abb")
        assert hash(T("abb", "aab")) == hash(T("aab", "abb"))


class TestEnumerate:
    @pytest.mark.parametrize("n,count", [(1, 2), (2, 6), (3, 24), (4, 120)])
    def test_counts(self, n, count):
        assert len(enumerate_triangulations(n)) == count

    def test_rank_one(self):
        assert {frozenset(map(str, t.words)) for t in enumerate_triangulations(1)} == {
            frozenset({"ab"}), frozenset({"ba"})
        }

    @pytest.mark.parametrize("n", range(1, 6))
    def test_equals_permutation_image(self, n):
        found = {t.words for t in enumerate_triangulations(n)}
        image = {triangulation_of(w).words for w in all_permutations(n)}
        assert found == image

    @pytest.mark.parametrize("n", range(1, 5))
    def test_maximal_sets_are_maximal_cliques(self, n):
        ours = {s for s in maximal_compatible_sets(n)}
        cliques = {frozenset(c) for c in nx.find_cliques(compatibility_graph(n))}
        assert ours == cliques

    @pytest.mark.parametrize("n", range(1, 5))
    def test_no_extension(self, n):
        for t in enumerate_triangulations(n):
            assert completions(t.words, n) == []

    def test_deterministic(self):
        assert [t.words for t in enumerate_triangulations(3)] == [t.words for t in enumerate_triangulations(3)]


class TestCells:
    def test_identity(self):
        cells = maximal_cells(T("abb", "aab"))
        assert cells == [
            {("a", 0), ("b", 0), ("b", 1), ("b", 2)},
            {("a", 0), ("a", 1), ("b", 1), ("b", 2)},
            {("a", 0), ("a", 1), ("a", 2), ("b", 2)},
        ]

    @pytest.mark.parametrize("n", range(1, 5))
    def test_shape(self, n):
        for t in enumerate_triangulations(n):
            cells = t.maximal_cells
            assert len(cells) == n + 1
            assert all(len(c) == n + 2 for c in cells)
            for c1, c2 in zip(cells, cells[1:]):
                assert len(c1 & c2) == n + 1


class TestFlip:
    def test_example(self):
        t2, y = flip(T("aab", "abb"), W("abb"))
        assert str(y) == "bab" and t2 == T("aab", "bab")

    def test_missing(self):
        with pytest.raises(WordNotInTriangulation):
            flip(T("aab", "abb"), W("bab"))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_involution_and_count(self, n):
        for t in enumerate_triangulations(n):
            flips = set()
            for x in t.ordered:
                t2, y = flip(t, x)
                assert y != x and flip(t2, y) == (t, x)
                flips.add(t2.words)
            assert len(flips) == n

    @pytest.mark.parametrize("n", range(1, 5))
    def test_almost_complete_sets_have_two_completions(self, n):
        g = compatibility_graph(n)
        cliques = [c for c in nx.enumerate_all_cliques(g) if len(c) == n - 1] if n > 1 else [[]]
        assert cliques
        for c in cliques:
            assert len(completions(c, n)) == 2


class TestFlipGraph:
    def test_hexagon(self):
        g = flip_graph(2).to_networkx()
        assert nx.is_isomorphic(g, nx.cycle_graph(6))

    def test_rank_one(self):
        fg = flip_graph(1)
        assert len(fg.vertices) == 2 and fg.edges == [(0, 1)]

    @pytest.mark.parametrize("n", range(1, 5))
    def test_structure(self, n):
        fg = flip_graph(n)
        g = fg.to_networkx()
        assert g.number_of_nodes() == math.factorial(n + 1)
        assert g.number_of_edges() == math.factorial(n + 1) * n // 2
        assert nx.is_connected(g)
        assert {d for _, d in g.degree()} == {n}

    @pytest.mark.parametrize("n", range(1, 6))
    def test_edges_are_position_swaps(self, n):
        fg = flip_graph(n)
        label = [perm_of_triangulation(t) for t in fg.vertices]
        mapped = {frozenset((label[i], label[j])) for i, j in fg.edges}
        swaps = {frozenset((w, u)) for w in all_permutations(n) for u in weak_neighbors(w)}
        assert mapped == swaps

    def test_permutohedron_rank_three(self):
        g = flip_graph(3).to_networkx()
        swap = nx.Graph()
        swap.add_edges_from((w, u) for w in all_permutations(3) for u in weak_neighbors(w))
        assert nx.is_isomorphic(g, swap)
        assert g.number_of_nodes() == 24 and g.number_of_edges() == 36
