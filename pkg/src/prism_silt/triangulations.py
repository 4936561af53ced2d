"""Triangulations of the prism as maximal sets of pairwise non-crossing words."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

import networkx as nx

from .errors import CrossingPair, NotNested, RankMismatch, WordNotInTriangulation, WrongCount
from .words import Word, crossing, enumerate_words

Vertex = tuple[str, int]  # ("a", i) or ("b", i)


def _chain(words: Iterable[Word]) -> list[Word]:
    """Words ordered by strictly increasing a-sets; NotNested if impossible."""
    ordered = sorted(words, key=lambda w: (w.count_a(), str(w)))
    for j, w in enumerate(ordered):
        if w.count_a() != j + 1:
            raise NotNested(f"a-counts of {[str(u) for u in ordered]} are not 1..n")
        if j and not ordered[j - 1].a_set < w.a_set:
            raise NotNested(f"a-set of {ordered[j - 1]} is not contained in that of {w}")
    return ordered


@dataclass(frozen=True)
class Triangulation:
    n: int
    words: frozenset[Word]
    _ordered: tuple[Word, ...] = field(default=(), compare=False, repr=False)

    def __iter__(self):
        return iter(self.ordered)

    def __len__(self):
        return len(self.words)

    def __contains__(self, w):
        return w in self.words

    @property
    def ordered(self) -> tuple[Word, ...]:
        """Internal words by increasing number of a's (the nested chain)."""
        return self._ordered

    @cached_property
    def maximal_cells(self) -> list[frozenset[Vertex]]:
        return maximal_cells(self)

    def to_json(self) -> dict:
        return {"n": self.n, "words": [str(w) for w in self.ordered]}

    def __str__(self):
        return "{" + ", ".join(str(w) for w in self.ordered) + "}"


def validate_triangulation(words: Iterable[Word]) -> Triangulation:
    ws = frozenset(words)
    if not ws:
        raise WrongCount("empty word set")
    ranks = {w.n for w in ws}
    if len(ranks) != 1:
        raise RankMismatch(f"words of ranks {sorted(ranks)}")
    n = ranks.pop()
    if len(ws) != n:
        raise WrongCount(f"{len(ws)} words given, a triangulation has {n}")
    for x, y in itertools.combinations(sorted(ws), 2):
        if crossing(x, y):
            raise CrossingPair(x, y)
    # implied by the two checks above; kept as a guard on the implementation
    ordered = _chain(ws)
    return Triangulation(n, ws, tuple(ordered))


def maximal_cells(t: Triangulation) -> list[frozenset[Vertex]]:
    """The n+1 full-dimensional simplices, read off the chain of a-sets.

    With the chain A_0 < A_1 < ... < A_{n-1} and A_{-1} = {}, A_n = {0..n}, cell j
    is {a_v : v in A_j} | {b_v : v not in A_{j-1}}.
    """
    n = t.n
    full = frozenset(range(n + 1))
    chain = [frozenset()] + [w.a_set for w in t.ordered] + [full]
    cells = []
    for j in range(n + 1):
        top, below = chain[j + 1], chain[j]
        cell = {("a", v) for v in top} | {("b", v) for v in full - below}
        cells.append(frozenset(cell))
    return cells


def compatibility_graph(n: int) -> nx.Graph:
    g = nx.Graph()
    words = enumerate_words(n)
    g.add_nodes_from(words)
    g.add_edges_from((x, y) for x, y in itertools.combinations(words, 2) if not crossing(x, y))
    return g


def maximal_compatible_sets(n: int) -> list[frozenset[Word]]:
    """Every maximal pairwise non-crossing word set, by plain backtracking."""
    words = enumerate_words(n)
    ok = [[not crossing(x, y) for y in words] for x in words]
    found: list[frozenset[Word]] = []

    def is_maximal(chosen: list[int]) -> bool:
        return not any(
            i not in chosen and all(ok[i][j] for j in chosen) for i in range(len(words))
        )

    def extend(chosen: list[int], candidates: list[int]):
        # candidates: indices above the last chosen one, compatible with all chosen
        if not candidates:
            if is_maximal(chosen):
                found.append(frozenset(words[i] for i in chosen))
            return
        for k, c in enumerate(candidates):
            extend(chosen + [c], [d for d in candidates[k + 1:] if ok[c][d]])

    extend([], list(range(len(words))))
    return found


def enumerate_triangulations(n: int) -> list[Triangulation]:
    """All triangulations, found without reference to permutations."""
    result = []
    for s in maximal_compatible_sets(n):
        if len(s) != n:
            raise WrongCount(f"maximal compatible set of size {len(s)} at rank {n}")
        result.append(validate_triangulation(s))
    return result


def completions(partial: Iterable[Word], n: int) -> list[Word]:
    """Words compatible with (and not in) a partial triangulation."""
    part = set(partial)
    return [
        w for w in enumerate_words(n)
        if w not in part and not any(crossing(w, x) for x in part)
    ]


def flip(t: Triangulation, x: Word) -> tuple[Triangulation, Word]:
    if x not in t.words:
        raise WordNotInTriangulation(f"{x} is not in {t}")
    rest = t.words - {x}
    options = completions(rest, t.n)
    if len(options) != 2 or x not in options:
        raise AssertionError(f"{sorted(map(str, rest))} has completions {options}, expected 2")
    (y,) = [w for w in options if w != x]
    return validate_triangulation(rest | {y}), y


@dataclass
class FlipGraph:
    n: int
    vertices: list[Triangulation]
    edges: list[tuple[int, int]]

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(len(self.vertices)))
        g.add_edges_from(self.edges)
        return g


def flip_graph(n: int) -> FlipGraph:
    vertices = enumerate_triangulations(n)
    index = {t.words: i for i, t in enumerate(vertices)}
    edges = set()
    for i, t in enumerate(vertices):
        for x in t.ordered:
            u, _ = flip(t, x)
            j = index[u.words]
            edges.add((min(i, j), max(i, j)))
    return FlipGraph(n, vertices, sorted(edges))
