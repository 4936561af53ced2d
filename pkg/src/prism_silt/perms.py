"""Permutations of {0, ..., n} and their dictionary with prism triangulations.

Conventions: ``Permutation.one_line`` lists i_0 i_1 ... i_n.  The simple
reflection s_i is the transposition (i-1 i).  Multiplying on the right by s_i
swaps the *values* i-1 and i in the one-line form; multiplying on the left
swaps the *positions* i-1 and i.  With these conventions a reduced word
``[i_1, ..., i_k]`` denotes w = s_{i_1} s_{i_2} ... s_{i_k}, built from the
identity by right-multiplying in that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _itperms
from typing import Iterable, Sequence

from .errors import NotAPermutation, NotJoinIrreducible, NotNested, ParseError
from .triangulations import Triangulation, validate_triangulation
from .words import A, B, Word


@dataclass(frozen=True, order=True)
class Permutation:
    one_line: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.one_line) != list(range(len(self.one_line))):
            raise NotAPermutation(f"{self.one_line} is not a permutation of 0..{len(self.one_line) - 1}")
        if len(self.one_line) < 2:
            raise NotAPermutation("need at least two letters (rank n >= 1)")

    @property
    def n(self) -> int:
        return len(self.one_line) - 1

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(tuple(range(n, -1, -1)))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """One-line text: "2103", or comma separated "10,2,...".

        Values 1..n+1 (as printed in tables that count from one) are shifted
        down automatically, since they can never be confused with 0..n.
        """
        text = text.strip()
        try:
            if "," in text:
                values = [int(t) for t in text.split(",")]
            else:
                values = [int(ch) for ch in text]
        except ValueError as exc:
            raise ParseError(f"cannot parse permutation {text!r}") from exc
        if values and 0 not in values and sorted(values) == list(range(1, len(values) + 1)):
            values = [v - 1 for v in values]
        try:
            return cls(tuple(values))
        except NotAPermutation as exc:
            raise ParseError(str(exc)) from exc

    def __str__(self):
        if self.n <= 9:
            return "".join(str(v) for v in self.one_line)
        return ",".join(str(v) for v in self.one_line)

    def to_json(self) -> dict:
        return {"n": self.n, "one_line": list(self.one_line)}

    def swap_positions(self, j: int) -> "Permutation":
        v = list(self.one_line)
        v[j], v[j + 1] = v[j + 1], v[j]
        return Permutation(tuple(v))

    def times_simple(self, i: int) -> "Permutation":
        """Right multiplication by s_i: swap the values i-1 and i."""
        swap = {i - 1: i, i: i - 1}
        return Permutation(tuple(swap.get(v, v) for v in self.one_line))

    def simple_times(self, i: int) -> "Permutation":
        """Left multiplication by s_i: swap the positions i-1 and i."""
        return self.swap_positions(i - 1)


def all_permutations(n: int) -> list[Permutation]:
    return [Permutation(p) for p in _itperms(range(n + 1))]


def length(w: Permutation) -> int:
    v = w.one_line
    return sum(1 for p in range(len(v)) for q in range(p + 1, len(v)) if v[p] > v[q])


def descents(w: Permutation) -> list[int]:
    """Positions l (1..n) with i_{l-1} > i_l."""
    v = w.one_line
    return [l for l in range(1, len(v)) if v[l - 1] > v[l]]


def reduced_word(w: Permutation, strategy: str = "smallest") -> list[int]:
    """Reduced expression for w, peeling off left descents.

    ``strategy="smallest"`` always takes the smallest available left descent,
    which yields the lexicographically smallest reduced word; ``"largest"``
    gives a second, generally different, reduced word.
    """
    if strategy not in ("smallest", "largest"):
        raise ValueError(f"unknown strategy {strategy!r}")
    word = []
    while True:
        ds = descents(w)
        if not ds:
            return word
        i = ds[0] if strategy == "smallest" else ds[-1]
        word.append(i)
        w = w.simple_times(i)


def compose_word(n: int, word: Sequence[int]) -> Permutation:
    w = Permutation.identity(n)
    for i in word:
        w = w.times_simple(i)
    return w


def triangulation_of(w: Permutation) -> Triangulation:
    """T_w: internal word X_j has 'a' exactly at the values i_0, ..., i_j (j < n)."""
    n = w.n
    words = []
    a_values: set[int] = set()
    for j in range(n):
        a_values.add(w.one_line[j])
        words.append(Word(tuple(A if v in a_values else B for v in range(n + 1))))
    return validate_triangulation(words)


def maximal_cells_of(w: Permutation) -> list[frozenset[tuple[str, int]]]:
    """Cells {a_{i_0}, ..., a_{i_j}, b_{i_j}, ..., b_{i_n}} computed directly from w."""
    v = w.one_line
    return [
        frozenset({("a", x) for x in v[: j + 1]} | {("b", x) for x in v[j:]})
        for j in range(len(v))
    ]


def perm_of_triangulation(t: Triangulation | Iterable[Word]) -> Permutation:
    words = t.ordered if isinstance(t, Triangulation) else sorted(t, key=lambda w: w.count_a())
    if not words:
        raise NotNested("empty word set")
    n = words[0].n
    if len(words) != n:
        raise NotNested(f"{len(words)} words at rank {n}")
    one_line = []
    previous: frozenset[int] = frozenset()
    for w in words:
        new = w.a_set - previous
        if not previous <= w.a_set or len(new) != 1:
            raise NotNested(f"a-sets do not grow by one element at {w}")
        one_line.extend(new)
        previous = w.a_set
    one_line.extend(set(range(n + 1)) - previous)
    return Permutation(tuple(one_line))


def weak_neighbors(w: Permutation) -> list[Permutation]:
    """Permutations differing from w by one adjacent-position swap."""
    return [w.swap_positions(j) for j in range(w.n)]


def join_irreducible_word(w: Permutation) -> Word:
    """x_{i_j} = 'a' for j < l, where l is the unique descent of w.

    The image is every word except the projective words a^j b^(n+1-j); it
    does contain the shifted words, e.g. 10 -> ba.
    """
    ds = descents(w)
    if len(ds) != 1:
        raise NotJoinIrreducible(f"{w} has {len(ds)} descents")
    (l,) = ds
    a_values = set(w.one_line[:l])
    return Word(tuple(A if v in a_values else B for v in range(w.n + 1)))


def join_irreducible_module_word(w: Permutation) -> Word:
    """Letter-swapped form of :func:`join_irreducible_word`.

    This one is a bijection from one-descent permutations onto the module
    words, i.e. onto the indecomposable tau-rigid modules.
    """
    x = join_irreducible_word(w)
    return Word(tuple(B if b == A else A for b in x.bits))
