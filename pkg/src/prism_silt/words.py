"""Words over {a, b} of length n+1 that use both letters.

A word ``x_0 x_1 ... x_n`` simultaneously names an internal n-simplex of the
prism, an indecomposable tau-rigid pair and an indecomposable two-term
presilting complex over the type A preprojective algebra of rank n.  All the
combinatorial criteria below operate on the word alone.

Letters are stored as bits, ``a = 0`` and ``b = 1``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    AllSameLetter,
    IsProjective,
    IsShiftedProjective,
    NotInImage,
    RankMismatch,
    TooShort,
    WrongAlphabet,
)

A, B = 0, 1
_LETTERS = "ab"

GVector = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Word:
    bits: tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) < 2:
            raise TooShort(f"word of length {len(self.bits)}; need at least 2")
        if any(b not in (A, B) for b in self.bits):
            raise WrongAlphabet(f"bits must be 0 or 1, got {self.bits}")
        if len(set(self.bits)) == 1:
            raise AllSameLetter(f"{self} uses only one letter")

    @classmethod
    def parse(cls, text: str) -> "Word":
        return validate_word(text)

    @property
    def n(self) -> int:
        return len(self.bits) - 1

    def __len__(self):
        return len(self.bits)

    def __getitem__(self, i):
        return _LETTERS[self.bits[i]]

    def __str__(self):
        return "".join(_LETTERS[b] for b in self.bits)

    def __repr__(self):
        return f"Word({str(self)!r})"

    @property
    def a_set(self) -> frozenset[int]:
        return frozenset(i for i, b in enumerate(self.bits) if b == A)

    def count_a(self) -> int:
        return self.bits.count(A)

    def to_json(self) -> dict:
        return {"n": self.n, "word": str(self)}

    @classmethod
    def from_json(cls, data: dict) -> "Word":
        w = validate_word(data["word"])
        if "n" in data and data["n"] != w.n:
            raise RankMismatch(f"word {w} has rank {w.n}, JSON says {data['n']}")
        return w


def validate_word(symbols: str | Sequence) -> Word:
    """Build a Word from a string (or sequence) of 'a'/'b' symbols."""
    letters = list(symbols)
    if len(letters) < 2:
        raise TooShort(f"{symbols!r} is shorter than 2 letters")
    bad = [s for s in letters if s not in ("a", "b")]
    if bad:
        raise WrongAlphabet(f"{symbols!r} contains symbols outside {{a, b}}: {bad[:3]}")
    if len(set(letters)) == 1:
        raise AllSameLetter(f"{symbols!r} uses only one letter")
    return Word(tuple(A if s == "a" else B for s in letters))


def enumerate_words(n: int) -> list[Word]:
    """All 2^(n+1) - 2 words of rank n, sorted by a-count then lexicographically."""
    if n < 1:
        raise ValueError("rank must be at least 1")
    words = [
        Word(bits)
        for bits in itertools.product((A, B), repeat=n + 1)
        if len(set(bits)) == 2
    ]
    return sorted(words, key=word_sort_key)


def word_sort_key(w: Word):
    return (-w.count_a(), str(w))


def _check_same_rank(x: Word, y: Word):
    if x.n != y.n:
        raise RankMismatch(f"{x} has rank {x.n} but {y} has rank {y.n}")


# --- g-vectors ---------------------------------------------------------------


def g_vector(w: Word) -> GVector:
    """Entry i (1..n) is +1 at an ab adjacency (i-1, i), -1 at ba, else 0."""
    bits = w.bits
    return tuple(
        (1 if (bits[i - 1], bits[i]) == (A, B) else -1 if (bits[i - 1], bits[i]) == (B, A) else 0)
        for i in range(1, len(bits))
    )


def word_from_g_vector(g: Sequence[int]) -> Word:
    """Inverse of :func:`g_vector`; raises NotInImage for other vectors."""
    g = tuple(int(v) for v in g)
    if not g:
        raise NotInImage("empty g-vector")
    if any(v not in (-1, 0, 1) for v in g):
        raise NotInImage(f"{g} has entries outside {{-1, 0, 1}}")
    signs = [v for v in g if v]
    if not signs:
        raise NotInImage(f"{g} is zero")
    if any(s == t for s, t in zip(signs, signs[1:])):
        raise NotInImage(f"nonzero entries of {g} do not alternate")
    bit = A if signs[0] == 1 else B
    bits = [bit]
    for v in g:
        if v == 1:
            bit = B
        elif v == -1:
            bit = A
        bits.append(bit)
    return Word(tuple(bits))


# --- classification ----------------------------------------------------------


class Kind(enum.Enum):
    MODULE = "module"
    PROJECTIVE = "projective"
    SHIFTED_PROJECTIVE = "shifted_projective"


@dataclass(frozen=True)
class WordClass:
    kind: Kind
    index: int | None = None

    @property
    def is_module(self) -> bool:
        """Projective words are modules too (paired as (P_j, 0))."""
        return self.kind is not Kind.SHIFTED_PROJECTIVE


def _run(bits, letter, reverse=False) -> int:
    seq = reversed(bits) if reverse else bits
    count = 0
    for b in seq:
        if b != letter:
            break
        count += 1
    return count


def classify(w: Word) -> WordClass:
    bits = w.bits
    r = _run(bits, A)
    if r and all(b == B for b in bits[r:]):
        return WordClass(Kind.PROJECTIVE, r)
    k = _run(bits, B)
    if k and all(b == A for b in bits[k:]):
        return WordClass(Kind.SHIFTED_PROJECTIVE, k)
    return WordClass(Kind.MODULE)


def projective_word(n: int, j: int) -> Word:
    return Word((A,) * j + (B,) * (n + 1 - j))


def shifted_projective_word(n: int, k: int) -> Word:
    return Word((B,) * k + (A,) * (n + 1 - k))


# --- module-theoretic predicates ---------------------------------------------


def support_interval(w: Word) -> range:
    """Vertices (1..n) where the indecomposable module of ``w`` is nonzero.

    The module is supported on [p+1, q] with p the first 'a' and q the last 'b';
    the range is empty exactly for shifted-projective words.
    """
    p = w.bits.index(A)
    q = len(w.bits) - 1 - w.bits[::-1].index(B)
    return range(p + 1, q + 1)


def tau_word(w: Word) -> Word:
    """Word of the Auslander-Reiten translate: a^r b u a b^s -> b^r a u b a^s."""
    cls = classify(w)
    if cls.kind is Kind.PROJECTIVE:
        raise IsProjective(f"{w} is projective; tau is zero")
    if cls.kind is Kind.SHIFTED_PROJECTIVE:
        raise IsShiftedProjective(f"{w} is a shifted projective")
    bits = w.bits
    r = _run(bits, A)
    s = _run(bits, B, reverse=True)
    last = len(bits) - 1 - s
    # bits[r] == B and bits[last] == A, with r < last for non-projective modules
    middle = bits[r + 1:last]
    return Word((B,) * r + (A,) + middle + (B,) + (A,) * s)


def hom_positive(x: Word, y: Word) -> bool:
    """Whether Hom(P_x, P_y[1]) is nonzero for the word complexes of x and y.

    True iff some i < j has x_i = b, x_j = a, y_i = a, y_j = b.  Single pass.
    """
    _check_same_rank(x, y)
    seen = False
    for xb, yb in zip(x.bits, y.bits):
        if seen and xb == A and yb == B:
            return True
        if xb == B and yb == A:
            seen = True
    return False


def hom_positive_naive(x: Word, y: Word) -> bool:
    _check_same_rank(x, y)
    m = len(x)
    return any(
        x.bits[i] == B and x.bits[j] == A and y.bits[i] == A and y.bits[j] == B
        for i in range(m)
        for j in range(i + 1, m)
    )


def crossing(x: Word, y: Word) -> bool:
    """Simplices of x and y meet in their interiors (symmetric)."""
    return hom_positive(x, y) or hom_positive(y, x)


def compatible(words: Iterable[Word]) -> bool:
    ws = list(words)
    return not any(crossing(x, y) for x, y in itertools.combinations(ws, 2))
