"""Two-term silting complexes, support tau-tilting pairs and Mizuno ideals.

A two-term silting complex over the preprojective algebra of rank n is a set
of n pairwise compatible words.  The same set is a triangulation of the prism
and, split into module words and shifted projectives, a support tau-tilting
pair.  ``mizuno_pair`` closes the loop by computing the ideal I_w of a
permutation and comparing it with the pair predicted by its triangulation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

import numpy as np

from .algebra.complexes import TwoTermComplex, hom_complex_nonzero, tau, word_complex
from .algebra.ideals import TwoSidedIdeal, ideal_as_module, ideal_of_word
from .algebra.modules import Representation, direct_sum, hom_dimension, iso_test, projective
from .algebra.quiver import BoundAlgebra, preprojective_algebra
from .errors import CrossingPair, RankMismatch, VerificationFailed, WordNotInComplex, WrongCount
from .perms import Permutation, all_permutations, reduced_word, triangulation_of
from .triangulations import Triangulation, flip, validate_triangulation
from .words import Kind, Word, classify, g_vector, hom_positive

# Order in which the vertex ideals are multiplied along reduced_word(w).
# Fixed by calibrate_convention() at rank 2; "reverse" is kept for that check.
MIZUNO_ORDER = "forward"


@dataclass(frozen=True)
class SiltingComplex:
    n: int
    words: frozenset[Word]

    def __post_init__(self):
        if len(self.words) != self.n:
            raise WrongCount(f"{len(self.words)} summands, a silting complex of rank {self.n} has {self.n}")
        if any(w.n != self.n for w in self.words):
            raise RankMismatch("summands of different ranks")
        for x, y in itertools.permutations(sorted(self.words), 2):
            if hom_positive(x, y):
                raise CrossingPair(x, y)

    @classmethod
    def of(cls, words: Iterable[Word]) -> "SiltingComplex":
        ws = frozenset(words)
        if not ws:
            raise WrongCount("empty summand set")
        return cls(next(iter(ws)).n, ws)

    @property
    def ordered(self) -> tuple[Word, ...]:
        return tuple(sorted(self.words, key=lambda w: (-w.count_a(), str(w))))

    def summands(self, alg: BoundAlgebra) -> list[TwoTermComplex]:
        return [word_complex(alg, w) for w in self.ordered]

    def realize(self, alg: BoundAlgebra) -> TwoTermComplex:
        return direct_sum_complexes(self.summands(alg))

    def g_vectors(self) -> dict[str, tuple[int, ...]]:
        return {str(w): g_vector(w) for w in self.ordered}

    def to_json(self) -> dict:
        return {"n": self.n, "words": [str(w) for w in self.ordered]}

    def __str__(self):
        return " + ".join(str(w) for w in self.ordered)


def direct_sum_complexes(parts: list[TwoTermComplex]) -> TwoTermComplex:
    if not parts:
        raise ValueError("empty direct sum")
    alg = parts[0].algebra
    minus = [i for c in parts for i in c.minus]
    zero = [j for c in parts for j in c.zero]
    entries = np.zeros((len(zero), len(minus), alg.dim), dtype=np.int64)
    s0 = r0 = 0
    for c in parts:
        entries[s0:s0 + len(c.zero), r0:r0 + len(c.minus)] = c.entries
        s0 += len(c.zero)
        r0 += len(c.minus)
    return TwoTermComplex(alg, tuple(minus), tuple(zero), entries)


@dataclass(frozen=True)
class TauRigidPair:
    n: int
    module_words: tuple[Word, ...]
    shifted: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.module_words) + len(self.shifted)

    def modules(self, alg: BoundAlgebra) -> list[Representation]:
        """Indecomposable summands of M, as cokernels of the word complexes."""
        return [word_complex(alg, w).cokernel() for w in self.module_words]

    def module(self, alg: BoundAlgebra) -> Representation:
        return direct_sum(self.modules(alg), alg)[0]

    def to_json(self) -> dict:
        return {"n": self.n, "modules": [str(w) for w in self.module_words], "shifted": list(self.shifted)}


def silting_of_triangulation(t: Triangulation) -> SiltingComplex:
    return SiltingComplex(t.n, t.words)


def triangulation_of_silting(s: SiltingComplex) -> Triangulation:
    return validate_triangulation(s.words)


def pair_of_silting(s: SiltingComplex) -> TauRigidPair:
    modules, shifted = [], []
    for w in s.ordered:
        c = classify(w)
        if c.kind is Kind.SHIFTED_PROJECTIVE:
            shifted.append(c.index)
        else:
            modules.append(w)
    return TauRigidPair(s.n, tuple(modules), tuple(sorted(shifted)))


def mutate(s: SiltingComplex, x: Word) -> SiltingComplex:
    if x not in s.words:
        raise WordNotInComplex(f"{x} is not a summand of {s}")
    t, _ = flip(triangulation_of_silting(s), x)
    return silting_of_triangulation(t)


def is_presilting_realized(alg: BoundAlgebra, words: Iterable[Word]) -> bool:
    """No nonzero Hom(P, Q[1]) between any two of the realized complexes."""
    cs = {w: word_complex(alg, w) for w in words}
    return not any(hom_complex_nonzero(cs[x], cs[y]) for x in cs for y in cs)


# -- Mizuno ideals -----------------------------------------------------------

@lru_cache(maxsize=None)
def _preprojective(n: int) -> BoundAlgebra:
    return preprojective_algebra(n)


def mizuno_ideal(w: Permutation, alg: BoundAlgebra | None = None, strategy: str = "smallest",
                 order: str | None = None) -> TwoSidedIdeal:
    """I_w as the product of vertex ideals along a reduced word of w."""
    alg = alg if alg is not None else _preprojective(w.n)
    word = reduced_word(w, strategy)
    order = order or MIZUNO_ORDER
    if order == "reverse":
        word = word[::-1]
    elif order != "forward":
        raise ValueError(f"unknown order {order!r}")
    return ideal_of_word(alg, word)


@dataclass
class MizunoResult:
    w: Permutation
    module: Representation
    pair: TauRigidPair
    checks: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, object] = field(default_factory=dict)

    @property
    def verdict(self) -> bool:
        return bool(self.checks) and all(self.checks.values())

    def require(self) -> "MizunoResult":
        for name, ok in self.checks.items():
            if not ok:
                raise VerificationFailed(name, self.witnesses.get(name))
        return self

    def to_json(self) -> dict:
        return {
            "perm": str(self.w),
            "module_words": [str(x) for x in self.pair.module_words],
            "shifted": list(self.pair.shifted),
            "ideal_dims": list(self.module.dims),
            "checks": dict(self.checks),
            "verdict": self.verdict,
        }


def mizuno_pair(w: Permutation, alg: BoundAlgebra | None = None, *, strategy: str = "smallest",
                order: str | None = None, retries: int = 20, rng=None, strict: bool = False) -> MizunoResult:
    """Compare the ideal module I_w with the pair predicted by the triangulation of w."""
    alg = alg if alg is not None else _preprojective(w.n)
    if alg.n != w.n:
        raise RankMismatch(f"permutation of rank {w.n} over an algebra of rank {alg.n}")
    m = ideal_as_module(mizuno_ideal(w, alg, strategy, order))
    pair = pair_of_silting(silting_of_triangulation(triangulation_of(w)))
    result = MizunoResult(w, m, pair)

    result.checks["pair_size"] = pair.size == w.n

    predicted = pair.module(alg)
    iso = iso_test(m, predicted, retries=retries, rng=rng)
    result.checks["module_iso"] = iso.isomorphic
    if not iso.isomorphic:
        result.witnesses["module_iso"] = {
            "ideal_dims": list(m.dims), "predicted_dims": list(predicted.dims), "reason": iso.reason,
        }

    vanishing = tuple(i for i in range(1, w.n + 1) if m.dim_at(i) == 0)
    result.checks["support"] = vanishing == pair.shifted
    if vanishing != pair.shifted:
        result.witnesses["support"] = {"vanishing": list(vanishing), "shifted": list(pair.shifted)}

    bad = [k for k in pair.shifted if hom_dimension(projective(alg, k), m)]
    tm = tau(m) if m.total_dim else m
    rigid = m.total_dim == 0 or hom_dimension(m, tm) == 0
    result.checks["tau_rigid"] = rigid and not bad
    if not result.checks["tau_rigid"]:
        result.witnesses["tau_rigid"] = {"hom_m_tau_m_zero": rigid, "hom_p_m_nonzero": bad}

    if strict:
        result.require()
    return result


def calibrate_convention(n: int = 2) -> str:
    """The multiplication order for which every permutation of rank n passes."""
    alg = _preprojective(n)
    passing = [
        order for order in ("forward", "reverse")
        if all(mizuno_pair(w, alg, order=order).verdict for w in all_permutations(n))
    ]
    if len(passing) != 1:
        raise VerificationFailed("calibration", passing)
    return passing[0]
