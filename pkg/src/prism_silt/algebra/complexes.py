"""Two-term complexes of projectives, minimal presentations and the AR translate.

A morphism between sums of indecomposable projectives e_i A is recorded as a
matrix of algebra elements: the component e_i A -> e_j A is left
multiplication by an element of e_j A e_i.  Composition of components is then
multiplication in the algebra (``g o f`` corresponds to ``y * x``).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import NotModuleWord
from ..words import A as LETTER_A, Kind, Word, classify, support_interval
from . import field as ff
from .modules import (
    ModuleMap,
    Representation,
    block_map,
    cokernel,
    direct_sum,
    dual_right_multiplication,
    injective,
    kernel,
    left_multiplication,
    projective,
    projective_cover,
)
from .quiver import BoundAlgebra


@dataclass
class TwoTermComplex:
    algebra: BoundAlgebra
    minus: tuple[int, ...]
    zero: tuple[int, ...]
    # entries[s, r] lies in e_{zero[s]} A e_{minus[r]}
    entries: np.ndarray

    def __post_init__(self):
        self.minus = tuple(self.minus)
        self.zero = tuple(self.zero)
        shape = (len(self.zero), len(self.minus), self.algebra.dim)
        self.entries = np.asarray(self.entries, dtype=np.int64).reshape(shape) % self.algebra.p

    def g_vector(self) -> tuple[int, ...]:
        return tuple(self.zero.count(i) - self.minus.count(i) for i in range(1, self.algebra.n + 1))

    def is_radical(self) -> bool:
        """Every component lies in the radical (no idempotent coefficient)."""
        alg = self.algebra
        degree0 = [k for k in range(alg.dim) if alg.degree[k] == 0]
        return not np.any(self.entries[:, :, degree0])

    def differential(self) -> ModuleMap:
        alg = self.algebra
        src_parts = [projective(alg, i) for i in self.minus]
        tgt_parts = [projective(alg, j) for j in self.zero]
        src, src_off = direct_sum(src_parts, alg)
        tgt, tgt_off = direct_sum(tgt_parts, alg)
        blocks = {}
        for s, j in enumerate(self.zero):
            for r, i in enumerate(self.minus):
                if np.any(self.entries[s, r]):
                    blocks[(s, r)] = left_multiplication(alg, self.entries[s, r], i, j, src_parts[r], tgt_parts[s])
        return block_map(src, tgt, src_off, tgt_off, blocks)

    def cokernel(self) -> Representation:
        return cokernel(self.differential())[0]

    def __str__(self):
        left = " + ".join(f"P{i}" for i in self.minus) or "0"
        right = " + ".join(f"P{j}" for j in self.zero) or "0"
        return f"{left} -> {right}"


def monotone_path(alg: BoundAlgebra, start: int, end: int) -> np.ndarray:
    """The shortest path from ``start`` to ``end`` (alpha's upwards, beta's downwards)."""
    if start <= end:
        names = [f"a{v}" for v in range(start, end)]
    else:
        names = [f"b{v}" for v in range(start - 1, end - 1, -1)]
    return alg.path_element(start, names)


def word_complex(alg: BoundAlgebra, w: Word) -> TwoTermComplex:
    """Indecomposable two-term presilting complex of a word.

    Degree -1 carries P_i for each ba adjacency at (i-1, i), degree 0 carries
    P_j for each ab adjacency.  The two kinds interleave along 1..n and each
    degree -1 summand maps to its neighbours by the maximal-image path.
    """
    if w.n != alg.n:
        raise ValueError(f"word of rank {w.n} over an algebra of rank {alg.n}")
    bits = w.bits
    minus, zero, merged = [], [], []
    for i in range(1, len(bits)):
        pair = (bits[i - 1], bits[i])
        if pair == (0, 1):
            zero.append(i)
            merged.append(("0", i))
        elif pair == (1, 0):
            minus.append(i)
            merged.append(("-1", i))
    entries = np.zeros((len(zero), len(minus), alg.dim), dtype=np.int64)
    for pos, (kind, i) in enumerate(merged):
        if kind != "-1":
            continue
        r = minus.index(i)
        for nb in (pos - 1, pos + 1):
            if 0 <= nb < len(merged):
                j = merged[nb][1]
                entries[zero.index(j), r] = monotone_path(alg, j, i)
    return TwoTermComplex(alg, tuple(minus), tuple(zero), entries)


def word_module(alg: BoundAlgebra, w: Word) -> Representation:
    """Thin module of a module word: one dimension on each vertex of the support.

    Between supported vertices j and j+1 the letter x_j decides the arrow:
    'b' makes a_j (j -> j+1) the identity, 'a' makes b_j (j+1 -> j) the identity.
    """
    if classify(w).kind is Kind.SHIFTED_PROJECTIVE:
        raise NotModuleWord(f"{w} encodes a shifted projective")
    if w.n != alg.n:
        raise ValueError(f"word of rank {w.n} over an algebra of rank {alg.n}")
    support = support_interval(w)
    dims = tuple(1 if v in support else 0 for v in range(1, alg.n + 1))
    maps = []
    for a in alg.quiver.arrows:
        m = np.zeros((dims[a.target - 1], dims[a.source - 1]), dtype=np.int64)
        if m.size:
            low = min(a.source, a.target)
            up = a.target > a.source
            if (w.bits[low] != LETTER_A) == up:
                m[0, 0] = 1
        maps.append(m)
    return Representation(alg, dims, maps)


def _generator_index(alg: BoundAlgebra, proj: Representation, i: int) -> int:
    """Position of the idempotent e_i inside vertex i of e_i A."""
    return proj.labels[i - 1].index(alg.index[(i, ())])


def complex_from_map(minus: list[int], zero: list[int], d: ModuleMap) -> TwoTermComplex:
    """Read off the element matrix of a map between sums of projectives."""
    alg = d.source.algebra
    src_parts = [projective(alg, i) for i in minus]
    tgt_parts = [projective(alg, j) for j in zero]
    _, src_off = direct_sum(src_parts, alg)
    _, tgt_off = direct_sum(tgt_parts, alg)
    entries = np.zeros((len(zero), len(minus), alg.dim), dtype=np.int64)
    for r, i in enumerate(minus):
        col = src_off[r][i - 1] + _generator_index(alg, src_parts[r], i)
        image = d.at(i)[:, col]
        for s, j in enumerate(zero):
            labels = tgt_parts[s].labels[i - 1]
            start = tgt_off[s][i - 1]
            entries[s, r, labels] = image[start:start + len(labels)]
    return TwoTermComplex(alg, tuple(minus), tuple(zero), entries)


def minimal_presentation(m: Representation) -> TwoTermComplex:
    """P^-1 -> P^0 -> M -> 0 with both maps projective covers onto their images."""
    zero, p0, cover = projective_cover(m)
    k, inclusion = kernel(cover)
    minus, _, cover_k = projective_cover(k)
    d = cover_k.compose(inclusion)
    return complex_from_map(minus, zero, d)


def nakayama(c: TwoTermComplex) -> ModuleMap:
    """The map nu P^-1 -> nu P^0, with nu(e_i A) = D(A e_i)."""
    alg = c.algebra
    src_parts = [injective(alg, i) for i in c.minus]
    tgt_parts = [injective(alg, j) for j in c.zero]
    src, src_off = direct_sum(src_parts, alg)
    tgt, tgt_off = direct_sum(tgt_parts, alg)
    blocks = {}
    for s, j in enumerate(c.zero):
        for r, i in enumerate(c.minus):
            if np.any(c.entries[s, r]):
                blocks[(s, r)] = dual_right_multiplication(alg, c.entries[s, r], i, j, src_parts[r], tgt_parts[s])
    return block_map(src, tgt, src_off, tgt_off, blocks)


def tau(m: Representation) -> Representation:
    """Auslander-Reiten translate: 0 -> tau M -> nu P^-1 -> nu P^0."""
    return kernel(nakayama(minimal_presentation(m)))[0]


def hom_complex_nonzero(pc: TwoTermComplex, qc: TwoTermComplex) -> bool:
    """Whether Hom_K(P, Q[1]) != 0 in the homotopy category.

    Every h: P^-1 -> Q^0 is a chain map P -> Q[1]; it is null-homotopic iff
    h = s d_P + d_Q t with s: P^0 -> Q^0 and t: P^-1 -> Q^-1.  The answer is
    nonzero iff those homotopies do not span all of Hom(P^-1, Q^0).
    """
    alg = pc.algebra
    p = alg.p
    slots = {}
    total = 0
    for s, qz in enumerate(qc.zero):
        for r, pm in enumerate(pc.minus):
            blk = alg.block(qz, pm)
            slots[(s, r)] = (total, blk)
            total += len(blk)
    if total == 0:
        return False
    rows = []
    for s, qz in enumerate(qc.zero):
        for t, pz in enumerate(pc.zero):
            for b in alg.block(qz, pz):
                vec = np.zeros(total, dtype=np.int64)
                for r in range(len(pc.minus)):
                    h = alg.mult[b].T @ pc.entries[t, r] % p
                    off, blk = slots[(s, r)]
                    vec[off:off + len(blk)] = h[blk]
                rows.append(vec)
    for u, qm in enumerate(qc.minus):
        for r, pm in enumerate(pc.minus):
            for b in alg.block(qm, pm):
                vec = np.zeros(total, dtype=np.int64)
                for s in range(len(qc.zero)):
                    h = alg.mult[:, b, :].T @ qc.entries[s, u] % p
                    off, blk = slots[(s, r)]
                    vec[off:off + len(blk)] = h[blk]
                rows.append(vec)
    if not rows:
        return True
    return ff.rank(np.array(rows), p) < total
