"""Two-sided ideals of a BoundAlgebra, their products, and their module structure."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import field as ff
from .modules import Representation
from .quiver import BoundAlgebra


@dataclass
class TwoSidedIdeal:
    algebra: BoundAlgebra
    basis: np.ndarray  # rows, reduced echelon form

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def is_two_sided(self) -> bool:
        alg = self.algebra
        if self.dim == 0:
            return True
        units = np.eye(alg.dim, dtype=np.int64)
        both = np.vstack([_products(alg, units, self.basis), _products(alg, self.basis, units)])
        return ff.rank(np.vstack([self.basis, both]), alg.p) == self.dim

    def __eq__(self, other):
        return (
            isinstance(other, TwoSidedIdeal)
            and self.basis.shape == other.basis.shape
            and bool(np.all(self.basis == other.basis))
        )


def _span(alg: BoundAlgebra, vectors) -> np.ndarray:
    vectors = np.asarray(vectors, dtype=np.int64).reshape(-1, alg.dim) % alg.p
    vectors = vectors[np.any(vectors, axis=1)]
    if vectors.shape[0] == 0:
        return np.zeros((0, alg.dim), dtype=np.int64)
    return ff.row_space(vectors, alg.p, cols=alg.dim)


def _products(alg: BoundAlgebra, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """All products x*y for rows x of xs and y of ys, one per row."""
    p = alg.p
    left = np.tensordot(xs % p, alg.mult, axes=(1, 0)) % p  # (a, j, k)
    out = np.einsum("ajk,bj->abk", left, ys % p) % p
    return out.reshape(-1, alg.dim)


def generated_by(alg: BoundAlgebra, elements) -> TwoSidedIdeal:
    """A x A for the given elements x."""
    units = np.eye(alg.dim, dtype=np.int64)
    xs = np.asarray(elements, dtype=np.int64).reshape(-1, alg.dim)
    right = _span(alg, _products(alg, xs, units))
    return TwoSidedIdeal(alg, _span(alg, _products(alg, units, right)))


def ideal_generated(alg: BoundAlgebra, i: int) -> TwoSidedIdeal:
    """I_i = A (1 - e_i) A."""
    if not 1 <= i <= alg.n:
        raise ValueError(f"vertex {i} outside 1..{alg.n}")
    return generated_by(alg, [(alg.one() - alg.idempotent(i)) % alg.p])


def whole_algebra(alg: BoundAlgebra) -> TwoSidedIdeal:
    return TwoSidedIdeal(alg, np.eye(alg.dim, dtype=np.int64))


def ideal_product(i: TwoSidedIdeal, j: TwoSidedIdeal) -> TwoSidedIdeal:
    alg = i.algebra
    if j.algebra is not alg:
        raise ValueError("ideals of different algebras")
    if i.dim == 0 or j.dim == 0:
        return TwoSidedIdeal(alg, np.zeros((0, alg.dim), dtype=np.int64))
    return TwoSidedIdeal(alg, _span(alg, _products(alg, i.basis, j.basis)))


def ideal_of_word(alg: BoundAlgebra, word) -> TwoSidedIdeal:
    """I_{i_1} I_{i_2} ... I_{i_k}; the empty word gives the whole algebra."""
    cache = {}
    result = whole_algebra(alg)
    for i in word:
        if i not in cache:
            cache[i] = ideal_generated(alg, i)
        result = ideal_product(result, cache[i])
    return result


def ideal_as_module(ideal: TwoSidedIdeal) -> Representation:
    """The right module I: vertex j carries I e_j, arrows act by right multiplication."""
    alg = ideal.algebra
    p = alg.p
    fibres = []
    for j in range(1, alg.n + 1):
        e = alg.idempotent(j)
        fibres.append(_span(alg, [alg.mul(x, e) for x in ideal.basis]))
    maps = []
    for a in alg.quiver.arrows:
        src, tgt = fibres[a.source - 1], fibres[a.target - 1]
        if src.shape[0] == 0 or tgt.shape[0] == 0:
            maps.append(np.zeros((tgt.shape[0], src.shape[0]), dtype=np.int64))
            continue
        images = np.array([alg.mul(x, alg.arrow(a.name)) for x in src])
        coeffs = ff.solve(tgt.T, images.T, p)
        if coeffs is None:
            raise ValueError("not a right ideal")
        maps.append(coeffs)
    return Representation(alg, tuple(f.shape[0] for f in fibres), maps)
