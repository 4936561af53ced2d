"""Right modules over a BoundAlgebra as quiver representations.

The arrow ``g: i -> j`` acts by a matrix ``maps[g]`` of shape
``(dims[j], dims[i])`` on column vectors, so a path ``g d`` (first g, then d)
acts by ``maps[d] @ maps[g]``.  Vertices are 1-based; ``dims[v - 1]`` is the
dimension at vertex v.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import field as ff
from .quiver import BoundAlgebra


def _zeros(r, c):
    return np.zeros((r, c), dtype=np.int64)


@dataclass
class Representation:
    algebra: BoundAlgebra
    dims: tuple[int, ...]
    maps: list[np.ndarray]
    # algebra basis indices labelling each vertex space (projectives and injectives only)
    labels: list[list[int]] | None = field(default=None, repr=False)

    def __post_init__(self):
        self.dims = tuple(int(d) for d in self.dims)
        arrows = self.algebra.quiver.arrows
        for k, a in enumerate(arrows):
            shape = (self.dim_at(a.target), self.dim_at(a.source))
            self.maps[k] = np.asarray(self.maps[k], dtype=np.int64).reshape(shape) % self.p
        bad = self.relation_defect()
        if bad is not None:
            raise ValueError(f"relation {bad} does not hold in the representation")

    @property
    def p(self) -> int:
        return self.algebra.p

    @property
    def n(self) -> int:
        return self.algebra.n

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def dim_at(self, v: int) -> int:
        return self.dims[v - 1]

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def support(self) -> list[int]:
        return [v for v in range(1, self.n + 1) if self.dim_at(v)]

    def path_matrix(self, start: int, arrows: tuple[int, ...]) -> np.ndarray:
        m = np.eye(self.dim_at(start), dtype=np.int64)
        for k in arrows:
            m = ff.matmul(self.maps[k], m, self.p)
        return m

    def relation_defect(self):
        quiver = self.algebra.quiver
        index = {a.name: k for k, a in enumerate(quiver.arrows)}
        for rel in quiver.relations:
            by_ends: dict[tuple[int, int], np.ndarray] = {}
            for names, coeff in rel.items():
                arrows = tuple(index[nm] for nm in names)
                s = quiver.arrows[arrows[0]].source
                t = quiver.arrows[arrows[-1]].target
                term = coeff * self.path_matrix(s, arrows)
                by_ends[(s, t)] = (by_ends.get((s, t), 0) + term) % self.p
            if any(np.any(m) for m in by_ends.values()):
                return rel
        return None

    def radical(self) -> list[np.ndarray]:
        """Per vertex, a row-basis of the radical (sum of incoming arrow images)."""
        out = []
        arrows = self.algebra.quiver.arrows
        for v in range(1, self.n + 1):
            cols = [self.maps[k] for k, a in enumerate(arrows) if a.target == v and self.maps[k].size]
            span = np.concatenate(cols, axis=1).T if cols else _zeros(0, self.dim_at(v))
            out.append(ff.row_space(span, self.p, cols=self.dim_at(v)))
        return out

    def top_dims(self) -> tuple[int, ...]:
        return tuple(self.dim_at(v) - r.shape[0] for v, r in zip(range(1, self.n + 1), self.radical()))

    def __repr__(self):
        return f"Representation({self.algebra.name}, dims={self.dims})"


@dataclass
class ModuleMap:
    source: Representation
    target: Representation
    mats: list[np.ndarray]

    def __post_init__(self):
        p = self.source.p
        self.mats = [
            np.asarray(m, dtype=np.int64).reshape(self.target.dims[v], self.source.dims[v]) % p
            for v, m in enumerate(self.mats)
        ]

    def at(self, v: int) -> np.ndarray:
        return self.mats[v - 1]

    def is_zero(self) -> bool:
        return not any(np.any(m) for m in self.mats)

    def is_homomorphism(self) -> bool:
        p = self.source.p
        for k, a in enumerate(self.source.algebra.quiver.arrows):
            lhs = ff.matmul(self.target.maps[k], self.at(a.source), p)
            rhs = ff.matmul(self.at(a.target), self.source.maps[k], p)
            if np.any((lhs - rhs) % p):
                return False
        return True

    def is_isomorphism(self) -> bool:
        return self.source.dims == self.target.dims and all(
            ff.is_invertible(m, self.source.p) for m in self.mats if m.size
        )

    def compose(self, after: "ModuleMap") -> "ModuleMap":
        """after o self."""
        p = self.source.p
        return ModuleMap(self.source, after.target, [ff.matmul(a, b, p) for a, b in zip(after.mats, self.mats)])

    def flat(self) -> np.ndarray:
        return np.concatenate([m.ravel() for m in self.mats]) if self.mats else np.zeros(0, dtype=np.int64)

    def rank(self) -> int:
        return sum(ff.rank(m, self.source.p) for m in self.mats if m.size)


def zero_map(m: Representation, n: Representation) -> ModuleMap:
    return ModuleMap(m, n, [_zeros(b, a) for a, b in zip(m.dims, n.dims)])


def identity_map(m: Representation) -> ModuleMap:
    return ModuleMap(m, m, [np.eye(d, dtype=np.int64) for d in m.dims])


def zero_module(alg: BoundAlgebra) -> Representation:
    return Representation(alg, (0,) * alg.n, [_zeros(0, 0) for _ in alg.quiver.arrows])


# --- projectives and injectives ---------------------------------------------


def projective(alg: BoundAlgebra, i: int) -> Representation:
    """The right module e_i A: vertex j carries the paths from i to j."""
    labels = [alg.block(i, j) for j in range(1, alg.n + 1)]
    maps = []
    for a in alg.quiver.arrows:
        rmult = alg.right_mult_matrix(alg.arrow(a.name))
        maps.append(rmult[np.ix_(labels[a.target - 1], labels[a.source - 1])])
    return Representation(alg, tuple(len(b) for b in labels), maps, labels)


def injective(alg: BoundAlgebra, i: int) -> Representation:
    """D(A e_i): vertex j carries the dual of the paths from j to i."""
    labels = [alg.block(j, i) for j in range(1, alg.n + 1)]
    maps = []
    for a in alg.quiver.arrows:
        # (f . g)(y) = f(g y) for y in e_target A e_i
        lmult = alg.left_mult_matrix(alg.arrow(a.name))
        maps.append(lmult[np.ix_(labels[a.source - 1], labels[a.target - 1])].T)
    return Representation(alg, tuple(len(b) for b in labels), maps, labels)


def left_multiplication(alg: BoundAlgebra, x, i: int, j: int, src=None, tgt=None) -> ModuleMap:
    """The map e_i A -> e_j A, m -> x m, for x in e_j A e_i."""
    src = src or projective(alg, i)
    tgt = tgt or projective(alg, j)
    lm = alg.left_mult_matrix(x)
    mats = [lm[np.ix_(tgt.labels[k], src.labels[k])] for k in range(alg.n)]
    return ModuleMap(src, tgt, mats)


def dual_right_multiplication(alg: BoundAlgebra, x, i: int, j: int, src=None, tgt=None) -> ModuleMap:
    """Nakayama image of left multiplication by x in e_j A e_i: D(A e_i) -> D(A e_j)."""
    src = src or injective(alg, i)
    tgt = tgt or injective(alg, j)
    rm = alg.right_mult_matrix(x)
    # y -> y x maps e_k A e_j into e_k A e_i; its transpose dualises it
    mats = [rm[np.ix_(src.labels[k], tgt.labels[k])].T for k in range(alg.n)]
    return ModuleMap(src, tgt, mats)


# --- direct sums -------------------------------------------------------------


def direct_sum(reps: list[Representation], alg: BoundAlgebra | None = None) -> tuple[Representation, list[list[int]]]:
    """Direct sum and, per summand, its offset inside each vertex space."""
    if not reps:
        if alg is None:
            raise ValueError("empty direct sum needs the algebra")
        return zero_module(alg), []
    alg = reps[0].algebra
    n = alg.n
    offsets = []
    running = [0] * n
    for r in reps:
        offsets.append(list(running))
        running = [a + b for a, b in zip(running, r.dims)]
    maps = []
    for k, a in enumerate(alg.quiver.arrows):
        m = _zeros(running[a.target - 1], running[a.source - 1])
        for r, off in zip(reps, offsets):
            blk = r.maps[k]
            m[off[a.target - 1]:off[a.target - 1] + blk.shape[0], off[a.source - 1]:off[a.source - 1] + blk.shape[1]] = blk
        maps.append(m)
    return Representation(alg, tuple(running), maps), offsets


def block_map(
    source: Representation,
    target: Representation,
    src_offsets: list[list[int]],
    tgt_offsets: list[list[int]],
    blocks: dict[tuple[int, int], ModuleMap],
) -> ModuleMap:
    """Assemble a map between direct sums from components (target summand, source summand)."""
    mats = [_zeros(target.dims[v], source.dims[v]) for v in range(source.n)]
    for (s, r), f in blocks.items():
        for v in range(source.n):
            blk = f.mats[v]
            if blk.size:
                t0, s0 = tgt_offsets[s][v], src_offsets[r][v]
                mats[v][t0:t0 + blk.shape[0], s0:s0 + blk.shape[1]] = blk
    return ModuleMap(source, target, mats)


# --- Hom, kernels, cokernels -------------------------------------------------


def hom_space(m: Representation, n: Representation) -> list[ModuleMap]:
    """A basis of Hom(M, N), by solving the commutation equations exactly."""
    p = m.p
    sizes = [a * b for a, b in zip(m.dims, n.dims)]
    offsets = np.concatenate([[0], np.cumsum(sizes)]).astype(int)
    total = int(offsets[-1])
    if total == 0:
        return []
    rows = []
    for k, a in enumerate(m.algebra.quiver.arrows):
        j, t = a.source - 1, a.target - 1
        nj, mj, nt, mt = n.dims[j], m.dims[j], n.dims[t], m.dims[t]
        if nt * mj == 0:
            continue
        eq = _zeros(nt * mj, total)
        # N_g F_j - F_t M_g = 0, row-major vectorisation
        if nj * mj:
            eq[:, offsets[j]:offsets[j + 1]] += np.kron(n.maps[k], np.eye(mj, dtype=np.int64))
        if nt * mt:
            eq[:, offsets[t]:offsets[t + 1]] -= np.kron(np.eye(nt, dtype=np.int64), m.maps[k].T)
        rows.append(eq % p)
    system = np.concatenate(rows) if rows else _zeros(0, total)
    basis = ff.nullspace(system, p, cols=total) if system.shape[0] else np.eye(total, dtype=np.int64)
    maps = []
    for vec in basis:
        mats = [vec[offsets[v]:offsets[v + 1]].reshape(n.dims[v], m.dims[v]) for v in range(m.n)]
        maps.append(ModuleMap(m, n, mats))
    return maps


def hom_dimension(m: Representation, n: Representation) -> int:
    return len(hom_space(m, n))


def subrepresentation(parent: Representation, bases: list[np.ndarray]) -> tuple[Representation, ModuleMap]:
    """Representation on invariant subspaces given by column bases, with its inclusion."""
    p = parent.p
    maps = []
    for k, a in enumerate(parent.algebra.quiver.arrows):
        bs, bt = bases[a.source - 1], bases[a.target - 1]
        if bs.shape[1] == 0 or bt.shape[1] == 0:
            maps.append(_zeros(bt.shape[1], bs.shape[1]))
            continue
        image = ff.matmul(parent.maps[k], bs, p)
        coeffs = ff.solve(bt, image, p)
        if coeffs is None:
            raise ValueError("subspaces are not invariant under the arrow action")
        maps.append(coeffs)
    sub = Representation(parent.algebra, tuple(b.shape[1] for b in bases), maps)
    return sub, ModuleMap(sub, parent, bases)


def kernel(f: ModuleMap) -> tuple[Representation, ModuleMap]:
    p = f.source.p
    bases = []
    for v, m in enumerate(f.mats):
        d = f.source.dims[v]
        if m.shape[0] == 0:
            bases.append(np.eye(d, dtype=np.int64))
        else:
            bases.append(ff.nullspace(m, p, cols=d).T)
    return subrepresentation(f.source, bases)


def cokernel(f: ModuleMap) -> tuple[Representation, ModuleMap]:
    """Quotient of the target by the image, with the projection onto it."""
    p = f.source.p
    tgt = f.target
    sections, projections = [], []
    for v in range(tgt.n):
        d = tgt.dims[v]
        image = ff.row_space(f.mats[v].T, p, cols=d)
        comp = ff.complement_basis(image, d, p)
        section = np.eye(d, dtype=np.int64)[:, comp]
        full = np.concatenate([image.T, section], axis=1) if d else _zeros(0, 0)
        if d:
            inv = ff.inverse(full, p)
            projections.append(inv[image.shape[0]:])
        else:
            projections.append(_zeros(0, 0))
        sections.append(section)
    maps = []
    for k, a in enumerate(tgt.algebra.quiver.arrows):
        pr, sec = projections[a.target - 1], sections[a.source - 1]
        if pr.shape[0] == 0 or sec.shape[1] == 0:
            maps.append(_zeros(pr.shape[0], sec.shape[1]))
        else:
            maps.append(ff.matmul(pr, ff.matmul(tgt.maps[k], sec, p), p))
    quotient = Representation(tgt.algebra, tuple(pr.shape[0] for pr in projections), maps)
    return quotient, ModuleMap(tgt, quotient, projections)


# --- projective covers -------------------------------------------------------


def map_from_projective(P: Representation, i: int, m: Representation, vec) -> ModuleMap:
    """The unique map e_i A -> M sending e_i to ``vec`` in M e_i."""
    alg = P.algebra
    vec = np.asarray(vec, dtype=np.int64).reshape(-1, 1)
    mats = []
    for j in range(1, alg.n + 1):
        cols = [m.path_matrix(*alg.basis[b]) @ vec % m.p for b in P.labels[j - 1]]
        mats.append(np.concatenate(cols, axis=1) if cols else _zeros(m.dim_at(j), 0))
    return ModuleMap(P, m, mats)


def projective_cover(m: Representation) -> tuple[list[int], Representation, ModuleMap]:
    """Projective cover: the vertices of the summands, their sum, and the cover map."""
    alg = m.algebra
    vertices, generators = [], []
    for v, rad in zip(range(1, alg.n + 1), m.radical()):
        for c in ff.complement_basis(rad, m.dim_at(v), m.p):
            vertices.append(v)
            gen = np.zeros(m.dim_at(v), dtype=np.int64)
            gen[c] = 1
            generators.append(gen)
    summands = [projective(alg, v) for v in vertices]
    total, offsets = direct_sum(summands, alg)
    blocks = {}
    for r, (v, gen) in enumerate(zip(vertices, generators)):
        blocks[(0, r)] = map_from_projective(summands[r], v, m, gen)
    cover = block_map(total, m, offsets, [[0] * alg.n], blocks)
    return vertices, total, cover


# --- isomorphism -------------------------------------------------------------


@dataclass
class IsoResult:
    isomorphic: bool
    certified: bool
    witness: ModuleMap | None = None
    reason: str = ""

    def __bool__(self):
        return self.isomorphic


def iso_test(m: Representation, n: Representation, retries: int = 20, rng=None) -> IsoResult:
    """Decide M = N.  A positive answer always carries an explicit isomorphism.

    Negative answers are certified when the dimension vectors differ, when
    dim Hom(M, N) differs from dim End(M), or when Hom(M, N) is at most
    one-dimensional.  Otherwise random combinations of a Hom basis are tried
    ``retries`` times; the failure probability per try is at most dim(M)/p.
    """
    if m.dims != n.dims:
        return IsoResult(False, True, reason="dimension vectors differ")
    if m.total_dim == 0:
        return IsoResult(True, True, zero_map(m, n), "both zero")
    homs = hom_space(m, n)
    if not homs:
        return IsoResult(False, True, reason="Hom(M, N) = 0")
    if len(homs) == 1:
        f = homs[0]
        return IsoResult(f.is_isomorphism(), True, f if f.is_isomorphism() else None, "one-dimensional Hom")
    if len(homs) != hom_dimension(m, m):
        return IsoResult(False, True, reason="dim Hom(M, N) != dim End(M)")
    for f in homs:
        if f.is_isomorphism():
            return IsoResult(True, True, f, "basis element")
    rng = rng if rng is not None else np.random.default_rng(0)
    p = m.p
    for _ in range(retries):
        coeffs = rng.integers(0, p, size=len(homs))
        mats = [sum(int(c) * h.mats[v] for c, h in zip(coeffs, homs)) % p for v in range(m.n)]
        f = ModuleMap(m, n, mats)
        if f.is_isomorphism():
            return IsoResult(True, True, f, "random combination")
    return IsoResult(False, False, reason=f"no isomorphism in {retries} random tries")
