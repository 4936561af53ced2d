"""Bound quiver algebras with homogeneous relations, realised degree by degree.

A path is stored as ``(start_vertex, arrow_indices)``; arrows compose left to
right, so the path ``(g, d)`` means "first g, then d".  The ideal generated by
homogeneous relations is built one degree at a time,

    I_d = span(relations of degree d) + A_1 I_{d-1} + I_{d-1} A_1,

and the quotient basis in each degree consists of the paths that are not
pivots of the reduced echelon form of I_d.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import DegreeBoundTooSmall, InhomogeneousRelations
from . import field as ff

Path = tuple[int, tuple[int, ...]]


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass
class QuiverPresentation:
    vertices: int
    arrows: list[Arrow]
    relations: list[dict[tuple[str, ...], int]] = field(default_factory=list)
    name: str = ""

    def arrow_index(self, name: str) -> int:
        for k, a in enumerate(self.arrows):
            if a.name == name:
                return k
        raise KeyError(name)


def _type_a_arrows(n: int) -> list[Arrow]:
    alphas = [Arrow(f"a{i}", i, i + 1) for i in range(1, n)]
    betas = [Arrow(f"b{i}", i + 1, i) for i in range(1, n)]
    return alphas + betas


def _mesh_relations(n: int) -> list[dict]:
    rels = []
    if n >= 2:
        rels.append({("a1", "b1"): 1})
        for k in range(2, n):
            rels.append({(f"b{k - 1}", f"a{k - 1}"): 1, (f"a{k}", f"b{k}"): -1})
        rels.append({(f"b{n - 1}", f"a{n - 1}"): 1})
    return rels


def preprojective_presentation(n: int) -> QuiverPresentation:
    """Preprojective algebra of type A_n: b_i a_i = a_{i+1} b_{i+1}, a_1 b_1 = b_{n-1} a_{n-1} = 0."""
    return QuiverPresentation(n, _type_a_arrows(n), _mesh_relations(n), name=f"Pi_{n}")


def reduced_preprojective_presentation(n: int) -> QuiverPresentation:
    """Quotient of the preprojective algebra by the central element z = sum a_i b_i."""
    rels = _mesh_relations(n)
    if n >= 2:
        rels.append({(f"a{i}", f"b{i}"): 1 for i in range(1, n)})
    return QuiverPresentation(n, _type_a_arrows(n), rels, name=f"Pibar_{n}")


class BoundAlgebra:
    """Finite-dimensional quotient of a path algebra over GF(p).

    Basis elements are path representatives; ``mult[i, j]`` holds the
    coordinates of ``basis[i] * basis[j]``.
    """

    def __init__(self, quiver: QuiverPresentation, prime: int, degree_paths, normal_forms):
        self.quiver = quiver
        self.n = quiver.vertices
        self.p = prime
        self.name = quiver.name
        self._degree_paths = degree_paths
        self.basis: list[Path] = []
        self.degree: list[int] = []
        local_to_global = []
        for d, nf in enumerate(normal_forms):
            free = nf["free"]
            local_to_global.append(list(range(len(self.basis), len(self.basis) + len(free))))
            for k in free:
                self.basis.append(degree_paths[d][k])
                self.degree.append(d)
        self.top_degree = len(normal_forms) - 1
        self.dim = len(self.basis)
        self._nf = normal_forms
        self._l2g = local_to_global
        self._path_index = [{path: k for k, path in enumerate(paths)} for paths in degree_paths]
        self.index = {path: i for i, path in enumerate(self.basis)}
        self.start = [path[0] for path in self.basis]
        self.end = [self.path_end(path) for path in self.basis]
        self.mult = self._multiplication_table()

    # -- paths ------------------------------------------------------------
    def path_end(self, path: Path) -> int:
        start, arrows = path
        return self.quiver.arrows[arrows[-1]].target if arrows else start

    def normal_form(self, path: Path) -> np.ndarray:
        """Coordinates of a path (zero if it is not composable or too long)."""
        vec = np.zeros(self.dim, dtype=np.int64)
        d = len(path[1])
        if d > self.top_degree:
            return vec
        k = self._path_index[d].get(path)
        if k is None:
            return vec
        row = self._nf[d]["matrix"][k]
        vec[self._l2g[d]] = row
        return vec

    def path_element(self, start: int, arrow_names=()) -> np.ndarray:
        arrows = tuple(self.quiver.arrow_index(a) for a in arrow_names)
        node = start
        for k in arrows:
            a = self.quiver.arrows[k]
            if a.source != node:
                return np.zeros(self.dim, dtype=np.int64)
            node = a.target
        return self.normal_form((start, arrows))

    def idempotent(self, i: int) -> np.ndarray:
        return self.normal_form((i, ()))

    def one(self) -> np.ndarray:
        return sum(self.idempotent(i) for i in range(1, self.n + 1)) % self.p

    def arrow(self, name: str) -> np.ndarray:
        a = self.quiver.arrows[self.quiver.arrow_index(name)]
        return self.path_element(a.source, (name,))

    def _multiplication_table(self) -> np.ndarray:
        t = np.zeros((self.dim, self.dim, self.dim), dtype=np.int64)
        for i, (si, ai) in enumerate(self.basis):
            for j, (sj, aj) in enumerate(self.basis):
                if self.end[i] != sj:
                    continue
                t[i, j] = self.normal_form((si, ai + aj))
        return t

    # -- elements ---------------------------------------------------------
    def mul(self, x, y) -> np.ndarray:
        outer = np.outer(np.asarray(x, dtype=np.int64) % self.p, np.asarray(y, dtype=np.int64) % self.p) % self.p
        return np.tensordot(outer, self.mult, axes=2) % self.p

    def left_mult_matrix(self, x) -> np.ndarray:
        """Matrix of y -> x*y, acting on column vectors."""
        x = np.asarray(x, dtype=np.int64) % self.p
        return np.tensordot(x, self.mult, axes=(0, 0)).T % self.p

    def right_mult_matrix(self, x) -> np.ndarray:
        """Matrix of y -> y*x, acting on column vectors."""
        x = np.asarray(x, dtype=np.int64) % self.p
        return np.tensordot(self.mult, x, axes=(1, 0)).T % self.p

    def block(self, i: int, j: int) -> list[int]:
        """Basis indices spanning e_i A e_j (paths from i to j)."""
        return [k for k in range(self.dim) if self.start[k] == i and self.end[k] == j]

    def dimension_of_block(self, i: int, j: int) -> int:
        return len(self.block(i, j))

    def path_label(self, k: int) -> str:
        start, arrows = self.basis[k]
        if not arrows:
            return f"e{start}"
        return "*".join(self.quiver.arrows[a].name for a in arrows)

    def to_json(self) -> dict:
        nz = np.argwhere(self.mult)
        return {
            "name": self.name,
            "prime": self.p,
            "dim": self.dim,
            "basis": [self.path_label(k) for k in range(self.dim)],
            "mult": [[int(i), int(j), int(k), int(self.mult[i, j, k])] for i, j, k in nz],
        }

    def __repr__(self):
        return f"BoundAlgebra({self.name}, dim={self.dim}, p={self.p})"


def build_algebra(
    q: QuiverPresentation, max_degree: int | None = None, prime: int = ff.DEFAULT_PRIME
) -> BoundAlgebra:
    if max_degree is None:
        max_degree = 2 * q.vertices + 2
    name_to_index = {a.name: k for k, a in enumerate(q.arrows)}
    rel_by_degree: dict[int, list[dict[Path, int]]] = {}
    for rel in q.relations:
        lengths = {len(path) for path in rel}
        if len(lengths) != 1 or 0 in lengths:
            raise InhomogeneousRelations(f"relation {rel} mixes path lengths {sorted(lengths)}")
        components: dict[tuple[int, int], dict[Path, int]] = {}
        for names, coeff in rel.items():
            arrows = tuple(name_to_index[nm] for nm in names)
            for x, y in zip(arrows, arrows[1:]):
                if q.arrows[x].target != q.arrows[y].source:
                    raise InhomogeneousRelations(f"{names} is not a path")
            key = (q.arrows[arrows[0]].source, q.arrows[arrows[-1]].target)
            components.setdefault(key, {})[(key[0], arrows)] = coeff
        rel_by_degree.setdefault(lengths.pop(), []).extend(components.values())

    degree_paths: list[list[Path]] = [[(v, ()) for v in range(1, q.vertices + 1)]]
    normal_forms = [{"free": list(range(q.vertices)), "matrix": np.eye(q.vertices, dtype=np.int64)}]
    ideal_prev = np.zeros((0, q.vertices), dtype=np.int64)

    def end_of(path: Path) -> int:
        return q.arrows[path[1][-1]].target if path[1] else path[0]

    for d in range(1, max_degree + 1):
        paths = sorted(
            [
                (start, arrows + (k,))
                for start, arrows in degree_paths[d - 1]
                for k, a in enumerate(q.arrows)
                if a.source == end_of((start, arrows))
            ],
            key=lambda pth: tuple(q.arrows[k].name for k in pth[1]),
        )
        index = {pth: k for k, pth in enumerate(paths)}
        rows = []
        for comp in rel_by_degree.get(d, []):
            row = np.zeros(len(paths), dtype=np.int64)
            for pth, c in comp.items():
                row[index[pth]] = c
            rows.append(row)
        prev_paths = degree_paths[d - 1]
        for vec in ideal_prev:
            support = np.flatnonzero(vec)
            for k, a in enumerate(q.arrows):
                left = np.zeros(len(paths), dtype=np.int64)
                right = np.zeros(len(paths), dtype=np.int64)
                for s in support:
                    start, arrows = prev_paths[s]
                    if a.target == start:
                        left[index[(a.source, (k,) + arrows)]] += vec[s]
                    if a.source == end_of((start, arrows)):
                        right[index[(start, arrows + (k,))]] += vec[s]
                if left.any():
                    rows.append(left)
                if right.any():
                    rows.append(right)
        ideal = ff.row_space(np.array(rows) if rows else np.zeros((0, len(paths))), prime, cols=len(paths))
        pivots = set()
        if ideal.shape[0]:
            ideal, piv = ff.rref(ideal, prime)
            pivots = set(piv)
        free = [k for k in range(len(paths)) if k not in pivots]
        nf = np.zeros((len(paths), len(free)), dtype=np.int64)
        col_of = {k: c for c, k in enumerate(free)}
        for k in free:
            nf[k, col_of[k]] = 1
        for row, pc in zip(ideal, sorted(pivots)):
            # pivot path = - sum over free paths of row entries
            nf[pc] = (-row[free]) % prime
        degree_paths.append(paths)
        if not free:
            return BoundAlgebra(q, prime, degree_paths[:d], normal_forms)
        normal_forms.append({"free": free, "matrix": nf})
        ideal_prev = ideal
    raise DegreeBoundTooSmall(f"{q.name}: degree {max_degree} still has nonzero paths")


def preprojective_algebra(n: int, prime: int = ff.DEFAULT_PRIME, max_degree: int | None = None) -> BoundAlgebra:
    return build_algebra(preprojective_presentation(n), max_degree, prime)


def reduced_preprojective_algebra(n: int, prime: int = ff.DEFAULT_PRIME, max_degree: int | None = None) -> BoundAlgebra:
    return build_algebra(reduced_preprojective_presentation(n), max_degree, prime)
