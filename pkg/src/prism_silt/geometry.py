"""Exact geometry of the prism Delta_n x Delta_1.

Vertices a_i and b_i (0 <= i <= n) live in Q^{n+3}: a_i = e_i + e_{n+1} and
b_i = e_i + e_{n+2} with 0-based coordinates.  Everything here is exact
integer or Fraction arithmetic.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegenerateSimplex, NotNested, NotWordSimplex, RankMismatch
from .triangulations import Triangulation, Vertex, maximal_cells, validate_triangulation
from .words import Word

Point = tuple[Fraction, ...]


def _integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    """Scale each row by its common denominator (rank and determinant signs survive)."""
    out = []
    for row in rows:
        fr = [Fraction(x) for x in row]
        den = math.lcm(*(x.denominator for x in fr)) if fr else 1
        out.append([int(x * den) for x in fr])
    return out


def bareiss_rank(rows: Sequence[Sequence]) -> int:
    """Rank by fraction-free elimination."""
    m = _integer_rows(rows)
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    r, prev = 0, 1
    for c in range(ncols):
        piv = next((k for k in range(r, nrows) if m[k][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for k in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                m[k][j] = (m[r][c] * m[k][j] - m[k][c] * m[r][j]) // prev
            m[k][c] = 0
        prev = m[r][c]
        r += 1
        if r == nrows:
            break
    return r


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    m = [[int(x) for x in row] for row in matrix]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    sign, prev = 1, 1
    for c in range(n):
        piv = next((k for k in range(c, n) if m[k][c]), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        for k in range(c + 1, n):
            for j in range(c + 1, n):
                m[k][j] = (m[c][c] * m[k][j] - m[k][c] * m[c][j]) // prev
            m[k][c] = 0
        prev = m[c][c]
    return sign * m[n - 1][n - 1] if n else 1


def _differences(points: Sequence[Sequence]) -> list[list[Fraction]]:
    base = [Fraction(x) for x in points[0]]
    return [[Fraction(x) - y for x, y in zip(p, base)] for p in points[1:]]


def affinely_independent(points: Sequence[Sequence]) -> bool:
    points = list(points)
    if len(points) <= 1:
        return True
    return bareiss_rank(_differences(points)) == len(points) - 1


def affine_rank(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull."""
    points = list(points)
    if not points:
        return -1
    return bareiss_rank(_differences(points)) if len(points) > 1 else 0


def simplex_volume_sq(points: Sequence[Sequence]) -> Fraction:
    """Squared k-volume of a k-simplex: det(G G^T) / (k!)^2 with G the edge vectors."""
    points = list(points)
    if not points:
        raise DegenerateSimplex("empty point set")
    k = len(points) - 1
    if k == 0:
        return Fraction(1)
    g = _differences(points)
    gram = [[sum(x * y for x, y in zip(u, v)) for v in g] for u in g]
    den = math.lcm(*(x.denominator for row in gram for x in row))
    det = Fraction(bareiss_det([[int(x * den) for x in row] for row in gram]), den ** k)
    if det == 0:
        raise DegenerateSimplex(f"{len(points)} points are affinely dependent")
    return det / math.factorial(k) ** 2


@dataclass(frozen=True)
class PrismGeometry:
    n: int
    points: dict[Vertex, Point] = field(init=False, compare=False)
    facets: list[frozenset[Vertex]] = field(init=False, compare=False)
    circuits: list[tuple[frozenset[Vertex], frozenset[Vertex]]] = field(init=False, compare=False)

    def __post_init__(self):
        n = self.n
        if n < 1:
            raise ValueError("rank must be at least 1")
        dim = n + 3
        pts = {}
        for i in range(n + 1):
            for letter, extra in (("a", n + 1), ("b", n + 2)):
                v = [Fraction(0)] * dim
                v[i] = v[extra] = Fraction(1)
                pts[(letter, i)] = tuple(v)
        facets = [
            frozenset(("a", i) for i in range(n + 1)),
            frozenset(("b", i) for i in range(n + 1)),
        ]
        facets += [frozenset(pts) - {("a", i), ("b", i)} for i in range(n + 1)]
        circuits = [
            (frozenset({("a", i), ("b", j)}), frozenset({("a", j), ("b", i)}))
            for i, j in itertools.combinations(range(n + 1), 2)
        ]
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "facets", facets)
        object.__setattr__(self, "circuits", circuits)

    @property
    def vertices(self) -> list[Vertex]:
        return sorted(self.points, key=lambda v: (v[0], v[1]))

    def coordinates(self, simplex: Iterable[Vertex]) -> list[Point]:
        return [self.points[v] for v in sorted(simplex)]

    def volume_sq(self) -> Fraction:
        """Squared volume of the whole prism: Delta_n (sqrt(n+1)/n!) times a segment of length sqrt 2."""
        return Fraction(2 * (self.n + 1), math.factorial(self.n) ** 2)


def simplex_of_word(g: PrismGeometry, w: Word) -> frozenset[Vertex]:
    if w.n != g.n:
        raise RankMismatch(f"word of rank {w.n} in a prism of rank {g.n}")
    return frozenset((w[i], i) for i in range(w.n + 1))


def word_of_simplex(g: PrismGeometry, simplex: Iterable[Vertex]) -> Word:
    s = set(simplex)
    indices = sorted(i for _, i in s)
    if indices != list(range(g.n + 1)):
        raise NotWordSimplex(f"{sorted(s)} does not pick one of a_i, b_i for each i")
    try:
        return Word(tuple(0 if ("a", i) in s else 1 for i in range(g.n + 1)))
    except ValueError as exc:
        raise NotWordSimplex(str(exc)) from exc


def is_internal(g: PrismGeometry, simplex: Iterable[Vertex]) -> bool:
    s = frozenset(simplex)
    if not s <= set(g.points):
        raise ValueError(f"{sorted(s - set(g.points))} are not prism vertices")
    return not any(s <= f for f in g.facets)


def circuit_witness(g: PrismGeometry, s1: Iterable[Vertex], s2: Iterable[Vertex]):
    """A circuit with one half in each simplex, or None."""
    s1, s2 = frozenset(s1), frozenset(s2)
    for plus, minus in g.circuits:
        if (plus <= s1 and minus <= s2) or (minus <= s1 and plus <= s2):
            return plus, minus
    return None


def interiors_intersect(g: PrismGeometry, s1: Iterable[Vertex], s2: Iterable[Vertex]) -> bool:
    word_of_simplex(g, s1)
    word_of_simplex(g, s2)
    return circuit_witness(g, s1, s2) is not None


def _vertex_name(v: Vertex) -> str:
    return f"{v[0]}{v[1]}"


def _names(vs: Iterable[Vertex]) -> list[str]:
    return [_vertex_name(v) for v in sorted(vs)]


@dataclass
class GeometryReport:
    n: int
    words: list[str]
    checks: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(self.checks.values())

    def record(self, name: str, ok: bool, witness=None):
        self.checks[name] = bool(ok)
        if not ok and witness is not None:
            self.witnesses[name] = witness

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "words": self.words,
            "passed": self.passed,
            "checks": dict(self.checks),
            "witnesses": self.witnesses,
        }


_REFERENCE_TOTALS: dict[int, Fraction] = {}


def reference_total_sq(g: PrismGeometry) -> Fraction:
    """Squared total volume of the staircase triangulation of the identity."""
    if g.n not in _REFERENCE_TOTALS:
        chain = [Word((0,) * (j + 1) + (1,) * (g.n - j)) for j in range(g.n)]
        cells = maximal_cells(validate_triangulation(chain))
        vols = [simplex_volume_sq(g.coordinates(c)) for c in cells]
        # the cells share one volume, so the total is (n+1) times its root
        if len(set(vols)) != 1:
            raise AssertionError("reference cells have different volumes")
        _REFERENCE_TOTALS[g.n] = len(cells) ** 2 * vols[0]
    return _REFERENCE_TOTALS[g.n]


def verify_triangulation_geometry(g: PrismGeometry, t: Triangulation | Iterable[Word]) -> GeometryReport:
    """Check a word set against the geometry, recording a witness for every failure."""
    words = sorted(t.words) if isinstance(t, Triangulation) else sorted(set(t))
    report = GeometryReport(g.n, [str(w) for w in words])
    simplices = {w: simplex_of_word(g, w) for w in words}

    report.record("word_count", len(words) == g.n, {"expected": g.n, "got": len(words)})

    bad = [str(w) for w, s in simplices.items() if not affinely_independent(g.coordinates(s))]
    report.record("simplices_independent", not bad, bad)
    bad = [str(w) for w, s in simplices.items() if not is_internal(g, s)]
    report.record("simplices_internal", not bad, bad)

    clash = None
    for x, y in itertools.combinations(words, 2):
        c = circuit_witness(g, simplices[x], simplices[y])
        if c is not None:
            clash = {"words": [str(x), str(y)], "circuit": [_names(c[0]), _names(c[1])]}
            break
    report.record("interiors_disjoint", clash is None, clash)

    if not isinstance(t, Triangulation):
        try:
            t = validate_triangulation(words)
        except (ValueError, NotNested) as exc:
            report.record("cells", False, str(exc))
            return report
    cells = maximal_cells(t)
    report.record("cell_count", len(cells) == g.n + 1, len(cells))

    bad = [_names(c) for c in cells if len(c) != g.n + 2 or not affinely_independent(g.coordinates(c))]
    report.record("cells_independent", not bad, bad)

    clash = None
    for c1, c2 in itertools.combinations(cells, 2):
        c = circuit_witness(g, c1, c2)
        if c is not None:
            clash = {"cells": [_names(c1), _names(c2)], "circuit": [_names(c[0]), _names(c[1])]}
            break
    report.record("cells_disjoint", clash is None, clash)

    vols = [simplex_volume_sq(g.coordinates(c)) for c in cells] if not bad else []
    equal = len(set(vols)) == 1
    report.record("equal_volumes", equal, sorted({str(v) for v in vols}))
    if equal:
        total = len(cells) ** 2 * vols[0]
        reference = reference_total_sq(g)
        report.record("reference_total", total == reference, {"total_sq": str(total), "reference_sq": str(reference)})
        report.record("prism_volume", total == g.volume_sq(), {"total_sq": str(total), "prism_sq": str(g.volume_sq())})

    bad = []
    for j, w in enumerate(t.ordered):
        shared = cells[j] & cells[j + 1]
        if len(shared) != g.n + 1 or shared != simplices[w]:
            bad.append({"cells": j, "shared": _names(shared), "word": str(w)})
    report.record("shared_facets", not bad, bad)
    return report
