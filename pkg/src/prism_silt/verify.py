"""Batch verification suites behind ``prism-silt verify``.

Every suite returns a SuiteReport: a list of named checks, each with a
pass flag, a short detail dictionary and its running time.  Suites refuse
ranks above their default bound unless ``force`` is set.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from functools import lru_cache

import networkx as nx
import numpy as np

from .algebra import field as ff
from .algebra.complexes import hom_complex_nonzero, minimal_presentation, tau, word_complex, word_module
from .algebra.modules import hom_dimension, iso_test
from .algebra.quiver import BoundAlgebra, preprojective_algebra, reduced_preprojective_algebra
from .errors import BoundExceeded, ParseError
from .geometry import (
    PrismGeometry,
    interiors_intersect,
    is_internal,
    simplex_of_word,
    verify_triangulation_geometry,
)
from .perms import Permutation, all_permutations, perm_of_triangulation, triangulation_of, weak_neighbors
from .silting import mizuno_ideal, mizuno_pair, pair_of_silting, silting_of_triangulation
from .triangulations import completions, compatibility_graph, enumerate_triangulations, flip_graph
from .words import (
    Kind,
    classify,
    crossing,
    enumerate_words,
    g_vector,
    hom_positive,
    tau_word,
    validate_word,
)

SCHEMA = "prism-silt/v1"

# largest rank each suite runs without --force
BOUNDS = {
    "count": 6,
    "dims": 6,
    "ext": 5,
    "tau": 5,
    "gvec": 5,
    "geometry": 5,
    "flips": 4,
    "rank2": 2,
    "mizuno": 4,
}
SUITES = ("count", "dims", "ext", "tau", "gvec", "geometry", "flips", "rank2", "mizuno")

# The full rank 2 table, permutations printed with values 1..3.  For each row:
# the words in lexicographic order, the complex of each word as
# (degree -1 vertices, degree 0 vertices), the module summands of the pair as
# (top vertices, dimension vector) in the same order, and the shifted vertices.
RANK2_TABLE = [
    {"perm": "123", "words": ["aab", "abb"], "complexes": [((), (2,)), ((), (1,))],
     "modules": [((2,), (1, 1)), ((1,), (1, 1))], "shifted": ()},
    {"perm": "213", "words": ["aab", "bab"], "complexes": [((), (2,)), ((1,), (2,))],
     "modules": [((2,), (1, 1)), ((2,), (0, 1))], "shifted": ()},
    {"perm": "132", "words": ["aba", "abb"], "complexes": [((2,), (1,)), ((), (1,))],
     "modules": [((1,), (1, 0)), ((1,), (1, 1))], "shifted": ()},
    {"perm": "231", "words": ["baa", "bab"], "complexes": [((1,), ()), ((1,), (2,))],
     "modules": [((2,), (0, 1))], "shifted": (1,)},
    {"perm": "312", "words": ["aba", "bba"], "complexes": [((2,), (1,)), ((2,), ())],
     "modules": [((1,), (1, 0))], "shifted": (2,)},
    {"perm": "321", "words": ["baa", "bba"], "complexes": [((1,), ()), ((2,), ())],
     "modules": [], "shifted": (1, 2)},
]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail, "seconds": round(self.seconds, 3)}


@dataclass
class SuiteReport:
    suite: str
    n: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "suite": self.suite,
            "n": self.n,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }


@dataclass
class Config:
    n: int = 2
    prime: int = ff.DEFAULT_PRIME
    degree_bound: int | None = None
    retries: int = 20
    seed: int = 0
    force: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("rank must be at least 1")
        if self.prime < 2 or any(self.prime % d == 0 for d in range(2, math.isqrt(self.prime) + 1)):
            raise ValueError(f"{self.prime} is not prime")
        if self.retries < 1 or (self.degree_bound is not None and self.degree_bound < 1):
            raise ValueError("bounds must be positive")

    def rng(self):
        return np.random.default_rng(self.seed)


@lru_cache(maxsize=None)
def algebra(kind: str, n: int, prime: int = ff.DEFAULT_PRIME, degree_bound: int | None = None) -> BoundAlgebra:
    builders = {"Pi": preprojective_algebra, "Pibar": reduced_preprojective_algebra}
    if kind not in builders:
        raise ValueError(f"unknown algebra {kind!r}; choose Pi or Pibar")
    build = builders[kind]
    return build(n, prime=prime, max_degree=degree_bound)


def _algebra(cfg: Config, kind: str, n: int | None = None) -> BoundAlgebra:
    return algebra(kind, cfg.n if n is None else n, cfg.prime, cfg.degree_bound)


def _timed(name: str, fn) -> CheckResult:
    start = time.perf_counter()
    ok, detail = fn()
    return CheckResult(name, bool(ok), detail, time.perf_counter() - start)


# -- individual checks -----------------------------------------------------------

def check_word_count(n: int):
    count = len(set(enumerate_words(n)))
    return count == 2 ** (n + 1) - 2, {"words": count, "expected": 2 ** (n + 1) - 2}


def check_triangulation_count(n: int):
    found = {t.words for t in enumerate_triangulations(n)}
    image = {triangulation_of(w).words for w in all_permutations(n)}
    ok = len(found) == math.factorial(n + 1) and found == image
    return ok, {"triangulations": len(found), "expected": math.factorial(n + 1), "equals_perm_image": found == image}


def check_algebra_dims(cfg: Config, n: int):
    pi = _algebra(cfg, "Pi", n).dim
    pibar = _algebra(cfg, "Pibar", n).dim
    expected = (n * (n + 1) * (n + 2) // 6, n * n)
    return (pi, pibar) == expected, {"Pi": pi, "Pibar": pibar, "expected": list(expected)}


def check_ext(alg: BoundAlgebra):
    words = enumerate_words(alg.n)
    cs = {w: word_complex(alg, w) for w in words}
    bad, positive = [], 0
    for x, y in itertools.product(words, repeat=2):
        combo = hom_positive(x, y)
        kernel = hom_complex_nonzero(cs[x], cs[y])
        positive += kernel
        if combo != kernel:
            bad.append([str(x), str(y), combo, kernel])
    return not bad, {"algebra": alg.name, "pairs": len(words) ** 2, "nonzero": positive, "disagreements": bad[:5]}


def _tau_words(n: int):
    return [w for w in enumerate_words(n) if classify(w).kind is Kind.MODULE]


def check_tau(alg: BoundAlgebra, rng=None, retries: int = 20):
    bad, rigid_bad, count = [], [], 0
    for w in _tau_words(alg.n):
        count += 1
        m = word_module(alg, w)
        tm = tau(m)
        if not iso_test(tm, word_module(alg, tau_word(w)), retries=retries, rng=rng):
            bad.append([str(w), str(tau_word(w)), list(tm.dims)])
        if hom_dimension(m, tm):
            rigid_bad.append(str(w))
    ok = not bad and not rigid_bad
    return ok, {"algebra": alg.name, "words": count, "mismatches": bad[:5], "not_tau_rigid": rigid_bad[:5]}


def check_gvec(alg: BoundAlgebra, thin: bool, rng=None, retries: int = 20):
    """g-vector of each module word against the minimal presentation of its module.

    Over the reduced algebra the module is the thin word module, which must
    also be the cokernel of the word complex.  Over the full preprojective
    algebra the tau-rigid module is the cokernel of the word complex.
    """
    bad, count = [], 0
    for w in enumerate_words(alg.n):
        c = word_complex(alg, w)
        if c.g_vector() != g_vector(w) or not c.is_radical():
            bad.append([str(w), "complex", list(c.g_vector())])
            continue
        if not classify(w).is_module:
            continue
        count += 1
        m = c.cokernel()
        if thin and not iso_test(m, word_module(alg, w), retries=retries, rng=rng):
            bad.append([str(w), "cokernel is not the word module"])
        g = minimal_presentation(word_module(alg, w) if thin else m).g_vector()
        if g != g_vector(w):
            bad.append([str(w), "presentation", list(g)])
    return not bad, {"algebra": alg.name, "module_words": count, "failures": bad[:5]}


def check_example_presentations(cfg: Config):
    """The two printed presentations over the rank 6 reduced algebra."""
    alg = _algebra(cfg, "Pibar", 6)
    expected = {"aabbbab": ((5,), (2, 6)), "bababaa": ((1, 3, 5), (2, 4))}
    got = {}
    for text in expected:
        c = minimal_presentation(word_module(alg, validate_word(text)))
        got[text] = (c.minus, c.zero)
    return got == expected, {k: [list(v[0]), list(v[1])] for k, v in got.items()}


def check_example_tau(cfg: Config, rng=None):
    alg = _algebra(cfg, "Pibar", 5)
    w = validate_word("aababa")
    iso = iso_test(tau(word_module(alg, w)), word_module(alg, validate_word("bbaabb")), rng=rng)
    ok = str(tau_word(w)) == "bbaabb" and iso.isomorphic
    return ok, {"tau_word": str(tau_word(w)), "kernel_iso": iso.isomorphic}


def check_geometry_crossing(n: int):
    g = PrismGeometry(n)
    words = enumerate_words(n)
    simp = {w: simplex_of_word(g, w) for w in words}
    bad = [
        [str(x), str(y)] for x, y in itertools.product(words, repeat=2)
        if interiors_intersect(g, simp[x], simp[y]) != crossing(x, y)
    ]
    return not bad, {"pairs": len(words) ** 2, "disagreements": bad[:5]}


def check_geometry_internal(n: int):
    g = PrismGeometry(n)
    internal = {
        "".join(c) for c in itertools.product("ab", repeat=n + 1)
        if is_internal(g, {(letter, i) for i, letter in enumerate(c)})
    }
    words = {str(w) for w in enumerate_words(n)}
    # n+1 vertices that skip some index lie in a facet
    skipping = [
        s for s in itertools.combinations(g.vertices, n + 1)
        if len({i for _, i in s}) < n + 1 and is_internal(g, s)
    ]
    ok = internal == words and not skipping
    return ok, {"internal": len(internal), "words": len(words), "internal_non_word": len(skipping)}


def check_geometry_triangulations(n: int):
    g = PrismGeometry(n)
    bad = []
    for t in enumerate_triangulations(n):
        report = verify_triangulation_geometry(g, t)
        if not report.passed:
            bad.append(report.to_json())
    return not bad, {"triangulations": math.factorial(n + 1), "failures": bad[:2]}


def check_flip_graph(n: int):
    fg = flip_graph(n)
    g = fg.to_networkx()
    degrees = {d for _, d in g.degree()}
    perm_of = {i: perm_of_triangulation(t) for i, t in enumerate(fg.vertices)}
    mapped = {frozenset((perm_of[i], perm_of[j])) for i, j in fg.edges}
    swaps = {frozenset((w, u)) for w in all_permutations(n) for u in weak_neighbors(w)}
    ok = (
        g.number_of_nodes() == math.factorial(n + 1)
        and nx.is_connected(g)
        and degrees == {n}
        and mapped == swaps
    )
    return ok, {
        "vertices": g.number_of_nodes(),
        "edges": g.number_of_edges(),
        "degrees": sorted(degrees),
        "connected": nx.is_connected(g),
        "matches_position_swaps": mapped == swaps,
    }


def check_completions(n: int):
    """Every almost-complete compatible set has exactly two completions."""
    g = compatibility_graph(n)
    counts = {}
    for clique in nx.enumerate_all_cliques(g):
        if len(clique) > n - 1:
            break
        if len(clique) == n - 1:
            c = len(completions(clique, n))
            counts[c] = counts.get(c, 0) + 1
    if n == 1:
        counts = {len(completions([], 1)): 1}
    return set(counts) == {2}, {"completion_counts": {str(k): v for k, v in sorted(counts.items())}}


def rank2_rows(cfg: Config, rng=None) -> list[dict]:
    """The rank 2 table recomputed from permutations alone."""
    alg = _algebra(cfg, "Pi", 2)
    rows = []
    for golden in RANK2_TABLE:
        w = Permutation.parse(golden["perm"])
        t = triangulation_of(w)
        words = sorted(t.words, key=str)
        pair = pair_of_silting(silting_of_triangulation(t))
        modules = []
        for x in sorted(pair.module_words, key=str):
            m = word_complex(alg, x).cokernel()
            modules.append((tuple(v for v, d in enumerate(m.top_dims(), 1) for _ in range(d)), m.dims))
        result = mizuno_pair(w, alg, retries=cfg.retries, rng=rng)
        rows.append({
            "perm": golden["perm"],
            "words": [str(x) for x in words],
            "complexes": [(word_complex(alg, x).minus, word_complex(alg, x).zero) for x in words],
            "modules": modules,
            "shifted": pair.shifted,
            "mizuno": result.verdict,
        })
    return rows


def check_rank2_table(cfg: Config, rng=None):
    rows = rank2_rows(cfg, rng)
    bad = []
    for golden, row in zip(RANK2_TABLE, rows):
        mine = {k: row[k] for k in golden}
        if mine != golden or not row["mizuno"]:
            bad.append({"perm": golden["perm"], "computed": repr(mine), "mizuno": row["mizuno"]})
    return not bad, {"rows": len(rows), "mismatches": bad}


def check_mizuno(cfg: Config, n: int, rng=None):
    alg = _algebra(cfg, "Pi", n)
    bad = []
    for w in all_permutations(n):
        r = mizuno_pair(w, alg, retries=cfg.retries, rng=rng)
        if not r.verdict:
            bad.append(r.to_json())
    return not bad, {"permutations": math.factorial(n + 1), "failures": bad[:3]}


def check_reduced_word_independence(cfg: Config, n: int):
    alg = _algebra(cfg, "Pi", n)
    bad = [
        str(w) for w in all_permutations(n)
        if mizuno_ideal(w, alg, "smallest") != mizuno_ideal(w, alg, "largest")
    ]
    return not bad, {"permutations": math.factorial(n + 1), "differ": bad}


# -- suites ---------------------------------------------------------------------------

def _check_bound(suite: str, n: int, force: bool):
    if n > BOUNDS[suite] and not force:
        raise BoundExceeded(f"suite {suite!r} is bounded by n <= {BOUNDS[suite]}; use --force to run n = {n}")


def run_suite(suite: str, cfg: Config) -> SuiteReport:
    """Run one suite for every rank 1..cfg.n (rank2 always runs at rank 2)."""
    if suite == "all":
        raise ValueError("use run_all for the combined suite")
    if suite not in SUITES:
        raise ParseError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)} or all")
    _check_bound(suite, cfg.n, cfg.force)
    rng = cfg.rng()
    report = SuiteReport(suite, cfg.n)
    add = report.checks.append
    ranks = range(1, cfg.n + 1)
    if suite == "count":
        for n in ranks:
            add(_timed(f"word_count[n={n}]", lambda n=n: check_word_count(n)))
            add(_timed(f"triangulation_count[n={n}]", lambda n=n: check_triangulation_count(n)))
    elif suite == "dims":
        for n in ranks:
            add(_timed(f"algebra_dims[n={n}]", lambda n=n: check_algebra_dims(cfg, n)))
    elif suite == "ext":
        for n in ranks:
            for kind in ("Pibar", "Pi"):
                if kind == "Pi" and n > 4 and not cfg.force:
                    continue
                add(_timed(f"ext[{kind},n={n}]", lambda n=n, k=kind: check_ext(_algebra(cfg, k, n))))
    elif suite == "tau":
        for n in ranks:
            add(_timed(f"tau[n={n}]", lambda n=n: check_tau(_algebra(cfg, "Pibar", n), rng, cfg.retries)))
        if cfg.n >= 5:
            add(_timed("tau_example", lambda: check_example_tau(cfg, rng)))
    elif suite == "gvec":
        for n in ranks:
            add(_timed(f"gvec[Pibar,n={n}]", lambda n=n: check_gvec(_algebra(cfg, "Pibar", n), True, rng, cfg.retries)))
            add(_timed(f"gvec[Pi,n={n}]", lambda n=n: check_gvec(_algebra(cfg, "Pi", n), False, rng, cfg.retries)))
        if cfg.n >= 5:
            add(_timed("gvec_example_presentations", lambda: check_example_presentations(cfg)))
    elif suite == "geometry":
        for n in ranks:
            add(_timed(f"crossing[n={n}]", lambda n=n: check_geometry_crossing(n)))
            add(_timed(f"internal[n={n}]", lambda n=n: check_geometry_internal(n)))
            if n <= 4 or cfg.force:
                add(_timed(f"triangulations[n={n}]", lambda n=n: check_geometry_triangulations(n)))
    elif suite == "flips":
        for n in ranks:
            add(_timed(f"flip_graph[n={n}]", lambda n=n: check_flip_graph(n)))
            add(_timed(f"completions[n={n}]", lambda n=n: check_completions(n)))
    elif suite == "rank2":
        add(_timed("rank2", lambda: check_rank2_table(cfg, rng)))
    elif suite == "mizuno":
        for n in ranks:
            add(_timed(f"mizuno[n={n}]", lambda n=n: check_mizuno(cfg, n, rng)))
            if n <= 3:
                add(_timed(f"reduced_word_independence[n={n}]", lambda n=n: check_reduced_word_independence(cfg, n)))
    return report


def run_all(cfg: Config) -> list[SuiteReport]:
    """Every suite at rank cfg.n; the rank2 suite runs once at rank 2."""
    for suite in SUITES:
        if suite != "rank2":
            _check_bound(suite, cfg.n, cfg.force)
    reports = []
    for suite in SUITES:
        if suite == "rank2":
            if cfg.n >= 2:
                reports.append(run_suite(suite, Config(2, cfg.prime, cfg.degree_bound, cfg.retries, cfg.seed, cfg.force)))
            continue
        reports.append(run_suite(suite, cfg))
    return reports
