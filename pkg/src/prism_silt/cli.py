"""Command line front end: ``prism-silt <command> ...``.

JSON and DOT go to stdout, progress and pass/fail lines to stderr.  The exit
status is 0 when every requested check passes, 1 when a check fails and 2 on
bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import verify as V
from .algebra.field import DEFAULT_PRIME
from .errors import BoundExceeded, ParseError, PrismSiltError
from .geometry import PrismGeometry, simplex_of_word, verify_triangulation_geometry, word_of_simplex
from .perms import Permutation, all_permutations, perm_of_triangulation, triangulation_of
from .silting import mizuno_pair, pair_of_silting, silting_of_triangulation
from .triangulations import Triangulation, enumerate_triangulations, flip_graph, validate_triangulation
from .words import (
    Kind,
    Word,
    classify,
    enumerate_words,
    g_vector,
    shifted_projective_word,
    validate_word,
    word_from_g_vector,
)

SCHEMA = V.SCHEMA
SINGLE = ("word", "simplex", "gvec", "pair")
SETS = ("perm", "silt", "tri", "sttilt")


def _emit(payload) -> None:
    if isinstance(payload, dict):
        payload = {"schema": SCHEMA, **payload}
    json.dump(payload, sys.stdout, indent=2, default=str)
    sys.stdout.write("\n")


def _log(msg: str) -> None:
    print(msg, file=sys.stderr)


def _words_of(text: str) -> list[Word]:
    items = [t for t in re.split(r"[\s,{}()]+", text) if t]
    if not items:
        raise ParseError(f"no words in {text!r}")
    return [validate_word(t) for t in items]


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in re.split(r"[\s,()\[\]]+", text) if t]
    except ValueError as exc:
        raise ParseError(f"cannot read integers from {text!r}") from exc


def _complex_text(w: Word) -> str:
    g = g_vector(w)
    minus = " + ".join(f"P{i}" for i, v in enumerate(g, 1) if v < 0) or "0"
    zero = " + ".join(f"P{i}" for i, v in enumerate(g, 1) if v > 0) or "0"
    return f"{minus} -> {zero}"


# -- single objects: word, simplex, g-vector, indecomposable pair ------------

def parse_single(kind: str, text: str, n: int | None) -> Word:
    if kind == "word":
        return validate_word(text.strip())
    if kind == "gvec":
        return word_from_g_vector(_ints(text))
    if kind == "simplex":
        labels = [t for t in re.split(r"[\s,{}]+", text) if t]
        vertices = []
        for lab in labels:
            m = re.fullmatch(r"([ab])_?(\d+)", lab)
            if not m:
                raise ParseError(f"bad vertex {lab!r}; expected a0, b3, ...")
            vertices.append((m.group(1), int(m.group(2))))
        return word_of_simplex(PrismGeometry(len(vertices) - 1), vertices)
    if kind == "pair":
        m = re.fullmatch(r"\s*(module|shifted)\s*:\s*(\S+)\s*", text)
        if not m:
            raise ParseError("pair must be 'module:<word>' or 'shifted:<k>' (with --n)")
        if m.group(1) == "module":
            w = validate_word(m.group(2))
            if classify(w).kind is Kind.SHIFTED_PROJECTIVE:
                raise ParseError(f"{w} is a shifted projective, write shifted:{classify(w).index}")
            return w
        if n is None:
            raise ParseError("shifted:<k> needs --n")
        return shifted_projective_word(n, int(m.group(2)))
    raise ParseError(f"unknown kind {kind!r}")


def render_single(kind: str, w: Word):
    if kind == "word":
        return {"n": w.n, "word": str(w)}
    if kind == "gvec":
        return {"n": w.n, "gvec": list(g_vector(w))}
    if kind == "simplex":
        s = simplex_of_word(PrismGeometry(w.n), w)
        return {"n": w.n, "simplex": [f"{c}{i}" for c, i in sorted(s, key=lambda v: v[1])]}
    c = classify(w)
    if c.kind is Kind.SHIFTED_PROJECTIVE:
        return {"n": w.n, "pair": {"module": None, "shifted": c.index}, "complex": _complex_text(w)}
    return {"n": w.n, "pair": {"module": str(w), "shifted": None}, "complex": _complex_text(w)}


# -- maximal objects: permutation, silting complex, triangulation, pair ------

def parse_set(kind: str, text: str, n: int | None) -> Triangulation:
    if kind == "perm":
        return triangulation_of(Permutation.parse(text))
    if kind in ("silt", "tri"):
        return validate_triangulation(_words_of(text))
    if kind == "sttilt":
        if "|" not in text:
            raise ParseError("support tau-tilting pair must be '<module words>|<shifted vertices>'")
        left, right = text.split("|", 1)
        modules = _words_of(left) if left.strip() else []
        shifted = _ints(right)
        if modules:
            n = modules[0].n
        if n is None:
            raise ParseError("a pair without module words needs --n")
        return validate_triangulation(modules + [shifted_projective_word(n, k) for k in shifted])
    raise ParseError(f"unknown kind {kind!r}")


def render_set(kind: str, t: Triangulation):
    if kind == "perm":
        w = perm_of_triangulation(t)
        return {"n": t.n, "perm": str(w), "one_line": list(w.one_line)}
    if kind == "silt":
        s = silting_of_triangulation(t)
        return {"n": t.n, "words": [str(w) for w in s.ordered],
                "complexes": [_complex_text(w) for w in s.ordered]}
    if kind == "tri":
        cells = [sorted(f"{c}{i}" for c, i in cell) for cell in t.maximal_cells]
        return {"n": t.n, "words": [str(w) for w in t.ordered], "cells": cells}
    pair = pair_of_silting(silting_of_triangulation(t))
    return {"n": t.n, "modules": [str(w) for w in pair.module_words], "shifted": list(pair.shifted)}


# -- commands -----------------------------------------------------------------

def _config(args) -> V.Config:
    return V.Config(n=args.n, prime=args.prime, degree_bound=args.degree_bound,
                    retries=args.retries, seed=args.seed, force=args.force)


def cmd_enumerate(args) -> int:
    if args.kind == "words":
        items = [str(w) for w in enumerate_words(args.n)]
    elif args.kind == "triangulations":
        items = [[str(w) for w in t.ordered] for t in enumerate_triangulations(args.n)]
    else:
        items = [str(w) for w in all_permutations(args.n)]
    _log(f"{len(items)} {args.kind} at n={args.n}")
    if args.format == "table":
        for it in items:
            print(" ".join(it) if isinstance(it, list) else it)
    else:
        _emit({"kind": args.kind, "n": args.n, "count": len(items), "items": items})
    return 0


def cmd_convert(args) -> int:
    src, dst = args.source, args.to
    if (src in SINGLE) != (dst in SINGLE):
        raise ParseError(f"cannot convert {src} to {dst}: one is a single summand, the other a maximal object")
    if src in SINGLE:
        _emit({"from": src, "to": dst, "value": render_single(dst, parse_single(src, args.value, args.n))})
    else:
        _emit({"from": src, "to": dst, "value": render_set(dst, parse_set(src, args.value, args.n))})
    return 0


def _print_report(report: V.SuiteReport) -> None:
    for c in report.checks:
        _log(f"{'PASS' if c.passed else 'FAIL'}  {report.suite}:{c.name}  ({c.seconds:.2f}s)")


def cmd_verify(args) -> int:
    cfg = _config(args)
    reports = V.run_all(cfg) if args.suite == "all" else [V.run_suite(args.suite, cfg)]
    for r in reports:
        _print_report(r)
    ok = all(r.passed for r in reports)
    _emit({"suite": args.suite, "n": args.n, "passed": ok, "reports": [r.to_json() for r in reports]})
    return 0 if ok else 1


def cmd_flip_graph(args) -> int:
    if args.n > 6 and not args.force:
        raise BoundExceeded("flip-graph is bounded by n <= 6; pass --force")
    fg = flip_graph(args.n)
    labels = [str(perm_of_triangulation(t)) for t in fg.vertices]
    edges = []
    for i, j in fg.edges:
        (x,) = fg.vertices[i].words - fg.vertices[j].words
        (y,) = fg.vertices[j].words - fg.vertices[i].words
        edges.append((labels[i], labels[j], str(x), str(y)))
    _log(f"{len(labels)} vertices, {len(edges)} edges")
    if args.format == "dot":
        print("graph flips {")
        for i, lab in enumerate(labels):
            words = " ".join(str(w) for w in fg.vertices[i].ordered)
            print(f'  "{lab}" [tooltip="{words}"];')
        for u, v, x, y in edges:
            print(f'  "{u}" -- "{v}" [label="{x}/{y}"];')
        print("}")
    else:
        _emit({
            "n": args.n,
            "vertices": [{"perm": lab, "words": [str(w) for w in t.ordered]} for lab, t in zip(labels, fg.vertices)],
            "edges": [{"source": u, "target": v, "out": x, "in": y} for u, v, x, y in edges],
        })
    return 0


def cmd_verify_geometry(args) -> int:
    g = PrismGeometry(args.n)
    if args.perm:
        w = Permutation.parse(args.perm)
        if w.n != args.n:
            raise ParseError(f"permutation {args.perm} has rank {w.n}, not {args.n}")
        targets = [triangulation_of(w)]
    else:
        if args.n > V.BOUNDS["geometry"] and not args.force:
            raise BoundExceeded(f"verify-geometry over all triangulations is bounded by n <= {V.BOUNDS['geometry']}")
        targets = enumerate_triangulations(args.n)
    reports = []
    for t in targets:
        rep = verify_triangulation_geometry(g, t)
        reports.append({"perm": str(perm_of_triangulation(t)), **rep.to_json()})
        _log(f"{'PASS' if rep.passed else 'FAIL'}  {reports[-1]['perm']}  {t}")
    ok = all(r["passed"] for r in reports)
    _emit({"n": args.n, "passed": ok, "triangulations": reports})
    return 0 if ok else 1


def cmd_verify_mizuno(args) -> int:
    if args.n > V.BOUNDS["mizuno"] and not args.force:
        raise BoundExceeded(f"verify-mizuno is bounded by n <= {V.BOUNDS['mizuno']}; pass --force")
    cfg = _config(args)
    alg = V.algebra("Pi", args.n, cfg.prime, cfg.degree_bound)
    rng = cfg.rng()
    rows = []
    for w in all_permutations(args.n):
        r = mizuno_pair(w, alg, retries=cfg.retries, rng=rng)
        rows.append(r.to_json())
        _log(f"{'PASS' if r.verdict else 'FAIL'}  {w}")
    ok = all(r["verdict"] for r in rows)
    _emit({"n": args.n, "passed": ok, "rows": rows})
    return 0 if ok else 1


def _default_seed() -> int:
    raw = os.environ.get("PRISM_SILT_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"PRISM_SILT_SEED must be an integer, got {raw!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=int, default=DEFAULT_PRIME, help="prime field size")
    common.add_argument("--degree-bound", type=int, default=None, help="path length bound for algebra builds")
    common.add_argument("--retries", type=int, default=20, help="random tries in isomorphism tests")
    common.add_argument("--seed", type=int, default=_default_seed(), help="RNG seed (env PRISM_SILT_SEED)")
    common.add_argument("--force", action="store_true", help="run beyond the default rank bounds")

    parser = argparse.ArgumentParser(prog="prism-silt", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list words, triangulations or permutations")
    p.add_argument("kind", choices=("words", "triangulations", "permutations"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("convert", parents=[common], help="transport a value between coordinate systems")
    p.add_argument("value")
    p.add_argument("--from", dest="source", required=True, choices=SINGLE + SETS)
    p.add_argument("--to", required=True, choices=SINGLE + SETS)
    p.add_argument("--n", type=int, default=None, help="rank, when the value does not determine it")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=V.SUITES + ("all",), default="all")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("flip-graph", parents=[common], help="export the flip graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.set_defaults(func=cmd_flip_graph)

    p = sub.add_parser("verify-geometry", parents=[common], help="check triangulations against exact geometry")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--perm", default=None)
    p.set_defaults(func=cmd_verify_geometry)

    p = sub.add_parser("verify-mizuno", parents=[common], help="compare Mizuno ideals with triangulations")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_verify_mizuno)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "n", None) is not None and args.n < 1:
        _log("error: --n must be at least 1")
        return 2
    try:
        return args.func(args)
    except PrismSiltError as exc:
        _log(f"error: {exc}")
        return 2
    except ValueError as exc:
        _log(f"error: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
