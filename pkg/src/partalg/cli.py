"""Command-line front end.

Every subcommand prints JSON by default and plain text with ``--format text``.
Exit status is 0 on success, 1 when a verification fails and 2 on bad input.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from fractions import Fraction

from . import bounds
from .algebra import AlgebraError, Element, element_from_json
from .blocks import block_crosscheck, chain_classes, genfun, genfun_classes, label_set
from .coeff import SYMBOLIC, ModeError, Ring, format_rational, format_scalar, parse_rational
from .combinatorics import GraphVertex, Shape, count_paths, enumerate_paths, path_contents, path_counts, standard_path, vertices_at
from .diagram import Diagram, DiagramError, compose, diagram_from_json, format_diagram, parse_diagram
from .jm import JMCache, verify_relations
from .supersym import center_span, check_centrality, eval_l, eval_q, l_at_jm

SYMBOLIC_K_BOUND = 3
SPECIALIZED_K_BOUND = 4

EPILOG = (
    "Size caps: k <= 3 with symbolic d and k <= 4 with a numeric --delta; "
    "path enumeration up to level 8; blocks and center rank as documented per "
    "subcommand. Set PARTALG_MAX_K to raise every cap."
)


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _shape(text: str) -> Shape:
    try:
        return Shape.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _ring(args) -> Ring:
    return SYMBOLIC if args.delta is None else Ring(args.delta)


def _check_k(k: int, ring: Ring) -> None:
    if k < 1:
        raise UsageError(f"--k must be positive, got {k}")
    bounds.check(k, SYMBOLIC_K_BOUND if ring.symbolic else SPECIALIZED_K_BOUND, "k")


def _emit(args, obj, text: str) -> None:
    if args.format == "text":
        print(text)
    else:
        print(json.dumps(obj))


def _element_text(x: Element) -> str:
    if x.is_zero():
        return "0"
    return "\n".join(f"{format_scalar(c)}\t{format_diagram(d)}" for d, c in x.items())


# subcommands

def _read_operand(text: str, k: int | None, ring: Ring):
    text = text.strip()
    if text.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"bad JSON operand {text[:40]!r}: {exc}") from None
        if "terms" in obj:
            return element_from_json(obj)
        return diagram_from_json(obj)
    return parse_diagram(text, k)


def cmd_mul(args) -> int:
    ring = _ring(args)
    if args.operands:
        texts = list(args.operands)
    else:
        with (open(args.file) if args.file else contextlib.nullcontext(sys.stdin)) as fh:
            texts = [line for line in fh.read().splitlines() if line.strip()]
    if len(texts) != 2:
        raise UsageError(f"mul needs exactly two operands, got {len(texts)}")
    a, b = (_read_operand(t, args.k, ring) for t in texts)
    if isinstance(a, Diagram) and isinstance(b, Diagram):
        res = compose(a, b)
        obj = {"k": res.product.k, "product": [list(blk) for blk in res.product.blocks], "removed": res.removed}
        _emit(args, obj, f"{format_diagram(res.product)}\nremoved {res.removed}")
        return 0
    if not ring.symbolic:
        a, b = (x.specialize(ring.delta) if isinstance(x, Element) and x.ring.symbolic else x for x in (a, b))
    if isinstance(a, Diagram):
        a = Element.from_diagram(a, b.ring if isinstance(b, Element) else ring)
    if isinstance(b, Diagram):
        b = Element.from_diagram(b, a.ring)
    prod = a * b
    _emit(args, prod.to_json(), _element_text(prod))
    return 0


def cmd_jm(args) -> int:
    ring = _ring(args)
    _check_k(args.k, ring)
    cache = JMCache(args.k, ring)
    fn = {"L": cache.L, "N": cache.N, "sigma": cache.sigma}[args.which]
    x = fn(args.index)
    _emit(args, x.to_json(), _element_text(x))
    return 0


def cmd_verify(args) -> int:
    ring = _ring(args)
    k = args.k if args.k is not None else max(1, (args.level + 1) // 2)
    _check_k(k, ring)
    if not 0 <= args.level <= 2 * k:
        raise UsageError(f"--level {args.level} out of range for k={k}")
    rep = verify_relations(args.level, JMCache(k, ring))
    obj = {"level": args.level, "k": k, "mode": ring.mode, "pass": rep.passed, "results": rep.to_json()}
    lines = [f"{'ok  ' if c.passed else 'FAIL'} {c.relation} {json.dumps(c.indices)}" for c in rep.entries]
    lines.append(f"{len(rep.entries) - len(rep.failures)}/{len(rep.entries)} passed")
    _emit(args, obj, "\n".join(lines))
    return 0 if rep.passed else 1


def cmd_ssp(args) -> int:
    ring = _ring(args)
    if args.at_jm:
        if args.kind != "l":
            raise UsageError("--at-jm supports only the elementary family 'l'")
        if args.r is None:
            raise UsageError("--at-jm needs --r")
        k = args.k if args.k is not None else max(1, (args.r + 1) // 2)
        _check_k(k, ring)
        x = l_at_jm(args.n, args.r, JMCache(k, ring))
        _emit(args, x.to_json(), _element_text(x))
        return 0
    if args.values is None:
        raise UsageError("give --values or --at-jm")
    toks = [t for t in args.values.split(",") if t.strip()]
    try:
        vals = [parse_rational(t) for t in toks]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    fn = eval_l if args.kind == "l" else eval_q
    v = fn(args.n, vals)
    _emit(args, {"kind": args.kind, "n": args.n, "value": format_rational(v)}, format_rational(v))
    return 0


def cmd_center_check(args) -> int:
    ring = _ring(args)
    k = args.k if args.k is not None else max(1, (args.r + 1) // 2)
    _check_k(k, ring)
    if not 0 <= args.r <= 2 * k:
        raise UsageError(f"--r {args.r} out of range for k={k}")
    rep = check_centrality(args.r, args.nmax, JMCache(k, ring))
    obj = {"r": args.r, "k": k, "mode": ring.mode, "pass": rep.passed, "results": rep.to_json()}
    lines = [f"{'ok  ' if c.passed else 'FAIL'} l_{c.indices['n']} central at level {args.r}" for c in rep.entries]
    _emit(args, obj, "\n".join(lines))
    return 0 if rep.passed else 1


def cmd_center_rank(args) -> int:
    span = center_span(args.k, args.delta, args.nmax, args.degree)
    expected = len(vertices_at(2 * args.k))
    obj = span.to_json()
    obj["expected"] = expected
    text = f"rank {span.rank} (expected {expected}), ranks by round {span.ranks}, stable {span.stable}"
    _emit(args, obj, text)
    return 0 if span.stable else 1


def cmd_branch(args) -> int:
    verts = vertices_at(args.level)
    counts = path_counts(args.level) if args.counts else None
    obj = []
    for v in verts:
        item = v.to_json()
        if counts is not None:
            item["paths"] = counts.get(v, 0)
        obj.append(item)
    lines = [f"{v.shape} l={v.l}" + (f" paths={counts.get(v, 0)}" if counts is not None else "") for v in verts]
    _emit(args, {"level": args.level, "vertices": obj}, "\n".join(lines))
    return 0


def _target(args) -> GraphVertex:
    try:
        return GraphVertex(args.level, args.l, args.shape)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_paths(args) -> int:
    t = _target(args)
    if args.count_only:
        n = count_paths(t)
        _emit(args, {"target": t.to_json(), "level": t.level, "count": n}, str(n))
        return 0
    paths = enumerate_paths(t)
    obj = {"target": t.to_json(), "level": t.level, "count": len(paths), "paths": [p.to_json() for p in paths]}
    lines = [" -> ".join(str(s) for s in p.shapes) for p in paths]
    _emit(args, obj, "\n".join(lines))
    return 0


def cmd_std_path(args) -> int:
    t = _target(args)
    p = standard_path(t)
    obj = {"target": t.to_json(), "level": t.level, "path": p.to_json()}
    text = " -> ".join(str(s) for s in p.shapes)
    if args.contents:
        cs = path_contents(p)
        obj["contents"] = [c.to_json() for c in cs]
        text += "\n" + ", ".join(str(c) for c in cs)
    _emit(args, obj, text)
    return 0


def cmd_blocks(args) -> int:
    k, delta = args.k, args.delta
    obj = {"delta": format_rational(delta), "k": k}
    lines = []
    cross = None
    if args.method in ("chains", "both"):
        part = chain_classes(k, delta)
    else:
        part = genfun_classes(k, delta)
    obj["classes"] = part.to_json()
    for c in part.classes:
        lines.append(" ~ ".join(f"({v.shape},{v.l})" for v in c))
    if args.method == "both":
        cross = block_crosscheck(k, delta)
        obj["crosscheck"] = cross
        lines.append(f"crosscheck {str(cross).lower()}")
    if args.genfun:
        obj["genfun"] = [
            dict(genfun(v, delta).to_json(), shape=list(v.shape), l=v.l) for v in label_set(k, delta).members
        ]
    _emit(args, obj, "\n".join(lines))
    return 1 if cross is False else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="partalg", description="Exact computation in the partition algebra.", epilog=EPILOG)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        sp = sub.add_parser(name, help=help_text, description=help_text, epilog=EPILOG)
        sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.set_defaults(func=fn)
        return sp

    def add_delta(sp, default=None, help_text="exact rational value of d; omit for symbolic d"):
        sp.add_argument("--delta", type=_rational, default=default, help=help_text)

    sp = add("mul", cmd_mul, "multiply two diagrams or elements (arguments, --file, or two lines on stdin)")
    sp.add_argument("operands", nargs="*", help="diagram text such as \"1 2' | 2 1'\" or JSON")
    sp.add_argument("--file")
    sp.add_argument("--k", type=int, help="strand count when the diagram text leaves it implicit")
    add_delta(sp)

    sp = add("jm", cmd_jm, "print L_i, N_i or sigma_i")
    sp.add_argument("which", choices=("L", "N", "sigma"))
    sp.add_argument("index", type=int)
    sp.add_argument("--k", type=int, required=True)
    add_delta(sp)

    sp = add("verify", cmd_verify, "check the relation catalogue at a level")
    sp.add_argument("--level", type=int, required=True)
    sp.add_argument("--k", type=int)
    add_delta(sp)

    sp = add("ssp", cmd_ssp, "evaluate q_n or l_n at numbers or at the normalised JM elements")
    sp.add_argument("kind", choices=("l", "q"))
    sp.add_argument("n", type=int)
    sp.add_argument("--values", help="comma-separated rationals x_1,x_2,...")
    sp.add_argument("--at-jm", action="store_true")
    sp.add_argument("--r", type=int)
    sp.add_argument("--k", type=int)
    add_delta(sp)

    sp = add("center-check", cmd_center_check, "check that l_0..l_nmax at the JM elements are central")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--nmax", type=int, default=4)
    sp.add_argument("--k", type=int)
    add_delta(sp)

    sp = add("center-rank", cmd_center_rank, "rank of the span of products of l_n at level 2k (k <= 3)")
    sp.add_argument("--k", type=int, required=True)
    add_delta(sp, default=Fraction(5), help_text="exact rational value of d (default 5)")
    sp.add_argument("--nmax", type=int, help="largest degree n used (default 2k)")
    sp.add_argument("--degree", type=int, help="number of multiplication rounds (default 2k)")

    sp = add("branch", cmd_branch, "list the vertices of the branching graph on a level")
    sp.add_argument("--level", type=int, required=True)
    sp.add_argument("--counts", action="store_true", help="also count paths to each vertex")

    for name, fn, help_text in (
        ("paths", cmd_paths, "enumerate paths to a vertex (level <= 8)"),
        ("std-path", cmd_std_path, "the standard path to a vertex"),
    ):
        sp = add(name, fn, help_text)
        sp.add_argument("--shape", type=_shape, required=True, help="comma-separated parts, empty for the empty shape")
        sp.add_argument("--l", type=int, required=True)
        sp.add_argument("--level", type=int, required=True)
        if name == "paths":
            sp.add_argument("--count-only", action="store_true")
        else:
            sp.add_argument("--contents", action="store_true")

    sp = add("blocks", cmd_blocks, "block classes of the label set (k <= 6)")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--delta", type=_rational, required=True)
    sp.add_argument("--method", choices=("chains", "genfun", "both"), default="both")
    sp.add_argument("--genfun", action="store_true", help="also print every generating function")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DiagramError, AlgebraError, ModeError, bounds.BoundError, ValueError, KeyError, OSError) as exc:
        print(f"partalg {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
