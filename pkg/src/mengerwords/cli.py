"""Command line surface for the word calculus and the game engine.

Exit status: 0 on success, 1 on domain answers that signal failure (bad
words, non-allowable constellations), 2 on usage errors.  Most commands
take the compact word form (x, X, y, Y, optional "/") and honor --json.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import fixtures, hanoi
from .words import DyadicStage, Word, chi, format_word, parse_word, psi, reduce_word
from .graph import (
    Vertex,
    base_vertex,
    enumerate_level,
    graph_to_dot,
    graph_to_json,
    is_loop,
    neighbor,
    trace,
    vertex_count,
    edge_count,
)
from .projection import decompose, project_chain
from .sequences import CoherentSequence, star, validate
from .generator import GeneratorParams, random_element
from .weights import format_dyadic, norm_bounds_words, rho, weigh_sequence


class DomainError(Exception):
    pass


def _word(text: str) -> Word:
    try:
        return parse_word(text)
    except ValueError as e:
        raise DomainError(str(e)) from None


def _load_sequence(path: str) -> CoherentSequence:
    spec = Path(path)
    if spec.exists():
        return CoherentSequence.from_json(json.loads(spec.read_text()))
    # fixture shorthand: name[:depth], e.g. "L1:12" or "empty:8"
    name, _, depth = path.partition(":")
    try:
        return fixtures.make_fixture(name, int(depth or "10"))
    except ValueError:
        raise DomainError(f"no sequence file or fixture named {path!r}") from None


def cmd_reduce(args) -> int:
    w = reduce_word(_word(args.word))
    if args.json:
        print(json.dumps({"word": format_word(w), "chi": chi(w), "psi": psi(w)}))
    else:
        print(format_word(w))
    return 0


def cmd_isloop(args) -> int:
    w = _word(args.word)
    ok = is_loop(w, args.level)
    print(json.dumps({"level": args.level, "loop": ok}) if args.json else str(ok).lower())
    return 0


def cmd_trace(args) -> int:
    start = Vertex.parse(args.start) if args.start else base_vertex(args.level)
    end = trace(start, _word(args.word))
    if isinstance(end, tuple):
        print(f"{end[0]} inside edge {end[1]}")
    else:
        print(end)
    return 0


def cmd_neighbors(args) -> int:
    from .words import LETTERS

    v = Vertex.parse(args.vertex)
    rows = {str(a): str(neighbor(v, a)) for a in LETTERS}
    if args.json:
        print(json.dumps(rows))
    else:
        for a, s in rows.items():
            print(f"{a} -> {s}")
    return 0


def _level_cap() -> int:
    import os

    return int(os.environ.get("MENGERWORDS_LEVEL_CAP", "10"))


def cmd_graph(args) -> int:
    if args.full:
        g = enumerate_level(args.level, cap=_level_cap())
        print(json.dumps(graph_to_json(g)))
    else:
        data = {
            "level": args.level,
            "vertices": vertex_count(args.level),
            "edges": edge_count(args.level),
        }
        print(json.dumps(data) if args.json else
              f"level {args.level}: {data['vertices']} vertices, {data['edges']} edges")
    return 0


def cmd_export_dot(args) -> int:
    g = enumerate_level(args.level, cap=_level_cap())
    text = graph_to_dot(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        print(text)
    return 0


def cmd_project(args) -> int:
    w = _word(args.word)
    out = project_chain(w, args.src, args.dst, reduce_each=args.reduce)
    print(json.dumps({"word": format_word(out)}) if args.json else format_word(out))
    return 0


def cmd_decompose(args) -> int:
    dec = decompose(_word(args.word), args.level)
    rows = dec.table()
    if args.json:
        print(json.dumps({"rows": rows, "output": format_word(dec.output)}))
    elif args.csv:
        print("i,subword,disk,psi,color,eps,edge")
        for r in rows:
            eps = "" if r["eps"] is None else f"{r['eps']:+d}"
            print(f"{r['i']},{r['subword']},{r['disk']},{r['psi']},{r['color']},{eps},{r['edge']}")
    else:
        for r in rows:
            eps = "    " if r["eps"] is None else f"{r['eps']:+d}  "
            print(f"{r['i']:>2}  {r['subword']:<20} d={r['disk']}  psi={r['psi']}  "
                  f"color={r['color'] or '-'}  eps={eps}b={r['edge'] or '-'}")
        print(f"projection: {format_word(dec.output)}")
    return 0


def cmd_length(args) -> int:
    if args.level != 1:
        raise DomainError("length is recursive; pass the chain of words from level 1")
    words = [_word(t) for t in args.words]
    ww = weigh_sequence(words)
    total = ww[-1].total()
    if args.json:
        print(json.dumps({"level": len(words),
                          "length": str(total), "display": format_dyadic(total)}))
    else:
        print(format_dyadic(total))
    return 0


def cmd_norm(args) -> int:
    seq = _load_sequence(args.sequence)
    bi = norm_bounds_words(list(seq.words))
    if args.json:
        print(json.dumps({"lower": str(bi.lower), "upper": str(bi.upper),
                          "width": str(bi.width)}))
    else:
        print(f"norm in [{format_dyadic(bi.lower)}, {format_dyadic(bi.upper)}]")
    return 0


def cmd_rho(args) -> int:
    a = _load_sequence(args.a)
    b = _load_sequence(args.b)
    tol = Fraction(args.tol) if args.tol else None
    r = rho(a, b, tol)
    out = {
        "lower": str(r.interval.lower),
        "upper": str(r.interval.upper),
        "width": str(r.achieved_width),
        "within_tolerance": r.ok,
        "equivalent": r.equivalent,
    }
    if args.json:
        print(json.dumps(out))
    else:
        print(f"rho in [{format_dyadic(r.interval.lower)}, {format_dyadic(r.interval.upper)}]"
              + ("" if r.ok else "  (tolerance not reached)"))
    return 0 if r.ok else 1


def cmd_star(args) -> int:
    a = _load_sequence(args.a)
    b = _load_sequence(args.b)
    out = star(a, b)
    text = json.dumps(out.to_json())
    if args.out:
        Path(args.out).write_text(text)
    else:
        print(text)
    return 0


def cmd_generate(args) -> int:
    seq, _choice = random_element(args.seed, args.depth, GeneratorParams())
    report = validate(seq)
    if not report.ok:
        raise DomainError("; ".join(report.errors))
    text = json.dumps(seq.to_json())
    if args.out:
        Path(args.out).write_text(text)
    else:
        print(text)
    return 0


def cmd_fixture(args) -> int:
    if args.family == "ell":
        w = fixtures.ell(args.k, args.n)
        print(format_word(w))
        return 0
    if args.family == "he1":
        seq = fixtures.he1_element(args.depth)
    elif args.family == "L":
        seq = fixtures.L_sequence(args.i, args.depth)
    elif args.family == "empty":
        seq = fixtures.empty_sequence(args.depth)
    else:
        raise DomainError(f"unknown family {args.family}")
    text = json.dumps(seq.to_json())
    if args.out:
        Path(args.out).write_text(text)
    else:
        print(text)
    return 0


def cmd_hanoi(args) -> int:
    if args.action == "pegs":
        t = DyadicStage.from_bits(args.stage)
        pegs = hanoi.peg_positions(t)
        print(json.dumps(list(pegs)) if args.json else ",".join(map(str, pegs)))
        return 0
    if args.action == "stage":
        pegs = tuple(int(p) for p in args.pegs.split(","))
        out = hanoi.stage_of_positions(pegs)
        if out is hanoi.NOT_ALLOWABLE:
            print("NOT_ALLOWABLE")
            return 1
        print(out.bits_str())
        return 0
    if args.action == "solve":
        moves = hanoi.classical_solution(args.disks)
        if args.json:
            print(json.dumps([{"disk": d, "from": f, "to": t} for d, f, t in moves]))
        else:
            for d, f, t in moves:
                print(f"disk {d}: {f} -> {t}")
        return 0
    if args.action == "play":
        state = hanoi.simulate(args.disks, _word(args.word))
        print(json.dumps(state.to_json()))
        return 0
    raise DomainError(f"unknown hanoi action {args.action}")


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(args.snapshots), host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mengerwords")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        sp = sub.add_parser(name, **kw)
        sp.set_defaults(fn=fn)
        sp.add_argument("--json", action="store_true")
        return sp

    sp = add("reduce", cmd_reduce, help="freely reduce a word")
    sp.add_argument("word")

    sp = add("isloop", cmd_isloop, help="test loop membership at a level")
    sp.add_argument("--level", type=int, required=True)
    sp.add_argument("word")

    sp = add("trace", cmd_trace, help="trace a word through a level graph")
    sp.add_argument("--level", type=int, required=True)
    sp.add_argument("--start", help="start vertex, default base")
    sp.add_argument("word")

    sp = add("neighbors", cmd_neighbors, help="the four neighbors of a vertex")
    sp.add_argument("vertex")

    sp = add("graph", cmd_graph, help="level graph summary or full adjacency")
    sp.add_argument("--level", type=int, required=True)
    sp.add_argument("--full", action="store_true")

    sp = add("export-dot", cmd_export_dot, help="write a level graph as DOT")
    sp.add_argument("--level", type=int, required=True)
    sp.add_argument("--out")

    sp = add("project", cmd_project, help="project a word down levels")
    sp.add_argument("--from", dest="src", type=int, required=True)
    sp.add_argument("--to", dest="dst", type=int, required=True)
    sp.add_argument("--reduce", action="store_true")
    sp.add_argument("word")

    sp = add("decompose", cmd_decompose, help="block decomposition table")
    sp.add_argument("--level", type=int, required=True)
    sp.add_argument("--csv", action="store_true")
    sp.add_argument("word")

    sp = add("length", cmd_length, help="dynamic length of a coherent chain of words")
    sp.add_argument("--level", type=int, default=1, help="level of the first word")
    sp.add_argument("words", nargs="+")

    sp = add("norm", cmd_norm, help="norm bounds of a sequence (file or fixture)")
    sp.add_argument("sequence")

    sp = add("rho", cmd_rho, help="pseudo-metric between two sequences")
    sp.add_argument("--tol", help="required interval width, e.g. 1e-4")
    sp.add_argument("a")
    sp.add_argument("b")

    sp = add("star", cmd_star, help="group operation on two sequences")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--out")

    sp = add("generate", cmd_generate, help="random certified group element")
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--depth", type=int, default=8)
    sp.add_argument("--out")

    sp = add("fixture", cmd_fixture, help="named word/sequence families")
    sp.add_argument("family", choices=["ell", "he1", "L", "empty"])
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--n", type=int)
    sp.add_argument("--i", type=int, default=1)
    sp.add_argument("--depth", type=int, default=10)
    sp.add_argument("--out")

    sp = add("hanoi", cmd_hanoi, help="shortest-solution formulas and play")
    sp.add_argument("action", choices=["pegs", "stage", "solve", "play"])
    sp.add_argument("--stage")
    sp.add_argument("--pegs")
    sp.add_argument("--disks", type=int, default=3)
    sp.add_argument("--word", default="")

    sp = add("serve", cmd_serve, help="run the game HTTP service")
    sp.add_argument("--host", default="127.0.0.1")
    sp.add_argument("--port", type=int, default=8642)
    sp.add_argument("--snapshots", help="directory for session snapshots")

    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
