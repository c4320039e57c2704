"""Command-line interface: ``ptabkit <command> [file]``.

Inputs are read from a file or stdin.  Ptableaux are blocks of rows
("." for a blank), biwords are written ``top/bottom``, words are digit
strings, and lines starting with ``#`` are ignored.  Exit codes: 0 ok,
1 domain error, 2 parse error, 3 check failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import checks
from .crystal import apply_ops, format_ops, parse_ops, to_extreme
from .duality import bw, dual_ptab, format_matrix, from_matrix, perf, rot, to_matrix
from .errors import LimitExceeded, ParseError, PtabError
from .graph import explore, export
from .grid import Ptableau, parse_grid, split_blocks, to_json, to_text, validate_or_empty
from .involutions import BOTH, ESTAR, UNINSERT, e_star_sequence, evacuate, lusztig
from .rsk import classic_rsk, ptab_rsk, rsk_inverse
from .words import Biword, dual_biword, format_biword, format_word, parse_biword, parse_word

KINDS = ("ptableau", "biword", "word", "matrix")


class CliError(Exception):
    pass


# -- input ---------------------------------------------------------------------


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _strip_comments(text: str) -> str:
    # keep line numbers stable for error messages
    return "\n".join("" if line.lstrip().startswith("#") else line for line in text.splitlines())


def _detect(block: str, first_line: int) -> str:
    lines = block.splitlines()
    if "/" in block:
        return "biword"
    if len(lines) > 1 or "." in block.split() or block.strip() == "-":
        return "ptableau"
    raise ParseError(
        "cannot tell whether this line is a word or a one-row ptableau; pass --as word or --as ptableau",
        first_line,
    )


def _parse_block(block: str, first_line: int, kind: Optional[str], n: Optional[int]):
    kind = kind or _detect(block, first_line)
    if kind == "ptableau":
        T = validate_or_empty(parse_grid(block, first_line))
        return T.with_rows(max(T.n_rows, n)) if n else T
    if kind == "biword":
        if len(block.splitlines()) != 1:
            raise ParseError("a biword must fit on one line", first_line)
        return _located(parse_biword, block, first_line)
    if kind == "word":
        return _located(parse_word, " ".join(block.split()) if len(block.split()) > 1 else block, first_line)
    if kind == "matrix":
        return _parse_matrix(block, first_line)
    raise CliError(f"unknown input kind {kind!r}")


def _located(parser, text, line):
    try:
        return parser(text)
    except ParseError as exc:
        if exc.line is None:
            raise ParseError(exc.bare, line, exc.col) from None
        raise


def _parse_matrix(block: str, first_line: int):
    rows = []
    for offset, line in enumerate(block.splitlines()):
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError:
            raise ParseError(f"bad matrix row {line.strip()!r}", first_line + offset) from None
    if len({len(r) for r in rows}) != 1:
        raise ParseError("matrix rows have different lengths", first_line)
    return tuple(tuple(r) for r in rows)


def read_inputs(args) -> list:
    text = _strip_comments(_read(args.input))
    blocks = split_blocks(text)
    if not blocks:
        raise ParseError("no input", 1)
    return [_parse_block(block, line, args.kind, getattr(args, "n", None)) for line, block in blocks]


def _as_ptableau(obj, n: Optional[int] = None) -> Ptableau:
    if isinstance(obj, Ptableau):
        return obj
    if isinstance(obj, Biword):
        return perf(obj, n)
    raise CliError("this command needs a ptableau or a biword")


def _one(items, what="input"):
    if len(items) != 1:
        raise CliError(f"expected exactly one {what}, got {len(items)}")
    return items[0]


# -- output --------------------------------------------------------------------


def _ptab_out(T: Ptableau, args) -> str:
    side = "right" if getattr(args, "right", False) else "left"
    return to_text(T, side)


def _rows(T: Ptableau):
    return to_json(T)["rows"]


def _emit(args, text: str, obj) -> None:
    out = json.dumps(obj, sort_keys=True) if args.format == "json" else text
    sys.stdout.write(out.rstrip("\n") + "\n")


def _node_out(node, args):
    if isinstance(node, Ptableau):
        return _ptab_out(node, args), {"rows": _rows(node)}
    if isinstance(node, Biword):
        return format_biword(node), {"top": list(node.top), "bottom": list(node.bottom)}
    return format_word(node), {"word": list(node)}


# -- commands ------------------------------------------------------------------


def cmd_rsk(args):
    T = _as_ptableau(_one(read_inputs(args)), args.n)
    traces: List = []
    pair = ptab_rsk(T, traces=traces)
    text = _ptab_out(pair.pt, args) + "\n\n" + _ptab_out(pair.tmax, args)
    obj = {"PT": _rows(pair.pt), "Tmax": _rows(pair.tmax)}
    if args.trace:
        lines = []
        for k, trace in enumerate(traces, start=1):
            for step in trace.as_json():
                detail = " ".join(f"{key}={val}" for key, val in step.items() if key != "step")
                lines.append(f"# {k}: {step['step']} {detail}")
        text += "\n" + "\n".join(lines)
        obj["trace"] = [t.as_json() for t in traces]
    _emit(args, text, obj)


def cmd_classic_rsk(args):
    b = _one(read_inputs(args))
    if not isinstance(b, Biword):
        raise CliError("classic-rsk needs a biword")
    pair = classic_rsk(b, args.n)
    _emit(args, to_text(pair.p) + "\n\n" + to_text(pair.q), {"P": _rows(pair.p), "Q": _rows(pair.q)})


def cmd_unrsk(args):
    items = read_inputs(args)
    if len(items) != 2 or not all(isinstance(x, Ptableau) for x in items):
        raise CliError("unrsk needs two ptableaux: PT, then T_max")
    T = rsk_inverse(items[0], items[1])
    _emit(args, _ptab_out(T, args), {"rows": _rows(T)})


def _extreme(args, target):
    node = _one(read_inputs(args))
    if isinstance(node, tuple) and node and isinstance(node[0], tuple):
        raise CliError("matrices have no crystal operators here")
    top, path = to_extreme(node, target, args.order)
    text, obj = _node_out(top, args)
    if isinstance(top, Biword):
        text += f"\neta: {format_word(top.bottom)}"
        obj["eta"] = list(top.bottom)
    text += f"\npath: {format_ops(path)}"
    obj["path"] = format_ops(path)
    _emit(args, text, obj)


def cmd_hw(args):
    _extreme(args, "highest")


def cmd_lw(args):
    _extreme(args, "lowest")


def cmd_dual(args):
    node = _one(read_inputs(args))
    if isinstance(node, Biword):
        b = dual_biword(node)
        _emit(args, format_biword(b), {"top": list(b.top), "bottom": list(b.bottom)})
    else:
        D = dual_ptab(_as_ptableau(node))
        _emit(args, _ptab_out(D, args), {"rows": _rows(D)})


def cmd_rot(args):
    T = _as_ptableau(_one(read_inputs(args)), args.n)
    R = rot(T, args.m)
    _emit(args, _ptab_out(R, args), {"rows": _rows(R)})


def cmd_perf(args):
    b = _one(read_inputs(args))
    if not isinstance(b, Biword):
        raise CliError("perf needs a biword")
    T = perf(b, args.n)
    _emit(args, _ptab_out(T, args), {"rows": _rows(T)})


def cmd_bw(args):
    T = _one(read_inputs(args))
    if not isinstance(T, Ptableau):
        raise CliError("bw needs a ptableau")
    b = bw(T)
    _emit(args, format_biword(b), {"top": list(b.top), "bottom": list(b.bottom)})


def cmd_matrix(args):
    obj = _one(read_inputs(args))
    if isinstance(obj, tuple) and (not obj or isinstance(obj[0], tuple)):
        b = from_matrix(obj)
        _emit(args, format_biword(b), {"top": list(b.top), "bottom": list(b.bottom)})
        return
    b = bw(obj) if isinstance(obj, Ptableau) else obj
    if not isinstance(b, Biword):
        raise CliError("matrix needs a biword, a ptableau, or --as matrix")
    M = to_matrix(b, args.m, args.n)
    _emit(args, format_matrix(M), {"matrix": [list(r) for r in M]})


def cmd_evac(args):
    T = _as_ptableau(_one(read_inputs(args)), args.n)
    E = evacuate(T)
    _emit(args, _ptab_out(E, args), {"rows": _rows(E)})


def cmd_lus(args):
    T = _as_ptableau(_one(read_inputs(args)), args.n)
    L = lusztig(T, args.method, args.m)
    _emit(args, _ptab_out(L, args), {"rows": _rows(L)})


def cmd_apply(args):
    seq = parse_ops(args.ops)
    node = _one(read_inputs(args))
    out = apply_ops(node, seq)
    text, obj = _node_out(out, args)
    _emit(args, text, obj)


def cmd_estar(args):
    T = _as_ptableau(_one(read_inputs(args)), args.n)
    seq = e_star_sequence(ptab_rsk(T).pt)
    _emit(args, format_ops(seq), {"ops": format_ops(seq)})


def cmd_graph(args):
    T = _as_ptableau(_one(read_inputs(args)), args.n)
    try:
        comp = explore(T, args.limit)
    except LimitExceeded as exc:
        if not args.partial:
            raise
        comp = exc.partial
        print(f"ptabkit graph: {exc}; writing partial component", file=sys.stderr)
    fmt = "json" if args.json or args.format == "json" else "dot"
    text = export(comp, fmt)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_check(args):
    report = checks.run_checks(args.seed, args.count, args.suite)
    if args.format == "json":
        obj = {"seed": report.seed, "count": report.count, "passed": report.counts, "ok": report.ok}
        if report.failure:
            f = report.failure
            obj["failure"] = {
                "suite": f.suite,
                "check": f.check,
                "instance": f.instance,
                "n": f.n,
                "message": f.message,
                "biword": format_biword(f.biword),
                "minimized": format_biword(f.minimized),
            }
        print(json.dumps(obj, sort_keys=True))
    else:
        print(report.transcript())
    return 0 if report.ok else 3


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ptabkit", description="Perforated tableaux, crystals and RSK.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, n_opt=True):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", nargs="?", default="-", help="input file (default: stdin)")
        p.add_argument("--as", dest="kind", choices=KINDS, help="input type when auto-detection is ambiguous")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--right", action="store_true", help="print ptableaux right-justified")
        if n_opt:
            p.add_argument("--n", type=int, help="number of rows (default: from the input)")
        p.set_defaults(func=func)
        return p

    add("rsk", cmd_rsk, "ptableau RSK: print PT and T_max").add_argument("--trace", action="store_true")
    add("classic-rsk", cmd_classic_rsk, "column-insertion RSK of a biword: print P and Q")
    add("unrsk", cmd_unrsk, "invert ptableau RSK from PT and T_max", n_opt=False)
    for name, func in (("hw", cmd_hw), ("lw", cmd_lw)):
        p = add(name, func, f"{'highest' if name == 'hw' else 'lowest'} weight node and the path to it")
        p.add_argument("--order", choices=("smallest", "largest"), default="smallest")
    add("dual", cmd_dual, "swap content and rows")
    add("rot", cmd_rot, "rotate 180 degrees and complement content").add_argument("--m", type=int)
    add("perf", cmd_perf, "biword to ptableau")
    add("bw", cmd_bw, "ptableau to biword", n_opt=False)
    add("matrix", cmd_matrix, "biword or ptableau to matrix, or --as matrix back").add_argument("--m", type=int)
    add("evac", cmd_evac, "lowest weight of a highest-weight ptableau")
    p = add("lus", cmd_lus, "Lusztig involution")
    p.add_argument("--method", choices=(UNINSERT, ESTAR, BOTH), default=BOTH)
    p.add_argument("--m", type=int)
    add("apply", cmd_apply, "apply crystal operators").add_argument("--ops", required=True)
    add("estar", cmd_estar, "closed-form raising path to the highest weight")
    p = add("graph", cmd_graph, "enumerate the crystal component")
    p.add_argument("--dot", action="store_true", help="DOT output (default)")
    p.add_argument("--json", action="store_true", help="JSON output")
    p.add_argument("--limit", type=int, help="maximum number of nodes (default: $PTABKIT_LIMIT or 100000)")
    p.add_argument("--partial", action="store_true", help="write the partial component when the limit is hit")
    p.add_argument("-o", "--output", help="write to this file instead of stdout")

    p = sub.add_parser("check", help="run the seeded property suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=500)
    p.add_argument("--suite", choices=("all",) + tuple(checks.SUITES), default="all")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args) or 0
    except ParseError as exc:
        print(f"ptabkit {args.command}: parse error: {exc}", file=sys.stderr)
        return 2
    except (PtabError, CliError, ValueError) as exc:
        print(f"ptabkit {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"ptabkit {args.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
