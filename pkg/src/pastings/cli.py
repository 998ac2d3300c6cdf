"""Command line front end.

Exit codes: 0 success, 1 axiom violation or inequality found, 2 bad input,
3 enumeration cap exceeded. Results go to stdout as sorted JSON; errors go
to stderr as JSON objects.

Hypergraph arguments are JSON files, or `fixture:<name>` for a built-in.
"""

import argparse
import json
import sys

from . import altcells, axioms, cells, fixtures, freeterm, hypergraph, johnson, steiner, trees
from .errors import CapExceeded, PastingError

OK, VIOLATION, BAD_INPUT, CAP = 0, 1, 2, 3


def dump(obj, stream=None):
    stream = stream or sys.stdout
    stream.write(json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n")


def _read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise PastingError("cannot read %s: %s" % (path, e.strerror), path=path)
    except json.JSONDecodeError as e:
        raise PastingError("invalid JSON in %s: %s" % (path, e), path=path)


def load_hypergraph(arg):
    if arg.startswith("fixture:"):
        return fixtures.load(arg[len("fixture:"):]).hypergraph
    return hypergraph.from_json(_read_json(arg))


def load_cell(H, path):
    X = cells.Cell.from_json(_read_json(path))
    cells.require_cell(H, X)
    return X


def _status_code(reports):
    statuses = {r.status for r in reports}
    if axioms.FAIL in statuses:
        return VIOLATION
    return CAP if axioms.SKIPPED in statuses else OK


def cmd_check(args):
    H = load_hypergraph(args.file)
    pick = {
        "pc": lambda: [axioms.check_street(H, args.cap, strict=args.strict)],
        "ps": lambda: [johnson.check_johnson(H, args.cap)],
        "adc": lambda: [steiner.check_steiner(H)],
        "gpc": lambda: [axioms.check_gpc_computable(H), axioms.check_gpc_full(H, args.cap)],
    }
    if args.formalism == "all":
        reports = list(axioms.check_formalisms(H, args.cap).values())
    else:
        reports = pick[args.formalism]()
    dump({"hypergraph": H.name, "reports": {r.formalism: r.to_json() for r in reports}})
    return _status_code(reports)


def cmd_atom(args):
    H = load_hypergraph(args.file)
    if args.gen not in H:
        raise PastingError("unknown generator %r" % args.gen, generator=args.gen)
    dump(cells.atom(H, args.gen).to_json())
    return OK


def cmd_compose(args):
    H = load_hypergraph(args.file)
    X, Y = (load_cell(H, p) for p in args.cells)
    dump(cells.compose(H, X, Y, args.dim).to_json())
    return OK


def cmd_decompose(args):
    H = load_hypergraph(args.file)
    dump(trees.to_json(cells.decompose(H, load_cell(H, args.cell))))
    return OK


def cmd_translate(args):
    H = load_hypergraph(args.file)
    X = load_cell(H, args.cell)
    if args.to == "precell":
        out = X.to_json()
    elif args.to == "maximal":
        out = altcells.ctoprinc(H, X).to_json()
    elif args.to == "closed":
        out = altcells.ctocl(H, X).to_json()
    else:
        out = steiner.c2st(H, X).to_json()
    dump(out)
    return OK


def cmd_enumerate(args):
    H = load_hypergraph(args.file)
    found = cells.enumerate_cells(H, args.dim, args.cap)
    dump({"dim": args.dim, "count": len(found), "cells": [X.to_json() for X in found]})
    return OK


def cmd_counterexample(args):
    F = fixtures.load("ce_tf")
    H = F.hypergraph
    x1 = freeterm.eval_cell(H, F.terms["Xi1"])
    x2 = freeterm.eval_cell(H, F.terms["Xi2"])
    w1 = freeterm.word(F.terms["Xi1"], F.letters)
    w2 = freeterm.word(F.terms["Xi2"], F.letters)
    separated = x1 == x2 and w1 != w2
    dump({"cell_xi1": x1.to_json(), "cell_xi2": x2.to_json(), "cells_equal": x1 == x2,
          "word_xi1": w1, "word_xi2": w2, "words_equal": w1 == w2,
          "verdict": "cells are not freely generated by the atoms" if separated
          else "no separation found"})
    return VIOLATION if separated else OK


def cmd_fixtures(args):
    if args.emit:
        dump(hypergraph.to_json(fixtures.load(args.emit).hypergraph))
    else:
        dump(fixtures.names())
    return OK


def build_parser():
    p = argparse.ArgumentParser(prog="pastings", description="Pasting diagram toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="check the axioms of one or all formalisms")
    c.add_argument("file")
    c.add_argument("--formalism", choices=["pc", "ps", "adc", "gpc", "all"], default="all")
    c.add_argument("--cap", type=int, default=100000)
    c.add_argument("--strict", action="store_true", help="also check tightness of the + side")
    c.set_defaults(run=cmd_check)

    c = sub.add_parser("atom", help="print the atom of a generator")
    c.add_argument("file")
    c.add_argument("--gen", required=True)
    c.set_defaults(run=cmd_atom)

    c = sub.add_parser("compose", help="compose two cells")
    c.add_argument("file")
    c.add_argument("--cells", nargs=2, required=True, metavar=("LEFT", "RIGHT"))
    c.add_argument("--dim", type=int, required=True)
    c.set_defaults(run=cmd_compose)

    c = sub.add_parser("decompose", help="split a cell into atoms")
    c.add_argument("file")
    c.add_argument("--cell", required=True)
    c.set_defaults(run=cmd_decompose)

    c = sub.add_parser("translate", help="translate a cell to another representation")
    c.add_argument("file")
    c.add_argument("--cell", required=True)
    c.add_argument("--to", choices=["precell", "maximal", "closed", "adc"], required=True)
    c.set_defaults(run=cmd_translate)

    c = sub.add_parser("enumerate", help="list every cell of a dimension")
    c.add_argument("file")
    c.add_argument("--dim", type=int, required=True)
    c.add_argument("--cap", type=int, default=100000)
    c.set_defaults(run=cmd_enumerate)

    c = sub.add_parser("counterexample", help="separate the two composites of the torsion example")
    c.set_defaults(run=cmd_counterexample)

    c = sub.add_parser("fixtures", help="list or emit built-in examples")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--list", action="store_true")
    g.add_argument("--emit", metavar="NAME")
    c.set_defaults(run=cmd_fixtures)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return BAD_INPUT if e.code else OK
    try:
        return args.run(args)
    except CapExceeded as e:
        dump(e.as_json(), sys.stderr)
        return CAP
    except PastingError as e:
        dump(e.as_json(), sys.stderr)
        return BAD_INPUT
    except ValueError as e:
        dump({"error": "ValueError", "message": str(e)}, sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
