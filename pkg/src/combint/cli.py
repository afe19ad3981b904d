"""Command-line front end. Every subcommand reads JSON files and writes one JSON document.

Exit status: 0 on success, 1 on a domain error (``{"error": code, "detail": ...}``),
2 on malformed input.
"""

import argparse
import json
import sys
from fractions import Fraction

from .errors import CombintError
from .forms import dual_bases, forms_basis
from .graph import SpanningTree, core, cycle_basis
from .iint import canonical_correction, cint, cint_matrix, monodromy_power
from .scalars import Padic
from .serialize import (
    MalformedInput,
    decode_form,
    decode_graph,
    decode_multiform,
    decode_table,
    encode_form,
    encode_graph,
    encode_path,
    encode_scalar,
    encode_table,
    encode_tensor,
    parse_arrows,
    word_key,
)
from .tate import TateCurveSpec, tate_expected, tate_graph, tate_periods
from .vologodsky import vologodsky, vologodsky_single


def _load(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _graph(args):
    return decode_graph(_load(args.graph))


def _letters(text):
    try:
        return [int(x) - 1 for x in parse_arrows(text)]
    except ValueError:
        raise MalformedInput(f"--word must be comma-separated 1-based indices, got {text!r}") from None


def _forms(g, spec, start=None):
    if spec == "basis":
        return forms_basis(g)
    if spec == "dual":
        return dual_bases(g, start)[1]
    data = _load(spec)
    if not isinstance(data, list):
        raise MalformedInput("a forms file holds a list of forms")
    return [decode_form(x, g) for x in data]


def cmd_homology(args):
    g = _graph(args)
    c = core(g)
    tree = SpanningTree(c)
    loops = cycle_basis(g, args.base)
    return {
        "betti": g.betti,
        "proper": g.is_proper,
        "core": encode_graph(c),
        "tree_edges": sorted(tree.tree_edges),
        "cotree_edges": list(tree.cotree_edges),
        "cycle_basis": [encode_path(w) for w in loops],
    }


def cmd_forms_basis(args):
    g = _graph(args)
    basis = forms_basis(g)
    out = {"dimension": len(basis), "basis": [encode_form(f) for f in basis]}
    if args.dual:
        loops, duals = dual_bases(g, args.base)
        out["loops"] = [encode_path(w) for w in loops]
        out["dual_forms"] = [encode_form(f) for f in duals]
    return out


def cmd_cint(args):
    g = _graph(args)
    p = g.path(parse_arrows(args.path), start=args.start)
    out = {"path": encode_path(p)}
    if args.multiform:
        mf = decode_multiform(_load(args.multiform), g)
        m = monodromy_power(p, mf) if args.monodromy else cint_matrix(p, mf)
        out["matrix"] = [[encode_scalar(x) for x in row] for row in m]
        return out
    if args.word is None:
        raise MalformedInput("cint needs --word or --multiform")
    forms = _forms(g, args.forms, p.start)
    letters = _letters(args.word)
    if any(not 0 <= i < len(forms) for i in letters):
        raise MalformedInput(f"--word uses letters outside 1..{len(forms)}")
    out["word"] = [i + 1 for i in letters]
    out["value"] = encode_scalar(cint(p, [forms[i] for i in letters]))
    return out


def cmd_canonical(args):
    g = _graph(args)
    p = g.path(parse_arrows(args.path), start=args.start)
    corr = canonical_correction(g, p, args.n)
    return {
        "n": args.n,
        "path": encode_path(p),
        "loops": [encode_path(w) for w in corr.loops],
        "dual_forms": [encode_form(f) for f in corr.forms],
        "coefficients": {word_key(w): encode_scalar(c) for w, c in corr.monomial.items()},
    }


def cmd_vologodsky(args):
    g = _graph(args)
    table = decode_table(_load(args.periods))
    out = {"tensor": encode_tensor(vologodsky(g, table, args.n))}
    if args.single:
        out["single"] = [encode_scalar(x) for x in vologodsky_single(g, table)]
    return out


def _rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def cmd_tate_demo(args):
    spec = TateCurveSpec(args.p, args.m, Padic.from_rational(args.a, args.p, args.prec),
                         Padic.from_rational(args.b, args.p, args.prec), args.n)
    table = tate_periods(spec)
    got = vologodsky(tate_graph(spec.m), table)
    expected = tate_expected(spec)
    return {
        "graph": encode_graph(tate_graph(spec.m)),
        "table": encode_table(table),
        "output": encode_tensor(got),
        "expected": encode_tensor(expected),
        "match": got == expected,
    }


def build_parser():
    ap = argparse.ArgumentParser(prog="combint", allow_abbrev=False,
                                 description="Combinatorial and Vologodsky iterated integrals on dual graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, graph=True):
        sp = sub.add_parser(name, help=help_text, allow_abbrev=False)
        if graph:
            sp.add_argument("--graph", required=True, help="graph JSON file")
        sp.add_argument("--output", default="-", help="output file, '-' for standard output")
        sp.set_defaults(func=func)
        return sp

    sp = add("homology", cmd_homology, "Betti number, spanning tree and cycle basis")
    sp.add_argument("--base", help="base vertex of the cycle basis")

    sp = add("forms-basis", cmd_forms_basis, "basis of tropical 1-forms")
    sp.add_argument("--dual", action="store_true", help="also emit the loops and their dual forms")
    sp.add_argument("--base", help="base vertex for --dual")

    sp = add("cint", cmd_cint, "combinatorial iterated integral along a path")
    sp.add_argument("--path", required=True, help='arrows, e.g. "e1,-e2"')
    sp.add_argument("--start", help="start vertex (needed for the empty path)")
    sp.add_argument("--forms", default="basis", help="'basis', 'dual' or a JSON file with a list of forms")
    sp.add_argument("--word", help='1-based form indices, e.g. "1,2"')
    sp.add_argument("--multiform", help="multiform JSON file; emits a matrix instead")
    sp.add_argument("--monodromy", action="store_true", help="with --multiform, multiply by k!")

    sp = add("canonical", cmd_canonical, "canonical correction of a path")
    sp.add_argument("--path", required=True)
    sp.add_argument("--start")
    sp.add_argument("--n", type=int, required=True, help="truncation level")

    sp = add("vologodsky", cmd_vologodsky, "Vologodsky integrals from a period table")
    sp.add_argument("--periods", required=True, help="period-table JSON file")
    sp.add_argument("--n", type=int, help="truncation level (default: the table's)")
    sp.add_argument("--single", action="store_true", help="also emit the single-integral formula")

    sp = add("tate-demo", cmd_tate_demo, "Tate curve check against the closed form", graph=False)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--a", type=_rational, required=True)
    sp.add_argument("--b", type=_rational, required=True)
    sp.add_argument("--prec", type=int, default=20, help="relative p-adic precision of the points")
    return ap


def _emit(doc, dest):
    text = json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    if dest == "-":
        sys.stdout.write(text)
    else:
        with open(dest, "w", encoding="utf-8") as fh:
            fh.write(text)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        doc = args.func(args)
    except CombintError as exc:
        _emit({"error": exc.code, "detail": exc.detail}, args.output)
        return 1
    except (OSError, ValueError, KeyError, TypeError) as exc:
        _emit({"error": "malformed_input", "detail": str(exc)}, args.output)
        return 2
    _emit(doc, args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
