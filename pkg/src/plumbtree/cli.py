"""Command line entry point: ``plumbtree <command> ...``.

Exit codes: 0 success, 1 validation failure, 2 parse error.
"""
from __future__ import annotations

import argparse
import sys

from . import classify, fileformat, form, pairing, tree
from .errors import ParseError, PlumbingError


def _header(basis):
    return "# basis: " + " ".join(str(v) for v in basis)


def _print_matrix(m):
    print(_header(m.basis))
    for row in m.rows:
        print(" ".join(str(x) for x in row))


def cmd_enumerate(args):
    trees = tree.enumerate_matched_trees(args.pairs)
    print(f"count: {len(trees)}")
    if args.list:
        for t in trees:
            print(t.code())
    return 0


def cmd_check(args):
    fp = fileformat.load(args.file)
    report = form.check_admissible(fp, args.level)
    print(report)
    return 0 if report.ok else 1


def cmd_seifert(args):
    _print_matrix(form.seifert_matrix(fileformat.load(args.file)))
    return 0


def cmd_pairing(args):
    fp = fileformat.load(args.file)
    if args.method == "conjugation":
        _print_matrix(pairing.pairing_by_conjugation(fp))
        return 0
    if args.method == "closed-form":
        _print_matrix(pairing.pairing_closed_form(fp))
        return 0
    conj = pairing.pairing_by_conjugation(fp)
    closed = pairing.pairing_closed_form(fp)
    _print_matrix(conj)
    if conj != closed:
        bad = [(u, v) for u in conj.basis for v in conj.basis if conj[u, v] != closed[u, v]]
        print(f"MISMATCH at {len(bad)} entries, first ({bad[0][0]}, {bad[0][1]})",
              file=sys.stderr)
        return 1
    print("# conjugation and closed form agree")
    return 0


def cmd_invariants(args):
    fp = fileformat.load(args.file)
    alex = form.alexander_polynomial(fp)
    box = classify.spin_c_support(fp)
    print("alexander: " + " ".join(str(c) for c in alex.coeffs))
    print(f"determinant: {form.knot_determinant(fp)}")
    print(f"signature: {form.knot_signature(fp)}")
    print(f"genus: {form.surface_genus(fp)}")
    print(_header(box.basis))
    print("spinc-sides: " + " ".join(str(s) for s in box.sides))
    print(f"spinc-volume: {box.volume}")
    return 0


def cmd_classify(args):
    fp = fileformat.load(args.file)
    if not args.all_epsilon:
        print("classify requires --all-epsilon", file=sys.stderr)
        return 1
    result = classify.count_classes(fp.tree, fp.framing, permissive=args.permissive)
    print(f"classes: {result.count}")
    print(f"labelings: {result.labelings}")
    if result.heuristic:
        print("# heuristic: framing is not injective in |f|; count is a lower bound")
    tally = classify.obstruction_summary(result.representatives)
    print("obstructions: " + " ".join(f"{k}={tally.get(k, 0)}" for k in classify.CASES))
    if args.verbose:
        reps = result.representatives
        for i in range(len(reps)):
            for j in range(i + 1, len(reps)):
                rep = classify.surfaces_equivalent(reps[i], reps[j], permissive=True)
                si = "".join("+" if s > 0 else "-" for s in reps[i].signs())
                sj = "".join("+" if s > 0 else "-" for s in reps[j].signs())
                print(f"{si} {sj} {rep.obstruction}")
    return 0


def cmd_equivalent(args):
    fp1, fp2 = fileformat.load(args.file1), fileformat.load(args.file2)
    print(classify.surfaces_equivalent(fp1, fp2, permissive=args.permissive))
    return 0


def cmd_chain(args):
    t = tree.chain_tree(args.pairs)
    framing = {}
    for i in range(1, args.pairs + 1):
        framing[f"w{i}"] = 2 * i + 1
        framing[f"b{i}"] = -2 * i
    signs = [1] * len(t.edges)
    if args.eps:
        if len(args.eps) != len(t.edges) or set(args.eps) - set("+-"):
            raise PlumbingError(f"--eps needs {len(t.edges)} characters from '+-'")
        signs = [1 if c == "+" else -1 for c in args.eps]
    fp = form.framed(t, framing, signs, name=f"chain{args.pairs}")
    sys.stdout.write(fileformat.export_dot(fp) if args.dot else fileformat.serialize(fp))
    return 0


def cmd_dot(args):
    sys.stdout.write(fileformat.export_dot(fileformat.load(args.file)))
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="plumbtree", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("enumerate", help="count matched trees up to isomorphism")
    s.add_argument("--pairs", type=int, required=True)
    s.add_argument("--list", action="store_true", help="print canonical codes")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("check", help="admissibility report")
    s.add_argument("file")
    s.add_argument("--level", choices=form.LEVELS, default="theorem")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("seifert", help="Seifert matrix")
    s.add_argument("file")
    s.set_defaults(func=cmd_seifert)

    s = sub.add_parser("pairing", help="pairing on the complement")
    s.add_argument("file")
    s.add_argument("--method", choices=("conjugation", "closed-form", "both"),
                   default="conjugation")
    s.set_defaults(func=cmd_pairing)

    s = sub.add_parser("invariants", help="Alexander polynomial and friends")
    s.add_argument("file")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("classify", help="count inequivalent labelings")
    s.add_argument("file")
    s.add_argument("--all-epsilon", action="store_true")
    s.add_argument("--permissive", action="store_true",
                   help="allow repeated |f| (heuristic)")
    s.add_argument("-v", "--verbose", action="store_true")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("equivalent", help="compare two labelings")
    s.add_argument("file1")
    s.add_argument("file2")
    s.add_argument("--permissive", action="store_true")
    s.set_defaults(func=cmd_equivalent)

    s = sub.add_parser("chain", help="emit the chain tree with f(w_i)=2i+1, f(b_i)=-2i")
    s.add_argument("--pairs", type=int, required=True)
    s.add_argument("--framing", choices=("corollary",), default="corollary")
    s.add_argument("--eps", help="plumbing signs in edge order, e.g. '+-+'")
    s.add_argument("--dot", action="store_true", help="emit Graphviz instead")
    s.set_defaults(func=cmd_chain)

    s = sub.add_parser("dot", help="Graphviz export of a tree file")
    s.add_argument("file")
    s.set_defaults(func=cmd_dot)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (PlumbingError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
