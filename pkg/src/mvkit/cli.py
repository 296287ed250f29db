"""Command-line interface: ``mvkit <command> ...``.

Exit status is 0 on success, 1 when the question asked has a negative
answer (axiom failure, no isomorphism, cross-check failure) and 2 on bad
input. Audit counterexamples are findings and never change the status.
"""
import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .algebra import boolean_center, find_isomorphism, validate_axioms
from .campaign import CLAIMS, run_campaign
from .catalog import cross_check_catalog, generate_catalog
from .derivations import KINDS, classify_map, enumerate_maps, fix_and_kernel
from .errors import MvError
from .ideals import quotient
from .io import read_algebra, read_map, serialize_algebra
from .structure import decomposition_report


def _cmd_validate(args, out):
    report = validate_axioms(read_algebra(args.algfile))
    print(report.to_text(), file=out)
    return 0 if report.passed else 1


def _cmd_center(args, out):
    print(" ".join(map(str, boolean_center(read_algebra(args.algfile)))), file=out)
    return 0


def _cmd_derive(args, out):
    A = read_algebra(args.algfile)
    if args.map:
        f = read_map(args.map, A.order)
        cls = classify_map(A, f)
        for name, value in cls.flags().items():
            extra = "" if value else f"  at {' '.join(map(str, cls.witnesses[name]))}"
            print(f"{name:<22} {str(value).lower()}{extra}", file=out)
        fk = fix_and_kernel(A, f)
        print(f"{'fix':<22} {' '.join(map(str, fk.fix))}", file=out)
        print(f"{'kernel':<22} {' '.join(map(str, fk.kernel))}", file=out)
    if args.enumerate or not args.map:
        for f in enumerate_maps(A, args.kind):
            print(" ".join(map(str, f.image)), file=out)
    return 0


def _cmd_audit(args, out):
    if (args.algfile is None) == (args.catalog is None):
        raise MvError("give either an algebra file or --catalog N")
    if args.catalog is not None:
        catalog = generate_catalog(args.catalog)
    else:
        catalog = [(Path(args.algfile).stem, read_algebra(args.algfile))]
    sink = open(args.out, "w", newline="\n") if args.out else out
    try:
        for v in run_campaign(catalog, args.claim):
            print(v.to_json() if args.format == "jsonl" else v.to_text(), file=sink)
    finally:
        if args.out:
            sink.close()
    return 0


def _cmd_decompose(args, out):
    A = read_algebra(args.algfile)
    r = decomposition_report(A, args.element)
    print(f"fix(d_a)     {' '.join(map(str, r['fix_d']))}", file=out)
    print(f"fix(d_a*)    {' '.join(map(str, r['fix_d_star']))}", file=out)
    print(f"T4.16        {r['verdict']}", file=out)
    if "image" in r["witness"]:
        for x, (u, v) in enumerate(r["witness"]["image"]):
            print(f"  {x} -> ({u}, {v})", file=out)
    else:
        print(f"  {json.dumps(r['witness'], sort_keys=True)}", file=out)
    return 0


def _cmd_iso(args, out):
    m = find_isomorphism(read_algebra(args.algfile1), read_algebra(args.algfile2))
    if m is None:
        print("no isomorphism", file=out)
        return 1
    print(" ".join(map(str, m.image)), file=out)
    return 0


def _cmd_quotient(args, out):
    A = read_algebra(args.algfile)
    try:
        ideal = [int(t) for t in args.ideal.split(",") if t.strip()]
    except ValueError:
        raise MvError(f"--ideal takes comma-separated indices, got {args.ideal!r}") from None
    q = quotient(A, ideal)
    print(f"# classes {' '.join(map(str, q.partition.class_of))}", file=out)
    out.write(serialize_algebra(q.algebra))
    return 0


def _cmd_catalog(args, out):
    target = Path(args.out)
    target.mkdir(parents=True, exist_ok=True)
    for entry in generate_catalog(args.max_order):
        (target / f"{entry.algebra_id}.mvalg").write_text(serialize_algebra(entry.algebra))
        print(entry.algebra_id, file=out)
    if args.cross_check:
        v = cross_check_catalog(min(args.max_order, 5))
        print(v.to_text(), file=out)
        return 0 if v.holds else 1
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="mvkit", description="Finite MV-algebras and derivation audits.")
    p.add_argument("--version", action="version", version=f"mvkit {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check the MV axioms")
    s.add_argument("algfile")
    s.set_defaults(func=_cmd_validate)

    s = sub.add_parser("center", help="print the Boolean center")
    s.add_argument("algfile")
    s.set_defaults(func=_cmd_center)

    s = sub.add_parser("derive", help="classify a map or enumerate derivations")
    s.add_argument("algfile")
    s.add_argument("--map")
    s.add_argument("--kind", choices=KINDS, default="general")
    s.add_argument("--enumerate", action="store_true")
    s.set_defaults(func=_cmd_derive)

    s = sub.add_parser("audit", help="run claim audits")
    s.add_argument("algfile", nargs="?")
    s.add_argument("--catalog", type=int, metavar="N")
    s.add_argument("--claim", nargs="+", choices=CLAIMS, metavar="ID")
    s.add_argument("--format", choices=("text", "jsonl"), default="text")
    s.add_argument("--out")
    s.set_defaults(func=_cmd_audit)

    s = sub.add_parser("decompose", help="split along a Boolean element")
    s.add_argument("algfile")
    s.add_argument("--element", type=int, required=True, metavar="IDX")
    s.set_defaults(func=_cmd_decompose)

    s = sub.add_parser("iso", help="search for an isomorphism")
    s.add_argument("algfile1")
    s.add_argument("algfile2")
    s.set_defaults(func=_cmd_iso)

    s = sub.add_parser("quotient", help="quotient by an ideal")
    s.add_argument("algfile")
    s.add_argument("--ideal", required=True, metavar="i,j,k")
    s.set_defaults(func=_cmd_quotient)

    s = sub.add_parser("catalog", help="write the chain-product catalog")
    s.add_argument("--max-order", type=int, required=True, metavar="N")
    s.add_argument("--out", required=True, metavar="DIR")
    s.add_argument("--cross-check", action="store_true")
    s.set_defaults(func=_cmd_catalog)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (MvError, OSError) as exc:
        print(f"mvkit: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
