"""Command line front end: transform paths, run the verification suite,
and export statistic tables.

Exit codes: 2 for malformed input or bad flag combinations, 3 for shape
or labelling violations, 1 for failed verification checks or I/O
problems.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import stats, zeta
from .errors import (
    CapExceeded,
    InvalidLabelling,
    MalformedToken,
    NotBijective,
    ShapeMismatch,
    ShapeViolation,
)
from .paths import (
    ballot,
    count_paths,
    enumerate_paths,
    enumeration_cap,
    is_dyck,
    lattice,
    parse_path,
    path_to_json,
    render_path,
    signed_ballot,
    signed_lattice,
)
from .signedperm import SignedPermutation
from .torus import VertPath, is_vertical_labelling
from .verify import run_suite

_PARSE_ERRORS = (MalformedToken, NotBijective, ValueError)
_SHAPE_ERRORS = (ShapeViolation, ShapeMismatch, InvalidLabelling)


def _infer_source_kind(text: str, lattice_type: str):
    toks = [t for t in text.replace(" ", "") if t in "NE"]
    norths = sum(1 for t in toks if t == "N")
    if lattice_type == "D":
        return signed_lattice(norths)
    return lattice(len(toks) - norths, norths)


def _infer_target_kind(text: str, lattice_type: str):
    toks = [t for t in text.replace(" ", "") if t in "NE"]
    norths = sum(1 for t in toks if t == "N")
    if lattice_type == "D":
        return signed_ballot((len(toks) + 1) // 2)
    if lattice_type == "A":
        return lattice(len(toks) - norths, norths)
    return ballot(len(toks))


def _cmd_zeta(args) -> int:
    lt = args.type
    if args.inverse:
        kind = _infer_target_kind(args.path, lt)
        target = parse_path(args.path, kind)
        if lt == "C" and not args.table:
            preimage = zeta.inverse_zeta_c(target)
        else:
            preimage = zeta.inverse_by_table(target, lt)
        out = {"type": lt, "input": path_to_json(target), "preimage": path_to_json(preimage)}
        print(json.dumps(out))
        return 0
    kind = _infer_source_kind(args.path, lt)
    source = parse_path(args.path, kind)
    if lt == "A" and not is_dyck(source):
        raise ShapeMismatch("type A expects a path weakly above the diagonal")
    out = {
        "type": lt,
        "input": path_to_json(source),
        "area_vector": list(zeta.area_vector(source, lt)),
        "zeta": path_to_json(zeta.zeta_path(source, lt)),
    }
    if args.labels is not None:
        labels = SignedPermutation.from_text(args.labels)
        if not is_vertical_labelling(source, labels, lt):
            raise InvalidLabelling("labels %s are not a vertical labelling" % labels)
        out["reading_word"] = list(zeta.reading_word(VertPath(source, labels), lt).window)
    if args.sweep:
        out["sweep_labels"] = zeta.sweep_labels(source)
    print(json.dumps(out))
    return 0


def _cmd_verify(args) -> int:
    checks = None
    if args.check:
        checks = [c.strip() for c in args.check.split(",") if c.strip()]
    report = run_suite(args.type, args.n, checks)
    print(report.to_json())
    return 0 if report.passed else 1


def _cmd_table(args) -> int:
    lt = args.type
    wanted = [s.strip() for s in args.stats.split(",") if s.strip()]
    allowed = {
        "A": ("area", "dinv"),
        "B": ("area", "dinv_b_exp"),
        "C": ("area", "dinv"),
        "D": ("area",),
    }[lt]
    bad = [s for s in wanted if s not in allowed]
    if bad:
        raise ValueError("statistics %s not available in type %s" % (", ".join(bad), lt))
    rows = []
    if args.n > 0:
        kind = signed_lattice(args.n) if lt == "D" else lattice(args.n, args.n)
        total = count_paths(kind)
        if total > enumeration_cap():
            raise CapExceeded("%d paths exceed the cap" % total)
        for p in enumerate_paths(kind):
            if lt == "A" and not is_dyck(p):
                continue
            image = zeta.zeta_path(p, lt)
            row = {"path": render_path(p)}
            for s in wanted:
                if s == "area":
                    row[s] = sum(zeta.area_vector(p, "A")) if lt == "A" else stats.area(image, lt)
                elif s == "dinv":
                    row[s] = stats.dinv_c(p)
                else:
                    row[s] = stats.dinv_b_experimental(p)
            rows.append(row)
    try:
        with open(args.out, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["path", *wanted])
            for row in rows:
                writer.writerow([row["path"], *(row[s] for s in wanted)])
    except OSError as exc:
        print("cannot write %s: %s" % (args.out, exc), file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zetakit")
    sub = parser.add_subparsers(dest="command", required=True)

    z = sub.add_parser("zeta", help="apply a zeta map to a path")
    z.add_argument("--type", required=True, choices=("A", "B", "C", "D"))
    z.add_argument("--path", required=True)
    z.add_argument("--labels", help="window text for a vertical labelling")
    z.add_argument("--inverse", action="store_true")
    z.add_argument("--table", action="store_true", help="invert by exhaustive lookup")
    z.add_argument("--sweep", action="store_true", help="include the sweep label trace")
    z.set_defaults(func=_cmd_zeta)

    v = sub.add_parser("verify", help="run the verification suite")
    v.add_argument("--type", required=True, choices=("A", "B", "C", "D"))
    v.add_argument("--n", required=True, type=int)
    v.add_argument("--check", help="comma separated check names")
    v.set_defaults(func=_cmd_verify)

    t = sub.add_parser("table", help="export a statistics table")
    t.add_argument("--type", required=True, choices=("A", "B", "C", "D"))
    t.add_argument("--n", required=True, type=int)
    t.add_argument("--stats", required=True)
    t.add_argument("--out", required=True)
    t.set_defaults(func=_cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "zeta":
        if args.inverse and args.type != "C" and not args.table:
            parser.error("--inverse needs --type C or an explicit --table")
        if args.sweep and args.type != "C":
            parser.error("--sweep is only defined for --type C")
        if args.inverse and args.labels:
            parser.error("--inverse does not take --labels")
    try:
        return args.func(args)
    except CapExceeded as exc:
        print("cap exceeded: %s" % exc, file=sys.stderr)
        return 2
    except _SHAPE_ERRORS as exc:
        print("shape error: %s" % exc, file=sys.stderr)
        return 3
    except _PARSE_ERRORS as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
