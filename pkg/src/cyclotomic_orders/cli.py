"""Command-line front end.

    cyclotomic-orders classify -l 2 -n 3 --h -1 --H 1/3
    cyclotomic-orders order -l 2 -n 2 --h -1 --H 10 --which geometric --format dot
    cyclotomic-orders walls -l 2 -n 3 --which git
    cyclotomic-orders fixed-points -l 2 -n 1 --h -1 --H 0
    cyclotomic-orders verify -l 2 -n 3
    cyclotomic-orders hasse -l 1 -n 4 --h -1 --which geometric

Exit status: 0 on success, 1 when a check fails, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import orders, verify
from .multipartitions import core_of_charge, format_multipartition, identity_perm, parse_charge
from .params import ParamPoint, c_wall_forms, format_fraction, git_walls, h_of_theta, walls_through
from .weyl import ALCOVE_MODES, CANONICAL, alcove_data, base_point

ORDERS = ("c", "a", "geometric", "facet", "dominance")


class UsageError(Exception):
    pass


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


def _fraction_list(text: str) -> list[Fraction]:
    return [_fraction(x) for x in text.split(",") if x.strip()]


def _point(args) -> ParamPoint:
    if args.h is None:
        raise UsageError("--h is required")
    H = args.H if args.H is not None else []
    if len(H) != args.l - 1:
        raise UsageError(f"--H needs {args.l - 1} entries at level {args.l}")
    return ParamPoint(args.l, args.h, H)


def _require_classifiable(p: ParamPoint) -> None:
    if p.h == 0:
        raise UsageError("theta·delta = 0: no classification (this locus is excluded)")


def cmd_classify(args) -> int:
    if args.charge is not None:
        s = parse_charge(args.charge)
        if len(s) != args.l:
            raise UsageError(f"charge {s} does not have {args.l} entries")
        p = h_of_theta(base_point(s, identity_perm(args.l)))
        out = {"charge": list(s), "core": list(core_of_charge(s)),
               "alcove_point": str(p)}
        print(json.dumps(out))
        return 0
    p = _point(args)
    _require_classifiable(p)
    d = alcove_data(p, args.n, args.alcove_mode)
    out = d.to_dict()
    out["mode"] = d.mode
    out["scale"] = format_fraction(d.scale)
    out["walls"] = [str(w) for w in sorted(walls_through(p, args.n))]
    print(json.dumps(out))
    return 0


def _relation(args) -> orders.OrderRelation:
    which = args.which
    if which == "dominance":
        return orders.dominance_order(args.l, args.n)
    p = _point(args)
    if which == "a" and p.h <= 0:
        raise UsageError("the a-order needs h > 0")
    if which == "c":
        return orders.c_order(p, args.n)
    if which == "a":
        return orders.a_order(p, args.n)
    _require_classifiable(p)
    if which == "geometric":
        if walls_through(p, args.n):
            raise UsageError("point lies on a wall; use --which facet")
        return orders.geometric_order(p, args.n)
    return orders.facet_order(p, args.n, args.alcove_mode)


def _table(rel: orders.OrderRelation) -> str:
    labels = [format_multipartition(x) for x in rel.ground]
    width = max(len(x) for x in labels)
    lines = [f"{rel.name} order" + (f" at {rel.point}" if rel.point is not None else "")]
    for i, x in enumerate(labels):
        row = " ".join(rel.table[i, j].value.rjust(2) for j in range(len(labels)))
        lines.append(f"{i:>3} {x.ljust(width)}  {row}")
    return "\n".join(lines)


def cmd_order(args) -> int:
    rel = _relation(args)
    if args.format == "dot":
        print(orders.to_dot(rel), end="")
    elif args.format == "table":
        print(_table(rel))
    else:
        print(rel.to_json())
    return 0


def cmd_hasse(args) -> int:
    rel = _relation(args)
    if args.format in ("dot", None):
        print(orders.to_dot(rel), end="")
        return 0
    covers = [[format_multipartition(rel.ground[j]), format_multipartition(rel.ground[i])]
              for i, j in orders.hasse(rel)]
    if args.format == "json":
        print(json.dumps({"order": rel.name, "covers": covers}))
    else:
        for hi, lo in covers:
            print(f"{hi} > {lo}")
    return 0


def cmd_walls(args) -> int:
    git = git_walls(args.l, args.n)
    walls = git if args.which == "git" else c_wall_forms(args.l, args.n)
    names = [str(w) for w in sorted(walls)]
    if args.format == "json":
        out = {"which": args.which, "walls": names}
        if args.which == "c":
            out["contains_git"] = git <= walls
        print(json.dumps(out))
    else:
        for name in names:
            print(name)
        if args.which == "c":
            print(f"# contains every G.I.T. wall: {'yes' if git <= walls else 'no'}")
    return 0


def cmd_fixed_points(args) -> int:
    p = _point(args)
    _require_classifiable(p)
    classes = orders.j_classes(p, args.n, args.alcove_mode)
    d = alcove_data(p, args.n, args.alcove_mode)
    out = {"J": list(d.J), "classes": [[format_multipartition(x) for x in c] for c in classes]}
    print(json.dumps(out))
    return 0


def _mutant_c(p, lam):
    # deliberately wrong c-function, used to exercise failure reporting
    return orders.c_value(p, lam) + len(lam[0])


def cmd_verify(args) -> int:
    names = args.check or verify.CHECK_NAMES
    grid = [(args.l, args.n)] if args.l_given else list(verify.DEFAULT_GRID)
    c = _mutant_c if args.inject_fault else orders.c_value
    failed = False
    for ell, n in grid:
        for report in verify.run_grid(ell, n, names, c=c):
            print(report.to_json())
            failed |= not report.passed
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-l", type=int, default=None, help="level (number of components)")
    common.add_argument("-n", type=int, default=None, help="degree")
    common.add_argument("--h", type=_fraction, default=None, help="the parameter h, e.g. -1 or 1/2")
    common.add_argument("--H", type=_fraction_list, default=None,
                        help="comma list H_1,...,H_{l-1}")
    common.add_argument("--charge", default=None, help="a charge such as (1,0,-1)")
    common.add_argument("--format", choices=("json", "table", "dot"), default=None)
    common.add_argument("--alcove-mode", choices=ALCOVE_MODES, default=CANONICAL,
                        help="alcove used for points on walls")

    parser = argparse.ArgumentParser(
        prog="cyclotomic-orders",
        description="Exact orders on multipartitions: classification, walls and checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="alcove data of a point")
    p.set_defaults(func=cmd_classify)

    for name, func, text in (("order", cmd_order, "full relation table"),
                             ("hasse", cmd_hasse, "cover relations")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--which", choices=ORDERS, default="geometric")
        p.set_defaults(func=func)

    p = sub.add_parser("walls", parents=[common], help="wall forms")
    p.add_argument("--which", choices=("git", "c"), default="git")
    p.set_defaults(func=cmd_walls)

    p = sub.add_parser("fixed-points", parents=[common], help="J-classes at a point")
    p.set_defaults(func=cmd_fixed_points)

    p = sub.add_parser("verify", parents=[common], help="run the checks")
    p.add_argument("--check", action="append", choices=verify.CHECK_NAMES,
                   help="run only this check (repeatable)")
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.l_given = args.l is not None
    if args.l is None:
        args.l = 1
    if args.n is None:
        args.n = 1
    if args.l < 1 or args.n < 1:
        print("error: -l and -n must be at least 1", file=sys.stderr)
        return 2
    if args.format is None and args.command in ("order", "walls"):
        args.format = "json" if args.command == "order" else "table"
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
