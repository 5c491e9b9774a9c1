"""Command-line surface: inspect elements, build bricks, decompose, verify.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 capacity.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from importlib import resources

from coxbrick import census as census_mod
from coxbrick.bricks import (
    brick_diagram,
    diagram_to_json,
    render_diagram,
)
from coxbrick.canjoin import decompose
from coxbrick.coxeter import (
    CapacityError,
    CoxeterElement,
    DynkinType,
    Family,
    descents,
    enumerate_group,
    format_window,
    inversions,
    join_irreducible_type,
    parse_window,
)
from coxbrick.grids import j_module, kernel_socle
from coxbrick.homs import iso_bricks, socle_over_end
from coxbrick.semibricks import (
    render_semibrick,
    semibrick,
    semibrick_direct,
    semibrick_to_json,
    verify_semibrick,
)
from coxbrick.weak_order import GroupPoset

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2
EXIT_CAPACITY = 3


class InputError(Exception):
    pass


def _dynkin(args: argparse.Namespace) -> DynkinType:
    try:
        return DynkinType(Family(args.type), args.rank)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _element(args: argparse.Namespace) -> CoxeterElement:
    dynkin = _dynkin(args)
    try:
        return parse_window(dynkin, args.window)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def element_to_json(w: CoxeterElement) -> dict:
    return {
        "family": w.dynkin.family.value,
        "rank": w.dynkin.rank,
        "window": list(w.window),
        "length": len(inversions(w)),
        "descents": sorted(descents(w)),
        "jirr_type": join_irreducible_type(w),
    }


def element_from_json(data: dict) -> CoxeterElement:
    dynkin = DynkinType(Family(data["family"]), data["rank"])
    return CoxeterElement(dynkin, tuple(data["window"]))


def cmd_element(args: argparse.Namespace) -> int:
    w = _element(args)
    if args.format == "json":
        print(json.dumps(element_to_json(w), sort_keys=True))
        return EXIT_OK
    des = sorted(descents(w))
    print(f"window: {w}")
    print(f"type: {w.dynkin}")
    print(f"length: {len(inversions(w))}")
    print("descents: " + (",".join(map(str, des)) if des else "none"))
    l = join_irreducible_type(w)
    if l is not None:
        print(f"jirr of type {l}")
        if w.dynkin.family is Family.D:
            print(f"sigma: {census_mod.sigma(w)}")
            print("chi: " + ",".join(map(str, census_mod.chi(w))))
    return EXIT_OK


def cmd_brick(args: argparse.Namespace) -> int:
    w = _element(args)
    if join_irreducible_type(w) is None:
        raise InputError(f"{w} is not join-irreducible; use the semibrick command")
    diag = brick_diagram(w)
    if args.format == "json":
        print(json.dumps(diagram_to_json(diag), sort_keys=True))
    elif args.format == "dot":
        lines = [f'digraph "S({w})" {{']
        for s in sorted(diag.symbols):
            lines.append(f'  "{s}";')
        for s, t in sorted(diag.arrows):
            lines.append(f'  "{s}" -> "{t}";')
        lines.append("}")
        print("\n".join(lines))
    else:
        print(render_diagram(diag))
    return EXIT_OK


def cmd_semibrick(args: argparse.Namespace) -> int:
    w = _element(args)
    s = semibrick_direct(w) if args.direct else semibrick(w)
    if args.format == "json":
        print(json.dumps(semibrick_to_json(s), sort_keys=True))
    else:
        out = render_semibrick(s)
        print(out if out else "(empty semibrick)")
    return EXIT_OK


def cmd_decompose(args: argparse.Namespace) -> int:
    w = _element(args)
    rows = decompose(w)
    if args.format == "json":
        payload = [
            {
                "d": row.d,
                "a": row.a,
                "b": row.b,
                "case": row.case,
                "R": sorted(row.r_values),
                "window": list(row.element.window),
            }
            for row in rows
        ]
        print(json.dumps(payload, sort_keys=True))
        return EXIT_OK
    if not rows:
        print("(identity: empty canonical join representation)")
        return EXIT_OK
    for row in rows:
        r_text = "{" + ",".join(str(x) for x in sorted(row.r_values)) + "}"
        case = f" case={row.case}" if row.case else ""
        print(
            f"d={row.d} a={row.a} b={row.b}{case} R={r_text} "
            f"w={format_window(row.element.window)}"
        )
    return EXIT_OK


def cmd_count(args: argparse.Namespace) -> int:
    dynkin = _dynkin(args)
    formula = census_mod.global_count(dynkin)
    enumerated = sum(
        1 for w in enumerate_group(dynkin, cap=args.cap) if len(descents(w)) == 1
    )
    status = "OK" if formula == enumerated else "MISMATCH"
    print(f"formula {formula}, enumerated {enumerated}, {status}")
    return EXIT_OK if status == "OK" else EXIT_VERIFY


def default_fixture_lines() -> list[str]:
    text = resources.files("coxbrick").joinpath("data/d5_census.txt").read_text()
    return text.splitlines()


def cmd_census(args: argparse.Namespace) -> int:
    dynkin = _dynkin(args)
    if dynkin.family is not Family.D:
        raise InputError("the census is defined for type D only")
    if args.check and not args.fixture and dynkin.rank != 5:
        raise InputError("only rank 5 has a packaged fixture; pass --fixture")
    groups = census_mod.census(dynkin, cap=args.cap)
    if args.fixture or args.check:
        if args.fixture:
            with open(args.fixture) as fh:
                fixture = fh.read().splitlines()
        else:
            fixture = default_fixture_lines()
        problems = census_mod.census_diff(groups, fixture)
        total = sum(len(v) for v in groups.values())
        if problems:
            for p in problems:
                print(p)
            return EXIT_VERIFY
        print(f"census {dynkin}: {total} entries in {len(groups)} shapes match fixture")
        return EXIT_OK
    for line in census_mod.census_lines(groups):
        print(line)
    return EXIT_OK


def cmd_hasse(args: argparse.Namespace) -> int:
    dynkin = _dynkin(args)
    poset = GroupPoset.build(dynkin, cap=args.cap)
    if args.format == "dot":
        print(poset.hasse_dot())
    else:
        for upper, lower in poset.hasse_edges():
            print(f"{upper} -> {lower}")
    return EXIT_OK


def _verify_oracle(dynkin: DynkinType, args: argparse.Namespace) -> int:
    jirr = [
        w for w in enumerate_group(dynkin, cap=args.cap) if len(descents(w)) == 1
    ]
    if args.sample and args.sample < len(jirr):
        jirr = random.Random(args.seed).sample(jirr, args.sample)
        jirr.sort()
    from coxbrick.bricks import brick_rep
    from coxbrick.grids import UnsupportedCaseError

    failures = []
    for w in jirr:
        module = j_module(w)
        socle = socle_over_end(module)
        combinatorial = brick_rep(w)
        ok = iso_bricks(socle, combinatorial)
        try:
            kernel = kernel_socle(w)
            ok = ok and kernel.dims == socle.dims and kernel.mats == socle.mats
        except UnsupportedCaseError:
            pass
        if not ok:
            failures.append(w)
    print(f"{len(jirr) - len(failures)}/{len(jirr)} bricks match socle oracle")
    for w in failures:
        print(f"counterexample: {w}")
    return EXIT_VERIFY if failures else EXIT_OK


def _verify_cjr(dynkin: DynkinType, args: argparse.Namespace) -> int:
    from coxbrick.canjoin import cjr_direct

    poset = GroupPoset.build(dynkin, cap=args.cap)
    failures = []
    for w in poset.elements:
        if cjr_direct(w) != poset.cjr_oracle(w):
            failures.append(w)
    total = len(poset.elements)
    print(f"{total - len(failures)}/{total} canonical join representations match oracle")
    for w in failures:
        print(f"counterexample: {w}")
    return EXIT_VERIFY if failures else EXIT_OK


def _verify_semibrick(dynkin: DynkinType, args: argparse.Namespace) -> int:
    elements = enumerate_group(dynkin, cap=args.cap)
    if args.sample and args.sample < len(elements):
        elements = sorted(random.Random(args.seed).sample(list(elements), args.sample))
    poset = GroupPoset.build(dynkin, cap=args.cap) if args.join else None
    failures = []
    for w in elements:
        report = verify_semibrick(semibrick_direct(w), poset)
        if not report.ok:
            failures.append(w)
    print(f"{len(elements) - len(failures)}/{len(elements)} semibricks verified")
    for w in failures:
        print(f"counterexample: {w}")
    return EXIT_VERIFY if failures else EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    dynkin = _dynkin(args)
    if args.suite == "oracle":
        return _verify_oracle(dynkin, args)
    if args.suite == "cjr":
        return _verify_cjr(dynkin, args)
    if args.suite == "semibrick":
        return _verify_semibrick(dynkin, args)
    if args.suite == "count":
        return cmd_count(args)
    if args.suite == "census":
        args.fixture = getattr(args, "fixture", None)
        args.check = True
        return cmd_census(args)
    raise InputError(f"unknown suite {args.suite}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxbrick",
        description="Bricks and semibricks over preprojective algebras of types A and D.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, window: bool = False) -> None:
        p.add_argument("--type", required=True, choices=["A", "D"])
        p.add_argument("--rank", required=True, type=int)
        p.add_argument("--cap", type=int, default=50_000, help="enumeration cap")
        if window:
            p.add_argument("--window", required=True, help="comma-separated window")

    p = sub.add_parser("element", help="inspect one element")
    common(p, window=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_element)

    p = sub.add_parser("brick", help="brick of a join-irreducible element")
    common(p, window=True)
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.set_defaults(func=cmd_brick)

    p = sub.add_parser("semibrick", help="semibrick of an arbitrary element")
    common(p, window=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--direct", action="store_true", help="use the direct formulas")
    p.set_defaults(func=cmd_semibrick)

    p = sub.add_parser("decompose", help="canonical join representation table")
    common(p, window=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("count", help="join-irreducible count: formula vs enumeration")
    common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("census", help="type-D shape census (rank 5 has a fixture)")
    common(p)
    p.add_argument("--fixture", help="fixture file to diff against")
    p.add_argument("--check", action="store_true", help="diff against packaged fixture")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("hasse", help="Hasse diagram of the weak order")
    common(p)
    p.add_argument("--format", choices=["text", "dot"], default="dot")
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("verify", help="run a verification sweep")
    common(p)
    p.add_argument(
        "--suite",
        required=True,
        choices=["oracle", "cjr", "semibrick", "count", "census"],
    )
    p.add_argument("--sample", type=int, default=0, help="sample size (0 = all)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--join", action="store_true", help="also recompute joins")
    p.add_argument("--fixture", help="census fixture override")
    p.set_defaults(func=cmd_verify)
    return parser


def _merge_window_flag(argv: list[str]) -> list[str]:
    """Join `--window VALUE` into one token so windows starting with a
    negative entry (e.g. -1,2,...) are not mistaken for flags."""
    out = []
    skip = False
    for i, token in enumerate(argv):
        if skip:
            skip = False
            continue
        if token == "--window" and i + 1 < len(argv):
            out.append(f"--window={argv[i + 1]}")
            skip = True
        else:
            out.append(token)
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    argv = _merge_window_flag(list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad flags, which matches the input-error code
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
