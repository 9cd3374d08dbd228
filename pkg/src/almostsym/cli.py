"""Command-line front end.

Subcommands: info, irreducible, as-ascending, as-descending, oracle, bench.
Enumerations stream one JSON object per semigroup in canonical gap order.
Exit codes: 0 success, 2 invalid parameters, 3 resource limit,
4 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .core import (EnumerationResult, InvalidParameters, LimitExceeded,
                   Semigroup, compute_stats, from_gaps, from_generators)
from .ascending import as_all_ascending, as_with_type
from .classify import as_exists
from .descending import as_all_descending, as_down_to_type
from .irreducible import enumerate_irreducible
from .oracle import oracle_as, DEFAULT_F_MAX
from .bench import run_bench, render_table, DEFAULT_F_LIST


def semigroup_record(S: Semigroup) -> dict:
    st = compute_stats(S)
    return {
        "gaps": list(S.gaps),
        "msg": list(st.msg),
        "pf": list(st.pf),
        "frobenius": st.frobenius,
        "genus": st.genus,
        "type": st.type_,
        "multiplicity": st.multiplicity,
    }


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise InvalidParameters(f"expected comma-separated integers, got {text!r}")


def _emit_result(result: EnumerationResult, args, out) -> None:
    if args.dot:
        _emit_dot(result, out)
        return
    sems = result.semigroups
    if args.type is not None:
        sems = tuple(S for S in sems if compute_stats(S).type_ == args.type)
    elif getattr(args, "min_type", None) is not None:
        sems = tuple(S for S in sems if compute_stats(S).type_ >= args.min_type)
    if args.count_only:
        by_type: dict[int, int] = {}
        for S in sems:
            t = compute_stats(S).type_
            by_type[t] = by_type.get(t, 0) + 1
        for t in sorted(by_type):
            print(json.dumps({"type": t, "count": by_type[t]}), file=out)
        print(json.dumps({"total": len(sems)}), file=out)
    else:
        for S in sems:
            print(json.dumps(semigroup_record(S)), file=out)


def _emit_dot(result: EnumerationResult, out) -> None:
    def label(S: Semigroup) -> str:
        return "<" + ",".join(map(str, compute_stats(S).msg)) + ">"

    print("digraph tree {", file=out)
    for edge in sorted(result.edges, key=lambda e: (e.parent.gaps, e.x)):
        print(f'  "{label(edge.parent)}" -> "{label(edge.child)}" '
              f'[label="{edge.x}"];', file=out)
    print("}", file=out)


def _cmd_info(args, out) -> None:
    if args.gens:
        S = from_generators(_int_list(args.gens))
    else:
        S = from_gaps(_int_list(args.gaps))
    print(json.dumps(semigroup_record(S)), file=out)


def _cmd_enumerate(args, out) -> None:
    F = args.frobenius
    mode = args.mode
    if args.dot and mode not in ("irreducible", "as-descending"):
        raise InvalidParameters("--dot is only available for tree modes")
    if mode == "irreducible":
        result = enumerate_irreducible(F)
    elif mode == "as-ascending":
        if args.type is not None:
            result = as_with_type(F, args.type)
        elif args.min_type is not None:
            result = EnumerationResult.collect(
                (S for t in range(args.min_type, F + 1)
                 if as_exists(F, t)
                 for S in as_with_type(F, t)),
                "ascending", 0)
        else:
            result = as_all_ascending(F, workers=args.threads)
    elif mode == "as-descending":
        t = args.type if args.type is not None else (args.min_type or 1)
        t = max(1, min(t, F))
        result = as_down_to_type(F, t, with_edges=args.dot)
    elif mode == "oracle":
        result = oracle_as(F, args.type, workers=args.threads)
        if args.min_type is not None:
            result = EnumerationResult.collect(
                (S for S in result if compute_stats(S).type_ >= args.min_type),
                "oracle", 0)
    else:  # pragma: no cover
        raise InvalidParameters(f"unknown mode {mode!r}")
    _emit_result(result, args, out)


def _cmd_bench(args, out) -> None:
    f_list = (list(DEFAULT_F_LIST) if args.frobenius_list is None
              else _int_list(args.frobenius_list))
    algorithms = [a.strip() for a in args.algorithms.split(",") if a.strip()]
    report = run_bench(f_list, algorithms, workers=args.threads)
    print(render_table(report), file=out)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(report.to_dict(), fh, indent=2)
            fh.write("\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="almostsym",
        description="Almost symmetric numerical semigroups with prescribed "
                    "Frobenius number and type.")
    sub = parser.add_subparsers(dest="command", required=True)

    info = sub.add_parser("info", help="invariants of one semigroup")
    group = info.add_mutually_exclusive_group(required=True)
    group.add_argument("--gens", help="comma-separated generators (gcd 1)")
    group.add_argument("--gaps", help="comma-separated gap set")

    for mode in ("irreducible", "as-ascending", "as-descending", "oracle"):
        p = sub.add_parser(mode, help=f"enumerate via {mode}")
        p.set_defaults(mode=mode)
        p.add_argument("--frobenius", type=int, required=True)
        p.add_argument("--type", type=int, default=None)
        p.add_argument("--min-type", type=int, default=None, dest="min_type")
        p.add_argument("--count-only", action="store_true")
        p.add_argument("--dot", action="store_true")
        p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
        p.add_argument("--out", default=None)

    bench = sub.add_parser("bench", help="timing comparison of the algorithms")
    bench.add_argument("--frobenius-list", default=None,
                       help=f"default: {','.join(map(str, DEFAULT_F_LIST))}")
    bench.add_argument("--algorithms", default="ascending,descending")
    bench.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    bench.add_argument("--out", default=None)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    opened = None
    try:
        if args.command != "bench" and getattr(args, "out", None):
            opened = out = open(args.out, "w")
        if args.command == "info":
            _cmd_info(args, out)
        elif args.command == "bench":
            _cmd_bench(args, out)
        else:
            _cmd_enumerate(args, out)
    except LimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InvalidParameters, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (AssertionError, RuntimeError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 4
    finally:
        if opened:
            opened.close()
    return 0


if __name__ == "__main__":
    sys.exit(main())
