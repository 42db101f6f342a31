"""Command-line front end.

Subcommands: gamma, bondage, verify, sweep, mds-check, product.  Range flags
on sweep and mds-check accept "3", "1,2,5", or "2..7".  Exit code is 0 iff
every non-skipped report entry matches.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .bondage import bondage_number
from .domination import domination_number
from .graphs import render_graph_text
from .harness import (
    InstanceSpec,
    build_instance,
    build_report,
    emit_report,
    mds_structure_entries,
    sweep,
    verify_instance_safely,
)


def _int_range(text: str) -> list[int]:
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, hi = part.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    if not out:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return out


def _branch_tuple(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad branch list {text!r}") from None


def _add_instance_flags(parser: argparse.ArgumentParser, ranged: bool) -> None:
    parser.add_argument(
        "--family", choices=("km-pn", "km-starlike", "path", "complete", "file")
    )
    if ranged:
        parser.add_argument("--m", type=_int_range, help="left factor order(s)")
        parser.add_argument("--n", type=_int_range, help="path length(s)")
    else:
        parser.add_argument("--m", type=int)
        parser.add_argument("--n", type=int)
    parser.add_argument(
        "--branches",
        type=_branch_tuple,
        action="append",
        help="starlike branch lengths a,b,c (repeatable in sweeps)",
    )
    parser.add_argument("--graph", help="path to a graph file (family: file)")


def _add_search_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-size", type=int, help="bondage search size cap")
    parser.add_argument("--budget-seconds", type=int, help="per-instance wall budget")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomised pools")
    parser.add_argument("--json", action="store_true", help="emit JSON")
    parser.add_argument(
        "--full-search",
        action="store_true",
        help="force full exact bondage search instead of witness+refutation",
    )


def _single_instance(args) -> InstanceSpec:
    if args.graph:
        return InstanceSpec("file", path=args.graph)
    if not args.family:
        raise SystemExit("error: --family (or --graph) is required")
    branches = args.branches[0] if args.branches else None
    return InstanceSpec(args.family, m=args.m, n=args.n, branches=branches)


def _ranged_instances(args) -> list[InstanceSpec]:
    if args.graph:
        return [InstanceSpec("file", path=args.graph)]
    if not args.family:
        raise SystemExit("error: --family (or --graph) is required")
    family = args.family
    ms = args.m or [None]
    ns = args.n or [None]
    if family == "km-pn":
        return [InstanceSpec(family, m=m, n=n) for m in ms for n in ns]
    if family == "km-starlike":
        if not args.branches:
            raise SystemExit("error: km-starlike sweeps need --branches")
        return [InstanceSpec(family, m=m, branches=b) for m in ms for b in args.branches]
    if family == "path":
        return [InstanceSpec(family, n=n) for n in ns]
    if family == "complete":
        return [InstanceSpec(family, m=m) for m in ms]
    raise SystemExit("error: file sweeps need --graph")


def _emit(report, as_json: bool) -> int:
    fmt = "json" if as_json else "text-table"
    sys.stdout.write(emit_report(report, fmt))
    return 0 if report.all_match() else 1


def _cmd_gamma(args) -> int:
    spec = _single_instance(args)
    built = build_instance(spec)
    result = domination_number(built.graph)
    if args.json:
        print(
            json.dumps(
                {
                    "instance": spec.as_dict(),
                    "gamma": result.value,
                    "witness": list(result.witness),
                }
            )
        )
    else:
        print(f"gamma({spec.label()}) = {result.value}")
        print(f"witness: {list(result.witness)}")
    return 0


def _cmd_bondage(args) -> int:
    spec = _single_instance(args)
    built = build_instance(spec)
    result = bondage_number(
        built.graph,
        max_size=args.max_size,
        seed=args.seed,
        budget_seconds=args.budget_seconds,
    )
    if args.json:
        print(
            json.dumps(
                {
                    "instance": spec.as_dict(),
                    "bondage": result.value,
                    "witness": [list(e) for e in result.witness],
                }
            )
        )
    else:
        print(f"bondage({spec.label()}) = {result.value}")
        print(f"witness: {[tuple(e) for e in result.witness]}")
    return 0


def _cmd_verify(args) -> int:
    spec = _single_instance(args)
    quantities = ("gamma", "bondage") if args.quantity == "both" else (args.quantity,)
    start = time.monotonic()
    entries = [
        verify_instance_safely(
            spec,
            q,
            full_search=args.full_search,
            budget_seconds=args.budget_seconds,
            max_size=args.max_size,
            seed=args.seed,
        )
        for q in quantities
    ]
    total = (time.monotonic() - start) * 1000.0
    report = build_report(
        entries,
        {"quantity": args.quantity, "full_search": args.full_search, "seed": args.seed},
        total,
    )
    return _emit(report, args.json)


def _cmd_sweep(args) -> int:
    instances = _ranged_instances(args)
    report = sweep(
        instances,
        args.quantity,
        jobs=args.jobs,
        full_search=args.full_search,
        budget_seconds=args.budget_seconds,
        max_size=args.max_size,
        seed=args.seed,
    )
    return _emit(report, args.json)


def _cmd_mds_check(args) -> int:
    import time as _time

    start = _time.monotonic()
    entries = []
    for m in args.m:
        for n in args.n:
            entries.extend(mds_structure_entries(m, n))
    total = (time.monotonic() - start) * 1000.0
    report = build_report(entries, {"m": args.m, "n": args.n}, total)
    return _emit(report, args.json)


def _cmd_product(args) -> int:
    spec = _single_instance(args)
    if spec.family == "file":
        raise SystemExit("error: product needs a generated family, not a file")
    built = build_instance(spec)
    text = render_graph_text(built.graph)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="strongdom",
        description="Exact domination and bondage numbers with a verification harness.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gamma", help="exact domination number of one instance")
    _add_instance_flags(p, ranged=False)
    _add_search_flags(p)
    p.set_defaults(func=_cmd_gamma)

    p = sub.add_parser("bondage", help="exact bondage number of one instance")
    _add_instance_flags(p, ranged=False)
    _add_search_flags(p)
    p.set_defaults(func=_cmd_bondage)

    p = sub.add_parser("verify", help="verify one instance against its formula")
    _add_instance_flags(p, ranged=False)
    _add_search_flags(p)
    p.add_argument("--quantity", choices=("gamma", "bondage", "both"), default="both")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("sweep", help="verify a parameter range")
    _add_instance_flags(p, ranged=True)
    _add_search_flags(p)
    p.add_argument("--quantity", choices=("gamma", "bondage", "both"), default="both")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser(
        "mds-check", help="audit the structure of all minimum dominating sets"
    )
    p.add_argument("--m", type=_int_range, required=True)
    p.add_argument("--n", type=_int_range, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_mds_check)

    p = sub.add_parser("product", help="emit a generated graph in the text format")
    _add_instance_flags(p, ranged=False)
    p.add_argument("--output", help="write to this path instead of stdout")
    p.set_defaults(func=_cmd_product)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
