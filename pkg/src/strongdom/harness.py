"""Verification harness: instance descriptions, two-sided checks against the
closed-form values, structural audits of minimum dominating sets, sweeps with
optional parallelism, and machine-readable reports.

Two-sided bondage verification means: the family's constructive edge set is
confirmed to raise the domination number (upper bound), and an exhaustive
scan refutes every edge subset one smaller (lower bound).  Full search at the
answer size is usually far costlier than refutation one below it, so the
two-sided route is the default whenever a formula applies.
"""

from __future__ import annotations

import json
import multiprocessing
import time
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from ._version import __version__
from .bondage import (
    TimeBudgetExceeded,
    bondage_number,
    column_cover_edges,
    covering_matching,
    find_bondage_set_up_to,
    is_bondage_set,
    path_bondage_edges,
    pendant_bondage_set,
    rung_edges,
)
from .domination import (
    DEFAULT_ENUMERATION_CAP,
    EnumerationCapExceeded,
    domination_number,
    enumerate_min_dominating_sets,
)
from .formulas import (
    _ceil3,
    bondage_complete,
    bondage_km_pn,
    bondage_km_starlike,
    bondage_path,
    gamma_km_pn,
    gamma_path,
    gamma_starlike,
)
from .graphs import (
    Edge,
    Graph,
    ProductIndexing,
    StarlikeSpec,
    complete_graph,
    parse_graph_file,
    path_graph,
    starlike_tree,
    strong_product,
)

FAMILIES = ("km-pn", "km-starlike", "path", "complete", "file")
QUANTITIES = ("gamma", "bondage")


@dataclass(frozen=True)
class InstanceSpec:
    """One graph instance a sweep can verify, named by family and parameters."""

    family: str
    m: int | None = None
    n: int | None = None
    branches: tuple[int, ...] | None = None
    path: str | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.branches is not None:
            object.__setattr__(self, "branches", tuple(int(b) for b in self.branches))
        if self.family == "km-pn" and ((self.m or 0) < 1 or (self.n or 0) < 1):
            raise ValueError("km-pn needs m >= 1 and n >= 1")
        if self.family == "km-starlike":
            if (self.m or 0) < 1 or not self.branches:
                raise ValueError("km-starlike needs m >= 1 and a branch list")
        if self.family == "path" and (self.n or 0) < 1:
            raise ValueError("path needs n >= 1")
        if self.family == "complete" and (self.m or 0) < 1:
            raise ValueError("complete needs m >= 1")
        if self.family == "file" and not self.path:
            raise ValueError("file instances need a path")

    def sort_key(self):
        return (self.family, self.m or 0, self.n or 0, self.branches or (), self.path or "")

    def label(self) -> str:
        if self.family == "km-pn":
            return f"km-pn(m={self.m},n={self.n})"
        if self.family == "km-starlike":
            return f"km-starlike(m={self.m},branches={','.join(map(str, self.branches))})"
        if self.family == "path":
            return f"path(n={self.n})"
        if self.family == "complete":
            return f"complete(m={self.m})"
        return f"file({self.path})"

    def as_dict(self) -> dict:
        out: dict = {"family": self.family}
        if self.m is not None:
            out["m"] = self.m
        if self.n is not None:
            out["n"] = self.n
        if self.branches is not None:
            out["branches"] = list(self.branches)
        if self.path is not None:
            out["path"] = self.path
        return out


@dataclass(frozen=True)
class BuiltInstance:
    graph: Graph
    indexing: ProductIndexing | None = None
    right: Graph | None = None
    star: StarlikeSpec | None = None


def build_instance(spec: InstanceSpec) -> BuiltInstance:
    if spec.family == "km-pn":
        right = path_graph(spec.n)
        graph, idx = strong_product(complete_graph(spec.m), right)
        return BuiltInstance(graph, idx, right)
    if spec.family == "km-starlike":
        star = StarlikeSpec(spec.branches)
        right = starlike_tree(star)
        graph, idx = strong_product(complete_graph(spec.m), right)
        return BuiltInstance(graph, idx, right, star)
    if spec.family == "path":
        return BuiltInstance(path_graph(spec.n))
    if spec.family == "complete":
        return BuiltInstance(complete_graph(spec.m))
    return BuiltInstance(parse_graph_file(spec.path))


def formula_value(spec: InstanceSpec, quantity: str) -> int | None:
    """Closed-form value for the instance, or None when no formula applies."""
    if quantity == "gamma":
        if spec.family == "km-pn":
            return gamma_km_pn(spec.m, spec.n)
        if spec.family == "km-starlike":
            return gamma_starlike(StarlikeSpec(spec.branches))
        if spec.family == "path":
            return gamma_path(spec.n)
        if spec.family == "complete":
            return 1
        return None
    if quantity == "bondage":
        if spec.family == "km-pn":
            if spec.n == 1:
                return bondage_complete(spec.m) if spec.m >= 2 else None
            return bondage_km_pn(spec.m, spec.n)
        if spec.family == "km-starlike":
            try:
                return bondage_km_starlike(spec.m, StarlikeSpec(spec.branches))
            except ValueError:
                return None
        if spec.family == "path":
            return bondage_path(spec.n) if spec.n >= 2 else None
        if spec.family == "complete":
            return bondage_complete(spec.m) if spec.m >= 2 else None
        return None
    raise ValueError(f"unknown quantity {quantity!r}")


def prescribed_bondage_set(spec: InstanceSpec, built: BuiltInstance) -> tuple[Edge, ...] | None:
    """The family's constructive bondage set certifying the upper bound.

    None means no recipe applies (file graphs, mixed starlike residues, or a
    single-vertex left factor on a starlike product) and the caller should
    fall back to full search.
    """
    if spec.family == "km-pn":
        m, n = spec.m, spec.n
        if m == 1:
            return path_bondage_edges(n) if n >= 2 else None
        if n == 1:
            return covering_matching(range(m))
        idx = built.indexing
        r = n % 3
        if r == 0:
            return column_cover_edges(idx, 1)
        if r == 2:
            return rung_edges(idx, built.right, 0, 1)
        return pendant_bondage_set(idx, built.right, 0)
    if spec.family == "km-starlike":
        star = built.star
        if spec.m < 2 or star.branch_count < 2:
            return None
        residues = {b % 3 for b in star.branches}
        if len(residues) != 1:
            return None
        r = residues.pop()
        idx = built.indexing
        if r == 1:
            return column_cover_edges(idx, star.center)
        if r == 2:
            n1 = star.branches[0]
            return rung_edges(
                idx, built.right, star.branch_vertex(1, n1 - 1), star.branch_vertex(1, n1)
            )
        return pendant_bondage_set(idx, built.right, star.branch_vertex(1, star.branches[0]))
    if spec.family == "path":
        return path_bondage_edges(spec.n) if spec.n >= 2 else None
    if spec.family == "complete":
        return covering_matching(range(spec.m)) if spec.m >= 2 else None
    return None


@dataclass(frozen=True)
class ReportEntry:
    instance: InstanceSpec
    quantity: str
    formula_value: int | None
    computed_value: int | None
    method: str
    match: bool
    skipped: bool
    note: str
    elapsed_ms: float
    witness: object

    def as_dict(self) -> dict:
        return {
            "instance": self.instance.as_dict(),
            "quantity": self.quantity,
            "formula_value": "n/a" if self.formula_value is None else self.formula_value,
            "computed_value": "n/a" if self.computed_value is None else self.computed_value,
            "method": self.method,
            "match": self.match,
            "skipped": self.skipped,
            "note": self.note,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "witness": _jsonable(self.witness),
        }


def _jsonable(value):
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


@dataclass(frozen=True)
class Report:
    config: dict
    entries: tuple[ReportEntry, ...]
    total_elapsed_ms: float

    @property
    def passed(self) -> int:
        return sum(1 for e in self.entries if not e.skipped and e.match)

    @property
    def failed(self) -> int:
        return sum(1 for e in self.entries if not e.skipped and not e.match)

    @property
    def skipped(self) -> int:
        return sum(1 for e in self.entries if e.skipped)

    def all_match(self) -> bool:
        return all(e.match for e in self.entries if not e.skipped)

    def as_dict(self) -> dict:
        return {
            "tool": "strongdom",
            "version": __version__,
            "config": _jsonable(self.config),
            "entries": [e.as_dict() for e in self.entries],
            "summary": {"pass": self.passed, "fail": self.failed, "skipped": self.skipped},
            "total_elapsed_ms": round(self.total_elapsed_ms, 3),
        }


def build_report(entries: Iterable[ReportEntry], config: dict, total_elapsed_ms: float) -> Report:
    return Report(dict(config), tuple(entries), total_elapsed_ms)


def _remaining_seconds(deadline: float | None) -> float | None:
    if deadline is None:
        return None
    left = deadline - time.monotonic()
    if left <= 0:
        raise TimeBudgetExceeded("instance budget exhausted")
    return left


def verify_instance(
    spec: InstanceSpec,
    quantity: str,
    *,
    full_search: bool = False,
    budget_seconds: float | None = None,
    max_size: int | None = None,
    seed: int = 0,
) -> ReportEntry:
    """One verified quantity on one instance.

    gamma: exact solver against the formula.  bondage with a formula: the
    constructive witness must raise gamma and the exhaustive refutation one
    below the formula must hold; without a formula (or with --full-search)
    the full exact search runs instead.  Budget overruns yield a skipped
    entry, never a silent pass.
    """
    if quantity not in QUANTITIES:
        raise ValueError(f"unknown quantity {quantity!r}")
    start = time.monotonic()
    deadline = start + budget_seconds if budget_seconds else None
    formula = None
    method = "exact-search"
    try:
        built = build_instance(spec)
        formula = formula_value(spec, quantity)
        note = ""
        if quantity == "gamma":
            result = domination_number(built.graph)
            computed: int | None = result.value
            witness: object = result.witness
            match = formula is None or computed == formula
        else:
            graph = built.graph
            if not graph.edges():
                raise ValueError(f"{spec.label()} has no edges; bondage is undefined")
            if full_search or formula is None:
                res = bondage_number(
                    graph,
                    max_size=max_size,
                    seed=seed,
                    budget_seconds=_remaining_seconds(deadline),
                )
                computed, witness = res.value, res.witness
                match = formula is None or computed == formula
            else:
                method = "witness+refutation"
                prescribed = prescribed_bondage_set(spec, built)
                if prescribed is None:
                    method = "exact-search"
                    res = bondage_number(
                        graph,
                        max_size=max_size,
                        seed=seed,
                        budget_seconds=_remaining_seconds(deadline),
                    )
                    computed, witness = res.value, res.witness
                    match = computed == formula
                else:
                    upper_ok = len(prescribed) == formula and is_bondage_set(graph, prescribed)
                    counterexample = find_bondage_set_up_to(
                        graph,
                        formula - 1,
                        seed=seed,
                        budget_seconds=_remaining_seconds(deadline),
                    )
                    if counterexample is not None:
                        computed, witness = len(counterexample), counterexample
                        match = False
                        note = "refutation failed: a smaller bondage set exists"
                    elif upper_ok:
                        computed, witness = formula, prescribed
                        match = True
                    else:
                        res = bondage_number(
                            graph,
                            max_size=max_size,
                            seed=seed,
                            budget_seconds=_remaining_seconds(deadline),
                        )
                        computed, witness = res.value, res.witness
                        match = False
                        note = "constructive witness failed to raise gamma"
    except TimeBudgetExceeded as exc:
        return ReportEntry(
            instance=spec,
            quantity=quantity,
            formula_value=formula,
            computed_value=None,
            method=method,
            match=False,
            skipped=True,
            note=f"skipped: {exc}",
            elapsed_ms=(time.monotonic() - start) * 1000.0,
            witness=None,
        )
    return ReportEntry(
        instance=spec,
        quantity=quantity,
        formula_value=formula,
        computed_value=computed,
        method=method,
        match=match,
        skipped=False,
        note=note,
        elapsed_ms=(time.monotonic() - start) * 1000.0,
        witness=witness,
    )


def verify_instance_safely(
    spec: InstanceSpec,
    quantity: str,
    *,
    full_search: bool = False,
    budget_seconds: float | None = None,
    max_size: int | None = None,
    seed: int = 0,
) -> ReportEntry:
    """Like :func:`verify_instance`, but per-instance failures become failed
    entries instead of exceptions, so sweeps never abort."""
    try:
        return verify_instance(
            spec,
            quantity,
            full_search=full_search,
            budget_seconds=budget_seconds,
            max_size=max_size,
            seed=seed,
        )
    except Exception as exc:
        return ReportEntry(
            instance=spec,
            quantity=quantity,
            formula_value=None,
            computed_value=None,
            method="error",
            match=False,
            skipped=False,
            note=f"{type(exc).__name__}: {exc}",
            elapsed_ms=0.0,
            witness=None,
        )


def _sweep_task(args) -> ReportEntry:
    spec, quantity, full_search, budget_seconds, max_size, seed = args
    return verify_instance_safely(
        spec,
        quantity,
        full_search=full_search,
        budget_seconds=budget_seconds,
        max_size=max_size,
        seed=seed,
    )


def sweep(
    instances: Sequence[InstanceSpec],
    quantity: str = "both",
    *,
    jobs: int = 1,
    full_search: bool = False,
    budget_seconds: float | None = None,
    max_size: int | None = None,
    seed: int = 0,
    config: dict | None = None,
) -> Report:
    """Verify every instance in the range; one entry per (instance, quantity).

    Entry order is sorted by instance parameters, identical for any job
    count: workers only parallelise the independent per-instance work.
    """
    specs = sorted(set(instances), key=InstanceSpec.sort_key)
    if not specs:
        raise ValueError("empty sweep range")
    if quantity == "both":
        quantities: tuple[str, ...] = QUANTITIES
    elif quantity in QUANTITIES:
        quantities = (quantity,)
    else:
        raise ValueError(f"unknown quantity {quantity!r}")
    tasks = [
        (spec, q, full_search, budget_seconds, max_size, seed)
        for spec in specs
        for q in quantities
    ]
    start = time.monotonic()
    if jobs <= 1:
        entries = [_sweep_task(t) for t in tasks]
    else:
        with multiprocessing.Pool(processes=jobs) as pool:
            entries = pool.map(_sweep_task, tasks)
    total_ms = (time.monotonic() - start) * 1000.0
    cfg = {
        "quantity": quantity,
        "full_search": full_search,
        "budget_seconds": budget_seconds,
        "max_size": max_size,
        "seed": seed,
    }
    if config:
        cfg.update(config)
    return build_report(entries, cfg, total_ms)


def km_pn_instances(ms: Iterable[int], ns: Iterable[int]) -> list[InstanceSpec]:
    return [InstanceSpec("km-pn", m=m, n=n) for m in ms for n in ns]


def km_starlike_instances(
    ms: Iterable[int], branch_lists: Iterable[Sequence[int]]
) -> list[InstanceSpec]:
    return [
        InstanceSpec("km-starlike", m=m, branches=tuple(b))
        for m in ms
        for b in branch_lists
    ]


def starlike_branch_multisets(
    branch_counts: Iterable[int], lengths: Iterable[int]
) -> list[tuple[int, ...]]:
    """All branch-length multisets with the given counts, as sorted tuples."""
    pool = sorted(set(lengths))
    return [
        combo
        for count in branch_counts
        for combo in combinations_with_replacement(pool, count)
    ]


def mds_structure_entries(
    m: int, n: int, *, cap: int = DEFAULT_ENUMERATION_CAP
) -> list[ReportEntry]:
    """Audit every minimum dominating set of the product of a complete graph
    with a path against the per-column structure each one must have.

    Checks, per set D and with 1-based columns: at most one vertex per
    column; exactly one vertex over each end pendant pair; the prefix
    (suffix) of the first i (last n-j+1) columns holds at least the
    domination number of the one-shorter prefix (suffix); and the columns
    forced empty by the residue of n are empty.
    """
    spec = InstanceSpec("km-pn", m=m, n=n)
    graph, _ = strong_product(complete_graph(m), path_graph(n))
    if graph.order > cap:
        raise EnumerationCapExceeded(f"order {graph.order} exceeds the enumeration cap {cap}")
    start = time.monotonic()
    sets = enumerate_min_dominating_sets(graph, cap=cap)
    res = n % 3
    if res == 0:
        forbidden_cols = [i for i in range(1, n + 1) if i % 3 in (0, 1)]
    elif res == 2:
        forbidden_cols = [i for i in range(1, n + 1) if i % 3 == 0]
    else:
        forbidden_cols = []

    col_mult: list[dict] = []
    end_pair: list[dict] = []
    prefix_suffix: list[dict] = []
    forbidden: list[dict] = []
    for d in sets:
        counts = [0] * n
        for v in d:
            counts[v % n] += 1
        if any(c > 1 for c in counts):
            col_mult.append({"mds": list(d), "detail": f"column counts {counts}"})
        if n >= 2:
            first = counts[0] + counts[1]
            last = counts[n - 2] + counts[n - 1]
            if first != 1 or last != 1:
                end_pair.append(
                    {"mds": list(d), "detail": f"end pair counts {first} and {last}"}
                )
        acc = [0] * (n + 1)
        for i in range(n):
            acc[i + 1] = acc[i] + counts[i]
        for i in range(2, n + 1):  # columns 1..i hold at least the value for 1..i-1
            if acc[i] < _ceil3(i - 1):
                prefix_suffix.append(
                    {"mds": list(d), "detail": f"prefix 1..{i} below {_ceil3(i - 1)}"}
                )
        for j in range(1, n):  # columns j..n hold at least the value for j+1..n
            if acc[n] - acc[j - 1] < _ceil3(n - j):
                prefix_suffix.append(
                    {"mds": list(d), "detail": f"suffix {j}..{n} below {_ceil3(n - j)}"}
                )
        for i in forbidden_cols:
            if counts[i - 1]:
                forbidden.append({"mds": list(d), "detail": f"column {i} not empty"})
    elapsed = (time.monotonic() - start) * 1000.0
    audited = f"{len(sets)} minimum dominating sets audited"
    checks = [
        ("mds:column-multiplicity", col_mult, audited),
        ("mds:end-pair", end_pair, audited),
        ("mds:prefix-suffix-bound", prefix_suffix, audited),
        (
            "mds:forbidden-columns",
            forbidden,
            audited if forbidden_cols else audited + "; vacuous for this residue",
        ),
    ]
    share = elapsed / len(checks)
    return [
        ReportEntry(
            instance=spec,
            quantity=name,
            formula_value=0,
            computed_value=len(violations),
            method="mds-enumeration",
            match=not violations,
            skipped=False,
            note=note,
            elapsed_ms=share,
            witness=violations,
        )
        for name, violations, note in checks
    ]


def check_mds_structure(m: int, n: int, *, cap: int = DEFAULT_ENUMERATION_CAP) -> Report:
    """Report form of :func:`mds_structure_entries` for a single (m, n)."""
    start = time.monotonic()
    entries = mds_structure_entries(m, n, cap=cap)
    total_ms = (time.monotonic() - start) * 1000.0
    return build_report(entries, {"m": m, "n": n, "cap": cap}, total_ms)


def emit_report(report: Report, fmt: str = "json") -> str:
    """Serialise a report; field order is fixed and documented in the README."""
    if fmt == "json":
        return json.dumps(report.as_dict(), indent=2) + "\n"
    if fmt == "text-table":
        headers = ("instance", "quantity", "formula", "computed", "status", "method", "ms")
        rows = []
        for e in report.entries:
            status = "skip" if e.skipped else ("ok" if e.match else "FAIL")
            rows.append(
                (
                    e.instance.label(),
                    e.quantity,
                    "n/a" if e.formula_value is None else str(e.formula_value),
                    "n/a" if e.computed_value is None else str(e.computed_value),
                    status,
                    e.method,
                    f"{e.elapsed_ms:.1f}",
                )
            )
        widths = [
            max(len(headers[c]), max((len(r[c]) for r in rows), default=0))
            for c in range(len(headers))
        ]
        lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths))]
        lines.extend("  ".join(cell.ljust(w) for cell, w in zip(row, widths)) for row in rows)
        lines.append(
            f"pass={report.passed} fail={report.failed} skipped={report.skipped} "
            f"total_ms={report.total_elapsed_ms:.1f}"
        )
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown report format {fmt!r}")
