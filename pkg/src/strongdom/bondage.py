"""Exact bondage numbers by iterative-deepening edge-subset search, plus the
constructive edge sets that certify upper bounds on products.

The search keeps a pool of minimum dominating sets of the intact graph.  Any
candidate edge set that leaves some pool member dominating cannot have raised
the domination number, so the vast majority of candidates are rejected by a
couple of integer operations; survivors are confirmed with the exact solver,
which keeps the search exhaustive and exact regardless of pool quality.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .domination import (
    DEFAULT_ENUMERATION_CAP,
    _cover_within,
    _exact_gamma,
    _random_min_cover,
    enumerate_min_dominating_sets,
)
from .graphs import Edge, Graph, ProductIndexing, mask_of, normalize_edge

POOL_LIMIT = 64
_POOL_RESTART_FACTOR = 8


class TimeBudgetExceeded(RuntimeError):
    """A search ran past its wall-clock deadline."""


@dataclass(frozen=True)
class BondageResult:
    value: int
    witness: tuple[Edge, ...]


def _normalize_edge_set(graph: Graph, edges: Iterable[tuple[int, int]]) -> tuple[Edge, ...]:
    out: list[Edge] = []
    seen: set[Edge] = set()
    for u, v in edges:
        e = normalize_edge(u, v)
        if not graph.has_edge(*e):
            raise ValueError(f"{e[0]}-{e[1]} is not an edge of the graph")
        if e not in seen:
            seen.add(e)
            out.append(e)
    return tuple(sorted(out))


def is_bondage_set(graph: Graph, edges: Iterable[tuple[int, int]]) -> bool:
    """True iff removing ``edges`` strictly raises the domination number."""
    removed = _normalize_edge_set(graph, edges)
    closed = graph.closed_rows()
    gamma = _exact_gamma(closed, graph.full_mask)
    for u, v in removed:
        closed[u] &= ~(1 << v)
        closed[v] &= ~(1 << u)
    return not _cover_within(closed, graph.full_mask, gamma)


class _DominatingPool:
    """Minimum dominating sets of the intact graph, indexed for fast damage tests.

    ``touch[i]`` is the mask (over edge indices) of edges with exactly one
    endpoint in member ``i``; only those removals can break its domination.
    A member with ``counts[w] > d`` spare dominators of ``w`` survives any
    candidate that removes at most ``d`` of them.
    """

    __slots__ = ("masks", "touch", "targets", "counts", "front")

    def __init__(self, graph: Graph, edges: Sequence[Edge], members: Sequence[int]):
        self.masks = list(members)
        self.touch: list[int] = []
        self.targets: list[dict[int, int]] = []
        self.counts: list[list[int]] = []
        self.front = 0
        for dmask in self.masks:
            touch = 0
            targets: dict[int, int] = {}
            for e_index, (u, v) in enumerate(edges):
                u_in = dmask >> u & 1
                v_in = dmask >> v & 1
                if u_in != v_in:
                    touch |= 1 << e_index
                    targets[e_index] = v if u_in else u
            counts = [0] * graph.order
            for w in range(graph.order):
                if not dmask >> w & 1:
                    counts[w] = (graph.rows[w] & dmask).bit_count()
            self.touch.append(touch)
            self.targets.append(targets)
            self.counts.append(counts)

    @classmethod
    def build(
        cls,
        graph: Graph,
        gamma: int,
        edges: Sequence[Edge],
        *,
        cap: int = DEFAULT_ENUMERATION_CAP,
        seed: int = 0,
        limit: int = POOL_LIMIT,
    ) -> "_DominatingPool":
        if graph.order <= cap:
            members = [mask_of(s) for s in enumerate_min_dominating_sets(graph, cap=cap)]
        else:
            members = _restart_pool(graph, gamma, limit=limit, seed=seed)
        return cls(graph, edges, members)

    def some_member_survives(self, zmask: int, zedges: tuple[int, ...]) -> bool:
        touch = self.touch
        if zmask & touch[self.front] == 0:
            return True
        for i in range(len(touch)):
            if zmask & touch[i] == 0:
                self.front = i
                return True
        # every member is touched; run the exact spare-dominator test
        for i in range(len(touch)):
            targets = self.targets[i]
            counts = self.counts[i]
            dec: dict[int, int] = {}
            ok = True
            for e in zedges:
                w = targets.get(e)
                if w is None:
                    continue
                d = dec.get(w, 0) + 1
                if d >= counts[w]:
                    ok = False
                    break
                dec[w] = d
            if ok:
                return True
        return False


def _restart_pool(
    graph: Graph, gamma: int, *, limit: int, seed: int, restarts: int | None = None
) -> list[int]:
    rng = random.Random(seed)
    closed = graph.closed_rows()
    full = graph.full_mask
    found: list[int] = []
    seen: set[int] = set()
    if restarts is None:
        restarts = _POOL_RESTART_FACTOR * limit
    for _ in range(restarts):
        mask = _random_min_cover(closed, full, gamma, rng)
        if mask is not None and mask not in seen:
            seen.add(mask)
            found.append(mask)
            if len(found) >= limit:
                break
    return found


def _find_bondage_set(
    graph: Graph,
    max_size: int,
    *,
    gamma: int | None = None,
    pool: _DominatingPool | None = None,
    cap: int = DEFAULT_ENUMERATION_CAP,
    seed: int = 0,
    deadline: float | None = None,
) -> tuple[Edge, ...] | None:
    """Lexicographically first edge set of size <= max_size that raises gamma.

    Exhaustive over all edge subsets of each size, smallest size first; the
    pool only filters, the exact solver has the final word on survivors.
    """
    edges = graph.edges()
    if max_size <= 0 or not edges:
        return None
    closed = graph.closed_rows()
    full = graph.full_mask
    if gamma is None:
        gamma = _exact_gamma(closed, full)
    if pool is None:
        pool = _DominatingPool.build(graph, gamma, edges, cap=cap, seed=seed)
    n_edges = len(edges)
    bit = [1 << e for e in range(n_edges)]
    touch = pool.touch
    survives = pool.some_member_survives
    monotonic = time.monotonic
    checked = 0
    for k in range(1, min(max_size, n_edges) + 1):
        front_touch = touch[pool.front]
        for combo in combinations(range(n_edges), k):
            checked += 1
            if deadline is not None and not checked & 2047 and monotonic() > deadline:
                raise TimeBudgetExceeded(
                    f"deadline hit after {checked} candidate sets at size {k}"
                )
            zmask = 0
            for e in combo:
                zmask |= bit[e]
            if zmask & front_touch == 0:
                continue
            if survives(zmask, combo):
                front_touch = touch[pool.front]
                continue
            # no cached set survives; ask the exact solver
            damaged = closed.copy()
            for e in combo:
                u, v = edges[e]
                damaged[u] &= ~(1 << v)
                damaged[v] &= ~(1 << u)
            if _cover_within(damaged, full, gamma):
                continue
            return tuple(edges[e] for e in combo)
    return None


def find_bondage_set_up_to(
    graph: Graph,
    max_size: int,
    *,
    cap: int = DEFAULT_ENUMERATION_CAP,
    seed: int = 0,
    budget_seconds: float | None = None,
) -> tuple[Edge, ...] | None:
    """Smallest (then lexicographically least) bondage set of size <= max_size,
    or None once every candidate subset has been refuted."""
    deadline = time.monotonic() + budget_seconds if budget_seconds else None
    return _find_bondage_set(graph, max_size, cap=cap, seed=seed, deadline=deadline)


def exhaustive_no_bondage_up_to(
    graph: Graph,
    k: int,
    *,
    cap: int = DEFAULT_ENUMERATION_CAP,
    seed: int = 0,
    budget_seconds: float | None = None,
) -> bool:
    """True iff no edge subset of size <= k raises the domination number."""
    if k < 0:
        raise ValueError("subset size bound must be non-negative")
    return find_bondage_set_up_to(
        graph, k, cap=cap, seed=seed, budget_seconds=budget_seconds
    ) is None


def bondage_number(
    graph: Graph,
    *,
    max_size: int | None = None,
    cap: int = DEFAULT_ENUMERATION_CAP,
    seed: int = 0,
    budget_seconds: float | None = None,
) -> BondageResult:
    """Exact bondage number with a minimum witness.

    Iterative deepening over subset sizes; within a size the candidates are
    scanned in lexicographic order over the sorted edge list, so the witness
    is the lexicographically least minimum bondage set.
    """
    edges = graph.edges()
    if not edges:
        raise ValueError("an edgeless graph has no bondage set")
    limit = len(edges) if max_size is None else min(max_size, len(edges))
    witness = find_bondage_set_up_to(
        graph, limit, cap=cap, seed=seed, budget_seconds=budget_seconds
    )
    if witness is None:
        raise ValueError(f"no bondage set of size <= {limit} exists")
    return BondageResult(len(witness), witness)


def covering_matching(vertices: Sequence[int]) -> tuple[Edge, ...]:
    """Pairs of consecutive entries touching every vertex of the sequence.

    A perfect matching for an even count; for an odd count the final pair
    overlaps the last matched vertex, giving ceil(len/2) pairs in total.
    """
    verts = list(vertices)
    if len(verts) < 2:
        raise ValueError("need at least two vertices to cover")
    pairs = [normalize_edge(verts[t], verts[t + 1]) for t in range(0, len(verts) - 1, 2)]
    if len(verts) % 2:
        pairs.append(normalize_edge(verts[-2], verts[-1]))
    return tuple(pairs)


def column_cover_edges(idx: ProductIndexing, v: int) -> tuple[Edge, ...]:
    """Edges inside the column over right-factor vertex ``v`` that touch every
    vertex of the column: ceil(m/2) of them, for a left factor of order m."""
    if idx.left_order < 2:
        raise ValueError("a column cover needs a left factor with at least two vertices")
    return covering_matching(idx.column(v))


def rung_edges(idx: ProductIndexing, right: Graph, x: int, y: int) -> tuple[Edge, ...]:
    """The ``left_order`` parallel edges joining the columns over adjacent
    right-factor vertices ``x`` and ``y``."""
    if right.order != idx.right_order:
        raise ValueError("right factor does not match the indexing")
    if not right.has_edge(x, y):
        raise ValueError(f"{x}-{y} is not an edge of the right factor")
    n = idx.right_order
    return tuple(
        normalize_edge(g * n + x, g * n + y) for g in range(idx.left_order)
    )


def pendant_bondage_set(
    idx: ProductIndexing, right: Graph, s0: int, t0: int | None = None
) -> tuple[Edge, ...]:
    """Column cover over a degree-1 right vertex plus the rungs to its
    neighbour: ceil(3m/2) edges that form a bondage set of the product."""
    if right.order != idx.right_order:
        raise ValueError("right factor does not match the indexing")
    if right.degree(s0) != 1:
        raise ValueError(f"vertex {s0} has degree {right.degree(s0)}, expected 1")
    neighbor = right.neighbors(s0)[0]
    if t0 is None:
        t0 = neighbor
    elif t0 != neighbor:
        raise ValueError(f"{t0} is not the neighbour of {s0}")
    return tuple(sorted(column_cover_edges(idx, s0) + rung_edges(idx, right, s0, t0)))


def path_bondage_edges(n: int) -> tuple[Edge, ...]:
    """A minimum bondage set of the n-vertex path: the pendant edge, plus the
    next edge along when n % 3 == 1."""
    if n < 2:
        raise ValueError("a path needs at least two vertices to have a bondage set")
    if n % 3 == 1:
        return ((0, 1), (1, 2))
    return ((0, 1),)
