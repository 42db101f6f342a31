"""Exact minimum domination, exhaustive enumeration of minimum dominating sets,
and maximum 2-packings.

``domination_number`` is exact at any order; the enumeration helpers refuse
graphs above an explicit cap because they are inherently exponential and
refusing loudly beats hanging.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .graphs import Graph, iter_bits

DEFAULT_ENUMERATION_CAP = 24


class EnumerationCapExceeded(ValueError):
    """Raised instead of silently attempting an exponential enumeration."""


@dataclass(frozen=True)
class GammaResult:
    value: int
    witness: tuple[int, ...]


@dataclass(frozen=True)
class PackingResult:
    value: int
    witness: tuple[int, ...]


def is_dominating(graph: Graph, vertices: Iterable[int]) -> bool:
    """True iff every vertex of the graph is in the set or adjacent to a member."""
    closed = graph.closed_rows()
    covered = 0
    for v in set(vertices):
        if not 0 <= v < graph.order:
            raise ValueError(f"vertex {v} out of range")
        covered |= closed[v]
    return covered == graph.full_mask


def _greedy_cover_size(closed: Sequence[int], full: int) -> int:
    covered, count = 0, 0
    while covered != full:
        best_gain, best = -1, 0
        for row in closed:
            gain = (row & ~covered).bit_count()
            if gain > best_gain:
                best_gain, best = gain, row
        covered |= best
        count += 1
    return count


def _pick_uncovered(closed: Sequence[int], uncovered: int) -> int:
    """Uncovered vertex with the fewest closed-neighbourhood candidates."""
    best, best_width = -1, 1 << 62
    while uncovered:
        low = uncovered & -uncovered
        w = low.bit_length() - 1
        uncovered ^= low
        width = closed[w].bit_count()
        if width < best_width:
            best, best_width = w, width
    return best


def _exact_gamma(closed: Sequence[int], full: int) -> int:
    """Branch and bound on the least-coverable uncovered vertex.

    Any dominating set must contain a closed neighbour of every uncovered
    vertex, so branching over N[v] is complete; the greedy cover seeds the
    incumbent.
    """
    best = _greedy_cover_size(closed, full)

    def rec(covered: int, count: int) -> None:
        nonlocal best
        if covered == full:
            if count < best:
                best = count
            return
        if count + 1 >= best:
            return
        v = _pick_uncovered(closed, full & ~covered)
        for u in iter_bits(closed[v]):
            rec(covered | closed[u], count + 1)

    rec(0, 0)
    return best


def _cover_within(closed: Sequence[int], full: int, limit: int) -> bool:
    """Does a dominating set of size <= limit exist?"""
    if limit >= len(closed):
        return True

    def rec(covered: int, remaining: int) -> bool:
        if covered == full:
            return True
        if remaining == 0:
            return False
        v = _pick_uncovered(closed, full & ~covered)
        for u in iter_bits(closed[v]):
            if rec(covered | closed[u], remaining - 1):
                return True
        return False

    return rec(0, max(limit, 0))


def _random_min_cover(
    closed: Sequence[int], full: int, size: int, rng: random.Random
) -> int | None:
    """A dominating-set mask of exactly ``size``, found with randomised branching."""

    def rec(covered: int, chosen: int, remaining: int) -> int | None:
        if covered == full:
            return chosen
        if remaining == 0:
            return None
        v = _pick_uncovered(closed, full & ~covered)
        cands = list(iter_bits(closed[v]))
        rng.shuffle(cands)
        for u in cands:
            got = rec(covered | closed[u], chosen | (1 << u), remaining - 1)
            if got is not None:
                return got
        return None

    return rec(0, 0, size)


def gamma_value(graph: Graph) -> int:
    """Exact domination number without witness construction (the fast path)."""
    if graph.order == 0:
        raise ValueError("domination number needs at least one vertex")
    return _exact_gamma(graph.closed_rows(), graph.full_mask)


def has_dominating_set_of_size(graph: Graph, size: int) -> bool:
    if graph.order == 0:
        raise ValueError("domination needs at least one vertex")
    if size < 0:
        return False
    return _cover_within(graph.closed_rows(), graph.full_mask, min(size, graph.order))


def domination_number(graph: Graph) -> GammaResult:
    """Exact domination number with the lexicographically least minimum witness.

    The value comes from branch and bound; the witness is the first
    dominating set in the lexicographic scan over all subsets of that size.
    """
    value = gamma_value(graph)
    closed = graph.closed_rows()
    full = graph.full_mask
    for combo in combinations(range(graph.order), value):
        covered = 0
        for v in combo:
            covered |= closed[v]
        if covered == full:
            return GammaResult(value, combo)
    raise AssertionError("no witness found at the exact domination number")


def enumerate_min_dominating_sets(
    graph: Graph, cap: int = DEFAULT_ENUMERATION_CAP
) -> list[tuple[int, ...]]:
    """Every minimum dominating set, in lexicographic order.

    Complete by construction: the scan visits all subsets of the exact size.
    """
    if graph.order == 0:
        raise ValueError("domination needs at least one vertex")
    if graph.order > cap:
        raise EnumerationCapExceeded(
            f"order {graph.order} exceeds the enumeration cap {cap}"
        )
    value = gamma_value(graph)
    closed = graph.closed_rows()
    full = graph.full_mask
    out: list[tuple[int, ...]] = []
    for combo in combinations(range(graph.order), value):
        covered = 0
        for v in combo:
            covered |= closed[v]
        if covered == full:
            out.append(combo)
    return out


def _square_rows(graph: Graph) -> list[int]:
    """Conflict masks: vertices at distance 1 or 2."""
    rows = graph.rows
    sq = []
    for v in range(graph.order):
        reach = rows[v]
        for u in iter_bits(rows[v]):
            reach |= rows[u]
        sq.append(reach & ~(1 << v))
    return sq


def two_packing_number(graph: Graph, cap: int = DEFAULT_ENUMERATION_CAP) -> PackingResult:
    """Maximum vertex set with pairwise distance greater than 2.

    Computed as a maximum independent set of the distance-2 conflict graph,
    by a lexicographic include-first search; the first maximum found is the
    lexicographically least one.
    """
    if graph.order == 0:
        raise ValueError("2-packing needs at least one vertex")
    if graph.order > cap:
        raise EnumerationCapExceeded(
            f"order {graph.order} exceeds the enumeration cap {cap}"
        )
    sq = _square_rows(graph)
    best = 0
    best_mask = 0

    def rec(cand: int, chosen: int, count: int) -> None:
        nonlocal best, best_mask
        if count > best:
            best, best_mask = count, chosen
        if count + cand.bit_count() <= best:
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            rec(cand & ~sq[v], chosen | low, count + 1)
            if count + cand.bit_count() <= best:
                return

    rec(graph.full_mask, 0, 0)
    return PackingResult(best, tuple(iter_bits(best_mask)))
