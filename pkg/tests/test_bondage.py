import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strongdom.bondage import (
    _DominatingPool,
    bondage_number,
    column_cover_edges,
    covering_matching,
    exhaustive_no_bondage_up_to,
    find_bondage_set_up_to,
    is_bondage_set,
    path_bondage_edges,
    pendant_bondage_set,
    rung_edges,
)
from strongdom.domination import gamma_value
from strongdom.formulas import bondage_complete, bondage_path
from strongdom.graphs import (
    Graph,
    column_block,
    complete_graph,
    induced_subgraph,
    path_graph,
    remove_edges,
    strong_product,
)

from brute import brute_bondage, brute_first_bondage_witness


@st.composite
def small_graphs_with_edges(draw):
    order = draw(st.integers(2, 5))
    possible = [(u, v) for u in range(order) for v in range(u + 1, order)]
    edges = draw(st.lists(st.sampled_from(possible), unique=True, min_size=1, max_size=6))
    return Graph.from_edges(order, edges)


def test_covering_matching_shapes():
    assert covering_matching(range(4)) == ((0, 1), (2, 3))
    assert covering_matching(range(3)) == ((0, 1), (1, 2))
    assert covering_matching(range(2)) == ((0, 1),)
    for m in range(2, 9):
        pairs = covering_matching(range(m))
        assert len(pairs) == (m + 1) // 2
        assert {v for e in pairs for v in e} == set(range(m))
    with pytest.raises(ValueError):
        covering_matching([0])


def test_column_cover_edges():
    _, idx = strong_product(complete_graph(4), path_graph(3))
    cover = column_cover_edges(idx, 1)
    assert len(cover) == 2
    assert all(u % 3 == 1 and v % 3 == 1 for u, v in cover)

    _, idx3 = strong_product(complete_graph(3), path_graph(3))
    assert len(column_cover_edges(idx3, 1)) == 2
    _, idx2 = strong_product(complete_graph(2), path_graph(3))
    assert len(column_cover_edges(idx2, 1)) == 1

    _, idx1 = strong_product(complete_graph(1), path_graph(3))
    with pytest.raises(ValueError):
        column_cover_edges(idx1, 0)


def test_rung_edges():
    right = path_graph(5)
    _, idx = strong_product(complete_graph(1), right)
    assert rung_edges(idx, right, 0, 1) == ((0, 1),)

    _, idx3 = strong_product(complete_graph(3), right)
    rungs = rung_edges(idx3, right, 0, 1)
    assert len(rungs) == 3
    touched = [v for e in rungs for v in e]
    assert len(set(touched)) == 6  # pairwise disjoint

    with pytest.raises(ValueError):
        rung_edges(idx3, right, 0, 2)


def test_rungs_break_two_column_block():
    prod, idx = strong_product(complete_graph(3), path_graph(5))
    right = path_graph(5)
    rungs = rung_edges(idx, right, 0, 1)
    block, mapping = induced_subgraph(prod, column_block(idx, 1, 2))
    back = {old: new for new, old in enumerate(mapping)}
    local = [(back[u], back[v]) for u, v in rungs]
    assert gamma_value(block) == 1
    assert gamma_value(remove_edges(block, local)) > 1


def test_pendant_bondage_set_sizes():
    right = path_graph(4)
    _, idx2 = strong_product(complete_graph(2), right)
    assert len(pendant_bondage_set(idx2, right, 0)) == 3
    _, idx3 = strong_product(complete_graph(3), right)
    assert len(pendant_bondage_set(idx3, right, 0)) == 5
    with pytest.raises(ValueError):
        pendant_bondage_set(idx3, right, 1)  # interior vertex
    with pytest.raises(ValueError):
        pendant_bondage_set(idx3, right, 0, t0=3)
    _, idx1 = strong_product(complete_graph(1), right)
    with pytest.raises(ValueError):
        pendant_bondage_set(idx1, right, 0)  # single-vertex left factor


def test_pendant_bondage_set_works():
    right = path_graph(4)
    prod, idx = strong_product(complete_graph(2), right)
    assert is_bondage_set(prod, pendant_bondage_set(idx, right, 0))


def test_is_bondage_set_basics():
    g = path_graph(4)
    assert not is_bondage_set(g, [])
    assert is_bondage_set(complete_graph(2), [(0, 1)])
    with pytest.raises(ValueError):
        is_bondage_set(g, [(0, 2)])

    prod, idx = strong_product(complete_graph(2), path_graph(3))
    assert is_bondage_set(prod, column_cover_edges(idx, 1))


def test_bondage_examples():
    assert bondage_number(path_graph(4)).value == 2
    assert bondage_number(complete_graph(4)).value == 2
    prod, _ = strong_product(complete_graph(2), path_graph(3))
    assert bondage_number(prod).value == 1


def test_bondage_witness_soundness():
    for g in (
        path_graph(5),
        complete_graph(5),
        strong_product(complete_graph(2), path_graph(4))[0],
    ):
        result = bondage_number(g)
        assert is_bondage_set(g, result.witness)
        assert exhaustive_no_bondage_up_to(g, result.value - 1)


def test_bondage_witness_is_lex_least():
    for g in (path_graph(4), path_graph(7), complete_graph(4), complete_graph(5)):
        assert bondage_number(g).witness == brute_first_bondage_witness(g)


def test_bondage_of_edgeless_graph_rejected():
    with pytest.raises(ValueError):
        bondage_number(path_graph(1))


def test_bondage_max_size_exhausted():
    with pytest.raises(ValueError):
        bondage_number(path_graph(4), max_size=1)


def test_exhaustive_no_bondage_examples():
    prod25, _ = strong_product(complete_graph(2), path_graph(5))
    assert exhaustive_no_bondage_up_to(prod25, 0)
    assert exhaustive_no_bondage_up_to(prod25, 1)
    prod24, _ = strong_product(complete_graph(2), path_graph(4))
    assert exhaustive_no_bondage_up_to(prod24, 2)
    assert not exhaustive_no_bondage_up_to(prod24, 3)


def test_doubled_complete_graphs():
    for m in (1, 2, 3):
        assert bondage_number(complete_graph(2 * m)).value == m


def test_solver_matches_imported_values():
    for m in range(2, 7):
        assert bondage_number(complete_graph(m)).value == bondage_complete(m)
    for n in range(2, 11):
        assert bondage_number(path_graph(n)).value == bondage_path(n)


def test_path_bondage_edges():
    for n in range(2, 11):
        edges = path_bondage_edges(n)
        assert len(edges) == bondage_path(n)
        assert is_bondage_set(path_graph(n), edges)
    with pytest.raises(ValueError):
        path_bondage_edges(1)


@given(small_graphs_with_edges())
@settings(max_examples=25, deadline=None)
def test_bondage_matches_brute_force(g):
    expected = brute_bondage(g)
    assert bondage_number(g).value == expected
    assert find_bondage_set_up_to(g, expected - 1) is None


def test_pool_filter_rejections_are_sound():
    """Any candidate the pool rejects must leave gamma unchanged."""
    prod, _ = strong_product(complete_graph(3), path_graph(3))
    edges = prod.edges()
    gamma = gamma_value(prod)
    pool = _DominatingPool.build(prod, gamma, edges)
    rng = random.Random(3)
    rejected = []
    for k in (1, 2):
        for combo in combinations(range(len(edges)), k):
            zmask = 0
            for e in combo:
                zmask |= 1 << e
            if pool.some_member_survives(zmask, combo):
                rejected.append(combo)
    sample = rng.sample(rejected, max(1, len(rejected) // 100))
    for combo in sample:
        damaged = remove_edges(prod, [edges[e] for e in combo])
        assert gamma_value(damaged) == gamma


def test_restart_pool_used_above_cap():
    prod, _ = strong_product(complete_graph(3), path_graph(3))
    gamma = gamma_value(prod)
    pool = _DominatingPool.build(prod, gamma, prod.edges(), cap=4, seed=1)
    assert pool.masks  # restarted search found at least one minimum set
    for mask in pool.masks:
        assert mask.bit_count() == gamma
