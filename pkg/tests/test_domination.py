import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strongdom.domination import (
    EnumerationCapExceeded,
    domination_number,
    enumerate_min_dominating_sets,
    gamma_value,
    has_dominating_set_of_size,
    is_dominating,
    two_packing_number,
)
from strongdom.graphs import (
    Graph,
    StarlikeSpec,
    complete_graph,
    path_graph,
    star_graph,
    starlike_tree,
    strong_product,
)

from brute import (
    brute_gamma,
    brute_min_dominating_sets,
    brute_two_packing,
    random_graph,
    random_tree,
)
import random


@st.composite
def graphs(draw, min_order=1, max_order=8):
    order = draw(st.integers(min_order, max_order))
    possible = [(u, v) for u in range(order) for v in range(u + 1, order)]
    edges = draw(st.lists(st.sampled_from(possible), unique=True)) if possible else []
    return Graph.from_edges(order, edges)


def test_is_dominating_basics():
    g = path_graph(4)
    assert is_dominating(g, range(4))
    assert not is_dominating(g, [])
    assert is_dominating(g, [1, 3])
    assert not is_dominating(g, [0])
    with pytest.raises(ValueError):
        is_dominating(g, [7])


def test_middle_column_dominates_product():
    prod, idx = strong_product(complete_graph(3), path_graph(3))
    for g in range(3):
        assert is_dominating(prod, [idx.flat(g, 1)])


def test_gamma_path_values():
    for n in range(1, 16):
        assert gamma_value(path_graph(n)) == (n + 2) // 3


def test_gamma_examples():
    assert domination_number(path_graph(4)).value == 2
    assert domination_number(complete_graph(5)) .value == 1
    prod, _ = strong_product(complete_graph(3), path_graph(7))
    assert domination_number(prod).value == 3


def test_witness_dominates_and_is_lex_least():
    for g in (path_graph(7), star_graph(4), strong_product(complete_graph(2), path_graph(4))[0]):
        result = domination_number(g)
        assert is_dominating(g, result.witness)
        assert result.witness == min(brute_min_dominating_sets(g))


def test_empty_graph_rejected():
    with pytest.raises(ValueError):
        gamma_value(Graph(0, ()))


def test_enumerate_examples():
    assert enumerate_min_dominating_sets(path_graph(3)) == [(1,)]
    assert enumerate_min_dominating_sets(complete_graph(3)) == [(0,), (1,), (2,)]
    prod, idx = strong_product(complete_graph(2), path_graph(3))
    middle = sorted((idx.flat(g, 1),) for g in range(2))
    assert enumerate_min_dominating_sets(prod) == middle


def test_enumerate_cap_refusal():
    prod, _ = strong_product(complete_graph(5), path_graph(6))
    with pytest.raises(EnumerationCapExceeded):
        enumerate_min_dominating_sets(prod)
    # overridable per call
    assert enumerate_min_dominating_sets(path_graph(5), cap=30)


@given(graphs())
@settings(max_examples=80)
def test_solver_matches_brute_force(g):
    value = gamma_value(g)
    assert value == brute_gamma(g)
    assert has_dominating_set_of_size(g, value)
    assert not has_dominating_set_of_size(g, value - 1)


@given(graphs(max_order=7))
@settings(max_examples=40)
def test_enumeration_matches_brute_force(g):
    got = enumerate_min_dominating_sets(g)
    assert got == brute_min_dominating_sets(g)
    assert domination_number(g).witness in got


def test_two_packing_examples():
    assert two_packing_number(star_graph(3)).value == 1
    assert two_packing_number(path_graph(4)).value == 2
    # independent oracle for the frozen value on the 7-path
    assert brute_two_packing(path_graph(7)) == 3
    assert two_packing_number(path_graph(7)).value == 3


def test_two_packing_witness_is_spread_out():
    from brute import distance_matrix

    g = starlike_tree(StarlikeSpec((3, 2, 2)))
    result = two_packing_number(g)
    dist = distance_matrix(g)
    pairs = [(a, b) for a in result.witness for b in result.witness if a < b]
    assert all(dist[a][b] > 2 for a, b in pairs)


def test_two_packing_cap_refusal():
    prod, _ = strong_product(complete_graph(5), path_graph(6))
    with pytest.raises(EnumerationCapExceeded):
        two_packing_number(prod)


@given(graphs(max_order=7))
@settings(max_examples=40)
def test_two_packing_matches_brute_force(g):
    assert two_packing_number(g).value == brute_two_packing(g)


def test_tree_packing_equals_gamma_sample():
    rng = random.Random(7)
    for _ in range(60):
        tree = random_tree(rng, rng.randint(1, 9))
        assert two_packing_number(tree).value == gamma_value(tree)


def test_product_law_sample():
    rng = random.Random(11)
    for _ in range(15):
        g = random_graph(rng, rng.randint(1, 5), rng.random())
        t = random_tree(rng, rng.randint(1, 4))
        prod, _ = strong_product(g, t)
        assert gamma_value(prod) == gamma_value(g) * gamma_value(t)
