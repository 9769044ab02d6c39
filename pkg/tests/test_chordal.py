from itertools import permutations

import networkx as nx
import pytest
from hypothesis import given, settings

from indpoly.chordal import (
    b_sequence_of_cochordal,
    complement_component_count,
    decycling_number,
    find_branch,
    is_chordal,
    is_cochordal,
    is_leaf_order,
    leaf_order,
    maximal_cliques,
    vertex_connectivity,
)
from indpoly.engine import GuardExceeded, eval_minus_one, independence_polynomial
from indpoly.families import (
    TwoCliqueParams,
    cochordal_symmetric_witness,
    complete,
    complete_minus_edge,
    cycle,
    path,
    two_clique,
)
from indpoly.graph import complement, empty_graph, mask_of
from indpoly.poly import multiplicity_at_minus_one

from .strategies import graphs


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_maximal_cliques_examples():
    assert maximal_cliques(complete(3)) == [0b111]
    assert maximal_cliques(path(3)) == [0b011, 0b110]
    assert maximal_cliques(empty_graph(3)) == [1, 2, 4]
    assert maximal_cliques(empty_graph(0)) == []


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=10))
def test_maximal_cliques_match_networkx(g):
    ours = sorted(maximal_cliques(g))
    theirs = sorted(mask_of(c) for c in nx.find_cliques(to_nx(g))) if g.n else []
    assert ours == theirs


def test_chordal_examples():
    assert is_chordal(two_clique(TwoCliqueParams(5, 2, 1)))
    assert not is_chordal(cycle(4))
    assert is_chordal(path(7))
    assert is_cochordal(cochordal_symmetric_witness(3, 1))
    assert not is_cochordal(cycle(5))
    assert is_cochordal(complete(6))


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=10))
def test_chordal_matches_networkx(g):
    assert is_chordal(g) == nx.is_chordal(to_nx(g))


def test_leaf_order_examples():
    tri = [0b011, 0b110, 0b101]
    assert leaf_order(tri) is None
    assert not any(is_leaf_order(tri, p) for p in permutations(range(3)))
    single = leaf_order([0b111])
    assert single is not None and single.order == (0,)
    lo = leaf_order(maximal_cliques(path(3)))
    assert lo is not None and is_leaf_order(lo.facets, lo.order)


def test_leaf_order_rejects_comparable_facets():
    with pytest.raises(ValueError):
        leaf_order([0b011, 0b001])


def test_find_branch_conventions():
    assert find_branch(0b011, []) == -1
    assert find_branch(0b110, [0b011]) == 0
    assert find_branch(0b101, [0b011, 0b110]) is None


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=1, max_n=8))
def test_greedy_leaf_order_is_complete(g):
    # exhaustive search over facet orderings agrees with the greedy peel
    facets = maximal_cliques(g)
    if len(facets) > 7:
        return
    exists = any(is_leaf_order(facets, p) for p in permutations(range(len(facets))))
    lo = leaf_order(facets)
    assert (lo is not None) == exists
    if lo is not None:
        assert is_leaf_order(facets, lo.order)


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=1, max_n=12))
def test_chordal_clique_complex_is_quasi_forest(g):
    if is_chordal(g):
        assert leaf_order(maximal_cliques(g)) is not None


def test_b_sequence_examples():
    assert b_sequence_of_cochordal(complete_minus_edge(3)) == (2, 1)
    assert b_sequence_of_cochordal(complete(5)) == (5,)
    assert b_sequence_of_cochordal(cochordal_symmetric_witness(3, 1)) == (1, 2, 1)
    with pytest.raises(ValueError):
        b_sequence_of_cochordal(cycle(5))


def test_complement_components_examples():
    g = complete_minus_edge(3)
    assert complement_component_count(g) == 2
    assert eval_minus_one(g) == -1
    assert complement_component_count(complete(4)) == 4
    # P_4 is self-complementary and cochordal with connected complement
    assert complement_component_count(path(4)) == 1
    assert eval_minus_one(path(4)) == 0


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=1, max_n=9))
def test_cochordal_value_from_complement(g):
    if is_cochordal(g):
        assert eval_minus_one(g) == 1 - complement_component_count(g)
        assert all(b > 0 for b in b_sequence_of_cochordal(g))


def test_connectivity_examples():
    assert vertex_connectivity(path(3)) == 1
    assert vertex_connectivity(complete_minus_edge(4)) == 2
    assert vertex_connectivity(complete(5)) == 4
    assert vertex_connectivity(empty_graph(2)) == 0
    with pytest.raises(GuardExceeded):
        vertex_connectivity(path(17))


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=1, max_n=8))
def test_connectivity_matches_networkx(g):
    assert vertex_connectivity(g) == nx.node_connectivity(to_nx(g))


def test_multiplicity_equals_complement_connectivity():
    # complements P_3 (r=1) and K_4 - e (r=2)
    for comp, r in ((path(3), 1), (complete_minus_edge(4), 2)):
        assert vertex_connectivity(comp) == r
        assert multiplicity_at_minus_one(independence_polynomial(complement(comp))) == r


def test_decycling_examples():
    assert decycling_number(path(6)) == 0
    assert decycling_number(cycle(3)) == 1
    assert decycling_number(complete(4)) == 2
    assert decycling_number(empty_graph(0)) == 0
    with pytest.raises(GuardExceeded):
        decycling_number(path(17))
