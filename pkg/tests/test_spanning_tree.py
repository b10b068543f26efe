import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minimax_appd import DenseGraph, TreeEdge, prim_spanning_tree
from minimax_appd._deadline import DeadlineExceeded

from graphs import integer_graph, point_graph
from oracles import optimal_spanning_trees, prufer_trees


def edge_set(tree):
    return {(min(e.u, e.v), max(e.u, e.v)) for e in tree.edges}


def is_spanning_tree(tree):
    n = tree.n
    if len(tree.edges) != n - 1:
        return False
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for k in tree.adjacency[x]:
            e = tree.edges[k]
            y = e.v if e.u == x else e.u
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def test_prufer_oracle_counts_cayley():
    for n in range(1, 7):
        assert sum(1 for _ in prufer_trees(n)) == max(1, n ** (n - 2))


def test_single_vertex():
    tree = prim_spanning_tree(DenseGraph([[0.0]]))
    assert tree.edges == ()
    assert tree.total_weight == 0.0


def test_triangle():
    g = DenseGraph([[0, 1, 3], [1, 0, 2], [3, 2, 0]])
    tree = prim_spanning_tree(g)
    # exhaustive: the three spanning trees weigh 3, 4 and 5
    best, winners = optimal_spanning_trees(g.weights.tolist())
    assert best == 3.0 and winners == [((0, 1), (1, 2))]
    assert tree.edges == (TreeEdge(0, 1, 1.0, 0), TreeEdge(1, 2, 2.0, 1))


def test_eight_points_seed_7_is_minimum():
    g = point_graph(8, 7)
    tree = prim_spanning_tree(g)
    best, winners = optimal_spanning_trees(g.weights.tolist())
    assert len(winners) == 1
    assert edge_set(tree) == set(winners[0])
    assert tree.total_weight == best


@pytest.mark.parametrize("seed", range(12))
@pytest.mark.parametrize("sense", ["minimum", "maximum"])
def test_distinct_weights_match_unique_optimum(seed, sense):
    g = point_graph(2 + seed % 5, seed)
    tree = prim_spanning_tree(g, sense)
    best, winners = optimal_spanning_trees(g.weights.tolist(), maximum=sense == "maximum")
    assert len(winners) == 1
    assert edge_set(tree) == set(winners[0])


@pytest.mark.parametrize("seed", range(10))
def test_ties_still_optimal(seed):
    g = integer_graph(6, seed, 0, 2)
    for sense in ("minimum", "maximum"):
        tree = prim_spanning_tree(g, sense)
        best, winners = optimal_spanning_trees(g.weights.tolist(), maximum=sense == "maximum")
        assert is_spanning_tree(tree)
        assert tree.total_weight == best
        assert tuple(sorted(edge_set(tree))) in winners


def test_tie_rule_prefers_smallest_vertex():
    # all weights equal: every new vertex joins in id order from vertex 0
    tree = prim_spanning_tree(DenseGraph(1 - np.eye(5)))
    assert [(e.u, e.v) for e in tree.edges] == [(0, 1), (0, 2), (0, 3), (0, 4)]


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 40), st.integers(0, 2**32))
def test_invariants(n, seed):
    g = integer_graph(n, seed, -5, 5) if seed % 2 else point_graph(n, seed)
    for sense in ("minimum", "maximum"):
        tree = prim_spanning_tree(g, sense)
        assert is_spanning_tree(tree)
        assert [e.seq for e in tree.edges] == list(range(n - 1))
        for e in tree.edges:
            assert e.u != e.v
            assert e.weight == g.weights[e.u, e.v]


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 40), st.integers(0, 2**32))
def test_max_is_negated_min_of_negated_graph(n, seed):
    g = integer_graph(n, seed, -9, 9) if seed % 2 else point_graph(n, seed)
    hi = prim_spanning_tree(g, "maximum")
    lo = prim_spanning_tree(g.negated(), "minimum")
    assert hi.total_weight == -lo.total_weight
    assert [(e.u, e.v) for e in hi.edges] == [(e.u, e.v) for e in lo.edges]
    assert [e.weight for e in hi.edges] == [-e.weight for e in lo.edges]


def test_deterministic():
    g = point_graph(50, 3)
    a = prim_spanning_tree(g)
    b = prim_spanning_tree(g)
    assert a.edges == b.edges


def test_deadline():
    with pytest.raises(DeadlineExceeded):
        prim_spanning_tree(point_graph(10, 0), deadline=0.0)


def test_total_weight_is_fsum():
    tree = prim_spanning_tree(point_graph(30, 9))
    assert tree.total_weight == math.fsum(e.weight for e in tree.edges)


def test_array_input_and_bad_sense():
    tree = prim_spanning_tree([[0.0, 4.0], [4.0, 0.0]])
    assert tree.edges == (TreeEdge(0, 1, 4.0, 0),)
    with pytest.raises(ValueError):
        prim_spanning_tree([[0.0]], "median")
