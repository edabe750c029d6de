import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from girthroot.core.errors import OracleLimitError, UsageError
from girthroot.models.graph import Graph
from girthroot.models.trees import DepthPartition
from girthroot.services import generators, graphs
from girthroot.services.tree_roots import (
    build_restriction_gadget,
    depth_partition_of,
    is_tree_power,
    restricted_tree_root,
    satisfies_partition,
    tree_root,
    tree_root_bruteforce,
)

def _partition(layers, overflow=()) -> DepthPartition:
    return DepthPartition(0, tuple(frozenset(layer) for layer in layers), frozenset(overflow))

def test_complete_graph_gives_star() -> None:
    result = tree_root(graphs.complete(5), 2)
    assert result.found and result.verified
    assert sorted(result.tree.degree(v) for v in range(5)) == [1, 1, 1, 1, 4]

def test_path_square_gives_a_path() -> None:
    G = graphs.graph_power(graphs.path(5), 2)
    result = tree_root(G, 2)
    assert is_tree_power(result.tree, G, 2)
    assert result.tree.max_degree() == 2

def test_even_cycle_square_is_no_tree_power() -> None:
    assert not tree_root(graphs.cycle(6), 2).found

def test_r_one_accepts_trees_only(c9: Graph) -> None:
    P = graphs.path(4)
    assert tree_root(P, 1).tree == P
    assert not tree_root(c9, 1).found

def test_tree_root_rejects_bad_r() -> None:
    with pytest.raises(UsageError):
        tree_root(graphs.path(3), 0)

@pytest.mark.parametrize("n", [6, 9, 14, 20])
@pytest.mark.parametrize("r", [2, 3, 4])
def test_random_tree_powers_are_solved(n: int, r: int) -> None:
    T = generators.random_tree(n, seed=100 * n + r)
    G = graphs.graph_power(T, r)
    result = tree_root(G, r)
    assert result.found
    assert is_tree_power(result.tree, G, r)

def test_bruteforce_examples() -> None:
    assert len(tree_root_bruteforce(graphs.complete(3), 2)) == 3
    assert len(tree_root_bruteforce(graphs.complete(4), 2)) == 4
    assert tree_root_bruteforce(graphs.path(4), 2) == []

def test_bruteforce_limit() -> None:
    with pytest.raises(OracleLimitError):
        tree_root_bruteforce(graphs.complete(10), 2)

@settings(max_examples=40, deadline=None)
@given(
    n=st.integers(min_value=3, max_value=6),
    p=st.floats(min_value=0.0, max_value=1.0),
    seed=st.integers(min_value=0, max_value=2**32),
    r=st.integers(min_value=2, max_value=3),
)
def test_solver_agrees_with_bruteforce(n: int, p: float, seed: int, r: int) -> None:
    G = generators.random_connected_graph(n, p, seed)
    assert tree_root(G, r).found == bool(tree_root_bruteforce(G, r))

@pytest.mark.slow
@pytest.mark.parametrize("seed", range(20))
def test_solver_agrees_on_tree_powers(seed: int) -> None:
    T = generators.random_tree(8, seed)
    for r in (2, 3):
        G = graphs.graph_power(T, r)
        assert tree_root(G, r).found
        assert T in tree_root_bruteforce(G, r)

def test_gadget_on_triangle(triangle: Graph) -> None:
    G = build_restriction_gadget(triangle, 2, _partition([{1}, {2}]))
    assert G.n == 7
    extra = {(3, 4), (5, 6), (3, 5), (0, 3), (0, 4), (0, 5), (0, 6), (1, 3), (1, 5)}
    assert set(G.edges()) == set(triangle.edges()) | extra

@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_gadget_adds_two_r_vertices(r: int) -> None:
    T = graphs.path(2 * r + 2)
    G = graphs.graph_power(T, r)
    assert build_restriction_gadget(G, r, depth_partition_of(T, 0, r)).n == G.n + 2 * r

def test_gadget_cross_edges_follow_index_sum() -> None:
    G = build_restriction_gadget(graphs.complete(2), 3, _partition([{1}, set(), set()]))
    w = [None, 2, 3, 4]
    u = [None, 5, 6, 7]
    for i, j in itertools.product(range(1, 4), repeat=2):
        assert G.has_edge(w[i], u[j]) == (i + j <= 3)

def test_restricted_examples(triangle: Graph) -> None:
    path = restricted_tree_root(triangle, 2, _partition([{1}, {2}]))
    assert set(path.tree.edges()) == {(0, 1), (1, 2)}
    star = restricted_tree_root(triangle, 2, _partition([{1, 2}, set()]))
    assert set(star.tree.edges()) == {(0, 1), (0, 2)}
    assert not restricted_tree_root(triangle, 2, _partition([set(), {1, 2}])).found

def test_restricted_overflow_adjacent_to_anchor(triangle: Graph) -> None:
    part = _partition([{1}, set()], overflow={2})
    assert part.covers(3) and not part.has_gap()
    assert not restricted_tree_root(triangle, 2, part).found

def test_restricted_layers_must_match_anchor_neighbours() -> None:
    K = graphs.complete(6)
    part = _partition([{1}, {2, 3}, {4}], overflow={5})
    assert not restricted_tree_root(K, 3, part).found
    star = restricted_tree_root(K, 3, _partition([{1, 2, 3, 4, 5}, set(), set()]))
    assert star.found and star.tree.degree(0) == 5

def test_restricted_rejects_non_partition(triangle: Graph) -> None:
    with pytest.raises(UsageError):
        restricted_tree_root(triangle, 2, _partition([{1}, {1, 2}]))
    with pytest.raises(UsageError):
        restricted_tree_root(triangle, 3, _partition([{1}, {2}]))

def test_gadget_paths_appear_in_every_root(triangle: Graph) -> None:
    G = build_restriction_gadget(triangle, 2, _partition([{1}, {2}]))
    for T in tree_root_bruteforce(G, 2):
        assert {(0, 3), (3, 4), (0, 5), (5, 6)} <= set(T.edges())

@pytest.mark.slow
@pytest.mark.parametrize("seed", range(6))
def test_restricted_agrees_with_filtered_bruteforce(seed: int) -> None:
    T = generators.random_tree(5, seed)
    G = graphs.graph_power(T, 2)
    roots = tree_root_bruteforce(G, 2)
    for anchor in range(G.n):
        for layers in _layerings(G.n, anchor):
            part = DepthPartition(anchor, layers[:2], layers[2])
            expected = any(satisfies_partition(R, G, 2, part) for R in roots)
            assert restricted_tree_root(G, 2, part).found == expected

def _layerings(n: int, anchor: int):
    rest = [v for v in range(n) if v != anchor]
    for assignment in itertools.product(range(3), repeat=len(rest)):
        layers = [frozenset(v for v, k in zip(rest, assignment) if k == d) for d in range(3)]
        yield tuple(layers)
