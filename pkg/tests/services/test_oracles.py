import pytest

from girthroot.core.errors import OracleLimitError
from girthroot.models.graph import Graph
from girthroot.services import graphs
from girthroot.services.oracles import bruteforce_all_roots

def test_c7_squared_has_one_class_root() -> None:
    C7 = graphs.cycle(7)
    assert bruteforce_all_roots(graphs.graph_power(C7, 2), 2, 7, leafless=True) == [C7]

def test_first_power_is_itself(c9) -> None:
    assert bruteforce_all_roots(c9, 1, 3, leafless=False) == [c9]

def test_k4_squared_matches_direct_filter() -> None:
    K4 = graphs.complete(4)
    found = bruteforce_all_roots(K4, 2, 3, leafless=False)
    expected = []
    edges = list(K4.edges())
    for mask in range(1 << len(edges)):
        chosen = [e for i, e in enumerate(edges) if mask >> i & 1]
        H = Graph.from_edges(4, chosen)
        if graphs.is_connected(H) and graphs.graph_power(H, 2) == K4:
            expected.append(H)
    assert found == sorted(expected, key=graphs.canonical_edges)
    assert graphs.star(4) in found

def test_leafless_filter_drops_trees() -> None:
    K4 = graphs.complete(4)
    assert all(H.min_degree() >= 2 for H in bruteforce_all_roots(K4, 2, 3, leafless=True))

def test_complete_graph_has_only_tree_roots() -> None:
    found = bruteforce_all_roots(graphs.complete(6), 2, 7, leafless=False)
    assert graphs.star(6) in found
    assert all(graphs.is_tree(H) for H in found)

def test_every_oracle_root_verifies(pendant_cycle) -> None:
    G = graphs.graph_power(pendant_cycle(7, 1), 2)
    for H in bruteforce_all_roots(G, 2, 7, leafless=False):
        assert graphs.graph_power(H, 2) == G

def test_edge_limit() -> None:
    with pytest.raises(OracleLimitError):
        bruteforce_all_roots(graphs.complete(7), 2, 3, leafless=False)
