import pytest

from girthroot.models.graph import ACYCLIC, Girth, Graph, VertexLabeling

def test_from_edges_symmetric() -> None:
    G = Graph.from_edges(3, [(0, 1), (2, 1)])
    assert G.adj == ((1,), (0, 2), (1,))
    assert G.has_edge(1, 0)
    assert G.num_edges == 2
    assert list(G.edges()) == [(0, 1), (1, 2)]

def test_rejects_self_loop() -> None:
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(1, 1)])

def test_rejects_out_of_range() -> None:
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])

def test_rejects_asymmetric_adjacency() -> None:
    with pytest.raises(ValueError):
        Graph(2, ((1,), ()))

def test_equality_is_labelled() -> None:
    a = Graph.from_edges(3, [(0, 1), (1, 2)])
    b = Graph.from_edges(3, [(0, 2), (2, 1)])
    assert a != b
    assert a == Graph.from_edges(3, [(1, 2), (0, 1)])

def test_degree_helpers() -> None:
    G = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert G.degree(0) == 3
    assert G.min_degree() == 1
    assert G.max_degree() == 3

def test_acyclic_sorts_above_every_girth() -> None:
    assert ACYCLIC > Girth(1000)
    assert ACYCLIC >= 7
    assert Girth(5) >= 5
    assert Girth(5) < 6
    assert not Girth(8) >= 9
    assert str(ACYCLIC) == "acyclic"

def test_finite_girth_at_least_three() -> None:
    with pytest.raises(ValueError):
        Girth(2)

def test_labeling_bijection() -> None:
    labels = VertexLabeling(("a", "b", "c"))
    assert labels.id_of("b") == 1
    assert labels.label_of(2) == "c"
    assert "a" in labels and "z" not in labels
    with pytest.raises(ValueError):
        VertexLabeling(("a", "a"))
