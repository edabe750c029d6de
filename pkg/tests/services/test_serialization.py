import json

import pytest

from girthroot.core.errors import GraphFormatError
from girthroot.models.graph import Graph, VertexLabeling
from girthroot.services import graphs
from girthroot.services.serialization import (
    format_edge_list,
    load_graph,
    parse_edge_list,
    parse_json,
    to_dot,
    to_json,
)

def test_parse_edge_list_with_labels() -> None:
    G, labeling = parse_edge_list("# triangle\na b\nb c\n\nc a\nlonely\n")
    assert G.n == 4
    assert labeling.labels == ("a", "b", "c", "lonely")
    assert set(G.edges()) == {(0, 1), (1, 2), (0, 2)}
    assert G.degree(labeling.id_of("lonely")) == 0

@pytest.mark.parametrize(
    "text, message",
    [
        ("a a\n", "self-loop"),
        ("a b\nb a\n", "duplicate"),
        ("a b c\n", "expected"),
    ],
)
def test_parse_edge_list_errors(text: str, message: str) -> None:
    with pytest.raises(GraphFormatError) as excinfo:
        parse_edge_list(text)
    assert message in excinfo.value.detail

def test_edge_list_output_declares_isolated_vertices() -> None:
    G = Graph.from_edges(3, [(1, 2)])
    assert format_edge_list(G) == "0\n1\n2\n1 2\n"
    assert parse_edge_list(format_edge_list(G))[0] == G

def test_edge_list_keeps_labels() -> None:
    G, labeling = parse_edge_list("x y\ny z\n")
    assert format_edge_list(G, labeling) == "x\ny\nz\nx y\ny z\n"

def test_json_is_canonical(c9: Graph) -> None:
    data = json.loads(to_json(c9))
    assert data["n"] == 9
    assert data["edges"] == [list(e) for e in graphs.canonical_edges(c9)]

def test_parse_json_with_and_without_labels() -> None:
    G, labeling = parse_json('{"n": 3, "edges": [[0, 1], [1, 2]]}')
    assert G == graphs.path(3)
    assert labeling == VertexLabeling.identity(3)
    _, named = parse_json('{"n": 2, "edges": [[0, 1]], "labels": ["u", "v"]}')
    assert named.id_of("v") == 1

def test_labelled_json_survives_reload() -> None:
    G, labeling = parse_edge_list("p q\nq r\n")
    again, same = parse_json(to_json(G, labeling))
    assert again == G and same == labeling

@pytest.mark.parametrize(
    "text",
    [
        '{"n": 3, "edges": [[1, 0]]}',
        '{"n": 2, "edges": [[0, 2]]}',
        '{"n": 3, "edges": [[0, 1], [0, 1]]}',
        '{"n": 3, "edges": [[1, 2], [0, 1]]}',
        '{"n": -1}',
        '{"n": 2, "labels": ["a"]}',
        '{"n": 2, "labels": ["a", "a"]}',
        '{"n": 2, "edges": [[0, 1]]',
    ],
)
def test_parse_json_errors(text: str) -> None:
    with pytest.raises(GraphFormatError):
        parse_json(text)

def test_load_graph_detects_format() -> None:
    assert load_graph('  {"n": 2, "edges": [[0, 1]]}')[0] == graphs.path(2)
    assert load_graph("0 1\n")[0] == graphs.path(2)

def test_dot_output(triangle: Graph) -> None:
    dot = to_dot(triangle, VertexLabeling(("a", "b", "c")))
    assert dot.startswith("graph G {")
    assert '  2 [label="c"];' in dot
    assert "  0 -- 2;" in dot
