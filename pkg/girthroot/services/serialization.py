"""
Reading and writing graphs: whitespace edge lists, the canonical JSON form
``{"n": int, "edges": [[u, v], ...]}`` and undirected DOT.
"""
import json
import logging
from typing import Optional

from pydantic import ValidationError

from girthroot.core.errors import GraphFormatError
from girthroot.models.graph import Graph, VertexLabeling
from girthroot.schemas.graph import GraphPayload, LabeledGraphPayload
from girthroot.services.graphs import canonical_edges

logger = logging.getLogger(__name__)

def parse_edge_list(text: str) -> tuple[Graph, VertexLabeling]:
    """
    Parse ``u v`` lines; a single token declares a vertex. Ids follow the
    order in which labels first appear.
    """
    labels: dict[str, int] = {}
    edges: set[tuple[int, int]] = set()

    def vertex(label: str) -> int:
        if label not in labels:
            labels[label] = len(labels)
        return labels[label]

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) == 1:
            vertex(tokens[0])
            continue
        if len(tokens) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        a, b = tokens
        if a == b:
            raise GraphFormatError(f"line {lineno}: self-loop at {a!r}")
        u, v = vertex(a), vertex(b)
        key = (min(u, v), max(u, v))
        if key in edges:
            raise GraphFormatError(f"line {lineno}: duplicate edge {a} {b}")
        edges.add(key)

    logger.debug(f"parsed edge list with {len(labels)} vertices and {len(edges)} edges")
    graph = Graph.from_edges(len(labels), edges)
    return graph, VertexLabeling(tuple(labels))

def format_edge_list(G: Graph, labeling: Optional[VertexLabeling] = None) -> str:
    labeling = labeling or VertexLabeling.identity(G.n)
    lines = [labeling.label_of(v) for v in G.vertices()]
    lines += [f"{labeling.label_of(u)} {labeling.label_of(v)}" for u, v in canonical_edges(G)]
    return "\n".join(lines) + "\n"

def to_payload(G: Graph) -> GraphPayload:
    return GraphPayload(n=G.n, edges=canonical_edges(G))

def from_payload(payload: GraphPayload) -> Graph:
    return Graph.from_edges(payload.n, payload.edges)

def to_json(G: Graph, labeling: Optional[VertexLabeling] = None) -> str:
    if labeling is None:
        return to_payload(G).model_dump_json()
    return to_labeled_payload(G, labeling).model_dump_json()

def parse_json(text: str) -> tuple[Graph, VertexLabeling]:
    try:
        payload = LabeledGraphPayload.model_validate_json(text)
    except ValidationError as exc:
        raise GraphFormatError(f"invalid graph JSON: {exc.errors()[0]['msg']}") from exc
    if payload.labels is None:
        labeling = VertexLabeling.identity(payload.n)
    else:
        if len(payload.labels) != payload.n:
            raise GraphFormatError("labels must name every vertex")
        try:
            labeling = VertexLabeling(tuple(payload.labels))
        except ValueError as exc:
            raise GraphFormatError(str(exc)) from exc
    return from_payload(payload), labeling

def load_graph(text: str) -> tuple[Graph, VertexLabeling]:
    """Accept either format; JSON is recognised by a leading brace."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_edge_list(text)

def to_dot(G: Graph, labeling: Optional[VertexLabeling] = None, name: str = "G") -> str:
    labeling = labeling or VertexLabeling.identity(G.n)
    lines = [f"graph {name} {{"]
    for v in G.vertices():
        lines.append(f"  {v} [label={json.dumps(labeling.label_of(v))}];")
    for u, v in canonical_edges(G):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"

def to_labeled_payload(G: Graph, labeling: Optional[VertexLabeling] = None) -> LabeledGraphPayload:
    labeling = labeling or VertexLabeling.identity(G.n)
    return LabeledGraphPayload(n=G.n, edges=canonical_edges(G), labels=list(labeling.labels))
