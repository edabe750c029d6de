"""
Graph-core operations: distances, powers, girth, class membership and
leaf peeling. All functions are pure and return new :class:`Graph` objects.
"""
import logging
from collections import deque
from typing import Iterable, Optional

import networkx as nx

from girthroot.core.errors import DisconnectedGraphError, TreeHasNoCoreError, UsageError
from girthroot.models.graph import ACYCLIC, Edge, Girth, Graph, InducedSubgraph

logger = logging.getLogger(__name__)

UNREACHABLE = -1

def distances_from(G: Graph, source: int, limit: Optional[int] = None) -> list[int]:
    """Breadth-first distances from ``source``; ``UNREACHABLE`` past ``limit``."""
    dist = [UNREACHABLE] * G.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if limit is not None and dist[u] >= limit:
            continue
        for w in G.adj[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist

def all_distances(G: Graph) -> list[list[int]]:
    return [distances_from(G, v) for v in G.vertices()]

def is_connected(G: Graph) -> bool:
    if G.n == 0:
        return True
    return UNREACHABLE not in distances_from(G, 0)

def require_connected(G: Graph) -> None:
    if not is_connected(G):
        raise DisconnectedGraphError("graph is not connected")

def is_tree(G: Graph) -> bool:
    return G.n >= 1 and G.num_edges == G.n - 1 and is_connected(G)

def diameter(G: Graph) -> int:
    require_connected(G)
    return max((max(row) for row in all_distances(G)), default=0)

def induced_subgraph(G: Graph, vertices: Iterable[int]) -> InducedSubgraph:
    kept = tuple(sorted(set(vertices)))
    local = {v: i for i, v in enumerate(kept)}
    neighbor_sets = [[local[w] for w in G.adj[v] if w in local] for v in kept]
    return InducedSubgraph(Graph.from_neighbor_sets(neighbor_sets), kept)

def distance_power(H: Graph, r: int) -> Graph:
    """Like :func:`graph_power` but also defined for disconnected graphs."""
    if r < 1:
        raise UsageError(f"power exponent must be positive, got {r}")
    if r == 1:
        return H
    neighbor_sets = []
    for v in H.vertices():
        dist = distances_from(H, v, limit=r)
        neighbor_sets.append([u for u, d in enumerate(dist) if d > 0])
    return Graph.from_neighbor_sets(neighbor_sets)

def graph_power(H: Graph, r: int) -> Graph:
    """u~v in the result iff 1 <= dist_H(u, v) <= r."""
    require_connected(H)
    return distance_power(H, r)

def girth(G: Graph) -> Girth:
    best: Optional[int] = None
    for source in G.vertices():
        dist = [UNREACHABLE] * G.n
        parent = [UNREACHABLE] * G.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            # no shorter cycle through source can be found past this depth
            if best is not None and 2 * dist[u] >= best:
                break
            for w in G.adj[u]:
                if dist[w] == UNREACHABLE:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return ACYCLIC if best is None else Girth(best)

def is_in_class(G: Graph, g_min: int, leafless: bool) -> bool:
    if leafless and G.min_degree() < 2:
        return False
    return girth(G) >= g_min

def _leaves(G: Graph, alive: set[int]) -> set[int]:
    return {v for v in alive if sum(1 for w in G.adj[v] if w in alive) == 1}

def peel_levels(H: Graph, steps: int) -> frozenset[int]:
    """Survivors of ``steps`` rounds of simultaneous leaf removal."""
    if steps < 0:
        raise UsageError("steps must be non-negative")
    alive = set(H.vertices())
    for round_no in range(steps):
        leaves = _leaves(H, alive)
        if not leaves:
            break
        alive -= leaves
        logger.debug(f"peel round {round_no + 1}: removed {len(leaves)} leaves")
    return frozenset(alive)

def core_of(H: Graph) -> InducedSubgraph:
    """The largest subgraph without degree-one vertices."""
    require_connected(H)
    if is_tree(H):
        raise TreeHasNoCoreError("a tree has no core")
    alive = set(H.vertices())
    while True:
        leaves = _leaves(H, alive)
        if not leaves:
            return induced_subgraph(H, alive)
        alive -= leaves

def canonical_edges(G: Graph) -> list[Edge]:
    return sorted(G.edges())

def uniqueness_girth_bound(r: int) -> int:
    """Girth from which a leafless r-th root is known to be unique."""
    return 2 * r + 2 * ((r + 2) // 4) + 1

def class_girth_bound(r: int) -> int:
    return 2 * r + 3

# Standard graphs

def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))

def cycle(n: int) -> Graph:
    if n < 3:
        raise UsageError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

def complete(n: int) -> Graph:
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))

def star(n: int) -> Graph:
    """Star on ``n`` vertices centred at 0."""
    return Graph.from_edges(n, ((0, v) for v in range(1, n)))

def with_pendant_path(G: Graph, anchor: int, length: int) -> Graph:
    """Append a path of ``length`` new vertices hanging from ``anchor``."""
    edges = list(G.edges())
    previous = anchor
    for i in range(length):
        new = G.n + i
        edges.append((previous, new))
        previous = new
    return Graph.from_edges(G.n + length, edges)

def to_networkx(G: Graph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(G.vertices())
    graph.add_edges_from(G.edges())
    return graph

def from_networkx(graph: nx.Graph) -> Graph:
    """Relabels the nodes of ``graph`` to ``0..n-1`` in sorted order."""
    index = {node: i for i, node in enumerate(sorted(graph.nodes))}
    return Graph.from_edges(len(index), ((index[a], index[b]) for a, b in graph.edges))
