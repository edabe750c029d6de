"""
Exhaustive root search. Every root ``H`` of ``G`` has ``E(H) <= E(G)``, so
the candidates are the spanning subgraphs of ``G``. Vertex sets are int
bitsets to keep the inner loop cheap.
"""
import logging
from functools import partial
from typing import Optional

from girthroot.core.config import settings
from girthroot.core.errors import OracleLimitError
from girthroot.models.graph import Graph
from girthroot.services import graphs
from girthroot.services.parallel import run_chunks

logger = logging.getLogger(__name__)

CHUNK_BITS = 12

def _power_balls(adj: list[int], r: int) -> list[int]:
    reach = [adj[v] | 1 << v for v in range(len(adj))]
    for _ in range(r - 1):
        grown = []
        for v, ball in enumerate(reach):
            acc = ball
            rest = adj[v]
            while rest:
                low = rest & -rest
                acc |= reach[low.bit_length() - 1]
                rest ^= low
            grown.append(acc)
        reach = grown
    return reach

def _scan(G: Graph, r: int, g_min: int, leafless: bool, bounds: tuple[int, int]) -> list[Graph]:
    edges = list(G.edges())
    target = [sum(1 << u for u in G.adj[v]) | 1 << v for v in G.vertices()]
    found = []
    for mask in range(*bounds):
        if mask.bit_count() < G.n - 1:
            continue
        adj = [0] * G.n
        rest, k = mask, 0
        while rest:
            if rest & 1:
                u, v = edges[k]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            rest >>= 1
            k += 1
        if leafless and any(a.bit_count() < 2 for a in adj):
            continue
        if _power_balls(adj, r) != target:
            continue
        H = Graph.from_edges(G.n, (edges[i] for i in range(len(edges)) if mask >> i & 1))
        if graphs.girth(H) >= g_min:
            found.append(H)
    return found

def bruteforce_all_roots(
    G: Graph, r: int, g_min: int, leafless: bool, jobs: Optional[int] = None
) -> list[Graph]:
    """All spanning subgraphs ``H`` with ``H^r = G`` meeting the class filters."""
    limit = settings.ROOTS_BRUTEFORCE_MAX_EDGES
    if G.num_edges > limit:
        raise OracleLimitError(f"root oracle is limited to {limit} edges, got {G.num_edges}")
    graphs.require_connected(G)
    total = 1 << G.num_edges
    step = 1 << CHUNK_BITS
    ranges = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
    chunks = run_chunks(partial(_scan, G, r, g_min, leafless), ranges, jobs)
    roots = [H for chunk in chunks for H in chunk]
    logger.debug(f"oracle scanned {total} edge subsets, {len(roots)} root(s)")
    return sorted(roots, key=graphs.canonical_edges)
