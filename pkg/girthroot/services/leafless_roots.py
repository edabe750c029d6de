"""
Roots of girth at least ``2r + 3`` without degree-one vertices. Each root
is grown from a single seed edge: once ``xy`` is known to be a root edge,
``n_set`` reads the whole root neighbourhood of ``x`` off the power.
"""
import logging
from collections import deque
from functools import partial
from typing import Optional

from girthroot.core.errors import UsageError
from girthroot.models.balls import BallFamily
from girthroot.models.graph import Edge, Graph
from girthroot.models.roots import MultiplicityReport, RootSet
from girthroot.services import graphs
from girthroot.services.balls import balls, n_set
from girthroot.services.parallel import run_chunks

logger = logging.getLogger(__name__)

def reconstruct_from_one_edge(
    G: Graph, e: Edge, r: int, F: Optional[BallFamily] = None
) -> Optional[Graph]:
    """
    Grow a candidate root from the seed edge ``e``. Returns ``None`` when
    the growth is aborted early; any returned graph is still unverified.
    """
    F = F or balls(G)
    x0, y0 = e
    cand: list[set[int]] = [set() for _ in G.vertices()]
    cand[x0].add(y0)
    cand[y0].add(x0)
    processed = [False] * G.n
    queue = deque([x0, y0])
    while queue:
        x = queue.popleft()
        if processed[x]:
            continue
        processed[x] = True
        y = min(cand[x])
        for z in n_set(G, F, x, y):
            if z in cand[x]:
                continue
            cand[x].add(z)
            cand[z].add(x)
            if len(cand[z]) > len(F[z]) - 1:
                logger.debug(f"seed {e}: degree of {z} exceeds its ball, abort")
                return None
            if not processed[z]:
                queue.append(z)
        if len(cand[x]) > len(F[x]) - 1:
            logger.debug(f"seed {e}: degree of {x} exceeds its ball, abort")
            return None
    return Graph.from_neighbor_sets(cand)

def verify_root(G: Graph, H: Graph, r: int) -> bool:
    if H.n != G.n or not graphs.is_connected(H):
        return False
    if not graphs.is_in_class(H, graphs.class_girth_bound(r), leafless=True):
        return False
    return graphs.graph_power(H, r) == G

def _try_seed(G: Graph, r: int, F: BallFamily, e: Edge) -> Optional[Graph]:
    H = reconstruct_from_one_edge(G, e, r, F)
    if H is None or not verify_root(G, H, r):
        return None
    return H

def seed_vertex(F: BallFamily) -> int:
    return min(range(len(F)), key=lambda v: (len(F[v]), v))

def all_leafless_roots(G: Graph, r: int, jobs: Optional[int] = None) -> RootSet:
    if r < 2:
        raise UsageError("leafless root search needs r >= 2")
    graphs.require_connected(G)
    bound = graphs.class_girth_bound(r)
    if G.n < bound:
        # a leafless graph of girth >= bound has at least bound vertices
        return RootSet(r, bound)
    F = balls(G)
    x = seed_vertex(F)
    seeds = [(x, y) for y in sorted(F[x] - {x})]
    logger.info(f"trying {len(seeds)} seed edges at vertex {x}")
    found = run_chunks(partial(_try_seed, G, r, F), seeds, jobs)
    distinct = {tuple(graphs.canonical_edges(H)): H for H in found if H is not None}
    roots = tuple(distinct[key] for key in sorted(distinct))
    logger.info(f"{len(roots)} distinct leafless root(s) verified")
    return RootSet(r, bound, roots)

def root_multiplicity_report(G: Graph, r: int, jobs: Optional[int] = None) -> MultiplicityReport:
    root_set = all_leafless_roots(G, r, jobs)
    count = len(root_set)
    return MultiplicityReport(
        count=count,
        max_degree=G.max_degree(),
        within_degree_bound=count <= max(G.max_degree(), 1),
        uniqueness_proven=graphs.class_girth_bound(r) >= graphs.uniqueness_girth_bound(r),
    )
