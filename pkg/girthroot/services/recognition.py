"""
Full recognition of r-th powers of graphs with girth at least ``2r + 3``.

A tree root is tried first. Otherwise the core is found by repeatedly
dropping vertices whose ball sits inside another ball, its leafless roots
are enumerated, and the trees hanging off each core vertex are rebuilt
with depth-restricted tree roots.
"""
import logging
from collections import deque
from functools import partial, reduce
from typing import Optional

from girthroot.core.errors import UsageError
from girthroot.models.balls import BallFamily
from girthroot.models.graph import Graph, InducedSubgraph
from girthroot.models.recognition import CoreDecomposition, RecognitionResult
from girthroot.models.trees import DepthPartition
from girthroot.services import graphs
from girthroot.services.balls import balls
from girthroot.services.leafless_roots import all_leafless_roots
from girthroot.services.parallel import run_chunks
from girthroot.services.tree_roots import restricted_tree_root, tree_root

logger = logging.getLogger(__name__)

def noncore_filter(G: Graph) -> frozenset[int]:
    """Vertices ``u`` with ``B_u <= B_v`` for some ``v != u``."""
    F = balls(G)
    return frozenset(
        u for u in G.vertices() if any(F[u] <= F[v] for v in G.adj[u])
    )

def core_vertices(G: Graph, r: int) -> frozenset[int]:
    graphs.require_connected(G)
    alive = frozenset(G.vertices())
    round_no = 0
    while alive:
        sub = graphs.induced_subgraph(G, alive)
        flagged = noncore_filter(sub.graph)
        if not flagged:
            break
        round_no += 1
        alive -= {sub.to_global(u) for u in flagged}
        logger.debug(f"core round {round_no}: dropped {len(flagged)}, {len(alive)} left")
    if not alive:
        logger.debug("core is empty; only a tree root is possible")
    return alive

def _tree_center(core_root: InducedSubgraph, members: frozenset[int]) -> Optional[tuple[int, int]]:
    """(center, height) of the subtree of the core root induced on ``members``."""
    local = core_root.local_ids()
    sub = graphs.induced_subgraph(core_root.graph, (local[v] for v in members))
    if not graphs.is_tree(sub.graph):
        return None
    ecc = [max(graphs.distances_from(sub.graph, v)) for v in sub.graph.vertices()]
    height = min(ecc)
    centers = [v for v, e in enumerate(ecc) if e == height]
    if len(centers) != 1:
        return None
    return core_root.to_global(sub.to_global(centers[0])), height

def link_depth_assignment(G: Graph, r: int, core_root: InducedSubgraph) -> Optional[CoreDecomposition]:
    """
    ``core_root.graph`` is a root of the core power, ``core_root.vertices``
    its ids in ``G``. Returns ``None`` when ``G`` cannot be a power with
    this core.
    """
    core = frozenset(core_root.vertices)
    F = balls(G)
    link: dict[int, int] = {}
    depth: dict[int, int] = {}
    pending: set[int] = set()
    for u in G.vertices():
        if u in core:
            continue
        seen = F[u] & core
        if not seen:
            pending.add(u)
            continue
        found = _tree_center(core_root, seen)
        if found is None or found[1] >= r:
            logger.debug(f"vertex {u}: core part of its ball is not a proper subtree")
            return None
        link[u], depth[u] = found[0], r - found[1]

    # deep vertices take the link of a depth-r vertex in their component
    shallow = core | {u for u, d in depth.items() if d < r}
    unvisited = set(pending)
    while unvisited:
        start = unvisited.pop()
        component = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in G.adj[x]:
                if y not in shallow and y not in component:
                    component.add(y)
                    queue.append(y)
        unvisited -= component
        owners = {link[u] for u in component if depth.get(u) == r}
        if len(owners) != 1:
            logger.debug(f"deep component at {start} has {len(owners)} candidate links")
            return None
        owner = owners.pop()
        for u in component & pending:
            link[u] = owner
    return CoreDecomposition(core, link, depth, frozenset(pending))

def depth_sets_closed_form(
    G: Graph, r: int, core_root: InducedSubgraph, v: int, d: int, F: Optional[BallFamily] = None
) -> frozenset[int]:
    F = F or balls(G)
    local = core_root.local_ids()
    dist = graphs.distances_from(core_root.graph, local[v])
    near = [core_root.to_global(a) for a, k in enumerate(dist) if 0 <= k <= r - d]
    far = [core_root.to_global(b) for b, k in enumerate(dist) if k >= r - d + 1]
    inside = reduce(lambda acc, a: acc & F[a], near, frozenset(G.vertices()))
    outside = frozenset().union(*(F[b] for b in far))
    return inside - outside

def _hanging_tree_edges(G: Graph, r: int, dec: CoreDecomposition, v: int) -> Optional[list[tuple[int, int]]]:
    members = dec.hanging(v)
    if not members:
        return []
    sub = graphs.induced_subgraph(G, members | {v})
    local = sub.local_ids()
    part = DepthPartition(
        anchor=local[v],
        layers=tuple(frozenset(local[u] for u in dec.depth_set(v, d)) for d in range(1, r + 1)),
        overflow=frozenset(local[u] for u in members & dec.deep_tail),
    )
    if not graphs.is_connected(sub.graph):
        return None
    result = restricted_tree_root(sub.graph, r, part)
    if not result.found:
        logger.debug(f"no tree with the required depths hangs from {v}")
        return None
    return [(sub.to_global(a), sub.to_global(b)) for a, b in result.tree.edges()]

def _attach(G: Graph, r: int, core_root: InducedSubgraph) -> Optional[Graph]:
    dec = link_depth_assignment(G, r, core_root)
    if dec is None:
        return None
    edges = [(core_root.to_global(a), core_root.to_global(b)) for a, b in core_root.graph.edges()]
    for v in core_root.vertices:
        tree_edges = _hanging_tree_edges(G, r, dec, v)
        if tree_edges is None:
            return None
        edges += tree_edges
    H = Graph.from_edges(G.n, edges)
    if not graphs.is_connected(H) or graphs.graph_power(H, r) != G:
        logger.debug("attached candidate does not reproduce the input")
        return None
    if not graphs.is_in_class(H, graphs.class_girth_bound(r), leafless=False):
        return None
    return H

def _attach_local_root(G: Graph, r: int, core: tuple[int, ...], H_core: Graph) -> Optional[Graph]:
    return _attach(G, r, InducedSubgraph(H_core, core))

def recognize(G: Graph, r: int, jobs: Optional[int] = None) -> RecognitionResult:
    if r < 1:
        raise UsageError(f"r must be positive, got {r}")
    graphs.require_connected(G)
    if r == 1:
        # G is its own unique first root
        if not graphs.is_in_class(G, graphs.class_girth_bound(1), leafless=False):
            return RecognitionResult(r, "none")
        return RecognitionResult(r, "tree" if graphs.is_tree(G) else "core", (G,))

    tree = tree_root(G, r)
    if tree.found:
        logger.info("input is a tree power")
        return RecognitionResult(r, "tree", (tree.tree,))

    core = core_vertices(G, r)
    if not core:
        return RecognitionResult(r, "none")
    G_core = graphs.induced_subgraph(G, core)
    if not graphs.is_connected(G_core.graph):
        return RecognitionResult(r, "none")
    core_roots = all_leafless_roots(G_core.graph, r, jobs)
    logger.info(f"core of {len(core)} vertices has {len(core_roots)} leafless root(s)")

    attached = run_chunks(partial(_attach_local_root, G, r, G_core.vertices), core_roots.roots, jobs)
    distinct = {tuple(graphs.canonical_edges(H)): H for H in attached if H is not None}
    roots = tuple(distinct[key] for key in sorted(distinct))
    return RecognitionResult(r, "core" if roots else "none", roots, len(core_roots))
