"""
Seeded instance generators. All randomness comes from numpy's PCG64 bit
generator, so a ``GenConfig`` reproduces the same graphs across runs.
"""
import logging
from typing import Optional

import networkx as nx
import numpy as np

from girthroot.core.config import settings
from girthroot.core.errors import GenerationError
from girthroot.models.graph import Graph
from girthroot.models.hypergraph import H2CInstance
from girthroot.schemas.generator import GenConfig
from girthroot.services import graphs

logger = logging.getLogger(__name__)

# independent streams drawn from one seed
LEAFLESS_STREAM = 0
TREE_STREAM = 1
H2C_STREAM = 2

def make_rng(seed: int, stream: int = 0) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64([seed, stream]))

def _ear_candidates(G: Graph, g: int, room: int) -> list[tuple[int, int, int]]:
    """(u, v, shortest admissible ear length) for ears adding at most ``room`` vertices."""
    found = []
    for u in G.vertices():
        dist = graphs.distances_from(G, u)
        for v in range(u, G.n):
            need = max(g - dist[v], 1)
            if need - 1 <= room:
                found.append((u, v, need))
    return found

def random_leafless_girth_graph(cfg: GenConfig) -> Graph:
    """
    Start from a cycle of length at least ``g`` and add ears: an ear of
    length ``l`` between ``u`` and ``v`` closes only cycles of length at
    least ``l + dist(u, v)``, which is kept at ``g`` or more.
    """
    g = cfg.g
    if cfg.n_target < g:
        raise GenerationError(f"n_target={cfg.n_target} cannot hold a cycle of length {g}")
    rng = make_rng(cfg.seed, LEAFLESS_STREAM)
    start = min(cfg.n_target, g + int(rng.integers(0, cfg.max_ear_slack + 1)))
    G = graphs.cycle(start)
    for _ in range(10 * cfg.n_target):
        room = cfg.n_target - G.n
        if room <= 0:
            break
        candidates = _ear_candidates(G, g, room)
        if not candidates:
            logger.debug(f"no ear fits in {room} more vertices; stopping at n={G.n}")
            break
        u, v, need = candidates[int(rng.integers(len(candidates)))]
        slack = min(cfg.max_ear_slack, room - (need - 1))
        length = need + int(rng.integers(0, slack + 1))
        G = _add_ear(G, u, v, length)
        if settings.DEBUG_CHECKS and graphs.girth(G) < g:
            raise GenerationError(f"ear {u}-{v} of length {length} broke girth {g}")
    else:
        raise GenerationError("ear placement did not converge")
    logger.debug(f"leafless graph: n={G.n}, m={G.num_edges}, g>={g}")
    return G

def _add_ear(G: Graph, u: int, v: int, length: int) -> Graph:
    """Join ``u`` and ``v`` by a path with ``length`` edges through new vertices."""
    chain = [u, *range(G.n, G.n + length - 1), v]
    return Graph.from_edges(G.n + length - 1, [*G.edges(), *zip(chain, chain[1:])])

def _grow_tree(edges: list, n: int, anchor: int, size: int, max_depth: int, rng: np.random.Generator) -> int:
    depth = {anchor: 0}
    for _ in range(size):
        open_ = [v for v in depth if depth[v] < max_depth]
        parent = open_[int(rng.integers(len(open_)))]
        edges.append((parent, n))
        depth[n] = depth[parent] + 1
        n += 1
    return n

def attach_random_trees(H: Graph, cfg: GenConfig) -> Graph:
    """
    Glue random trees onto vertices of the leafless graph ``H``. The first
    ``cfg.deep_tails`` chosen vertices get a pendant path of length
    ``r + 1`` first, so the result has vertices deeper than ``r``.
    """
    rng = make_rng(cfg.seed, TREE_STREAM)
    edges = list(H.edges())
    n = H.n
    tails_left = cfg.deep_tails
    for v in H.vertices():
        if tails_left > 0:
            tails_left -= 1
            path_end = v
            for _ in range(cfg.r + 1):
                edges.append((path_end, n))
                path_end, n = n, n + 1
        if rng.random() < cfg.tree_probability:
            size = int(rng.integers(1, cfg.max_tree_size + 1))
            n = _grow_tree(edges, n, v, size, cfg.max_tree_depth, rng)
    return Graph.from_edges(n, edges)

def random_tree(n: int, seed: int) -> Graph:
    """Uniform labelled tree on ``n`` vertices via a random Prüfer sequence."""
    if n <= 2:
        return graphs.path(n)
    rng = make_rng(seed, TREE_STREAM)
    sequence = rng.integers(0, n, size=n - 2).tolist()
    return Graph.from_edges(n, nx.from_prufer_sequence(sequence).edges)

def random_connected_graph(n: int, p: float, seed: int) -> Graph:
    """A random spanning tree plus each remaining pair with probability ``p``."""
    rng = make_rng(seed, LEAFLESS_STREAM)
    edges = set(random_tree(n, seed).edges())
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return Graph.from_edges(n, edges)

def random_h2c_instance(cfg: GenConfig) -> H2CInstance:
    rng = make_rng(cfg.seed, H2C_STREAM)
    low = min(cfg.min_subset_size, cfg.h2c_n)
    high = min(cfg.max_subset_size, cfg.h2c_n)
    subsets = []
    for j in range(cfg.h2c_m):
        size = 1 if cfg.force_singleton and j == 0 else int(rng.integers(low, high + 1))
        chosen = rng.choice(cfg.h2c_n, size=size, replace=False)
        subsets.append(frozenset(int(x) for x in chosen))
    return H2CInstance(cfg.h2c_n, tuple(subsets))

def cycle_power_witness(r: int) -> tuple[Graph, Graph]:
    """
    ``C_{2r+2}`` and its r-th power: ``K_{2r+2}`` minus the perfect matching
    of antipodal pairs, which sit at distance ``r + 1``.
    """
    C = graphs.cycle(2 * r + 2)
    return C, graphs.graph_power(C, r)

def class_instance(cfg: GenConfig, with_trees: Optional[bool] = None) -> Graph:
    """A leafless class graph, optionally with hanging trees."""
    if cfg.g < graphs.class_girth_bound(cfg.r):
        raise GenerationError(f"class instances need girth >= {graphs.class_girth_bound(cfg.r)}, got {cfg.g}")
    H = random_leafless_girth_graph(cfg)
    if with_trees or (with_trees is None and (cfg.tree_probability > 0 or cfg.deep_tails)):
        H = attach_random_trees(H, cfg)
    return H
