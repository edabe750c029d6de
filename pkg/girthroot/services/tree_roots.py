"""
Tree roots.

The solver fixes a vertex ``v0`` with the smallest ball and searches for
the tree distances ``lam(u) = dist_T(v0, u)``. Only the vertices of
``B_v0`` need guessing; every other level satisfies
``lam(u) = r + min(lam(w) for w in N_G(u))``. Parents are then placed level
by level, keeping every placed pair consistent with ``G``. The search is
exhaustive, so a ``None`` answer is a proof of absence; its worst case is
exponential in ``|B_v0|``.
"""
import heapq
import itertools
import logging
from functools import partial
from typing import Iterator, Optional

import networkx as nx

from girthroot.core.config import settings
from girthroot.core.errors import OracleLimitError, SolverInvariantError, UsageError
from girthroot.models.balls import BallFamily
from girthroot.models.graph import Graph
from girthroot.models.trees import DepthPartition, TreeRootResult
from girthroot.services import graphs
from girthroot.services.balls import balls
from girthroot.services.parallel import run_chunks

logger = logging.getLogger(__name__)

def is_tree_power(T: Graph, G: Graph, r: int) -> bool:
    return T.n == G.n and graphs.is_tree(T) and graphs.graph_power(T, r) == G

def depth_partition_of(T: Graph, anchor: int, r: int) -> DepthPartition:
    dist = graphs.distances_from(T, anchor)
    layers = tuple(frozenset(u for u, d in enumerate(dist) if d == k) for k in range(1, r + 1))
    overflow = frozenset(u for u, d in enumerate(dist) if d > r)
    return DepthPartition(anchor, layers, overflow)

def _ball_levels(F: BallFamily, v0: int, r: int) -> Iterator[dict[int, int]]:
    """Every admissible assignment of levels ``1..r`` to ``B_v0 - {v0}``."""
    inner = F[v0] - {v0}
    order = sorted(inner, key=lambda u: (-len(inner - F[u]), u))
    # true twins can swap places in any root, so fix their relative order
    twins = {u: [w for w in inner if w != u and F[w] == F[u]] for u in inner}
    level: dict[int, int] = {v0: 0}

    def admissible(u: int, j: int) -> bool:
        for w in twins[u]:
            if w in level and (level[w] > j if w < u else level[w] < j):
                return False
        return all(level[w] + j > r for w in level if w not in F[u])

    def extend(i: int) -> Iterator[dict[int, int]]:
        if i == len(order):
            yield dict(level)
            return
        u = order[i]
        for j in range(1, r + 1):
            if admissible(u, j):
                level[u] = j
                yield from extend(i + 1)
                del level[u]

    yield from extend(0)

def _all_levels(G: Graph, ball_levels: dict[int, int], r: int) -> Optional[list[int]]:
    lam = [0] * G.n
    best = [None] * G.n
    for v, l in ball_levels.items():
        best[v] = l
    heap = [(l, v) for v, l in ball_levels.items()]
    heapq.heapify(heap)
    while heap:
        d, v = heapq.heappop(heap)
        if d > best[v]:
            continue
        lam[v] = d
        for z in G.adj[v]:
            if z in ball_levels:
                continue
            if best[z] is None or d + r < best[z]:
                best[z] = d + r
                heapq.heappush(heap, (d + r, z))

    for u in G.vertices():
        L = lam[u]
        if L == 0:
            continue
        below = [w for w in G.adj[u] if lam[w] == L - 1]
        if not below:
            return None
        if L > r and sum(1 for w in G.adj[u] if lam[w] == L - r) != 1:
            return None
        if any(abs(lam[w] - L) > r for w in G.adj[u]):
            return None
    return lam

def _parent_candidates(G: Graph, lam: list[int], v0: int, u: int, r: int) -> list[int]:
    L = lam[u]
    if L == 1:
        return [v0]
    for w in G.adj[u]:
        if lam[w] == L + r - 1:
            # w hangs below u, so its unique level L-1 neighbour is u's parent
            return [z for z in G.adj[w] if lam[z] == L - 1]
    return [p for p in G.adj[u] if lam[p] == L - 1]

def _place_parents(G: Graph, lam: list[int], v0: int, r: int) -> Optional[Graph]:
    order = sorted(G.vertices(), key=lambda v: (lam[v], v))
    D = [[0] * G.n for _ in G.vertices()]
    parent = [-1] * G.n
    choices: list[list[int]] = []
    cursor: list[int] = []

    def place(i: int, p: int) -> bool:
        u = order[i]
        row = D[u]
        for x in order[:i]:
            d = D[p][x] + 1
            if (d <= r) != G.has_edge(u, x):
                return False
            row[x] = d
        for x in order[:i]:
            D[x][u] = row[x]
        parent[u] = p
        return True

    i = 1
    while i < len(order):
        if len(choices) < i:
            choices.append(_parent_candidates(G, lam, v0, order[i], r))
            cursor.append(0)
        k = i - 1
        placed = False
        while cursor[k] < len(choices[k]):
            p = choices[k][cursor[k]]
            cursor[k] += 1
            if place(i, p):
                placed = True
                break
        if placed:
            i += 1
            continue
        choices.pop()
        cursor.pop()
        i -= 1
        if i == 0:
            return None
    return Graph.from_edges(G.n, ((u, parent[u]) for u in order[1:]))

def _find_tree_root(G: Graph, r: int) -> Optional[Graph]:
    if G.n <= 2 or r == 1:
        return G if graphs.is_tree(G) else None
    if G.num_edges == G.n * (G.n - 1) // 2:
        return graphs.star(G.n)
    if not nx.is_chordal(graphs.to_networkx(G)):
        logger.debug("graph is not chordal, so it is no tree power")
        return None
    F = balls(G)
    v0 = min(G.vertices(), key=lambda v: (len(F[v]), v))
    attempts = 0
    for ball_levels in _ball_levels(F, v0, r):
        attempts += 1
        lam = _all_levels(G, ball_levels, r)
        if lam is None:
            continue
        T = _place_parents(G, lam, v0, r)
        if T is not None:
            logger.debug(f"tree root found from v0={v0} after {attempts} level guesses")
            return T
    logger.debug(f"no tree root: {attempts} level guesses at v0={v0} exhausted")
    return None

def tree_root(G: Graph, r: int) -> TreeRootResult:
    if r < 1:
        raise UsageError(f"r must be positive, got {r}")
    graphs.require_connected(G)
    T = _find_tree_root(G, r)
    if T is None:
        return TreeRootResult()
    if not is_tree_power(T, G, r):
        raise SolverInvariantError("constructed tree does not reproduce the input")
    return TreeRootResult(T, verified=True)

def _prufer_chunk(G: Graph, r: int, first: int) -> list[Graph]:
    found = []
    for rest in itertools.product(range(G.n), repeat=G.n - 3):
        tree = nx.from_prufer_sequence([first, *rest])
        if not all(G.has_edge(a, b) for a, b in tree.edges):
            continue
        T = Graph.from_edges(G.n, tree.edges)
        if graphs.graph_power(T, r) == G:
            found.append(T)
    return found

def tree_root_bruteforce(G: Graph, r: int, jobs: Optional[int] = None) -> list[Graph]:
    """All labelled trees ``T`` with ``T^r = G``, by Prüfer enumeration."""
    limit = settings.TREE_BRUTEFORCE_MAX_VERTICES
    if G.n > limit:
        raise OracleLimitError(f"tree oracle is limited to {limit} vertices, got {G.n}")
    if G.n <= 2:
        return [G] if graphs.is_tree(G) else []
    chunks = run_chunks(partial(_prufer_chunk, G, r), range(G.n), jobs)
    trees = [T for chunk in chunks for T in chunk]
    return sorted(trees, key=graphs.canonical_edges)

def build_restriction_gadget(G: Graph, r: int, part: DepthPartition) -> Graph:
    """
    Append cliques ``w_1..w_r`` (ids ``n..n+r-1``) and ``u_1..u_r``
    (ids ``n+r..n+2r-1``) whose only tree roots are two paths hanging
    from the anchor, pinning every layer to its required depth.
    """
    n, v = G.n, part.anchor
    w = {i: n + i - 1 for i in range(1, r + 1)}
    u = {i: n + r + i - 1 for i in range(1, r + 1)}
    edges = list(G.edges())
    for i in range(1, r + 1):
        edges += [(w[i], w[j]) for j in range(i + 1, r + 1)]
        edges += [(u[i], u[j]) for j in range(i + 1, r + 1)]
        edges += [(w[i], u[j]) for j in range(1, r - i + 1)]
        edges += [(w[i], v), (u[i], v)]
        for j in range(1, r - i + 1):
            for x in part.layer(j):
                edges += [(w[i], x), (u[i], x)]
    return Graph.from_edges(n + 2 * r, edges)

def satisfies_partition(T: Graph, G: Graph, r: int, part: DepthPartition) -> bool:
    return is_tree_power(T, G, r) and depth_partition_of(T, part.anchor, r) == part

def restricted_tree_root(G: Graph, r: int, part: DepthPartition) -> TreeRootResult:
    if part.r != r or not part.covers(G.n):
        raise UsageError("depth partition does not partition the vertex set")
    graphs.require_connected(G)
    if part.has_gap() or (G.n > 1 and not any(part.layers)):
        return TreeRootResult()
    # layers 1..r are exactly the anchor's neighbourhood in the power
    if frozenset().union(*part.layers) != G.neighbors(part.anchor):
        return TreeRootResult()
    result = tree_root(build_restriction_gadget(G, r, part), r)
    if not result.found:
        return TreeRootResult()
    T = graphs.induced_subgraph(result.tree, range(G.n)).graph
    if not satisfies_partition(T, G, r, part):
        raise SolverInvariantError("stripped gadget root violates the depth partition")
    return TreeRootResult(T, verified=True)
