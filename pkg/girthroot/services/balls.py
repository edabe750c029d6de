"""
Ball algebra over a candidate power ``G``: the closed balls and the vertex
sets used to read the root neighbourhood of an edge off ``G`` alone.
"""
import logging
from functools import reduce
from typing import Optional, Sequence

from girthroot.core.errors import TailHypothesisError
from girthroot.models.balls import BallFamily, TailPartition
from girthroot.models.graph import Graph

logger = logging.getLogger(__name__)

def balls(G: Graph) -> BallFamily:
    return BallFamily(G, tuple(G.neighbors(v) | {v} for v in G.vertices()))

def _union(F: BallFamily, vertices) -> frozenset[int]:
    return frozenset().union(*(F[v] for v in vertices))

def s_set(G: Graph, F: BallFamily, x: int, y: int) -> frozenset[int]:
    common = F[x] & F[y]
    return common - _union(F, F[y] - F[x]) - {x}

def p_set(G: Graph, F: BallFamily, x: int, y: int, s: Optional[frozenset[int]] = None) -> frozenset[int]:
    if s is None:
        s = s_set(G, F, x, y)
    return F[x] & F[y] & _union(F, s)

def n_set(G: Graph, F: BallFamily, x: int, y: int, p: Optional[frozenset[int]] = None) -> frozenset[int]:
    """
    Candidate root neighbourhood of ``x`` given that ``xy`` is a root edge.

    An empty ``P`` leaves ``B_x & B_y`` untouched.
    """
    if p is None:
        p = p_set(G, F, x, y)
    common = F[x] & F[y]
    return reduce(lambda acc, v: acc & F[v], p, common) - {x}

def check_tail(F: BallFamily, tail: Sequence[int]) -> None:
    """Raise :class:`TailHypothesisError` naming the first failing inclusion."""
    r = len(tail) - 1
    if r < 1:
        raise TailHypothesisError("a tail needs at least two vertices", 0)
    if len(set(tail)) != len(tail):
        raise TailHypothesisError("tail vertices must be distinct", 0)
    if F[tail[r]] != frozenset(tail):
        raise TailHypothesisError(f"B_{tail[r]} is not the tail vertex set", r)
    for i in range(r):
        outer, inner = F[tail[i]], F[tail[i + 1]]
        if not inner < outer:
            raise TailHypothesisError(
                f"B_{tail[i + 1]} is not a proper subset of B_{tail[i]}", i
            )

def is_tail(G: Graph, F: BallFamily, tail: Sequence[int]) -> bool:
    try:
        check_tail(F, tail)
    except TailHypothesisError:
        return False
    return True

def tail_neighborhoods(G: Graph, F: BallFamily, tail: Sequence[int]) -> TailPartition:
    check_tail(F, tail)
    r = len(tail) - 1
    layers = tuple(
        (F[tail[r - d]] - F[tail[r - d + 1]]) | {tail[d]}
        for d in range(1, r + 1)
    )
    logger.debug(f"tail at {tail[0]}: layer sizes {[len(layer) for layer in layers]}")
    return TailPartition(tail[0], layers)
