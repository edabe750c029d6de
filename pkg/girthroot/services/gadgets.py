"""
Reduction gadgets from hypergraph 2-colourability to recognising r-th
powers of graphs with girth above ``r + 1`` (odd r) or ``r + 2`` (even r).

``K`` encodes the instance, ``H`` additionally encodes a colouring and
``G = K^r + E`` is the colouring-independent graph whose roots are sought.
"""
import logging
from typing import Optional

import numpy as np

from girthroot.core.config import settings
from girthroot.core.errors import (
    CorruptRootError,
    GraphFormatError,
    InvalidColoringError,
    OracleLimitError,
    UsageError,
)
from girthroot.models.graph import Graph
from girthroot.models.hypergraph import COLORS, Color, Coloring, H2CInstance, LabeledGadget
from girthroot.services import graphs

logger = logging.getLogger(__name__)

# Role names; element and subset indices are 1-based

def x_role(i: int) -> str:
    return f"x_{i}"

def s_role(j: int) -> str:
    return f"S_{j}"

def t_role(i: int, j: int, l: int) -> str:
    return f"T_{{{i},{j}}}^({l})"

def p_role(i: int, l: int, color: Optional[Color] = None) -> str:
    return f"P_{i}^({l})" if color is None else f"P_{{{i},{color}}}^({l})"

def tail_role(j: int, l: int) -> str:
    return f"S_{j}^({l})"

def _check_r(r: int) -> None:
    if r < 2:
        raise UsageError(f"gadgets need r >= 2, got {r}")

def _memberships(inst: H2CInstance) -> list[tuple[int, int]]:
    """(i, j) pairs with x_i in S_j, 1-based, ordered by subset."""
    return [(x + 1, j) for j, subset in enumerate(inst.subsets, start=1) for x in sorted(subset)]

def _path_colors(r: int) -> tuple[Optional[Color], ...]:
    return COLORS if r % 2 == 0 else (None,)

def _vertex_roles(inst: H2CInstance, r: int) -> list[str]:
    k = r // 2
    elements = range(1, inst.n + 1)
    roles = [x_role(i) for i in elements]
    roles += [s_role(j) for j in range(1, inst.m + 1)]
    roles += ["A", "B", "X"] + (["A'", "B'"] if r % 2 == 0 else [])
    roles += [t_role(i, j, l) for i, j in _memberships(inst) for l in range(1, k)]
    roles += [p_role(i, l, c) for i in elements for c in _path_colors(r) for l in range(1, k)]
    roles += [tail_role(j, l) for j in range(1, inst.m + 1) for l in range(1, r + 1)]
    return roles

def _loose_end(i: int, k: int, color: Optional[Color]) -> str:
    """Last vertex of a loose path from x_i; x_i itself when k = 1."""
    return x_role(i) if k == 1 else p_role(i, k - 1, color)

def _gadget(roles: list[str], named_edges: list[tuple[str, str]]) -> LabeledGadget:
    index = {role: v for v, role in enumerate(roles)}
    graph = Graph.from_edges(len(roles), ((index[a], index[b]) for a, b in named_edges))
    return LabeledGadget(graph, tuple(roles))

def _path(*names: str) -> list[tuple[str, str]]:
    return list(zip(names, names[1:]))

def _k_edges(inst: H2CInstance, r: int) -> list[tuple[str, str]]:
    k = r // 2
    edges: list[tuple[str, str]] = []
    for i, j in _memberships(inst):
        edges += _path(s_role(j), *(t_role(i, j, l) for l in range(1, k)), x_role(i))
    for i in range(1, inst.n + 1):
        for c in _path_colors(r):
            edges += _path(x_role(i), *(p_role(i, l, c) for l in range(1, k)))
        edges.append(("X", x_role(i)))
    for j in range(1, inst.m + 1):
        edges += _path(s_role(j), *(tail_role(j, l) for l in range(1, r + 1)))
    if r % 2 == 0:
        edges += [("A", "A'"), ("B", "B'")]
    return edges

def build_K(inst: H2CInstance, r: int) -> LabeledGadget:
    _check_r(r)
    return _gadget(_vertex_roles(inst, r), _k_edges(inst, r))

def _color_edges(inst: H2CInstance, r: int, c: Coloring) -> list[tuple[str, str]]:
    k = r // 2
    edges = []
    for x, color in enumerate(c.colors):
        i = x + 1
        if r % 2 == 1:
            edges.append((_loose_end(i, k, None), color))
        elif color == "A":
            edges += [(_loose_end(i, k, "A"), "A"), (_loose_end(i, k, "B"), "B'")]
        else:
            edges += [(_loose_end(i, k, "A"), "A'"), (_loose_end(i, k, "B"), "B")]
    return edges

def build_H(inst: H2CInstance, r: int, c: Coloring) -> LabeledGadget:
    _check_r(r)
    if len(c.colors) != inst.n or not c.is_complete():
        raise InvalidColoringError("the colouring must assign every element")
    return _gadget(_vertex_roles(inst, r), _k_edges(inst, r) + _color_edges(inst, r, c))

def _extra_edges(inst: H2CInstance, r: int) -> list[tuple[str, str]]:
    k = r // 2
    targets = ["X"]
    targets += [x_role(i) for i in range(1, inst.n + 1)]
    targets += [s_role(j) for j in range(1, inst.m + 1)]
    targets += [t_role(i, j, l) for i, j in _memberships(inst) for l in range(1, k)]
    targets += [p_role(i, l, c) for i in range(1, inst.n + 1) for c in _path_colors(r) for l in range(1, k)]
    if r % 2 == 1:
        targets += [tail_role(j, 1) for j in range(1, inst.m + 1)]
        sources = ["A", "B"]
        extra = []
    else:
        sources = ["A", "A'", "B", "B'"]
        extra = [("A", "B'"), ("B", "A'")]
    return [(s, t) for s in sources for t in targets] + extra

def build_G(inst: H2CInstance, r: int) -> LabeledGadget:
    K = build_K(inst, r)
    power = graphs.distance_power(K.graph, r)
    extra = _gadget(list(K.roles), _extra_edges(inst, r)).graph
    graph = Graph.from_edges(power.n, [*power.edges(), *extra.edges()])
    return LabeledGadget(graph, K.roles)

def reduction_holds(inst: H2CInstance, r: int, c: Coloring) -> bool:
    """``H^r == G`` edge for edge, without checking the colouring first."""
    H = build_H(inst, r, c)
    return graphs.distance_power(H.graph, r) == build_G(inst, r).graph

def verify_reduction(inst: H2CInstance, r: int, c: Coloring) -> bool:
    if not (c.is_complete() and c.is_valid(inst)):
        raise InvalidColoringError("verify_reduction needs a valid 2-colouring")
    return reduction_holds(inst, r, c)

def extract_coloring(inst: H2CInstance, r: int, H: Graph) -> Coloring:
    """
    Read a colouring off a root ``H`` of ``G``: ``x_i`` takes colour A (B)
    when A (B) is within ``r // 2`` steps. Elements reached by neither stay
    ``None``; the result is valid iff every subset sees both colours.
    """
    k = r // 2
    roles = build_K(inst, r)
    dist = {
        color: graphs.distances_from(H, roles.id_of(color), limit=k) for color in COLORS
    }
    colors: list[Optional[Color]] = []
    for i in range(1, inst.n + 1):
        v = roles.id_of(x_role(i))
        near = [color for color in COLORS if 0 <= dist[color][v] <= k]
        if len(near) == 2:
            raise CorruptRootError(f"{x_role(i)} is within {k} steps of both A and B")
        colors.append(near[0] if near else None)
    return Coloring(tuple(colors))

def h2c_bruteforce(inst: H2CInstance) -> Optional[Coloring]:
    """Some valid 2-colouring, found by checking all of them at once."""
    limit = settings.H2C_BRUTEFORCE_MAX_ELEMENTS
    if inst.n > limit:
        raise OracleLimitError(f"H2C oracle is limited to {limit} elements, got {inst.n}")
    if inst.n == 0:
        return Coloring(()) if not inst.subsets else None
    # element 0 is fixed to colour A; the colour swap covers the rest
    masks = np.arange(2 ** (inst.n - 1), dtype=np.int64) << 1 | 1
    full = (1 << inst.n) - 1
    ok = np.ones(masks.shape, dtype=bool)
    for subset in inst.subsets:
        bits = sum(1 << x for x in subset)
        ok &= (masks & bits) != 0
        ok &= (~masks & full & bits) != 0
    hits = np.flatnonzero(ok)
    logger.debug(f"{len(hits)} of {len(masks)} colourings split every subset")
    if len(hits) == 0:
        return None
    chosen = int(masks[hits[0]])
    return Coloring.from_sets(inst.n, {x for x in range(inst.n) if chosen >> x & 1})

def expected_girth(r: int) -> int:
    return r + 1 if r % 2 == 1 else r + 2

def vertex_count(inst: H2CInstance, r: int) -> int:
    k = r // 2
    incidences = inst.incidence_count()
    if r % 2 == 1:
        return inst.n + inst.m + 3 + (k - 1) * incidences + (k - 1) * inst.n + r * inst.m
    return inst.n + inst.m + 5 + (k - 1) * incidences + 2 * inst.n * (k - 1) + r * inst.m

def parse_h2c(text: str) -> H2CInstance:
    """First line ``n m``, then ``m`` lines of 1-based element indices."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    try:
        n, m = (int(tok) for tok in lines[0])
        subsets = [frozenset(int(tok) - 1 for tok in line) for line in lines[1:]]
    except (IndexError, ValueError) as exc:
        raise GraphFormatError(f"malformed H2C instance: {exc}") from exc
    if len(subsets) != m:
        raise GraphFormatError(f"expected {m} subsets, found {len(subsets)}")
    for j, line in enumerate(lines[1:], start=1):
        if len(set(line)) != len(line):
            raise GraphFormatError(f"subset {j} repeats an element")
    try:
        return H2CInstance(n, tuple(subsets))
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc

def format_h2c(inst: H2CInstance) -> str:
    lines = [f"{inst.n} {inst.m}"]
    lines += [" ".join(str(x + 1) for x in sorted(s)) for s in inst.subsets]
    return "\n".join(lines) + "\n"

def parse_coloring(text: str, n: int) -> Coloring:
    """A word over ``{A, B}`` such as ``ABBA``; whitespace is ignored."""
    word = "".join(text.split()).upper()
    if len(word) != n or set(word) - {"A", "B"}:
        raise UsageError(f"colouring must be {n} letters from A and B")
    return Coloring(tuple(word))
