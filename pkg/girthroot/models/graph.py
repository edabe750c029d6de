from __future__ import annotations

from dataclasses import dataclass, field
from functools import total_ordering
from typing import Iterable, Iterator, Optional, Sequence

Edge = tuple[int, int]

@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph on the dense vertex ids ``0..n-1``.

    ``adj[v]`` is the sorted tuple of neighbours of ``v``. Instances are
    immutable; build them through :meth:`from_edges`.
    """
    n: int
    adj: tuple[tuple[int, ...], ...]
    _sets: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        sets = tuple(frozenset(nbrs) for nbrs in self.adj)
        for v, nbrs in enumerate(self.adj):
            if len(sets[v]) != len(nbrs):
                raise ValueError(f"duplicate neighbour at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise ValueError(f"vertex id {u} out of range")
                if u == v:
                    raise ValueError(f"self-loop at vertex {v}")
                if v not in sets[u]:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "_sets", sets)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @classmethod
    def from_neighbor_sets(cls, neighbor_sets: Sequence[Iterable[int]]) -> Graph:
        return cls(len(neighbor_sets), tuple(tuple(sorted(s)) for s in neighbor_sets))

    def neighbors(self, v: int) -> frozenset[int]:
        return self._sets[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[Edge]:
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    @property
    def num_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def min_degree(self) -> int:
        return min((len(nbrs) for nbrs in self.adj), default=0)

    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self.adj), default=0)

@total_ordering
@dataclass(frozen=True)
class Girth:
    """Shortest cycle length; ``value is None`` means the graph is acyclic."""
    value: Optional[int] = None

    def __post_init__(self) -> None:
        if self.value is not None and self.value < 3:
            raise ValueError("a finite girth is at least 3")

    @property
    def is_acyclic(self) -> bool:
        return self.value is None

    def __lt__(self, other: object) -> bool:
        other_value = other.value if isinstance(other, Girth) else other
        if self.value is None:
            return False
        if other_value is None:
            return True
        return self.value < other_value

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Girth):
            return self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __str__(self) -> str:
        return "acyclic" if self.value is None else str(self.value)

ACYCLIC = Girth(None)

@dataclass(frozen=True)
class VertexLabeling:
    """Bijection between external string labels and internal vertex ids."""
    labels: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        index = {label: i for i, label in enumerate(self.labels)}
        if len(index) != len(self.labels):
            raise ValueError("vertex labels must be unique")
        object.__setattr__(self, "_index", index)

    @classmethod
    def identity(cls, n: int) -> VertexLabeling:
        return cls(tuple(str(i) for i in range(n)))

    def id_of(self, label: str) -> int:
        return self._index[label]

    def label_of(self, vertex: int) -> str:
        return self.labels[vertex]

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def __len__(self) -> int:
        return len(self.labels)

@dataclass(frozen=True)
class InducedSubgraph:
    """A subgraph together with the original id of each of its vertices."""
    graph: Graph
    vertices: tuple[int, ...]

    def to_global(self, local: int) -> int:
        return self.vertices[local]

    def local_ids(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.vertices)}
