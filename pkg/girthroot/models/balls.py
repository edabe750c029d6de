from dataclasses import dataclass
from typing import Iterator

from girthroot.models.graph import Graph

@dataclass(frozen=True)
class BallFamily:
    """Closed neighbourhoods ``B_v = N_G(v) | {v}`` of one graph."""
    graph: Graph
    balls: tuple[frozenset[int], ...]

    def __getitem__(self, v: int) -> frozenset[int]:
        return self.balls[v]

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.balls)

    def __len__(self) -> int:
        return len(self.balls)

@dataclass(frozen=True)
class TailPartition:
    """The ``d``-neighbourhoods of ``anchor`` for ``d = 1..r`` (index ``d-1``)."""
    anchor: int
    layers: tuple[frozenset[int], ...]

    def layer(self, d: int) -> frozenset[int]:
        return self.layers[d - 1]
