from dataclasses import dataclass
from typing import Optional

from girthroot.models.graph import Graph

@dataclass(frozen=True)
class DepthPartition:
    """
    Required distance layers around ``anchor``: ``layers[d-1]`` holds the
    vertices at tree distance ``d`` for ``d = 1..r``, ``overflow`` the rest.
    """
    anchor: int
    layers: tuple[frozenset[int], ...]
    overflow: frozenset[int] = frozenset()

    @property
    def r(self) -> int:
        return len(self.layers)

    def layer(self, d: int) -> frozenset[int]:
        return self.layers[d - 1]

    def covers(self, n: int) -> bool:
        """True iff anchor, layers and overflow partition ``range(n)``."""
        parts = [frozenset([self.anchor]), *self.layers, self.overflow]
        seen: set[int] = set()
        for part in parts:
            if part & seen:
                return False
            seen |= part
        return seen == set(range(n))

    def has_gap(self) -> bool:
        """An empty layer followed by a non-empty deeper one."""
        deeper = [*self.layers, self.overflow]
        for d, part in enumerate(self.layers):
            if not part and any(deeper[d + 1:]):
                return True
        return False

@dataclass(frozen=True)
class TreeRootResult:
    tree: Optional[Graph] = None
    verified: bool = False

    @property
    def found(self) -> bool:
        return self.tree is not None
