from dataclasses import dataclass, field
from typing import Literal

from girthroot.models.graph import Graph

@dataclass(frozen=True)
class CoreDecomposition:
    """
    Core vertices plus, for every other vertex, the core vertex its hanging
    tree is attached to and its depth in that tree. Vertices deeper than
    ``r`` are listed in ``deep_tail`` and carry a link but no depth.
    """
    core: frozenset[int]
    link: dict[int, int] = field(default_factory=dict)
    depth: dict[int, int] = field(default_factory=dict)
    deep_tail: frozenset[int] = frozenset()

    def hanging(self, v: int) -> frozenset[int]:
        return frozenset(u for u, owner in self.link.items() if owner == v)

    def depth_set(self, v: int, d: int) -> frozenset[int]:
        return frozenset(u for u in self.hanging(v) if self.depth.get(u) == d)

RecognitionKind = Literal["tree", "core", "none"]

@dataclass(frozen=True)
class RecognitionResult:
    r: int
    kind: RecognitionKind
    roots: tuple[Graph, ...] = ()
    # leafless roots found for the core before attachment
    core_multiplicity: int = 0

    @property
    def is_power(self) -> bool:
        return bool(self.roots)
