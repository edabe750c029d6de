from dataclasses import dataclass, field
from typing import Literal, Optional

from girthroot.models.graph import Graph

Color = Literal["A", "B"]
COLORS: tuple[Color, Color] = ("A", "B")

@dataclass(frozen=True)
class H2CInstance:
    """
    Set-splitting instance over the elements ``0..n-1``. Roles and files
    number elements and subsets from 1.
    """
    n: int
    subsets: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        for j, subset in enumerate(self.subsets, start=1):
            if not subset:
                raise ValueError(f"subset {j} is empty")
            if not all(0 <= x < self.n for x in subset):
                raise ValueError(f"subset {j} names an element outside 1..{self.n}")

    @property
    def m(self) -> int:
        return len(self.subsets)

    def incidence_count(self) -> int:
        return sum(len(s) for s in self.subsets)

@dataclass(frozen=True)
class Coloring:
    """Per-element colour; ``None`` marks an element no rule reached."""
    colors: tuple[Optional[Color], ...]

    @classmethod
    def from_sets(cls, n: int, color_a: set[int]) -> "Coloring":
        return cls(tuple("A" if x in color_a else "B" for x in range(n)))

    def is_complete(self) -> bool:
        return None not in self.colors

    def is_valid(self, inst: H2CInstance) -> bool:
        """Every subset holds both colours."""
        if len(self.colors) != inst.n:
            return False
        return all({self.colors[x] for x in s} >= {"A", "B"} for s in inst.subsets)

@dataclass(frozen=True)
class LabeledGadget:
    """A reduction graph plus the role name of every vertex."""
    graph: Graph
    roles: tuple[str, ...]
    _ids: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.roles) != self.graph.n:
            raise ValueError("every vertex needs a role")
        ids = {role: v for v, role in enumerate(self.roles)}
        if len(ids) != len(self.roles):
            raise ValueError("roles must be distinct")
        object.__setattr__(self, "_ids", ids)

    def id_of(self, role: str) -> int:
        return self._ids[role]

    def role_of(self, v: int) -> str:
        return self.roles[v]

    def role_map(self) -> dict[str, str]:
        return {str(v): role for v, role in enumerate(self.roles)}
