from dataclasses import dataclass

from girthroot.models.graph import Graph

@dataclass(frozen=True)
class RootSet:
    """Verified roots of one graph, distinct and ordered by canonical edges."""
    r: int
    girth_bound: int
    roots: tuple[Graph, ...] = ()

    def __len__(self) -> int:
        return len(self.roots)

    def __bool__(self) -> bool:
        return bool(self.roots)

@dataclass(frozen=True)
class MultiplicityReport:
    count: int
    max_degree: int
    within_degree_bound: bool
    uniqueness_proven: bool
