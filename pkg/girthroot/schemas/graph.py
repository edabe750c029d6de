from typing import Literal, Optional
from pydantic import BaseModel, conint, validator

# Shared properties
class GraphPayload(BaseModel):
    n: conint(ge=0)
    edges: list[tuple[int, int]] = []

    @validator("edges")
    def canonical_edge_list(cls, v: list[tuple[int, int]], values: dict) -> list[tuple[int, int]]:
        n = values.get("n", 0)
        for a, b in v:
            if not a < b:
                raise ValueError(f"edge ({a}, {b}) must satisfy u < v")
            if a < 0 or b >= n:
                raise ValueError(f"edge ({a}, {b}) out of range for n={n}")
        if any(v[i] >= v[i + 1] for i in range(len(v) - 1)):
            raise ValueError("edges must be sorted and free of duplicates")
        return v

# Graph plus the external vertex names
class LabeledGraphPayload(GraphPayload):
    labels: Optional[list[str]] = None

# Output of the leafless root search
class RootSetPayload(BaseModel):
    r: int
    girth_bound: int
    known_unique: bool
    roots: list[LabeledGraphPayload]

# Output of full recognition
class RecognitionPayload(BaseModel):
    r: int
    kind: Literal["tree", "core", "none"]
    roots: list[LabeledGraphPayload]
    core_multiplicity: int = 0

class TreeRootPayload(BaseModel):
    found: bool
    tree: Optional[LabeledGraphPayload] = None
    verified: bool = False

# Partition file of the restricted tree root command
class PartitionPayload(BaseModel):
    anchor: str
    layers: list[list[str]]
    overflow: list[str] = []

# Output of the exhaustive oracles
class OraclePayload(BaseModel):
    kind: Literal["roots", "trees", "h2c"]
    count: int
    roots: list[LabeledGraphPayload] = []
    coloring: Optional[dict[str, str]] = None
