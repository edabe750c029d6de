from typing import Optional
from pydantic import BaseModel, validator

from girthroot.schemas.graph import GraphPayload

class GadgetPayload(BaseModel):
    graph: GraphPayload
    roles: dict[str, str]

    @validator("roles")
    def total_role_map(cls, v: dict[str, str], values: dict) -> dict[str, str]:
        graph = values.get("graph")
        if graph is not None and sorted(v, key=int) != [str(i) for i in range(graph.n)]:
            raise ValueError("role map must name every vertex exactly once")
        if len(set(v.values())) != len(v):
            raise ValueError("roles must be distinct")
        return v

# Output of the gadget command
class ReductionPayload(BaseModel):
    r: int
    G: GadgetPayload
    H: Optional[GadgetPayload] = None
    coloring: Optional[dict[str, str]] = None
    verified: Optional[bool] = None
    colorable: Optional[bool] = None
