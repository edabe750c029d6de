from typing import Optional
from pydantic import BaseModel, conint, confloat, root_validator

# Seeded generation policy, accepted as flags or as a JSON blob
class GenConfig(BaseModel):
    seed: conint(ge=0, lt=2**64) = 0
    r: conint(ge=1) = 2
    girth: Optional[conint(ge=3)] = None

    # leafless part
    n_target: conint(ge=3) = 30
    max_ear_slack: conint(ge=0) = 3

    # hanging trees
    tree_probability: confloat(ge=0.0, le=1.0) = 0.0
    max_tree_size: conint(ge=1) = 6
    max_tree_depth: conint(ge=1) = 4
    deep_tails: conint(ge=0) = 0

    # hypergraph instances
    h2c_n: conint(ge=1, le=20) = 6
    h2c_m: conint(ge=1) = 4
    min_subset_size: conint(ge=1) = 2
    max_subset_size: conint(ge=1) = 4
    force_singleton: bool = False

    @root_validator(skip_on_failure=True)
    def subset_sizes(cls, values: dict) -> dict:
        if values["min_subset_size"] > values["max_subset_size"]:
            raise ValueError("min_subset_size exceeds max_subset_size")
        return values

    @property
    def g(self) -> int:
        """Girth target; the class bound ``2r + 3`` unless overridden."""
        return self.girth if self.girth is not None else 2 * self.r + 3
