import logging

import pytest

from girthroot.models.graph import Graph
from girthroot.models.hypergraph import Coloring, H2CInstance
from girthroot.services import graphs

logging.basicConfig(level=logging.DEBUG)
logger = logging.getLogger(__name__)

@pytest.fixture
def pendant_cycle():
    """``C_g`` with a pendant path of ``length`` new vertices at ``anchor``."""
    def _build(g: int, length: int, anchor: int = 0) -> Graph:
        return graphs.with_pendant_path(graphs.cycle(g), anchor, length)
    return _build

@pytest.fixture
def split_instance() -> H2CInstance:
    """Elements x_1..x_4 with subsets {x1,x2}, {x1,x3,x4}, {x2,x4}."""
    return H2CInstance(4, (frozenset({0, 1}), frozenset({0, 2, 3}), frozenset({1, 3})))

@pytest.fixture
def split_coloring() -> Coloring:
    """x1 and x4 get colour A, x2 and x3 colour B."""
    return Coloring(("A", "B", "B", "A"))

@pytest.fixture
def c9() -> Graph:
    return graphs.cycle(9)

@pytest.fixture
def c9_cubed(c9: Graph) -> Graph:
    return graphs.graph_power(c9, 3)

@pytest.fixture
def triangle() -> Graph:
    return graphs.complete(3)

@pytest.fixture
def write_file(tmp_path):
    def _write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write
