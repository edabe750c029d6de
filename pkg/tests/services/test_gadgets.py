import itertools

import pytest

from girthroot.core.errors import GraphFormatError, InvalidColoringError, OracleLimitError, UsageError
from girthroot.models.hypergraph import Coloring, H2CInstance
from girthroot.schemas.generator import GenConfig
from girthroot.services import generators, graphs
from girthroot.services.gadgets import (
    build_G,
    build_H,
    build_K,
    expected_girth,
    extract_coloring,
    format_h2c,
    h2c_bruteforce,
    parse_coloring,
    parse_h2c,
    reduction_holds,
    tail_role,
    verify_reduction,
    vertex_count,
)

def _valid_colorings(inst: H2CInstance):
    for word in itertools.product("AB", repeat=inst.n):
        c = Coloring(word)
        if c.is_valid(inst):
            yield c

@pytest.mark.parametrize("r, count", [(5, 36), (4, 39)])
def test_vertex_counts(split_instance: H2CInstance, r: int, count: int) -> None:
    assert build_K(split_instance, r).graph.n == count
    assert vertex_count(split_instance, r) == count

@pytest.mark.parametrize("r", [2, 3, 4, 5, 6, 7])
def test_vertex_count_formula_matches_construction(split_instance: H2CInstance, r: int) -> None:
    assert build_K(split_instance, r).graph.n == vertex_count(split_instance, r)

def test_degenerate_paths_for_small_r(split_instance: H2CInstance) -> None:
    K = build_K(split_instance, 3)
    assert K.graph.has_edge(K.id_of("S_1"), K.id_of("x_1"))
    assert not any(role.startswith(("T_", "P_")) for role in K.roles)

def test_gadgets_need_r_two(split_instance: H2CInstance) -> None:
    with pytest.raises(UsageError):
        build_K(split_instance, 1)

@pytest.mark.parametrize("r", [4, 5])
def test_colored_gadget_girth(split_instance: H2CInstance, split_coloring: Coloring, r: int) -> None:
    H = build_H(split_instance, r, split_coloring)
    assert graphs.girth(H.graph) == expected_girth(r) == 6

def test_even_gadget_attaches_both_sides(split_instance: H2CInstance, split_coloring: Coloring) -> None:
    H = build_H(split_instance, 4, split_coloring)
    for i in range(1, 5):
        ends = [H.id_of(f"P_{{{i},{c}}}^(1)") for c in "AB"]
        hubs = {H.role_of(w) for v in ends for w in H.graph.neighbors(v)} & {"A", "B", "A'", "B'"}
        assert len(hubs) == 2

def test_build_h_needs_complete_coloring(split_instance: H2CInstance) -> None:
    with pytest.raises(InvalidColoringError):
        build_H(split_instance, 5, Coloring(("A", None, "B", "A")))

def test_g_edges_odd(split_instance: H2CInstance) -> None:
    G = build_G(split_instance, 5)
    a = G.id_of("A")
    assert G.graph.has_edge(a, G.id_of(tail_role(1, 1)))
    assert not G.graph.has_edge(a, G.id_of(tail_role(1, 2)))
    assert not G.graph.has_edge(a, G.id_of("B"))

def test_g_edges_even(split_instance: H2CInstance) -> None:
    G = build_G(split_instance, 4)
    a = G.id_of("A")
    assert not G.graph.has_edge(a, G.id_of(tail_role(1, 1)))
    assert not G.graph.has_edge(a, G.id_of("B"))
    assert G.graph.has_edge(a, G.id_of("B'"))

@pytest.mark.parametrize("r", [4, 5])
def test_verify_reduction(split_instance: H2CInstance, split_coloring: Coloring, r: int) -> None:
    assert verify_reduction(split_instance, r, split_coloring)

def test_invalid_coloring_is_a_negative_control(split_instance: H2CInstance) -> None:
    all_a = Coloring(("A",) * 4)
    with pytest.raises(InvalidColoringError):
        verify_reduction(split_instance, 5, all_a)
    assert not reduction_holds(split_instance, 5, all_a)

@pytest.mark.parametrize("seed", range(3))
@pytest.mark.parametrize("r", [2, 3, 4, 5, 6, 7])
def test_reduction_on_generated_instances(seed: int, r: int) -> None:
    inst = generators.random_h2c_instance(GenConfig(seed=seed, h2c_n=5, h2c_m=3))
    for c in _valid_colorings(inst):
        assert verify_reduction(inst, r, c)

@pytest.mark.parametrize("r", [4, 5, 6, 7])
def test_extract_recovers_coloring(split_instance: H2CInstance, r: int) -> None:
    for c in _valid_colorings(split_instance):
        H = build_H(split_instance, r, c)
        found = extract_coloring(split_instance, r, H.graph)
        assert found == c
        assert found.is_valid(split_instance)

def test_bruteforce_h2c(split_instance: H2CInstance) -> None:
    c = h2c_bruteforce(split_instance)
    assert c is not None and c.is_valid(split_instance)
    assert h2c_bruteforce(H2CInstance(3, (frozenset({0, 1}), frozenset({2})))) is None
    assert h2c_bruteforce(H2CInstance(5, (frozenset({0, 1, 2, 3, 4}),))) is not None

def test_bruteforce_h2c_limit() -> None:
    with pytest.raises(OracleLimitError):
        h2c_bruteforce(H2CInstance(21, (frozenset({0, 1}),)))

def test_forced_singleton_is_uncolorable() -> None:
    inst = generators.random_h2c_instance(GenConfig(seed=4, force_singleton=True))
    assert h2c_bruteforce(inst) is None

def test_h2c_text_format(split_instance: H2CInstance) -> None:
    text = format_h2c(split_instance)
    assert text == "4 3\n1 2\n1 3 4\n2 4\n"
    assert parse_h2c("# comment\n" + text) == split_instance

@pytest.mark.parametrize("text", ["", "2 2\n1 2\n", "2 1\n1 3\n", "2 1\n1 1\n", "x y\n"])
def test_h2c_parse_errors(text: str) -> None:
    with pytest.raises(GraphFormatError):
        parse_h2c(text)

def test_parse_coloring() -> None:
    assert parse_coloring("ab ba", 4) == Coloring(("A", "B", "B", "A"))
    with pytest.raises(UsageError):
        parse_coloring("ABC", 3)
