import itertools

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import cycle_graph, graphs, path_graph, petersen
from oracles import brute_sigma2, nx_is_k_connected, to_nx
from orespan.errors import GraphParseError
from orespan.extremal import gen_F, gen_H, gen_two_cliques
from orespan.graph import (
    INFINITE,
    Graph,
    VertexClass,
    check_conditions,
    connectivity,
    degree_profile,
    from_edge_list,
    from_graph6,
    is_k_connected,
    parse_graph,
    sigma2,
    sniff_format,
    to_dot,
    to_edge_list,
    to_graph6,
)


# --- construction and validation ---------------------------------------------------


def test_rejects_asymmetric_adjacency():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))


def test_rejects_self_loop_in_adjacency():
    with pytest.raises(ValueError):
        Graph(2, (0b01, 0b00))


def test_vertex_cap_is_configurable():
    with pytest.raises(ValueError):
        Graph.from_edges(70, [])
    assert Graph.from_edges(70, [(0, 69)], cap=128).n == 70
    with pytest.raises(ValueError):
        Graph.from_edges(130, [], cap=200)


# --- parsing -------------------------------------------------------------------------


def test_graph6_empty_on_five():
    g = parse_graph("D??", "graph6")
    assert g.n == 5 and g.num_edges() == 0


def test_edge_list_triangle():
    g = parse_graph("0 1\n1 2\n2 0", "edge-list")
    assert g.n == 3 and g.is_complete()


def test_petersen_graph6_round_trip_matches_networkx():
    g = petersen()
    ours = to_graph6(g)
    theirs = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert ours == theirs
    assert to_graph6(from_graph6(theirs)) == theirs


@pytest.mark.parametrize("n", [0, 1, 2, 7, 62, 63, 64])
def test_graph6_size_prefixes_match_networkx(n):
    g = Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], cap=64)
    expect = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert to_graph6(g) == expect
    assert from_graph6(expect) == g


def test_graph6_header_accepted():
    assert from_graph6(">>graph6<<D??").n == 5


@pytest.mark.parametrize(
    "text, offset",
    [("D?", 2), ("D?\x01?", 2), ("", 0)],
)
def test_graph6_errors_carry_offset(text, offset):
    with pytest.raises(GraphParseError) as info:
        from_graph6(text)
    assert info.value.offset == offset


def test_graph6_rejects_nonzero_padding():
    # n=2 has one edge bit; the remaining five bits of the byte must be zero
    with pytest.raises(GraphParseError):
        from_graph6("A" + chr(63 + 0b100001))


@pytest.mark.parametrize("text", ["0 0\n", "0 1\n1 0\n", "0 1\n0 1\n", "0 x\n", "0 1 2\n"])
def test_edge_list_rejects_bad_input(text):
    with pytest.raises(GraphParseError):
        from_edge_list(text)


def test_edge_list_vertex_count_line_keeps_isolated_vertices():
    g = from_edge_list("5\n0 1\n")
    assert g.n == 5 and g.num_edges() == 1
    assert from_edge_list(to_edge_list(g)) == g


def test_sniff_format():
    assert sniff_format("D??\n") == "graph6"
    assert sniff_format("0 1\n") == "edge-list"


def test_dot_lists_every_edge():
    dot = to_dot(cycle_graph(4), highlight=[(0, 1)])
    assert dot.startswith("graph G {")
    assert "0 -- 1 [penwidth=3];" in dot and "2 -- 3;" in dot


@given(graphs(0, 12))
def test_graph6_round_trip(g):
    assert from_graph6(to_graph6(g)) == g


@given(graphs(1, 10))
def test_edge_list_round_trip(g):
    assert from_edge_list(to_edge_list(g)) == g


# --- degree profile -----------------------------------------------------------------


def test_path_sigma2():
    prof = degree_profile(path_graph(4))
    assert prof.sigma2 == 2 and prof.delta == 1
    assert set(prof.sigma2_pair) == {0, 3}


def test_h2_degrees():
    g = gen_H(2)
    prof = degree_profile(g)
    assert g.n == 8 and prof.delta == 2
    assert prof.sigma2 == brute_sigma2(g) == 4


def test_complete_graph_sigma2_infinite():
    prof = degree_profile(Graph.complete(6))
    assert prof.sigma2 == INFINITE and prof.sigma2_pair is None
    assert prof.low_set == frozenset()


def test_classification_high_needs_witness():
    # star K_{1,5}: leaves have degree 1, 3*1 <= 6-2 so they are low; the centre is
    # adjacent to every leaf, and each leaf misses the other (low) leaves
    g = Graph.from_edges(6, [(0, i) for i in range(1, 6)])
    prof = degree_profile(g)
    assert prof.classification[0] is VertexClass.NORMAL
    assert all(prof.classification[v] is VertexClass.LOW for v in range(1, 6))
    assert prof.high_witness == {}


def test_classification_high():
    # pendant vertex 4 is low (3*1 <= 3); vertices 1 and 2 miss it
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3), (0, 4)])
    prof = degree_profile(g)
    assert prof.classification[4] is VertexClass.LOW
    assert prof.classification[1] is VertexClass.HIGH
    assert prof.high_witness[1] == 4
    assert prof.classification[0] is VertexClass.NORMAL


@given(graphs(2, 9))
def test_sigma2_is_witnessed(g):
    s2, pair = sigma2(g)
    if s2 == INFINITE:
        assert g.is_complete() and pair is None
    else:
        u, v = pair
        assert not g.has_edge(u, v) and u != v
        assert g.degree(u) + g.degree(v) == s2 == brute_sigma2(g)


@given(graphs(2, 10))
def test_low_set_definition_and_clique(g):
    prof = degree_profile(g)
    if prof.sigma2 == INFINITE:
        return
    assert prof.low_set == {v for v in range(g.n) if 2 * g.degree(v) < prof.sigma2}
    assert prof.degree_low == {v for v in range(g.n) if 3 * g.degree(v) <= g.n - 2}
    if 3 * prof.sigma2 >= 2 * g.n - 3:
        for u, v in itertools.combinations(sorted(prof.low_set), 2):
            assert g.has_edge(u, v)


@given(graphs(2, 10, p=0.7))
def test_ore_pairs_degree_inequality(g):
    s2, _ = sigma2(g)
    if s2 == INFINITE or 3 * s2 < 2 * g.n - 3:
        return
    for u, v in itertools.combinations(range(g.n), 2):
        if g.has_edge(u, v):
            continue
        du, dv = sorted((g.degree(u), g.degree(v)))
        assert du + 2 * dv >= g.n - 1


@given(graphs(1, 9))
def test_classes_follow_definitions(g):
    prof = degree_profile(g)
    for v, cls in prof.classification.items():
        d = g.degree(v)
        if cls is VertexClass.LOW:
            assert 3 * d <= g.n - 2
        else:
            assert 3 * d >= g.n - 1
        if cls is VertexClass.HIGH:
            w = prof.high_witness[v]
            assert w in prof.degree_low and not g.has_edge(v, w)


# --- connectivity -------------------------------------------------------------------


def test_c5_two_connected():
    assert is_k_connected(cycle_graph(5), 2)


def test_two_k7_not_two_connected():
    g = gen_two_cliques(14)
    assert is_k_connected(g, 1) and not is_k_connected(g, 2)


def test_f3333_three_connected():
    g = gen_F(3, 3, 3, 3)
    assert is_k_connected(g, 3) == nx_is_k_connected(g, 3) is True


def test_k_out_of_range():
    with pytest.raises(ValueError):
        is_k_connected(cycle_graph(5), 4)


def test_small_graphs_are_not_k_connected():
    assert not is_k_connected(Graph.complete(2), 2)
    assert is_k_connected(Graph.complete(3), 2)
    assert connectivity(Graph.complete(3)) == 2


@given(graphs(1, 8))
def test_k_connectivity_matches_networkx(g):
    for k in (1, 2, 3):
        assert is_k_connected(g, k) == nx_is_k_connected(g, k)


# --- threshold checks ---------------------------------------------------------------


def test_h4_conditions():
    c = check_conditions(gen_H(4))
    assert (c.sigma2, c.delta) == (8, 4)
    assert not c.meets_ore_main  # 24 < 25
    assert not c.meets_dirac_cor  # 12 < 13
    assert c.connectivity == 2


def test_complete_meets_ore_vacuously():
    assert check_conditions(Graph.complete(14)).meets_ore_main


def test_two_cliques_conditions():
    c = check_conditions(gen_two_cliques(14))
    assert c.sigma2 == 12 and c.meets_ore_main and c.connectivity == 1


@given(st.integers(1, 60), st.integers(0, 60))
def test_threshold_arithmetic_is_integral(n, s2):
    from orespan.graph import ore_main_holds

    assert ore_main_holds(n, s2) == (s2 >= (2 * n - 3) / 3)
