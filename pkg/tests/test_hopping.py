import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import cycle_graph, graphs
from orespan.certs import Cycle
from orespan.graph import Graph, degree_profile, from_graph6, is_k_connected, ore_main_holds
from orespan.hopping import (
    check_m_clauses,
    compute_xy,
    consecutive_x1_on_cycle,
    find_hopping_paths,
    is_good_path,
    is_hopping_path,
    longest_good_path,
    path_height,
    reduce_hopping_path,
    swap_cycle,
    swap_set,
    verify_hopping_lemma,
)
from orespan.sampling import near_bipartite
from orespan.search import _cycle_through, l_maximal_cycle

A, B, X, Y, Z = 0, 1, 2, 3, 4
K23_CYCLE = Cycle((A, X, B, Y))

# random graph, cycle and a height-2 hopping path on it; both endpoints have X-height 2
# and one endpoint also has Y-height 1
HEIGHT2 = ("I}wt{psBg", (0, 1, 8, 9, 5, 3, 6, 4, 2), (1, 0, 6, 3, 5, 8, 9, 4, 2))
# a hopping path on a cycle whose X_1 contains the consecutive pair 1, 5
CONSEC_X1 = ("GKNDmG", (0, 3, 4, 2, 1, 5, 6), (1, 2, 4, 3, 0, 6, 5))


def c6_plus_z() -> Graph:
    return Graph.from_edges(7, [(i, (i + 1) % 6) for i in range(6)] + [(6, 0), (6, 2), (6, 4)])


# --- independent reference for the chains ---------------------------------------------


def reference_chains(g: Graph, c: Cycle):
    """X_i, Y_i straight from the recurrences, with plain sets."""
    vs = list(c.vertices)
    k = len(vs)
    on = set(vs)
    ys = [set(range(g.n)) - on]
    xs = [set()]
    while True:
        x = {v for v in on if any(g.has_edge(v, u) for u in ys[-1])}
        y = ys[-1] | {vs[i] for i in range(k) if vs[i - 1] in x and vs[(i + 1) % k] in x}
        if x == xs[-1] and y == ys[-1]:
            return xs[1:], ys
        xs.append(x)
        ys.append(y)


def random_cycle(g: Graph, rng: random.Random):
    n = g.n
    if n < 4:
        return None
    req = 0
    for v in rng.sample(range(n), rng.randint(3, n - 1)):
        req |= 1 << v
    seq = _cycle_through(g.adj, g.full, rng.randrange(n), req)
    return None if not seq else Cycle(tuple(seq))


# --- chains ------------------------------------------------------------------------------


def test_k23_state(k23):
    s = compute_xy(k23, K23_CYCLE)
    assert s.limit_x == {A, B}
    assert s.limit_y == {X, Y, Z}
    assert s.height_x[A] == s.height_x[B] == 1
    assert s.height_y[Z] == 0 and s.height_y[X] == s.height_y[Y] == 1


def test_hamiltonian_cycle_has_empty_chains():
    s = compute_xy(Graph.complete(4), Cycle((0, 1, 2, 3)))
    assert s.chain_y[0] == frozenset() and s.limit_x == frozenset() and s.limit_y == frozenset()


def test_c6_plus_vertex():
    s = compute_xy(c6_plus_z(), Cycle(range(6)))
    assert s.x(1) == {0, 2, 4} and s.y(1) == {6, 1, 3, 5}
    assert s.limit_x == {0, 2, 4} and s.limit_y == {6, 1, 3, 5}


def test_state_json_shape(k23):
    d = compute_xy(k23, K23_CYCLE).to_json()
    assert d["limit_x"] == [0, 1] and d["limit_y"] == [2, 3, 4]
    assert d["chain_y"][0] == [4]
    assert d["height_y"]["4"] == 0 and d["height_x"]["4"] is None


def test_compute_xy_rejects_non_cycle(k23):
    with pytest.raises(ValueError):
        compute_xy(k23, Cycle((0, 1, 2)))


@given(graphs(4, 9, p=0.5), st.integers(0, 10**6))
def test_chains_follow_recurrences(g, seed):
    c = random_cycle(g, random.Random(seed))
    if c is None:
        return
    s = compute_xy(g, c)
    xs, ys = reference_chains(g, c)
    assert s.limit_x == (xs[-1] if xs else set()) and s.limit_y == ys[-1]
    for i in range(1, len(xs) + 2):
        assert s.x(i) <= s.x(i + 1) and s.y(i - 1) <= s.y(i)
        if i <= len(xs):
            assert s.x(i) == xs[i - 1] and s.y(i) == ys[i]
    assert s.iterations <= g.n
    for v in range(g.n):
        hx = next((i + 1 for i, x in enumerate(xs) if v in x), float("inf"))
        hy = next((i for i, y in enumerate(ys) if v in y), float("inf"))
        assert s.height_x[v] == hx and s.height_y[v] == hy


# --- good paths -----------------------------------------------------------------------


def brute_good(g: Graph, p) -> bool:
    where = {v: i for i, v in enumerate(p)}
    for end in (p[0], p[-1]):
        nb = [u for u in range(g.n) if g.has_edge(end, u)]
        if any(u not in where for u in nb):
            return False
        idx = sorted(where[u] for u in nb)
        if any(b - a == 1 for a, b in zip(idx, idx[1:])):
            return False
    return True


def brute_longest_good(g: Graph) -> int:
    best = 0
    for k in range(1, g.n + 1):
        for p in itertools.permutations(range(g.n), k):
            if all(g.has_edge(a, b) for a, b in zip(p, p[1:])) and brute_good(g, p):
                best = max(best, k)
    return best


def test_good_path_examples(k23):
    assert is_good_path(cycle_graph(5), (0, 1, 2, 3, 4))
    assert not is_good_path(k23, (A, X, B))
    assert is_good_path(Graph.complete(2), (0, 1))
    with pytest.raises(ValueError):
        is_good_path(k23, (A, B))


def test_longest_good_path_examples(k23):
    assert longest_good_path(k23) == 5
    assert is_good_path(k23, (X, A, Y, B, Z))
    # in K3 every end neighbourhood is a consecutive pair or leaves the path
    assert longest_good_path(Graph.complete(3)) == 0 == brute_longest_good(Graph.complete(3))
    assert longest_good_path(Graph.empty(4)) == 1


@given(graphs(1, 6, p=0.5))
def test_longest_good_path_matches_brute_force(g):
    assert longest_good_path(g) == brute_longest_good(g)


# --- hopping paths ---------------------------------------------------------------------


def test_k23_cut_cycle_fails_h1(k23):
    ok, bad = is_hopping_path(k23, K23_CYCLE, (A, X, B, Y))
    assert not ok and bad == ["H1"]


def test_non_covering_path_fails_h3(k23):
    ok, bad = is_hopping_path(k23, K23_CYCLE, (X, A, Y))
    assert not ok and "H3" in bad


def test_synthesised_hopping_path_is_recognised():
    g6, cyc, p = HEIGHT2
    g, c = from_graph6(g6), Cycle(cyc)
    ok, bad = is_hopping_path(g, c, p)
    assert ok and bad == []
    assert path_height(compute_xy(g, c), p) == 2


def test_reduce_height_two_instance():
    g6, cyc, p = HEIGHT2
    g, c = from_graph6(g6), Cycle(cyc)
    res = reduce_hopping_path(g, c, p)
    assert res.height == 1
    assert is_hopping_path(g, c, res.vertices) == (True, [])


def test_reduce_leaves_height_one_unchanged():
    g6, cyc, p = HEIGHT2
    g, c = from_graph6(g6), Cycle(cyc)
    low = reduce_hopping_path(g, c, p).vertices
    assert reduce_hopping_path(g, c, low).vertices == low


def test_reduce_rejects_consecutive_x1():
    g6, cyc, p = CONSEC_X1
    g, c = from_graph6(g6), Cycle(cyc)
    assert is_hopping_path(g, c, p)[0]
    assert consecutive_x1_on_cycle(c, compute_xy(g, c)) is not None
    with pytest.raises(ValueError, match="consecutive"):
        reduce_hopping_path(g, c, p)


def test_reduce_rejects_non_hopping_input(k23):
    with pytest.raises(ValueError):
        reduce_hopping_path(k23, K23_CYCLE, (A, X, B, Y))


@given(st.integers(0, 10**9))
def test_reduction_on_random_instances(seed):
    rng = random.Random(seed)
    for _ in range(40):
        n = rng.randint(6, 9)
        g = Graph.from_edges(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < 0.4])
        c = random_cycle(g, rng)
        if c is None or c.length == n:
            continue
        s = compute_xy(g, c)
        if consecutive_x1_on_cycle(c, s) is not None:
            continue
        for p in find_hopping_paths(g, c, s, limit=16):
            res = reduce_hopping_path(g, c, p, s)
            assert res.height == 1 == path_height(s, res.vertices)
            assert is_hopping_path(g, c, res.vertices, s) == (True, [])


# --- M1-M3 ------------------------------------------------------------------------------


def test_k23_lemma_passes(k23):
    rep = verify_hopping_lemma(k23, K23_CYCLE)
    assert rep.outcome == "pass"
    assert rep.m1.passed and rep.m2.passed and rep.m3.passed


def test_pendant_triangle_fails_hypothesis():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)])
    rep = verify_hopping_lemma(g, Cycle((0, 1, 2)))
    assert rep.outcome == "hypothesis_failed" and not rep.good_path_ok
    assert len(rep.long_good_path) >= 5 and is_good_path(g, rep.long_good_path)
    assert rep.to_json()["M1"] is None


def test_m_clauses_report_witnesses():
    # C5 plus a vertex adjacent to two consecutive cycle vertices: X_1 = {0, 1}
    g = Graph.from_edges(6, [(i, (i + 1) % 5) for i in range(5)] + [(5, 0), (5, 1)])
    m1, _, _ = check_m_clauses(g, Cycle(range(5)), compute_xy(g, Cycle(range(5))))
    assert not m1.passed and set(m1.witness) == {0, 1}


@given(st.integers(0, 10**9))
def test_lemma_holds_when_hypothesis_holds(seed):
    rng = random.Random(seed)
    a = rng.randint(2, 4)
    g = near_bipartite(rng, a, rng.randint(a + 1, a + 3), inner=rng.random(), drop=rng.randint(0, 2))
    try:
        c, _ = l_maximal_cycle(g, ())
    except ValueError:  # dropped edges can leave a forest
        return
    rep = verify_hopping_lemma(g, c)
    if rep.outcome == "hypothesis_failed":
        return
    assert rep.outcome == "pass"
    assert consecutive_x1_on_cycle(c, rep.state) is None
    assert find_hopping_paths(g, c, rep.state, limit=1) == []


# --- swapping ----------------------------------------------------------------------------


def test_k23_swap(k23):
    assert swap_set(k23, K23_CYCLE, Z) == {X, Y}
    c2 = swap_cycle(k23, K23_CYCLE, X, Z)
    assert c2 == Cycle((A, Z, B, Y))
    before, after = compute_xy(k23, K23_CYCLE), compute_xy(k23, c2)
    assert before.limit_x == after.limit_x and before.limit_y == after.limit_y
    assert swap_cycle(k23, c2, Z, X) == K23_CYCLE


def test_swap_set_examples():
    assert swap_set(c6_plus_z(), Cycle(range(6)), 6) == {1, 3, 5}
    g = Graph.from_edges(6, [(i, (i + 1) % 5) for i in range(5)] + [(5, 0)])
    assert swap_set(g, Cycle(range(5)), 5) == frozenset()


def test_swap_errors(k23):
    with pytest.raises(ValueError):
        swap_set(k23, K23_CYCLE, A)
    with pytest.raises(ValueError):
        swap_cycle(k23, K23_CYCLE, A, Z)


@given(st.integers(0, 10**9))
def test_swap_invariance_under_ambient_hypotheses(seed):
    rng = random.Random(seed)
    a = rng.randint(2, 4)
    g = near_bipartite(rng, a, rng.randint(a + 1, 2 * a + 1), inner=rng.random(), drop=rng.randint(0, 2))
    prof = degree_profile(g)
    if not (is_k_connected(g, 2) and ore_main_holds(g.n, prof.sigma2)):
        return
    low = prof.low_set
    c, _ = l_maximal_cycle(g, low)
    if not g.induced_is_edgeless(g.full & ~c.mask):
        return
    s = compute_xy(g, c)
    for u in range(g.n):
        if u in c:
            continue
        for v in swap_set(g, c, u) - low:
            c2 = swap_cycle(g, c, v, u)
            if not g.induced_is_edgeless(g.full & ~c2.mask):
                continue
            s2 = compute_xy(g, c2)
            assert (s2.limit_x, s2.limit_y) == (s.limit_x, s.limit_y)
            # u sits at v's old position
            assert c2.length == c.length and u in c2 and v not in c2
