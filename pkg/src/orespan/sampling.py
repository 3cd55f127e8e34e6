"""Random graph models and labeled-graph enumeration for the experiment harness.

Every sampler takes an explicit ``random.Random`` so an instance is a pure function of
``(seed, index)``; see :func:`instance_rng`.
"""
from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph, bits

ER_PROBS = (0.35, 0.45, 0.55)


def instance_rng(seed: int, index: int, stream: str = "") -> random.Random:
    """Independent generator for instance ``index`` (string seeds hash through SHA-512)."""
    return random.Random(f"{seed}/{stream}/{index}")


def _from_adj_sets(n: int, adj: list[set[int]]) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in adj[u] if u < v])


def gnp(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def raise_to_threshold(rng: random.Random, g: Graph, need) -> Graph:
    """Add edges, each between a random nonadjacent pair of minimum degree sum, until
    ``need(sigma2)`` holds.  The result sits just over the threshold."""
    n = g.n
    adj = [set(g.neighbors(v)) for v in range(n)]
    while True:
        deg = [len(a) for a in adj]
        best = None
        worst = []
        for u in range(n):
            for v in range(u + 1, n):
                if v in adj[u]:
                    continue
                s = deg[u] + deg[v]
                if best is None or s < best:
                    best, worst = s, [(u, v)]
                elif s == best:
                    worst.append((u, v))
        if best is None or need(best):
            return _from_adj_sets(n, adj)
        u, v = rng.choice(worst)
        adj[u].add(v)
        adj[v].add(u)


def perturb(rng: random.Random, g: Graph, flips: int) -> Graph:
    """Toggle ``flips`` uniformly chosen vertex pairs."""
    n = g.n
    adj = [set(g.neighbors(v)) for v in range(n)]
    for _ in range(flips):
        u, v = rng.sample(range(n), 2)
        if v in adj[u]:
            adj[u].discard(v)
            adj[v].discard(u)
        else:
            adj[u].add(v)
            adj[v].add(u)
    return _from_adj_sets(n, adj)


def three_blob(rng: random.Random, n: int) -> Graph:
    """Three cliques plus two nonadjacent hubs, each hub missing one random vertex per clique.

    With equal cliques this is the sharpness construction; sizes here are split randomly
    from ``n - 2`` so the blobs are only roughly balanced.
    """
    m = n - 2
    cuts = sorted(rng.sample(range(1, m), 2))
    sizes = [cuts[0], cuts[1] - cuts[0], m - cuts[1]]
    edges = []
    start = 0
    u1, u2 = m, m + 1
    for s in sizes:
        block = list(range(start, start + s))
        edges += combinations(block, 2)
        miss1 = rng.choice(block)
        miss2 = rng.choice([v for v in block if v != miss1] or block)
        edges += [(v, u1) for v in block if v != miss1]
        edges += [(v, u2) for v in block if v != miss2]
        start += s
    return Graph.from_edges(n, edges)


def two_blob(rng: random.Random, n: int) -> Graph:
    """Two cliques joined by a few random edges."""
    a = rng.randint(2, n - 2)
    edges = list(combinations(range(a), 2)) + list(combinations(range(a, n), 2))
    for _ in range(rng.randint(1, 2)):
        edges.append((rng.randrange(a), rng.randrange(a, n)))
    return Graph.from_edges(n, edges)


def near_bipartite(rng: random.Random, a: int, b: int, inner: float = 0.5, drop: int = 0) -> Graph:
    """K_{a,b} (small side 0..a-1) with random edges inside the small side and
    ``drop`` random cross edges removed."""
    cross = [(u, a + v) for u in range(a) for v in range(b)]
    for e in rng.sample(cross, min(drop, len(cross))):
        cross.remove(e)
    inside = [e for e in combinations(range(a), 2) if rng.random() < inner]
    g = Graph.from_edges(a + b, cross + inside)
    perm = list(range(a + b))
    rng.shuffle(perm)
    return g.relabel(perm)


def ore_threshold(n: int):
    return lambda s2: 3 * s2 >= 2 * n - 3


def sample_ore_graph(rng: random.Random, n: int) -> tuple[str, Graph]:
    """One candidate for the Ore-bound sweeps; returns (model name, graph).

    Models: plain G(n, p) for p in ER_PROBS, G(n, p) raised to the threshold, and the
    three-blob construction perturbed and then raised to the threshold.
    """
    r = rng.random()
    if r < 0.4:
        p = rng.choice(ER_PROBS)
        return f"gnp{p}", gnp(rng, n, p)
    if r < 0.7:
        base = gnp(rng, n, rng.uniform(0.15, 0.45))
        return "gnp-raised", raise_to_threshold(rng, base, ore_threshold(n))
    base = perturb(rng, three_blob(rng, n), rng.randint(0, 3))
    return "blob-raised", raise_to_threshold(rng, base, ore_threshold(n))


def sample_connected_ore_graph(rng: random.Random, n: int) -> tuple[str, Graph]:
    """Like :func:`sample_ore_graph` but a third of the planted mass goes to two cliques,
    which are connected without being 2-connected."""
    r = rng.random()
    if r < 0.3:
        base = perturb(rng, two_blob(rng, n), rng.randint(0, 2))
        return "twoblob-raised", raise_to_threshold(rng, base, ore_threshold(n))
    return sample_ore_graph(rng, n)


# ---------------------------------------------------------------------------
# exhaustive enumeration


def pair_table(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 bit order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def labeled_graph(n: int, mask: int, pairs=None) -> Graph:
    """The labeled graph whose edge set is the set bits of ``mask`` (graph6 pair order)."""
    pairs = pairs or pair_table(n)
    adj = [0] * n
    for k in bits(mask):
        i, j = pairs[k]
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return Graph._trusted(n, tuple(adj))


def labeled_graphs(n: int, start: int = 0, stop: int | None = None):
    """Yield ``(mask, graph)`` for all labeled graphs on n vertices with mask in [start, stop)."""
    pairs = pair_table(n)
    stop = 1 << len(pairs) if stop is None else stop
    for mask in range(start, stop):
        yield mask, labeled_graph(n, mask, pairs)

