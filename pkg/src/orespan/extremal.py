"""Deterministic generators for the explicit graph families.

Labeling conventions (kept fixed so graph6 goldens are stable):

* ``gen_H(s)``: cliques on ``0..s-1``, ``s..2s-1``, ``2s..3s-1``; then ``u1 = 3s``,
  ``u2 = 3s+1``.  ``u1`` misses local vertex 0 and ``u2`` misses local vertex 1 of each
  clique; ``u1`` and ``u2`` are nonadjacent.
* ``gen_two_cliques(n)``: clique on ``0..floor(n/2)-1``, clique on the rest, bridge
  between the first vertex of each.
* ``gen_F(a, b, c, d)``: layers laid out consecutively, consecutive layers joined
  completely.
* shape generators put the cycle / path / centre first, then legs or leaves in order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graph import Graph


def _clique_edges(vertices):
    return list(combinations(vertices, 2))


def gen_H(s: int) -> Graph:
    """Three K_s plus two nonadjacent hubs each missing one vertex per clique (n = 3s+2)."""
    if s < 2:
        raise ValueError("gen_H needs s >= 2 so the two hubs can miss distinct vertices")
    u1, u2 = 3 * s, 3 * s + 1
    edges = []
    for k in range(3):
        block = range(k * s, (k + 1) * s)
        edges += _clique_edges(block)
        for local, v in enumerate(block):
            if local != 0:
                edges.append((v, u1))
            if local != 1:
                edges.append((v, u2))
    return Graph.from_edges(3 * s + 2, edges)


def gen_two_cliques(n: int) -> Graph:
    if n < 4:
        raise ValueError("gen_two_cliques needs n >= 4")
    a = n // 2
    edges = _clique_edges(range(a)) + _clique_edges(range(a, n)) + [(0, a)]
    return Graph.from_edges(n, edges)


def gen_F(a: int, b: int, c: int, d: int) -> Graph:
    """Four independent layers, complete bipartite between layers 1-2, 2-3 and 3-4."""
    sizes = (a, b, c, d)
    if min(sizes) < 1:
        raise ValueError("gen_F layer sizes must be >= 1")
    starts = [0, a, a + b, a + b + c]
    layers = [range(starts[i], starts[i] + sizes[i]) for i in range(4)]
    edges = [(u, v) for i in range(3) for u in layers[i] for v in layers[i + 1]]
    return Graph.from_edges(sum(sizes), edges)


def gen_complete_bipartite(a: int, b: int) -> Graph:
    if a < 0 or b < 0:
        raise ValueError("part sizes must be nonnegative")
    return Graph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def gen_jellyfish(cycle: int, tentacles: int) -> Graph:
    """Cycle ``0..cycle-1`` with ``tentacles`` pendant vertices on vertex 0."""
    if cycle < 3 or tentacles < 0:
        raise ValueError("jellyfish needs a cycle of length >= 3")
    edges = [(i, (i + 1) % cycle) for i in range(cycle)]
    edges += [(0, cycle + t) for t in range(tentacles)]
    return Graph.from_edges(cycle + tentacles, edges)


def gen_broom(path: int, leaves: int) -> Graph:
    """Path ``0..path-1`` with ``leaves`` pendant vertices on its last vertex."""
    if path < 1 or leaves < 0:
        raise ValueError("broom needs a path with at least one vertex")
    edges = [(i, i + 1) for i in range(path - 1)]
    edges += [(path - 1, path + t) for t in range(leaves)]
    return Graph.from_edges(path + leaves, edges)


def _attach_legs(center: int, first: int, legs) -> tuple[list[tuple[int, int]], int]:
    edges = []
    nxt = first
    for length in legs:
        if length < 1:
            raise ValueError("legs must have length >= 1")
        prev = center
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return edges, nxt


def gen_spider(legs) -> Graph:
    """Centre 0 with paths of the given lengths."""
    edges, n = _attach_legs(0, 1, legs)
    return Graph.from_edges(n, edges)


def gen_octopus(cycle: int, legs) -> Graph:
    """Cycle ``0..cycle-1`` with paths of the given lengths hanging off vertex 0."""
    if cycle < 3:
        raise ValueError("octopus needs a cycle of length >= 3")
    edges = [(i, (i + 1) % cycle) for i in range(cycle)]
    more, n = _attach_legs(0, cycle, legs)
    return Graph.from_edges(n, edges + more)


FAMILIES = {
    "H": (gen_H, ("s",)),
    "TwoCliques": (gen_two_cliques, ("n",)),
    "F": (gen_F, ("a", "b", "c", "d")),
    "CompleteBipartite": (gen_complete_bipartite, ("a", "b")),
    "Jellyfish": (gen_jellyfish, ("cycle", "tentacles")),
    "Broom": (gen_broom, ("path", "leaves")),
    "Spider": (gen_spider, ("legs",)),
    "Octopus": (gen_octopus, ("cycle", "legs")),
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {sorted(FAMILIES)}")
        _, names = FAMILIES[self.family]
        missing = [p for p in names if p not in self.params]
        extra = [p for p in self.params if p not in names]
        if missing or extra:
            raise ValueError(f"{self.family} takes parameters {names}, got {sorted(self.params)}")


def gen_named(spec: FamilySpec) -> Graph:
    fn, names = FAMILIES[spec.family]
    return fn(*(spec.params[p] for p in names))
