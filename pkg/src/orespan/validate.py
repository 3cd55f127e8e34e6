"""Certificate checkers.

These deliberately use nothing from the search code: only ``Graph.has_edge`` and plain
Python sets.  Each returns a list of problems; an empty list means the certificate is valid.
"""
from __future__ import annotations

from .certs import BroomCert, Cycle, JellyfishCert, OctopusCert, SpiderCert
from .graph import Graph


def _path_problems(g: Graph, seq, label: str) -> list[str]:
    out = []
    if len(set(seq)) != len(seq):
        out.append(f"{label}: repeated vertex")
    for v in seq:
        if not 0 <= v < g.n:
            out.append(f"{label}: vertex {v} out of range")
            return out
    for a, b in zip(seq, seq[1:]):
        if not g.has_edge(a, b):
            out.append(f"{label}: {a}-{b} is not an edge")
    return out


def cycle_problems(g: Graph, cycle: Cycle | tuple) -> list[str]:
    seq = tuple(cycle.vertices if isinstance(cycle, Cycle) else cycle)
    if len(seq) < 3:
        return ["cycle shorter than 3"]
    out = _path_problems(g, seq, "cycle")
    if not out and not g.has_edge(seq[-1], seq[0]):
        out.append(f"cycle: closing pair {seq[-1]}-{seq[0]} is not an edge")
    return out


def jellyfish_problems(g: Graph, cert: JellyfishCert, spanning: bool = True) -> list[str]:
    out = cycle_problems(g, cert.cycle)
    on_cycle = set(cert.cycle.vertices)
    if cert.center not in on_cycle:
        out.append("center not on cycle")
    tentacles = set(cert.tentacles)
    if tentacles & on_cycle:
        out.append("tentacle on cycle")
    for t in tentacles:
        if not 0 <= t < g.n or not g.has_edge(t, cert.center):
            out.append(f"tentacle {t} not adjacent to center")
    if spanning and on_cycle | tentacles != set(range(g.n)):
        out.append("does not cover V(G)")
    return out


def broom_problems(g: Graph, cert: BroomCert, spanning: bool = True) -> list[str]:
    path = tuple(cert.path)
    if not path:
        return ["empty path"]
    out = _path_problems(g, path, "path")
    leaves = set(cert.leaves)
    if leaves & set(path):
        out.append("leaf on path")
    hub = path[-1]
    for leaf in leaves:
        if not 0 <= leaf < g.n or not g.has_edge(leaf, hub):
            out.append(f"leaf {leaf} not adjacent to star centre {hub}")
    if spanning and set(path) | leaves != set(range(g.n)):
        out.append("does not cover V(G)")
    return out


def spider_problems(g: Graph, cert: SpiderCert, spanning: bool = True) -> list[str]:
    out = []
    vertices = [cert.center] + [v for leg in cert.legs for v in leg]
    if len(set(vertices)) != len(vertices):
        out.append("legs overlap")
    if any(not 0 <= v < g.n for v in vertices):
        return out + ["vertex out of range"]
    edges = set()
    for leg in cert.legs:
        if not leg:
            out.append("empty leg")
            continue
        prev = cert.center
        for v in leg:
            if not g.has_edge(prev, v):
                out.append(f"{prev}-{v} is not an edge")
            edges.add(frozenset((prev, v)))
            prev = v
    if spanning and set(vertices) != set(range(g.n)):
        out.append("does not cover V(G)")
    # tree + at most one branching vertex, checked from the edge set alone
    vs = set(vertices)
    if len(edges) != len(vs) - 1:
        out.append("edge count is not |V|-1")
    parent = {v: v for v in vs}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        a, b = tuple(e)
        ra, rb = find(a), find(b)
        if ra == rb:
            out.append("legs contain a cycle")
        parent[ra] = rb
    if len({find(v) for v in vs}) != 1:
        out.append("not connected")
    deg: dict[int, int] = {}
    for e in edges:
        for v in e:
            deg[v] = deg.get(v, 0) + 1
    branching = [v for v, d in deg.items() if d >= 3]
    if len(branching) > 1:
        out.append(f"several branching vertices {sorted(branching)}")
    return out


def octopus_problems(g: Graph, cert: OctopusCert, spanning: bool = True) -> list[str]:
    out = cycle_problems(g, cert.cycle)
    on_cycle = set(cert.cycle.vertices)
    if cert.center not in on_cycle:
        out.append("branch vertex not on cycle")
    used = set(on_cycle)
    for leg in cert.legs:
        if not leg:
            out.append("empty leg")
            continue
        if set(leg) & used:
            out.append("leg meets cycle or another leg")
        used |= set(leg)
        out += _path_problems(g, (cert.center,) + tuple(leg), "leg")
    if spanning and used != set(range(g.n)):
        out.append("does not cover V(G)")
    return out


def is_valid(g: Graph, cert, spanning: bool = True) -> bool:
    if isinstance(cert, Cycle):
        return not cycle_problems(g, cert)
    check = {
        JellyfishCert: jellyfish_problems,
        BroomCert: broom_problems,
        SpiderCert: spider_problems,
        OctopusCert: octopus_problems,
    }[type(cert)]
    return not check(g, cert, spanning)
