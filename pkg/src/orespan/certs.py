"""Certificate types for cycles and spanning jellyfish / brooms / spiders / octopuses.

All certificates serialise to the same JSON shape, in this key order::

    {"kind", "cycle", "center", "tentacles", "legs"}

Legs are listed from the vertex next to the centre outwards.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable


@dataclass(frozen=True)
class Cycle:
    """Cycle as a cyclic vertex sequence, stored canonically.

    Canonical form starts at the minimum id and runs toward the smaller of its two
    neighbours.  Positions are taken modulo the length.
    """

    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", canonical_rotation(self.vertices))

    @property
    def length(self) -> int:
        return len(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, v):
        return v in self.vertex_set

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @property
    def mask(self) -> int:
        m = 0
        for v in self.vertices:
            m |= 1 << v
        return m

    def position(self, v: int) -> int:
        return self.vertices.index(v)

    def at(self, i: int) -> int:
        return self.vertices[i % len(self.vertices)]

    def succ(self, v: int) -> int:
        return self.at(self.position(v) + 1)

    def pred(self, v: int) -> int:
        return self.at(self.position(v) - 1)

    def shift(self, vertices: Iterable[int], k: int) -> frozenset[int]:
        """The set ``X^{+k}`` (``k < 0`` for ``X^{-k}``) of cycle vertices."""
        return frozenset(self.at(self.position(v) + k) for v in vertices)

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def marks(self, mark_set: Iterable[int]) -> int:
        marked = set(mark_set)
        return sum(1 for v in self.vertices if v in marked)

    def path_from(self, v: int) -> tuple[int, ...]:
        """Hamiltonian path of the cycle starting at ``v`` and running forward."""
        i = self.position(v)
        return self.vertices[i:] + self.vertices[:i]

    def to_json(self) -> dict:
        return _cert_json("cycle", cycle=list(self.vertices))


def canonical_rotation(seq: Iterable[int]) -> tuple[int, ...]:
    vs = tuple(seq)
    if len(vs) < 3:
        return vs
    i = vs.index(min(vs))
    fwd = vs[i:] + vs[:i]
    back = (fwd[0],) + tuple(reversed(fwd[1:]))
    return min(fwd, back)


def _cert_json(kind, cycle=(), center=None, tentacles=(), legs=()) -> dict:
    return {
        "kind": kind,
        "cycle": list(cycle),
        "center": center,
        "tentacles": sorted(tentacles),
        "legs": [list(leg) for leg in legs],
    }


@dataclass(frozen=True)
class JellyfishCert:
    cycle: Cycle
    center: int
    tentacles: frozenset[int] = frozenset()

    def to_json(self) -> dict:
        return _cert_json("jellyfish", self.cycle.vertices, self.center, self.tentacles)

    def to_octopus(self) -> OctopusCert:
        return OctopusCert(self.cycle, self.center, tuple((t,) for t in sorted(self.tentacles)))

    def to_broom(self) -> BroomCert:
        """Drop the cycle edge entering the centre: the rest of the cycle is the handle."""
        handle = self.cycle.path_from(self.center)[1:] + (self.center,)
        return BroomCert(handle, self.tentacles)


@dataclass(frozen=True)
class BroomCert:
    """A path whose last vertex is the star centre, plus star leaves on that centre."""

    path: tuple[int, ...]
    leaves: frozenset[int] = frozenset()

    @property
    def center(self) -> int:
        return self.path[-1]

    def to_spider(self) -> SpiderCert:
        handle = tuple(reversed(self.path[:-1]))
        legs = ((handle,) if handle else ()) + tuple((v,) for v in sorted(self.leaves))
        return SpiderCert(self.center, legs)

    def to_json(self) -> dict:
        handle = list(reversed(self.path[:-1]))
        return _cert_json("broom", center=self.center, tentacles=self.leaves, legs=[handle] if handle else [])


@dataclass(frozen=True)
class SpiderCert:
    """Spanning tree given as a centre and vertex-disjoint legs hanging off it."""

    center: int
    legs: tuple[tuple[int, ...], ...] = ()

    @property
    def branch(self) -> int | None:
        return self.center if len(self.legs) >= 3 else None

    def edges(self) -> frozenset[tuple[int, int]]:
        out = set()
        for leg in self.legs:
            prev = self.center
            for v in leg:
                out.add((min(prev, v), max(prev, v)))
                prev = v
        return frozenset(out)

    def to_json(self) -> dict:
        return _cert_json("spider", center=self.center, legs=self.legs)


@dataclass(frozen=True)
class OctopusCert:
    """Cycle plus legs hanging off one cycle vertex (the branch vertex)."""

    cycle: Cycle
    center: int
    legs: tuple[tuple[int, ...], ...] = ()

    def to_json(self) -> dict:
        return _cert_json("octopus", self.cycle.vertices, self.center, legs=self.legs)


@dataclass(frozen=True)
class PathMetrics:
    p: int  # order of a longest path
    c: int  # length of a longest cycle, 0 if acyclic
    longest_path: tuple[int, ...] = field(default=(), compare=False)
