"""Bitset graphs, graph6 / edge-list / DOT I/O, and degree and connectivity analysis.

Vertices are ``0..n-1`` and ``adj[v]`` is an int whose bit ``u`` is set iff ``uv`` is an
edge.  Every threshold test is done in integers (``3 * sigma2 >= 2n - 3`` and so on).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

from .errors import GraphParseError

DEFAULT_VERTEX_CAP = 64
MAX_VERTEX_CAP = 128

# sigma2 of a complete graph: the minimum over an empty set of pairs.
INFINITE = math.inf


def bits(m: int) -> Iterator[int]:
    """Indices of the set bits of ``m``, ascending."""
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def reach(adj: tuple[int, ...], src: int, allowed: int) -> int:
    """Bitmask of vertices reachable from the ``src`` mask inside ``allowed`` (src included)."""
    seen = src
    frontier = src
    while frontier:
        nb = 0
        while frontier:
            low = frontier & -frontier
            nb |= adj[low.bit_length() - 1]
            frontier ^= low
        frontier = nb & allowed & ~seen
        seen |= frontier
    return seen


@dataclass(frozen=True, slots=True)
class Graph:
    """Undirected simple graph on ``0..n-1`` with per-vertex neighbour bitsets."""

    n: int
    adj: tuple[int, ...]
    cap: int = field(default=DEFAULT_VERTEX_CAP, compare=False, repr=False)

    def __post_init__(self):
        if not 0 <= self.n <= min(self.cap, MAX_VERTEX_CAP):
            raise ValueError(f"vertex count {self.n} outside 0..{min(self.cap, MAX_VERTEX_CAP)}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length differs from n")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric on edge {v}-{u}")

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        # skips validation; callers guarantee a symmetric loop-free adjacency
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        object.__setattr__(g, "cap", MAX_VERTEX_CAP)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], cap: int = DEFAULT_VERTEX_CAP) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} outside 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), cap)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(nb.bit_count() for nb in self.adj)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def is_complete(self) -> bool:
        return all(nb.bit_count() == self.n - 1 for nb in self.adj)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return reach(self.adj, 1, self.full) == self.full

    def induced_is_edgeless(self, vertex_mask: int) -> bool:
        return all(self.adj[v] & vertex_mask == 0 for v in bits(vertex_mask))

    def relabel(self, perm: list[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()], self.cap)


# ---------------------------------------------------------------------------
# graph6 and edge lists


def _graph6_n_bytes(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise ValueError("graph6 size header supports n <= 258047 only")


def to_graph6(g: Graph) -> str:
    out = bytearray(_graph6_n_bytes(g.n))
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def from_graph6(text: str | bytes, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    data = text.encode("ascii", "replace") if isinstance(text, str) else bytes(text)
    data = data.strip()
    start = 0
    if data.startswith(b">>graph6<<"):
        start = 10
    for off in range(start, len(data)):
        if not 63 <= data[off] <= 126:
            raise GraphParseError(f"byte {data[off]!r} outside graph6 range 63..126", off)
    if len(data) <= start:
        raise GraphParseError("empty graph6 string", start)
    pos = start
    if data[pos] != 126:
        n = data[pos] - 63
        pos += 1
    else:
        if len(data) < pos + 4:
            raise GraphParseError("truncated graph6 size field", len(data))
        if data[pos + 1] == 126:
            raise GraphParseError("8-byte graph6 size field not supported", pos + 1)
        n = ((data[pos + 1] - 63) << 12) | ((data[pos + 2] - 63) << 6) | (data[pos + 3] - 63)
        pos += 4
    if n > min(cap, MAX_VERTEX_CAP):
        raise GraphParseError(f"graph has {n} vertices, cap is {min(cap, MAX_VERTEX_CAP)}", start)
    total = n * (n - 1) // 2
    want = (total + 5) // 6
    body = data[pos:]
    if len(body) != want:
        raise GraphParseError(f"expected {want} edge bytes for n={n}, got {len(body)}", pos + min(len(body), want))
    adj = [0] * n
    k = 0
    j, i = 1, 0
    for bi, byte in enumerate(body):
        val = byte - 63
        for shift in range(5, -1, -1):
            bit = val >> shift & 1
            if k >= total:
                if bit:
                    raise GraphParseError("nonzero padding bit", pos + bi)
                continue
            if bit:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                j += 1
                i = 0
    return Graph(n, tuple(adj), cap)


def to_edge_list(g: Graph) -> str:
    """First line is the vertex count, then one ``u v`` pair per line."""
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str, n: int | None = None, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Parse whitespace edge lists.

    An optional leading line holding a single integer fixes the vertex count; otherwise it
    is ``max id + 1``.  Blank lines and ``#`` comments are ignored.  Loops and repeated
    edges are rejected.
    """
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    declared = n
    first = True
    for lineno, raw in enumerate(text.splitlines()):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise GraphParseError(f"non-integer token in {raw!r}", lineno) from None
        if first and len(nums) == 1:
            declared = nums[0] if declared is None else declared
            first = False
            continue
        first = False
        if len(nums) != 2:
            raise GraphParseError(f"expected two vertex ids, got {raw!r}", lineno)
        u, v = nums
        if u < 0 or v < 0:
            raise GraphParseError("negative vertex id", lineno)
        if u == v:
            raise GraphParseError(f"loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphParseError(f"repeated edge {key[0]}-{key[1]}", lineno)
        seen.add(key)
        edges.append(key)
    top = max((v for e in edges for v in e), default=-1) + 1
    count = top if declared is None else declared
    if count < top:
        raise GraphParseError(f"vertex id {top - 1} exceeds declared count {count}", 0)
    if count > min(cap, MAX_VERTEX_CAP):
        raise GraphParseError(f"graph has {count} vertices, cap is {min(cap, MAX_VERTEX_CAP)}", 0)
    return Graph.from_edges(count, edges, cap)


def parse_graph(text: str | bytes, format: str = "graph6", cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    if format == "graph6":
        return from_graph6(text, cap)
    if format in ("edge-list", "edgelist", "edges"):
        if isinstance(text, bytes):
            text = text.decode()
        return from_edge_list(text, cap=cap)
    raise ValueError(f"unknown graph format {format!r}")


def sniff_format(text: str) -> str:
    """Guess between graph6 and edge list for CLI input."""
    body = text.strip()
    if not body:
        return "edge-list"
    if any(ch.isspace() for ch in body) or body.isdigit():
        return "edge-list"
    return "graph6"


def to_dot(g: Graph, name: str = "G", highlight: Iterable[tuple[int, int]] = ()) -> str:
    marked = {(min(u, v), max(u, v)) for u, v in highlight}
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.n)]
    for u, v in g.edges():
        style = " [penwidth=3]" if (u, v) in marked else ""
        lines.append(f"  {u} -- {v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# degree analysis


class VertexClass(enum.Enum):
    LOW = "low"
    NORMAL = "normal"
    HIGH = "high"


@dataclass(frozen=True)
class DegreeProfile:
    """Degree data behind the Ore-type hypotheses.

    ``low_set`` is L(G) = {v : 2 d(v) < sigma2}; ``degree_low`` is {v : 3 d(v) <= n - 2}.
    The two notions are reported separately because they need not agree.  A vertex is
    classified LOW by degree; otherwise HIGH if some degree-low vertex misses it (the
    witness is kept in ``high_witness``), else NORMAL.
    """

    n: int
    degrees: tuple[int, ...]
    delta: int
    sigma2: int | float
    sigma2_pair: tuple[int, int] | None
    low_set: frozenset[int]
    degree_low: frozenset[int]
    classification: dict[int, VertexClass]
    high_witness: dict[int, int]

    @property
    def sigma2_is_infinite(self) -> bool:
        return self.sigma2 == INFINITE


def sigma2(g: Graph) -> tuple[int | float, tuple[int, int] | None]:
    """Minimum ``d(u) + d(v)`` over nonadjacent pairs, with a witnessing pair."""
    deg = g.degrees()
    best: int | float = INFINITE
    pair = None
    full = g.full
    for u in range(g.n):
        non = full & ~g.adj[u] & ~((2 << u) - 1)
        for v in bits(non):
            s = deg[u] + deg[v]
            if s < best:
                best, pair = s, (u, v)
    return best, pair


def degree_profile(g: Graph) -> DegreeProfile:
    deg = g.degrees()
    s2, pair = sigma2(g)
    n = g.n
    low_set = frozenset() if s2 == INFINITE else frozenset(v for v in range(n) if 2 * deg[v] < s2)
    degree_low = frozenset(v for v in range(n) if 3 * deg[v] <= n - 2)
    low_mask = mask_of(degree_low)
    classes: dict[int, VertexClass] = {}
    witness: dict[int, int] = {}
    for v in range(n):
        if v in degree_low:
            classes[v] = VertexClass.LOW
            continue
        missing = low_mask & ~g.adj[v] & ~(1 << v)
        if missing:
            classes[v] = VertexClass.HIGH
            witness[v] = (missing & -missing).bit_length() - 1
        else:
            classes[v] = VertexClass.NORMAL
    return DegreeProfile(
        n=n,
        degrees=deg,
        delta=min(deg, default=0),
        sigma2=s2,
        sigma2_pair=pair,
        low_set=low_set,
        degree_low=degree_low,
        classification=classes,
        high_witness=witness,
    )


# ---------------------------------------------------------------------------
# connectivity


def is_k_connected(g: Graph, k: int) -> bool:
    """True iff n > k and deleting any fewer than k vertices leaves a connected graph."""
    if k not in (1, 2, 3):
        raise ValueError("k must be 1, 2 or 3")
    n = g.n
    if n <= k:
        return False
    full = g.full
    adj = g.adj
    for size in range(k):
        for cut in combinations(range(n), size):
            rest = full & ~mask_of(cut)
            low = rest & -rest
            if reach(adj, low, rest) != rest:
                return False
    return True


def connectivity(g: Graph, kmax: int = 3) -> int:
    """Largest k <= kmax for which g is k-connected (0 if disconnected or trivial)."""
    k = 0
    while k < kmax and is_k_connected(g, k + 1):
        k += 1
    return k


def ore_main_holds(n: int, s2: int | float) -> bool:
    return 3 * s2 >= 2 * n - 3


def dirac_cor_holds(n: int, delta: int) -> bool:
    return 3 * delta >= n - 1


@dataclass(frozen=True)
class ConditionCheck:
    meets_ore_main: bool
    meets_dirac_cor: bool
    connectivity: int
    sigma2: int | float
    delta: int


def check_conditions(g: Graph) -> ConditionCheck:
    prof = degree_profile(g)
    return ConditionCheck(
        meets_ore_main=ore_main_holds(g.n, prof.sigma2),
        meets_dirac_cor=dirac_cor_holds(g.n, prof.delta),
        connectivity=connectivity(g),
        sigma2=prof.sigma2,
        delta=prof.delta,
    )
