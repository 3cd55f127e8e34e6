"""Exact exponential searches for cycles, paths and spanning jellyfish / brooms / spiders /
octopuses on small graphs.

Every search is a depth-first path extension over bitsets.  Two devices keep it fast:

* reachability bounds: vertices that still have to be visited must lie in the component
  of the current path end inside the unvisited vertices;
* failure memos: for feasibility questions the outcome depends only on
  ``(visited set, path end)``, so failed states are cached.

Neighbours are tried in ascending id order, which makes every result deterministic.
Returned certificates are checked with :mod:`orespan.validate` before they leave.
"""
from __future__ import annotations

from .certs import BroomCert, Cycle, JellyfishCert, OctopusCert, PathMetrics, SpiderCert
from .errors import CapExceeded, InvariantViolation
from .graph import Graph, bits, reach
from . import validate

CYCLE_CAP = 18
SPANNING_CAP = 16


def _check_cap(g: Graph, cap: int, what: str) -> None:
    if g.n > cap:
        raise CapExceeded(f"{what}: n={g.n} exceeds exact-search cap {cap}")


def _checked(g: Graph, cert):
    if not validate.is_valid(g, cert):
        raise InvariantViolation(f"search produced an invalid certificate {cert!r}")
    return cert


def _center_order(g: Graph) -> list[int]:
    deg = g.degrees()
    return sorted(range(g.n), key=lambda v: (-deg[v], v))


# ---------------------------------------------------------------------------
# optimisation: longest / mark-maximal cycles, longest paths


def _best_cycle(g: Graph, marks: int) -> tuple[tuple[int, ...] | None, int]:
    """Lexicographically best (length, marked count) cycle, canonically smallest on ties.

    The cycle's minimum vertex ``s`` is fixed as the DFS root and only vertices above
    ``s`` are used, so each cycle is met once per direction.  Sequences are produced in
    lexicographic order, and a cycle is only recorded on a strict score improvement, so
    the first optimum found is the canonical smallest.
    """
    n, adj, full = g.n, g.adj, g.full
    W = n + 1
    best_score = -1
    best_seq = None
    path: list[int] = []

    for s in range(n - 2):
        allowed = full & ~((1 << s) - 1)
        comp = reach(adj, 1 << s, allowed)
        size = comp.bit_count()
        if size < 3 or size * W + (comp & marks).bit_count() <= best_score:
            continue
        sbit = 1 << s
        adj_s = adj[s]

        def rec(end: int, mask: int, length: int, nm: int) -> None:
            nonlocal best_score, best_seq
            nb = adj[end]
            if length >= 3 and nb & sbit:
                score = length * W + nm
                if score > best_score:
                    best_score = score
                    best_seq = tuple(path)
            free = comp & ~mask
            cand = nb & free
            if not cand:
                return
            ebit = 1 << end
            rest = reach(adj, ebit, free | ebit) & ~ebit
            if not rest & adj_s:
                return
            if (length + rest.bit_count()) * W + nm + (rest & marks).bit_count() <= best_score:
                return
            while cand:
                low = cand & -cand
                cand ^= low
                w = low.bit_length() - 1
                path.append(w)
                rec(w, mask | low, length + 1, nm + (marks >> w & 1))
                path.pop()

        path[:] = [s]
        rec(s, sbit, 1, marks >> s & 1)
    return best_seq, best_score


def longest_cycle(g: Graph, cap: int = CYCLE_CAP) -> Cycle | None:
    _check_cap(g, cap, "longest_cycle")
    seq, _ = _best_cycle(g, 0)
    return None if seq is None else _checked(g, Cycle(seq))


def l_maximal_cycle(g: Graph, mark_set=(), cap: int = CYCLE_CAP) -> tuple[Cycle, tuple[int, int]]:
    """Longest cycle, then most marked vertices; returns the cycle and (length, marked)."""
    _check_cap(g, cap, "l_maximal_cycle")
    marks = 0
    for v in mark_set:
        marks |= 1 << v
    seq, _ = _best_cycle(g, marks)
    if seq is None:
        raise ValueError("graph is acyclic")
    cyc = _checked(g, Cycle(seq))
    return cyc, (len(seq), (cyc.mask & marks).bit_count())


def longest_path(g: Graph, cap: int = CYCLE_CAP) -> tuple[int, ...]:
    _check_cap(g, cap, "longest_path")
    n, adj, full = g.n, g.adj, g.full
    best: tuple[int, ...] = ()
    path: list[int] = []

    def rec(end: int, mask: int) -> bool:
        nonlocal best
        if len(path) > len(best):
            best = tuple(path)
            if len(best) == n:
                return True
        free = full & ~mask
        cand = adj[end] & free
        if not cand:
            return False
        ebit = 1 << end
        if len(path) + (reach(adj, ebit, free | ebit).bit_count() - 1) <= len(best):
            return False
        while cand:
            low = cand & -cand
            cand ^= low
            path.append(low.bit_length() - 1)
            if rec(low.bit_length() - 1, mask | low):
                return True
            path.pop()
        return False

    for s in range(n):
        path[:] = [s]
        if rec(s, 1 << s):
            break
    return best


def path_metrics(g: Graph, cap: int = CYCLE_CAP) -> PathMetrics:
    lp = longest_path(g, cap)
    cyc = longest_cycle(g, cap)
    return PathMetrics(p=len(lp), c=0 if cyc is None else cyc.length, longest_path=lp)


# ---------------------------------------------------------------------------
# feasibility searches


def _cycle_through(adj: tuple[int, ...], full: int, v: int, required: int) -> list[int] | None:
    """Vertex sequence of a cycle through ``v`` that contains every vertex of ``required``."""
    vbit = 1 << v
    adj_v = adj[v]
    failed: set[int] = set()
    path = [v]

    def rec(end: int, mask: int) -> bool:
        free = full & ~mask
        need = required & free
        if not need and len(path) >= 3 and adj[end] & vbit:
            return True
        key = mask << 7 | end
        if key in failed:
            return False
        cand = adj[end] & free
        if cand:
            ebit = 1 << end
            comp = reach(adj, ebit, free | ebit) & ~ebit
            ok = not need & ~comp and comp & adj_v
            if ok:
                around = free | ebit | vbit
                m = need
                while m:
                    low = m & -m
                    m ^= low
                    if (adj[low.bit_length() - 1] & around).bit_count() < 2:
                        ok = False
                        break
            if ok:
                while cand:
                    low = cand & -cand
                    cand ^= low
                    w = low.bit_length() - 1
                    path.append(w)
                    if rec(w, mask | low):
                        return True
                    path.pop()
        failed.add(key)
        return False

    return list(path) if rec(v, vbit) else None


def _path_covering(adj: tuple[int, ...], full: int, start: int, required: int, last: int = -1) -> list[int] | None:
    """Path from ``start`` containing ``required``; if ``last >= 0`` it must be Hamiltonian
    and end there."""
    failed: set[int] = set()
    path = [start]
    lastbit = 1 << last if last >= 0 else 0

    def rec(end: int, mask: int) -> bool:
        free = full & ~mask
        need = required & free
        if not need:
            return last < 0 or end == last
        key = mask << 7 | end
        if key in failed:
            return False
        cand = adj[end] & free
        if lastbit and free != lastbit:
            cand &= ~lastbit
        if cand:
            ebit = 1 << end
            comp = reach(adj, ebit, free | ebit)
            ok = not need & ~comp
            if ok:
                # a required vertex with one usable neighbour can only be the final end
                around = free | ebit
                dead_ends = 0
                m = need & ~lastbit
                while m:
                    low = m & -m
                    m ^= low
                    k = (adj[low.bit_length() - 1] & around).bit_count()
                    if k == 0:
                        ok = False
                        break
                    if k == 1:
                        dead_ends += 1
                if dead_ends > (0 if lastbit else 1):
                    ok = False
            if ok:
                while cand:
                    low = cand & -cand
                    cand ^= low
                    w = low.bit_length() - 1
                    path.append(w)
                    if rec(w, mask | low):
                        return True
                    path.pop()
        failed.add(key)
        return False

    return list(path) if rec(start, 1 << start) else None


class _LegCover:
    """Cover all unvisited vertices by paths (legs) hanging off ``center``.

    State is (visited mask, current leg end); ``end == center`` means no leg is open.
    The failure memo is shared across calls, so one instance can answer many masks.
    """

    def __init__(self, adj: tuple[int, ...], full: int, center: int):
        self.adj = adj
        self.full = full
        self.center = center
        self.failed: set[int] = set()

    def solve(self, mask: int) -> tuple[tuple[int, ...], ...] | None:
        moves: list[int] = []
        if not self._rec(self.center, mask, moves):
            return None
        # a -1 in moves opens a new leg
        return _split_legs(moves)

    def _rec(self, end: int, mask: int, moves: list[int]) -> bool:
        full, adj, c = self.full, self.adj, self.center
        if mask == full:
            return True
        key = mask << 7 | end
        if key in self.failed:
            return False
        free = full & ~mask
        src = 1 << c | 1 << end
        if free & ~reach(adj, src, free | src):
            self.failed.add(key)
            return False
        if end == c:
            cand = adj[c] & free
            while cand:
                low = cand & -cand
                cand ^= low
                w = low.bit_length() - 1
                moves.append(-1)
                moves.append(w)
                if self._rec(w, mask | low, moves):
                    return True
                moves.pop()
                moves.pop()
        else:
            cand = adj[end] & free
            while cand:
                low = cand & -cand
                cand ^= low
                w = low.bit_length() - 1
                moves.append(w)
                if self._rec(w, mask | low, moves):
                    return True
                moves.pop()
            if self._rec(c, mask, moves):
                return True
        self.failed.add(key)
        return False


def _split_legs(moves: list[int]) -> tuple[tuple[int, ...], ...]:
    legs: list[list[int]] = []
    for mv in moves:
        if mv == -1:
            legs.append([])
        else:
            legs[-1].append(mv)
    return tuple(tuple(leg) for leg in legs)


# ---------------------------------------------------------------------------
# public finders


def is_hamiltonian(g: Graph, cap: int = CYCLE_CAP) -> bool:
    _check_cap(g, cap, "is_hamiltonian")
    if g.n < 3:
        return False
    return _cycle_through(g.adj, g.full, 0, g.full) is not None


def hamiltonian_cycle(g: Graph, cap: int = CYCLE_CAP) -> Cycle | None:
    _check_cap(g, cap, "hamiltonian_cycle")
    if g.n < 3:
        return None
    seq = _cycle_through(g.adj, g.full, 0, g.full)
    return None if seq is None else _checked(g, Cycle(seq))


def find_spanning_jellyfish(g: Graph, cap: int = SPANNING_CAP) -> JellyfishCert | None:
    """A spanning jellyfish, or None.  Tentacles may be empty (Hamiltonian case)."""
    _check_cap(g, cap, "find_spanning_jellyfish")
    n, adj, full = g.n, g.adj, g.full
    if n < 3 or not g.is_connected():
        return None
    for v in _center_order(g):
        required = full & ~adj[v] & ~(1 << v)
        seq = _cycle_through(adj, full, v, required)
        if seq is not None:
            tentacles = frozenset(bits(full & ~_mask(seq)))
            return _checked(g, JellyfishCert(Cycle(seq), v, tentacles))
    return None


def find_spanning_broom(g: Graph, cap: int = SPANNING_CAP) -> BroomCert | None:
    """A spanning broom, or None.  A Hamiltonian path is a broom with no leaves."""
    _check_cap(g, cap, "find_spanning_broom")
    n, adj, full = g.n, g.adj, g.full
    if n == 0 or not g.is_connected():
        return None
    for c in _center_order(g):
        required = full & ~adj[c] & ~(1 << c)
        seq = _path_covering(adj, full, c, required)
        if seq is not None:
            leaves = frozenset(bits(full & ~_mask(seq)))
            return _checked(g, BroomCert(tuple(reversed(seq)), leaves))
    return None


def find_spanning_spider(g: Graph, cap: int = SPANNING_CAP) -> SpiderCert | None:
    _check_cap(g, cap, "find_spanning_spider")
    n = g.n
    if n == 0 or not g.is_connected():
        return None
    for c in _center_order(g):
        legs = _LegCover(g.adj, g.full, c).solve(1 << c)
        if legs is not None:
            return _checked(g, SpiderCert(c, legs))
    return None


def find_spanning_octopus(g: Graph, cap: int = SPANNING_CAP) -> OctopusCert | None:
    _check_cap(g, cap, "find_spanning_octopus")
    n, adj, full = g.n, g.adj, g.full
    if n < 3 or not g.is_connected():
        return None
    for v in _center_order(g):
        found = _octopus_at(adj, full, v)
        if found is not None:
            seq, legs = found
            return _checked(g, OctopusCert(Cycle(seq), v, legs))
    return None


def _octopus_at(adj, full, v):
    vbit = 1 << v
    adj_v = adj[v]
    legs_search = _LegCover(adj, full, v)
    failed: set[int] = set()
    path = [v]
    result = []

    def rec(end: int, mask: int) -> bool:
        key = mask << 7 | end
        if key in failed:
            return False
        free = full & ~mask
        if len(path) >= 3 and adj[end] & vbit:
            legs = legs_search.solve(mask)
            if legs is not None:
                result.append(legs)
                return True
        cand = adj[end] & free
        if cand:
            ebit = 1 << end
            src = vbit | ebit
            ok = not free & ~reach(adj, src, free | src)
            if ok:
                ok = reach(adj, ebit, free | ebit) & ~ebit & adj_v
            if ok:
                while cand:
                    low = cand & -cand
                    cand ^= low
                    w = low.bit_length() - 1
                    path.append(w)
                    if rec(w, mask | low):
                        return True
                    path.pop()
        failed.add(key)
        return False

    if rec(v, vbit):
        return list(path), result[0]
    return None


def _mask(seq) -> int:
    m = 0
    for v in seq:
        m |= 1 << v
    return m


def hamiltonian_path_between(g: Graph, u: int, v: int, cap: int = CYCLE_CAP) -> list[int] | None:
    _check_cap(g, cap, "hamiltonian_path_between")
    if u == v:
        return [u] if g.n == 1 else None
    return _path_covering(g.adj, g.full, u, g.full, last=v)


def is_hamiltonian_connected(g: Graph, cap: int = CYCLE_CAP) -> bool:
    """Every pair of distinct vertices is joined by a Hamiltonian path."""
    if g.n < 2:
        raise ValueError("hamiltonian-connectedness needs n >= 2")
    _check_cap(g, cap, "is_hamiltonian_connected")
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if _path_covering(g.adj, g.full, u, g.full, last=v) is None:
                return False
    return True


def contains_complete_bipartite(g: Graph, a: int, b: int) -> bool:
    """Whether K_{a,b} is a (not necessarily induced) subgraph."""
    if a < 0 or b < 0:
        raise ValueError("part sizes must be nonnegative")
    if a + b > g.n:
        return False
    if a > b:
        a, b = b, a
    if a == 0:
        return True
    adj, n = g.adj, g.n

    def rec(start: int, chosen: int, common: int) -> bool:
        if chosen == a:
            return common.bit_count() >= b
        for v in range(start, n - (a - chosen) + 1):
            nxt = common & adj[v]
            if nxt.bit_count() >= b and rec(v + 1, chosen + 1, nxt):
                return True
        return False

    return rec(0, 0, g.full)
