"""X/Y chains for a fixed cycle, good paths, hopping paths and their height reduction,
the M1-M3 checks, and cycle swapping.

For a cycle C with off-cycle vertices Y_0::

    X_i = N_C(Y_{i-1})
    Y_i = {v on C : pred(v), succ(v) in X_i}  union  Y_{i-1}

Both chains grow monotonically and stop within n rounds.  Heights record the first index at
which a vertex enters each chain (Y-heights start at 0).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .certs import Cycle
from .errors import CapExceeded, InvariantViolation
from .graph import Graph, bits, reach
from . import search, validate

INF = math.inf
GOOD_PATH_CAP = 16


@dataclass(frozen=True)
class HoppingState:
    cycle: Cycle
    chain_x: tuple[frozenset[int], ...]  # X_1, X_2, ...
    chain_y: tuple[frozenset[int], ...]  # Y_0, Y_1, ...
    height_x: dict[int, int | float]
    height_y: dict[int, int | float]
    iterations: int

    @property
    def limit_x(self) -> frozenset[int]:
        return self.chain_x[-1] if self.chain_x else frozenset()

    @property
    def limit_y(self) -> frozenset[int]:
        return self.chain_y[-1]

    def x(self, i: int) -> frozenset[int]:
        """X_i for any i >= 0 (X_0 is empty, indices past the fixed point give the limit)."""
        if i <= 0:
            return frozenset()
        return self.chain_x[min(i, len(self.chain_x)) - 1]

    def y(self, i: int) -> frozenset[int]:
        return self.chain_y[min(max(i, 0), len(self.chain_y) - 1)]

    def to_json(self) -> dict:
        def h(m):
            return {str(v): (None if m[v] == INF else m[v]) for v in sorted(m)}

        return {
            "cycle": list(self.cycle.vertices),
            "chain_x": [sorted(s) for s in self.chain_x],
            "chain_y": [sorted(s) for s in self.chain_y],
            "limit_x": sorted(self.limit_x),
            "limit_y": sorted(self.limit_y),
            "height_x": h(self.height_x),
            "height_y": h(self.height_y),
            "iterations": self.iterations,
        }


def compute_xy(g: Graph, cycle: Cycle) -> HoppingState:
    if validate.cycle_problems(g, cycle):
        raise ValueError(f"{cycle.vertices} is not a cycle of the graph")
    vs = cycle.vertices
    c = len(vs)
    on_cycle = cycle.mask
    y = g.full & ~on_cycle
    chain_y = [y]
    chain_x: list[int] = []
    while True:
        x = 0
        for v in bits(y):
            x |= g.adj[v]
        x &= on_cycle
        chain_x.append(x)
        nxt = y
        for i in range(c):
            if x >> vs[i - 1] & 1 and x >> vs[(i + 1) % c] & 1:
                nxt |= 1 << vs[i]
        chain_y.append(nxt)
        if nxt == y:
            break
        y = nxt
    hx = {v: INF for v in range(g.n)}
    hy = {v: INF for v in range(g.n)}
    for i, xm in enumerate(chain_x, start=1):
        for v in bits(xm):
            hx[v] = min(hx[v], i)
    for i, ym in enumerate(chain_y):
        for v in bits(ym):
            hy[v] = min(hy[v], i)
    return HoppingState(
        cycle=cycle,
        chain_x=tuple(frozenset(bits(m)) for m in chain_x),
        chain_y=tuple(frozenset(bits(m)) for m in chain_y),
        height_x=hx,
        height_y=hy,
        iterations=len(chain_x),
    )


# ---------------------------------------------------------------------------
# good paths


def _consecutive_in(pos: dict[int, int], vertices) -> bool:
    idx = sorted(pos[v] for v in vertices)
    return any(b - a == 1 for a, b in zip(idx, idx[1:]))


def is_good_path(g: Graph, p) -> bool:
    """Both end neighbourhoods lie on the path and contain no two consecutive path vertices."""
    p = tuple(p)
    if not p or validate._path_problems(g, p, "path"):
        raise ValueError(f"{p} is not a path of the graph")
    pos = {v: i for i, v in enumerate(p)}
    for end in (p[0], p[-1]):
        nb = g.neighbors(end)
        if any(u not in pos for u in nb) or _consecutive_in(pos, nb):
            return False
    return True


def _good_path_search(g: Graph, target: int | None) -> tuple[int, tuple[int, ...]]:
    """Longest good path (order, vertices); with ``target`` stop at the first of that order."""
    n, adj, full = g.n, g.adj, g.full
    best = 0
    best_path: tuple[int, ...] = ()
    for v in range(n):
        if adj[v] == 0:
            best, best_path = 1, (v,)
            break
    path: list[int] = []
    pos_bits = [0] * n  # bit i set when path[i] == v

    def end_ok(end: int, mask: int) -> bool:
        nb = adj[end]
        if nb & ~mask:
            return False
        occ = 0
        for u in bits(nb):
            occ |= pos_bits[u]
        return not occ & (occ >> 1)

    def rec(end: int, mask: int) -> bool:
        nonlocal best, best_path
        k = len(path)
        if k > best and not adj[path[0]] & ~mask and end_ok(end, mask):
            best, best_path = k, tuple(path)
            if target is not None and best >= target:
                return True
        free = full & ~mask
        cand = adj[end] & free
        if not cand:
            return False
        ebit = 1 << end
        if k + reach(adj, ebit, free | ebit).bit_count() - 1 <= best:
            return False
        first_nb = adj[path[0]]
        prev_in = first_nb >> end & 1
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            # the start's neighbourhood may not gain two consecutive path vertices
            if prev_in and first_nb & low and k > 1:
                continue
            path.append(w)
            pos_bits[w] = 1 << k
            if rec(w, mask | low):
                return True
            pos_bits[w] = 0
            path.pop()
        return False

    for s in range(n):
        # the start's neighbourhood must end up on the path, so s needs a neighbour
        if adj[s] == 0:
            continue
        path[:] = [s]
        pos_bits[s] = 1
        stop = rec(s, 1 << s)
        pos_bits[s] = 0
        if stop:
            break
    return best, best_path


def longest_good_path(g: Graph, cap: int = GOOD_PATH_CAP) -> int:
    """Order of a longest good path; an isolated vertex is a good path of order 1."""
    if g.n > cap:
        raise CapExceeded(f"longest_good_path: n={g.n} exceeds cap {cap}")
    return _good_path_search(g, None)[0]


def find_good_path(g: Graph, min_order: int, cap: int = GOOD_PATH_CAP) -> tuple[int, ...] | None:
    """Some good path with at least ``min_order`` vertices, or None."""
    if g.n > cap:
        raise CapExceeded(f"find_good_path: n={g.n} exceeds cap {cap}")
    order, p = _good_path_search(g, min_order)
    return p if order >= min_order else None


# ---------------------------------------------------------------------------
# hopping paths


@dataclass(frozen=True)
class HoppingPath:
    vertices: tuple[int, ...]
    height: int | float


def path_height(st: HoppingState, p) -> int | float:
    return max(st.height_x[p[0]], st.height_x[p[-1]])


def hopping_violations(g: Graph, c: Cycle, p, st: HoppingState) -> list[str]:
    """Clauses (PATH, H1..H4) that ``p`` fails; empty iff it is a C-hopping path."""
    p = tuple(p)
    if not p or any(not 0 <= v < g.n for v in p):
        return ["PATH", "H3"]
    out = []
    if validate._path_problems(g, p, "path"):
        out.append("PATH")
    x = st.limit_x
    if p[0] not in x or p[-1] not in x:
        out.append("H1")
    x1 = st.x(1)
    if any(a in x1 and b in x1 for a, b in zip(p, p[1:])):
        out.append("H2")
    if len(p) != len(c) or set(p) != c.vertex_set:
        out.append("H3")
    if not _h4_holds(p, st):
        out.append("H4")
    return out


def _h4_holds(p: tuple[int, ...], st: HoppingState) -> bool:
    h = path_height(st, p)
    stable = len(st.chain_y)  # both chains are constant from this index on
    for j in range(int(min(h, stable + 1))):
        yj, xj = st.y(j), st.x(j)
        for s in range(1, len(p) - 1):
            if p[s] in yj and (p[s - 1] not in xj or p[s + 1] not in xj):
                return False
    return True


def is_hopping_path(g: Graph, c: Cycle, p, st: HoppingState | None = None) -> tuple[bool, list[str]]:
    st = compute_xy(g, c) if st is None else st
    bad = hopping_violations(g, c, p, st)
    return not bad, bad


def consecutive_x1_on_cycle(c: Cycle, st: HoppingState) -> tuple[int, int] | None:
    x1 = st.x(1)
    for a, b in c.edges():
        if a in x1 and b in x1:
            return a, b
    return None


def reduce_hopping_path(g: Graph, c: Cycle, p, st: HoppingState | None = None) -> HoppingPath:
    """Turn a hopping path into one of height 1 by repeated endpoint surgery.

    Each round strictly lowers (height, sum of endpoint X-heights).  Where a step needs
    "some w_j", the smallest admissible position is used.
    """
    st = compute_xy(g, c) if st is None else st
    p = tuple(p)
    bad = hopping_violations(g, c, p, st)
    if bad:
        raise ValueError(f"input is not a hopping path (fails {bad})")
    if consecutive_x1_on_cycle(c, st) is not None:
        raise ValueError("cycle has two consecutive X_1 vertices")
    hx, hy = st.height_x, st.height_y
    limit = 4 * g.n * g.n + 8
    for _ in range(limit):
        h = path_height(st, p)
        if h == 1:
            return HoppingPath(p, 1)
        nxt = _reduce_step(g, c, p, st)
        bad = hopping_violations(g, c, nxt, st)
        if bad:
            raise InvariantViolation(f"surgery on {p} produced {nxt}, failing {bad}")
        before = (h, hx[p[0]] + hx[p[-1]])
        after = (path_height(st, nxt), hx[nxt[0]] + hx[nxt[-1]])
        if not after < before:
            raise InvariantViolation(f"surgery did not decrease (height, sum): {before} -> {after}")
        p = nxt
    raise InvariantViolation("height reduction did not terminate")


def _reduce_step(g: Graph, c: Cycle, p: tuple[int, ...], st: HoppingState) -> tuple[int, ...]:
    hx, hy = st.height_x, st.height_y
    if hx[p[0]] > hx[p[-1]]:
        p = p[::-1]
    x, x2 = p[0], p[-1]
    i = hx[x2]

    # a cycle vertex in X_j and Y_j for some j < i, or the low endpoint in Y_j (j < i):
    # cut the cycle just before it
    if hy[x] < i:
        return c.path_from(x)
    for v in c.vertices:
        if max(hx[v], hy[v]) < i:
            return c.path_from(v)

    pos = {v: k for k, v in enumerate(p)}
    if hx[x] < i:
        # x2 entered X at round i through a neighbour first seen in Y_{i-1}
        js = sorted(pos[w] for w in g.neighbors(x2) if w in pos and hy[w] == i - 1)
        if not js:
            raise InvariantViolation(f"no Y_{i - 1} neighbour of endpoint {x2}")
        j = js[0]
        return p[j + 1:] + p[j::-1]

    # equal heights: the high endpoint may also sit low in Y; the same cut keeps the height
    # and lowers the endpoint-height sum
    if hy[x2] < i:
        return c.path_from(x2)

    def first_pos(end):
        js = sorted(pos[w] for w in g.neighbors(end) if w in pos and hy[w] == i - 1)
        if not js:
            raise InvariantViolation(f"no Y_{i - 1} neighbour of endpoint {end}")
        return js[0]

    j = first_pos(x)
    j2 = first_pos(x2)
    last = len(p) - 1
    if j <= j2:
        # w_{j-1} .. w_1, w_j .. w_{j2}, w_c .. w_{j2+1}
        return p[j - 1::-1] + p[j:j2 + 1] + p[last:j2:-1]
    # w_{j2+1} .. w_j, w_1 .. w_{j2}, w_c .. w_{j+1}
    return p[j2 + 1:j + 1] + p[:j2 + 1] + p[last:j:-1]


def find_hopping_paths(g: Graph, c: Cycle, st: HoppingState | None = None, limit: int | None = None):
    """All C-hopping paths (each once per orientation), by exhaustive search."""
    st = compute_xy(g, c) if st is None else st
    on = c.mask
    adj = g.adj
    x = 0
    for v in st.limit_x:
        x |= 1 << v
    x1 = 0
    for v in st.x(1):
        x1 |= 1 << v
    out = []
    path: list[int] = []

    def rec(end: int, mask: int) -> bool:
        if mask == on:
            if x >> end & 1 and not hopping_violations(g, c, path, st):
                out.append(tuple(path))
                if limit is not None and len(out) >= limit:
                    return True
            return False
        cand = adj[end] & on & ~mask
        if x1 >> end & 1:
            cand &= ~x1
        for w in bits(cand):
            path.append(w)
            if rec(w, mask | 1 << w):
                return True
            path.pop()
        return False

    for s in bits(x):
        path[:] = [s]
        if rec(s, 1 << s):
            break
    return out


# ---------------------------------------------------------------------------
# the lemma checks


@dataclass(frozen=True)
class ClauseResult:
    passed: bool
    witness: tuple = ()


@dataclass(frozen=True)
class HoppingLemmaReport:
    """``outcome`` is "pass", "fail" or "hypothesis_failed"."""

    outcome: str
    good_path_ok: bool
    cycle_is_longest: bool
    off_cycle_independent: bool
    long_good_path: tuple[int, ...] = ()
    m1: ClauseResult | None = None
    m2: ClauseResult | None = None
    m3: ClauseResult | None = None
    state: HoppingState | None = field(default=None, repr=False)

    def to_json(self) -> dict:
        def clause(r):
            return None if r is None else {"passed": r.passed, "witness": list(r.witness)}

        return {
            "outcome": self.outcome,
            "hypotheses": {
                "good_path": self.good_path_ok,
                "cycle_is_longest": self.cycle_is_longest,
                "off_cycle_independent": self.off_cycle_independent,
            },
            "long_good_path": list(self.long_good_path),
            "M1": clause(self.m1),
            "M2": clause(self.m2),
            "M3": clause(self.m3),
        }


def check_m_clauses(g: Graph, c: Cycle, st: HoppingState) -> tuple[ClauseResult, ClauseResult, ClauseResult]:
    x, y = st.limit_x, st.limit_y
    m1 = ClauseResult(True)
    for a, b in c.edges():
        if a in x and b in x:
            m1 = ClauseResult(False, (a, b))
            break
    m2 = ClauseResult(True)
    both = sorted(x & y)
    if both:
        m2 = ClauseResult(False, (both[0],))
    else:
        for v in sorted(y):
            stray = [u for u in g.neighbors(v) if u not in x]
            if stray:
                m2 = ClauseResult(False, (v, stray[0]))
                break
    m3 = ClauseResult(True)
    for v in sorted(y):
        inner = [u for u in g.neighbors(v) if u in y]
        if inner:
            m3 = ClauseResult(False, (v, inner[0]))
            break
    return m1, m2, m3


def verify_hopping_lemma(g: Graph, c: Cycle, require_longest: bool = True) -> HoppingLemmaReport:
    """Check M1-M3 for cycle ``c``, gated by the lemma's hypotheses.

    Hypotheses: no good path on more than |C|+1 vertices; ``c`` is a longest cycle; the
    off-cycle vertices are independent.  If any fails the outcome is "hypothesis_failed".
    """
    st = compute_xy(g, c)
    long_path = find_good_path(g, len(c) + 2)
    good_ok = long_path is None
    longest = True
    if require_longest:
        best = search.longest_cycle(g)
        longest = best is not None and best.length == len(c)
    indep = g.induced_is_edgeless(g.full & ~c.mask)
    if not (good_ok and longest and indep):
        return HoppingLemmaReport(
            "hypothesis_failed", good_ok, longest, indep, long_good_path=long_path or (), state=st
        )
    m1, m2, m3 = check_m_clauses(g, c, st)
    outcome = "pass" if m1.passed and m2.passed and m3.passed else "fail"
    return HoppingLemmaReport(outcome, good_ok, longest, indep, m1=m1, m2=m2, m3=m3, state=st)


# ---------------------------------------------------------------------------
# swapping


def swap_set(g: Graph, c: Cycle, u: int) -> frozenset[int]:
    """Cycle vertices whose two cycle neighbours are both adjacent to the off-cycle ``u``."""
    if u in c:
        raise ValueError(f"vertex {u} lies on the cycle")
    vs = c.vertices
    k = len(vs)
    nb = g.adj[u]
    return frozenset(vs[i] for i in range(k) if nb >> vs[i - 1] & 1 and nb >> vs[(i + 1) % k] & 1)


def swap_cycle(g: Graph, c: Cycle, v: int, u: int) -> Cycle:
    """Replace ``v`` on the cycle by the off-cycle vertex ``u`` at the same position."""
    if v not in swap_set(g, c, u):
        raise ValueError(f"{v} is not in the swap set of {u}")
    return Cycle(tuple(u if w == v else w for w in c.vertices))
