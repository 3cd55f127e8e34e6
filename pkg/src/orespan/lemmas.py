"""Abstract position-set inequalities on cycles and paths, and exhaustive sweeps of them.

Positions are 0-based.  On a cycle of length ``c`` positions are taken modulo ``c``.  On a
path of order ``q`` position ``k`` is the vertex ``w_{k+1}``, so the penultimate vertex
``w_{q-1}`` is position ``q-2`` and the last vertex ``w_q`` is position ``q-1``.

Rational right-hand sides are cleared by doubling, so every comparison is integral.
"""
from __future__ import annotations

from dataclasses import dataclass, field


def indicator(s) -> int:
    """``I_S``: 1 when the set is nonempty."""
    return 1 if s else 0


def j_index(a, b) -> int:
    """``J_{A,B} = I_{A-B} + I_{B-A}``."""
    a, b = frozenset(a), frozenset(b)
    return indicator(a - b) + indicator(b - a)


@dataclass(frozen=True)
class LemmaConfig:
    """A pair of marked position sets on a cycle (``kind="cycle"``) or a path (``kind="path"``).

    ``length`` is the cycle length c or the path order q.  ``gap`` is the distance
    parameter: q for the cycle lemma, t for the path lemma.
    """

    kind: str
    length: int
    a: frozenset[int]
    b: frozenset[int]
    gap: int

    def __post_init__(self):
        if self.kind not in ("cycle", "path"):
            raise ValueError(f"kind must be 'cycle' or 'path', got {self.kind!r}")
        object.__setattr__(self, "a", frozenset(self.a))
        object.__setattr__(self, "b", frozenset(self.b))

    @property
    def i_a(self) -> int:
        return indicator(self.a)

    @property
    def j(self) -> int:
        return j_index(self.a, self.b)

    def to_json(self) -> dict:
        return {"kind": self.kind, "length": self.length, "A": sorted(self.a), "B": sorted(self.b), "gap": self.gap}


@dataclass(frozen=True)
class Inequality:
    """One evaluated clause: ``lhs >= rhs`` (or ``>`` when ``strict``), both doubled."""

    clause: str
    lhs2: int
    rhs2: int
    strict: bool = False

    @property
    def holds(self) -> bool:
        return self.lhs2 > self.rhs2 if self.strict else self.lhs2 >= self.rhs2


class HypothesisError(ValueError):
    pass


# ---------------------------------------------------------------------------
# cycle lemma


def _cycle_dist(i: int, j: int, c: int) -> int:
    d = abs(i - j) % c
    return min(d, c - d)


def cycle_hypothesis_problems(cfg: LemmaConfig) -> list[str]:
    c, q, a, b = cfg.length, cfg.gap, cfg.a, cfg.b
    out = []
    if not 2 <= q or 2 * q > c:
        out.append("need 2 <= q <= c/2")
    if not a or not b:
        out.append("A and B must be nonempty")
    if any(not 0 <= v < c for v in a | b):
        out.append("position out of range")
        return out
    for name, s in (("A", a), ("B", b)):
        if any((v + 1) % c in s for v in s):
            out.append(f"{name} has consecutive positions")
    if len(a | b) < 2:
        out.append("|A u B| < 2")
    for i in a:
        for j in b:
            d = _cycle_dist(i, j, c)
            if 0 < d <= q:
                out.append(f"positions {i} in A and {j} in B at distance {d}")
                return out
    return out


def lemma21_clauses(cfg: LemmaConfig, strict_n2: bool = False) -> list[Inequality]:
    """The applicable inequalities for a cycle config (no hypothesis check).

    With ``strict_n2`` the second clause uses the strict comparison as typeset; by default
    it uses the non-strict form that the counting argument actually yields.
    """
    c, q, a, b = cfg.length, cfg.gap, cfg.a, cfg.b
    if a == b:
        return [Inequality("N1", 2 * c, 2 * (q + 1) * len(a))]
    q2 = 1 if q == 2 else 0
    jj = j_index(a, b)
    rhs2 = (4 - q2) * (len(a) + len(b)) + 2 * (2 * q - 6) + 4 * jj + (5 - 2 * jj) * q2
    out = [Inequality("N2", 2 * c, rhs2, strict=strict_n2)]
    if q == 2:
        out.append(Inequality("N3", 2 * c, 2 * (len(a) + 2 * len(b) + 1)))
    return out


def check_lemma21(cfg: LemmaConfig, strict_n2: bool = False) -> bool:
    if cfg.kind != "cycle":
        raise ValueError("check_lemma21 takes a cycle config")
    problems = cycle_hypothesis_problems(cfg)
    if problems:
        raise HypothesisError("; ".join(problems))
    return all(ineq.holds for ineq in lemma21_clauses(cfg, strict_n2))


# ---------------------------------------------------------------------------
# path lemma


def path_hypothesis_problems(cfg: LemmaConfig) -> list[str]:
    q, t, a, b = cfg.length, cfg.gap, cfg.a, cfg.b
    out = []
    if q < 2:
        out.append("path needs at least 2 vertices")
    if not a or not b:
        out.append("A and B must be nonempty")
    if any(not 0 <= v < q for v in a | b):
        out.append("position out of range")
        return out
    for name, s in (("A", a), ("B", b)):
        if any(v + 1 in s for v in s):
            out.append(f"{name} has consecutive positions")
    if q - 2 in b:
        out.append("penultimate vertex lies in B")
    for i in a:
        for j in b:
            if i > j and i - j < t + 1:
                out.append(f"A-position {i} follows B-position {j} by less than t+1")
                return out
    return out


def lemma22_clauses(cfg: LemmaConfig) -> list[Inequality]:
    q, t, a, b = cfg.length, cfg.gap, cfg.a, cfg.b
    if max(a) <= min(b):
        return [Inequality("a", 2 * q, 2 * (2 * (len(a) + len(b) - 1) - 1))]
    if t < 2:
        return []
    rhs = 2 * len(a) + len(b) + t - 4 + (0 if q - 1 in a else 1) + (0 if a & b else 1)
    return [Inequality("b", 2 * q, 2 * rhs)]


def check_lemma22(cfg: LemmaConfig) -> bool:
    if cfg.kind != "path":
        raise ValueError("check_lemma22 takes a path config")
    problems = path_hypothesis_problems(cfg)
    if problems:
        raise HypothesisError("; ".join(problems))
    return all(ineq.holds for ineq in lemma22_clauses(cfg))


# ---------------------------------------------------------------------------
# exhaustive sweeps (bitmask enumeration; the checkers above are the slow reference)


def _members(m: int) -> frozenset[int]:
    out = []
    i = 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return frozenset(out)


def cycle_independent_masks(c: int) -> list[int]:
    """Nonempty position masks on a c-cycle with no two cyclically consecutive positions."""
    full = (1 << c) - 1
    out = []
    for m in range(1, 1 << c):
        rot = ((m << 1) | (m >> (c - 1))) & full
        if not m & rot:
            out.append(m)
    return out


def path_independent_masks(q: int) -> list[int]:
    return [m for m in range(1, 1 << q) if not m & (m >> 1)]


@dataclass
class SweepResult:
    lemma: str
    configs: int = 0
    by_clause: dict = field(default_factory=dict)
    violation_count: int = 0
    violations: list = field(default_factory=list)  # the first few, for replay
    # counterexamples to the typeset strict N2 (all of them equality cases)
    strict_n2_failures: int = 0
    strict_n2_example: dict | None = None

    @property
    def passed(self) -> bool:
        return self.violation_count == 0

    def to_json(self) -> dict:
        return {
            "lemma": self.lemma,
            "configs": self.configs,
            "by_clause": dict(sorted(self.by_clause.items())),
            "violation_count": self.violation_count,
            "violations": self.violations,
            "strict_n2_failures": self.strict_n2_failures,
            "strict_n2_example": self.strict_n2_example,
            "passed": self.passed,
        }


def _tally(res: SweepResult, cfg: LemmaConfig, ineqs: list[Inequality], keep: int) -> None:
    res.configs += 1
    for ineq in ineqs:
        res.by_clause[ineq.clause] = res.by_clause.get(ineq.clause, 0) + 1
        if not ineq.holds:
            res.violation_count += 1
            if len(res.violations) < keep:
                res.violations.append({"clause": ineq.clause, **cfg.to_json(), "lhs2": ineq.lhs2, "rhs2": ineq.rhs2})
        if ineq.clause == "N2" and ineq.lhs2 <= ineq.rhs2:
            res.strict_n2_failures += 1
            if res.strict_n2_example is None:
                res.strict_n2_example = cfg.to_json()


def sweep_lemma21(cmax: int = 14, cmin: int = 4, keep: int = 20) -> SweepResult:
    """All admissible cycle configs with cmin <= c <= cmax and every 2 <= q <= c/2."""
    res = SweepResult("lemma21")
    for c in range(max(cmin, 4), cmax + 1):
        subs = cycle_independent_masks(c)
        members = {m: _members(m) for m in subs}
        counts = {m: bin(m).count("1") for m in subs}
        full = (1 << c) - 1
        for q in range(2, c // 2 + 1):
            # positions at cyclic distance 1..q from 0
            ball0 = 0
            for d in range(1, q + 1):
                ball0 |= 1 << d | 1 << (c - d)
            ball = [((ball0 << i) | (ball0 >> (c - i))) & full for i in range(c)]
            for am in subs:
                forbid = 0
                for i in members[am]:
                    forbid |= ball[i]
                for bm in subs:
                    if bm & forbid or (am == bm and counts[am] < 2):
                        continue
                    cfg = LemmaConfig("cycle", c, members[am], members[bm], q)
                    _tally(res, cfg, lemma21_clauses(cfg), keep)
    return res


def sweep_lemma22(qmax: int = 14, ts=(2, 3), qmin: int = 2, keep: int = 20) -> SweepResult:
    """All admissible path configs with qmin <= q <= qmax and t in ``ts``."""
    res = SweepResult("lemma22")
    for q in range(max(qmin, 2), qmax + 1):
        subs = path_independent_masks(q)
        members = {m: _members(m) for m in subs}
        penult = 1 << (q - 2)
        for t in ts:
            for am in subs:
                forbid = penult
                for i in members[am]:
                    lo = max(i - t, 0)
                    forbid |= ((1 << i) - 1) & ~((1 << lo) - 1)
                for bm in subs:
                    if bm & forbid:
                        continue
                    cfg = LemmaConfig("path", q, members[am], members[bm], t)
                    _tally(res, cfg, lemma22_clauses(cfg), keep)
    return res
