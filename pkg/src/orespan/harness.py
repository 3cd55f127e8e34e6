"""Theorem- and lemma-level experiments with deterministic, replayable reports.

An experiment is a filter (the theorem's hypothesis) plus a check (its conclusion), run
over an instance stream.  Streams are either seeded random samples, the exhaustive set of
labeled graphs on n vertices, or an explicit list of graph6 strings.  Instance ``k`` of a
random stream depends only on ``(seed, k)``, and instances are processed in fixed-size
blocks whose results are merged in index order, so a report does not depend on the
number of worker processes.
"""
from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import lemmas, sampling, search
from .certs import Cycle
from .errors import CapExceeded
from .graph import Graph, degree_profile, from_graph6, is_k_connected, ore_main_holds, to_graph6
from .hopping import (
    compute_xy,
    consecutive_x1_on_cycle,
    find_hopping_paths,
    is_hopping_path,
    path_height,
    reduce_hopping_path,
    swap_cycle,
    swap_set,
    verify_hopping_lemma,
)

SCHEMA_VERSION = 1
EXPERIMENTS = ("main", "broom", "linial", "lemma51", "lemma21", "lemma22", "hopping")
SOURCES = ("random", "exhaustive", "graphs")
THEOREM_MIN_N = 13  # the two sweep theorems are stated for n >= 13
EXHAUSTIVE_MAX_N = 7


@dataclass(frozen=True)
class ExperimentSpec:
    experiment: str
    n_min: int = 13
    n_max: int = 15
    samples: int = 1000
    seed: int = 42
    threads: int = 1
    source: str = "random"
    graphs: tuple[str, ...] = ()  # graph6 strings when source == "graphs"
    cmax: int = 14  # largest cycle length / path order for the lemma sweeps
    path_ts: tuple[int, ...] = (2, 3)
    max_attempts: int = 0  # candidates drawn before giving up; 0 means 200 * samples
    block: int = 100

    def __post_init__(self):
        if self.experiment not in EXPERIMENTS:
            raise ValueError(f"unknown experiment {self.experiment!r}; choose from {EXPERIMENTS}")
        if self.source not in SOURCES:
            raise ValueError(f"unknown source {self.source!r}")
        if self.n_min > self.n_max:
            raise ValueError("n_min > n_max")
        if self.source == "exhaustive" and self.n_max > EXHAUSTIVE_MAX_N:
            raise ValueError(f"exhaustive sweeps stop at n = {EXHAUSTIVE_MAX_N}")
        if self.threads < 1 or self.block < 1:
            raise ValueError("threads and block must be positive")
        object.__setattr__(self, "graphs", tuple(self.graphs))
        object.__setattr__(self, "path_ts", tuple(self.path_ts))

    @property
    def attempts(self) -> int:
        return self.max_attempts or 200 * max(self.samples, 1)


@dataclass
class Violation:
    graph6: str
    check: str
    detail: str = ""
    index: int = -1


@dataclass
class VerifyReport:
    spec: ExperimentSpec
    generated: int = 0
    passing_filter: int = 0
    tested: int = 0
    skipped: dict = field(default_factory=dict)  # reason -> count
    violations: list = field(default_factory=list)
    # failures outside the asserted range (e.g. n below the theorem's bound), kept as data
    recorded: list = field(default_factory=list)
    tallies: dict = field(default_factory=dict)
    filter_rechecked: int = 0
    wall_time: float = 0.0
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self, with_time: bool = True) -> dict:
        out = {
            "schema_version": SCHEMA_VERSION,
            "spec": asdict(self.spec),
            "generated": self.generated,
            "passing_filter": self.passing_filter,
            "tested": self.tested,
            "skipped": dict(sorted(self.skipped.items())),
            "violations": [asdict(v) for v in self.violations],
            "recorded": [asdict(v) for v in self.recorded],
            "tallies": dict(sorted(self.tallies.items())),
            "filter_rechecked": self.filter_rechecked,
            "extra": self.extra,
            "passed": self.passed,
        }
        if with_time:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def dumps(self, with_time: bool = True) -> str:
        return json.dumps(self.to_json(with_time), indent=2)

    def tally_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["experiment", "key", "value"])
        exp = self.spec.experiment
        for key, value in (
            ("generated", self.generated),
            ("passing_filter", self.passing_filter),
            ("tested", self.tested),
            ("violations", len(self.violations)),
            ("recorded", len(self.recorded)),
        ):
            w.writerow([exp, key, value])
        for reason, count in sorted(self.skipped.items()):
            w.writerow([exp, f"skipped:{reason}", count])
        for key, value in sorted(self.tallies.items()):
            w.writerow([exp, key, value])
        return buf.getvalue()


def _bump(d: dict, key: str, by: int = 1) -> None:
    d[key] = d.get(key, 0) + by


# ---------------------------------------------------------------------------
# per-instance outcome, merged in index order


@dataclass
class Outcome:
    index: int
    passed_filter: bool = False
    tested: bool = False
    skipped: str = ""
    violations: list = field(default_factory=list)
    recorded: list = field(default_factory=list)
    tallies: dict = field(default_factory=dict)
    rechecked: bool = False


def _absorb(rep: VerifyReport, out: Outcome) -> None:
    rep.generated += 1
    rep.passing_filter += out.passed_filter
    rep.tested += out.tested
    rep.filter_rechecked += out.rechecked
    if out.skipped:
        _bump(rep.skipped, out.skipped)
    rep.violations += out.violations
    rep.recorded += out.recorded
    for k, v in out.tallies.items():
        _bump(rep.tallies, k, v)


# ---------------------------------------------------------------------------
# independent hypothesis re-check (plain sets, no bitsets, no shared helpers)


def _sets(g: Graph) -> list[set[int]]:
    return [{u for u in range(g.n) if g.has_edge(v, u)} for v in range(g.n)]


def _plain_sigma2(nb: list[set[int]]):
    vals = [len(nb[u]) + len(nb[v]) for u in range(len(nb)) for v in range(u + 1, len(nb)) if v not in nb[u]]
    return min(vals) if vals else None


def _plain_connected_without(nb: list[set[int]], gone: set[int]) -> bool:
    rest = [v for v in range(len(nb)) if v not in gone]
    if not rest:
        return False
    seen = {rest[0]}
    stack = [rest[0]]
    while stack:
        v = stack.pop()
        for u in nb[v]:
            if u not in gone and u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(rest)


def _plain_k_connected(nb: list[set[int]], k: int) -> bool:
    n = len(nb)
    if n <= k:
        return False
    if not _plain_connected_without(nb, set()):
        return False
    return k < 2 or all(_plain_connected_without(nb, {v}) for v in range(n))


def _plain_ore(nb: list[set[int]]) -> bool:
    s2 = _plain_sigma2(nb)
    return s2 is None or 3 * s2 >= 2 * len(nb) - 3


def independent_filter(experiment: str, g: Graph) -> bool:
    """Re-derive an instance's hypothesis without the toolkit's analysis code."""
    nb = _sets(g)
    n = g.n
    if experiment == "main":
        return _plain_k_connected(nb, 2) and _plain_ore(nb)
    if experiment == "broom":
        return _plain_k_connected(nb, 1) and _plain_ore(nb)
    if experiment == "linial":
        s2 = _plain_sigma2(nb)
        return _plain_k_connected(nb, 2) or (n >= 2 and (s2 is None or s2 >= n + 1))
    if experiment == "lemma51":
        return _plain_k_connected(nb, 2) and _plain_sigma2(nb) == n - 1
    raise ValueError(experiment)


# ---------------------------------------------------------------------------
# graph experiments: filter + check on one graph


def _violation(g: Graph, check: str, detail: str, index: int) -> Violation:
    return Violation(to_graph6(g), check, detail, index)


def _run_main(g: Graph, out: Outcome, asserted: bool) -> None:
    if not (ore_main_holds(g.n, degree_profile(g).sigma2) and is_k_connected(g, 2)):
        return
    out.passed_filter = True
    cert = search.find_spanning_jellyfish(g)
    out.tested = True
    if cert is None:
        v = _violation(g, "spanning-jellyfish", "no spanning jellyfish", out.index)
        (out.violations if asserted else out.recorded).append(v)
    else:
        out.tallies["hamiltonian" if not cert.tentacles else "with-tentacles"] = 1


def _run_broom(g: Graph, out: Outcome, asserted: bool) -> None:
    if not (ore_main_holds(g.n, degree_profile(g).sigma2) and g.n >= 1 and g.is_connected()):
        return
    out.passed_filter = True
    cert = search.find_spanning_broom(g)
    out.tested = True
    if cert is None:
        v = _violation(g, "spanning-broom", "no spanning broom", out.index)
        (out.violations if asserted else out.recorded).append(v)
    else:
        out.tallies["hamiltonian-path" if not cert.leaves else "with-leaves"] = 1
        out.tallies["2-connected" if is_k_connected(g, 2) else "1-connected-only"] = 1


def _run_linial(g: Graph, out: Outcome, asserted: bool) -> None:
    n = g.n
    s2 = degree_profile(g).sigma2
    two_conn = is_k_connected(g, 2)
    dense = n >= 2 and s2 >= n + 1
    if not (two_conn or dense):
        return
    out.passed_filter = out.tested = True
    if two_conn:
        out.tallies["linial-tested"] = 1
        c = search.longest_cycle(g)
        length = 0 if c is None else c.length
        if length < min(s2, n):
            out.violations.append(_violation(g, "linial", f"longest cycle {length} < min(sigma2={s2}, n={n})", out.index))
    if dense:
        out.tallies["ore-hc-tested"] = 1
        if not search.is_hamiltonian_connected(g):
            out.violations.append(_violation(g, "ore-hamiltonian-connected", f"sigma2={s2}", out.index))


def _run_lemma51(g: Graph, out: Outcome, asserted: bool) -> None:
    n = g.n
    if not (degree_profile(g).sigma2 == n - 1 and is_k_connected(g, 2)):
        return
    if search.is_hamiltonian(g):
        out.tallies["hamiltonian-excluded"] = 1
        return
    out.passed_filter = out.tested = True
    out.tallies[f"witness-n{n}"] = 1
    if n % 2 == 0:
        out.violations.append(_violation(g, "parity", f"n={n} is even", out.index))
    elif not search.contains_complete_bipartite(g, (n - 1) // 2, (n + 1) // 2):
        out.violations.append(_violation(g, "bipartite-copy", f"no K_{{{(n - 1) // 2},{(n + 1) // 2}}}", out.index))


GRAPH_RUNNERS = {"main": _run_main, "broom": _run_broom, "linial": _run_linial, "lemma51": _run_lemma51}


def evaluate_graph(experiment: str, g: Graph, index: int = -1) -> Outcome:
    """Filter and check one graph; theorem sweeps assert only from n = 13 on."""
    out = Outcome(index)
    asserted = experiment not in ("main", "broom") or g.n >= THEOREM_MIN_N
    try:
        GRAPH_RUNNERS[experiment](g, out, asserted)
    except CapExceeded:
        out.passed_filter = True
        out.tested = False
        out.skipped = "cap-exceeded"
        return out
    if out.tested:
        if not independent_filter(experiment, g):
            out.violations.append(_violation(g, "filter-recheck", "independent hypothesis check disagrees", index))
        out.rechecked = True
    return out


# ---------------------------------------------------------------------------
# random candidates


def _lemma51_candidate(rng, n: int) -> tuple[str, Graph]:
    r = rng.random()
    if r < 0.5 and n >= 3:
        k = n // 2
        g = sampling.near_bipartite(rng, k, n - k, inner=rng.random(), drop=rng.randint(0, 1))
        return "near-bipartite", g
    if r < 0.75:
        base = sampling.gnp(rng, n, rng.uniform(0.2, 0.6))
        return "gnp-raised", sampling.raise_to_threshold(rng, base, lambda s2: s2 >= n - 1)
    return "gnp0.55", sampling.gnp(rng, n, 0.55)


def random_candidate(experiment: str, seed: int, index: int, n_min: int, n_max: int) -> tuple[str, Graph]:
    rng = sampling.instance_rng(seed, index, experiment)
    n = rng.randint(n_min, n_max)
    if experiment == "main":
        return sampling.sample_ore_graph(rng, n)
    if experiment == "broom":
        return sampling.sample_connected_ore_graph(rng, n)
    if experiment == "linial":
        if rng.random() < 0.5:
            p = rng.choice(sampling.ER_PROBS)
            return f"gnp{p}", sampling.gnp(rng, n, p)
        base = sampling.gnp(rng, n, rng.uniform(0.3, 0.7))
        return "gnp-raised", sampling.raise_to_threshold(rng, base, lambda s2: s2 >= n + 1)
    if experiment == "lemma51":
        return _lemma51_candidate(rng, n)
    raise ValueError(experiment)


# ---------------------------------------------------------------------------
# hopping suite: one (graph, cycle) instance exercises M1-M3, swapping and reduction


HOPPING_PATH_LIMIT = 64


def _hopping_graph(rng, n_min: int, n_max: int) -> tuple[str, Graph]:
    if rng.random() < 0.6:
        # a < b <= 2a + 1 keeps the Ore bound for the complete bipartite core
        a = rng.randint(2, 4)
        b = rng.randint(a + 1, min(2 * a + 1, 9 - a))
        return "near-bipartite", sampling.near_bipartite(rng, a, b, inner=rng.random(), drop=rng.randint(0, 2))
    n = rng.randint(n_min, n_max)
    return "gnp", sampling.gnp(rng, n, rng.uniform(0.3, 0.6))


def _check_m_lemma(g: Graph, c: Cycle, out: Outcome) -> None:
    rep = verify_hopping_lemma(g, c)
    if rep.outcome == "hypothesis_failed":
        out.tallies["m-hypothesis-failed"] = 1
        return
    out.passed_filter = out.tested = True
    out.tallies["m-tested"] = 1
    for name, res in (("M1", rep.m1), ("M2", rep.m2), ("M3", rep.m3)):
        if not res.passed:
            out.violations.append(_violation(g, name, f"cycle {list(c.vertices)} witness {list(res.witness)}", out.index))
    # the companion claim: no hopping path, no consecutive X_1 vertices on C
    st = rep.state
    pair = consecutive_x1_on_cycle(c, st)
    if pair is not None:
        out.violations.append(_violation(g, "no-consecutive-x1", f"cycle {list(c.vertices)} pair {list(pair)}", out.index))
    hp = find_hopping_paths(g, c, st, limit=1)
    if hp:
        out.violations.append(_violation(g, "no-hopping-path", f"cycle {list(c.vertices)} path {list(hp[0])}", out.index))


def _check_swaps(g: Graph, c: Cycle, low: frozenset, out: Outcome) -> None:
    """Swap invariance under the ambient hypotheses; weaker settings are only tallied."""
    prof = degree_profile(g)
    off = g.full & ~c.mask
    ambient = (
        is_k_connected(g, 2)
        and ore_main_holds(g.n, prof.sigma2)
        and off != 0
        and g.induced_is_edgeless(off)
    )
    before = compute_xy(g, c)
    swaps = 0
    for u in sorted(v for v in range(g.n) if v not in c):
        for v in sorted(swap_set(g, c, u) - low):
            c2 = swap_cycle(g, c, v, u)
            after = compute_xy(g, c2)
            same = before.limit_x == after.limit_x and before.limit_y == after.limit_y
            # the swapped cycle is L-maximum too, so its complement must be edgeless as well
            asserted = ambient and g.induced_is_edgeless(g.full & ~c2.mask)
            if asserted:
                swaps += 1
                if not same:
                    detail = f"cycle {list(c.vertices)} swap v={v} u={u}"
                    out.violations.append(_violation(g, "swap-invariance", detail, out.index))
            else:
                out.tallies["swap-weakened"] = out.tallies.get("swap-weakened", 0) + 1
                if not same:
                    out.tallies["swap-weakened-differs"] = out.tallies.get("swap-weakened-differs", 0) + 1
    if swaps:
        out.tallies["swap-instances"] = 1
        out.tallies["swaps-checked"] = swaps


def _check_reduction(g: Graph, rng, out: Outcome) -> None:
    """Draw a random non-spanning cycle and push every hopping path down to height 1."""
    n = g.n
    if n < 4:
        return
    k = rng.randint(3, n - 1)
    req = 0
    for v in rng.sample(range(n), k):
        req |= 1 << v
    seq = search._cycle_through(g.adj, g.full, rng.randrange(n), req)
    if not seq or len(seq) == n:
        return
    c = Cycle(tuple(seq))
    st = compute_xy(g, c)
    if consecutive_x1_on_cycle(c, st) is not None:
        return
    for p in find_hopping_paths(g, c, st, limit=HOPPING_PATH_LIMIT):
        _bump(out.tallies, f"reduce-from-height-{path_height(st, p)}")
        try:
            res = reduce_hopping_path(g, c, p, st)
        except AssertionError as exc:
            out.violations.append(_violation(g, "reduce", f"cycle {list(c.vertices)} path {list(p)}: {exc}", out.index))
            continue
        ok, bad = is_hopping_path(g, c, res.vertices, st)
        if not ok or res.height != 1:
            detail = f"cycle {list(c.vertices)} path {list(p)} -> {list(res.vertices)} {bad}"
            out.violations.append(_violation(g, "reduce", detail, out.index))


def evaluate_hopping(seed: int, index: int, n_min: int, n_max: int) -> Outcome:
    out = Outcome(index)
    rng = sampling.instance_rng(seed, index, "hopping")
    model, g = _hopping_graph(rng, n_min, n_max)
    out.tallies[f"model:{model}"] = 1
    try:
        low = degree_profile(g).low_set
        if any(g.adj):
            try:
                c, _ = search.l_maximal_cycle(g, low)
            except ValueError:
                c = None
            if c is not None and c.length < g.n:
                _check_m_lemma(g, c, out)
                _check_swaps(g, c, low, out)
        _check_reduction(g, rng, out)
    except CapExceeded:
        out.skipped = "cap-exceeded"
    return out


# ---------------------------------------------------------------------------
# drivers


def _random_block(spec: ExperimentSpec, start: int, stop: int) -> list[tuple[str, Outcome]]:
    res = []
    for k in range(start, stop):
        if spec.experiment == "hopping":
            res.append(("", evaluate_hopping(spec.seed, k, spec.n_min, spec.n_max)))
            continue
        model, g = random_candidate(spec.experiment, spec.seed, k, spec.n_min, spec.n_max)
        res.append((model, evaluate_graph(spec.experiment, g, k)))
    return res


def _exhaustive_block(experiment: str, n: int, start: int, stop: int) -> VerifyReport:
    """Partial report for a contiguous mask range (violation indices are edge masks)."""
    rep = VerifyReport(ExperimentSpec(experiment, n, n, source="exhaustive"))
    for mask, g in sampling.labeled_graphs(n, start, stop):
        _absorb(rep, evaluate_graph(experiment, g, mask))
    return rep


def _pool(spec: ExperimentSpec):
    return ProcessPoolExecutor(max_workers=spec.threads) if spec.threads > 1 else None


def _run_random(spec: ExperimentSpec, rep: VerifyReport) -> None:
    pool = _pool(spec)
    try:
        nxt = 0
        done = False
        width = spec.threads
        while not done and nxt < spec.attempts:
            ranges = []
            for _ in range(width):
                if nxt >= spec.attempts:
                    break
                ranges.append((nxt, min(nxt + spec.block, spec.attempts)))
                nxt = ranges[-1][1]
            if pool is None:
                results = [_random_block(spec, a, b) for a, b in ranges]
            else:
                futs = [pool.submit(_random_block, spec, a, b) for a, b in ranges]
                results = [f.result() for f in futs]
            for block in results:
                for model, out in block:
                    _absorb(rep, out)
                    if model:
                        _bump(rep.tallies, f"generated:{model}")
                        if out.tested:
                            _bump(rep.tallies, f"tested:{model}")
                    if rep.tested >= spec.samples:
                        done = True
                        break
                if done:
                    break
    finally:
        if pool is not None:
            pool.shutdown()
    if rep.tested < spec.samples:
        rep.extra["shortfall"] = spec.samples - rep.tested


def _run_exhaustive(spec: ExperimentSpec, rep: VerifyReport) -> None:
    pool = _pool(spec)
    try:
        for n in range(spec.n_min, spec.n_max + 1):
            total = 1 << (n * (n - 1) // 2)
            chunk = max(1, total // (8 * spec.threads)) if spec.threads > 1 else total
            ranges = [(a, min(a + chunk, total)) for a in range(0, total, chunk)]
            if pool is None:
                parts = [_exhaustive_block(spec.experiment, n, a, b) for a, b in ranges]
            else:
                parts = list(pool.map(_exhaustive_block, *zip(*[(spec.experiment, n, a, b) for a, b in ranges])))
            for part in parts:
                _merge(rep, part)
                _bump(rep.tallies, f"tested:n{n}", part.tested)
    finally:
        if pool is not None:
            pool.shutdown()


def _merge(rep: VerifyReport, part: VerifyReport) -> None:
    rep.generated += part.generated
    rep.passing_filter += part.passing_filter
    rep.tested += part.tested
    rep.filter_rechecked += part.filter_rechecked
    for k, v in part.skipped.items():
        _bump(rep.skipped, k, v)
    rep.violations += part.violations
    rep.recorded += part.recorded
    for k, v in part.tallies.items():
        _bump(rep.tallies, k, v)


def _run_listed(spec: ExperimentSpec, rep: VerifyReport) -> None:
    for k, text in enumerate(spec.graphs):
        g = from_graph6(text)
        if spec.experiment == "hopping":
            raise ValueError("the hopping suite draws its own instances")
        _absorb(rep, evaluate_graph(spec.experiment, g, k))


def _run_lemma(spec: ExperimentSpec, rep: VerifyReport) -> None:
    if spec.experiment == "lemma21":
        sweep = lemmas.sweep_lemma21(spec.cmax)
    else:
        sweep = lemmas.sweep_lemma22(spec.cmax, spec.path_ts)
    rep.generated = rep.passing_filter = rep.tested = sweep.configs
    for clause, count in sweep.by_clause.items():
        rep.tallies[f"clause:{clause}"] = count
    rep.violations = [Violation("", v["clause"], json.dumps(v)) for v in sweep.violations]
    if sweep.violation_count > len(sweep.violations):
        rep.extra["violations_not_listed"] = sweep.violation_count - len(sweep.violations)
    if spec.experiment == "lemma21":
        rep.extra["strict_n2_failures"] = sweep.strict_n2_failures
        rep.extra["strict_n2_example"] = sweep.strict_n2_example


def run_experiment(spec: ExperimentSpec) -> VerifyReport:
    rep = VerifyReport(spec)
    t0 = time.perf_counter()
    if spec.experiment in ("lemma21", "lemma22"):
        _run_lemma(spec, rep)
    elif spec.source == "graphs":
        _run_listed(spec, rep)
    elif spec.source == "exhaustive":
        if spec.experiment == "hopping":
            raise ValueError("the hopping suite has no exhaustive mode")
        _run_exhaustive(spec, rep)
    else:
        _run_random(spec, rep)
    rep.wall_time = time.perf_counter() - t0
    return rep


def verify_main_theorem(spec: ExperimentSpec) -> VerifyReport:
    return run_experiment(_as(spec, "main"))


def verify_broom_theorem(spec: ExperimentSpec) -> VerifyReport:
    return run_experiment(_as(spec, "broom"))


def verify_linial_and_ore(spec: ExperimentSpec) -> VerifyReport:
    return run_experiment(_as(spec, "linial"))


def verify_lemma51(spec: ExperimentSpec) -> VerifyReport:
    return run_experiment(_as(spec, "lemma51"))


def verify_lemma21(spec: ExperimentSpec) -> VerifyReport:
    return run_experiment(_as(spec, "lemma21"))


def verify_lemma22(spec: ExperimentSpec) -> VerifyReport:
    return run_experiment(_as(spec, "lemma22"))


def verify_hopping_suite(spec: ExperimentSpec) -> VerifyReport:
    return run_experiment(_as(spec, "hopping"))


def _as(spec: ExperimentSpec, experiment: str) -> ExperimentSpec:
    if spec.experiment == experiment:
        return spec
    d = asdict(spec)
    d["experiment"] = experiment
    return ExperimentSpec(**d)


def replay(experiment: str, graph6: str) -> Outcome:
    """Re-run one recorded instance from its graph6 bytes."""
    return evaluate_graph(experiment, from_graph6(graph6))
