"""Command-line front end.

Exit codes: 0 success or found, 1 not found or violation, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import harness, search, validate
from .certs import Cycle
from .errors import CapExceeded, GraphParseError
from .extremal import FAMILIES, FamilySpec, gen_named
from .graph import Graph, check_conditions, degree_profile, parse_graph, sniff_format, to_edge_list, to_graph6
from .hopping import check_m_clauses, compute_xy

EXIT_OK, EXIT_NONE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def read_graph(source: str, fmt: str = "auto") -> Graph:
    if source == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(source) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {source}: {exc.strerror}") from exc
    if fmt == "auto":
        fmt = sniff_format(text)
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise UsageError("empty input")
        text = lines[0].strip()
    return parse_graph(text, fmt)


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(human)


def _fmt_s2(s2):
    return "inf" if s2 == float("inf") else s2


# ---------------------------------------------------------------------------
# subcommands


def cmd_check(args) -> int:
    g = read_graph(args.file, args.format)
    prof = degree_profile(g)
    cond = check_conditions(g)
    payload = {
        "n": g.n,
        "edges": g.num_edges(),
        "graph6": to_graph6(g),
        "delta": prof.delta,
        "sigma2": None if prof.sigma2_is_infinite else prof.sigma2,
        "sigma2_pair": list(prof.sigma2_pair) if prof.sigma2_pair else None,
        "low_set": sorted(prof.low_set),
        "degree_low": sorted(prof.degree_low),
        "classification": {str(v): c.value for v, c in sorted(prof.classification.items())},
        "meets_ore_main": cond.meets_ore_main,
        "meets_dirac_cor": cond.meets_dirac_cor,
        "connectivity": cond.connectivity,
    }
    human = "\n".join(
        [
            f"n={g.n} m={g.num_edges()} delta={prof.delta} sigma2={_fmt_s2(prof.sigma2)}"
            + (f" (pair {prof.sigma2_pair[0]},{prof.sigma2_pair[1]})" if prof.sigma2_pair else ""),
            f"connectivity (capped at 3): {cond.connectivity}",
            f"3*sigma2 >= 2n-3: {cond.meets_ore_main}",
            f"3*delta >= n-1: {cond.meets_dirac_cor}",
            f"L(G): {sorted(prof.low_set)}  low by degree: {sorted(prof.degree_low)}",
        ]
    )
    _emit(args, payload, human)
    return EXIT_OK


FINDERS = {
    "jellyfish": search.find_spanning_jellyfish,
    "broom": search.find_spanning_broom,
    "spider": search.find_spanning_spider,
    "octopus": search.find_spanning_octopus,
    "cycle": search.longest_cycle,
}


def cmd_find(args) -> int:
    g = read_graph(args.file, args.format)
    cert = FINDERS[args.what](g)
    if cert is None:
        if args.json:
            print(json.dumps({"kind": args.what, "found": False}))
        else:
            print("none")
        return EXIT_NONE
    # certificates print as JSON either way; they are the useful output
    print(json.dumps(cert.to_json()))
    return EXIT_OK


def _parse_cycle(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError as exc:
        raise UsageError(f"bad cycle list {text!r}") from exc


def cmd_hopping(args) -> int:
    g = read_graph(args.file, args.format)
    if args.cycle == "auto":
        low = degree_profile(g).low_set
        try:
            c, (length, marks) = search.l_maximal_cycle(g, low)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    else:
        seq = _parse_cycle(args.cycle)
        problems = validate.cycle_problems(g, seq)
        if problems:
            raise UsageError("not a cycle of the graph: " + "; ".join(problems))
        c = Cycle(seq)
    st = compute_xy(g, c)
    m1, m2, m3 = check_m_clauses(g, c, st)
    payload = st.to_json()
    payload["M"] = {
        name: {"passed": r.passed, "witness": list(r.witness)} for name, r in (("M1", m1), ("M2", m2), ("M3", m3))
    }
    human = "\n".join(
        [
            f"cycle {list(c.vertices)} (length {c.length})",
            f"X = {sorted(st.limit_x)}",
            f"Y = {sorted(st.limit_y)}",
            f"stabilised after {st.iterations} rounds",
            "  ".join(f"{k}: {'ok' if v['passed'] else 'fails ' + str(v['witness'])}" for k, v in payload["M"].items()),
        ]
    )
    _emit(args, payload, human)
    return EXIT_OK


def _family_params(args) -> dict:
    _, names = FAMILIES[args.family]
    params = {}
    for name in names:
        value = getattr(args, name, None)
        if value is None:
            raise UsageError(f"family {args.family} needs --{name}")
        params[name] = value
    return params


def cmd_gen(args) -> int:
    spec = FamilySpec(args.family, _family_params(args))
    g = gen_named(spec)
    if args.output == "edges":
        sys.stdout.write(to_edge_list(g))
    else:
        print(to_graph6(g))
    return EXIT_OK


def _parse_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        return int(text), int(text)
    except ValueError as exc:
        raise UsageError(f"bad n range {text!r}; use A..B or a single value") from exc


def cmd_verify(args) -> int:
    n_min, n_max = _parse_range(args.n)
    spec = harness.ExperimentSpec(
        experiment=args.experiment,
        n_min=n_min,
        n_max=n_max,
        samples=args.samples,
        seed=args.seed,
        threads=args.threads,
        source=args.source,
        cmax=args.cmax,
    )
    rep = harness.run_experiment(spec)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(rep.dumps() + "\n")
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(rep.tally_csv())
    if args.json:
        print(rep.dumps())
    else:
        status = "PASS" if rep.passed else "FAIL"
        print(
            f"{status} {spec.experiment}: generated={rep.generated} tested={rep.tested} "
            f"violations={len(rep.violations)} recorded={len(rep.recorded)} time={rep.wall_time:.1f}s"
        )
        for v in rep.violations[:10]:
            print(f"  {v.check}: {v.graph6} {v.detail}")
    return EXIT_OK if rep.passed else EXIT_NONE


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="orespan", description="Exact spanning-structure search and experiment harness.")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_input(sp):
        sp.add_argument("file", help="graph file, or - for stdin")
        sp.add_argument("--format", choices=("auto", "graph6", "edge-list"), default="auto")
        sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("check", help="degree profile, Ore/Dirac thresholds, connectivity")
    graph_input(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("find", help="search for a spanning structure or a longest cycle")
    sp.add_argument("--what", choices=sorted(FINDERS), required=True)
    graph_input(sp)
    sp.set_defaults(func=cmd_find)

    sp = sub.add_parser("hopping", help="X/Y chains for a cycle")
    sp.add_argument("--cycle", default="auto", help="'auto' or a comma separated vertex list")
    graph_input(sp)
    sp.set_defaults(func=cmd_hopping)

    sp = sub.add_parser("gen", help="generate a named family member")
    sp.add_argument("--family", choices=sorted(FAMILIES), required=True)
    for name in ("s", "n", "a", "b", "c", "d", "cycle", "tentacles", "path", "leaves"):
        sp.add_argument(f"--{name}", type=int)
    sp.add_argument("--legs", type=lambda t: tuple(int(x) for x in t.split(",") if x), help="e.g. 2,1,1")
    sp.add_argument("--output", choices=("graph6", "edges"), default="graph6")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("verify", help="run a theorem or lemma experiment")
    sp.add_argument("--experiment", choices=harness.EXPERIMENTS, required=True)
    sp.add_argument("--n", default="13..15", help="vertex range A..B")
    sp.add_argument("--samples", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=42)
    sp.add_argument("--threads", type=int, default=1)
    sp.add_argument("--source", choices=("random", "exhaustive"), default="random")
    sp.add_argument("--cmax", type=int, default=14, help="largest cycle/path length for lemma sweeps")
    sp.add_argument("--out", help="write the JSON report here")
    sp.add_argument("--csv", help="write per-check tallies as CSV here")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, GraphParseError, CapExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
