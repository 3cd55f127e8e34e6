"""Run the random theorem sweeps and the configuration sweeps, writing one JSON report each.

    python scripts/run_sweeps.py --out results/ --threads 1
"""
import argparse
import os

from orespan.harness import ExperimentSpec, run_experiment

PLAN = [
    ExperimentSpec("main", n_min=13, n_max=15, samples=10000),
    ExperimentSpec("broom", n_min=13, n_max=15, samples=5000),
    ExperimentSpec("linial", n_min=8, n_max=12, samples=2000),
    ExperimentSpec("lemma51", n_min=5, n_max=11, samples=500),
    ExperimentSpec("hopping", n_min=8, n_max=14, samples=1000),
    ExperimentSpec("lemma21", cmax=14),
    ExperimentSpec("lemma22", cmax=14),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="results")
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--only", nargs="*", help="experiment ids to run (default: all)")
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)
    failed = False
    for base in PLAN:
        if args.only and base.experiment not in args.only:
            continue
        spec = ExperimentSpec(**{**base.__dict__, "seed": args.seed, "threads": args.threads})
        rep = run_experiment(spec)
        stem = os.path.join(args.out, spec.experiment)
        with open(stem + ".json", "w") as fh:
            fh.write(rep.dumps() + "\n")
        with open(stem + ".csv", "w") as fh:
            fh.write(rep.tally_csv())
        failed |= not rep.passed
        print(
            f"{'PASS' if rep.passed else 'FAIL'} {spec.experiment:8s} tested={rep.tested:7d} "
            f"violations={len(rep.violations)} time={rep.wall_time:.1f}s"
        )
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
