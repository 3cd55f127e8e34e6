import csv
import io
import json

import pytest

from helpers import cycle_graph
from orespan import harness, search
from orespan.extremal import gen_complete_bipartite, gen_H, gen_two_cliques
from orespan.graph import Graph, to_graph6
from orespan.harness import ExperimentSpec, run_experiment


def listed(experiment, *graphs):
    return ExperimentSpec(experiment, source="graphs", graphs=tuple(to_graph6(g) for g in graphs))


def without_spec(rep):
    d = rep.to_json(with_time=False)
    d.pop("spec")
    return d


def test_spec_validation():
    with pytest.raises(ValueError):
        ExperimentSpec("nope")
    with pytest.raises(ValueError):
        ExperimentSpec("main", n_min=9, n_max=8)
    with pytest.raises(ValueError):
        ExperimentSpec("main", n_min=5, n_max=8, source="exhaustive")
    with pytest.raises(ValueError):
        ExperimentSpec("main", threads=0)
    assert ExperimentSpec("main", samples=7).attempts == 1400


def test_same_seed_same_report():
    spec = ExperimentSpec("main", samples=60, seed=7)
    a, b = run_experiment(spec), run_experiment(spec)
    assert a.dumps(with_time=False) == b.dumps(with_time=False)
    assert a.tested == 60 and a.passed


def test_different_seed_different_stream():
    a = run_experiment(ExperimentSpec("main", samples=30, seed=1))
    b = run_experiment(ExperimentSpec("main", samples=30, seed=2))
    assert a.tallies != b.tallies or a.generated != b.generated


@pytest.mark.parametrize("experiment", ["main", "broom", "hopping"])
def test_worker_count_does_not_change_results(experiment):
    base = dict(experiment=experiment, samples=40, seed=11, block=10)
    one = run_experiment(ExperimentSpec(threads=1, **base))
    two = run_experiment(ExperimentSpec(threads=2, **base))
    assert without_spec(one) == without_spec(two)


def test_sharpness_graph_fails_filter():
    rep = harness.verify_main_theorem(listed("main", gen_H(4)))
    assert rep.generated == 1 and rep.tested == 0 and rep.passed


def test_two_cliques_broom():
    rep = harness.verify_broom_theorem(listed("broom", gen_two_cliques(14)))
    assert rep.tested == 1 and rep.passed
    assert rep.tallies["1-connected-only"] == 1


def test_edgeless_graph_not_tested_for_broom():
    rep = harness.verify_broom_theorem(listed("broom", Graph.empty(14)))
    assert rep.tested == 0


def test_c5_excluded_from_ore_hamiltonian_connectedness():
    rep = harness.verify_linial_and_ore(listed("linial", cycle_graph(5)))
    assert rep.tested == 1 and rep.passed
    assert rep.tallies == {"linial-tested": 1}


def test_k23_lemma51_witness():
    rep = harness.verify_lemma51(listed("lemma51", gen_complete_bipartite(2, 3)))
    assert rep.tested == 1 and rep.passed and rep.tallies["witness-n5"] == 1


def test_hamiltonian_graph_excluded_from_lemma51():
    # 2-connected with sigma2 = n - 1, but hamiltonian
    rep = harness.verify_lemma51(listed("lemma51", cycle_graph(5)))
    assert rep.tested == 0


def test_exhaustive_main_small_n():
    rep = run_experiment(ExperimentSpec("main", n_min=5, n_max=5, source="exhaustive"))
    assert rep.generated == 1024
    assert rep.passed and not rep.recorded
    assert rep.filter_rechecked == rep.tested == rep.tallies["tested:n5"] > 0


def test_small_n_failures_are_recorded_not_asserted(monkeypatch):
    monkeypatch.setattr(search, "find_spanning_jellyfish", lambda g: None)
    rep = run_experiment(listed("main", Graph.complete(6), Graph.complete(13)))
    assert [v.check for v in rep.recorded] == ["spanning-jellyfish"]
    assert [v.check for v in rep.violations] == ["spanning-jellyfish"]
    assert not rep.passed


def test_violations_replay(monkeypatch):
    monkeypatch.setattr(search, "find_spanning_jellyfish", lambda g: None)
    rep = run_experiment(listed("main", Graph.complete(13)))
    (v,) = rep.violations
    out = harness.replay("main", v.graph6)
    assert [w.check for w in out.violations] == [v.check]


def test_replay_of_passing_instance():
    out = harness.replay("main", to_graph6(Graph.complete(13)))
    assert out.tested and not out.violations and out.rechecked


def test_hopping_rejects_listed_graphs():
    with pytest.raises(ValueError):
        run_experiment(listed("hopping", Graph.complete(4)))


def test_lemma_report():
    rep = harness.verify_lemma22(ExperimentSpec("lemma22", cmax=8))
    assert rep.passed and rep.tested == rep.generated > 0
    assert any(k.startswith("clause:") for k in rep.tallies)
    rep21 = harness.verify_lemma21(ExperimentSpec("lemma21", cmax=8))
    assert rep21.passed and rep21.extra["strict_n2_failures"] > 0


def test_report_json_and_csv():
    rep = run_experiment(ExperimentSpec("broom", samples=20))
    d = json.loads(rep.dumps())
    assert d["schema_version"] == harness.SCHEMA_VERSION
    assert d["passed"] is True and "wall_time" in d
    assert d["spec"]["experiment"] == "broom"
    rows = list(csv.reader(io.StringIO(rep.tally_csv())))
    assert rows[0] == ["experiment", "key", "value"]
    assert ["broom", "tested", "20"] in rows


def test_filter_recheck_covers_every_tested_instance():
    rep = run_experiment(ExperimentSpec("linial", n_min=6, n_max=9, samples=50))
    assert rep.filter_rechecked == rep.tested == 50


def test_independent_filter_agrees_with_toolkit():
    assert harness.independent_filter("main", Graph.complete(13))
    assert not harness.independent_filter("main", gen_H(4))
    assert harness.independent_filter("broom", gen_two_cliques(14))
    assert harness.independent_filter("lemma51", gen_complete_bipartite(2, 3))


def test_hopping_suite_small_run():
    rep = harness.verify_hopping_suite(ExperimentSpec("hopping", n_min=6, n_max=9, samples=40))
    assert rep.passed and rep.tallies.get("m-tested", 0) == rep.tested == 40
