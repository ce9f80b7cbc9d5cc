import pytest

from hesitant import (
    GeneratorConfig,
    UnknownLawError,
    hunt_counterexample,
    random_hfs,
    run_suite,
)
from hesitant.laws import replay_witness, run_law
from hesitant.laws.engine import replay_fixtures

SMALL = GeneratorConfig(trials=150)


def test_config_validation():
    with pytest.raises(ValueError):
        GeneratorConfig(universe_size=(0, 3))
    with pytest.raises(ValueError):
        GeneratorConfig(cardinality=(4, 2))
    with pytest.raises(ValueError):
        GeneratorConfig(degree_grid=0)
    with pytest.raises(ValueError):
        GeneratorConfig(trials=-1)


def test_random_hfs_deterministic():
    cfg = GeneratorConfig(seed=7)
    assert random_hfs(cfg, 3) == random_hfs(cfg, 3)
    streams = [random_hfs(cfg, i) for i in range(8)]
    assert len({hash(s) for s in streams}) > 1  # indices give independent draws
    assert random_hfs(GeneratorConfig(seed=8), 3) != random_hfs(cfg, 3)


def test_random_hfs_grid_boundary():
    cfg = GeneratorConfig(seed=11, degree_grid=1)
    from fractions import Fraction

    for i in range(10):
        s = random_hfs(cfg, i)
        for _, h in s.items():
            assert set(h.degrees) <= {Fraction(0), Fraction(1)}


def test_small_suite_green():
    report = run_suite(SMALL)
    assert report.ok
    assert len(report.results) == 146
    assert report.starved_laws == ()


def test_zero_trials_vacuous():
    report = run_suite(GeneratorConfig(trials=0), law_ids=["prop2.1", "thm1.1"])
    assert all(r.trials == 0 and r.violations == 0 for r in report.results)
    assert report.ok


def test_seed_changes_keep_proved_outcomes():
    for seed in (1, 2):
        report = run_suite(GeneratorConfig(seed=seed, trials=100))
        assert report.ok


def test_suite_restriction_and_alias():
    report = run_suite(SMALL, law_ids=["thm3.abs-p"])
    assert len(report.results) == 1
    assert report.results[0].law_id == "thm3.4"


def test_hunt_finds_mean_counterexamples():
    cfg = GeneratorConfig(trials=100_000)
    for law_id in ("exam-sec2.3-m-intersection", "exam-sec2.3-m-union"):
        witness = hunt_counterexample(law_id, cfg)
        assert witness is not None, law_id
        assert witness.guard and not witness.claim


def test_hunt_on_proved_law_finds_nothing():
    assert hunt_counterexample("prop13.1", GeneratorConfig(trials=400)) is None


def test_hunt_unknown_law():
    with pytest.raises(UnknownLawError):
        hunt_counterexample("nope", SMALL)


def test_hunt_guarded_refuted_law():
    witness = hunt_counterexample("exam-sec2.5-s-union-m", GeneratorConfig(trials=50_000))
    assert witness is not None


def test_witness_replay_reproduces_verdicts():
    witness = hunt_counterexample("exam-sec2.3-m-intersection", GeneratorConfig(trials=10_000))
    assert witness is not None
    verdict = replay_witness(witness)
    assert verdict == {"guard": witness.guard, "claim": witness.claim}


def test_run_law_accepts_law_or_id():
    r1 = run_law("prop3.1", SMALL)
    assert r1.ok and r1.trials == SMALL.trials
    assert r1.law_id == "prop3.1"


def test_refuted_fixture_results_reported():
    result = run_law("exam-sec2.4-tconv", SMALL)
    assert result.ok
    assert result.fixtures and all(f.confirmed for f in result.fixtures)
    assert result.trials == 0  # refuted laws replay fixtures, not trials


def test_canonical_json_bit_identical_across_runs():
    a = run_suite(GeneratorConfig(trials=60)).canonical_json()
    b = run_suite(GeneratorConfig(trials=60)).canonical_json()
    assert a == b


def test_parallel_equals_sequential():
    cfg = GeneratorConfig(trials=40)
    seq = run_suite(cfg, workers=1).canonical_json()
    par = run_suite(cfg, workers=2).canonical_json()
    assert seq == par


def test_violation_is_recorded_with_witness():
    # a refuted law run in "proved mode" would record violations; emulate by
    # hunting, then sanity-check the exact evaluation of its fixture
    from hesitant.laws import get_law

    law = get_law("exam-sec2.3-m-union")
    results = replay_fixtures(law)
    assert all(r.guard and not r.claim for r in results)


def test_suite_report_lookup():
    report = run_suite(SMALL, law_ids=["prop2.1"])
    assert report.result("prop2.1").law_id == "prop2.1"
    with pytest.raises(KeyError):
        report.result("thm1.1")


@pytest.mark.parametrize("seed", [1, 99, 2**40])
def test_suite_green_across_seeds_and_shapes(seed):
    cfg = GeneratorConfig(
        seed=seed, trials=60, universe_size=(1, 2), cardinality=(1, 3), degree_grid=10
    )
    report = run_suite(cfg)
    assert report.ok
    assert report.starved_laws == ()


def test_degenerate_cardinality_starves_tail_guards_without_failing():
    cfg = GeneratorConfig(trials=30, cardinality=(1, 1))
    report = run_suite(cfg)
    assert report.ok  # starvation is a warning, never a failure
    starved = set(report.starved_laws)
    # tail premises are unsatisfiable when every membership has one degree
    assert "prop13.5" in starved and "thm5.5" in starved
    for law_id in starved:
        assert report.result(law_id).trials == 0 or report.result(law_id).violations == 0


def test_grid_boundary_suite_green():
    report = run_suite(GeneratorConfig(trials=60, degree_grid=1))
    assert report.ok


def test_evaluate_law_with_family_binding():
    from hesitant import Family, Universe, evaluate_law, make_hfs

    uni = Universe(["x"])
    A = make_hfs(uni, {"x": ["0.2", "0.1"]})
    H1 = make_hfs(uni, {"x": ["0.5", "0.4", "0.3"]})
    H2 = make_hfs(uni, {"x": ["0.9", "0.6", "0.3", "0.3"]})
    fam = Family([("H1", H1), ("H2", H2)])
    verdict = evaluate_law("thm4.1", {"F": fam})
    assert verdict == {"guard": True, "claim": True}
    # A ⊂t both members, so A ⊂t the family meet
    verdict = evaluate_law("thm5.5", {"A": A, "F": fam})
    assert verdict == {"guard": True, "claim": True}
    # and with the per-element cardinality premise, A ⊂t the family join
    verdict = evaluate_law("thm5.6", {"A": A, "F": fam})
    assert verdict == {"guard": True, "claim": True}
