import json

import pytest

from fclab.games import equiv_k
from fclab.harness import (
    ExperimentReport,
    broken_responder,
    experiment_ids,
    run_experiment,
    verify_fooling_consequence,
    verify_formula_catalog,
    verify_inexpressibility_witnesses,
    verify_primitive_power,
    verify_pseudo_congruence,
    verify_semilinear_gap,
    verify_strategy_lemmas,
)


def test_experiment_registry():
    ids = experiment_ids()
    assert "strategy_lemmas" in ids
    assert "pseudo_congruence" in ids
    assert "witnesses_l5" in ids
    with pytest.raises(ValueError):
        run_experiment("nope")


def test_report_roundtrip():
    r = verify_semilinear_gap(3)
    blob = json.dumps(r.to_json())
    back = ExperimentReport.from_json(json.loads(blob))
    assert back == r


def test_strategy_lemmas_small():
    r = verify_strategy_lemmas(max_len=4, k_max=2)
    assert r.status == "PASS"
    assert r.instances_checked > 100
    assert r.counterexamples == []


def test_strategy_lemmas_negative_control():
    r = verify_strategy_lemmas(max_len=3, k_max=1, responder=broken_responder, responder_name="broken")
    assert r.status == "FAIL"
    assert r.counterexamples
    assert r.counterexamples[0]["lemma"] == "forced_copy"


def test_strategy_lemmas_deterministic():
    a = verify_strategy_lemmas(max_len=3, k_max=2)
    b = verify_strategy_lemmas(max_len=3, k_max=2)
    a.seconds = b.seconds = 0
    assert a == b


def test_pseudo_congruence_small():
    r = verify_pseudo_congruence(k=1, max_len=4)
    assert r.status == "PASS"
    assert r.counterexamples == []
    assert r.witnesses, "expected the swapped-exponent construction to certify"
    wit = r.witnesses[0]
    assert wit["p"] != wit["q"]
    assert equiv_k(wit["wordA"], wit["wordB"], 1)


def test_pseudo_congruence_rejects_k0():
    with pytest.raises(ValueError):
        verify_pseudo_congruence(k=0)


def test_primitive_power_defaults():
    r = verify_primitive_power()
    assert r.status == "PASS"
    assert r.counterexamples == []
    roots = {w["root"] for w in r.witnesses}
    assert roots == {"ab", "aab", "aba"}


def test_primitive_power_rejects_imprimitive_root():
    with pytest.raises(ValueError):
        verify_primitive_power(roots=("aa",))


def test_witnesses_anbn():
    r = verify_inexpressibility_witnesses("anbn", k=1, bound=8)
    assert r.status == "PASS"
    inside, outside = r.witnesses[0]["inside"], r.witnesses[0]["outside"]
    assert equiv_k(inside, outside, 1)


def test_witnesses_sigma_star_inconclusive():
    r = verify_inexpressibility_witnesses("sigma_star", k=1, bound=8)
    assert r.status == "INCONCLUSIVE"
    assert not r.witnesses


def test_witnesses_l1_tight_budget_is_inconclusive():
    r = verify_inexpressibility_witnesses("l1", k=1, bound=1)
    assert r.status == "INCONCLUSIVE"


def test_fooling_consequence_default():
    r = verify_fooling_consequence()
    assert r.status == "PASS"
    wit = r.witnesses[0]
    assert wit["p"] != wit["s"]
    assert equiv_k(wit["wordA"], wit["wordB"], 1)


def test_fooling_consequence_rejects_bad_blocks():
    with pytest.raises(ValueError):
        verify_fooling_consequence(u="ab", v="ba")  # conjugates
    with pytest.raises(ValueError):
        verify_fooling_consequence(f=lambda n: 0)  # not injective


def test_semilinear_gap():
    r = verify_semilinear_gap(4)
    assert r.status == "PASS"
    assert not r.witnesses
    r = verify_semilinear_gap(2, target="evens")
    assert r.status == "PASS"
    assert r.witnesses
    r = verify_semilinear_gap(0)
    assert r.status == "PASS"


def test_budget_exhaustion_is_reported_not_failed(monkeypatch):
    from fclab import harness as H
    from fclab.games import BudgetExceededError

    def explode(**kw):
        raise BudgetExceededError(777)

    monkeypatch.setitem(H.EXPERIMENTS, "strategy_lemmas", explode)
    r = run_experiment("strategy_lemmas", max_len=3)
    assert r.status == "INCONCLUSIVE"
    assert r.params["budget_exceeded_after"] == 777


def test_formula_catalog_trimmed():
    r = verify_formula_catalog(max_len=6, fib_index=3, mutants=6, ww_len=6, vbv_len=5)
    assert r.status == "PASS"
    assert r.counterexamples == []
