from __future__ import annotations

import pytest

from binmat.catalog import bond_matroid, by_name, cubic_ladder, graphic_source, mobius, sporadic
from binmat.deltawye import delta_y
from binmat.matroid import connectivity_report
from binmat.verify import REGISTRY, UnknownCheckId, check_ids, classify, run_checks

# checks that finish in a few seconds each; the slow sweeps run in the acceptance suite
FAST = [f"V{i:02d}" for i in range(2, 26)] + ["V28"]


def test_registry_ids_are_ordered_and_complete():
    ids = check_ids()
    assert ids == sorted(ids)
    assert ids[0] == "V01" and len(ids) == len(REGISTRY)
    assert all(REGISTRY[c].budget > 0 and REGISTRY[c].anchor for c in ids)


def test_unknown_check_id():
    with pytest.raises(UnknownCheckId):
        run_checks(["V99"])


@pytest.mark.parametrize("cid", FAST)
def test_fast_check_passes(cid):
    (rep,) = run_checks([cid], isolate=False)
    assert rep.passed, (rep.expected, rep.computed, rep.note)
    assert rep.line().startswith(f"{cid} PASS")


def test_reports_come_back_sorted_and_isolated():
    reps = run_checks(["V05", "V02"], jobs=2)
    assert [r.id for r in reps] == ["V02", "V05"]
    assert all(r.passed for r in reps)
    d = reps[0].as_dict()
    assert d["id"] == "V02" and d["passed"] is True


def test_budget_overrun_is_a_failure_with_reason():
    (rep,) = run_checks(["V26"], budget=0.5)
    assert not rep.passed
    assert "time budget" in rep.note
    assert rep.seconds < 30


# ---------------------------------------------------------------------------
# classifier

def test_classify_mobius():
    v = classify(mobius("triangular", 6))
    assert (v.kind, v.param) == ("mobius_triangular", 6)
    v = classify(mobius("triadic", 8))
    assert (v.kind, v.param) == ("mobius_triadic", 8)


@pytest.mark.parametrize("name", ["m5_11", "t12", "m4_13", "m7_15"])
def test_classify_sporadic(name):
    v = classify(sporadic(name))
    assert v.kind == "sporadic" and v.param == name
    assert str(v) == f"sporadic({name})"


def test_classify_cographic():
    v = classify(bond_matroid(cubic_ladder(10)))
    assert v.kind == "cographic"
    v = classify(graphic_source("mstar_k5"))
    assert v.kind == "cographic"


def test_classify_not_internally_4connected():
    M = mobius("triangular", 5).delete(["b1"])
    v = classify(M)
    assert v.kind == "not_internally_4connected"
    assert v.evidence is not None


def test_classify_mk33_minor_with_witness():
    K = graphic_source("mk33")
    X = delta_y(mobius("triangular", 4), ["a1", "e1", "e4"])
    assert connectivity_report(X).is_internally_4connected
    for M in (K, X):
        v = classify(M)
        assert v.kind == "has_mk33_minor" and v.tag == "search"
        assert v.evidence.check(M, K)


def test_classify_pg32_is_sporadic():
    assert classify(by_name("pg32")).kind == "sporadic"


SLOW = ["V01", "V26", "V27", "V29", "V30", "V31", "V32", "V33", "V36"]


def test_slow_checks_pass():
    reps = run_checks(SLOW, jobs=4)
    bad = [(r.id, r.note) for r in reps if not r.passed]
    assert not bad, bad
