import itertools
import json

import pytest

from ucycle.core import Params, parse_word, rotations
from ucycle.greedy import greedy_is_universal
from ucycle.harness import (
    conjecture1_instance,
    conjecture1_sweep,
    conjecture2_instance,
    conjecture2_sweep,
    forbidden_suffix_cases,
    rotation_classes,
    set_from_classes,
    splitmix64,
    union_intersection_demo,
)
from ucycle.sets import ForbidCyclicSubstring, SetSpec, materialize

from conftest import w, words


def test_splitmix64_reference_values():
    # published reference outputs for seed 0
    rng = splitmix64(0)
    assert [next(rng) for _ in range(3)] == [
        0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


def test_conjecture1_default():
    rep = conjecture1_sweep(3, 4, 2)
    assert rep.ok
    gammas = {r["instance"]["gamma"] for r in rep.records}
    assert gammas == {"1", "11", "12", "13", "21", "31"}
    assert "33" not in gammas and "23" not in gammas


def test_conjecture1_known_instance():
    rec = conjecture1_instance(w("13"), 3, 3)
    assert rec["verdict"] == "universal"
    s = materialize(SetSpec.of(3, 3, ForbidCyclicSubstring(w("13"))))
    listed = "111 112 122 123 222 223 233 333".split()
    assert set(s) == set().union(*(rotations(w(x)) for x in listed))


def test_conjecture1_skips_when_top_forbidden():
    rec = conjecture1_instance(w("3"), 2, 3)
    assert rec["verdict"] == "skipped"


def test_conjecture1_rejects_bad_args():
    with pytest.raises(ValueError):
        conjecture1_sweep(2, 3, 1)
    with pytest.raises(ValueError):
        conjecture1_sweep(3, 2, 3)


def test_forbidden_suffix_n4():
    rep = forbidden_suffix_cases(4)
    verdicts = {r["instance"]["gamma"]: r["verdict"] for r in rep.records}
    assert verdicts["8899"] == verdicts["8989"] == verdicts["8998"] == "universal"
    for g in ["89", "889", "899", "8889", "8999"]:
        assert verdicts[g] == "not-universal"
    assert rep.ok
    with pytest.raises(ValueError):
        forbidden_suffix_cases(3)


def test_8998_period_three():
    for n in (4, 5):
        assert forbidden_suffix_cases(n, [w("8998")]).records[0]["verdict"] == "universal"
    rec = forbidden_suffix_cases(6, [w("8998")]).records[0]
    assert rec["verdict"] == "not-universal"
    assert {parse_word(x) for x in rec["missing"]} == rotations(w("889889"))


def test_conjecture2_forced_and_full(sww, t33):
    rep = conjecture2_sweep(4, 3, trials=1, seed=1, forced=[sww])
    forced = rep.records[0]["verdict"]
    assert forced == {"fkm_universal": True, "alpha_suffix": True, "agree": True}
    rec = conjecture2_instance(t33)
    assert rec["verdict"]["fkm_universal"] and rec["verdict"]["alpha_suffix"]
    assert rec["instance"]["alpha"] == "333"


def test_conjecture2_exhaustive_small():
    rep = conjecture2_sweep(2, 3, exhaustive=True)
    assert len(rep.records) == 2**6 - 1
    assert rep.ok


def test_conjecture2_reproducible():
    a = conjecture2_sweep(3, 3, trials=50, seed=12345)
    b = conjecture2_sweep(3, 3, trials=50, seed=12345)
    c = conjecture2_sweep(3, 3, trials=50, seed=54321)
    assert a.jsonl() == b.jsonl()
    assert a.jsonl() != c.jsonl()
    for line in a.jsonl().splitlines():
        rec = json.loads(line)
        assert set(rec) == {"instance", "verdict", "missing", "seed"}
        assert rec["seed"] == 12345


def test_conjecture2_records_reverify():
    rep = conjecture2_sweep(3, 3, trials=30, seed=7)
    params = Params(3, 3)
    for rec in rep.records:
        s = set_from_classes(params, [parse_word(x) for x in rec["instance"]["necklaces"]])
        again = conjecture2_instance(s)
        assert again["verdict"] == rec["verdict"]
        assert again["missing"] == rec["missing"]


def test_rotation_classes():
    assert len(rotation_classes(Params(3, 3))) == 11
    assert len(rotation_classes(Params(2, 3))) == 6


def test_union_intersection_demo():
    rep = union_intersection_demo()
    verdicts = {r["instance"]["set"]: r["verdict"] for r in rep.records}
    assert verdicts == {"first": "universal", "second": "universal",
                        "intersection": "not-universal", "union": "universal"}
    inter = next(r for r in rep.records if r["instance"]["set"] == "intersection")
    assert inter["instance"]["members"] == ["11", "33"]
    assert rep.ok


def test_counterexamples_reverify():
    # any flagged record must survive a direct re-run; also run a failing case directly
    rep = forbidden_suffix_cases(4, [w("89")])
    rec = rep.records[0]
    s = materialize(SetSpec.of(4, 9, ForbidCyclicSubstring(w("89"))))
    assert not greedy_is_universal(s, (9, 9, 9, 9))
    assert rec["instance"]["missing_count"] == len(rec["missing"]) > 0
