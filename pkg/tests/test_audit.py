from __future__ import annotations

import json

import pytest

from dynmono import Graph
from dynmono.audit import (
    CHECKS,
    AuditConfig,
    Check,
    audit,
    replay_counterexample,
    run_check,
)


def small_config(**overrides) -> AuditConfig:
    base = {"checks": ("all",), "seed": 3, "count": 25, "max_n": 7}
    base.update(overrides)
    return AuditConfig(**base)


def test_all_checks_pass_on_small_corpus():
    report = audit(small_config())
    assert report.failures == 0
    assert report.instances_checked > 0
    for result in report.checks:
        assert result.counterexample is None


def test_reports_are_byte_identical_for_same_seed():
    first = audit(small_config(checks=("sandwich", "ordering", "roundtrip")))
    second = audit(small_config(checks=("sandwich", "ordering", "roundtrip")))
    assert first.to_json() == second.to_json()
    assert first.elapsed != 0  # wall time is tracked but not serialized
    assert "elapsed" not in first.to_dict()


def test_different_seed_changes_the_corpus():
    a = audit(small_config(checks=("roundtrip",), seed=1))
    b = audit(small_config(checks=("roundtrip",), seed=2))
    assert a.to_json() != b.to_json() or a.checks[0].passed == b.checks[0].passed


def test_unknown_check_rejected():
    with pytest.raises(ValueError, match="unknown checks"):
        audit(small_config(checks=("nonsense",)))


def test_budget_exhaustion_skips_instances():
    report = audit(small_config(checks=("sandwich",), budget=2, count=40))
    result = report.checks[0]
    assert result.failed == 0
    assert result.skipped > 0


def test_counterexamples_replay(monkeypatch):
    # a deliberately false property: every graph has at most two vertices
    def tiny_instances(config, rng):
        yield Graph.from_edges(1, []), None, {}
        yield Graph.from_edges(3, [(0, 1)]), None, {}

    def tiny_predicate(g, tau, **_):
        if g.n > 2:
            return f"graph has {g.n} vertices"
        return None

    monkeypatch.setitem(
        CHECKS, "tiny", Check("tiny", tiny_instances, tiny_predicate)
    )
    result = run_check("tiny", small_config(checks=("tiny",)))
    assert (result.passed, result.failed) == (1, 1)
    assert result.counterexample is not None
    assert replay_counterexample(result.counterexample)
    # a passing instance replays clean
    healthy = {
        "check": "tiny",
        "graph": "1 0\n",
        "thresholds": None,
        "extra": {},
        "detail": "",
    }
    assert not replay_counterexample(healthy)


def test_counterexample_serialization_is_json_safe(monkeypatch):
    def bad_instances(config, rng):
        yield Graph.from_edges(2, [(0, 1)]), None, {"note": 7}

    monkeypatch.setitem(
        CHECKS,
        "bad",
        Check("bad", bad_instances, lambda g, tau, note=0: "always fails"),
    )
    result = run_check("bad", small_config(checks=("bad",)))
    text = json.dumps(result.to_dict())
    assert "always fails" in text


def test_enumerated_checks_ignore_count():
    report = audit(small_config(checks=("kn",), count=1, n_range=(3, 5)))
    # 3..5 with every admissible mean: (6+1) + (12+1) + (20+1) instances
    assert report.checks[0].passed == 7 + 13 + 21
