"""Randomized audit harness: cross-checks every invariant at desk scale.

Each check pairs a deterministic instance stream (driven by a per-check RNG
derived from the report seed) with a pure per-instance predicate returning
None on success or a violation message.  Counterexamples are serialized as
graph text plus thresholds plus the extra instance data, so they can be
replayed through the library in isolation with replay_counterexample.

Reports are byte-identical for identical (config, seed); the wall-clock
time is therefore kept out of the serialized form.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from .bounds import kn_witness, lower_bound_average, upper_bound_degree_sequence
from .combinatorics import maximum_matching, minimum_vertex_cover
from .corpus import (
    connected_regular_graphs,
    random_connected_graph,
    random_graph,
    random_respecting_thresholds,
)
from .dynamics import is_dynamo, propagate, verify_trace
from .errors import BudgetExceededError
from .graphs import Graph, edge_density, gn_central_count, gn_graph, parse_graph, render_graph
from .minimize import exact_min_dynamo, greedy_shrink, is_minimal, shrink_states
from .strict_majority import build_ordering, half_dynamo, matching_bound_audit
from .thresholds import (
    ThresholdAssignment,
    degree_thresholds,
    gn_thresholds,
    strict_majority_thresholds,
    threshold_stats,
)

Instance = tuple[Graph, ThresholdAssignment | None, dict]


@dataclass(frozen=True)
class AuditConfig:
    checks: tuple[str, ...] = ("all",)
    seed: int = 0
    count: int = 200
    max_n: int = 8
    n_range: tuple[int, int] = (3, 8)
    budget: int | None = None

    def resolved_checks(self) -> tuple[str, ...]:
        if "all" in self.checks:
            return tuple(sorted(CHECKS))
        unknown = [c for c in self.checks if c not in CHECKS]
        if unknown:
            raise ValueError(f"unknown checks: {', '.join(unknown)}")
        return tuple(sorted(set(self.checks)))

    def to_dict(self) -> dict:
        return {
            "checks": list(self.resolved_checks()),
            "seed": self.seed,
            "count": self.count,
            "max_n": self.max_n,
            "n_range": list(self.n_range),
            "budget": self.budget,
        }


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    counterexample: dict | None = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "counterexample": self.counterexample,
        }


@dataclass
class AuditReport:
    config: AuditConfig
    checks: list[CheckResult] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def instances_checked(self) -> int:
        return sum(c.passed + c.failed + c.skipped for c in self.checks)

    @property
    def failures(self) -> int:
        return sum(c.failed for c in self.checks)

    def to_dict(self) -> dict:
        # elapsed is deliberately omitted: identical (config, seed) must
        # serialize byte-identically
        return {
            "config": self.config.to_dict(),
            "instances_checked": self.instances_checked,
            "failures": self.failures,
            "checks": [c.to_dict() for c in sorted(self.checks, key=lambda c: c.name)],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


@dataclass(frozen=True)
class Check:
    name: str
    instances: Callable[[AuditConfig, random.Random], Iterator[Instance]]
    predicate: Callable[..., str | None]
    budgeted: bool = False  # predicate accepts budget= for its exact solves


# ---------------------------------------------------------------------------
# Instance streams


def _random_graphs(config: AuditConfig, rng: random.Random) -> Iterator[Instance]:
    for _ in range(config.count):
        g = random_graph(rng, rng.randint(1, config.max_n))
        yield g, random_respecting_thresholds(rng, g), {}


def _connected_with_thresholds(config: AuditConfig, rng: random.Random) -> Iterator[Instance]:
    for _ in range(config.count):
        g = random_connected_graph(rng, rng.randint(1, config.max_n))
        yield g, random_respecting_thresholds(rng, g), {}


def _connected_strict(config: AuditConfig, rng: random.Random) -> Iterator[Instance]:
    for _ in range(config.count):
        n = rng.randint(2, max(2, config.max_n))
        g = random_connected_graph(rng, n)
        yield g, strict_majority_thresholds(g), {}


def _no_isolated(config: AuditConfig, rng: random.Random) -> Iterator[Instance]:
    produced = 0
    cap = min(config.max_n, 10)
    while produced < config.count:
        g = random_graph(rng, rng.randint(2, max(2, cap)))
        if g.min_degree == 0:
            continue
        produced += 1
        yield g, degree_thresholds(g), {}


def _kn_instances(config: AuditConfig, rng: random.Random) -> Iterator[Instance]:
    lo, hi = config.n_range
    for n in range(max(1, lo), hi + 1):
        for numerator in range(0, n * (n - 1) + 1):
            mean = Fraction(numerator, n)
            witness = kn_witness(n, mean)
            yield witness.graph, witness.thresholds, {
                "mean": str(mean),
                "expected": witness.expected,
            }


def _gn_instances(config: AuditConfig, rng: random.Random) -> Iterator[Instance]:
    for n in range(2, min(6, max(2, config.n_range[1])) + 1):
        yield gn_graph(n), gn_thresholds(n), {"n": n}


def _cubic_instances(config: AuditConfig, rng: random.Random) -> Iterator[Instance]:
    for n in range(4, min(config.max_n, 10) + 1, 2):
        for g in connected_regular_graphs(n, 3):
            yield g, strict_majority_thresholds(g), {"n": n}


def _trace_instances(config: AuditConfig, rng: random.Random) -> Iterator[Instance]:
    for _ in range(config.count):
        n = rng.randint(1, min(config.max_n, 8))
        g = random_graph(rng, n)
        tau = random_respecting_thresholds(rng, g)
        seed = sorted(rng.sample(range(n), rng.randint(0, n)))
        yield g, tau, {"seed": seed}


def _minimal_instances(config: AuditConfig, rng: random.Random) -> Iterator[Instance]:
    for _ in range(config.count):
        n = rng.randint(1, min(config.max_n, 12))
        g = random_graph(rng, n)
        tau = random_respecting_thresholds(rng, g)
        order = list(range(n))
        rng.shuffle(order)
        yield g, tau, {"order": order}


# ---------------------------------------------------------------------------
# Predicates


def _roundtrip_predicate(g: Graph, tau, **_) -> str | None:
    if parse_graph(render_graph(g)) != g:
        return "parse(render(g)) differs from g"
    return None


def _sandwich_predicate(
    g: Graph, tau: ThresholdAssignment, budget: int | None = None, **_
) -> str | None:
    lower = lower_bound_average(g, tau)
    exact = len(exact_min_dynamo(g, tau, budget=budget))
    upper = upper_bound_degree_sequence(g, threshold_stats(g, tau).mean)
    if not lower <= exact:
        return f"lower bound {lower} exceeds exact minimum {exact}"
    if not exact <= upper:
        return f"exact minimum {exact} exceeds upper bound {upper}"
    return None


def _ordering_predicate(g: Graph, tau: ThresholdAssignment, **_) -> str | None:
    cert = build_ordering(g)
    try:
        cert.validate(g)
    except ValueError as exc:
        return f"certificate invalid: {exc}"
    has_odd = any(d % 2 == 1 for d in g.degrees)
    if has_odd and cert.zero_count != 0:
        return "zero balance despite an odd-degree vertex"
    for half in (cert.nonneg_half, cert.nonpos_half):
        if not is_dynamo(g, tau, half):
            return "certificate half is not a strict-majority dynamo"
    limit = g.n // 2 if has_odd else (g.n + 1) // 2
    size = len(half_dynamo(g))
    if size > limit:
        return f"half dynamo size {size} exceeds {limit}"
    return None


def _greedy_predicate(g: Graph, tau: ThresholdAssignment, **_) -> str | None:
    result = greedy_shrink(g, tau)
    if not is_dynamo(g, tau, result):
        return "greedy result is not a dynamo"
    if g.n:
        bound = upper_bound_degree_sequence(g, threshold_stats(g, tau).mean)
        if len(result) > bound:
            return f"greedy result size {len(result)} exceeds bound {bound}"
    if g.n <= 12:
        for state in shrink_states(g, tau):
            both = state.undersupplied | state.oversupplied
            for v in state.monopoly:
                in_both = sum(1 for u in g.adjacency[v] if u in both)
                in_over = sum(1 for u in g.adjacency[v] if u in state.oversupplied)
                in_under = sum(1 for u in g.adjacency[v] if u in state.undersupplied)
                literal = in_both < in_over + g.degree(v) - tau.values[v] + 1
                reduced = in_under <= g.degree(v) - tau.values[v]
                if literal != reduced:
                    return f"removal condition forms disagree at vertex {v}"
    return None


def _beta_predicate(
    g: Graph, tau: ThresholdAssignment, budget: int | None = None, **_
) -> str | None:
    beta = len(minimum_vertex_cover(g))
    exact = len(exact_min_dynamo(g, tau, budget=budget))
    if exact != beta:
        return f"minimum dynamo {exact} differs from cover number {beta}"
    if g.n <= 10:
        masks = g.neighbor_masks
        full = (1 << g.n) - 1
        for subset_mask in range(1 << g.n):
            covers = all(
                masks[v] & ~subset_mask & full == 0
                for v in range(g.n)
                if not subset_mask >> v & 1
            )
            dyn = is_dynamo(g, tau, [v for v in range(g.n) if subset_mask >> v & 1])
            if covers != dyn:
                return f"subset {subset_mask:b} is cover={covers} but dynamo={dyn}"
    return None


def _kn_predicate(
    g: Graph,
    tau: ThresholdAssignment,
    mean: str = "0",
    expected: int = 0,
    budget: int | None = None,
) -> str | None:
    exact = len(exact_min_dynamo(g, tau, budget=budget))
    if exact != expected:
        return f"complete-graph witness with mean {mean}: exact {exact} != {expected}"
    return None


def _gn_predicate(
    g: Graph, tau: ThresholdAssignment, n: int = 2, budget: int | None = None
) -> str | None:
    core = gn_central_count(n)
    copies = core - 1
    expected_vertices = core + n * copies
    expected_edges = (n**3 - n) * (n**2 - n - 1)
    if g.n != expected_vertices:
        return f"vertex count {g.n} != {expected_vertices}"
    if g.edge_count != expected_edges:
        return f"edge count {g.edge_count} != {expected_edges}"
    copy_degree = core + (n - 1)
    for v in range(core, g.n):
        if g.degree(v) != copy_degree:
            return f"copy vertex {v} has degree {g.degree(v)} != {copy_degree}"
    if threshold_stats(g, tau).mean != edge_density(g):
        return "canonical thresholds do not average to the edge density"
    if n == 2 and len(exact_min_dynamo(g, tau, budget=budget)) != 1:
        return "minimum dynamo of the n=2 member is not 1"
    ratio = Fraction(copies * (n - 1), expected_vertices)
    if n > 2:
        prev_core = (n - 1) * (n - 2)
        prev_ratio = Fraction(
            (prev_core - 1) * (n - 2), prev_core + (n - 1) * (prev_core - 1)
        )
        if not ratio > prev_ratio:
            return f"ratio {ratio} not above the previous member's {prev_ratio}"
    return None


def _matching_predicate(
    g: Graph, tau: ThresholdAssignment, budget: int | None = None, **_
) -> str | None:
    result = matching_bound_audit(g, budget=budget)
    if not result.holds:
        return (
            f"minimum dynamo {result.dynamo_size} exceeds matching bound "
            f"{result.matching_size} + {result.component_count}"
        )
    return None


def _cubic_predicate(
    g: Graph, tau: ThresholdAssignment, n: int = 4, budget: int | None = None
) -> str | None:
    exact = len(exact_min_dynamo(g, tau, budget=budget))
    if not Fraction(exact) >= Fraction(n, 6):
        return f"minimum dynamo {exact} below n/6 = {Fraction(n, 6)}"
    return None


def _brute_matching_number(g: Graph) -> int:
    masks = g.neighbor_masks
    cache: dict[int, int] = {}

    def best(avail: int) -> int:
        if avail == 0:
            return 0
        hit = cache.get(avail)
        if hit is not None:
            return hit
        v = (avail & -avail).bit_length() - 1
        rest = avail & ~(1 << v)
        out = best(rest)  # v stays unmatched
        for u_mask_bit in _bit_items(masks[v] & rest):
            out = max(out, 1 + best(rest & ~u_mask_bit))
        cache[avail] = out
        return out

    return best((1 << g.n) - 1)


def _bit_items(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def _brute_cover_number(g: Graph) -> int:
    masks = g.neighbor_masks
    full = (1 << g.n) - 1
    best = g.n
    for subset in range(1 << g.n):
        size = subset.bit_count()
        if size >= best:
            continue
        if all(
            masks[v] & ~subset & full == 0
            for v in range(g.n)
            if not subset >> v & 1
        ):
            best = size
    return best


def _oracles_predicate(g: Graph, tau, **_) -> str | None:
    matching = maximum_matching(g)
    matching.validate(g)
    brute_alpha = _brute_matching_number(g)
    if len(matching) != brute_alpha:
        return f"matching {len(matching)} != brute force {brute_alpha}"
    cover = minimum_vertex_cover(g)
    cover.validate(g)
    brute_beta = _brute_cover_number(g)
    if len(cover) != brute_beta:
        return f"cover {len(cover)} != brute force {brute_beta}"
    alpha = g.n - len(cover)
    if alpha + len(cover) != g.n:
        return "alpha + beta != n"
    if len(matching) > len(cover):
        return "matching number exceeds cover number"
    return None


def _schedule_reachable(g: Graph, tau: ThresholdAssignment, seed: list[int]) -> bool:
    """Sequential-activation search: can some activation order cover V?"""
    masks = g.neighbor_masks
    full = (1 << g.n) - 1
    start = 0
    for v in seed:
        start |= 1 << v
    dead: set[int] = set()

    def go(active: int) -> bool:
        if active == full:
            return True
        if active in dead:
            return False
        rest = full & ~active
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            if (masks[v] & active).bit_count() >= tau.values[v] and go(active | low):
                return True
        dead.add(active)
        return False

    return go(start)


def _trace_predicate(g: Graph, tau: ThresholdAssignment, seed: list[int] = ()) -> str | None:
    trace = propagate(g, tau, seed)
    if not verify_trace(g, tau, trace.rounds):
        return "propagate output rejected by verify_trace"
    if trace.complete != is_dynamo(g, tau, seed):
        return "trace completeness disagrees with is_dynamo"
    if g.n <= 8 and trace.complete != _schedule_reachable(g, tau, list(seed)):
        return "greedy schedule disagrees with order search"
    forced = tau.forced_seeds(g)
    if forced - set(seed) and trace.complete:
        return "dynamo missing a forced seed"
    if trace.complete:
        for v in range(g.n):
            if not is_dynamo(g, tau, set(seed) | {v}):
                return "monotonicity violated by adding a vertex"
    return None


def _minimal_predicate(g: Graph, tau: ThresholdAssignment, order: list[int] = ()) -> str | None:
    monopoly = set(range(g.n))
    changed = True
    while changed:
        changed = False
        for v in order:
            if v in monopoly and is_dynamo(g, tau, monopoly - {v}):
                monopoly.discard(v)
                changed = True
    if not is_minimal(g, tau, frozenset(monopoly)):
        return "randomized shrink did not reach a minimal dynamo"
    if g.n:
        bound = upper_bound_degree_sequence(g, threshold_stats(g, tau).mean)
        if len(monopoly) > bound:
            return f"minimal dynamo size {len(monopoly)} exceeds bound {bound}"
    return None


def _identity_predicate(g: Graph, tau: ThresholdAssignment, **_) -> str | None:
    mean, t_max, _ = threshold_stats(g, tau)
    density = edge_density(g)
    if mean > 0 and t_max > 0:
        left = g.n * (1 - density / mean) * (mean / t_max)
        right = g.n * (mean - density) / t_max
        if left != right:
            return f"algebraic identity fails: {left} != {right}"
        if g.max_degree > 0 and tau.respects_degrees(g):
            with_delta = g.n * (mean - density) / g.max_degree
            if max(Fraction(0), right) < max(Fraction(0), with_delta):
                return "max-threshold bound below max-degree bound"
    return None


CHECKS: dict[str, Check] = {
    "roundtrip": Check("roundtrip", _random_graphs, _roundtrip_predicate),
    "sandwich": Check("sandwich", _connected_with_thresholds, _sandwich_predicate, budgeted=True),
    "ordering": Check("ordering", _connected_strict, _ordering_predicate),
    "greedy": Check("greedy", _random_graphs, _greedy_predicate),
    "beta": Check("beta", _no_isolated, _beta_predicate, budgeted=True),
    "kn": Check("kn", _kn_instances, _kn_predicate, budgeted=True),
    "gn": Check("gn", _gn_instances, _gn_predicate, budgeted=True),
    "matching": Check("matching", _random_graphs, _matching_predicate, budgeted=True),
    "cubic": Check("cubic", _cubic_instances, _cubic_predicate, budgeted=True),
    "oracles": Check("oracles", _random_graphs, _oracles_predicate),
    "trace": Check("trace", _trace_instances, _trace_predicate),
    "minimal": Check("minimal", _minimal_instances, _minimal_predicate),
    "identity": Check("identity", _connected_with_thresholds, _identity_predicate),
}


def _counterexample(name: str, g: Graph, tau, extra: dict, detail: str) -> dict:
    return {
        "check": name,
        "graph": render_graph(g),
        "thresholds": None if tau is None else list(tau.values),
        "extra": extra,
        "detail": detail,
    }


def run_check(name: str, config: AuditConfig) -> CheckResult:
    check = CHECKS[name]
    rng = random.Random(f"{config.seed}:{name}")
    result = CheckResult(name=name)
    for g, tau, extra in check.instances(config, rng):
        kwargs = dict(extra)
        if check.budgeted:
            kwargs["budget"] = config.budget
        try:
            message = check.predicate(g, tau, **kwargs)
        except BudgetExceededError:
            result.skipped += 1
            continue
        except Exception as exc:  # structural failure counts as a violation
            message = f"exception: {exc!r}"
        if message is None:
            result.passed += 1
        else:
            result.failed += 1
            if result.counterexample is None:
                result.counterexample = _counterexample(name, g, tau, extra, message)
    return result


def audit(config: AuditConfig) -> AuditReport:
    """Run the selected checks; deterministic given (config, seed)."""
    started = time.perf_counter()
    report = AuditReport(config=config)
    for name in config.resolved_checks():
        report.checks.append(run_check(name, config))
    report.elapsed = time.perf_counter() - started
    return report


def replay_counterexample(counterexample: dict) -> bool:
    """Re-run one serialized counterexample; True means it still fails."""
    check = CHECKS[counterexample["check"]]
    g = parse_graph(counterexample["graph"])
    raw = counterexample.get("thresholds")
    tau = None if raw is None else ThresholdAssignment(tuple(raw))
    extra = counterexample.get("extra", {})
    try:
        message = check.predicate(g, tau, **extra)
    except BudgetExceededError:
        return False
    except Exception:
        return True
    return message is not None
