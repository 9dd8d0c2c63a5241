"""Per-vertex activation thresholds: assignment rules, statistics, file IO.

A threshold assignment pairs each vertex with a non-negative integer.  It is
degree-respecting when tau(v) <= deg(v) for every v; assignments violating
that are representable (strict majority on an isolated vertex yields 1 > 0)
and the offending vertices are exposed as forced seeds, because no activation
process can ever switch them on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import GraphFormatError
from .graphs import Graph


@dataclass(frozen=True)
class ThresholdAssignment:
    """Immutable per-vertex thresholds, indexed by vertex id."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        for v, t in enumerate(self.values):
            if t < 0:
                raise ValueError(f"negative threshold {t} at vertex {v}")

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, v: int) -> int:
        return self.values[v]

    def check_length(self, g: Graph) -> None:
        if len(self.values) != g.n:
            raise ValueError(
                f"{len(self.values)} thresholds for a graph on {g.n} vertices"
            )

    def respects_degrees(self, g: Graph) -> bool:
        """True iff tau(v) <= deg(v) for every vertex."""
        self.check_length(g)
        return all(t <= d for t, d in zip(self.values, g.degrees))

    def forced_seeds(self, g: Graph) -> frozenset[int]:
        """Vertices with tau(v) > deg(v); they belong to every dynamo."""
        self.check_length(g)
        return frozenset(
            v for v, (t, d) in enumerate(zip(self.values, g.degrees)) if t > d
        )


class ThresholdStats(NamedTuple):
    mean: Fraction
    maximum: int
    minimum: int


def threshold_stats(g: Graph, tau: ThresholdAssignment) -> ThresholdStats:
    """Exact mean plus max and min threshold; rejects the empty graph."""
    tau.check_length(g)
    if g.n == 0:
        raise ValueError("threshold statistics undefined for the empty graph")
    return ThresholdStats(
        mean=Fraction(sum(tau.values), g.n),
        maximum=max(tau.values),
        minimum=min(tau.values),
    )


def strict_majority_thresholds(g: Graph) -> ThresholdAssignment:
    """tau(v) = ceil((deg(v) + 1) / 2)."""
    return ThresholdAssignment(tuple((d + 2) // 2 for d in g.degrees))


def simple_majority_thresholds(g: Graph) -> ThresholdAssignment:
    """tau(v) = ceil(deg(v) / 2); odd degrees round up."""
    return ThresholdAssignment(tuple((d + 1) // 2 for d in g.degrees))


def constant_thresholds(g: Graph, k: int) -> ThresholdAssignment:
    """tau(v) = k for every vertex; not clamped to degrees."""
    if k < 0:
        raise ValueError("constant threshold must be non-negative")
    return ThresholdAssignment((k,) * g.n)


def explicit_thresholds(g: Graph, values: Sequence[int]) -> ThresholdAssignment:
    if len(values) != g.n:
        raise ValueError(f"{len(values)} thresholds for a graph on {g.n} vertices")
    return ThresholdAssignment(tuple(int(t) for t in values))


def degree_thresholds(g: Graph) -> ThresholdAssignment:
    """tau(v) = deg(v), the largest degree-respecting assignment."""
    return ThresholdAssignment(g.degrees)


def gn_thresholds(n: int) -> ThresholdAssignment:
    """Canonical thresholds for gn_graph(n): 0 on the central clique, full
    degree on every copy vertex.  The mean equals the graph's edge density."""
    if n < 2:
        raise ValueError("the family requires n >= 2")
    core = n * (n - 1)
    copies = core - 1
    copy_degree = core + (n - 1)
    return ThresholdAssignment((0,) * core + (copy_degree,) * (n * copies))


def assign_thresholds(g: Graph, rule: str) -> ThresholdAssignment:
    """Build thresholds from a textual rule.

    Accepted rules: ``strict-majority``, ``simple-majority``,
    ``constant:<k>``.  (``file:<path>`` is resolved by the CLI before this
    point.)
    """
    if rule == "strict-majority":
        return strict_majority_thresholds(g)
    if rule == "simple-majority":
        return simple_majority_thresholds(g)
    if rule.startswith("constant:"):
        try:
            k = int(rule.split(":", 1)[1])
        except ValueError as exc:
            raise ValueError(f"malformed constant rule {rule!r}") from exc
        return constant_thresholds(g, k)
    raise ValueError(f"unknown threshold rule {rule!r}")


# ---------------------------------------------------------------------------
# File format: either one line of n space-separated integers, or n lines
# "v t" covering every vertex exactly once.


def parse_thresholds(text: str, n: int) -> ThresholdAssignment:
    lines = [ln.strip() for ln in text.splitlines()]
    data = [ln for ln in lines if ln and not ln.startswith("#")]
    if len(data) == 1 and len(data[0].split()) == n:
        try:
            values = tuple(int(tok) for tok in data[0].split())
        except ValueError as exc:
            raise GraphFormatError("malformed threshold line") from exc
        return ThresholdAssignment(values)
    if len(data) != n:
        raise GraphFormatError(
            f"expected one line of {n} values or {n} 'v t' lines, got {len(data)} lines"
        )
    out = [-1] * n
    for ln in data:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"malformed threshold line {ln!r}")
        try:
            v, t = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"malformed threshold line {ln!r}") from exc
        if not 0 <= v < n:
            raise GraphFormatError(f"vertex id {v} out of range")
        if out[v] != -1:
            raise GraphFormatError(f"duplicate threshold for vertex {v}")
        out[v] = t
    return ThresholdAssignment(tuple(out))


def render_thresholds(tau: ThresholdAssignment) -> str:
    return " ".join(str(t) for t in tau.values) + "\n"
