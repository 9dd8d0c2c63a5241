"""Closed-form lower and upper bounds on minimum dynamo size.

All bound values are exact rationals; nothing here touches floating point.
Each bound carries an applicability flag with a reason, because most of them
presume something about the instance (degree-respecting thresholds, odd
regularity, no isolated vertices).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .combinatorics import chromatic_number, matching_number, vertex_cover_number
from .graphs import Graph, complete_graph, degree_sequence, edge_density
from .thresholds import ThresholdAssignment, threshold_stats


def lower_bound_average(g: Graph, tau: ThresholdAssignment) -> Fraction:
    """Every dynamo has at least n*(mean - density)/max_threshold vertices.

    Requires degree-respecting thresholds.  The value is clamped at zero
    (the bound is vacuous when the mean threshold does not exceed the edge
    density) and an all-zero assignment short-circuits to zero, since the
    empty set is then a dynamo.
    """
    if not tau.respects_degrees(g):
        raise ValueError("lower bound requires degree-respecting thresholds")
    if g.n == 0:
        raise ValueError("lower bound undefined for the empty graph")
    mean, t_max, _ = threshold_stats(g, tau)
    if t_max == 0:
        return Fraction(0)
    value = g.n * (mean - edge_density(g)) / t_max
    return max(Fraction(0), value)


def upper_bound_degree_sequence(g: Graph, mean: Fraction | int) -> int:
    """Largest k whose k smallest degree-plus-one values sum to at most n*mean.

    Any minimal dynamo (hence the minimum one) has at most this many
    vertices, for every non-negative threshold assignment with the given
    mean.
    """
    mean = Fraction(mean)
    if mean < 0:
        raise ValueError("mean threshold must be non-negative")
    budget = g.n * mean
    total = 0
    k = 0
    for d in degree_sequence(g):
        total += d + 1
        if total > budget:
            break
        k += 1
    return k


class KnWitness(NamedTuple):
    graph: Graph
    thresholds: ThresholdAssignment
    expected: int


def kn_witness(n: int, mean: Fraction | int) -> KnWitness:
    """Threshold assignment on the complete graph whose minimum dynamo size
    meets the degree-sequence bound exactly.

    ``n * mean`` must be an integer and ``0 <= mean <= n - 1``.  The first
    ``n * (mean - floor(mean))`` vertices get threshold ``floor(mean) + 1``,
    the rest get ``floor(mean)``; the minimum dynamo then has exactly
    ``floor(mean)`` vertices.
    """
    if n < 1:
        raise ValueError("n must be positive")
    mean = Fraction(mean)
    if (n * mean).denominator != 1:
        raise ValueError("n * mean must be an integer")
    if mean < 0 or mean > n - 1:
        raise ValueError("mean must lie in [0, n-1]")
    floor = mean.numerator // mean.denominator
    high = int(n * (mean - floor))
    values = (floor + 1,) * high + (floor,) * (n - high)
    return KnWitness(
        graph=complete_graph(n),
        thresholds=ThresholdAssignment(values),
        expected=floor,
    )


@dataclass(frozen=True)
class BoundEntry:
    label: str
    value: Fraction | None
    applicable: bool
    reason: str
    provenance: str

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "value": None if self.value is None else str(self.value),
            "applicable": self.applicable,
            "reason": self.reason,
            "provenance": self.provenance,
        }


@dataclass(frozen=True)
class BoundReport:
    lower_bounds: tuple[BoundEntry, ...]
    upper_bounds: tuple[BoundEntry, ...]
    context: dict

    def to_dict(self) -> dict:
        return {
            "context": {
                k: (str(v) if isinstance(v, Fraction) else v)
                for k, v in self.context.items()
            },
            "lower_bounds": [b.to_dict() for b in self.lower_bounds],
            "upper_bounds": [b.to_dict() for b in self.upper_bounds],
        }


def bound_report(g: Graph, tau: ThresholdAssignment, heavy: bool = False) -> BoundReport:
    """Evaluate every applicable closed-form bound for (g, tau).

    ``heavy`` additionally computes the exact vertex cover, chromatic and
    matching numbers, which unlocks the cover and coloring upper bounds but
    is exponential-time in the worst case.
    """
    tau.check_length(g)
    if g.n == 0:
        raise ValueError("bound report undefined for the empty graph")
    n = g.n
    density = edge_density(g)
    mean, t_max, t_min = threshold_stats(g, tau)
    respects = tau.respects_degrees(g)
    isolated = g.min_degree == 0

    context: dict = {
        "n": n,
        "edges": g.edge_count,
        "edge_density": density,
        "mean_threshold": mean,
        "max_threshold": t_max,
        "min_threshold": t_min,
        "max_degree": g.max_degree,
        "min_degree": g.min_degree,
        "respects_degrees": respects,
    }

    lower: list[BoundEntry] = []
    upper: list[BoundEntry] = []

    if respects:
        lower.append(
            BoundEntry(
                "average-threshold",
                lower_bound_average(g, tau),
                True,
                "",
                "n*(mean - density)/max_threshold, clamped at 0",
            )
        )
    else:
        lower.append(
            BoundEntry(
                "average-threshold",
                None,
                False,
                "thresholds exceed degrees somewhere",
                "n*(mean - density)/max_threshold, clamped at 0",
            )
        )

    margin_prov = "margin*density with margin = mean/density - 1"
    if respects and density > 0 and mean > density:
        lower.append(
            BoundEntry("density-margin", mean - density, True, "", margin_prov)
        )
    else:
        reason = (
            "thresholds exceed degrees somewhere"
            if not respects
            else "requires mean threshold above a positive edge density"
        )
        lower.append(BoundEntry("density-margin", None, False, reason, margin_prov))

    regular_prov = "n/(4r + 2) on (2r+1)-regular graphs with mean r + 1"
    degs = set(g.degrees)
    if (
        len(degs) == 1
        and (d := next(iter(degs))) % 2 == 1
        and mean == (d + 1) // 2  # r + 1 with d = 2r + 1
    ):
        r = (d - 1) // 2
        lower.append(
            BoundEntry("odd-regular", Fraction(n, 4 * r + 2), True, "", regular_prov)
        )
    else:
        lower.append(
            BoundEntry(
                "odd-regular",
                None,
                False,
                "requires an odd-regular graph with mean threshold r + 1",
                regular_prov,
            )
        )

    upper.append(
        BoundEntry(
            "degree-sequence",
            Fraction(upper_bound_degree_sequence(g, mean)),
            True,
            "",
            "max k with the k smallest (degree + 1) summing to at most n*mean",
        )
    )
    upper.append(
        BoundEntry(
            "min-degree",
            n * mean / (g.min_degree + 1),
            True,
            "",
            "n*mean/(min_degree + 1)",
        )
    )

    cover_prov = "vertex cover number (a cover is a dynamo; with mean 2*density every dynamo is a cover)"
    chrom_prov = "n*(1 - 1/chromatic_number)"
    if heavy:
        beta = vertex_cover_number(g)
        chi = chromatic_number(g)
        context["vertex_cover_number"] = beta
        context["chromatic_number"] = chi
        context["matching_number"] = matching_number(g)
        if respects and not isolated:
            upper.append(BoundEntry("vertex-cover", Fraction(beta), True, "", cover_prov))
            upper.append(
                BoundEntry("chromatic", n * (1 - Fraction(1, chi)), True, "", chrom_prov)
            )
        else:
            reason = (
                "thresholds exceed degrees somewhere"
                if not respects
                else "requires a graph without isolated vertices"
            )
            upper.append(BoundEntry("vertex-cover", None, False, reason, cover_prov))
            upper.append(BoundEntry("chromatic", None, False, reason, chrom_prov))
    else:
        upper.append(
            BoundEntry("vertex-cover", None, False, "heavy invariants not requested", cover_prov)
        )
        upper.append(
            BoundEntry("chromatic", None, False, "heavy invariants not requested", chrom_prov)
        )

    return BoundReport(tuple(lower), tuple(upper), context)
