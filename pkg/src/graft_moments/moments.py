"""Weighted distance moments and the indices derived from them.

The moment of a weight w at a vertex u is sum_v w(v) * dist(v, u); the
moment of the whole graph is the sum of those over u, which equals
sum_v w(v) * s(v) where s(v) is the v-th row sum of the distance
matrix.  Classical indices are moments for specific weights: weight 1/2
gives the Wiener index, the degree weight gives the degree distance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, bfs_distances, distance_matrix
from .weights import UNIT, WeightFunction, format_rational


def moment_at(g: Graph, weights: WeightFunction, u: int) -> Fraction:
    """sum_v w(v) * dist(v, u), by one BFS from u."""
    dist = bfs_distances(g, u)
    result = Fraction(0)
    for v in g.vertices:
        result += weights.value(g, v) * dist[v]
    return result


def moment(g: Graph, weights: WeightFunction) -> Fraction:
    """Total moment sum_u sum_v w(v) * dist(v, u), via row sums."""
    dm = distance_matrix(g)
    result = Fraction(0)
    for v, s in zip(dm.vertices, dm.row_sums):
        result += weights.value(g, v) * s
    return result


def zagreb_m1(g: Graph) -> Fraction:
    """First Zagreb index: sum of squared degrees."""
    return Fraction(sum(g.degree(v) ** 2 for v in g.vertices))


@dataclass(frozen=True)
class MomentReport:
    """All derived indices of one graph under one weight function."""

    moment: Fraction
    mean_distance: Fraction
    wiener: Fraction
    degree_distance: Fraction
    zagreb1: Fraction
    mti: Fraction
    hyper_wiener_paper: Fraction

    def to_json_dict(self) -> dict[str, str]:
        return {
            "moment": format_rational(self.moment),
            "mean_distance": format_rational(self.mean_distance),
            "wiener": format_rational(self.wiener),
            "degree_distance": format_rational(self.degree_distance),
            "zagreb1": format_rational(self.zagreb1),
            "mti": format_rational(self.mti),
            "hyper_wiener_paper": format_rational(self.hyper_wiener_paper),
        }


def indices(g: Graph, weights: WeightFunction = UNIT) -> MomentReport:
    """One distance-matrix pass; every index exact.

    hyper_wiener_paper is deliberately W/2 + M1/2 (Wiener plus first
    Zagreb, halved) -- a historical variant, not the modern hyper-Wiener
    index -- hence the flagged name.
    """
    dm = distance_matrix(g)
    row_sums = dm.row_sums
    unit_moment = Fraction(sum(row_sums))
    weighted = Fraction(0)
    degree_dist = Fraction(0)
    for v, s in zip(dm.vertices, row_sums):
        weighted += weights.value(g, v) * s
        degree_dist += Fraction(g.degree(v)) * s
    zagreb = zagreb_m1(g)
    wiener = unit_moment / 2
    return MomentReport(
        moment=weighted,
        mean_distance=unit_moment / (g.order**2),
        wiener=wiener,
        degree_distance=degree_dist,
        zagreb1=zagreb,
        mti=zagreb + degree_dist,
        hyper_wiener_paper=wiener / 2 + zagreb / 2,
    )
