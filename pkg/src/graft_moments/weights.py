"""Vertex weight functions with exact rational values.

A weight function assigns a nonnegative rational to every vertex of the
graph it is evaluated on.  The built-in kinds cover the weightings the
closed-form results specialize to (unit, one-half, degree, constants),
plus explicit per-vertex maps and affine combinations a*base + c.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import (
    EmptyGraph,
    GraphFormatError,
    NegativeWeight,
    ProvenanceMismatch,
    UnknownVertex,
)
from .graph import Graph

Rational = Fraction

RationalLike = "Fraction | int | str"


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" (or a bare integer "p") into an exact rational."""
    if not isinstance(text, str):
        raise GraphFormatError(f"expected a rational string, got {text!r}")
    try:
        if "/" in text:
            num, den = text.split("/", 1)
            value = Fraction(int(num.strip()), int(den.strip()))
        else:
            value = Fraction(int(text.strip()))
    except (ValueError, ZeroDivisionError) as exc:
        raise GraphFormatError(f"bad rational {text!r}: {exc}") from None
    return value


def format_rational(value: Fraction) -> str:
    """Serialize to "p/q" with positive denominator; integers become "p/1"."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def _as_rational(value) -> Fraction:
    try:
        return Fraction(value)
    except (TypeError, ValueError) as exc:
        raise GraphFormatError(f"bad rational value {value!r}: {exc}") from None


class WeightFunction:
    """Base class; subclasses define value(graph, vertex)."""

    def value(self, g: Graph, v: int) -> Fraction:
        raise NotImplementedError

    def total(self, g: Graph) -> Fraction:
        """Sum of the weight over all vertices of g."""
        if g.order == 0:
            raise EmptyGraph("total weight of the empty graph")
        result = Fraction(0)
        for v in g.vertices:
            result += self.value(g, v)
        return result

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"


class UnitWeight(WeightFunction):
    """Every vertex weighs 1; moments become the Wiener-type distance sum."""

    def value(self, g: Graph, v: int) -> Fraction:
        if v not in g:
            raise UnknownVertex(f"vertex {v!r} is not in the graph")
        return Fraction(1)


class HalfWeight(WeightFunction):
    """Every vertex weighs 1/2; the moment is the Wiener index."""

    def value(self, g: Graph, v: int) -> Fraction:
        if v not in g:
            raise UnknownVertex(f"vertex {v!r} is not in the graph")
        return Fraction(1, 2)


class DegreeWeight(WeightFunction):
    """Weight = vertex degree; the moment is the degree distance."""

    def value(self, g: Graph, v: int) -> Fraction:
        return Fraction(g.degree(v))


class ConstantWeight(WeightFunction):
    """Every vertex weighs the same nonnegative rational."""

    __slots__ = ("constant",)

    def __init__(self, constant):
        c = _as_rational(constant)
        if c < 0:
            raise NegativeWeight(f"constant weight {c} is negative")
        self.constant = c

    def value(self, g: Graph, v: int) -> Fraction:
        if v not in g:
            raise UnknownVertex(f"vertex {v!r} is not in the graph")
        return self.constant

    def __repr__(self) -> str:
        return f"ConstantWeight({self.constant})"


class ExplicitWeight(WeightFunction):
    """Per-vertex map; must cover the whole vertex set it is used on."""

    __slots__ = ("values",)

    def __init__(self, values: Mapping[int, object]):
        self.values = {v: _as_rational(w) for v, w in values.items()}

    def value(self, g: Graph, v: int) -> Fraction:
        if v not in g:
            raise UnknownVertex(f"vertex {v!r} is not in the graph")
        if v not in self.values:
            raise UnknownVertex(f"weight map has no entry for vertex {v!r}")
        w = self.values[v]
        if w < 0:
            raise NegativeWeight(f"weight {w} at vertex {v!r} is negative")
        return w

    def __repr__(self) -> str:
        return f"ExplicitWeight({self.values})"


class AffineWeight(WeightFunction):
    """scale * base(v) + shift, exact; the result must stay nonnegative."""

    __slots__ = ("scale", "base", "shift")

    def __init__(self, scale, base: WeightFunction, shift):
        self.scale = _as_rational(scale)
        self.base = base
        self.shift = _as_rational(shift)

    def value(self, g: Graph, v: int) -> Fraction:
        w = self.scale * self.base.value(g, v) + self.shift
        if w < 0:
            raise NegativeWeight(
                f"affine weight {w} at vertex {v!r} is negative"
            )
        return w

    def __repr__(self) -> str:
        return f"AffineWeight({self.scale}, {self.base!r}, {self.shift})"


UNIT = UnitWeight()
HALF = HalfWeight()
DEGREE = DegreeWeight()


def combine_gamma(
    host: Graph,
    host_weights: WeightFunction,
    branch_weights: Sequence[tuple[Graph, int, WeightFunction]],
    host_map: Mapping[int, int],
    branch_maps: Sequence[Mapping[int, int]],
    product_vertices: Sequence[int],
) -> ExplicitWeight:
    """Combined weight on a graft product.

    Off the identified vertices the combined weight is the host weight
    (on host vertices) or the branch weight (inside a branch).  At each
    identified root it is the host weight plus the root weights of every
    branch glued there, so stacking several branches on one receptor
    accumulates.
    """
    if len(branch_weights) != len(branch_maps):
        raise ProvenanceMismatch(
            f"{len(branch_weights)} branches but {len(branch_maps)} provenance maps"
        )
    values: dict[int, Fraction] = {}
    for v in host.vertices:
        values[host_map[v]] = host_weights.value(host, v)
    for (branch, root, weights), bmap in zip(branch_weights, branch_maps):
        for bv in branch.vertices:
            pid = bmap[bv]
            w = weights.value(branch, bv)
            if bv == root:
                if pid not in values:
                    raise ProvenanceMismatch(
                        f"branch root {bv!r} maps to {pid!r}, not a host vertex"
                    )
                values[pid] += w
            else:
                if pid in values:
                    raise ProvenanceMismatch(
                        f"product vertex {pid!r} claimed twice"
                    )
                values[pid] = w
    if set(values) != set(product_vertices):
        raise ProvenanceMismatch("provenance maps do not cover the product")
    return ExplicitWeight(values)


# -- weight spec strings (CLI / JSON surface) ----------------------------


def parse_weight_spec(spec: str, *, base_dir: str | None = None) -> WeightFunction:
    """Parse "unit" | "half" | "degree" | "const:p/q" | "file:PATH".

    A weight file is a JSON object mapping vertex ids to "p/q" strings;
    relative paths resolve against base_dir (default: the process cwd).
    """
    if not isinstance(spec, str):
        raise GraphFormatError(f"weight spec must be a string, got {spec!r}")
    if spec == "unit":
        return UNIT
    if spec == "half":
        return HALF
    if spec == "degree":
        return DEGREE
    if spec.startswith("const:"):
        return ConstantWeight(parse_rational(spec[len("const:"):]))
    if spec.startswith("file:"):
        path = spec[len("file:"):]
        if base_dir is not None and not os.path.isabs(path):
            path = os.path.join(base_dir, path)
        with open(path, "r", encoding="utf-8") as fh:
            try:
                raw = json.load(fh)
            except json.JSONDecodeError as exc:
                raise GraphFormatError(f"bad weight file {path}: {exc}") from None
        if not isinstance(raw, dict):
            raise GraphFormatError(f"weight file {path} must hold an object")
        try:
            values = {int(k): parse_rational(v) for k, v in raw.items()}
        except ValueError:
            raise GraphFormatError(
                f"weight file {path} keys must be integer vertex ids"
            ) from None
        return ExplicitWeight(values)
    raise GraphFormatError(f"unknown weight spec {spec!r}")


def describe_weight(w: WeightFunction) -> object:
    """JSON-friendly description of a weight function, for diagnostics."""
    if isinstance(w, UnitWeight):
        return "unit"
    if isinstance(w, HalfWeight):
        return "half"
    if isinstance(w, DegreeWeight):
        return "degree"
    if isinstance(w, ConstantWeight):
        return f"const:{format_rational(w.constant)}"
    if isinstance(w, ExplicitWeight):
        return {"explicit": {str(v): format_rational(x) for v, x in w.values.items()}}
    if isinstance(w, AffineWeight):
        return {
            "affine": {
                "scale": format_rational(w.scale),
                "base": describe_weight(w.base),
                "shift": format_rational(w.shift),
            }
        }
    return repr(w)
