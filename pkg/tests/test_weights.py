"""Weight function evaluation, totals, gamma combination, spec strings."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from graft_moments import (
    DEGREE,
    HALF,
    UNIT,
    AffineWeight,
    Attachment,
    ConstantWeight,
    EmptyGraph,
    ExplicitWeight,
    Graph,
    GraphFormatError,
    GraftSpec,
    NegativeWeight,
    ProvenanceMismatch,
    UnknownVertex,
    combine_gamma,
    format_rational,
    graft,
    parse_rational,
    parse_weight_spec,
    path_graph,
)
from graft_moments.randgen import random_connected_graph, random_weight_function


def test_parse_rational():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-2/6") == Fraction(-1, 3)
    assert parse_rational("5") == Fraction(5)
    for bad in ["", "x", "1/0", "1/2/3", "1.5"]:
        with pytest.raises(GraphFormatError):
            parse_rational(bad)


def test_format_rational_always_carries_denominator():
    assert format_rational(Fraction(5)) == "5/1"
    assert format_rational(Fraction(-3, 6)) == "-1/2"
    assert parse_rational(format_rational(Fraction(22, 7))) == Fraction(22, 7)


def test_preset_values(p4):
    assert UNIT.value(p4, 0) == 1
    assert HALF.value(p4, 2) == Fraction(1, 2)
    assert DEGREE.value(p4, 0) == 1
    assert DEGREE.value(p4, 1) == 2
    assert ConstantWeight("7/2").value(p4, 3) == Fraction(7, 2)


def test_affine_value(p4):
    w = AffineWeight(3, UNIT, 15)
    assert all(w.value(p4, v) == 18 for v in p4.vertices)


def test_eval_unknown_vertex(p4):
    for w in [UNIT, HALF, DEGREE, ConstantWeight(1), ExplicitWeight({})]:
        with pytest.raises(UnknownVertex):
            w.value(p4, 99)


def test_explicit_must_cover_graph(p4):
    w = ExplicitWeight({0: 1, 1: 1, 2: 1})
    with pytest.raises(UnknownVertex):
        w.value(p4, 3)


def test_negative_weights_rejected(p4):
    with pytest.raises(NegativeWeight):
        ConstantWeight(-1)
    with pytest.raises(NegativeWeight):
        ExplicitWeight({0: Fraction(-1, 2)}).value(p4, 0)
    with pytest.raises(NegativeWeight):
        AffineWeight(-1, UNIT, 0).value(p4, 0)


def test_totals(p4, diamond, k1):
    assert DEGREE.total(p4) == 6  # twice the edge count
    assert UNIT.total(diamond) == 4
    assert ConstantWeight(15).total(k1) == 15
    with pytest.raises(EmptyGraph):
        UNIT.total(Graph([], []))


def test_degree_total_is_twice_edge_count_on_random_graphs():
    rng = random.Random(11)
    for _ in range(20):
        g = random_connected_graph(rng, rng.randint(1, 10))
        assert DEGREE.total(g) == 2 * g.edge_count


def test_affine_is_exactly_linear_on_random_graphs():
    rng = random.Random(12)
    for _ in range(20):
        g = random_connected_graph(rng, rng.randint(1, 9))
        base = random_weight_function(rng, g)
        a = Fraction(rng.randint(0, 20), rng.randint(1, 5))
        c = Fraction(rng.randint(0, 20), rng.randint(1, 5))
        w = AffineWeight(a, base, c)
        for v in g.vertices:
            assert w.value(g, v) == a * base.value(g, v) + c


def test_gamma_of_single_gluing(k2):
    product = graft(GraftSpec(k2, (Attachment(0, k2, 0, UNIT),), UNIT))
    values = [product.gamma.value(product.graph, v) for v in product.graph.vertices]
    assert sorted(values) == [1, 1, 2]
    assert product.gamma.value(product.graph, 0) == 2  # the identified vertex


def test_gamma_zero_branches_echo_host_weight(p4, k1):
    zero = ConstantWeight(0)
    spec = GraftSpec(p4, tuple(Attachment(v, k1, 0, zero) for v in p4.vertices), DEGREE)
    product = graft(spec)
    for v in p4.vertices:
        assert product.gamma.value(product.graph, product.host_map[v]) == p4.degree(v)


def test_gamma_degree_weights_give_product_degree():
    rng = random.Random(13)
    from graft_moments.randgen import random_graft_spec

    for _ in range(20):
        spec = random_graft_spec(rng, max_host=8, max_branch_order=6,
                                 allow_repeated_receptors=True)
        spec = GraftSpec(
            spec.host,
            tuple(
                Attachment(a.receptor, a.branch, a.root, DEGREE)
                for a in spec.attachments
            ),
            DEGREE,
        )
        product = graft(spec)
        for v in product.graph.vertices:
            assert product.gamma.value(product.graph, v) == product.graph.degree(v)


def test_gamma_total_is_host_plus_branch_totals(p3, k2):
    spec = GraftSpec(p3, (Attachment(0, k2, 0, HALF), Attachment(0, k2, 1, DEGREE)), UNIT)
    product = graft(spec)
    expected = UNIT.total(p3) + HALF.total(k2) + DEGREE.total(k2)
    assert product.gamma.total(product.graph) == expected


def test_combine_gamma_detects_bad_provenance(k2):
    with pytest.raises(ProvenanceMismatch):
        combine_gamma(
            k2,
            UNIT,
            [(k2, 0, UNIT)],
            {0: 0, 1: 1},
            [{0: 0, 1: 1}],  # claims an existing vertex for a branch interior
            [0, 1, 2],
        )


def test_parse_weight_spec_presets():
    assert parse_weight_spec("unit") is UNIT
    assert parse_weight_spec("half") is HALF
    assert parse_weight_spec("degree") is DEGREE
    w = parse_weight_spec("const:7/3")
    assert isinstance(w, ConstantWeight) and w.constant == Fraction(7, 3)


def test_parse_weight_spec_file(tmp_path, p4):
    path = tmp_path / "w.json"
    path.write_text('{"0": "1/2", "1": "3/1", "2": "0/1", "3": "5/4"}')
    w = parse_weight_spec(f"file:{path}")
    assert w.value(p4, 1) == 3
    assert w.value(p4, 3) == Fraction(5, 4)
    # relative paths resolve against base_dir
    w2 = parse_weight_spec("file:w.json", base_dir=str(tmp_path))
    assert w2.value(p4, 0) == Fraction(1, 2)


def test_parse_weight_spec_rejects_garbage(tmp_path):
    for bad in ["", "units", "const:", "const:1/0"]:
        with pytest.raises(GraphFormatError):
            parse_weight_spec(bad)
    path = tmp_path / "bad.json"
    path.write_text("[1, 2]")
    with pytest.raises(GraphFormatError):
        parse_weight_spec(f"file:{path}")
