import pytest
from hypothesis import given, settings, strategies as hst

from grbrauer.classify import (
    DOMESTIC1,
    DOMESTIC2,
    FINITE,
    NPG,
    ReprType,
    all_star,
    classify_A,
    classify_grA,
    consistency_A_vs_grA,
    cycle_on_large_side,
    domestic_conditions,
    heavy_on_large_side,
)
from grbrauer.graph import BrauerGraph, InvalidGraph
from grbrauer.oracle import RandomGraphSpec, random_graph

EXPECTED = {
    # name: (A, grA)
    "g_t2": (FINITE, DOMESTIC1),
    "g_star3": (FINITE, NPG),
    "g_t7": (FINITE, NPG),
    "g_c4": (DOMESTIC1, NPG),
    "g_hh": (FINITE, DOMESTIC1),
    "two_m2_tree": (DOMESTIC1, DOMESTIC1),
    "square": (DOMESTIC2, DOMESTIC2),
    "balanced_star": (FINITE, FINITE),
}


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_corpus_verdicts(corpus, name):
    a, gr = EXPECTED[name]
    assert classify_A(corpus[name]).verdict == a
    assert classify_grA(corpus[name]).verdict == gr
    assert consistency_A_vs_grA(corpus[name])


def test_t2_report(t2):
    rep = classify_grA(t2)
    assert rep.case_tag == "tree/s=1"
    assert (rep.witnesses["kappa0"], rep.witnesses["kappa1"], rep.witnesses["m0"]) == (1, 0, 2)
    assert rep.lines()[-1] == "VERDICT Domestic(1)"


def test_hh_report(corpus):
    rep = classify_grA(corpus["g_hh"])
    assert rep.case_tag == "tree/s=1" and rep.witnesses["kappa1"] == 1 and rep.witnesses["m0"] == 1


def test_star3_s(corpus):
    rep = classify_grA(corpus["g_star3"])
    assert rep.witnesses["s"] == 2 and rep.case_tag == "tree/s>=2"


def test_c4_reason(corpus):
    rep = classify_grA(corpus["g_c4"])
    assert rep.case_tag == "unique_cycle/grd_differs"


def test_reprtype():
    assert str(ReprType.parse("Domestic(2)")) == "Domestic(2)"
    assert ReprType.parse("Finite") == FINITE
    with pytest.raises(ValueError):
        ReprType("Domestic", 3)


def test_other_patterns_not_polynomial():
    # three vertices of multiplicity 2 on a path
    g = BrauerGraph.from_rotation({"a": (2, [1]), "b": (2, [1, 2]), "c": (2, [2])})
    assert classify_A(g).verdict == NPG and classify_grA(g).verdict == NPG
    # multiplicities 2 and 3 together
    g = BrauerGraph.from_rotation({"a": (2, [1]), "b": (1, [1, 2]), "c": (3, [2])})
    assert classify_grA(g).verdict == NPG
    theta = BrauerGraph.from_rotation({"a": (1, [1, 2, 3]), "b": (1, [3, 2, 1])})
    assert classify_A(theta).verdict == NPG


def test_loop_graph_is_odd_cycle():
    g = BrauerGraph.from_rotation({"a": (1, [1, 2, 1]), "b": (1, [2])})
    assert classify_A(g).verdict == DOMESTIC1


def test_invalid_graph():
    g = BrauerGraph.from_rotation({"a": (1, [1]), "b": (1, [1])})
    with pytest.raises(InvalidGraph):
        classify_grA(g)


def test_balanced_graphs_agree(corpus):
    for name in ("square", "two_m2_tree", "balanced_star"):
        g = corpus[name]
        assert classify_A(g).verdict == classify_grA(g).verdict


@settings(max_examples=150, deadline=None)
@given(hst.integers(0, 10**6))
def test_exceptional_vertex_independence(seed):
    g = random_graph(RandomGraphSpec(8, 1, "brauer_tree", seed)).with_exceptional(None)
    verdicts = {classify_grA(g.with_exceptional(v)).verdict for v in g.vertex_ids}
    assert len(verdicts) == 1


@settings(max_examples=150, deadline=None)
@given(hst.integers(0, 10**6))
def test_two_double_formulations(seed):
    g = random_graph(RandomGraphSpec(8, 2, "two_double_tree", seed))
    c = domestic_conditions(g)
    assert c == heavy_on_large_side(g) == all_star(g)
    assert classify_grA(g).verdict == (DOMESTIC1 if c else NPG)


@settings(max_examples=150, deadline=None)
@given(hst.integers(0, 10**6))
def test_cycle_formulations(seed):
    g = random_graph(RandomGraphSpec(8, 1, "unique_cycle", seed))
    c = domestic_conditions(g)
    assert c == cycle_on_large_side(g) == all_star(g)
    if c:
        assert classify_grA(g).verdict == classify_A(g).verdict


@settings(max_examples=150, deadline=None)
@given(hst.integers(0, 10**6))
def test_degeneration_order(seed):
    g = random_graph(RandomGraphSpec(8, 3, "any", seed))
    assert consistency_A_vs_grA(g)
    assert classify_A(g).verdict.rank <= classify_grA(g).verdict.rank
