import random

import pytest
from hypothesis import given, settings, strategies as hst

from grbrauer import oracle
from grbrauer.graph import BrauerGraph, validate
from grbrauer.oracle import RandomGraphSpec


def test_census_t2(t2):
    v = oracle.band_census_check(t2, 16)
    assert (v.predicted, v.observed, v.agree) == (1, 1, True)


def test_census_controls(corpus):
    v = oracle.band_census_check(corpus["balanced_star"], 16)
    assert (v.predicted, v.observed, v.agree) == (0, 0, True)
    v = oracle.band_census_check(corpus["square"], 16)
    assert (v.predicted, v.observed, v.agree) == (2, 2, True)


def test_census_growth_star3(corpus):
    v = oracle.band_census_check(corpus["g_star3"], 10)
    assert v.predicted == "growing" and v.agree


def test_rcount(t2, corpus):
    v = oracle.r_string_count_check(t2, "3")
    assert (v.predicted, v.observed, v.agree) == (4, 4, True)
    with pytest.raises(oracle.StarConditionFails):
        oracle.r_string_count_check(t2, "1")
    # an unbalanced pair breaks the third clause, so no prediction is made
    for e in ("3", "4"):
        with pytest.raises(oracle.StarConditionFails):
            oracle.r_string_count_check(corpus["g_hh"], e)


def test_band_preservation(corpus, t2):
    v = oracle.band_preservation_check(corpus["two_m2_tree"], 16)
    assert v.agree and v.observed == 1
    v = oracle.band_preservation_check(corpus["balanced_star"], 12)
    assert v.agree
    with pytest.raises(oracle.StarConditionFails):
        oracle.band_preservation_check(t2, 12)


def test_witness(corpus, t2):
    w = oracle.infinite_band_witness(corpus["g_c4"], 12)
    assert w is not None and w.family.verified
    w = oracle.infinite_band_witness(corpus["g_t7"], 10)
    assert w is not None and w.family.verified
    with pytest.raises(oracle.PreconditionFails):
        oracle.infinite_band_witness(t2)


def test_random_graphs_reproducible():
    spec = RandomGraphSpec(8, 3, "any", 7)
    a = [g for g in oracle.random_graphs(spec, 20)]
    b = [g for g in oracle.random_graphs(spec, 20)]
    assert a == b


@pytest.mark.parametrize("family", oracle.FAMILIES)
def test_suite_small(family):
    rep = oracle.consistency_suite(RandomGraphSpec(6, 3, family, 3), 40)
    assert rep.ok, rep.lines()


def test_suite_reports_failure(monkeypatch):
    monkeypatch.setattr(oracle, "consistency_A_vs_grA", lambda g: False)
    rep = oracle.consistency_suite(RandomGraphSpec(4, 2, "brauer_tree", 0), 3)
    assert not rep.ok
    name, text = rep.failures[0]
    assert name == "degeneration_order" and '"vertices"' in text


@settings(max_examples=100, deadline=None)
@given(hst.sampled_from(oracle.FAMILIES), hst.integers(0, 10**6), hst.integers(1, 9))
def test_generated_graphs_valid(family, seed, max_edges):
    g = oracle.random_graph(RandomGraphSpec(max_edges, 3, family, seed))
    assert validate(g).ok
    assert len(g.edges) <= max_edges


def test_naive_oracle_matches_on_corpus(kronecker, twoloop, t2_I2):
    for pres, L in ((kronecker, 6), (twoloop, 8), (t2_I2, 7)):
        assert oracle.naive_strings(pres, L) == oracle.pruned_strings(pres, L)
        assert oracle.naive_bands(pres, L) == oracle.pruned_bands(pres, L)


@settings(max_examples=40, deadline=None)
@given(hst.integers(0, 10**6))
def test_naive_oracle_random(seed):
    pres = oracle.random_presentation(random.Random(seed))
    assert oracle.naive_strings(pres, 6) == oracle.pruned_strings(pres, 6)
    assert oracle.naive_bands(pres, 6) == oracle.pruned_bands(pres, 6)
