import pytest
from hypothesis import given, settings, strategies as hst

from grbrauer.graph import (
    BrauerGraph,
    DegenerateBothTruncated,
    EdgeSpec,
    NotATree,
    NotBrauerTree,
    NotUnbalanced,
    UnknownEdge,
    VertexSpec,
    Walk,
    cycle_analysis,
    distance,
    graded_degree,
    is_degree_decreasing,
    is_unbalanced_pair,
    split_at_edge,
    star_condition,
    tree_invariants,
    unbalanced_edges,
    unique_walk,
    validate,
)
from grbrauer.oracle import RandomGraphSpec, random_graph


def test_corpus_graphs_validate(corpus):
    for name, g in corpus.items():
        assert validate(g).ok, name


def test_single_edge_both_truncated_rejected():
    g = BrauerGraph.from_rotation({"a": (1, [1]), "b": (1, [1])})
    rep = validate(g)
    assert not rep.ok and rep.error == "DegenerateBothTruncated" and rep.ident == "1"


def test_half_edge_at_two_vertices():
    g = BrauerGraph(
        (VertexSpec("a", 2, ("h1",)), VertexSpec("b", 1, ("h1", "h2"))),
        (EdgeSpec("1", ("h1", "h2")),),
    )
    assert validate(g).error == "DanglingHalfEdge"


def test_duplicate_edge_id():
    g = BrauerGraph(
        (VertexSpec("a", 2, ("h1", "h3")), VertexSpec("b", 1, ("h2", "h4"))),
        (EdgeSpec("1", ("h1", "h2")), EdgeSpec("1", ("h3", "h4"))),
    )
    assert validate(g).error == "DuplicateId"


def test_disconnected():
    g = BrauerGraph.from_rotation({"a": (2, [1]), "b": (1, [1]), "c": (2, [2]), "d": (1, [2])})
    assert validate(g).error == "Disconnected"


def test_exceptional_must_be_the_heavy_vertex(t2):
    assert validate(t2.with_exceptional("c")).error == "BadExceptional"
    light = t2.with_multiplicities({"v0": 1})
    assert validate(light.with_exceptional("c")).ok


def test_graded_degree_star3(corpus):
    g = corpus["g_star3"]
    assert graded_degree(g, "c") == 4
    assert graded_degree(g, "v0") == 3
    assert {graded_degree(g, v) for v in ("leaf2", "leaf3", "leaf4")} == {4}


def test_graded_degree_t2(t2):
    assert t2.grd == {"v0": 2, "c": 3, "leaf2": 3, "u": 2, "leaf4": 2}


def test_loop_counts_twice():
    g = BrauerGraph.from_rotation({"a": (1, [1, 1, 2]), "b": (1, [2])})
    assert g.valency("a") == 3
    assert g.grd == {"a": 3, "b": 3}


def test_split_t2_edge1(t2):
    s = split_at_edge(t2, "1")
    assert not s.same_component
    assert s.oriented.v_S == "v0" and s.oriented.v_L == "c"
    assert s.oriented.branch_S.vertices == {"v0"} and s.oriented.n == 0


def test_split_c4_cycle_edge(corpus):
    assert split_at_edge(corpus["g_c4"], "2").same_component


def test_split_t2_balanced_edge(t2):
    assert split_at_edge(t2, "4").oriented is None


def test_split_unknown_edge(t2):
    with pytest.raises(UnknownEdge):
        split_at_edge(t2, "99")


def test_unbalanced_edges(t2, corpus):
    got = {s.edge: (s.oriented.v_S, s.oriented.v_L, s.oriented.n) for s in unbalanced_edges(t2)}
    assert got == {"1": ("v0", "c", 0), "3": ("u", "c", 1)}
    star3 = unbalanced_edges(corpus["g_star3"])
    assert [(s.edge, s.oriented.n) for s in star3] == [("1", 0)]
    assert unbalanced_edges(corpus["balanced_star"]) == []


def test_unique_walk(t2, corpus):
    w = unique_walk(t2, "v0", "u")
    assert w.as_list() == ["v0", "1", "c", "3", "u"] and w.length == 2
    assert unique_walk(t2, "c", "c").length == 0
    with pytest.raises(NotATree):
        unique_walk(corpus["g_c4"], "Q", "P")


def test_degree_decreasing(t2):
    assert is_degree_decreasing(t2, Walk(("c", "u", "leaf4"), ("3", "4")))
    assert not is_degree_decreasing(t2, Walk(("v0", "c"), ("1",)))
    assert is_degree_decreasing(t2, Walk(("c",), ()))


def test_star_condition(t2, corpus):
    assert star_condition(t2, "3").holds
    r = star_condition(t2, "1")
    assert (r.holds, r.failed_clause, r.witness) == (False, 2, "v0")
    assert star_condition(corpus["g_c4"], "2").failed_clause == 1
    with pytest.raises(NotUnbalanced):
        star_condition(t2, "4")


def test_tree_invariants_corpus(t2, corpus):
    inv = tree_invariants(t2)
    assert (inv.kappa0, inv.kappa1, inv.m0) == (1, 0, 2)
    inv = tree_invariants(corpus["g_star3"])
    assert (inv.kappa0, inv.kappa1, inv.m0, inv.s) == (1, 0, 3, 2)
    inv = tree_invariants(corpus["g_t7"])
    assert (inv.kappa0, inv.kappa1, inv.m0, inv.s) == (2, 0, 2, 2)
    with pytest.raises(NotBrauerTree):
        tree_invariants(corpus["g_c4"])


def test_hh_pair_and_kappa0_range(corpus):
    g = corpus["g_hh"]
    seen = set()
    for v in g.vertex_ids:
        inv = tree_invariants(g, v)
        assert inv.kappa1 == 1 and inv.pairs == (("3", "4"),) and inv.m0 == 1
        seen.add(inv.kappa0)
    # the middle vertex sits on the small side of both middle edges
    assert seen == {1, 2}
    assert tree_invariants(g, "M").kappa0 == 2


def test_cycle_analysis(t2, corpus):
    assert cycle_analysis(t2).kind == "tree"
    c = cycle_analysis(corpus["g_c4"])
    assert (c.kind, c.length, c.parity, c.cycle_edges) == ("unique_cycle", 3, "odd", ("2", "3", "4"))
    theta = BrauerGraph.from_rotation({"a": (1, [1, 2, 3]), "b": (1, [3, 2, 1])})
    c = cycle_analysis(theta)
    assert (c.kind, c.rank) == ("multi_cycle", 2)


def test_loop_and_double_edge_cycles():
    loop = BrauerGraph.from_rotation({"a": (1, [1, 2, 1]), "b": (1, [2])})
    c = cycle_analysis(loop)
    assert (c.length, c.parity) == (1, "odd")
    double = BrauerGraph.from_rotation({"a": (1, [1, 2]), "b": (1, [2, 1])})
    c = cycle_analysis(double)
    assert (c.length, c.parity) == (2, "even")


def test_kappa1_at_least_two_has_a_shared_edge():
    # a path of alternating degrees gives several pairs
    g = BrauerGraph.from_rotation({
        "a": (1, [1, 2, 3]), "l1": (1, [1]), "l2": (1, [2]),
        "b": (1, [3, 4]),
        "c": (1, [4, 5, 6]), "l5": (1, [5]),
        "d": (1, [6, 7]),
        "e": (1, [7, 8, 9]), "l8": (1, [8]), "l9": (1, [9]),
    })
    inv = tree_invariants(g)
    assert inv.kappa1 >= 2
    shared = [e for e in {x for p in inv.pairs for x in p} if sum(e in p for p in inv.pairs) >= 2]
    assert shared


# -- properties ---------------------------------------------------------------

FAMILY = hst.sampled_from(["brauer_tree", "two_double_tree", "unique_cycle", "any"])


@settings(max_examples=150, deadline=None)
@given(FAMILY, hst.integers(0, 10**6))
def test_handshake_and_branch_sizes(family, seed):
    g = random_graph(RandomGraphSpec(8, 3, family, seed))
    assert validate(g).ok
    assert sum(g.valency(v) for v in g.vertex_ids) == 2 * len(g.edge_ids)
    for s in unbalanced_edges(g):
        if not s.same_component:
            assert s.oriented.branch_S.n_edges + s.oriented.branch_L.n_edges + 1 == len(g.edge_ids)
    c = cycle_analysis(g)
    assert c.rank == len(g.edge_ids) - len(g.vertex_ids) + 1
    assert (c.kind == "tree") == (c.rank == 0)


@settings(max_examples=150, deadline=None)
@given(hst.integers(0, 10**6))
def test_pair_symmetry_and_kappa_implication(seed):
    g = random_graph(RandomGraphSpec(8, 3, "brauer_tree", seed))
    edges = [s.edge for s in unbalanced_edges(g)]
    for i in edges:
        for j in edges:
            if i != j:
                assert is_unbalanced_pair(g, i, j) == is_unbalanced_pair(g, j, i)
    inv = tree_invariants(g)
    assert inv.kappa1 == 0 or inv.kappa0 > 0


@settings(max_examples=100, deadline=None)
@given(hst.integers(0, 10**6))
def test_distance_matches_walk(seed):
    g = random_graph(RandomGraphSpec(8, 2, "brauer_tree", seed))
    vs = g.vertex_ids
    for u in vs[:3]:
        for v in vs:
            w = unique_walk(g, u, v)
            assert distance(g, u, v) == w.length
            assert w.vertices[0] == u and w.vertices[-1] == v
            assert len(set(w.vertices)) == len(w.vertices)
