"""Brute-force checks tying the graph-level classification to word enumeration.

Every check returns an :class:`OracleVerdict`.  Census growth for the
non-polynomial case is evidence, not proof; the classifier stays authoritative.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from itertools import product

import networkx as nx

from . import strings as st
from .classify import (
    all_star,
    classify_A,
    classify_grA,
    consistency_A_vs_grA,
    cycle_on_large_side,
    domestic_conditions,
    heavy_on_large_side,
)
from .graph import (
    BrauerGraph,
    cycle_analysis,
    increasing_walk_from,
    is_unbalanced_pair,
    split_at_edge,
    star_condition,
    tree_invariants,
    unbalanced_edges,
    validate,
)
from .io import serialize_bg
from .presentation import build_quiver, ideal_variant, string_presentation, to_presentation


class StarConditionFails(ValueError):
    """The lemma behind a check does not apply to the requested edge(s)."""


class PreconditionFails(ValueError):
    pass


@dataclass(frozen=True)
class OracleVerdict:
    check_name: str
    predicted: object
    observed: object
    max_len: int
    agree: bool
    notes: str = ""

    def lines(self) -> list[str]:
        out = [
            f"CHECK {self.check_name}",
            f"PREDICTED {self.predicted}",
            f"OBSERVED {self.observed}",
            f"MAX_LEN {self.max_len}",
        ]
        if self.notes:
            out.append(f"NOTES {self.notes}")
        out.append(f"AGREE {'yes' if self.agree else 'no'}")
        return out


def default_max_len(g: BrauerGraph) -> int:
    """4 x (number of arrows) x (largest graded degree)."""
    return 4 * len(build_quiver(g).arrows) * max(g.grd.values())


def census_max_len(g: BrauerGraph) -> int:
    """Shorter probe length, 2 x (number of arrows) + largest graded degree, for batch runs."""
    return 2 * len(build_quiver(g).arrows) + max(g.grd.values())


def predicted_census(g: BrauerGraph):
    v = classify_grA(g).verdict
    if v.kind == "Finite":
        return 0
    if v.kind == "Domestic":
        return v.n
    return "growing"


def band_census_check(g: BrauerGraph, max_len: int | None = None, budget: int = st.DEFAULT_BUDGET,
                      probe: bool = True) -> OracleVerdict:
    """Compare the predicted number of bands of I2 with the enumerated one.

    Finite predictions must hold at ``max_len`` and (with ``probe``) again at
    twice that length; a non-polynomial prediction needs the count to grow.
    """
    L = max_len or default_max_len(g)
    pres = string_presentation(g, "I2")
    pred = predicted_census(g)
    c1 = st.band_census(pres, L, budget)
    if pred == "growing":
        c2 = st.band_census(pres, 2 * L, budget)
        return OracleVerdict("census", "growing", f"{c1} -> {c2}", L, c2 > c1,
                             "count at max_len and twice max_len")
    if not probe:
        return OracleVerdict("census", pred, c1, L, c1 == pred)
    c2 = st.band_census(pres, 2 * L, budget)
    obs = c1 if c1 == c2 else f"{c1} -> {c2}"
    return OracleVerdict("census", pred, obs, L, c1 == c2 == pred, "stable under doubling max_len" if c1 == c2 else "")


def r_string_count_check(g: BrauerGraph, i: str, max_len: int | None = None,
                         budget: int = st.DEFAULT_BUDGET) -> OracleVerdict:
    ideal = ideal_variant(g, "I2")
    if i not in ideal.P:
        raise StarConditionFails(f"edge {i} carries no longer cycle path (not an unbalanced type-1 edge)")
    star = star_condition(g, i)
    if not star.holds:
        raise StarConditionFails(f"edge {i} fails clause {star.failed_clause} (witness {star.witness})")
    r = ideal.P[i]
    n = split_at_edge(g, i).oriented.n
    L = max_len or len(r) + 2 * n + 2
    pres = to_presentation(build_quiver(g), ideal)
    obs = st.strings_containing(pres, r, L, budget)
    return OracleVerdict("rcount", (n + 1) ** 2, obs, L, obs == (n + 1) ** 2, f"edge {i}, n={n}")


def band_preservation_check(g: BrauerGraph, max_len: int | None = None,
                            budget: int = st.DEFAULT_BUDGET) -> OracleVerdict:
    for s in unbalanced_edges(g):
        res = star_condition(g, s.edge)
        if not res.holds:
            raise StarConditionFails(f"edge {s.edge} fails clause {res.failed_clause}")
    L = max_len or default_max_len(g)
    b1 = st.enumerate_bands(string_presentation(g, "I1"), L, budget)
    b2 = st.enumerate_bands(string_presentation(g, "I2"), L, budget)
    return OracleVerdict("preserve", len(b1), len(b2), L, b1 == b2, "bands of I1 vs bands of I2")


@dataclass(frozen=True)
class BandWitness:
    b1: st.Word
    b2: st.Word
    family: st.BandFamily
    searched: int


def infinite_band_witness(g: BrauerGraph, max_len: int = 12, budget: int = st.DEFAULT_BUDGET,
                          max_pairs: int = 20000) -> BandWitness | None:
    """Look for two bands of I2 that glue into the infinite family ``b2^k b1``.

    Pairs of the literal overlap shape are preferred; ``None`` means nothing
    was found within the bounds, which refutes nothing.
    """
    if classify_grA(g).verdict.kind != "NotPolynomialGrowth":
        raise PreconditionFails("the graded algebra is not classified as non-polynomial growth")
    pres = string_presentation(g, "I2")
    bands = sorted(st.enumerate_bands(pres, max_len, budget), key=lambda w: (len(w), w.letters))
    tried = 0
    fallback = None
    for a in range(len(bands)):
        for b in range(a + 1, len(bands)):
            tried += 1
            if tried > max_pairs:
                break
            try:
                fam = st.band_power_family(pres, bands[a], bands[b])
            except st.ShapeMismatch:
                continue
            if not fam.verified:
                continue
            if fam.shape == "overlap":
                return BandWitness(bands[a], bands[b], fam, tried)
            if fallback is None:
                fallback = BandWitness(bands[a], bands[b], fam, tried)
    return fallback


# -- random graphs -----------------------------------------------------------


FAMILIES = ("brauer_tree", "two_double_tree", "unique_cycle", "any")


@dataclass(frozen=True)
class RandomGraphSpec:
    max_edges: int = 8
    max_multiplicity: int = 3
    family: str = "brauer_tree"
    seed: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")


def _from_edge_list(rng: random.Random, n_vertices: int, edges: list[tuple[int, int]],
                    mult: dict[int, int], exceptional: int | None) -> BrauerGraph:
    incident: dict[int, list[str]] = {v: [] for v in range(n_vertices)}
    for k, (a, b) in enumerate(edges, start=1):
        incident[a].append(str(k))
        incident[b].append(str(k))
    rot = {}
    for v in range(n_vertices):
        order = incident[v]
        rng.shuffle(order)
        rot[f"v{v}"] = (mult.get(v, 1), order)
    return BrauerGraph.from_rotation(rot, None if exceptional is None else f"v{exceptional}")


def _random_tree(rng: random.Random, n_edges: int) -> list[tuple[int, int]]:
    n = n_edges + 1
    if n == 2:
        return [(0, 1)]
    t = nx.from_prufer_sequence([rng.randrange(n) for _ in range(n - 2)])
    return sorted(tuple(sorted(e)) for e in t.edges())


def random_graph(spec: RandomGraphSpec, rng: random.Random | None = None) -> BrauerGraph:
    """One random valid graph of the requested family."""
    rng = rng or random.Random(spec.seed)
    for _ in range(1000):
        g = _attempt(spec, rng)
        if g is not None and validate(g).ok:
            return g
    raise RuntimeError(f"could not generate a valid graph for {spec}")


def _attempt(spec: RandomGraphSpec, rng: random.Random) -> BrauerGraph | None:
    fam = spec.family
    if fam == "unique_cycle":
        n_edges = rng.randint(1, spec.max_edges)
        tree = _random_tree(rng, n_edges - 1) if n_edges > 1 else []
        n_vertices = n_edges if n_edges > 1 else 1
        a, b = rng.randrange(n_vertices), rng.randrange(n_vertices)
        return _from_edge_list(rng, n_vertices, tree + [(a, b)], {}, None)
    if fam == "any":
        n_edges = rng.randint(1, spec.max_edges)
        extra = rng.randint(0, min(2, n_edges - 1))
        tree = _random_tree(rng, n_edges - extra) if n_edges - extra > 0 else []
        n_vertices = n_edges - extra + 1
        edges = tree + [(rng.randrange(n_vertices), rng.randrange(n_vertices)) for _ in range(extra)]
        mult = {v: rng.randint(1, spec.max_multiplicity) if rng.random() < 0.3 else 1 for v in range(n_vertices)}
        return _from_edge_list(rng, n_vertices, edges, mult, None)
    n_edges = rng.randint(1, spec.max_edges)
    tree = _random_tree(rng, n_edges)
    n_vertices = n_edges + 1
    if fam == "brauer_tree":
        v0 = rng.randrange(n_vertices)
        m0 = rng.randint(1, max(spec.max_multiplicity, 1))
        return _from_edge_list(rng, n_vertices, tree, {v0: m0}, v0)
    w0, w1 = rng.sample(range(n_vertices), 2)
    return _from_edge_list(rng, n_vertices, tree, {w0: 2, w1: 2}, None)


def random_graphs(spec: RandomGraphSpec, trials: int):
    rng = random.Random(spec.seed)
    for _ in range(trials):
        yield random_graph(spec, rng)


# -- lemma-level consistency ---------------------------------------------------


@dataclass
class SuiteReport:
    spec: RandomGraphSpec
    trials: int
    checks: Counter = field(default_factory=Counter)
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        out = [f"FAMILY {self.spec.family}", f"TRIALS {self.trials}"]
        out += [f"CHECK {k} {v}" for k, v in sorted(self.checks.items())]
        out.append(f"FAILURES {len(self.failures)}")
        for name, text in self.failures[:1]:
            out.append(f"FIRST_FAILURE {name}")
            out += text.rstrip("\n").splitlines()
        return out


def graph_checks(g: BrauerGraph) -> dict[str, bool]:
    """Every graph/classify invariant that applies to ``g`` (name -> holds)."""
    out: dict[str, bool] = {}
    out["handshake"] = sum(g.valency(v) for v in g.vertex_ids) == 2 * len(g.edge_ids)
    splits = unbalanced_edges(g)
    out["branch_sizes"] = all(
        s.same_component or s.oriented.branch_S.n_edges + s.oriented.branch_L.n_edges + 1 == len(g.edge_ids)
        for s in splits
    )
    out["degeneration_order"] = consistency_A_vs_grA(g)
    cyc = cycle_analysis(g)
    out["cycle_rank"] = cyc.rank == len(g.edge_ids) - len(g.vertex_ids) + 1
    heavy = [v for v in g.vertex_ids if g.multiplicity(v) > 1]

    if g.is_brauer_tree():
        inv = tree_invariants(g)
        edges = [s.edge for s in splits]
        out["pair_symmetry"] = all(
            is_unbalanced_pair(g, i, j) == is_unbalanced_pair(g, j, i) for i in edges for j in edges if i != j
        )
        out["kappa1_implies_kappa0"] = inv.kappa1 == 0 or inv.kappa0 > 0
        if inv.kappa1 >= 2:
            counts = Counter(x for p in inv.pairs for x in p)
            out["kappa1_three_edges"] = max(counts.values()) >= 2
        no_increase = all(
            increasing_walk_from(g, s.oriented.v_S, s.oriented.branch_S.vertices) is None for s in splits
        )
        out["kappa1_zero_iff_decreasing"] = (inv.kappa1 == 0) == no_increase
        out["finite_iff_all_star"] = (inv.s == 0) == all_star(g)
        if not heavy:
            verdicts = {str(classify_grA(g.with_exceptional(v)).verdict) for v in g.vertex_ids}
            out["exceptional_independence"] = len(verdicts) == 1
    elif cyc.kind == "tree" and len(heavy) == 2 and all(g.multiplicity(v) == 2 for v in heavy):
        a, b, c = domestic_conditions(g), heavy_on_large_side(g), all_star(g)
        out["two_double_equivalence"] = a == b == c
        out["two_double_verdict"] = (classify_grA(g).verdict.kind == "Domestic") == a
    elif cyc.kind == "unique_cycle" and not heavy:
        a, b, c = domestic_conditions(g), cycle_on_large_side(g), all_star(g)
        out["cycle_equivalence"] = a == b == c
        out["cycle_verdict"] = (classify_grA(g).verdict.kind == "Domestic") == a
        out["cycle_unbalanced_count"] = sum(s.edge in cyc.cycle_edges for s in splits) != 1
    else:
        out["other_not_polynomial"] = (
            classify_A(g).verdict.kind == "NotPolynomialGrowth"
            and classify_grA(g).verdict.kind == "NotPolynomialGrowth"
        )
    return out


def consistency_suite(spec: RandomGraphSpec, trials: int = 200) -> SuiteReport:
    report = SuiteReport(spec, trials)
    for g in random_graphs(spec, trials):
        for name, holds in graph_checks(g).items():
            report.checks[name] += 1
            if not holds:
                report.failures.append((name, serialize_bg(g)))
    return report


# -- naive word oracle ---------------------------------------------------------


def _naive_tables(pres: st.Presentation):
    ends = {}
    for a, s, t in pres.arrows:
        ends[a, False] = (s, t)
        ends[a, True] = (t, s)
    forbidden = frozenset(tuple(p) for p in pres.forbidden)
    lengths = sorted({len(p) for p in forbidden})
    return ends, forbidden, lengths


def naive_is_string(pres: st.Presentation, letters, tables=None) -> bool:
    """Direct reading of the string definition, with no incremental state."""
    ends, forbidden, lengths = tables or _naive_tables(pres)
    keys = [(c.arrow, c.inverse) for c in letters]
    # written order: letters[0] is applied last
    for x, y in zip(keys, keys[1:]):
        if ends[x][0] != ends[y][1] or (x[0] == y[0] and x[1] != y[1]):
            return False
    # split into maximal runs of one direction, read as quiver paths
    runs, start = [], 0
    for k in range(1, len(keys) + 1):
        if k == len(keys) or keys[k][1] != keys[start][1]:
            path = tuple(a for a, _ in keys[start:k])
            runs.append(path[::-1] if keys[start][1] else path)
            start = k
    for path in runs:
        for n in lengths:
            if any(path[k:k + n] in forbidden for k in range(len(path) - n + 1)):
                return False
    return True


def _all_letters(pres: st.Presentation):
    return [st.Letter(a, inv) for a, _, _ in pres.arrows for inv in (False, True)]


def naive_words(pres: st.Presentation, max_len: int):
    """All composable reduced words of length 1..max_len (no forbidden-path pruning)."""
    arrows = {a: (s, t) for a, s, t in pres.arrows}
    letters = _all_letters(pres)

    def s(c):
        return arrows[c.arrow][1] if c.inverse else arrows[c.arrow][0]

    def t(c):
        return arrows[c.arrow][0] if c.inverse else arrows[c.arrow][1]

    frontier = [(c,) for c in letters]
    for n in range(1, max_len + 1):
        yield from frontier
        if n == max_len:
            break
        # prepend: the new letter is applied after the current leftmost one
        frontier = [(c,) + w for w in frontier for c in letters
                    if s(c) == t(w[0]) and c != w[0].inv()]


def naive_canonical_string(letters) -> tuple:
    inv = tuple(c.inv() for c in reversed(letters))
    return min(tuple(letters), inv)


def naive_canonical_band(letters) -> tuple:
    inv = tuple(c.inv() for c in reversed(letters))
    n = len(letters)
    return min(w[k:] + w[:k] for w in (tuple(letters), inv) for k in range(n))


def naive_census(pres: st.Presentation, max_len: int) -> tuple[set, set]:
    """Generate-and-filter: (canonical strings, canonical bands) up to ``max_len``."""
    ends, _, _ = tables = _naive_tables(pres)
    longest = max((len(f) for f in pres.forbidden), default=1)
    strings, bands = set(), set()
    for w in naive_words(pres, max_len):
        if not naive_is_string(pres, w, tables):
            continue
        strings.add(naive_canonical_string(w))
        first, last = w[-1], w[0]
        if ends[first.arrow, first.inverse][0] != ends[last.arrow, last.inverse][1]:
            continue
        if len({c.inverse for c in w}) != 2:
            continue
        n = len(w)
        if any(n % p == 0 and w == w[:p] * (n // p) for p in range(1, n)):
            continue
        # enough copies that every window of a forbidden length sits inside
        if naive_is_string(pres, w * (longest + 2), tables):
            bands.add(naive_canonical_band(w))
    return strings, bands


def naive_strings(pres: st.Presentation, max_len: int) -> set:
    return naive_census(pres, max_len)[0]


def naive_bands(pres: st.Presentation, max_len: int) -> set:
    return naive_census(pres, max_len)[1]


def pruned_strings(pres: st.Presentation, max_len: int) -> set:
    return {w.letters for w in st.enumerate_strings(pres, max_len) if w.letters}


def pruned_bands(pres: st.Presentation, max_len: int) -> set:
    return {w.letters for w in st.enumerate_bands(pres, max_len)}


def random_presentation(rng: random.Random, max_arrows: int = 6, max_vertices: int = 4,
                        biserial: bool = True) -> st.Presentation:
    """A random monomial presentation with at most ``max_arrows`` arrows.

    With ``biserial`` every vertex has at most two incoming and two outgoing
    arrows, which keeps naive enumeration affordable.
    """
    nv = rng.randint(1, max_vertices)
    verts = [str(v) for v in range(nv)]
    arrows = []
    outdeg, indeg = Counter(), Counter()
    for k in range(rng.randint(1, max_arrows)):
        for _ in range(20):
            a, b = rng.choice(verts), rng.choice(verts)
            if not biserial or (outdeg[a] < 2 and indeg[b] < 2):
                break
        else:
            break
        outdeg[a] += 1
        indeg[b] += 1
        arrows.append((f"x{k}", a, b))
    forbidden = set()
    for (i, s1, t1), (j, s2, t2) in product(arrows, arrows):
        if t1 == s2 and rng.random() < 0.4:
            forbidden.add((j, i))
    # a few longer directed paths
    for _ in range(rng.randint(0, 2)):
        path = [rng.choice(arrows)]
        for _ in range(rng.randint(1, 3)):
            nxt = [a for a in arrows if a[1] == path[-1][2]]
            if not nxt:
                break
            path.append(rng.choice(nxt))
        if len(path) > 1:
            forbidden.add(tuple(a[0] for a in reversed(path)))
    return st.Presentation(tuple(verts), tuple(arrows), tuple(sorted(forbidden)), "random")
