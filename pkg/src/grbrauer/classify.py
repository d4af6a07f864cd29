"""Representation type of a Brauer graph algebra and of its graded algebra.

Both classifiers read the verdict straight off the graph; no words are
enumerated here (see ``oracle`` for the brute-force cross-checks).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .graph import (
    BrauerGraph,
    InvalidGraph,
    cycle_analysis,
    increasing_walk_from,
    star_condition,
    tree_invariants,
    unbalanced_edges,
    validate,
)


@dataclass(frozen=True, order=True)
class ReprType:
    kind: str  # "Finite" | "Domestic" | "NotPolynomialGrowth"
    n: int = 0

    def __post_init__(self):
        if self.kind not in ("Finite", "Domestic", "NotPolynomialGrowth"):
            raise ValueError(f"unknown representation type {self.kind!r}")
        if self.kind == "Domestic" and self.n not in (1, 2):
            raise ValueError("only 1- and 2-domestic types occur")

    @property
    def rank(self) -> int:
        """0 finite, 1 domestic, 2 not of polynomial growth."""
        return {"Finite": 0, "Domestic": 1, "NotPolynomialGrowth": 2}[self.kind]

    def __str__(self) -> str:
        return f"Domestic({self.n})" if self.kind == "Domestic" else self.kind

    @classmethod
    def parse(cls, text: str) -> "ReprType":
        text = text.strip()
        if text.startswith("Domestic(") and text.endswith(")"):
            return cls("Domestic", int(text[9:-1]))
        return cls(text)


FINITE = ReprType("Finite")
DOMESTIC1 = ReprType("Domestic", 1)
DOMESTIC2 = ReprType("Domestic", 2)
NPG = ReprType("NotPolynomialGrowth")


@dataclass(frozen=True)
class ClassificationReport:
    algebra: str  # "A" | "grA"
    verdict: ReprType
    case_tag: str
    witnesses: dict = field(default_factory=dict, hash=False, compare=False)

    def lines(self) -> list[str]:
        out = [f"ALGEBRA {self.algebra}", f"CASE {self.case_tag}"]
        for k in sorted(self.witnesses):
            out.append(f"{k.upper()} {_fmt(self.witnesses[k])}")
        out.append(f"VERDICT {self.verdict}")
        return out


def _fmt(x) -> str:
    if isinstance(x, (list, tuple)):
        return " ".join(_fmt(y) for y in x) if x else "-"
    return str(x)


def _require_valid(g: BrauerGraph) -> None:
    rep = validate(g)
    if not rep.ok:
        raise InvalidGraph(f"{rep.error}: {rep.message}", rep.ident)


def _heavy(g: BrauerGraph) -> list[str]:
    return [v for v in g.vertex_ids if g.multiplicity(v) > 1]


def _shape(g: BrauerGraph) -> str:
    """Which family the graph belongs to: brauer_tree, two_double_tree, unique_cycle or other."""
    cyc = cycle_analysis(g)
    heavy = _heavy(g)
    if cyc.kind == "tree":
        if len(heavy) <= 1:
            return "brauer_tree"
        if len(heavy) == 2 and all(g.multiplicity(v) == 2 for v in heavy):
            return "two_double_tree"
    elif cyc.kind == "unique_cycle" and not heavy:
        return "unique_cycle"
    return "other"


def classify_A(g: BrauerGraph) -> ClassificationReport:
    _require_valid(g)
    shape = _shape(g)
    cyc = cycle_analysis(g)
    if shape == "brauer_tree":
        return ClassificationReport("A", FINITE, "brauer_tree", {"m0": g.multiplicity(g.exceptional_vertex())})
    if shape == "two_double_tree":
        return ClassificationReport("A", DOMESTIC1, "tree/two_m2", {"heavy": _heavy(g)})
    if shape == "unique_cycle":
        n = 1 if cyc.length % 2 else 2
        return ClassificationReport(
            "A", ReprType("Domestic", n), f"unique_cycle/{cyc.parity}",
            {"cycle_length": cyc.length, "cycle_edges": list(cyc.cycle_edges)},
        )
    return ClassificationReport(
        "A", NPG, "other", {"cycle_rank": cyc.rank, "heavy": _heavy(g)},
    )


def classify_grA(g: BrauerGraph) -> ClassificationReport:
    _require_valid(g)
    shape = _shape(g)
    if shape == "brauer_tree":
        inv = tree_invariants(g)
        s = inv.s
        verdict = FINITE if s == 0 else DOMESTIC1 if s == 1 else NPG
        return ClassificationReport(
            "grA", verdict, f"tree/s={s}" if s < 2 else "tree/s>=2",
            {
                "kappa0": inv.kappa0, "kappa1": inv.kappa1, "m0": inv.m0, "s": s,
                "exceptional": inv.exceptional,
                "pairs": [f"{i},{j}" for i, j in inv.pairs],
            },
        )
    if shape == "two_double_tree":
        w0, w1 = _heavy(g)
        if g.grd[w0] != g.grd[w1]:
            return ClassificationReport(
                "grA", NPG, "tree/two_m2/grd_differs",
                {"heavy": [w0, w1], "grd": [g.grd[w0], g.grd[w1]]},
            )
        for w in (w0, w1):
            bad = increasing_walk_from(g, w)
            if bad is not None:
                return ClassificationReport(
                    "grA", NPG, "tree/two_m2/walk_increases", {"heavy": [w0, w1], "walk": str(bad)},
                )
        return ClassificationReport("grA", DOMESTIC1, "tree/two_m2", {"heavy": [w0, w1]})
    if shape == "unique_cycle":
        cyc = cycle_analysis(g)
        degs = {g.grd[v] for v in cyc.cycle_vertices}
        wit = {"cycle_length": cyc.length, "cycle_edges": list(cyc.cycle_edges)}
        if len(degs) != 1:
            wit["cycle_grd"] = sorted(degs)
            return ClassificationReport("grA", NPG, "unique_cycle/grd_differs", wit)
        for v in cyc.cycle_vertices:
            bad = increasing_walk_from(g, v)
            if bad is not None:
                wit["walk"] = str(bad)
                return ClassificationReport("grA", NPG, "unique_cycle/walk_increases", wit)
        n = 1 if cyc.length % 2 else 2
        return ClassificationReport("grA", ReprType("Domestic", n), f"unique_cycle/{cyc.parity}", wit)
    a = classify_A(g)
    return ClassificationReport("grA", NPG, "other/A_not_polynomial", dict(a.witnesses))


def consistency_A_vs_grA(g: BrauerGraph) -> bool:
    """Does the pair of verdicts respect the order finite < domestic < not polynomial growth?"""
    a = classify_A(g).verdict
    gr = classify_grA(g).verdict
    if gr == FINITE and a != FINITE:
        return False
    if gr.kind == "Domestic" and a.rank > 1:
        return False
    if a == NPG and gr != NPG:
        return False
    return a.rank <= gr.rank


# -- equivalent branch-side formulations --------------------------------------


def all_star(g: BrauerGraph) -> bool:
    return all(star_condition(g, s.edge).holds for s in unbalanced_edges(g))


def heavy_on_large_side(g: BrauerGraph) -> bool:
    """Every multiplicity-2 vertex lies on the large side of every unbalanced edge."""
    heavy = _heavy(g)
    for s in unbalanced_edges(g):
        o = s.oriented
        if s.same_component or any(w not in o.branch_L.vertices or w in o.branch_S.vertices for w in heavy):
            return False
    return True


def cycle_on_large_side(g: BrauerGraph) -> bool:
    """No cycle edge is unbalanced and the cycle sits on the large side of every unbalanced edge."""
    cyc = cycle_analysis(g)
    for s in unbalanced_edges(g):
        if s.edge in cyc.cycle_edges or s.same_component:
            return False
        if not set(cyc.cycle_vertices) <= s.oriented.branch_L.vertices:
            return False
    return True


def domestic_conditions(g: BrauerGraph) -> bool:
    """Clause conditions of the graded classification for the two-double tree and unique-cycle families."""
    shape = _shape(g)
    if shape == "two_double_tree":
        w0, w1 = _heavy(g)
        return g.grd[w0] == g.grd[w1] and all(increasing_walk_from(g, w) is None for w in (w0, w1))
    if shape == "unique_cycle":
        cyc = cycle_analysis(g)
        return len({g.grd[v] for v in cyc.cycle_vertices}) == 1 and all(
            increasing_walk_from(g, v) is None for v in cyc.cycle_vertices
        )
    raise ValueError(f"no clause conditions for shape {shape}")
