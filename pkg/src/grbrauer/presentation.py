"""Quiver and relations of a Brauer graph algebra and of its graded variants.

Quiver vertices are the graph edges.  Every non-truncated graph vertex ``v``
contributes one arrow per half-edge, from the edge at that half-edge to the
edge at its cyclic successor; these arrows form the special cycle at ``v``.

Paths are tuples of arrow ids written right to left: the rightmost arrow is
applied first, so ``("b", "a")`` is ``a`` followed by ``b``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .graph import BrauerGraph, ensure_valid, natural_key
from .strings import Presentation

Path = tuple[str, ...]

VARIANTS = ("I", "Igr", "I1", "I2")


class NotSpecialCycleArrow(ValueError):
    pass


@dataclass(frozen=True)
class Arrow:
    id: str
    source: str
    target: str
    at_vertex: str
    position: int


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    @cached_property
    def arrow_map(self) -> dict[str, Arrow]:
        return {a.id: a for a in self.arrows}

    def out_arrows(self, x: str) -> list[Arrow]:
        return [a for a in self.arrows if a.source == x]

    def in_arrows(self, x: str) -> list[Arrow]:
        return [a for a in self.arrows if a.target == x]

    def at_vertex(self, v: str) -> list[Arrow]:
        return sorted((a for a in self.arrows if a.at_vertex == v), key=lambda a: a.position)


def arrow_name(v: str, k: int) -> str:
    return f"a{v}_{k}"


def build_quiver(g: BrauerGraph) -> Quiver:
    ensure_valid(g)
    arrows = []
    for v in g.vertex_ids:
        if g.is_truncated(v):
            continue
        order = g.edge_order(v)
        n = len(order)
        for k, e in enumerate(order):
            arrows.append(Arrow(arrow_name(v, k), e, order[(k + 1) % n], v, k))
    return Quiver(tuple(g.edge_ids), tuple(arrows))


def path_source(q: Quiver, p: Path) -> str:
    return q.arrow_map[p[-1]].source


def path_target(q: Quiver, p: Path) -> str:
    return q.arrow_map[p[0]].target


def special_cycle(g: BrauerGraph, q: Quiver, v: str, start: str) -> Path:
    """The special cycle at ``v`` beginning with arrow ``start``."""
    arrow = q.arrow_map.get(start)
    if arrow is None or arrow.at_vertex != v:
        raise NotSpecialCycleArrow(f"{start} is not an arrow of the special cycle at {v}")
    cyc = q.at_vertex(v)
    n = len(cyc)
    applied = [cyc[(arrow.position + k) % n].id for k in range(n)]
    return tuple(reversed(applied))


def _cycle_at_half_edge(g: BrauerGraph, q: Quiver, h: str) -> tuple[str, Path]:
    v = g.half_edge_vertex[h]
    k = g.vertex_map[v].order.index(h)
    return v, special_cycle(g, q, v, arrow_name(v, k))


@dataclass(frozen=True)
class Relations:
    type1: tuple[tuple[str, Path, Path], ...]
    type2: tuple[Path, ...]
    type3: tuple[Path, ...]


def relations(g: BrauerGraph, q: Quiver | None = None) -> Relations:
    q = q or build_quiver(g)
    type1 = []
    for e in g.edge_ids:
        h1, h2 = g.edge_map[e].ends
        v1, v2 = g.half_edge_vertex[h1], g.half_edge_vertex[h2]
        if g.is_truncated(v1) or g.is_truncated(v2):
            continue
        _, c1 = _cycle_at_half_edge(g, q, h1)
        _, c2 = _cycle_at_half_edge(g, q, h2)
        type1.append((e, c1 * g.multiplicity(v1), c2 * g.multiplicity(v2)))

    type2 = []
    for a in q.arrows:
        c = special_cycle(g, q, a.at_vertex, a.id)
        type2.append((a.id,) + c * g.multiplicity(a.at_vertex))

    type3 = []
    for a in q.arrows:
        n = g.valency(a.at_vertex)
        for b in q.out_arrows(a.target):
            # b after a survives only when b follows a in the same special cycle;
            # for a valency-one vertex this is the loop squared
            if b.at_vertex == a.at_vertex and b.position == (a.position + 1) % n:
                continue
            type3.append((b.id, a.id))
    return Relations(tuple(type1), tuple(type2), tuple(type3))


@dataclass(frozen=True)
class IdealData:
    variant: str
    binomials: tuple[tuple[Path, Path, str], ...]
    monomials: tuple[Path, ...]
    W: tuple[str, ...]
    P: dict = field(default_factory=dict, hash=False, compare=False)


def _dedupe(paths):
    seen, out = set(), []
    for p in paths:
        if p not in seen:
            seen.add(p)
            out.append(p)
    return tuple(out)


def ideal_variant(g: BrauerGraph, variant: str, q: Quiver | None = None, rels: Relations | None = None) -> IdealData:
    """Generators of ``I``, ``I'`` (``"Igr"``), ``I1`` or ``I2``.

    ``W`` lists the type-1 edges whose two cycle powers differ in length and
    ``P`` maps each of them to the longer power ``r_i``.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown ideal variant {variant!r}; expected one of {VARIANTS}")
    q = q or build_quiver(g)
    rels = rels or relations(g, q)
    base = list(rels.type2) + list(rels.type3)
    W, P = [], {}
    binomials, extra = [], []
    for e, p, r in rels.type1:
        unbalanced = len(p) != len(r)
        if unbalanced:
            W.append(e)
            short, long_ = (p, r) if len(p) < len(r) else (r, p)
            P[e] = long_
        if variant == "I":
            binomials.append((p, r, e))
        elif variant == "I1":
            extra += [p, r]
        elif unbalanced:
            extra.append(short)
        elif variant == "Igr":
            binomials.append((p, r, e))
        else:
            extra += [p, r]
    return IdealData(variant, tuple(binomials), _dedupe(base + extra), tuple(W), P)


def iso_A_grA(g: BrauerGraph) -> bool:
    return len(set(g.grd.values())) == 1


def to_presentation(q: Quiver, ideal: IdealData, name: str = "") -> Presentation:
    """Monomial string-algebra presentation of a monomial ideal variant."""
    if ideal.binomials:
        raise ValueError(f"ideal {ideal.variant} has binomial relations; use I1 or I2")
    arrows = tuple((a.id, a.source, a.target) for a in q.arrows)
    return Presentation(q.vertices, arrows, ideal.monomials, name or ideal.variant)


def string_presentation(g: BrauerGraph, variant: str = "I2") -> Presentation:
    q = build_quiver(g)
    return to_presentation(q, ideal_variant(g, variant, q), variant)
