"""Brauer graphs as ribbon graphs, and their graph-side invariants.

A Brauer graph is stored as half-edges: each vertex carries a multiplicity
and the cyclic order of the half-edges around it, each edge pairs two
half-edges.  A loop puts both of its half-edges at the same vertex, so it
counts twice towards the valency.

Everything here is a pure function of an immutable :class:`BrauerGraph`.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence


def natural_key(ident: str):
    """Sort key that orders ``"2"`` before ``"10"``."""
    return tuple(
        (0, int(tok), "") if tok.isdigit() else (1, 0, tok)
        for tok in re.findall(r"\d+|\D+", str(ident))
    )


def sort_ids(ids: Iterable[str]) -> list[str]:
    return sorted(ids, key=natural_key)


class GraphError(ValueError):
    """Structural problem with a Brauer graph; ``ident`` names the culprit."""

    kind = "GraphError"

    def __init__(self, message: str, ident: str | None = None):
        super().__init__(message)
        self.ident = ident


class DanglingHalfEdge(GraphError):
    kind = "DanglingHalfEdge"


class Disconnected(GraphError):
    kind = "Disconnected"


class DegenerateBothTruncated(GraphError):
    kind = "DegenerateBothTruncated"


class DuplicateId(GraphError):
    kind = "DuplicateId"


class BadMultiplicity(GraphError):
    kind = "BadMultiplicity"


class BadExceptional(GraphError):
    kind = "BadExceptional"


class UnknownEdge(GraphError):
    kind = "UnknownEdge"


class UnknownVertex(GraphError):
    kind = "UnknownVertex"


class NotATree(GraphError):
    kind = "NotATree"


class NotUnbalanced(GraphError):
    kind = "NotUnbalanced"


class NotBrauerTree(GraphError):
    kind = "NotBrauerTree"


class InvalidGraph(GraphError):
    kind = "InvalidGraph"


@dataclass(frozen=True)
class VertexSpec:
    id: str
    multiplicity: int
    order: tuple[str, ...]


@dataclass(frozen=True)
class EdgeSpec:
    id: str
    ends: tuple[str, str]


@dataclass(frozen=True)
class BrauerGraph:
    vertices: tuple[VertexSpec, ...]
    edges: tuple[EdgeSpec, ...]
    exceptional: str | None = None

    @classmethod
    def from_rotation(
        cls,
        rotation: Mapping[str, tuple[int, Sequence[str]]],
        exceptional: str | None = None,
    ) -> "BrauerGraph":
        """Build a graph from ``{vertex: (multiplicity, [edge ids in cyclic order])}``.

        Every edge id must occur exactly twice over all orders (twice at one
        vertex for a loop).  Half-edges are named ``"<edge>.0"`` and
        ``"<edge>.1"`` in order of appearance.
        """
        seen: dict[str, list[str]] = {}
        verts = []
        for vid, (mult, order) in rotation.items():
            hs = []
            for e in order:
                e = str(e)
                h = f"{e}.{len(seen.setdefault(e, []))}"
                seen[e].append(h)
                hs.append(h)
            verts.append(VertexSpec(str(vid), int(mult), tuple(hs)))
        edges = []
        for e, hs in seen.items():
            if len(hs) != 2:
                raise DanglingHalfEdge(f"edge {e} occurs {len(hs)} times", e)
            edges.append(EdgeSpec(e, (hs[0], hs[1])))
        edges.sort(key=lambda s: natural_key(s.id))
        return cls(tuple(verts), tuple(edges), None if exceptional is None else str(exceptional))

    # -- lookups (valid graphs only) -------------------------------------

    @cached_property
    def vertex_map(self) -> dict[str, VertexSpec]:
        return {v.id: v for v in self.vertices}

    @cached_property
    def edge_map(self) -> dict[str, EdgeSpec]:
        return {e.id: e for e in self.edges}

    @cached_property
    def half_edge_vertex(self) -> dict[str, str]:
        return {h: v.id for v in self.vertices for h in v.order}

    @cached_property
    def half_edge_edge(self) -> dict[str, str]:
        return {h: e.id for e in self.edges for h in e.ends}

    @cached_property
    def vertex_ids(self) -> list[str]:
        return sort_ids(self.vertex_map)

    @cached_property
    def edge_ids(self) -> list[str]:
        return sort_ids(self.edge_map)

    def endpoints(self, edge: str) -> tuple[str, str]:
        try:
            h1, h2 = self.edge_map[edge].ends
        except KeyError:
            raise UnknownEdge(f"unknown edge {edge!r}", edge) from None
        return self.half_edge_vertex[h1], self.half_edge_vertex[h2]

    def multiplicity(self, v: str) -> int:
        try:
            return self.vertex_map[v].multiplicity
        except KeyError:
            raise UnknownVertex(f"unknown vertex {v!r}", v) from None

    def valency(self, v: str) -> int:
        return len(self.vertex_map[v].order)

    def is_truncated(self, v: str) -> bool:
        return self.multiplicity(v) * self.valency(v) == 1

    def edge_order(self, v: str) -> list[str]:
        """Edges around ``v`` in cyclic order (a loop appears twice)."""
        return [self.half_edge_edge[h] for h in self.vertex_map[v].order]

    def other_end(self, edge: str, v: str) -> str:
        a, b = self.endpoints(edge)
        return b if a == v else a

    @cached_property
    def adjacency(self) -> dict[str, list[tuple[str, str]]]:
        """``vertex -> [(edge, neighbour)]`` with a loop listed once."""
        adj: dict[str, list[tuple[str, str]]] = {v: [] for v in self.vertex_ids}
        for e in self.edge_ids:
            a, b = self.endpoints(e)
            adj[a].append((e, b))
            if a != b:
                adj[b].append((e, a))
        return adj

    def neighbors(self, v: str) -> list[str]:
        return [w for _, w in self.adjacency[v]]

    @cached_property
    def grd(self) -> dict[str, int]:
        return {v: graded_degree(self, v) for v in self.vertex_ids}

    @cached_property
    def cycle_rank(self) -> int:
        return len(self.edges) - len(self.vertices) + 1

    def is_tree(self) -> bool:
        return self.cycle_rank == 0

    def is_brauer_tree(self) -> bool:
        return self.is_tree() and sum(v.multiplicity > 1 for v in self.vertices) <= 1

    def exceptional_vertex(self) -> str:
        """The designated exceptional vertex, or a canonical default."""
        if self.exceptional is not None:
            return self.exceptional
        heavy = [v for v in self.vertex_ids if self.multiplicity(v) > 1]
        return heavy[0] if heavy else self.vertex_ids[0]

    def with_multiplicities(self, mult: Mapping[str, int], exceptional: str | None = None) -> "BrauerGraph":
        verts = tuple(
            VertexSpec(v.id, int(mult.get(v.id, v.multiplicity)), v.order) for v in self.vertices
        )
        return BrauerGraph(verts, self.edges, exceptional)

    def with_exceptional(self, v: str | None) -> "BrauerGraph":
        return BrauerGraph(self.vertices, self.edges, v)


# -- validation ------------------------------------------------------------


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    error: str | None = None
    ident: str | None = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _check(g: BrauerGraph) -> None:
    vids = [v.id for v in g.vertices]
    eids = [e.id for e in g.edges]
    for ids in (vids, eids):
        dup = _first_duplicate(ids)
        if dup is not None:
            raise DuplicateId(f"duplicate id {dup!r}", dup)
    if not g.vertices:
        raise Disconnected("graph has no vertices")
    for v in g.vertices:
        if v.multiplicity < 1:
            raise BadMultiplicity(f"vertex {v.id} has multiplicity {v.multiplicity}", v.id)
        if not v.order:
            raise Disconnected(f"vertex {v.id} is isolated", v.id)

    at_vertex: dict[str, str] = {}
    for v in g.vertices:
        for h in v.order:
            if h in at_vertex:
                raise DanglingHalfEdge(f"half-edge {h!r} listed twice (at {at_vertex[h]} and {v.id})", h)
            at_vertex[h] = v.id
    in_edge: dict[str, str] = {}
    for e in g.edges:
        if len(e.ends) != 2:
            raise DanglingHalfEdge(f"edge {e.id} does not pair two half-edges", e.id)
        for h in e.ends:
            if h in in_edge:
                raise DanglingHalfEdge(f"half-edge {h!r} used by edges {in_edge[h]} and {e.id}", h)
            in_edge[h] = e.id
            if h not in at_vertex:
                raise DanglingHalfEdge(f"half-edge {h!r} of edge {e.id} sits at no vertex", h)
    for h in at_vertex:
        if h not in in_edge:
            raise DanglingHalfEdge(f"half-edge {h!r} at vertex {at_vertex[h]} belongs to no edge", h)

    start = g.vertices[0].id
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for _, y in g.adjacency[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    if len(seen) != len(g.vertices):
        missing = sort_ids(set(vids) - seen)[0]
        raise Disconnected(f"vertex {missing} is not reachable from {start}", missing)

    for e in g.edge_ids:
        a, b = g.endpoints(e)
        if a != b and g.is_truncated(a) and g.is_truncated(b):
            raise DegenerateBothTruncated(f"both ends of edge {e} are truncated", e)

    if g.exceptional is not None:
        if g.exceptional not in g.vertex_map:
            raise BadExceptional(f"exceptional vertex {g.exceptional!r} does not exist", g.exceptional)
        heavy = [v.id for v in g.vertices if v.multiplicity > 1]
        if heavy and heavy != [g.exceptional]:
            raise BadExceptional(
                f"exceptional vertex {g.exceptional} is not the unique vertex of multiplicity > 1",
                g.exceptional,
            )


def _first_duplicate(ids: Sequence[str]) -> str | None:
    seen = set()
    for i in ids:
        if i in seen:
            return i
        seen.add(i)
    return None


def validate(g: BrauerGraph) -> ValidationReport:
    try:
        _check(g)
    except GraphError as exc:
        return ValidationReport(False, exc.kind, exc.ident, str(exc))
    return ValidationReport(True)


def ensure_valid(g: BrauerGraph) -> BrauerGraph:
    """Raise the first structural error of ``g``; return ``g`` unchanged otherwise."""
    _check(g)
    return g


# -- degrees and walks -------------------------------------------------------


def graded_degree(g: BrauerGraph, v: str) -> int:
    """``m(v)*val(v)``, or the neighbour's product when ``v`` is truncated."""
    p = g.multiplicity(v) * g.valency(v)
    if p > 1:
        return p
    (w,) = g.neighbors(v)
    q = g.multiplicity(w) * g.valency(w)
    if q == 1:
        raise DegenerateBothTruncated(f"{v} and its neighbour {w} are both truncated", v)
    return q


@dataclass(frozen=True)
class Walk:
    vertices: tuple[str, ...]
    edges: tuple[str, ...] = ()

    @property
    def length(self) -> int:
        return len(self.edges)

    def as_list(self) -> list[str]:
        out = [self.vertices[0]]
        for e, v in zip(self.edges, self.vertices[1:]):
            out += [e, v]
        return out

    def __str__(self) -> str:
        return "[" + ", ".join(self.as_list()) + "]"


def is_walk(g: BrauerGraph, w: Walk) -> bool:
    if len(w.vertices) != len(w.edges) + 1 or len(set(w.vertices)) != len(w.vertices):
        return False
    return all({a, b} == set(g.endpoints(e)) for a, e, b in zip(w.vertices, w.edges, w.vertices[1:]))


def unique_walk(g: BrauerGraph, u: str, v: str) -> Walk:
    if not g.is_tree():
        raise NotATree("walks are unique only in trees", None)
    g.multiplicity(u), g.multiplicity(v)
    parent: dict[str, tuple[str, str] | None] = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            break
        for e, y in g.adjacency[x]:
            if y not in parent:
                parent[y] = (e, x)
                queue.append(y)
    verts, edges = [v], []
    while parent[verts[-1]] is not None:
        e, x = parent[verts[-1]]
        edges.append(e)
        verts.append(x)
    return Walk(tuple(reversed(verts)), tuple(reversed(edges)))


def distance(g: BrauerGraph, u: str, v: str) -> int:
    return unique_walk(g, u, v).length


def is_degree_decreasing(g: BrauerGraph, w: Walk) -> bool:
    degs = [g.grd[x] for x in w.vertices]
    return all(a >= b for a, b in zip(degs, degs[1:]))


def walks_from(g: BrauerGraph, start: str, within: frozenset[str] | None = None) -> Iterator[Walk]:
    """Every walk of positive length from ``start`` (vertex-simple paths)."""
    stack = [((start,), ())]
    while stack:
        verts, edges = stack.pop()
        for e, y in reversed(g.adjacency[verts[-1]]):
            if y in verts or (within is not None and y not in within):
                continue
            nv, ne = verts + (y,), edges + (e,)
            yield Walk(nv, ne)
            stack.append((nv, ne))


def increasing_walk_from(g: BrauerGraph, start: str, within: frozenset[str] | None = None) -> Walk | None:
    """Shortest-prefix witness that some walk from ``start`` is not degree decreasing."""
    grd = g.grd
    stack = [((start,), ())]
    while stack:
        verts, edges = stack.pop()
        x = verts[-1]
        for e, y in g.adjacency[x]:
            if y in verts or (within is not None and y not in within):
                continue
            if grd[y] > grd[x]:
                return Walk(verts + (y,), edges + (e,))
            stack.append((verts + (y,), edges + (e,)))
    return None


# -- branches ---------------------------------------------------------------


@dataclass(frozen=True)
class Branch:
    vertices: frozenset[str]
    edges: tuple[str, ...]

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def is_tree(self) -> bool:
        return len(self.edges) == len(self.vertices) - 1


@dataclass(frozen=True)
class Orientation:
    v_S: str
    v_L: str
    branch_S: Branch
    branch_L: Branch

    @property
    def n(self) -> int:
        return self.branch_S.n_edges


@dataclass(frozen=True)
class BranchSplit:
    edge: str
    u: str
    v: str
    side_u: Branch
    side_v: Branch
    same_component: bool
    oriented: Orientation | None = None

    @property
    def unbalanced(self) -> bool:
        return self.oriented is not None


def _component(g: BrauerGraph, start: str, removed: str) -> Branch:
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for e, y in g.adjacency[x]:
            if e != removed and y not in seen:
                seen.add(y)
                queue.append(y)
    edges = [e for e in g.edge_ids if e != removed and g.endpoints(e)[0] in seen]
    return Branch(frozenset(seen), tuple(edges))


def split_at_edge(g: BrauerGraph, i: str) -> BranchSplit:
    u, v = g.endpoints(i)
    side_u = _component(g, u, i)
    same = v in side_u.vertices
    side_v = side_u if same else _component(g, v, i)
    oriented = None
    gu, gv = g.grd[u], g.grd[v]
    if gu != gv:
        if gu < gv:
            oriented = Orientation(u, v, side_u, side_v)
        else:
            oriented = Orientation(v, u, side_v, side_u)
    return BranchSplit(i, u, v, side_u, side_v, same, oriented)


def unbalanced_edges(g: BrauerGraph) -> list[BranchSplit]:
    out = []
    for e in g.edge_ids:
        a, b = g.endpoints(e)
        if g.grd[a] != g.grd[b]:
            out.append(split_at_edge(g, e))
    return out


@dataclass(frozen=True)
class StarResult:
    edge: str
    holds: bool
    failed_clause: int | None = None
    witness: object = None


def star_condition(g: BrauerGraph, i: str) -> StarResult:
    """Check the three branch conditions at the unbalanced edge ``i``.

    Clause 1: the two sides of ``G minus i`` differ.  Clause 2: the small
    side is a tree with all multiplicities 1.  Clause 3: every walk from
    ``v_S`` inside the small side is degree decreasing.  The witness is the
    cycle edges, the heavy vertex, or the offending walk respectively.
    """
    split = split_at_edge(g, i)
    o = split.oriented
    if o is None:
        raise NotUnbalanced(f"edge {i} is balanced", i)
    if split.same_component:
        return StarResult(i, False, 1, o.branch_S.edges)
    br = o.branch_S
    if not br.is_tree():
        return StarResult(i, False, 2, br.edges)
    heavy = [v for v in sort_ids(br.vertices) if g.multiplicity(v) > 1]
    if heavy:
        return StarResult(i, False, 2, heavy[0])
    bad = increasing_walk_from(g, o.v_S, br.vertices)
    if bad is not None:
        return StarResult(i, False, 3, bad)
    return StarResult(i, True)


# -- Brauer tree invariants --------------------------------------------------


@dataclass(frozen=True)
class TreeInvariants:
    unbalanced_edges: tuple[tuple[str, str, str], ...]
    pairs: tuple[tuple[str, str], ...]
    kappa0: int
    kappa1: int
    m0: int
    exceptional: str

    @property
    def s(self) -> int:
        return self.kappa0 * (self.m0 - 1) + self.kappa1


def is_unbalanced_pair(g: BrauerGraph, i: str, j: str) -> bool:
    """Ordered pair test: ``j`` lies in the small side of ``i`` and points away from ``v_S(i)``."""
    si, sj = split_at_edge(g, i), split_at_edge(g, j)
    if i == j or si.oriented is None or sj.oriented is None:
        return False
    if j not in si.oriented.branch_S.edges:
        return False
    base = si.oriented.v_S
    return distance(g, sj.oriented.v_S, base) + 1 == distance(g, sj.oriented.v_L, base)


def tree_invariants(g: BrauerGraph, exceptional: str | None = None) -> TreeInvariants:
    if not g.is_brauer_tree():
        raise NotBrauerTree("kappa invariants need a Brauer tree", None)
    v0 = exceptional if exceptional is not None else g.exceptional_vertex()
    g.multiplicity(v0)
    splits = unbalanced_edges(g)
    kappa0 = sum(v0 in s.oriented.branch_S.vertices for s in splits)
    pairs = []
    for a, sa in enumerate(splits):
        for sb in splits[a + 1:]:
            if is_unbalanced_pair(g, sa.edge, sb.edge):
                pairs.append((sa.edge, sb.edge))
    return TreeInvariants(
        unbalanced_edges=tuple((s.edge, s.oriented.v_S, s.oriented.v_L) for s in splits),
        pairs=tuple(pairs),
        kappa0=kappa0,
        kappa1=len(pairs),
        m0=g.multiplicity(v0),
        exceptional=v0,
    )


# -- cycles ------------------------------------------------------------------


@dataclass(frozen=True)
class CycleAnalysis:
    kind: str  # "tree" | "unique_cycle" | "multi_cycle"
    rank: int
    length: int = 0
    cycle_vertices: tuple[str, ...] = ()
    cycle_edges: tuple[str, ...] = ()

    @property
    def parity(self) -> str | None:
        if self.kind != "unique_cycle":
            return None
        return "odd" if self.length % 2 else "even"


def cycle_analysis(g: BrauerGraph) -> CycleAnalysis:
    rank = g.cycle_rank
    if rank == 0:
        return CycleAnalysis("tree", 0)
    if rank > 1:
        return CycleAnalysis("multi_cycle", rank)
    # strip pendant vertices until only the cycle is left
    degree = {v: g.valency(v) for v in g.vertex_ids}
    alive_edges = set(g.edge_ids)
    alive = set(g.vertex_ids)
    queue = deque(v for v in g.vertex_ids if degree[v] == 1)
    while queue:
        x = queue.popleft()
        if x not in alive or degree[x] != 1:
            continue
        alive.discard(x)
        for e, y in g.adjacency[x]:
            if e in alive_edges:
                alive_edges.discard(e)
                degree[y] -= 1
                if degree[y] == 1:
                    queue.append(y)
    edges = tuple(sort_ids(alive_edges))
    return CycleAnalysis("unique_cycle", 1, len(edges), tuple(sort_ids(alive)), edges)
