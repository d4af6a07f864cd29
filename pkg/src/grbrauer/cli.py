"""Command line entry point: ``grbrauer <command> FILE [options]``.

Reports are ``KEY value`` lines; exit codes are 0 (ok / agree), 1 (structural
error) and 2 (oracle disagreement).
"""
from __future__ import annotations

import argparse
import sys

from . import oracle
from . import strings as st
from .classify import classify_A, classify_grA
from .graph import (
    BrauerGraph,
    GraphError,
    cycle_analysis,
    star_condition,
    tree_invariants,
    unbalanced_edges,
    validate,
)
from .io import ParseError, parse_bg, parse_sqp, quiver_dot, quiver_text
from .presentation import VARIANTS, build_quiver, ideal_variant, string_presentation

EXIT_OK, EXIT_STRUCTURE, EXIT_DISAGREE = 0, 1, 2


class _Fail(Exception):
    def __init__(self, lines, code=EXIT_STRUCTURE):
        self.lines = lines
        self.code = code


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise _Fail(["ERROR IOError", f"MESSAGE {exc}"]) from None


def _load_graph(path: str) -> BrauerGraph:
    try:
        g = parse_bg(_read(path))
    except ParseError as exc:
        raise _Fail(["ERROR ParseError", f"LINE {exc.line}", f"COLUMN {exc.column}", f"MESSAGE {exc}"]) from None
    rep = validate(g)
    if not rep.ok:
        raise _Fail([f"ERROR {rep.error}", f"ID {rep.ident}", f"MESSAGE {rep.message}"])
    return g


def _load_any(path: str):
    if path.endswith(".sqp"):
        try:
            return parse_sqp(_read(path))
        except ParseError as exc:
            raise _Fail(["ERROR ParseError", f"LINE {exc.line}", f"COLUMN {exc.column}", f"MESSAGE {exc}"]) from None
    return _load_graph(path)


def cmd_validate(args) -> tuple[list[str], int]:
    g = _load_graph(args.path)
    return [f"VERTICES {len(g.vertices)}", f"EDGES {len(g.edges)}", "VALID yes"], EXIT_OK


def info_lines(g: BrauerGraph) -> list[str]:
    out = [f"VERTICES {len(g.vertices)}", f"EDGES {len(g.edges)}", "GRD"]
    for v in g.vertex_ids:
        out.append(f"  {v} m={g.multiplicity(v)} val={g.valency(v)} grd={g.grd[v]}")
    splits = unbalanced_edges(g)
    out.append(f"UNBALANCED {len(splits)}")
    for s in splits:
        o = s.oriented
        star = star_condition(g, s.edge)
        tag = "holds" if star.holds else f"fails clause {star.failed_clause}"
        n = "-" if s.same_component else o.n
        out.append(f"  {s.edge} v_S={o.v_S} v_L={o.v_L} n={n} star={tag}")
    cyc = cycle_analysis(g)
    out.append(f"CYCLE {cyc.kind} rank={cyc.rank}"
               + (f" length={cyc.length} parity={cyc.parity} edges={','.join(cyc.cycle_edges)}"
                  if cyc.kind == "unique_cycle" else ""))
    if g.is_brauer_tree():
        inv = tree_invariants(g)
        out += [f"EXCEPTIONAL {inv.exceptional}", f"KAPPA0 {inv.kappa0}", f"KAPPA1 {inv.kappa1}",
                f"M0 {inv.m0}", f"S {inv.s}"]
        out.append("PAIRS " + (" ".join(f"{i},{j}" for i, j in inv.pairs) or "-"))
    return out


def cmd_info(args):
    return info_lines(_load_graph(args.path)), EXIT_OK


def cmd_classify(args):
    g = _load_graph(args.path)
    rep = classify_A(g) if args.algebra == "A" else classify_grA(g)
    return rep.lines(), EXIT_OK


def cmd_quiver(args):
    g = _load_graph(args.path)
    q = build_quiver(g)
    if args.format == "dot":
        return quiver_dot(q).rstrip("\n").splitlines(), EXIT_OK
    return quiver_text(q, ideal_variant(g, args.ideal, q)).rstrip("\n").splitlines(), EXIT_OK


def _presentation(path: str, variant: str):
    obj = _load_any(path)
    return obj if isinstance(obj, st.Presentation) else string_presentation(obj, variant)


def cmd_strings(args):
    pres = _presentation(args.path, args.ideal)
    words = sorted(st.enumerate_strings(pres, args.max_len, args.budget), key=lambda w: (len(w), str(w)))
    return [f"MAX_LEN {args.max_len}", f"COUNT {len(words)}"] + [f"  {w}" for w in words], EXIT_OK


def cmd_bands(args):
    pres = _presentation(args.path, args.ideal)
    words = sorted(st.enumerate_bands(pres, args.max_len, args.budget), key=lambda w: (len(w), str(w)))
    return [f"MAX_LEN {args.max_len}", f"COUNT {len(words)}"] + [f"  {w}" for w in words], EXIT_OK


def cmd_oracle(args):
    g = _load_graph(args.path)
    check = args.check
    try:
        if check == "census":
            v = oracle.band_census_check(g, args.max_len, args.budget)
        elif check == "rcount":
            if args.edge is None:
                raise _Fail(["ERROR MissingEdge", "MESSAGE --edge is required for rcount"])
            v = oracle.r_string_count_check(g, args.edge, args.max_len, args.budget)
        elif check == "preserve":
            v = oracle.band_preservation_check(g, args.max_len, args.budget)
        elif check == "witness":
            w = oracle.infinite_band_witness(g, args.max_len or 12, args.budget)
            if w is None:
                return ["CHECK witness", "FOUND no", "NOTES search bound reached; not a refutation",
                        "AGREE yes"], EXIT_OK
            lines = ["CHECK witness", "FOUND yes", f"SHAPE {w.family.shape}",
                     f"B1 {w.family.b1}", f"B2 {w.family.b2}"]
            lines += [f"K {r.k} BAND {'yes' if r.is_band else 'no'}" for r in w.family.rows]
            lines.append(f"AGREE {'yes' if w.family.verified else 'no'}")
            return lines, EXIT_OK if w.family.verified else EXIT_DISAGREE
        else:  # suite runs on random graphs; the file itself is only validated
            spec = oracle.RandomGraphSpec(args.max_edges, args.max_multiplicity, args.family, args.seed)
            rep = oracle.consistency_suite(spec, args.trials)
            return rep.lines() + [f"AGREE {'yes' if rep.ok else 'no'}"], EXIT_OK if rep.ok else EXIT_DISAGREE
    except (oracle.StarConditionFails, oracle.PreconditionFails) as exc:
        return [f"CHECK {check}", "SKIPPED yes", f"REASON {exc}"], EXIT_OK
    return v.lines(), EXIT_OK if v.agree else EXIT_DISAGREE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="grbrauer", description="Brauer graph algebras and their graded algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("path")
        sp.set_defaults(func=fn)
        return sp

    add("validate", cmd_validate, "parse and validate a .bg file")
    add("info", cmd_info, "graded degrees, unbalanced edges and invariants")
    sp = add("classify", cmd_classify, "representation type")
    sp.add_argument("--algebra", choices=("A", "grA"), default="grA")
    sp = add("quiver", cmd_quiver, "quiver and ideal generators")
    sp.add_argument("--ideal", choices=VARIANTS, default="I2")
    sp.add_argument("--format", choices=("text", "dot"), default="text")
    for name, fn in (("strings", cmd_strings), ("bands", cmd_bands)):
        sp = add(name, fn, f"enumerate {name} of I2 (or of a .sqp presentation)")
        sp.add_argument("--max-len", type=int, default=8)
        sp.add_argument("--ideal", choices=("I1", "I2"), default="I2")
        sp.add_argument("--budget", type=int, default=st.DEFAULT_BUDGET)
    sp = add("oracle", cmd_oracle, "brute-force cross-checks")
    sp.add_argument("--check", choices=("census", "rcount", "preserve", "witness", "suite"), default="census")
    sp.add_argument("--edge")
    sp.add_argument("--max-len", type=int)
    sp.add_argument("--budget", type=int, default=st.DEFAULT_BUDGET)
    sp.add_argument("--family", choices=oracle.FAMILIES, default="brauer_tree")
    sp.add_argument("--trials", type=int, default=200)
    sp.add_argument("--max-edges", type=int, default=8)
    sp.add_argument("--max-multiplicity", type=int, default=3)
    sp.add_argument("--seed", type=int, default=0)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        lines, code = args.func(args)
    except _Fail as exc:
        lines, code = exc.lines, exc.code
    except st.BudgetExceeded as exc:
        lines, code = ["ERROR BudgetExceeded", f"MESSAGE {exc}"], EXIT_STRUCTURE
    except (GraphError, st.UnknownArrow) as exc:
        lines, code = [f"ERROR {type(exc).__name__}", f"MESSAGE {exc}"], EXIT_STRUCTURE
    sys.stdout.write("\n".join(lines) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
