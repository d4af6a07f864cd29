"""Regenerate the shipped corpus files from their rotation systems.

Run from the repository root:  python3 scripts/build_corpus.py
"""
from pathlib import Path

from grbrauer.graph import BrauerGraph, ensure_valid
from grbrauer.io import serialize_bg, serialize_sqp
from grbrauer.strings import Presentation

OUT = Path(__file__).resolve().parents[1] / "src" / "grbrauer" / "corpus"

# {vertex: (multiplicity, edges in cyclic order)}; the first edge anchors arrow names
GRAPHS = {
    # Brauer tree, exceptional loop vertex of multiplicity 2
    "g_t2": ({"v0": (2, [1]), "c": (1, [1, 2, 3]), "leaf2": (1, [2]),
              "u": (1, [3, 4]), "leaf4": (1, [4])}, "v0"),
    # multiplicity-3 vertex hanging off a 4-valent centre
    "g_star3": ({"v0": (3, [1]), "c": (1, [1, 2, 3, 4]), "leaf2": (1, [2]),
                 "leaf3": (1, [3]), "leaf4": (1, [4])}, "v0"),
    # seven edges; vertex names give the arrows b*, a*, g*, d*
    "g_t7": ({"b": (1, [1, 2, 3]), "a": (1, [1, 5, 6, 7]), "g": (1, [3, 4]),
              "d": (2, [4]), "leaf2": (1, [2]), "leaf5": (1, [5]),
              "leaf6": (1, [6]), "leaf7": (1, [7])}, "d"),
    # triangle 2,3,4 with a pendant edge 1; S anchored at edge 4
    "g_c4": ({"Q": (1, [1, 2, 4]), "P": (1, [2, 3]), "S": (1, [4, 3]),
              "R": (1, [1])}, None),
    # two trivalent hubs joined through a valency-2 middle vertex
    "g_hh": ({"h1": (1, [1, 2, 3]), "M": (1, [3, 4]), "h2": (1, [4, 5, 6]),
              "leaf1": (1, [1]), "leaf2": (1, [2]), "leaf5": (1, [5]),
              "leaf6": (1, [6])}, None),
    # controls
    "two_m2_tree": ({"w0": (2, [1]), "x": (1, [1, 2]), "w1": (2, [2])}, None),
    "square": ({"p": (1, [4, 1]), "q": (1, [1, 2]), "r": (1, [2, 3]),
                "s": (1, [3, 4])}, None),
    "balanced_star": ({"c": (1, [1, 2, 3]), "leaf1": (1, [1]), "leaf2": (1, [2]),
                       "leaf3": (1, [3])}, None),
}

PRESENTATIONS = {
    "kronecker": Presentation(("1", "2"), (("alpha", "1", "2"), ("beta", "1", "2")), (), "kronecker"),
    "twoloop": Presentation(
        ("a",), (("alpha", "a", "a"), ("beta", "a", "a")),
        (("alpha", "alpha"), ("alpha", "beta"), ("beta", "alpha"), ("beta", "beta")),
        "twoloop",
    ),
}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, (rot, exc) in GRAPHS.items():
        g = ensure_valid(BrauerGraph.from_rotation(rot, exc))
        (OUT / f"{name}.bg").write_text(serialize_bg(g))
    for name, p in PRESENTATIONS.items():
        (OUT / f"{name}.sqp").write_text(serialize_sqp(p))
    print(f"wrote {len(GRAPHS)} graphs and {len(PRESENTATIONS)} presentations to {OUT}")


if __name__ == "__main__":
    main()
