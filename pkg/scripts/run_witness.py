"""Search the corpus graphs of non-polynomial growth for an infinite band family.

    python3 scripts/run_witness.py --max-len 12
"""
import argparse

from grbrauer import oracle
from grbrauer.classify import classify_grA
from grbrauer.io import load_corpus


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-len", type=int, default=12)
    ap.add_argument("graphs", nargs="*", default=["g_star3", "g_t7", "g_c4"])
    args = ap.parse_args()
    for name in args.graphs:
        g = load_corpus(name)
        print(f"GRAPH {name} {classify_grA(g).verdict}")
        try:
            w = oracle.infinite_band_witness(g, args.max_len)
        except oracle.PreconditionFails as exc:
            print(f"  skipped: {exc}")
            continue
        if w is None:
            print("  no pair found within bounds")
            continue
        print(f"  shape {w.family.shape}, pairs tried {w.searched}")
        print(f"  b1 {w.b1}")
        print(f"  b2 {w.b2}")
        for row in w.family.rows:
            print(f"  k={row.k} band={row.is_band} length={len(row.word)}")


if __name__ == "__main__":
    main()
