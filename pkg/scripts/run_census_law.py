"""Census law on random Brauer trees: s = 0, 1, >= 2 against the enumerated band count.

    python3 scripts/run_census_law.py --trials 100 --max-edges 7 --seed 6
"""
import argparse
import time
from collections import Counter

from grbrauer import oracle, strings as st
from grbrauer.graph import tree_invariants
from grbrauer.presentation import string_presentation


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--max-edges", type=int, default=7)
    ap.add_argument("--max-multiplicity", type=int, default=3)
    ap.add_argument("--seed", type=int, default=6)
    ap.add_argument("--full-length", action="store_true",
                    help="use the long default length instead of the batch length (slow)")
    args = ap.parse_args()

    spec = oracle.RandomGraphSpec(args.max_edges, args.max_multiplicity, "brauer_tree", args.seed)
    by_s, violations = Counter(), 0
    t0 = time.perf_counter()
    for g in oracle.random_graphs(spec, args.trials):
        s = tree_invariants(g).s
        L = oracle.default_max_len(g) if args.full_length else oracle.census_max_len(g)
        pres = string_presentation(g, "I2")
        c1, c2 = st.band_census(pres, L), st.band_census(pres, 2 * L)
        ok = c1 == 0 if s == 0 else (c1 == c2 == 1 if s == 1 else c2 > c1)
        by_s[min(s, 2)] += 1
        if not ok:
            violations += 1
            print(f"VIOLATION s={s} L={L} census {c1} -> {c2}")
    print(f"TRIALS {args.trials}")
    for k in sorted(by_s):
        print(f"S{'>=' if k == 2 else '='}{k} {by_s[k]}")
    print(f"VIOLATIONS {violations}")
    print(f"SECONDS {time.perf_counter() - t0:.1f}")


if __name__ == "__main__":
    main()
