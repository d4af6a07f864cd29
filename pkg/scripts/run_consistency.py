"""Run the lemma-level consistency suite over every random graph family.

    python3 scripts/run_consistency.py --trials 200 --seed 11
"""
import argparse

from grbrauer import oracle


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--max-edges", type=int, default=8)
    ap.add_argument("--max-multiplicity", type=int, default=3)
    ap.add_argument("--seed", type=int, default=11)
    args = ap.parse_args()
    total = 0
    for family in oracle.FAMILIES:
        spec = oracle.RandomGraphSpec(args.max_edges, args.max_multiplicity, family, args.seed)
        rep = oracle.consistency_suite(spec, args.trials)
        print("\n".join(rep.lines()))
        print()
        total += len(rep.failures)
    print(f"TOTAL_FAILURES {total}")


if __name__ == "__main__":
    main()
