#!/usr/bin/env python3
"""Sweep the rev engines across size doublings and report per-symbol work.

Runs every (model, generator) pair across a doubling ladder and prints the
counter work and wall time per symbol, flagging any >25% growth between
consecutive sizes (the non-linearity signal).
"""

from __future__ import annotations

import argparse

from genpal import bench


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--models", default="theta,param,ct,palstruct")
    parser.add_argument("--gens", default="random,runs,dna")
    parser.add_argument("--min-exp", type=int, default=10)
    parser.add_argument("--max-exp", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    sizes = [1 << e for e in range(args.min_exp, args.max_exp + 1)]
    flagged = 0
    for model in args.models.split(","):
        for gen in args.gens.split(","):
            records = bench.run_ladder(model, gen, sizes, seed=args.seed)
            print(bench.format_report(model, gen, records))
            flagged += sum(bench.growth_flags([r.ops_per_symbol for r in records]))
            print()
    print(f"flagged transitions: {flagged}")
    return 0 if flagged == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())
