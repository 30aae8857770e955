"""Count which pair-repair branch the shortened decomposition takes.

Usage: python scripts/branch_census.py [--samples N] [--seed S] [--fixed 0 5 16 ...]

Also reports how many parts of type 2+2 (two coordinates in the fixed block,
two in another) meet the fixed coordinate per decomposition; the i <= 3 repair
needs two of them paired together.
"""
import argparse
import random
from collections import Counter

from framecert import certify, codes, gf2
from framecert.gf2 import Gf2Vector


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--samples", type=int, default=20000)
    ap.add_argument("--seed", type=lambda s: int(s, 0), default=0xB5)
    ap.add_argument("--fixed", type=int, nargs="+", default=[0, 5, 15, 16, 31, 47])
    args = ap.parse_args()

    M = codes.moonshine_frame_matrix()
    C = codes.dual(codes.from_generators(M))
    partition = certify.BlockPartition.from_generator_rows(M)
    ctx = certify.SteinerContext(C, partition)

    for fixed in args.fixed:
        short = codes.shorten(C, fixed)
        home = ctx.block_of[fixed]
        rng = random.Random(args.seed)
        branches, split_hits = Counter(), Counter()
        for v in certify.random_codewords(short, args.samples, rng):
            t = Gf2Vector(C.n, certify.insert_zero(v.bits, fixed))
            parts = certify._reduce(ctx, t.bits)
            hits = [p for p in parts if (p >> fixed) & 1]
            split_hits[sum(1 for p in hits if sum(ctx.block_of[x] == home for x in gf2.support(p)) == 2)] += 1
            branches.update(certify.decompose_weight4_shortened(C, fixed, partition, t, ctx).branches)
        print(f"fixed={fixed:2d} block={home} branches={dict(sorted(branches.items()))} "
              f"2+2 hits per decomposition={dict(sorted(split_hits.items()))}")


if __name__ == "__main__":
    main()
