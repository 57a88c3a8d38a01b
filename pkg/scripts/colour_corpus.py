"""Colour counts of every colourer on seeded random trees, as CSV."""

import argparse
import csv
import random
import sys

from anagramfree.colourers import (
    colour_centred,
    colour_pathwidth_edge3,
    colour_pathwidth_vertex,
    colour_tree_k_anagram,
)
from anagramfree.core import contains_k_anagram, random_tree
from anagramfree.pathwidth import pathwidth


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trees", type=int, default=30)
    ap.add_argument("--max-n", type=int, default=400)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--check", action="store_true", help="re-check every colouring (slower)")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    out = csv.writer(sys.stdout)
    out.writerow(["n", "radius", "pw", "centred", "pw_vertex", "4pw+1", "edge3", "k4", "k6", "k8", "all_free"])
    for _ in range(args.trees):
        t = random_tree(rng.randint(2, args.max_n), rng)
        pw = pathwidth(t)
        cols = [
            (colour_centred(t), 2),
            (colour_pathwidth_vertex(t), 2),
            (colour_pathwidth_edge3(t), 3),
            (colour_tree_k_anagram(t, 4), 4),
            (colour_tree_k_anagram(t, 6), 6),
            (colour_tree_k_anagram(t, 8), 8),
        ]
        free = all(contains_k_anagram(t, col, k) is None for col, k in cols) if args.check else ""
        c = [col.c for col, _ in cols]
        out.writerow([t.n, t.radius(), pw, c[0], c[1], 4 * pw + 1, c[2], c[3], c[4], c[5], free])


if __name__ == "__main__":
    main()
