"""Exact anagram-free chromatic numbers of small paths, cycles, stars and random trees."""

import argparse
import random

from anagramfree.core import cycle_graph, line_graph, path_graph, random_tree, star_graph
from anagramfree.solver import exact_chromatic, verify_monotone_chain


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--trees", type=int, default=10)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    print("n   phi(P_n)  phi(C_n)  phi'(C_n)")
    for n in range(1, args.max_n + 1):
        cyc = (exact_chromatic(cycle_graph(n)), exact_chromatic(cycle_graph(n), "edge")) if n >= 3 else ("-", "-")
        print(f"{n:<3d} {exact_chromatic(path_graph(n)):<9d} {cyc[0]!s:<9s} {cyc[1]!s}")

    print("\nstars: phi'(K_1,d) for d = 1..6:", [exact_chromatic(star_graph(d), "edge") for d in range(1, 7)])

    print("\nrandom trees: n, chain phi_2..phi_4, chain phi'_2..phi'_4, phi(L(T))")
    rng = random.Random(args.seed)
    for _ in range(args.trees):
        t = random_tree(rng.randint(3, 10), rng)
        print(
            f"  n={t.n:2d}  {verify_monotone_chain(t)}  {verify_monotone_chain(t, 'edge')}"
            f"  {exact_chromatic(line_graph(t))}"
        )


if __name__ == "__main__":
    main()
