"""Run each lower-bound finder on many seeded random colourings and tally outcomes."""

import argparse
import random
import time
from collections import Counter

from anagramfree.adversary import FINDERS, GadgetSpec, MultisetFamily, build, colouring_mode, min_parameter, premise_ok
from anagramfree.core import Colouring
from anagramfree.errors import PremiseViolated

DEFAULTS = {
    "edge_binary_tree": dict(h=6),
    "sibling_graph": dict(h=17),
    "complete_dary": dict(d=4, h=4),
    "kpower_gadget": dict(k=3, t=4),
}


def sweep(spec, c, runs, seed):
    gad = build(spec)
    mode = colouring_mode(spec.family)
    size = gad.graph.n if mode == "vertex" else gad.graph.m
    rng = random.Random(seed)
    tally = Counter()
    for _ in range(runs):
        col = Colouring.from_ids(mode, [rng.randrange(c) for _ in range(size)])
        try:
            res = FINDERS[spec.family](gad, col)
        except PremiseViolated:
            tally["refused"] += 1
            continue
        if isinstance(res, MultisetFamily):
            tally["family" if res.verify(gad, col) else "bad"] += 1
        else:
            tally["anagram" if res.verify(gad.graph, col) else "bad"] += 1
    return gad, tally


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--runs", type=int, default=500)
    ap.add_argument("--c", type=int, default=2)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    print("least parameter satisfying each premise")
    for c in (1, 2, 3):
        print(
            f"  c={c}: edge tree h={min_parameter('edge_binary_tree', c)}"
            f"  sibling h={min_parameter('sibling_graph', c)}"
            f"  4-ary h={min_parameter('complete_dary', c, d=4)}"
            f"  k=3 gadget t={min_parameter('kpower_gadget', c, k=3)}"
        )
    print()
    for family, params in DEFAULTS.items():
        spec = GadgetSpec(family, **params)
        t0 = time.perf_counter()
        gad, tally = sweep(spec, args.c, args.runs, args.seed)
        print(
            f"{family:17s} {params} n={gad.graph.n:6d} premise={premise_ok(spec, args.c)!s:5s} "
            f"{dict(tally)} in {time.perf_counter() - t0:.2f}s"
        )


if __name__ == "__main__":
    main()
