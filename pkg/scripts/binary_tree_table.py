"""Colours used by the binary-tree scheme against the closed-form bound, per height."""

import argparse
import csv
import sys

from anagramfree.colourers import binary_tree_bound, binary_tree_colour_count, colour_binary_tree, colour_centred
from anagramfree.core import complete_tree, contains_k_anagram


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-h", type=int, default=30)
    ap.add_argument("--check-up-to", type=int, default=9, help="re-check colourings up to this height")
    args = ap.parse_args()

    out = csv.writer(sys.stdout)
    out.writerow(["h", "half", "best", "bound", "centred", "over_bound", "checked"])
    for h in range(args.max_h + 1):
        half = binary_tree_colour_count(h)
        best = binary_tree_colour_count(h, "best")
        checked = ""
        if h <= args.check_up_to:
            t = complete_tree(2, h)
            checked = contains_k_anagram(t, colour_binary_tree(h)) is None
            centred = colour_centred(t).c
        else:
            centred = h + 1
        bound = binary_tree_bound(h)
        out.writerow([h, half, best, f"{bound:.3f}", centred, half > bound, checked])


if __name__ == "__main__":
    main()
