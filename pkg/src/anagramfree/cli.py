"""Command line entry point: ``anagramfree <subcommand> ...``.

Exit status is 0 on success, 1 when something checked turns out not to be
anagram-free (or a finder refuses), and 2 on usage or file-format errors.
"""

from __future__ import annotations

import argparse
import random
import sys
from typing import Sequence

from . import adversary, colourers
from .core import Colouring, complete_tree, contains_k_anagram, cycle_graph, path_graph, random_tree, star_graph
from .core.check import DEFAULT_PATH_CAP
from .core.io import format_colouring, format_graph, read_colouring, read_graph, word_from_str, word_to_str, write_dot
from .errors import AnagramFreeError, PathBudgetExceeded, PremiseViolated
from .pathwidth import main_path, pathwidth
from .solver import DEFAULT_BUDGET, exact_chromatic
from .words import dekking_prefix, k_anagram_free_word, keranen_prefix, max_anagram_free_length

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dot(path: str | None, g, col=None) -> None:
    if path:
        with open(path, "w") as fh:
            write_dot(g, fh, col)


# --- word ----------------------------------------------------------------------


def cmd_word(args) -> int:
    if args.kind in ("keranen", "dekking3", "dekking4"):
        if args.len is None:
            raise argparse.ArgumentTypeError("--len is required")
        w = keranen_prefix(args.len) if args.kind == "keranen" else dekking_prefix(int(args.kind[-1]), args.len)
        print(word_to_str(w))
        return EXIT_OK
    if args.kind == "max":
        res = max_anagram_free_length(args.alphabet, args.k, args.cap)
        print(f"length={res.length} word={word_to_str(res.word)} reached_cap={res.reached_cap}")
        return EXIT_OK
    # check
    if not args.word:
        raise argparse.ArgumentTypeError("word check needs a word")
    hit = k_anagram_free_word(word_from_str(args.word), args.k)
    if hit is None:
        print("free")
        return EXIT_OK
    start, length = hit
    print(f"k={args.k} start={start} length={length} factor={args.word[start:start + length]}")
    return EXIT_FAIL


# --- check ---------------------------------------------------------------------


def cmd_check(args) -> int:
    g = read_graph(args.graph)
    col = read_colouring(args.colouring)
    if col.mode != args.mode:
        raise argparse.ArgumentTypeError(f"colouring file is in {col.mode} mode, --mode says {args.mode}")
    col.check_total(g)
    w = contains_k_anagram(g, col, args.k, cap=args.cap)
    if w is None:
        print(f"free k={args.k} mode={args.mode} colours={col.c}")
        return EXIT_OK
    print(w.format())
    return EXIT_FAIL


# --- colour --------------------------------------------------------------------


def _certificate(g, col: Colouring, bound) -> str:
    pw = pathwidth(g) if g.is_forest() else "na"
    radius = g.radius() if g.n and g.is_connected() else "na"
    return f"# colours={col.c} bound={bound} pw={pw} radius={radius}\n"


def cmd_colour(args) -> int:
    method = args.method
    if method == "binary":
        if args.h is None:
            raise argparse.ArgumentTypeError("binary needs --h")
        g = complete_tree(2, args.h)
        col = colourers.colour_binary_tree(args.h, split=args.split)
        bound = f"{colourers.binary_tree_bound(args.h):.3f}"
        k = 2
    elif method == "cycle":
        if args.n is None:
            raise argparse.ArgumentTypeError("cycle needs --n")
        g = cycle_graph(args.n)
        col = colourers.colour_cycle(args.n, args.mode)
        bound, k = 5, 2
    else:
        if args.graph is None:
            raise argparse.ArgumentTypeError(f"{method} needs a graph file")
        g = read_graph(args.graph)
        if method == "centred":
            col, k = colourers.colour_centred(g), 2
            bound = g.radius() + 1
        elif method == "pathwidth":
            col, k = colourers.colour_pathwidth_vertex(g), 2
            bound = 4 * pathwidth(g) + 1
        elif method == "edge3":
            col, k = colourers.colour_pathwidth_edge3(g), 3
            bound = 4 * pathwidth(g)
        else:  # kpower
            k = args.k
            col = colourers.colour_tree_k_anagram(g, k, args.mode)
            bound = {2: 4, 3: 3, 4: 2}[colourers.depth_word_power(k)]
    if args.graph_out:
        _emit(format_graph(g), args.graph_out)
    _dot(args.dot, g, col)
    _emit(_certificate(g, col, bound) + format_colouring(col), args.out)
    if args.verify and contains_k_anagram(g, col, k) is not None:
        print(f"colouring is not {k}-anagram-free", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


# --- pw ------------------------------------------------------------------------


def cmd_pw(args) -> int:
    g = read_graph(args.graph)
    print(f"pw={pathwidth(g)}")
    if args.main_path:
        if not g.is_tree or g.m == 0:
            raise argparse.ArgumentTypeError("--main-path needs a tree with an edge")
        cert = main_path(g)
        print("main_path=" + ",".join(map(str, cert.main_path)))
        print("component_widths=" + ",".join(map(str, cert.component_widths)))
    return EXIT_OK


# --- build / attack ------------------------------------------------------------

PLAIN = ("path", "cycle", "star", "complete", "random_tree")


def _plain_graph(args):
    if args.family == "path":
        return path_graph(args.n)
    if args.family == "cycle":
        return cycle_graph(args.n)
    if args.family == "star":
        return star_graph(args.n)
    if args.family == "complete":
        return complete_tree(args.d, args.h)
    return random_tree(args.n, random.Random(args.seed))


def _spec(args) -> adversary.GadgetSpec:
    return adversary.GadgetSpec(args.family, h=args.h, d=args.d, k=args.k, t=args.t)


def cmd_build(args) -> int:
    if args.family in PLAIN:
        need = {"complete": ("d", "h")}.get(args.family, ("n",))
        for name in need:
            if getattr(args, name) is None:
                raise argparse.ArgumentTypeError(f"{args.family} needs --{name}")
        g = _plain_graph(args)
    else:
        g = adversary.build(_spec(args)).graph
    _emit(format_graph(g), args.out)
    _dot(args.dot, g)
    return EXIT_OK


def cmd_attack(args) -> int:
    spec = _spec(args)
    gadget = adversary.build(spec)
    g = gadget.graph
    mode = adversary.colouring_mode(spec.family)
    finder = adversary.FINDERS[spec.family]
    if args.colouring:
        runs = [read_colouring(args.colouring)]
    elif args.random:
        rng = random.Random(args.seed)
        size = g.n if mode == "vertex" else g.m
        runs = [Colouring.from_ids(mode, [rng.randrange(args.c) for _ in range(size)]) for _ in range(args.random)]
    else:
        raise argparse.ArgumentTypeError("attack needs --colouring FILE or --random N")
    status = EXIT_OK
    for col in runs:
        try:
            res = finder(gadget, col)
        except PremiseViolated as exc:
            print(f"refused: {exc}")
            status = EXIT_FAIL
            continue
        if isinstance(res, adversary.MultisetFamily):
            print(f"family size={res.size} bound={res.bound:.4f}")
        else:
            print(res.format())
    return status


# --- solve ---------------------------------------------------------------------


def cmd_solve(args) -> int:
    g = read_graph(args.graph)
    val = exact_chromatic(g, args.mode, args.k, args.max_c, budget=args.budget)
    print("exceeds" if val is None else val)
    return EXIT_OK


# --- parser --------------------------------------------------------------------


def _gadget_args(p: argparse.ArgumentParser) -> None:
    for name in ("h", "d", "k", "t", "n"):
        p.add_argument(f"--{name}", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="anagramfree", description="Anagram-free colourings of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("word", help="generate, search or check words")
    p.add_argument("kind", choices=["keranen", "dekking3", "dekking4", "max", "check"])
    p.add_argument("word", nargs="?")
    p.add_argument("--len", type=int)
    p.add_argument("--alphabet", type=int, default=3)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--cap", type=int, default=100)
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("check", help="check a colouring for k-anagrams")
    p.add_argument("graph")
    p.add_argument("colouring")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--mode", choices=["vertex", "edge"], default="vertex")
    p.add_argument("--cap", type=int, default=DEFAULT_PATH_CAP)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("colour", help="run an upper-bound colourer")
    p.add_argument("method", choices=["centred", "pathwidth", "edge3", "kpower", "binary", "cycle"])
    p.add_argument("graph", nargs="?")
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--mode", choices=["vertex", "edge"], default="vertex")
    p.add_argument("--h", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--split", choices=["half", "best"], default="half")
    p.add_argument("--out")
    p.add_argument("--graph-out")
    p.add_argument("--dot")
    p.add_argument("--verify", action="store_true", help="re-check the output before exiting")
    p.set_defaults(func=cmd_colour)

    p = sub.add_parser("pw", help="exact pathwidth of a forest")
    p.add_argument("graph")
    p.add_argument("--main-path", action="store_true")
    p.set_defaults(func=cmd_pw)

    p = sub.add_parser("build", help="emit a gadget or a standard graph")
    p.add_argument("family", choices=list(adversary.FAMILIES) + list(PLAIN))
    _gadget_args(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.add_argument("--dot")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("attack", help="run a lower-bound finder against colourings")
    p.add_argument("family", choices=adversary.FAMILIES)
    _gadget_args(p)
    p.add_argument("--c", type=int, default=2)
    p.add_argument("--colouring")
    p.add_argument("--random", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_attack)

    p = sub.add_parser("solve", help="exact chromatic number by backtracking")
    p.add_argument("graph")
    p.add_argument("--mode", choices=["vertex", "edge"], default="vertex")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--max-c", type=int, default=6)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_solve)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PathBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (AnagramFreeError, argparse.ArgumentTypeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
