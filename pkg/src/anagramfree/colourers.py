"""Constructive upper-bound colourings for trees and cycles.

Every function returns a dense :class:`Colouring`; callers are expected to
re-check it with :func:`anagramfree.core.contains_k_anagram`.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Sequence

from .core.colouring import Colouring
from .core.graph import Graph, complete_tree, cycle_graph
from .errors import GraphError
from .pathwidth import main_path
from .words import dekking_prefix, free_word, keranen_prefix


def _require_tree(t: Graph) -> None:
    if not t.is_tree:
        raise GraphError("expected a tree")


def colour_by_depth(
    t: Graph, w: Sequence[int], mode: str = "vertex", root: int | None = None
) -> Colouring:
    """Colour by depth through the word ``w``.

    Vertex mode uses ``w[depth]``; edge mode colours each edge by its deeper
    endpoint, ``w[depth - 1]``.
    """
    _require_tree(t)
    if root is None:
        root = t.root if t.root is not None else 0
    _, parent, depth = t.bfs(root)
    height = max(depth)
    if mode == "vertex":
        if len(w) <= height:
            raise ValueError(f"word of length {len(w)} too short for height {height}")
        return Colouring.from_ids("vertex", [w[d] for d in depth])
    if mode == "edge":
        if len(w) < height:
            raise ValueError(f"word of length {len(w)} too short for height {height}")
        return Colouring.from_ids("edge", [w[max(depth[u], depth[v]) - 1] for u, v in t.edges])
    raise ValueError(f"unknown mode {mode!r}")


def colour_centred(t: Graph) -> Colouring:
    """Distance from a centre; radius+1 colours, centred hence anagram-free."""
    _require_tree(t)
    if t.n == 0:
        raise GraphError("empty tree")
    r = t.radius()
    return colour_by_depth(t, range(r + 1), root=t.centre())


def _split_components(g: Graph) -> list[tuple[Graph, list[int]]]:
    return [g.induced(comp) for comp in g.components()]


def colour_pathwidth_vertex(t: Graph) -> Colouring:
    """At most ``4*pw + 1`` colours.

    Peel a main path, colour it with four fresh colours along an anagram-free
    word and recurse into the leftover components on the shared lower palette.
    """
    if not t.is_forest():
        raise GraphError("expected a forest")
    out = [0] * t.n
    stack = [(sub, back) for sub, back in _split_components(t)]
    while stack:
        sub, back = stack.pop()
        if sub.m == 0:
            for v in back:
                out[v] = 0
            continue
        cert = main_path(sub)
        base = 4 * (cert.width - 1) + 1
        word = keranen_prefix(len(cert.main_path))
        for v, x in zip(cert.main_path, word):
            out[back[v]] = base + x
        for comp in cert.components:
            piece, inner = sub.induced(list(comp))
            stack.append((piece, [back[v] for v in inner]))
    return Colouring.from_ids("vertex", out)


def colour_pathwidth_edge3(t: Graph) -> Colouring:
    """3-anagram-free edge colouring with at most ``4*pw`` colours.

    Main path edges take three fresh colours along a 3-anagram-free word; the
    edges joining the path to the rest share a fourth.
    """
    if not t.is_forest():
        raise GraphError("expected a forest")
    out = [0] * t.m
    stack = [(sub, back) for sub, back in _split_components(t)]
    while stack:
        sub, back = stack.pop()
        if sub.m == 0:
            continue
        cert = main_path(sub)
        base = 4 * (cert.width - 1)
        path = cert.main_path
        word = dekking_prefix(3, len(path) - 1)
        for i, x in enumerate(word):
            out[t.edge_id(back[path[i]], back[path[i + 1]])] = base + x
        on_path = set(path)
        for u, v in sub.edges:
            if (u in on_path) != (v in on_path):
                out[t.edge_id(back[u], back[v])] = base + 3
        for comp in cert.components:
            piece, inner = sub.induced(list(comp))
            stack.append((piece, [back[v] for v in inner]))
    return Colouring.from_ids("edge", out)


# --- complete binary trees ------------------------------------------------


def binary_tree_bound(h: int) -> float:
    return h / 2 + 0.5 * math.log2(h + 1) + 1


def _half_split(h: int) -> int:
    return 2 * ((h + 2) // 4)


@lru_cache(maxsize=None)
def binary_tree_colour_count(h: int, split: str = "half") -> int:
    """Colours used by :func:`colour_binary_tree` for height ``h``."""
    if h == 0:
        return 1
    return min(_split_cost(h, t, split) for t in [_choose_split(h, split)])


def _split_cost(h: int, t: int, split: str) -> int:
    b = h - t - 1
    if b < 0:
        return t + 1
    return t + 1 + max(0, binary_tree_colour_count(b, split) - t // 2)


@lru_cache(maxsize=None)
def _choose_split(h: int, split: str) -> int:
    half = _half_split(h)
    if split == "half":
        return min(half, h)
    if split != "best":
        raise ValueError(f"unknown split rule {split!r}")
    options = list(range(0, h, 2)) + ([h] if h % 2 == 0 else [])
    best = min(_split_cost(h, t, split) for t in options)
    if half in options and _split_cost(h, half, split) == best:
        return half
    return min(t for t in options if _split_cost(h, t, split) == best)


def colour_binary_tree(h: int, split: str = "half") -> Colouring:
    """Anagram-free vertex colouring of ``complete_tree(2, h)``.

    The top block of even height ``t`` gets one colour on all even depths and
    a private pair of colours per odd depth (left child takes the first).
    Each subtree hanging below it is coloured recursively from a palette made
    of the odd-level colours *not* on its root path, then fresh colours.

    ``split="half"`` uses ``t = 2*floor((h+2)/4)``; ``split="best"`` picks
    the even ``t`` that minimises the total count.
    """
    if h < 0:
        raise ValueError("h must be non-negative")
    out = [-1] * (2 ** (h + 1) - 1)
    palette = list(range(binary_tree_colour_count(h, split)))
    stack = [(0, h, palette)]
    while stack:
        v, height, pal = stack.pop()
        if height == 0:
            out[v] = pal[0]
            continue
        t = _choose_split(height, split)
        # (vertex, relative depth, colours of odd levels on its root path)
        frontier = [(v, 0, ())]
        while frontier:
            u, d, odd_path = frontier.pop()
            if d % 2 == 0:
                out[u] = pal[0]
            else:
                out[u] = pal[d] if u % 2 == 1 else pal[d + 1]
                odd_path = odd_path + (out[u],)
            if d < t:
                frontier.extend((c, d + 1, odd_path) for c in (2 * u + 1, 2 * u + 2))
                continue
            b = height - t - 1
            if b < 0:
                continue
            reusable = [pal[j + 1] if pal[j] == used else pal[j] for j, used in zip(range(1, t, 2), odd_path)]
            sub_pal = (reusable + pal[t + 1 :])[: binary_tree_colour_count(b, split)]
            for c in (2 * u + 1, 2 * u + 2):
                stack.append((c, b, sub_pal))
    return Colouring.from_ids("vertex", out)


def binary_tree(h: int) -> Graph:
    return complete_tree(2, h)


# --- cycles -----------------------------------------------------------------


def colour_cycle(n: int, mode: str = "vertex") -> Colouring:
    """At most five colours on ``cycle_graph(n)``: one unique element, Keränen on the rest."""
    if n < 3:
        raise GraphError("cycles need n >= 3")
    rest = keranen_prefix(n - 1)
    if mode == "vertex":
        return Colouring.from_ids("vertex", (4,) + rest)
    if mode == "edge":
        # edges 0..n-2 run along 0,1,...,n-1; edge n-1 closes the cycle
        return Colouring.from_ids("edge", rest + (4,))
    raise ValueError(f"unknown mode {mode!r}")


def cycle(n: int) -> Graph:
    return cycle_graph(n)


# --- k-anagrams on trees ----------------------------------------------------


def depth_word_power(k: int) -> int:
    """Power ``z`` of the free word used for k-anagrams: 2 for k=4,5; 3 for 6,7; 4 for k>=8."""
    if k < 4:
        raise ValueError("depth colouring needs k >= 4")
    return 2 if k < 6 else 3 if k < 8 else 4


def colour_tree_k_anagram(t: Graph, k: int, mode: str = "vertex") -> Colouring:
    """k-anagram-free colouring (k >= 4) with 4, 3 or 2 colours by depth."""
    _require_tree(t)
    z = depth_word_power(k)
    root = t.root if t.root is not None else 0
    height = max(t.bfs(root)[2]) if t.n else 0
    length = height + 1 if mode == "vertex" else height
    return colour_by_depth(t, free_word(z, length), mode=mode, root=root)
