"""Exhaustive k-anagram search over all paths of a coloured graph.

Trees: every root ``s`` gets a BFS layering; colour-multiset prefix sums
along root paths are kept as 64-bit hashes (sum of a random weight per
colour), so each block comparison is one integer compare. A hash hit is
re-checked exactly before it is reported, so hashing can never produce a
false witness, and equal multisets always give equal hashes.

General graphs: depth-first enumeration of simple paths with an explicit
cap; hitting the cap raises :class:`PathBudgetExceeded`.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ..errors import ColouringError, PathBudgetExceeded
from .colouring import AnagramWitness, Colouring, is_k_anagram
from .graph import Graph

DEFAULT_PATH_CAP = 2_000_000

_WEIGHTS = np.random.default_rng(0x5EED).integers(1, 2**63, size=4096, dtype=np.uint64)


def _weights(c: int) -> np.ndarray:
    if c <= len(_WEIGHTS):
        return _WEIGHTS[:c]
    return np.random.default_rng(c).integers(1, 2**63, size=c, dtype=np.uint64)


@lru_cache(maxsize=2)
def _root_layers(g: Graph) -> list[tuple[np.ndarray, list[np.ndarray], np.ndarray]]:
    """Per root: parent array, vertices by depth, and id of the edge to the parent."""
    out = []
    for s in range(g.n):
        order, parent, depth = g.bfs(s)
        par = np.asarray(parent, dtype=np.int32)
        dep = np.asarray(depth, dtype=np.int32)
        ordv = np.asarray(order, dtype=np.int32)
        layers = np.split(ordv, np.flatnonzero(np.diff(dep[ordv])) + 1)
        eid = np.full(g.n, -1, dtype=np.int32)
        for v in order[1:]:
            eid[v] = g.edge_id(parent[v], v)
        out.append((par, layers, eid))
    return out


def _tree_search(g: Graph, col: Colouring, k: int) -> AnagramWitness | None:
    n = g.n
    w = _weights(max(col.c, 1))
    colour = np.asarray(col.colours, dtype=np.int64)
    hashed = w[colour] if len(colour) else np.zeros(0, dtype=np.uint64)
    edge_mode = col.mode == "edge"
    # path of N elements needs N divisible by k; vertex paths have depth+1 elements
    offset = 0 if edge_mode else 1
    mult = np.arange(1, k + 1, dtype=np.uint64)
    for s, (par, layers, eid) in enumerate(_root_layers(g)):
        D = len(layers) - 1
        if D + offset < k:
            continue
        anc = np.full((n, D + 1), -1, dtype=np.int64)
        pref = np.zeros(n, dtype=np.uint64)
        anc[s, 0] = s
        pref[s] = 0 if edge_mode else hashed[s]
        for d in range(1, D + 1):
            lev = layers[d]
            p = par[lev]
            anc[lev, :d] = anc[p, :d]
            anc[lev, d] = lev
            pref[lev] = pref[p] + (hashed[eid[lev]] if edge_mode else hashed[lev])
            N = d + offset
            if N % k:
                continue
            lev = lev[lev > s]
            if not len(lev):
                continue
            L = N // k
            # boundary j sits at depth j*L - offset; its prefix covers j blocks
            cols = np.arange(1, k + 1) * L - offset
            ph = pref[anc[lev][:, cols]]
            hit = np.all(ph == ph[:, :1] * mult, axis=1)
            for v in lev[hit]:
                path = tuple(int(x) for x in anc[v, : d + 1])
                if is_k_anagram(col.sequence(g, path), k):
                    return AnagramWitness(path, k, col.mode)
    return None


def _dfs_search(g: Graph, col: Colouring, k: int, cap: int) -> AnagramWitness | None:
    edge_mode = col.mode == "edge"
    colours = col.colours
    c = max(col.c, 1)
    budget = cap
    for s in range(g.n):
        # prefix[i] = multiset of the first i elements of the current path
        path = [s]
        prefix = [(0,) * c]
        if not edge_mode:
            first = [0] * c
            first[colours[s]] += 1
            prefix.append(tuple(first))
        on_path = {s}
        stack = [iter(g.adj[s])]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                on_path.discard(path.pop())
                prefix.pop()
                continue
            if nxt in on_path:
                continue
            budget -= 1
            if budget < 0:
                raise PathBudgetExceeded(f"more than {cap} paths enumerated")
            x = colours[g.edge_id(path[-1], nxt)] if edge_mode else colours[nxt]
            row = list(prefix[-1])
            row[x] += 1
            path.append(nxt)
            prefix.append(tuple(row))
            on_path.add(nxt)
            stack.append(iter(g.adj[nxt]))
            N = len(prefix) - 1
            if nxt > s and N % k == 0:
                L = N // k
                base = [b - a for a, b in zip(prefix[0], prefix[L])]
                if all(
                    [b - a for a, b in zip(prefix[j * L], prefix[(j + 1) * L])] == base
                    for j in range(1, k)
                ):
                    return AnagramWitness(tuple(path), k, col.mode)
    return None


def contains_k_anagram(
    g: Graph, col: Colouring, k: int = 2, cap: int = DEFAULT_PATH_CAP
) -> AnagramWitness | None:
    """Return a witness path whose colour sequence is a k-anagram, or ``None``.

    Exhaustive over all simple paths. For general graphs ``cap`` bounds the
    number of path extensions explored.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    col.check_total(g)
    if g.n <= 1:
        return None
    if g.is_forest():
        for comp in g.components():
            if len(comp) < 2:
                continue
            if len(comp) == g.n:
                wit = _tree_search(g, col, k)
            else:
                wit = _component_search(g, col, k, comp)
            if wit is not None:
                return wit
        return None
    return _dfs_search(g, col, k, cap)


def _component_search(g: Graph, col: Colouring, k: int, comp: list[int]) -> AnagramWitness | None:
    sub, back = g.induced(comp)
    if col.mode == "vertex":
        ids = [col.colours[v] for v in back]
    else:
        ids = [col.colours[g.edge_id(back[u], back[v])] for u, v in sub.edges]
    if not ids:
        return None
    subcol = Colouring.from_ids(col.mode, ids)
    wit = _tree_search(sub, subcol, k)
    if wit is None:
        return None
    return AnagramWitness(tuple(back[v] for v in wit.path), k, col.mode)


def is_k_anagram_free(g: Graph, col: Colouring, k: int = 2, cap: int = DEFAULT_PATH_CAP) -> bool:
    return contains_k_anagram(g, col, k, cap) is None


def require_mode(col: Colouring, mode: str) -> None:
    if col.mode != mode:
        raise ColouringError(f"expected a {mode} colouring, got {col.mode}")
