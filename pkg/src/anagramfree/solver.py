"""Exact anagram-free chromatic numbers of small graphs by backtracking.

Elements (vertices, or edges) are coloured in breadth-first order from
vertex 0. Every simple path with a multiple of ``k`` elements is filed
under the element of that path coloured last, so each path is checked once,
at the moment it becomes fully coloured.
"""

from __future__ import annotations

from collections import Counter

from .core.graph import Graph
from .errors import MonotonicityViolation, PathBudgetExceeded

DEFAULT_BUDGET = 10**8


def element_order(g: Graph, mode: str) -> list[int]:
    """Vertices (or edge ids) in breadth-first order, component by component."""
    pos = [-1] * g.n
    order: list[int] = []
    for s in range(g.n):
        if pos[s] < 0:
            for v in g.bfs(s)[0]:
                pos[v] = len(order)
                order.append(v)
    if mode == "vertex":
        return order
    return sorted(range(g.m), key=lambda e: sorted((pos[g.edges[e][0]], pos[g.edges[e][1]])))


def _paths_by_last(g: Graph, mode: str, k: int, rank: dict[int, int], budget: int) -> list[list[tuple[int, ...]]]:
    """Element paths of length a positive multiple of ``k``, bucketed by their last-coloured element."""
    buckets: list[list[tuple[int, ...]]] = [[] for _ in rank]
    count = 0
    for s in range(g.n):
        stack = [(s, (s,))]
        while stack:
            v, path = stack.pop()
            elems = path if mode == "vertex" else tuple(g.edge_id(a, b) for a, b in zip(path, path[1:]))
            if len(elems) >= k and len(elems) % k == 0 and path[-1] > s:
                pos = tuple(rank[x] for x in elems)
                buckets[max(pos)].append(pos)
                count += 1
                if count > budget:
                    raise PathBudgetExceeded(f"more than {budget} paths to check")
            for w in g.adj[v]:
                if w not in path:
                    stack.append((w, path + (w,)))
    return buckets


def _blocks_equal(seq: list[int], k: int) -> bool:
    L = len(seq) // k
    first = Counter(seq[:L])
    return all(Counter(seq[j * L : (j + 1) * L]) == first for j in range(1, k))


def _feasible(n: int, c: int, k: int, buckets, budget: list[int]) -> bool:
    col = [-1] * n
    top = [0] * (n + 1)  # top[i] = number of colours used by positions < i

    def ok(i: int) -> bool:
        for pos in buckets[i]:
            budget[0] -= 1
            if budget[0] < 0:
                raise PathBudgetExceeded("path check budget exhausted")
            if _blocks_equal([col[p] for p in pos], k):
                return False
        return True

    # iterative backtracking with symmetry breaking: position i may open at most one new colour
    i = 0
    while 0 <= i < n:
        x = col[i] + 1
        limit = min(c, top[i] + 1)
        placed = False
        while x < limit:
            col[i] = x
            if ok(i):
                placed = True
                break
            x += 1
        if placed:
            top[i + 1] = max(top[i], col[i] + 1)
            i += 1
        else:
            col[i] = -1
            i -= 1
    return i == n


def exact_chromatic(
    g: Graph, mode: str = "vertex", k: int = 2, max_c: int | None = None, budget: int = DEFAULT_BUDGET
) -> int | None:
    """Least number of colours admitting a k-anagram-free colouring, or ``None`` if it exceeds ``max_c``.

    Raises :class:`PathBudgetExceeded` once ``budget`` path checks have been spent.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if mode not in ("vertex", "edge"):
        raise ValueError(f"unknown mode {mode!r}")
    order = element_order(g, mode)
    n = len(order)
    if n == 0:
        return 0
    if max_c is None:
        max_c = n  # all-distinct is always free
    rank = {x: i for i, x in enumerate(order)}
    buckets = _paths_by_last(g, mode, k, rank, budget)
    left = [budget]
    for c in range(1, max_c + 1):
        if _feasible(n, c, k, buckets, left):
            return c
    return None


def verify_monotone_chain(
    g: Graph, mode: str = "vertex", k_max: int = 4, budget: int = DEFAULT_BUDGET
) -> list[int]:
    """Exact values for k = 2..k_max; raises if the chain ever increases."""
    values = [exact_chromatic(g, mode, k, budget=budget) for k in range(2, k_max + 1)]
    for k, (a, b) in enumerate(zip(values, values[1:]), start=2):
        if b > a:
            raise MonotonicityViolation(f"value rose from {a} at k={k} to {b} at k={k + 1}: {values}")
    return values
