"""Undirected simple graphs and the small graph families used throughout."""

from __future__ import annotations

import heapq
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ..errors import GraphError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges`` keeps construction order; edge colourings index into it.
    Every edge is stored as ``(u, v)`` with ``u < v``.
    """

    n: int
    edges: tuple[Edge, ...]
    root: int | None = None
    adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    edge_index: dict[Edge, int] = field(init=False, repr=False, compare=False)
    kind: str = field(init=False, compare=False)

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), root: int | None = None):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        norm: list[Edge] = []
        index: dict[Edge, int] = {}
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {(u, v)} out of range for n={n}")
            if u > v:
                u, v = v, u
            if (u, v) in index:
                raise GraphError(f"parallel edge {(u, v)}")
            index[(u, v)] = len(norm)
            norm.append((u, v))
            nbrs[u].append(v)
            nbrs[v].append(u)
        if root is not None and not 0 <= root < n:
            raise GraphError(f"root {root} out of range")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(norm))
        object.__setattr__(self, "root", root)
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in nbrs))
        object.__setattr__(self, "edge_index", index)
        tree = len(norm) == n - 1 and self.is_connected() if n else True
        object.__setattr__(self, "kind", "tree" if tree else "general")

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def is_tree(self) -> bool:
        return self.kind == "tree"

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def edge_id(self, u: int, v: int) -> int:
        return self.edge_index[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_index

    def with_root(self, root: int | None) -> Graph:
        return Graph(self.n, self.edges, root)

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [], [s]
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n == 0 or len(self.components()) == 1

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components())

    def bfs(self, source: int) -> tuple[list[int], list[int], list[int]]:
        """Return ``(order, parent, depth)`` from ``source``; unreached get -1."""
        parent = [-1] * self.n
        depth = [-1] * self.n
        depth[source] = 0
        order = [source]
        q = deque([source])
        while q:
            x = q.popleft()
            for y in self.adj[x]:
                if depth[y] < 0:
                    depth[y] = depth[x] + 1
                    parent[y] = x
                    order.append(y)
                    q.append(y)
        return order, parent, depth

    def eccentricity(self, v: int) -> int:
        return max(self.bfs(v)[2])

    def _tree_centres(self) -> list[int]:
        # middle vertex (or two) of a longest path; linear time for trees
        order, _, _ = self.bfs(0)
        a = order[-1]
        order, parent, depth = self.bfs(a)
        b = order[-1]
        diam = depth[b]
        walk = [b]
        while walk[-1] != a:
            walk.append(parent[walk[-1]])
        return sorted({walk[diam // 2], walk[(diam + 1) // 2]})

    def radius(self) -> int:
        if self.is_tree and self.n:
            return self.eccentricity(self._tree_centres()[0])
        return min(self.eccentricity(v) for v in range(self.n))

    def centre(self) -> int:
        """Lowest-id vertex of minimum eccentricity."""
        if self.is_tree and self.n:
            return self._tree_centres()[0]
        ecc = [self.eccentricity(v) for v in range(self.n)]
        return ecc.index(min(ecc))

    def induced(self, vertices: Sequence[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph, relabelled ``0..len-1`` in the given order.

        Returns the subgraph and the map from new ids back to old ids.
        """
        pos = {v: i for i, v in enumerate(vertices)}
        sub = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph(len(vertices), sub), list(vertices)

    def path_edges(self, path: Sequence[int]) -> list[int]:
        return [self.edge_id(path[i], path[i + 1]) for i in range(len(path) - 1)]


def line_graph(g: Graph) -> Graph:
    """Vertices are the edges of ``g`` (in edge order); adjacent iff they share an endpoint."""
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        incident[u].append(i)
        incident[v].append(i)
    out = set()
    for inc in incident:
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                out.add((inc[a], inc[b]) if inc[a] < inc[b] else (inc[b], inc[a]))
    return Graph(g.m, sorted(out))


# --- families -------------------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)], root=0 if n else None)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need n >= 3")
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)], root=0)


def complete_tree(d: int, h: int) -> Graph:
    """Complete d-ary tree of height h in BFS (heap) order, rooted at 0.

    Children of vertex ``i`` are ``d*i+1 .. d*i+d``.
    """
    if d < 1 or h < 0:
        raise GraphError(f"bad complete tree parameters d={d} h={h}")
    n = sum(d**i for i in range(h + 1))
    return Graph(n, [((i - 1) // d, i) for i in range(1, n)], root=0)


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labelled tree via a Prüfer sequence, rooted at 0."""
    if n <= 2:
        return path_graph(n)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    leaves = [i for i in range(n) if degree[i] == 1]
    heapq.heapify(leaves)
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return Graph(n, edges, root=0)


def tree_parents(g: Graph, root: int | None = None) -> tuple[list[int], list[int], list[int]]:
    """BFS order, parent and depth of a tree rooted at ``root`` (default ``g.root`` or 0)."""
    if root is None:
        root = g.root if g.root is not None else 0
    return g.bfs(root)
