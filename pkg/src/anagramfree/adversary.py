"""Lower-bound gadgets and the constructive proofs run as witness finders.

Each finder takes a built :class:`Gadget` and a colouring and walks through
the counting argument: pigeonhole on colour multisets (or sequences), then
the explicit path the argument produces. Every witness is re-verified before
it is returned. If the pigeonhole step finds nothing the finder raises
:class:`PremiseViolated`; with the counting premise in force that cannot
happen, and an :class:`AssertionError` is raised instead.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Any, Sequence

from .core.colouring import AnagramWitness, Colouring, ColourMultiset
from .core.graph import Graph, complete_tree
from .errors import GraphError, PremiseViolated

FAMILIES = ("edge_binary_tree", "sibling_graph", "complete_dary", "kpower_gadget")


@dataclass(frozen=True)
class GadgetSpec:
    family: str
    h: int | None = None
    d: int | None = None
    k: int | None = None
    t: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise GraphError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        need = {
            "edge_binary_tree": ("h",),
            "sibling_graph": ("h",),
            "complete_dary": ("d", "h"),
            "kpower_gadget": ("k", "t"),
        }[self.family]
        for name in need:
            if getattr(self, name) is None:
                raise GraphError(f"{self.family} needs parameter {name}")
        if self.h is not None and self.h < 1:
            raise GraphError("h must be at least 1")
        if self.family == "sibling_graph" and self.h % 2 == 0:
            raise GraphError("sibling_graph needs odd h")
        if self.family == "complete_dary" and self.d < 1:
            raise GraphError("d must be at least 1")
        if self.family == "kpower_gadget" and (self.k < 2 or self.t < 1):
            raise GraphError("kpower_gadget needs k >= 2 and t >= 1")


@dataclass(frozen=True)
class KNode:
    """One level of the recursive k-power gadget; ``path`` is set only at the base."""

    u: int
    a: int
    b: int
    v: int
    path: tuple[int, ...] = ()
    children: tuple[KNode, ...] = ()


@dataclass(frozen=True)
class Gadget:
    spec: GadgetSpec
    graph: Graph
    parent: tuple[int, ...] = field(default=(), repr=False)
    depth: tuple[int, ...] = field(default=(), repr=False)
    leaves: tuple[int, ...] = field(default=(), repr=False)
    knode: KNode | None = field(default=None, repr=False)

    @property
    def marks(self) -> dict[str, int]:
        if self.knode is not None:
            return {"u": self.knode.u, "v": self.knode.v}
        return {"r": 0}


# --- builders ----------------------------------------------------------------


def _tree_gadget(spec: GadgetSpec, g: Graph) -> Gadget:
    _, parent, depth = g.bfs(0)
    leaves = tuple(v for v in range(g.n) if v != 0 and g.degree(v) == 1) or (0,)
    return Gadget(spec, g, tuple(parent), tuple(depth), leaves)


def _sibling_graph(spec: GadgetSpec) -> Gadget:
    h = spec.h
    parent, depth = [-1], [0]
    edges: list[tuple[int, int]] = []
    frontier = [0]
    for d in range(h):
        nxt = []
        for p in frontier:
            kids = 2 if d % 2 == 0 else 1
            ids = list(range(len(parent), len(parent) + kids))
            for x in ids:
                parent.append(p)
                depth.append(d + 1)
                edges.append((p, x))
            if kids == 2:
                edges.append((ids[0], ids[1]))
            nxt.extend(ids)
        frontier = nxt
    g = Graph(len(parent), edges, root=0)
    if g.max_degree() > 3:
        raise AssertionError("sibling graph exceeded degree 3")
    return Gadget(spec, g, tuple(parent), tuple(depth), tuple(frontier))


def _kpower(spec: GadgetSpec) -> Gadget:
    k, t = spec.k, spec.t
    edges: list[tuple[int, int]] = []
    counter = [0]

    def fresh(m: int) -> list[int]:
        out = list(range(counter[0], counter[0] + m))
        counter[0] += m
        return out

    def make(level: int) -> KNode:
        u, a, b, v = fresh(4)
        edges.extend([(u, a), (v, b)])
        if level == 1:
            path = fresh(k)
            edges.extend(zip(path, path[1:]))
            for p in path:
                edges.extend([(a, p), (b, p)])
            return KNode(u, a, b, v, path=tuple(path))
        kids = tuple(make(level - 1) for _ in range(k))
        for kid in kids:
            edges.extend([(kid.u, a), (kid.v, b)])
        # 1-indexed i: u_i u_{i+1} for even i, v_i v_{i+1} for odd i
        for i in range(1, k):
            x, y = kids[i - 1], kids[i]
            edges.append((x.u, y.u) if i % 2 == 0 else (x.v, y.v))
        return KNode(u, a, b, v, children=kids)

    node = make(t)
    g = Graph(counter[0], edges)
    if g.max_degree() > k + 1 or g.degree(node.u) != 1 or g.degree(node.v) != 1:
        raise AssertionError("k-power gadget violates its degree certificate")
    return Gadget(spec, g, knode=node)


def build(spec: GadgetSpec) -> Gadget:
    """Construct the gadget with canonical (construction order) vertex ids."""
    if spec.family == "edge_binary_tree":
        return _tree_gadget(spec, complete_tree(2, spec.h))
    if spec.family == "complete_dary":
        return _tree_gadget(spec, complete_tree(spec.d, spec.h))
    if spec.family == "sibling_graph":
        return _sibling_graph(spec)
    return _kpower(spec)


def kpower_order(k: int, t: int) -> int:
    """Vertex count of the k-power gadget S(t)."""
    n = k + 4
    for _ in range(t - 1):
        n = k * n + 4
    return n


# --- premises ------------------------------------------------------------------


def premise_ok(spec: GadgetSpec, c: int) -> bool:
    """Whether ``c`` colours force a witness; exact integer arithmetic throughout."""
    if c < 1:
        raise ValueError("c must be at least 1")
    h, d, k, t = spec.h, spec.d, spec.k, spec.t
    if spec.family == "edge_binary_tree":
        return 2**h > (h + 1) ** c
    if spec.family == "sibling_graph":
        return 2 ** ((h + 1) // 2) > (h + 2) ** c
    if spec.family == "complete_dary":
        # d^c <= (d/c)^h
        return d**c * c**h <= d**h
    # (k/(k-1))^t > (4t+2)^c
    return k**t > (4 * t + 2) ** c * (k - 1) ** t


def min_parameter(family: str, c: int, d: int | None = None, k: int | None = None) -> int:
    """Smallest h (or t for kpower_gadget) whose premise holds for ``c`` colours."""
    x = 1
    while True:
        if family == "kpower_gadget":
            spec = GadgetSpec(family, k=k, t=x)
        elif family == "sibling_graph":
            spec = GadgetSpec(family, h=2 * x - 1)
        else:
            spec = GadgetSpec(family, h=x, d=d)
        if premise_ok(spec, c):
            return spec.t if family == "kpower_gadget" else spec.h
        x += 1
        if x > 10_000:
            raise ValueError("no parameter up to 10000 satisfies the premise")


def height_family_params(c: int) -> tuple[int, int]:
    """(d, h) = (c^(c+1), c+1): a complete d-ary tree of height h forcing c+1 colours."""
    return c ** (c + 1), c + 1


def degree_family_height(c: int) -> int:
    """Least h with (c+1)^c <= ((c+1)/c)^h, so the (c+1)-ary tree of height h forces c+1 colours."""
    h = 1
    while (c + 1) ** c * c**h > (c + 1) ** h:
        h += 1
    return h


# --- finders -------------------------------------------------------------------


def _check_family(gadget: Gadget, family: str, col: Colouring, mode: str) -> None:
    if gadget.spec.family != family:
        raise GraphError(f"expected a {family} gadget, got {gadget.spec.family}")
    if col.mode != mode:
        raise GraphError(f"expected a {mode} colouring")
    col.check_total(gadget.graph)


def _root_path(gadget: Gadget, leaf: int) -> list[int]:
    out = [leaf]
    while gadget.parent[out[-1]] != -1:
        out.append(gadget.parent[out[-1]])
    return out[::-1]


def _pigeonhole(gadget: Gadget, key_of) -> tuple[list[int], list[int]] | None:
    seen: dict[Any, list[int]] = {}
    for leaf in gadget.leaves:
        path = _root_path(gadget, leaf)
        key = key_of(path)
        if key in seen:
            return seen[key], path
        seen[key] = path
    return None


def _split_at_lca(p: list[int], q: list[int]) -> tuple[list[int], list[int]]:
    i = 0
    while i < min(len(p), len(q)) and p[i] == q[i]:
        i += 1
    return p[i - 1 :], q[i - 1 :]


def _finish(gadget: Gadget, col: Colouring, path: Sequence[int], k: int) -> AnagramWitness:
    w = AnagramWitness(tuple(path), k, col.mode)
    if not w.verify(gadget.graph, col):
        raise AssertionError(f"constructed path {list(path)} is not a {k}-anagram")
    return w


def _no_collision(gadget: Gadget, col: Colouring) -> PremiseViolated:
    if premise_ok(gadget.spec, col.c):
        raise AssertionError("premise holds but the counting step found nothing")
    return PremiseViolated(f"{gadget.spec.family} with {col.c} colours: premise fails and no collision exists")


def _strict(gadget: Gadget, col: Colouring, strict: bool) -> None:
    if strict and not premise_ok(gadget.spec, col.c):
        raise PremiseViolated(f"premise fails for {gadget.spec} with c={col.c}")


def find_anagram_edge_tree(gadget: Gadget, col: Colouring, strict: bool = False) -> AnagramWitness:
    """Two leaves with equal root-path edge multisets give an anagram through their LCA."""
    _check_family(gadget, "edge_binary_tree", col, "edge")
    _strict(gadget, col, strict)
    g = gadget.graph

    def key(path):
        return ColourMultiset.of(col.sequence(g, path), col.c)

    hit = _pigeonhole(gadget, key)
    if hit is None:
        raise _no_collision(gadget, col)
    # after removing the shared prefix, both halves hang off the LCA
    p, q = _split_at_lca(*hit)
    return _finish(gadget, col, p[::-1] + q[1:], 2)


def find_anagram_vertex_graph(gadget: Gadget, col: Colouring, strict: bool = False) -> AnagramWitness:
    """Same pigeonhole on vertex multisets; the sibling edge joins the two halves."""
    _check_family(gadget, "sibling_graph", col, "vertex")
    _strict(gadget, col, strict)

    def key(path):
        return ColourMultiset.of((col[v] for v in path), col.c)

    hit = _pigeonhole(gadget, key)
    if hit is None:
        raise _no_collision(gadget, col)
    p, q = _split_at_lca(*hit)
    # drop the LCA itself; its two children are siblings, hence adjacent
    return _finish(gadget, col, p[1:][::-1] + q[1:], 2)


def find_anagram_dary(gadget: Gadget, col: Colouring, strict: bool = False) -> AnagramWitness:
    """Largest bucket of equal colour sequences, then two good levels of one colour."""
    _check_family(gadget, "complete_dary", col, "vertex")
    _strict(gadget, col, strict)
    h, d = gadget.spec.h, gadget.spec.d
    buckets: dict[tuple[int, ...], list[int]] = defaultdict(list)
    for leaf in gadget.leaves:
        buckets[tuple(col[v] for v in _root_path(gadget, leaf))].append(leaf)
    seq, C = max(buckets.items(), key=lambda kv: len(kv[1]))
    R: set[int] = set()
    for leaf in C:
        v = leaf
        while v not in R and v != -1:
            R.add(v)
            v = gadget.parent[v]
    by_level: list[list[int]] = [[] for _ in range(h + 1)]
    for v in sorted(R):
        by_level[gadget.depth[v]].append(v)

    def kids(v: int) -> list[int]:
        return [x for x in range(d * v + 1, d * v + d + 1) if x in R]

    good = [i for i in range(h + 1) if any(len(kids(v)) != 1 for v in by_level[i])]
    first: dict[int, int] = {}
    pair = None
    for lvl in good:
        if seq[lvl] in first:
            pair = (first[seq[lvl]], lvl)
            break
        first[seq[lvl]] = lvl
    if pair is None:
        raise _no_collision(gadget, col)
    a, b = pair
    v = next(x for x in by_level[a] if len(kids(x)) >= 2)
    x, y = kids(v)[:2]

    def down(z: int) -> list[int]:
        out = [z]
        while gadget.depth[out[-1]] < b:
            out.append(kids(out[-1])[0])
        return out

    p = down(x)[::-1] + [v]  # p_0 = u at level b, ..., p_n = v
    q = down(y)[::-1]  # q_0 = w, ..., q_{n-1}
    return _finish(gadget, col, p + q[1:][::-1], 2)


@dataclass(frozen=True)
class MultisetFamily:
    """Distinct colour multisets on uv-paths of length 4t, with one path for each."""

    k: int
    t: int
    members: dict[tuple[int, ...], tuple[int, ...]] = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def bound(self) -> float:
        return (self.k / (self.k - 1)) ** self.t

    def meets_bound(self) -> bool:
        # |D| * (k-1)^t >= k^t, exactly
        return self.size * (self.k - 1) ** self.t >= self.k**self.t

    def verify(self, gadget: Gadget, col: Colouring) -> bool:
        g, node = gadget.graph, gadget.knode
        for key, path in self.members.items():
            if path[0] != node.u or path[-1] != node.v or len(path) != 4 * self.t + 1:
                return False
            if not _is_path(g, path) or ColourMultiset.of(col.sequence(g, path), col.c).counts != key:
                return False
        return True


def _is_path(g: Graph, path: Sequence[int]) -> bool:
    return len(set(path)) == len(path) and all(g.has_edge(x, y) for x, y in zip(path, path[1:]))


def find_kanagram_gadget(gadget: Gadget, col: Colouring) -> AnagramWitness | MultisetFamily:
    """Run the induction: a k-anagram, or the family of uv-path multisets it guarantees."""
    _check_family(gadget, "kpower_gadget", col, "vertex")
    k, t = gadget.spec.k, gadget.spec.t
    c = col.c

    def key(path: Sequence[int]) -> tuple[int, ...]:
        return ColourMultiset.of((col[x] for x in path), c).counts

    def solve(node: KNode):
        if node.path:
            if len({col[p] for p in node.path}) == 1:
                return node.path
            out: dict[tuple[int, ...], tuple[int, ...]] = {}
            for p in node.path:
                path = (node.u, node.a, p, node.b, node.v)
                out.setdefault(key(path), path)
            return out
        fams = []
        for kid in node.children:
            res = solve(kid)
            if isinstance(res, tuple):
                return res
            fams.append(res)
        common = [m for m in sorted(fams[0]) if all(m in f for f in fams[1:])]
        if common:
            stitched: list[int] = []
            for i, f in enumerate(fams):
                stitched.extend(f[common[0]] if i % 2 == 0 else f[common[0]][::-1])
            return tuple(stitched)
        out = {}
        for f in fams:
            for inner in sorted(f):
                path = (node.u, node.a) + f[inner] + (node.b, node.v)
                out.setdefault(key(path), path)
        return out

    res = solve(gadget.knode)
    if isinstance(res, tuple):
        return _finish(gadget, col, res, k)
    fam = MultisetFamily(k, t, res)
    if not fam.meets_bound():
        raise AssertionError(f"family of size {fam.size} is below the bound {fam.bound:.3f}")
    if premise_ok(gadget.spec, c):
        raise AssertionError("premise holds but no k-anagram was produced")
    return fam


FINDERS = {
    "edge_binary_tree": find_anagram_edge_tree,
    "sibling_graph": find_anagram_vertex_graph,
    "complete_dary": find_anagram_dary,
    "kpower_gadget": find_kanagram_gadget,
}


def colouring_mode(family: str) -> str:
    return "edge" if family == "edge_binary_tree" else "vertex"
