"""Exact pathwidth of trees and forests, and main-path extraction.

Pathwidth equals vertex separation. For trees, ``pw >= k+1`` (k >= 1) holds
iff some vertex has three branches of pathwidth ``>= k``. Rooting the tree,
each subtree gets a *label*: a list of ``(value, critical)`` entries where
``value`` is the subtree's pathwidth and ``critical`` is the unique vertex
with two children of that pathwidth (or ``None``). The tail of a label
describes the subtree with the critical vertex's subtree cut away, which is
all a parent needs to decide whether the critical vertex gains a third
heavy branch.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core.graph import Graph
from .errors import GraphError

Label = list[tuple[int, "int | None"]]


def _combine(children: list[Label], root: int) -> Label:
    if not children:
        return [(0, None)]
    k = max(lab[0][0] for lab in children)
    if k == 0:
        return [(1, None)]
    heavy = [lab for lab in children if lab[0][0] == k]
    if len(heavy) >= 3:
        return [(k + 1, None)]
    if len(heavy) == 2:
        if heavy[0][0][1] is not None or heavy[1][0][1] is not None:
            return [(k + 1, None)]
        return [(k, root)]
    lab = heavy[0]
    crit = lab[0][1]
    if crit is None:
        return [(k, None)]
    rest = [other for other in children if other is not lab]
    if len(lab) > 1:
        rest.append(lab[1:])
    cut = _combine(rest, root)
    if cut[0][0] >= k:
        return [(k + 1, None)]
    return [(k, crit)] + cut


def _labels(g: Graph, root: int) -> tuple[dict[int, Label], list[int], list[int]]:
    order, parent, _ = g.bfs(root)
    kids: dict[int, list[int]] = {v: [] for v in order}
    for v in order[1:]:
        kids[parent[v]].append(v)
    labels: dict[int, Label] = {}
    for v in reversed(order):
        labels[v] = _combine([labels[c] for c in kids[v]], v)
    return labels, order, parent


def _require_forest(g: Graph) -> None:
    if not g.is_forest():
        raise GraphError("pathwidth here is only defined for forests")


def pathwidth(g: Graph) -> int:
    """Exact pathwidth of a forest; the maximum over its components."""
    _require_forest(g)
    best = 0
    for comp in g.components():
        if len(comp) > 1:
            labels, _, _ = _labels(g, comp[0])
            best = max(best, labels[comp[0]][0][0])
    return best


@dataclass(frozen=True)
class PathwidthCert:
    width: int
    main_path: tuple[int, ...]
    component_widths: tuple[int, ...]
    components: tuple[tuple[int, ...], ...] = field(repr=False)

    def holds(self) -> bool:
        return all(w <= self.width - 1 for w in self.component_widths)


def _descend(v: int, kids: dict[int, list[int]]) -> list[int]:
    walk = [v]
    while kids[walk[-1]]:
        walk.append(min(kids[walk[-1]]))
    return walk


def main_path(t: Graph) -> PathwidthCert:
    """A leaf-to-leaf path whose removal leaves only components of smaller pathwidth.

    The certificate recomputes the pathwidth of every leftover component.
    """
    if not t.is_tree:
        raise GraphError("main_path needs a tree")
    if t.m == 0:
        raise GraphError("main_path needs at least one edge")
    root = 0
    labels, order, parent = _labels(t, root)
    kids: dict[int, list[int]] = {v: [] for v in order}
    for v in order[1:]:
        kids[parent[v]].append(v)
    k, crit = labels[root][0]

    def heavy_chain(v: int) -> list[int]:
        chain = [v]
        while True:
            nxt = [c for c in kids[chain[-1]] if labels[c][0][0] == k]
            if not nxt:
                return chain
            chain.append(nxt[0])

    if crit is not None:
        a, b = [c for c in kids[crit] if labels[c][0][0] == k][:2]
        left, right = heavy_chain(a), heavy_chain(b)
        left = left + _descend(left[-1], kids)[1:]
        right = right + _descend(right[-1], kids)[1:]
        path = left[::-1] + [crit] + right
    else:
        chain = heavy_chain(root)
        chain = chain + _descend(chain[-1], kids)[1:]
        spare = [c for c in kids[root] if len(chain) < 2 or c != chain[1]]
        if spare:
            chain = _descend(min(spare), kids)[::-1] + chain
        path = chain

    on_path = set(path)
    rest = [v for v in range(t.n) if v not in on_path]
    comps: list[tuple[int, ...]] = []
    widths: list[int] = []
    if rest:
        sub, back = t.induced(rest)
        for comp in sub.components():
            piece, _ = sub.induced(comp)
            comps.append(tuple(back[v] for v in comp))
            widths.append(pathwidth(piece))
    cert = PathwidthCert(k, tuple(path), tuple(widths), tuple(comps))
    if not cert.holds():
        raise AssertionError(f"main path certificate failed: widths {widths} vs pw {k}")
    return cert
