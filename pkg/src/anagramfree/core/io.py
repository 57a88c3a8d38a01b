"""Text formats for graphs and colourings, plus DOT export.

Graph file::

    n m
    u v          (m lines, 0 <= u < v < n, in edge order)
    root r       (optional)

Colouring file::

    mode=vertex c=3
    0 1 2 1 0

Lines starting with ``#`` are comments and are ignored on input.
"""

from __future__ import annotations

from typing import TextIO

from ..errors import ColouringError, FormatError, GraphError
from .colouring import Colouring
from .graph import Graph

LETTERS = "abcdefghijklmnopqrstuvwxyz"


def _lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def format_graph(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out += [f"{u} {v}" for u, v in g.edges]
    if g.root is not None:
        out.append(f"root {g.root}")
    return "\n".join(out) + "\n"


def parse_graph(text: str) -> Graph:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty graph file")
    try:
        n, m = (int(x) for x in lines[0].split())
    except ValueError as exc:
        raise FormatError(f"bad header {lines[0]!r}") from exc
    root = None
    body = lines[1:]
    if body and body[-1].startswith("root"):
        try:
            root = int(body[-1].split()[1])
        except (IndexError, ValueError) as exc:
            raise FormatError(f"bad root line {body[-1]!r}") from exc
        body = body[:-1]
    if len(body) != m:
        raise FormatError(f"header promises {m} edges, found {len(body)}")
    edges = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"bad edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise FormatError(f"bad edge line {ln!r}") from exc
        if not 0 <= u < v < n:
            raise FormatError(f"edge line {ln!r} violates 0 <= u < v < n")
        edges.append((u, v))
    try:
        return Graph(n, edges, root)
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def format_colouring(col: Colouring) -> str:
    return f"mode={col.mode} c={col.c}\n" + " ".join(map(str, col.colours)) + "\n"


def parse_colouring(text: str) -> Colouring:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty colouring file")
    fields = dict(tok.split("=", 1) for tok in lines[0].split() if "=" in tok)
    if "mode" not in fields or "c" not in fields:
        raise FormatError(f"bad colouring header {lines[0]!r}")
    try:
        c = int(fields["c"])
        ids = [int(x) for x in lines[1].split()] if len(lines) > 1 else []
    except ValueError as exc:
        raise FormatError("non-integer colour id") from exc
    try:
        col = Colouring(fields["mode"], tuple(ids))
    except ColouringError as exc:
        raise FormatError(str(exc)) from exc
    if col.c != c:
        raise FormatError(f"header says c={c} but {col.c} distinct ids present")
    return col


def read_graph(path: str) -> Graph:
    with open(path) as fh:
        return parse_graph(fh.read())


def read_colouring(path: str) -> Colouring:
    with open(path) as fh:
        return parse_colouring(fh.read())


def word_to_str(word) -> str:
    return "".join(LETTERS[x] for x in word)


def word_from_str(text: str) -> tuple[int, ...]:
    try:
        return tuple(LETTERS.index(ch) for ch in text.strip())
    except ValueError as exc:
        raise FormatError(f"word {text!r} has symbols outside a-z") from exc


def write_dot(g: Graph, fh: TextIO, col: Colouring | None = None, name: str = "G") -> None:
    fh.write(f"graph {name} {{\n")
    for v in range(g.n):
        attrs = []
        if col is not None and col.mode == "vertex":
            attrs.append(f'label="{v}:{col.colours[v]}"')
        if v == g.root:
            attrs.append("shape=doublecircle")
        fh.write(f"  {v}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";\n")
    for i, (u, v) in enumerate(g.edges):
        label = f' [label="{col.colours[i]}"]' if col is not None and col.mode == "edge" else ""
        fh.write(f"  {u} -- {v}{label};\n")
    fh.write("}\n")
