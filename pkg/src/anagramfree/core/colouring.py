"""Colourings, colour multisets and anagram witnesses."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from ..errors import ColouringError, InvalidPath
from .graph import Graph

MODES = ("vertex", "edge")


@dataclass(frozen=True)
class Colouring:
    """Total map from vertices (or edges, in graph edge order) to dense ids ``0..c-1``."""

    mode: str
    colours: tuple[int, ...]

    def __post_init__(self):
        if self.mode not in MODES:
            raise ColouringError(f"unknown mode {self.mode!r}")
        cols = tuple(int(x) for x in self.colours)
        object.__setattr__(self, "colours", cols)
        present = set(cols)
        if any(x < 0 for x in present) or (present and max(present) != len(present) - 1):
            raise ColouringError(f"colour ids are not dense 0..c-1: {sorted(present)[:10]}")

    @classmethod
    def from_ids(cls, mode: str, ids: Iterable[int]) -> Colouring:
        """Relabel arbitrary ids onto ``0..c-1``, preserving their order."""
        ids = list(ids)
        rank = {x: i for i, x in enumerate(sorted(set(ids)))}
        return cls(mode, tuple(rank[x] for x in ids))

    @property
    def c(self) -> int:
        return len(set(self.colours))

    def __len__(self) -> int:
        return len(self.colours)

    def __getitem__(self, i: int) -> int:
        return self.colours[i]

    def check_total(self, g: Graph) -> None:
        want = g.n if self.mode == "vertex" else g.m
        if len(self.colours) != want:
            raise ColouringError(
                f"{self.mode} colouring has {len(self.colours)} entries, graph needs {want}"
            )

    def sequence(self, g: Graph, path: Sequence[int]) -> list[int]:
        """Colour sequence read along a vertex path."""
        if self.mode == "vertex":
            return [self.colours[v] for v in path]
        return [self.colours[e] for e in g.path_edges(path)]


@dataclass(frozen=True)
class ColourMultiset:
    counts: tuple[int, ...]

    def __add__(self, other: ColourMultiset) -> ColourMultiset:
        a, b = self.counts, other.counts
        size = max(len(a), len(b))
        a = a + (0,) * (size - len(a))
        b = b + (0,) * (size - len(b))
        return ColourMultiset(tuple(x + y for x, y in zip(a, b)))

    @property
    def size(self) -> int:
        return sum(self.counts)

    def as_dict(self) -> dict[int, int]:
        return {i: x for i, x in enumerate(self.counts) if x}

    @classmethod
    def of(cls, seq: Iterable[int], c: int) -> ColourMultiset:
        counts = [0] * c
        for x in seq:
            counts[x] += 1
        return cls(tuple(counts))


def validate_path(g: Graph, path: Sequence[int]) -> None:
    if not path:
        raise InvalidPath("empty path")
    if len(set(path)) != len(path):
        raise InvalidPath(f"repeated vertex in {list(path)}")
    for v in path:
        if not 0 <= v < g.n:
            raise InvalidPath(f"vertex {v} not in graph")
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            raise InvalidPath(f"{a} and {b} are not adjacent")


def multiset_of_path(g: Graph, col: Colouring, path: Sequence[int]) -> ColourMultiset:
    col.check_total(g)
    validate_path(g, path)
    return ColourMultiset.of(col.sequence(g, path), col.c)


def is_k_anagram(seq: Sequence[int], k: int = 2) -> bool:
    """True iff ``seq`` splits into ``k`` equal-length blocks that are permutations of each other."""
    if k < 2:
        raise ValueError("k must be at least 2")
    n = len(seq)
    if n < k or n % k:
        return False
    L = n // k
    first = Counter(seq[:L])
    return all(Counter(seq[j * L : (j + 1) * L]) == first for j in range(1, k))


def count_colour_multisets(n: int, c: int) -> int:
    """Number of size-``n`` multisets over ``c`` colours (balls in boxes)."""
    if n < 0 or c < 1:
        raise ValueError("need n >= 0 and c >= 1")
    return comb(n + c - 1, c - 1)


def multiset_count_bound(n: int, c: int) -> int:
    """The cruder polynomial bound ``(n+1)**c``; each colour occurs 0..n times."""
    return (n + 1) ** c


@dataclass(frozen=True)
class AnagramWitness:
    """A path whose colour sequence is a ``k``-anagram under some colouring."""

    path: tuple[int, ...]
    k: int
    mode: str

    def __post_init__(self):
        object.__setattr__(self, "path", tuple(int(v) for v in self.path))

    @property
    def length(self) -> int:
        """Number of coloured elements on the path."""
        return len(self.path) - (self.mode == "edge")

    @property
    def block(self) -> int:
        return self.length // self.k

    def blocks(self, g: Graph, col: Colouring) -> list[list[int]]:
        seq = col.sequence(g, self.path)
        b = self.block
        return [seq[j * b : (j + 1) * b] for j in range(self.k)]

    def verify(self, g: Graph, col: Colouring) -> bool:
        """Re-check from scratch: valid simple path and a genuine k-anagram."""
        if col.mode != self.mode:
            return False
        try:
            col.check_total(g)
            validate_path(g, self.path)
        except (InvalidPath, ColouringError):
            return False
        return is_k_anagram(col.sequence(g, self.path), self.k)

    def format(self) -> str:
        return f"k={self.k} path={','.join(map(str, self.path))} blocks={self.block}"
