"""Abelian-power-free words: morphic generators, a checker and exhaustive search.

Words are tuples of symbol ids ``0..alphabet-1``; ``core.io.word_to_str``
renders them over ``abcd...``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .errors import MorphismStall

Word = tuple[int, ...]


@dataclass(frozen=True)
class Morphism:
    alphabet_size: int
    images: tuple[Word, ...]

    def __post_init__(self):
        if len(self.images) != self.alphabet_size:
            raise ValueError("need one image per symbol")
        for img in self.images:
            if not img:
                raise ValueError("images must be non-empty")
            if any(not 0 <= x < self.alphabet_size for x in img):
                raise ValueError(f"image {img} leaves the alphabet")

    @classmethod
    def from_strings(cls, *images: str) -> Morphism:
        return cls(len(images), tuple(tuple(ord(ch) - ord("a") for ch in img) for img in images))

    def apply(self, word: Sequence[int]) -> Word:
        out: list[int] = []
        for x in word:
            out.extend(self.images[x])
        return tuple(out)


def iterate_morphism(m: Morphism, seed: Sequence[int], min_len: int) -> Word:
    """Substitute repeatedly from ``seed`` and return the first ``min_len`` symbols."""
    if min_len < 1:
        raise ValueError("min_len must be at least 1")
    word = tuple(seed)
    if not word:
        raise MorphismStall("empty seed")
    while len(word) < min_len:
        nxt = m.apply(word)
        if len(nxt) <= len(word):
            raise MorphismStall(f"morphism stopped growing at length {len(word)} < {min_len}")
        word = nxt
    return word[:min_len]


# Keränen's 85-uniform morphism on {a,b,c,d}: the image of a is stored, the
# others follow by the cyclic rotation a->b->c->d->a.
KERANEN_A = (
    "abcacdcbcdcadcdbdabacabadbabcbdbcbacbcdcacb"
    "abdabacadcbcdcacdbcbacbcdcacdcbdcdadbdcbca"
)


def _rotated(img: str, shift: int) -> Word:
    return tuple((ord(ch) - ord("a") + shift) % 4 for ch in img)


KERANEN = Morphism(4, tuple(_rotated(KERANEN_A, s) for s in range(4)))

# Dekking: abelian-cube-free on three letters, abelian-fourth-power-free on two.
DEKKING_3 = Morphism.from_strings("aabc", "bbc", "acc")
DEKKING_4 = Morphism.from_strings("abb", "aaab")


def keranen_prefix(n: int) -> Word:
    """Anagram-free word of length ``n`` on four symbols."""
    return iterate_morphism(KERANEN, (0,), n)


def dekking_prefix(power: int, n: int) -> Word:
    """``power``-anagram-free word of length ``n``: 3 symbols for power 3, 2 for power 4."""
    if power == 3:
        return iterate_morphism(DEKKING_3, (0,), n)
    if power == 4:
        return iterate_morphism(DEKKING_4, (0,), n)
    raise ValueError(f"unsupported power {power}; choose 3 or 4")


def free_word(z: int, n: int) -> Word:
    """A ``z``-anagram-free word of length ``n`` on as few symbols as the constructions allow."""
    if n <= 0:
        return ()
    if z == 2:
        return keranen_prefix(n)
    return dekking_prefix(z, n)


def _prefix_counts(w: Sequence[int]) -> np.ndarray:
    w = np.asarray(w, dtype=np.int64)
    a = int(w.max()) + 1 if len(w) else 1
    onehot = np.zeros((len(w) + 1, a), dtype=np.int32)
    onehot[np.arange(1, len(w) + 1), w] = 1
    return np.cumsum(onehot, axis=0)


def k_anagram_free_word(w: Sequence[int], k: int = 2) -> tuple[int, int] | None:
    """``None`` if no factor of ``w`` is a k-anagram, else ``(start, length)``.

    The reported factor is the leftmost one, and the shortest among those
    starting there.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    n = len(w)
    if n < k:
        return None
    P = _prefix_counts(w)
    best: tuple[int, int] | None = None
    for L in range(1, n // k + 1):
        starts = n - k * L + 1
        if best is not None and best[0] == 0:
            break
        first = P[L : L + starts] - P[:starts]
        ok = np.ones(starts, dtype=bool)
        for j in range(1, k):
            ok &= np.all(P[(j + 1) * L : (j + 1) * L + starts] - P[j * L : j * L + starts] == first, axis=1)
        if ok.any():
            i = int(np.argmax(ok))
            if best is None or i < best[0]:
                best = (i, k * L)
    return best


class SearchResult(NamedTuple):
    length: int
    word: Word
    reached_cap: bool


def max_anagram_free_length(alphabet: int, k: int = 2, cap: int = 100) -> SearchResult:
    """Longest k-anagram-free word over ``alphabet`` symbols, by exhaustive backtracking.

    Stops as soon as a word of length ``cap`` is found. Symbols are introduced
    in order (a new symbol is always the smallest unused one), which keeps the
    search exhaustive up to renaming.
    """
    if alphabet < 1 or cap < 1:
        raise ValueError("alphabet and cap must be positive")
    if k < 2:
        raise ValueError("k must be at least 2")
    P = np.zeros((cap + 1, alphabet), dtype=np.int32)
    word: list[int] = []
    best: Word = ()
    choice = [0]
    # iterative DFS; choice[i] is the next symbol to try at position i
    while choice:
        pos = len(word)
        x = choice[-1]
        limit = min(alphabet, (max(word) + 2) if word else 1)
        if x >= limit:
            choice.pop()
            if word:
                word.pop()
            continue
        choice[-1] = x + 1
        N = pos + 1
        P[N] = P[pos]
        P[N, x] += 1
        if _suffix_is_free(P, N, k):
            word.append(x)
            if len(word) > len(best):
                best = tuple(word)
                if len(best) >= cap:
                    return SearchResult(len(best), best, True)
            choice.append(0)
    return SearchResult(len(best), best, False)


def _suffix_is_free(P: np.ndarray, N: int, k: int) -> bool:
    """No suffix of the length-``N`` word is a k-anagram (earlier factors already checked)."""
    Ls = np.arange(1, N // k + 1)
    if not len(Ls):
        return True
    first = P[N - (k - 1) * Ls] - P[N - k * Ls]
    same = np.ones(len(Ls), dtype=bool)
    for j in range(1, k):
        same &= np.all(P[N - (k - 1 - j) * Ls] - P[N - (k - j) * Ls] == first, axis=1)
    return not same.any()
