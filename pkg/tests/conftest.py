import random

import pytest
from hypothesis import strategies as st

from anagramfree.core import Graph, complete_tree, random_tree

CORPUS_SEED = 20240601
ACCEPTANCE_LINES: list[str] = []


def make_corpus(seed=CORPUS_SEED):
    """100 seeded random trees: 20 small ones (n <= 10) and 80 with n up to 400."""
    rng = random.Random(seed)
    sizes = [rng.randint(2, 10) for _ in range(20)] + [rng.randint(11, 400) for _ in range(80)]
    return [random_tree(n, random.Random(seed + i)) for i, n in enumerate(sizes)]


@pytest.fixture(scope="session")
def tree_corpus():
    return make_corpus()


@pytest.fixture(scope="session")
def small_trees(tree_corpus):
    return [t for t in tree_corpus if t.n <= 10]


@pytest.fixture(scope="session")
def binary_trees():
    return [complete_tree(2, h) for h in range(11)]


@st.composite
def trees(draw, min_n=1, max_n=12):
    """Trees from a parent array; shrinks towards paths and stars nicely."""
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    return Graph(n, [(p, i) for i, p in enumerate(parents, start=1)], root=0)


@st.composite
def coloured_trees(draw, mode="vertex", max_n=12, max_c=3):
    from anagramfree.core import Colouring

    t = draw(trees(min_n=2 if mode == "edge" else 1, max_n=max_n))
    size = t.n if mode == "vertex" else t.m
    c = draw(st.integers(1, max_c))
    ids = draw(st.lists(st.integers(0, c - 1), min_size=size, max_size=size))
    return t, Colouring.from_ids(mode, ids)


def record(criterion: int, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {criterion:2d}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
