import random

import pytest
from hypothesis import given, settings, strategies as st

from anagramfree.adversary import (
    GadgetSpec,
    MultisetFamily,
    build,
    degree_family_height,
    find_anagram_dary,
    find_anagram_edge_tree,
    find_anagram_vertex_graph,
    find_kanagram_gadget,
    height_family_params,
    kpower_order,
    min_parameter,
    premise_ok,
)
from anagramfree.core import Colouring, count_colour_multisets
from anagramfree.errors import GraphError, PremiseViolated

from oracles import uv_paths


def rand_col(g, mode, c, seed):
    rng = random.Random(seed)
    size = g.n if mode == "vertex" else g.m
    return Colouring.from_ids(mode, [rng.randrange(c) for _ in range(size)])


# specs and builders

@pytest.mark.parametrize(
    "kwargs",
    [
        dict(family="nope", h=2),
        dict(family="edge_binary_tree"),
        dict(family="edge_binary_tree", h=0),
        dict(family="sibling_graph", h=4),
        dict(family="complete_dary", h=2),
        dict(family="kpower_gadget", k=1, t=2),
        dict(family="kpower_gadget", k=3, t=0),
    ],
)
def test_invalid_specs(kwargs):
    with pytest.raises(GraphError):
        GadgetSpec(**kwargs)


def test_build_dary():
    g = build(GadgetSpec("complete_dary", d=2, h=2)).graph
    assert g.n == 7 and g.max_degree() == 3
    assert len(build(GadgetSpec("complete_dary", d=4, h=4)).leaves) == 256


def test_build_sibling_graph():
    gad = build(GadgetSpec("sibling_graph", h=1))
    assert (gad.graph.n, gad.graph.m) == (3, 3)
    for h in (3, 9, 17):
        gad = build(GadgetSpec("sibling_graph", h=h))
        assert gad.graph.max_degree() <= 3
        assert len(gad.leaves) == 2 ** ((h + 1) // 2)
        assert all(gad.depth[x] == h for x in gad.leaves)


def test_build_kpower_base():
    gad = build(GadgetSpec("kpower_gadget", k=4, t=1))
    g, node = gad.graph, gad.knode
    assert g.n == 8 and len(node.path) == 4
    assert g.degree(node.a) == g.degree(node.b) == 5
    assert g.degree(node.u) == g.degree(node.v) == 1


@pytest.mark.parametrize("k,t", [(2, 1), (2, 4), (3, 3), (4, 2), (5, 2)])
def test_kpower_degree_certificate(k, t):
    gad = build(GadgetSpec("kpower_gadget", k=k, t=t))
    assert gad.graph.n == kpower_order(k, t)
    assert gad.graph.max_degree() <= k + 1
    assert gad.graph.degree(gad.knode.u) == gad.graph.degree(gad.knode.v) == 1


@pytest.mark.parametrize("k,t", [(2, 1), (2, 5), (3, 2), (3, 4), (3, 5), (4, 3)])
def test_kpower_uv_path_count(k, t):
    gad = build(GadgetSpec("kpower_gadget", k=k, t=t))
    paths = uv_paths(gad.graph, gad.knode.u, gad.knode.v, 4 * t)
    assert len(paths) == k**t
    shared = {gad.knode.u, gad.knode.a, gad.knode.b, gad.knode.v}
    assert all(shared <= set(p) for p in paths)


# premises

def test_premise_examples():
    assert premise_ok(GadgetSpec("edge_binary_tree", h=6), 2)
    assert not premise_ok(GadgetSpec("edge_binary_tree", h=5), 2)
    assert premise_ok(GadgetSpec("complete_dary", d=4, h=4), 2)
    assert not premise_ok(GadgetSpec("complete_dary", d=4, h=3), 2)
    assert premise_ok(GadgetSpec("sibling_graph", h=17), 2)
    assert not premise_ok(GadgetSpec("sibling_graph", h=15), 2)
    assert premise_ok(GadgetSpec("kpower_gadget", k=3, t=10), 1)


def test_min_parameters():
    # frozen from a linear scan of premise_ok
    assert min_parameter("edge_binary_tree", 1) == 2
    assert min_parameter("edge_binary_tree", 2) == 6
    assert min_parameter("edge_binary_tree", 3) == 11
    assert min_parameter("sibling_graph", 1) == 5
    assert min_parameter("sibling_graph", 2) == 17
    assert min_parameter("complete_dary", 2, d=4) == 4
    assert min_parameter("kpower_gadget", 1, k=3) == 9


def test_height_and_degree_families():
    d, h = height_family_params(2)
    assert (d, h) == (8, 3) and premise_ok(GadgetSpec("complete_dary", d=d, h=h), 2)
    for c in (2, 3, 4):
        h = degree_family_height(c)
        assert premise_ok(GadgetSpec("complete_dary", d=c + 1, h=h), c)
        assert not premise_ok(GadgetSpec("complete_dary", d=c + 1, h=h - 1), c)


def test_leaf_counts_beat_multiset_counts():
    for h in range(6, 12):
        assert 2**h > count_colour_multisets(h, 2)


# edge binary tree

def test_edge_tree_monochrome():
    gad = build(GadgetSpec("edge_binary_tree", h=2))
    col = Colouring("edge", (0,) * gad.graph.m)
    w = find_anagram_edge_tree(gad, col)
    assert w.length == 2 and w.verify(gad.graph, col)


def _depth_col(gad, f):
    g = gad.graph
    return Colouring.from_ids("edge", [f(max(gad.depth[u], gad.depth[v]), u, v) for u, v in g.edges])


@pytest.mark.parametrize(
    "rule",
    [lambda d, u, v: d % 2, lambda d, u, v: d, lambda d, u, v: max(u, v) % 2, lambda d, u, v: 0],
    ids=["parity", "depth", "sibling", "constant"],
)
def test_edge_tree_structured(rule):
    gad = build(GadgetSpec("edge_binary_tree", h=7))
    col = _depth_col(gad, rule)
    assert find_anagram_edge_tree(gad, col).verify(gad.graph, col)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32))
def test_edge_tree_random(seed):
    gad = build(GadgetSpec("edge_binary_tree", h=6))
    col = rand_col(gad.graph, "edge", 2, seed)
    assert find_anagram_edge_tree(gad, col).verify(gad.graph, col)


def test_edge_tree_refuses():
    gad = build(GadgetSpec("edge_binary_tree", h=1))
    with pytest.raises(PremiseViolated):
        find_anagram_edge_tree(gad, Colouring("edge", (0, 1)))
    gad = build(GadgetSpec("edge_binary_tree", h=5))
    col = rand_col(gad.graph, "edge", 2, 0)
    with pytest.raises(PremiseViolated):
        find_anagram_edge_tree(gad, col, strict=True)
    # without strict the counting step still succeeds: only 6 multisets exist
    assert find_anagram_edge_tree(gad, col).verify(gad.graph, col)


def test_wrong_gadget_or_mode():
    gad = build(GadgetSpec("edge_binary_tree", h=2))
    with pytest.raises(GraphError):
        find_anagram_edge_tree(gad, Colouring("vertex", (0,) * 7))
    with pytest.raises(GraphError):
        find_anagram_dary(gad, Colouring("vertex", (0,) * 7))


# sibling graph

@pytest.mark.parametrize("h", [1, 3])
def test_sibling_single_colour(h):
    gad = build(GadgetSpec("sibling_graph", h=h))
    col = Colouring("vertex", (0,) * gad.graph.n)
    w = find_anagram_vertex_graph(gad, col)
    assert w.verify(gad.graph, col)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32))
def test_sibling_random(seed):
    gad = build(GadgetSpec("sibling_graph", h=17))
    col = rand_col(gad.graph, "vertex", 2, seed)
    assert find_anagram_vertex_graph(gad, col).verify(gad.graph, col)


def test_sibling_refuses():
    gad = build(GadgetSpec("sibling_graph", h=1))
    with pytest.raises(PremiseViolated):
        find_anagram_vertex_graph(gad, Colouring("vertex", (0, 0, 1)))


# complete d-ary tree

def test_dary_smallest():
    gad = build(GadgetSpec("complete_dary", d=2, h=1))
    col = Colouring("vertex", (0, 0, 0))
    w = find_anagram_dary(gad, col)
    # n = 1: a leaf and the root, both in the single colour
    assert len(w.path) == 2 and 0 in w.path and w.verify(gad.graph, col)


def test_dary_by_level():
    gad = build(GadgetSpec("complete_dary", d=4, h=4))
    col = Colouring.from_ids("vertex", [gad.depth[v] % 2 for v in range(gad.graph.n)])
    assert find_anagram_dary(gad, col).verify(gad.graph, col)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32))
def test_dary_random(seed):
    gad = build(GadgetSpec("complete_dary", d=4, h=4))
    col = rand_col(gad.graph, "vertex", 2, seed)
    assert find_anagram_dary(gad, col).verify(gad.graph, col)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32))
def test_dary_height_family(seed):
    d, h = height_family_params(2)
    gad = build(GadgetSpec("complete_dary", d=d, h=h))
    col = rand_col(gad.graph, "vertex", 2, seed)
    assert find_anagram_dary(gad, col).verify(gad.graph, col)


def test_dary_refuses():
    gad = build(GadgetSpec("complete_dary", d=2, h=1))
    with pytest.raises(PremiseViolated):
        find_anagram_dary(gad, Colouring("vertex", (0, 0, 1)))


# k-power gadget

def test_kpower_monochrome_base():
    gad = build(GadgetSpec("kpower_gadget", k=2, t=1))
    col = Colouring("vertex", (0,) * gad.graph.n)
    w = find_kanagram_gadget(gad, col)
    assert w.k == 2 and w.verify(gad.graph, col)


def test_kpower_base_family():
    gad = build(GadgetSpec("kpower_gadget", k=3, t=1))
    ids = [0] * gad.graph.n
    ids[gad.knode.path[1]] = 1
    col = Colouring("vertex", tuple(ids))
    fam = find_kanagram_gadget(gad, col)
    assert isinstance(fam, MultisetFamily) and fam.size == 2 and fam.verify(gad, col)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32), st.sampled_from([(2, 3, 3), (3, 2, 3), (3, 3, 4), (3, 4, 5)]))
def test_kpower_random(seed, params):
    k, t, c = params
    gad = build(GadgetSpec("kpower_gadget", k=k, t=t))
    col = rand_col(gad.graph, "vertex", c, seed)
    res = find_kanagram_gadget(gad, col)
    if isinstance(res, MultisetFamily):
        assert res.meets_bound() and res.size >= (k / (k - 1)) ** t
        assert res.verify(gad, col)
    else:
        assert res.k == k and res.verify(gad.graph, col)


def test_kpower_family_branch_is_reached():
    gad = build(GadgetSpec("kpower_gadget", k=3, t=3))
    kinds = {type(find_kanagram_gadget(gad, rand_col(gad.graph, "vertex", 4, s))).__name__ for s in range(40)}
    assert kinds == {"AnagramWitness", "MultisetFamily"}


def test_kpower_stitched_path_spans_copies():
    gad = build(GadgetSpec("kpower_gadget", k=3, t=2))
    node = gad.knode
    # every copy's base path monochromatic in a different colour blocks the base case,
    # so colour each copy's centre path with two colours and everything else alike
    ids = [0] * gad.graph.n
    for kid in node.children:
        ids[kid.path[0]] = 1
    col = Colouring.from_ids("vertex", ids)
    w = find_kanagram_gadget(gad, col)
    assert w.verify(gad.graph, col) and w.block == 5
