"""Invariants checked over generated inputs."""

import json
import random

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from monodraw import (
    Drawing,
    RootedOrderedTree,
    binarize,
    check_convex,
    check_crossing_free,
    check_monotone,
    check_strictly_convex,
    check_strong_monotone,
    draw_ce_grid,
    draw_inorder,
    draw_outerchain,
    draw_strong,
    drawing_from_json,
    gen_random_tree,
    half_plane_monotone,
    oracle_monotone_pair,
    parse_graph,
    parse_tree,
    project_drawing,
    random_outerplanar,
)
from conftest import path_drawing

small_vectors = st.tuples(st.integers(-5, 5), st.integers(-5, 5)).filter(lambda v: v != (0, 0))


@st.composite
def random_trees(draw, max_n=40, no_deg2=False):
    n = draw(st.integers(2 if not no_deg2 else 4, max_n))
    seed = draw(st.integers(0, 10**6))
    max_deg = draw(st.integers(3, 6))
    if no_deg2 and max_deg == 3 and n % 2:
        n += 1  # leaves and degree-3 vertices alone only make even trees
    return gen_random_tree(n, max_deg, seed, no_deg2=no_deg2)


@st.composite
def scribbles(draw):
    """A small tree with arbitrary integer coordinates (no zero-length edge)."""
    t = draw(random_trees(max_n=7))
    pts = draw(st.lists(st.tuples(st.integers(-6, 6), st.integers(-6, 6)),
                        min_size=t.n, max_size=t.n))
    x = np.array([p[0] for p in pts], dtype=np.int64)
    y = np.array([p[1] for p in pts], dtype=np.int64)
    e = t.edges
    assume(not np.any((x[e[:, 0]] == x[e[:, 1]]) & (y[e[:, 0]] == y[e[:, 1]])))
    return Drawing(t, x, y, "int")


def test_exact_criterion_matches_oracle_on_many_paths():
    rng = random.Random(2024)
    for _ in range(10_000):
        k = rng.randint(1, 5)
        vs = []
        while len(vs) < k:
            v = (rng.randint(-4, 4), rng.randint(-4, 4))
            if v != (0, 0):
                vs.append(v)
        expected = oracle_monotone_pair(vs, samples=64)
        assert half_plane_monotone(vs) == expected, vs
        assert bool(check_monotone(path_drawing(vs))) == expected, vs


@given(st.lists(small_vectors, min_size=1, max_size=6))
def test_half_plane_agrees_with_oracle(vs):
    assert half_plane_monotone(vs) == oracle_monotone_pair(vs)


@given(scribbles())
def test_convex_implies_crossing_free(d):
    if check_convex(d):
        assert check_crossing_free(d)
    if check_strictly_convex(d):
        assert check_convex(d)


@given(scribbles())
def test_strong_implies_monotone(d):
    if check_strong_monotone(d):
        assert check_monotone(d)


@given(scribbles(), st.integers(1, 7), st.integers(-50, 50), st.integers(-50, 50))
def test_verdicts_invariant_under_scaling_and_translation(d, k, tx, ty):
    moved = Drawing(d.graph, d.x * k + tx, d.y * k + ty, "int")
    for check in (check_crossing_free, check_monotone, check_convex, check_strictly_convex,
                  check_strong_monotone):
        assert bool(check(d)) == bool(check(moved))


@given(scribbles())
def test_failure_witnesses_reproduce(d):
    r = check_monotone(d)
    if not r:
        vecs = [(int(a), int(b)) for a, b in r.witness["edge_vectors"]]
        assert not oracle_monotone_pair(vecs)
    s = check_strong_monotone(d)
    if not s:
        # the path between the witness pair has an edge against the pair direction
        t = d.graph
        a, b = (t.index[v] for v in s.witness["pair"])
        from monodraw.verify import _tree_path
        path = _tree_path(t, a, b)
        wx, wy = d.x[b] - d.x[a], d.y[b] - d.y[a]
        dots = [(d.x[q] - d.x[p]) * wx + (d.y[q] - d.y[p]) * wy for p, q in zip(path, path[1:])]
        assert min(dots) <= 0


@given(random_trees(max_n=120, no_deg2=True))
def test_inorder_outputs(t):
    d = draw_inorder(t)
    assert check_strictly_convex(d)
    assert check_crossing_free(d)
    assert check_monotone(d)


@given(random_trees(max_n=80, no_deg2=True))
def test_ce_outputs(t):
    d = draw_ce_grid(t)
    assert check_convex(d) and check_crossing_free(d)


@given(random_trees(max_n=25))
def test_strong_outputs(t):
    d = draw_strong(t)
    assert check_strong_monotone(d, 1e-9)
    assert check_monotone(d)


@given(st.integers(3, 60), st.integers(0, 10**6), st.floats(0, 1))
def test_outerchain_outputs(n, seed, p):
    d = draw_outerchain(random_outerplanar(n, seed, p))
    assert check_crossing_free(d) and check_strictly_convex(d) and check_strong_monotone(d)


@given(random_trees(max_n=60))
def test_binarize_degree_audit(t):
    b, m = binarize(t)
    assert len(b.children[b.root]) == 2
    assert all(len(c) in (0, 2) for v, c in enumerate(b.children) if v != b.root)
    assert set(m.dummies).isdisjoint(t.labels)
    assert set(b.labels) == set(t.labels) | set(m.dummies)
    for lab in t.labels:
        assert m.paths[lab][0] == lab
    # original edges survive as edges between path members
    up = {b.labels[c]: b.labels[v] for v in range(b.n) for c in b.children[v]}
    for p, c in t.edges.tolist():
        pl, cl = t.labels[p], t.labels[c]
        assert up.get(cl) in m.paths[pl] or up.get(pl) in m.paths[cl] or \
            {up.get(cl), up.get(pl)} & set(m.dummies[:1])


@given(random_trees(max_n=40).filter(lambda t: max(t.degrees) <= 3))
def test_projection_keeps_strong_monotonicity(t):
    d = draw_strong(t, method="binarize")
    assert check_strong_monotone(d, 1e-9)


@given(random_trees(max_n=50))
def test_tree_round_trips(t):
    assert parse_tree(t.to_json()) == t
    assert parse_tree(t.to_paren()) == t


@given(st.integers(3, 40), st.integers(0, 1000))
def test_graph_round_trip(n, seed):
    g = random_outerplanar(n, seed)
    assert parse_graph(json.dumps(g.to_dict())) == g


@given(random_trees(max_n=30, no_deg2=True))
def test_drawing_round_trips(t):
    for d in (draw_inorder(t), draw_strong(t)):
        back = drawing_from_json(d.to_json())
        assert back.kind == d.kind
        assert all(back.point(lab) == d.point(lab) for lab in t.labels)
        assert back.to_json() == d.to_json()


def test_float64_round_trip():
    t = gen_random_tree(20, 4, seed=1)
    d = draw_strong(t)
    f = Drawing(t, np.array([float(v) for v in d.x]), np.array([float(v) for v in d.y]), "float64")
    back = drawing_from_json(f.to_json())
    assert all(back.point(lab) == f.point(lab) for lab in t.labels)


@given(random_trees(max_n=40, no_deg2=True))
def test_pipelines_are_deterministic(t):
    assert draw_inorder(t).to_json() == draw_inorder(t).to_json()
    assert draw_ce_grid(t).to_json() == draw_ce_grid(t).to_json()


def test_zero_length_edge_rejected():
    t = RootedOrderedTree.from_children("a", {"a": ["b"]})
    with pytest.raises(ValueError, match="length zero"):
        Drawing(t, np.array([1, 1]), np.array([2, 2]), "int")
