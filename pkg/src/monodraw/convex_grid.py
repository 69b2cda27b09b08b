"""Strictly convex, monotone grid drawings of trees without degree-2 vertices.

``draw_inorder`` gives every edge its own primitive direction. Ranks from an
inorder-like traversal fix the counterclockwise order of the directions, and
each extended subtree of the root draws from a single 45-degree cone.
``draw_ce_grid`` spreads leaf edges evenly around a reflected Farey fan and
points every inner edge at the middle of its leaves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numba
import numpy as np

from .drawing import Drawing
from .primvec import farey_size, farey_vectors, map_to_cone, octant_fill, select_d_for
from .tree_model import RootedOrderedTree, degree2_vertices

__all__ = [
    "Degree2Error",
    "RankAssignment",
    "SlopePlan",
    "assign_ranks",
    "build_slope_plan",
    "draw_inorder",
    "draw_ce_grid",
    "working_tree",
]


class Degree2Error(ValueError):
    """The tree has a vertex of degree 2."""


@dataclass(frozen=True)
class RankAssignment:
    tree: RootedOrderedTree
    rank: np.ndarray  # rank[v] of the edge from parent(v) to v; 0 at the root

    def of(self, parent: str, child: str) -> int:
        t = self.tree
        c = t.index[child]
        if t.parent[c] != t.index[parent]:
            raise KeyError(f"({parent},{child}) is not a tree edge")
        return int(self.rank[c])


@dataclass(frozen=True)
class SlopePlan:
    tree: RootedOrderedTree        # the tree the plan refers to (root is inner)
    vectors: np.ndarray            # (n, 2): vector of the edge into v; zero at the root
    groups: tuple[tuple[int, int], ...]  # root-child index ranges [start, stop) per cone
    cones: tuple[str, ...]
    d: int
    ranks: RankAssignment


def assign_ranks(t: RootedOrderedTree) -> RankAssignment:
    """Leftmost subtree first, then the edge into the vertex, then the other subtrees."""
    ptr, flat = t.csr
    return RankAssignment(t, _ranks(ptr, flat, t.root))


@numba.njit(cache=True)
def _ranks(ptr, flat, root):
    n = len(ptr) - 1
    rank = np.zeros(n, dtype=np.int64)
    stack = np.empty(2 * n + 2, dtype=np.int64)  # entries 2v (fresh) or 2v+1 (expanded)
    top = 0
    stack[0] = 2 * root
    nxt = 1
    while top >= 0:
        e = stack[top]
        top -= 1
        v = e >> 1
        lo, hi = ptr[v], ptr[v + 1]
        if (e & 1) == 0 and hi > lo:
            top += 1
            stack[top] = e | 1
            top += 1
            stack[top] = 2 * flat[lo]
            continue
        if v != root:
            rank[v] = nxt
            nxt += 1
        for i in range(hi - 1, lo, -1):
            top += 1
            stack[top] = 2 * flat[i]
    return rank


def working_tree(t: RootedOrderedTree) -> RootedOrderedTree:
    """``t`` itself, or ``t`` re-hung from the neighbor of a leaf root."""
    if t.n > 2 and not t.children[t.root][1:]:
        return t.rerooted(t.children[t.root][0])
    return t


@numba.njit(cache=True)
def _subtree_sizes(order, parent):
    size = np.ones(len(order), dtype=np.int64)
    for i in range(len(order) - 1, 0, -1):
        v = order[i]
        size[parent[v]] += size[v]
    return size


def _three_groups(counts: np.ndarray) -> tuple[int, int]:
    """Split points ``0 < i < j < m`` minimizing the largest consecutive group sum."""
    m = len(counts)
    pre = np.concatenate([[0], np.cumsum(counts)])
    total = pre[-1]
    best = None
    i_all = np.arange(1, m - 1)
    # for each i the best j sits next to where the middle and last group balance
    target = pre[i_all] + (total - pre[i_all]) / 2
    js = np.searchsorted(pre, target)
    for i, j0 in zip(i_all.tolist(), js.tolist()):
        for j in (j0 - 1, j0):
            if i < j < m:
                worst = max(pre[i], pre[j] - pre[i], total - pre[j])
                if best is None or worst < best[0]:
                    best = (worst, i, j)
    return best[1], best[2]


def _cone_vectors(cone: str, interior: np.ndarray) -> np.ndarray:
    img = map_to_cone(interior, cone)
    # C2 turns the source cone by +90 degrees, which reverses the ccw order
    return img[::-1] if cone == "C2" else img


def build_slope_plan(t: RootedOrderedTree) -> SlopePlan:
    bad = degree2_vertices(t)
    if bad:
        raise Degree2Error(f"vertex {bad[0]!r} has degree 2; binarize or add a leaf first")
    w = working_tree(t)
    order = w.preorder_array
    ranks = assign_ranks(w)
    vectors = np.zeros((w.n, 2), dtype=np.int64)
    if w.n == 2:
        vectors[w.children[w.root][0]] = (1, 0)
        return SlopePlan(w, vectors, ((0, 1),), ("C1",), 1, ranks)
    kids = w.children[w.root]
    size = _subtree_sizes(order, w.parent_array)
    counts = size[list(kids)]
    # preorder position of each root child; an extended subtree is a contiguous slice
    pos = np.empty(w.n, dtype=np.int64)
    pos[order] = np.arange(w.n)
    i, j = _three_groups(counts)
    groups = ((0, i), (i, j), (j, len(kids)))
    need = max(int(counts[a:b].sum()) for a, b in groups)
    d = select_d_for(need + 2)
    interior = farey_vectors(d)[1:-1]  # drop the 0/1 and 1/1 boundary slopes
    cones = ("C1", "C2", "C3")
    # ranks of an extended subtree form a contiguous block; rank order = ccw order
    for (a, b), cone in zip(groups, cones):
        if a == b:
            continue
        pool = _cone_vectors(cone, interior)
        if int(counts[a:b].sum()) > len(pool):
            raise RuntimeError("internal error: not enough cone vectors")
        block = order[pos[kids[a]]:pos[kids[b - 1]] + size[kids[b - 1]]]
        r = ranks.rank[block]
        vectors[block] = pool[r - r.min()]
    return SlopePlan(w, vectors, groups, cones, d, ranks)


@numba.njit(cache=True)
def _accumulate(order, parent, vx, vy):
    x = np.zeros(len(order), dtype=np.int64)
    y = np.zeros(len(order), dtype=np.int64)
    for v in order:
        p = parent[v]
        if p >= 0:
            x[v] = x[p] + vx[v]
            y[v] = y[p] + vy[v]
    return x, y


def _place(t: RootedOrderedTree, w: RootedOrderedTree, vectors: np.ndarray, meta: dict) -> Drawing:
    x, y = _accumulate(w.preorder_array, w.parent_array, np.ascontiguousarray(vectors[:, 0]),
                       np.ascontiguousarray(vectors[:, 1]))
    # the caller's root goes to the origin even if the work happened elsewhere
    x -= x[t.root]
    y -= y[t.root]
    return Drawing(t, x, y, "int", meta)


def draw_inorder(t: RootedOrderedTree) -> Drawing:
    """Strictly convex monotone drawing on an ``O(n^1.5)`` grid, root at the origin."""
    plan = build_slope_plan(t)
    return _place(t, plan.tree, plan.vectors, {"algo": "inorder", "d": plan.d})


@numba.njit(cache=True)
def _leaf_counts(order, parent, is_leaf):
    leaves = is_leaf.astype(np.int64)
    for i in range(len(order) - 1, 0, -1):
        v = order[i]
        leaves[parent[v]] += leaves[v]
    return leaves


def _leaf_centroid(t: RootedOrderedTree) -> int:
    """An inner vertex none of whose hanging subtrees holds more than half of the leaves."""
    order, par = t.preorder_array, t.parent_array
    leaves = _leaf_counts(order, par, t.degrees == 1)
    total = int(leaves[t.root])
    # largest hanging part per vertex: the part above it, then each child subtree
    worst = total - leaves
    np.maximum.at(worst, par[par >= 0], leaves[par >= 0])
    ok = np.flatnonzero((t.degrees > 1) & (2 * worst <= total))
    return int(ok[0]) if len(ok) else t.root


@numba.njit(cache=True)
def _leaf_ranges(order, ptr, flat, is_leaf):
    n = len(order)
    first = np.zeros(n, dtype=np.int64)
    last = np.zeros(n, dtype=np.int64)
    k = 0
    for v in order:
        if is_leaf[v]:
            first[v] = last[v] = k
            k += 1
    for i in range(n - 1, -1, -1):
        v = order[i]
        if not is_leaf[v]:
            first[v] = first[flat[ptr[v]]]
            last[v] = last[flat[ptr[v + 1] - 1]]
    return first, last


def draw_ce_grid(t: RootedOrderedTree) -> Drawing:
    """Convex grid drawing with leaf edges on every other vector of a ``2k`` fan."""
    bad = degree2_vertices(t)
    if bad:
        raise Degree2Error(f"vertex {bad[0]!r} has degree 2; binarize or add a leaf first")
    w = t.rerooted(_leaf_centroid(t)) if t.n > 2 else t
    is_leaf = w.degrees == 1
    k = int(is_leaf.sum())
    d = select_d_for(math.ceil(2 * k / 8) + 1)
    full = octant_fill(farey_vectors(d))
    n_full = len(full)
    fan = full[np.rint(np.arange(2 * k) * (n_full / (2 * k))).astype(np.int64)]
    ptr, flat = w.csr
    first, last = _leaf_ranges(w.preorder_array, ptr, flat, is_leaf)
    # a leaf gets slot 2i; an inner edge the middle slot of its leaf range
    vectors = fan[(first + last) % (2 * k)]
    vectors[w.root] = 0
    if w.n == 2:
        vectors[w.children[w.root][0]] = fan[0]
    return _place(t, w, vectors, {"algo": "ce", "d": d, "fan": 2 * k})
