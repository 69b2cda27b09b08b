"""Outerplanar graphs on a convex lattice chain.

The outer cycle ``v_1, ..., v_n`` is laid out as a path whose steps are
distinct primitive vectors with positive coordinates, taken in decreasing
slope order. The chain is then x- and y-monotone and convex, and the vector
between any two vertices points strictly into the first quadrant, so every
chord and the closing edge stay inside the convex polygon.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .drawing import Drawing
from .primvec import farey_size, farey_vectors
from .tree_model import PlaneOuterGraph

__all__ = ["chain_vectors", "chain_order", "draw_outerchain"]


def chain_order(count: int) -> int:
    """Smallest Farey order offering ``count`` positive vectors (with mirror images)."""
    d = 1
    while 2 * farey_size(d) - 3 < count:
        d += 1
    return d


def chain_vectors(count: int) -> np.ndarray:
    """``count`` distinct primitive vectors with both coordinates >= 1, slope decreasing.

    Mirror pairs ``(x, y), (y, x)`` are taken shortest first; ``(1, 1)`` is
    used only when ``count`` is odd.
    """
    if count < 0:
        raise ValueError("count must be non-negative")
    if count == 0:
        return np.zeros((0, 2), dtype=np.int64)
    d = chain_order(count)
    below = [(x, y) for x, y in farey_vectors(d).tolist() if 0 < x < y]
    below.sort(key=lambda v: (v[1], v[0]))
    picked = [(1, 1)] if count % 2 else []
    for x, y in below[:count // 2]:
        picked += [(x, y), (y, x)]
    picked.sort(key=lambda v: Fraction(v[1], v[0]), reverse=True)
    return np.array(picked, dtype=np.int64)


def draw_outerchain(g: PlaneOuterGraph) -> Drawing:
    """Integer drawing with ``v_1`` at the origin and the cycle on a convex chain."""
    vecs = chain_vectors(g.n - 1)
    steps = np.vstack([np.zeros((1, 2), dtype=np.int64), np.cumsum(vecs, axis=0)])
    x = np.zeros(g.n, dtype=np.int64)
    y = np.zeros(g.n, dtype=np.int64)
    order = [g.index[v] for v in g.cycle]
    x[order], y[order] = steps[:, 0], steps[:, 1]
    d = chain_order(g.n - 1) if g.n > 1 else 1
    return Drawing(g, x, y, "int", {"algo": "outerchain", "d": d,
                                    "max_vector_coordinate": int(vecs.max()) if len(vecs) else 0})
