"""Primitive integer vectors from Farey sequences, cone images and exact angles.

A vector set is an ``(m, 2)`` int64 array of ``(x, y)`` rows. ``farey_vectors(d)``
returns the fractions ``x/y`` of the Farey sequence of order ``d`` as vectors,
which all point into the closed cone between 45 and 90 degrees.
"""

from __future__ import annotations

import math
from functools import cmp_to_key
from typing import NamedTuple, Sequence

import numba
import numpy as np

__all__ = [
    "PrimitiveVector",
    "farey_vectors",
    "farey_size",
    "select_d_for",
    "verify_neighbor_identity",
    "map_to_cone",
    "octant_fill",
    "sort_by_angle",
    "angle_less",
    "min_pairwise_angle",
    "separation_bound",
    "CONES",
]


class PrimitiveVector(NamedTuple):
    x: int
    y: int


# name -> (matrix applied to a source vector (x, y), closed angular range in degrees)
CONES = {
    "C1": (((0, 1), (1, 0)), (0, 45)),
    "C2": (((0, -1), (1, 0)), (135, 180)),
    "C3": (((1, 0), (0, -1)), (270, 315)),
}


def farey_vectors(d: int) -> np.ndarray:
    """All ``(x, y)`` with ``0 <= x <= y <= d`` and ``gcd(x, y) = 1``, by increasing ``x/y``."""
    if d < 1:
        raise ValueError("d must be positive")
    return _farey(d, farey_size(d))


@numba.njit(cache=True)
def _farey(d, size):
    out = np.empty((size, 2), dtype=np.int64)
    a, b, c, e = 0, 1, 1, d
    out[0, 0], out[0, 1] = 0, 1
    i = 1
    while c <= d:
        out[i, 0], out[i, 1] = c, e
        i += 1
        k = (d + b) // e
        a, b, c, e = c, e, k * c - a, k * e - b
    return out


def farey_size(d: int) -> int:
    """``1 + sum(phi(m) for m <= d)`` via a totient sieve."""
    return int(_farey_size(d))


@numba.njit(cache=True)
def _farey_size(d):
    phi = np.arange(d + 1)
    for p in range(2, d + 1):
        if phi[p] == p:
            for m in range(p, d + 1, p):
                phi[m] -= phi[m] // p
    return 1 + phi[1:].sum()


def select_d_for(k: int) -> int:
    """Smallest order at or above ``ceil(pi**2 sqrt(k) / 3)`` with at least ``k`` vectors."""
    if k < 1:
        raise ValueError("k must be positive")
    d = math.ceil(math.pi ** 2 * math.sqrt(k) / 3)
    while farey_size(d) < k:
        d += 1
    return d


def verify_neighbor_identity(vs: np.ndarray) -> bool:
    """True iff every consecutive pair ``p/q, r/s`` satisfies ``q r - p s = 1``."""
    vs = np.asarray(vs, dtype=np.int64)
    if len(vs) < 2:
        return True
    p, q = vs[:-1, 0], vs[:-1, 1]
    r, s = vs[1:, 0], vs[1:, 1]
    return bool(np.all(q * r - p * s == 1))


def map_to_cone(vs: np.ndarray, cone: str) -> np.ndarray:
    """Image of Farey vectors in cone ``C1``, ``C2``, ``C3`` or the whole plane (``"fill"``)."""
    vs = np.asarray(vs, dtype=np.int64).reshape(-1, 2)
    x, y = vs[:, 0], vs[:, 1]
    if np.any(x < 0) or np.any(x > y) or np.any(y <= 0):
        bad = vs[(x < 0) | (x > y) | (y <= 0)][0]
        raise ValueError(f"vector {tuple(bad)} is outside the 45-90 degree source cone")
    if cone == "fill":
        return octant_fill(vs)
    (a, b), (c, e) = CONES[cone][0]
    return np.stack([a * x + b * y, c * x + e * y], axis=1)


def octant_fill(vs: np.ndarray) -> np.ndarray:
    """All eight signed/swapped images, distinct, in counterclockwise order.

    The order starts at the diagonal (1, 1), so the source cone comes first.
    """
    vs = np.asarray(vs, dtype=np.int64).reshape(-1, 2)
    x, y = vs[:, 0], vs[:, 1]
    images = np.concatenate([np.stack([sx * u, sy * v], axis=1)
                             for u, v in ((x, y), (y, x)) for sx in (1, -1) for sy in (1, -1)])
    images = np.unique(images, axis=0)
    if len(images) and np.abs(images).max() < 1 << 20:
        # distinct primitive directions this small differ by far more than float error
        ang = np.arctan2(images[:, 1], images[:, 0]) - math.pi / 4
        ordered = images[np.argsort(np.mod(ang, 2 * math.pi), kind="stable")]
        if not np.any(np.all(images == (1, 1), axis=1)):
            ordered = images[np.argsort(np.mod(ang + math.pi / 4, 2 * math.pi), kind="stable")]
        return ordered
    ordered = sort_by_angle(images.tolist())
    if (1, 1) in ordered:
        start = ordered.index((1, 1))
        ordered = ordered[start:] + ordered[:start]
    return np.array(ordered, dtype=np.int64).reshape(-1, 2)


def _half(v) -> int:
    x, y = v
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _ccw_cmp(u, v) -> int:
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu - hv
    cr = u[0] * v[1] - u[1] * v[0]
    return -1 if cr > 0 else (1 if cr < 0 else 0)


def sort_by_angle(vectors: Sequence) -> list[tuple[int, int]]:
    """Exact counterclockwise sort starting at the positive x-axis."""
    return sorted((tuple(int(c) for c in v) for v in vectors), key=cmp_to_key(_ccw_cmp))


def angle_less(a: tuple[int, int], b: tuple[int, int]) -> bool:
    """Compare two angles in ``[0, pi]`` given as ``(dot, |cross|)`` pairs."""
    cr = a[0] * b[1] - a[1] * b[0]
    if cr:
        return cr > 0
    if a[1] == 0 and b[1] == 0:
        return a[0] > 0 > b[0]
    return False


def min_pairwise_angle(vs) -> tuple[float, tuple[tuple[int, int], tuple[int, int]]]:
    """Smallest unsigned angle between two vectors of ``vs`` and a pair attaining it.

    Ties go to the pair whose positions in ``vs`` come first.
    """
    vecs = [tuple(int(c) for c in v) for v in vs]
    if len(vecs) < 2:
        raise ValueError("need at least two vectors")
    order = sorted(range(len(vecs)), key=cmp_to_key(lambda i, j: _ccw_cmp(vecs[i], vecs[j])))
    m = len(order)
    pairs = [(order[i], order[(i + 1) % m]) for i in range(m if m > 2 else 1)]
    best = None
    best_key = None
    for i, j in pairs:
        u, v = vecs[i], vecs[j]
        ang = (u[0] * v[0] + u[1] * v[1], abs(u[0] * v[1] - u[1] * v[0]))
        key = (min(i, j), max(i, j))
        if best is None or angle_less(ang, best) or (not angle_less(best, ang) and key < best_key):
            best, best_key = ang, key
    i, j = best_key
    return math.atan2(best[1], best[0]), (vecs[i], vecs[j])


def separation_bound(k: int, c: float) -> float:
    """Guaranteed minimum angle when ``k`` vectors are taken from a Farey set of size ``c k``."""
    return 3 / (2 * math.pi ** 2 * c * k) - 9 / (4 * math.pi ** 4 * c ** 2 * k ** 2)
