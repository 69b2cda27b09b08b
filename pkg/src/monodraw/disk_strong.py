"""Strongly monotone, strictly convex drawings inside the unit disk.

Every vertex ``v`` owns a circular segment: the cap of the unit disk cut off
by a chord through ``v``. The children of ``v`` split that cap into smaller
caps and sit on the feet of the perpendiculars from ``v`` onto the new chords.
Because each subtree stays inside its own cap, the direction of every edge
separates the subtree below it from the rest of the tree, which is exactly
strong monotonicity for trees.

Coordinates are binary floating point numbers (mpmath at a chosen precision).
The feature sizes shrink exponentially with depth, so ``PrecisionPolicy``
either fixes the bit count or, by default, retries with more bits until every
computed quantity is resolved.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath
import numpy as np

from .drawing import Drawing
from .tree_model import RootedOrderedTree, binarize, project_drawing

__all__ = [
    "CircularSegment",
    "PrecisionPolicy",
    "PrecisionExhausted",
    "place_children",
    "disk_layout",
    "draw_disk",
    "draw_strong",
]


class PrecisionExhausted(ArithmeticError):
    """A computed feature fell below what the working precision can resolve."""

    def __init__(self, depth: int, bits: int, what: str):
        super().__init__(f"precision exhausted at tree depth {depth} with {bits} bits ({what})")
        self.depth = depth
        self.bits = bits


@dataclass(frozen=True)
class PrecisionPolicy:
    """``bits=None`` picks the precision automatically, starting at ``start_bits``."""

    bits: int | None = None
    epsilon: float = 1e-9
    start_bits: int = 128
    max_bits: int = 1 << 17

    def __post_init__(self):
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")
        if self.bits is not None and self.bits < 53:
            raise ValueError("at least 53 bits are required")

    @staticmethod
    def kind_for(bits: int) -> str:
        return "float64" if bits == 53 else f"float{bits}"


@dataclass(frozen=True)
class CircularSegment:
    """The cap of the unit disk over the arc from angle ``start`` to ``stop`` (ccw).

    ``owner`` is the vertex sitting on the chord.
    """

    start: mpmath.mpf
    stop: mpmath.mpf
    owner: tuple

    @property
    def endpoints(self):
        return ((mpmath.cos(self.start), mpmath.sin(self.start)),
                (mpmath.cos(self.stop), mpmath.sin(self.stop)))

    @property
    def middle(self):
        return (self.start + self.stop) / 2

    @property
    def half_width(self):
        return (self.stop - self.start) / 2

    def contains(self, p, strict: bool = True) -> bool:
        """Is ``p`` on the cap side of the chord (and inside the disk)?"""
        m = self.middle
        level = p[0] * mpmath.cos(m) + p[1] * mpmath.sin(m) - mpmath.cos(self.half_width)
        inside = p[0] ** 2 + p[1] ** 2 <= 1
        return inside and (level > 0 if strict else level >= 0)

    def owner_on_chord_interior(self) -> bool:
        x, y = self.owner
        rho = mpmath.hypot(x, y)
        return rho * abs(mpmath.sin(mpmath.atan2(y, x) - self.middle)) < mpmath.sin(self.half_width)


def _unwrap(theta, lo, hi):
    two_pi = 2 * mpmath.pi
    while theta < lo:
        theta += two_pi
    while theta > hi:
        theta -= two_pi
    return theta


def _ray_to_circle(p, rho2, nx, ny):
    """Distance from ``p`` to the unit circle along the unit direction ``(nx, ny)``."""
    d = p[0] * nx + p[1] * ny
    return (1 - rho2) / (d + mpmath.sqrt(d * d + 1 - rho2))


def _foot(p, a, b):
    """Foot of the perpendicular from ``p`` onto the chord over the arc ``(a, b)``."""
    m = (a + b) / 2
    ux, uy = mpmath.cos(m), mpmath.sin(m)
    t = mpmath.cos((b - a) / 2) - (p[0] * ux + p[1] * uy)
    return (p[0] + t * ux, p[1] + t * uy)


def _split(p, a, b, k):
    """Arc boundaries ``a = s_0 < ... < s_k = b`` for ``k >= 2`` children of ``p``."""
    rho2 = p[0] ** 2 + p[1] ** 2
    if k == 2:
        # split where the ray perpendicular to the chord leaves the disk
        m = (a + b) / 2
        nx, ny = mpmath.cos(m), mpmath.sin(m)
        t = _ray_to_circle(p, rho2, nx, ny)
        s = _unwrap(mpmath.atan2(p[1] + t * ny, p[0] + t * nx), a, b)
        return [a, s, b]
    # many children: shrink geometrically towards the radial direction of p
    rho = mpmath.sqrt(rho2)
    tv = _unwrap(mpmath.atan2(p[1], p[0]), a, b)
    lam = (1 - rho) / 8
    j = k // 2
    right = [a] + [tv - (tv - a) * lam ** (j - i) for i in range(1, j)]
    left = sorted(tv + (b - tv) * lam ** i for i in range(1, j)) + [b]
    if k % 2 == 0:
        return right + [tv] + left
    inner = min(tv - right[-1], left[0] - tv) * lam
    return right + [tv - inner, tv + inner] + left


def place_children(v, seg: CircularSegment):
    """Two children of ``v``: returns ``(l, r, segL, segR)``.

    ``l`` lies counterclockwise of the perpendicular ray through ``v`` and
    ``r`` clockwise of it.
    """
    v = (mpmath.mpf(v[0]), mpmath.mpf(v[1]))
    a, s, b = _split(v, seg.start, seg.stop, 2)
    r, l = _foot(v, a, s), _foot(v, s, b)
    return l, r, CircularSegment(s, b, l), CircularSegment(a, s, r)


def _root_segments(k):
    """Child positions and caps of a root with ``k`` children at the disk center."""
    dist = mpmath.mpf(1) / 2 if k <= 2 else mpmath.cos(mpmath.pi / k)
    half = mpmath.acos(dist)
    out = []
    for i in range(k):
        turns = mpmath.mpf(2 * i) / k
        # cospi/sinpi keep axis directions exact, so two children sit on the x-axis
        pos = (dist * mpmath.cospi(turns), dist * mpmath.sinpi(turns))
        ang = mpmath.pi * turns
        out.append((pos, ang - half, ang + half))
    return out


def _layout(t: RootedOrderedTree, bits: int, guard: int):
    tol = mpmath.mpf(2) ** -(bits - guard)
    pos = [None] * t.n
    segs = [None] * t.n
    pos[t.root] = (mpmath.mpf(0), mpmath.mpf(0))
    stack = []
    for c, (p, a, b) in zip(t.children[t.root], _root_segments(len(t.children[t.root]))):
        pos[c] = p
        segs[c] = CircularSegment(a, b, p)
        stack.append((c, 1))
    while stack:
        v, depth = stack.pop()
        kids = t.children[v]
        if not kids:
            continue
        p, seg = pos[v], segs[v]
        a, b = seg.start, seg.stop
        rho2 = p[0] ** 2 + p[1] ** 2
        if 1 - rho2 < tol:
            raise PrecisionExhausted(depth, bits, "vertex too close to the circle")
        if len(kids) == 1:
            m = (a + b) / 2
            nx, ny = mpmath.cos(m), mpmath.sin(m)
            step = _ray_to_circle(p, rho2, nx, ny) / 2
            c = (p[0] + step * nx, p[1] + step * ny)
            h = mpmath.acos(c[0] * nx + c[1] * ny)
            parts = [(c, m - h, m + h)]
        else:
            bounds = _split(p, a, b, len(kids))
            parts = []
            rho = mpmath.sqrt(rho2)
            theta = mpmath.atan2(p[1], p[0])
            for lo, hi in zip(bounds, bounds[1:]):
                half = (hi - lo) / 2
                # the foot must land strictly inside its chord
                slack = mpmath.sin(half) - rho * abs(mpmath.sin(theta - (lo + hi) / 2))
                if half < tol or slack < tol:
                    raise PrecisionExhausted(depth, bits, "child segment too narrow")
                parts.append((_foot(p, lo, hi), lo, hi))
        for c, (q, lo, hi) in zip(kids, parts):
            if abs(q[0] - p[0]) + abs(q[1] - p[1]) < tol:
                raise PrecisionExhausted(depth, bits, "edge too short")
            pos[c] = q
            segs[c] = CircularSegment(lo, hi, q)
            stack.append((c, depth + 1))
    return pos, segs


def _attempt(t, bits):
    guard = min(64, bits // 2)
    with mpmath.workprec(bits):
        pos, segs = _layout(t, bits, guard)
    kind = PrecisionPolicy.kind_for(bits)
    if kind == "float64":
        x = np.array([float(p[0]) for p in pos])
        y = np.array([float(p[1]) for p in pos])
    else:
        x = np.empty(t.n, dtype=object)
        y = np.empty(t.n, dtype=object)
        x[:] = [p[0] for p in pos]
        y[:] = [p[1] for p in pos]
    return x, y, kind, segs


def disk_layout(t: RootedOrderedTree, policy: PrecisionPolicy = PrecisionPolicy()):
    """Drawing of ``t`` (root at the center) plus the segment owned by each non-root vertex."""
    if t.n < 2:
        raise ValueError("need at least two vertices")
    if policy.bits is not None:
        bits = policy.bits
        x, y, kind, segs = _attempt(t, bits)
    else:
        bits = policy.start_bits
        while True:
            try:
                x, y, kind, segs = _attempt(t, bits)
                break
            except PrecisionExhausted:
                if bits >= policy.max_bits:
                    raise
                bits = min(-(-bits * 3 // 2 // 64) * 64, policy.max_bits)
    meta = {"bits": bits, "epsilon": policy.epsilon}
    return Drawing(t, x, y, kind, meta), segs


def _check_proper_binary(t: RootedOrderedTree):
    if len(t.children[t.root]) != 2:
        raise ValueError(f"root {t.labels[t.root]!r} must have exactly two children")
    for v in range(t.n):
        if v != t.root and len(t.children[v]) not in (0, 2):
            raise ValueError(f"vertex {t.labels[v]!r} has {len(t.children[v])} children, "
                             "expected 0 or 2")


def draw_disk(t: RootedOrderedTree, policy: PrecisionPolicy = PrecisionPolicy()) -> Drawing:
    """Proper binary tree with a degree-2 root; root children at ``(1/2, 0)`` and ``(-1/2, 0)``."""
    _check_proper_binary(t)
    d, _ = disk_layout(t, policy)
    d.meta["algo"] = "disk"
    return d


def draw_strong(t: RootedOrderedTree, policy: PrecisionPolicy = PrecisionPolicy(),
                method: str = "fan") -> Drawing:
    """Strongly monotone drawing of any tree with at least two vertices.

    ``method="fan"`` hangs the tree from its center and gives a vertex with
    many children that many nested segments directly. ``method="binarize"``
    draws the binarized tree and keeps the top of each substitute path; this
    only works when no vertex has degree above 3.
    """
    if t.n < 2:
        raise ValueError("need at least two vertices")
    if method == "binarize":
        b, m = binarize(t)
        d = project_drawing(draw_disk(b, policy), m)
    elif method == "fan":
        work = t.rerooted(t.center())
        d, _ = disk_layout(work, policy)
        d = Drawing(t, d.x, d.y, d.kind, d.meta)
    else:
        raise ValueError(f"unknown method {method!r}")
    d.meta["algo"] = "strong"
    d.meta["method"] = method
    return d
