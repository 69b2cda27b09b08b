"""Independent checks for drawn trees and graphs.

All verdicts come from exact integer arithmetic. Floating drawings are first
turned into exact integers (every binary float is a dyadic rational, see
``Drawing.exact``), so the only tolerance anywhere is the optional ``epsilon``
on strong-monotonicity margins. Small integer drawings run through numba
kernels; large or high-precision ones use a float filter with a proven error
bound and settle the undecided cases with Python integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, NamedTuple, Sequence

import mpmath
import numba
import numpy as np

from .drawing import Drawing
from .primvec import angle_less
from .tree_model import PlaneOuterGraph, RootedOrderedTree

__all__ = [
    "CheckReport",
    "Resolution",
    "check_crossing_free",
    "check_monotone",
    "check_strong_monotone",
    "check_convex",
    "check_strictly_convex",
    "angular_resolution",
    "half_plane_monotone",
    "passes_projection",
    "oracle_monotone_pair",
    "run_checks",
    "CHECKS",
]

try:  # GMP integers multiply wide coordinates much faster when available
    from gmpy2 import mpz as _BIGINT
except ImportError:  # pragma: no cover
    _BIGINT = int

SMALL = 1 << 29  # coordinates below this keep every kernel product inside int64


@dataclass
class CheckReport:
    check: str
    passed: bool
    witness: dict | None = None
    stats: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        return {"check": self.check, "passed": self.passed, "witness": self.witness,
                "stats": self.stats}


# ------------------------------------------------------------ coordinates

def _coords(d: Drawing):
    """Exact integer coordinates and whether they fit the int64 kernels."""
    X, Y, shift = d.exact()
    small = X.dtype != object and (len(X) == 0 or
                                   max(int(np.abs(X).max()), int(np.abs(Y).max())) < SMALL)
    if not small:
        X, Y = _big(X), _big(Y)
    return X, Y, shift, small


def _big(values) -> np.ndarray:
    out = np.empty(len(values), dtype=object)
    out[:] = [_BIGINT(int(v)) for v in values]
    return out


def _int_lists(d: Drawing):
    X, Y, _ = d.exact()
    return [int(v) for v in X], [int(v) for v in Y]


def _scaled_floats(X, Y):
    """Floats approximating ``X, Y`` divided by a common power of two.

    Returns ``(xf, yf, delta)`` where every float is within ``delta`` of the
    scaled exact value and the largest magnitude is below 1.
    """
    top = max(max((abs(int(v)) for v in X), default=0), max((abs(int(v)) for v in Y), default=0))
    shift = top.bit_length()
    if X.dtype != object:
        xf = X.astype(np.float64) / 2.0 ** shift
        yf = Y.astype(np.float64) / 2.0 ** shift
    else:
        cut = max(0, shift - 62)
        xf = np.array([float(int(v) >> cut) for v in X]) / 2.0 ** (shift - cut)
        yf = np.array([float(int(v) >> cut) for v in Y]) / 2.0 ** (shift - cut)
    return xf, yf, 2.0 ** -50


def _angle_of(cross: int, dot: int) -> float:
    """``atan2(cross, dot)`` for arbitrarily large integers."""
    cross, dot = int(cross), int(dot)
    cut = max(abs(cross).bit_length(), abs(dot).bit_length()) - 60
    if cut > 0:
        cross, dot = cross >> cut if cross >= 0 else -((-cross) >> cut), \
            dot >> cut if dot >= 0 else -((-dot) >> cut)
    return math.atan2(cross, dot)


# ------------------------------------------------------------ crossings

def _pieces(d: Drawing, X, Y, with_rays: bool):
    """Edges and leaf rays as start point, direction, ray flag and endpoint ids."""
    edges = d.edges
    rays = d.rays() if with_rays else []
    m = len(edges) + len(rays)
    obj = X.dtype == object
    dt = object if obj else np.int64
    px, py, dx, dy = (np.zeros(m, dtype=dt) for _ in range(4))
    ray = np.zeros(m, dtype=np.int8)
    ua = np.full(m, -1, dtype=np.int64)
    ub = np.full(m, -1, dtype=np.int64)
    k = len(edges)
    if k:
        a, b = edges[:, 0], edges[:, 1]
        px[:k], py[:k] = X[a], Y[a]
        dx[:k], dy[:k] = X[b] - X[a], Y[b] - Y[a]
        ua[:k], ub[:k] = a, b
    for i, (leaf, nb) in enumerate(rays, start=k):
        px[i], py[i] = X[leaf], Y[leaf]
        dx[i], dy[i] = X[leaf] - X[nb], Y[leaf] - Y[nb]
        ray[i] = 1
        ua[i] = leaf
    return px, py, dx, dy, ray, ua, ub


def _pair_meets(i, j, px, py, dx, dy, ray, ua, ub):
    """Do pieces ``i`` and ``j`` share a point other than a common endpoint?"""
    shared = -1
    if ua[i] == ua[j] or ua[i] == ub[j]:
        shared = ua[i]
    if ub[i] >= 0 and (ub[i] == ua[j] or ub[i] == ub[j]):
        if shared >= 0:
            return True  # parallel edges
        shared = ub[i]
    if shared >= 0:
        # two pieces leaving one point overlap iff they point the same way
        if shared == ua[i]:
            wx, wy = dx[i], dy[i]
        else:
            wx, wy = -dx[i], -dy[i]
        if shared == ua[j]:
            vx, vy = dx[j], dy[j]
        else:
            vx, vy = -dx[j], -dy[j]
        return wx * vy - wy * vx == 0 and wx * vx + wy * vy > 0
    rx = px[j] - px[i]
    ry = py[j] - py[i]
    den = dx[i] * dy[j] - dy[i] * dx[j]
    if den != 0:
        tn = rx * dy[j] - ry * dx[j]
        sn = rx * dy[i] - ry * dx[i]
        if den < 0:
            den, tn, sn = -den, -tn, -sn
        if tn < 0 or sn < 0:
            return False
        if ray[i] == 0 and tn > den:
            return False
        if ray[j] == 0 and sn > den:
            return False
        return True
    if rx * dy[i] - ry * dx[i] != 0:
        return False
    # collinear: positions measured along the direction of piece i, which covers [0, dd]
    dd = dx[i] * dx[i] + dy[i] * dy[i]
    q0 = rx * dx[i] + ry * dy[i]
    ed = dx[j] * dx[i] + dy[j] * dy[i]
    q1 = q0 + ed
    if ray[j] == 1:
        if ed > 0:
            return ray[i] == 1 or q0 <= dd
        return q0 >= 0
    lo = min(q0, q1)
    hi = max(q0, q1)
    if hi < 0:
        return False
    return ray[i] == 1 or lo <= dd


_pair_meets_jit = numba.njit(cache=True)(_pair_meets)


@numba.njit(cache=True)
def _first_meeting(px, py, dx, dy, ray, ua, ub):
    m = len(px)
    big = np.iinfo(np.int64).max
    xlo = np.empty(m, dtype=np.int64)
    xhi = np.empty(m, dtype=np.int64)
    ylo = np.empty(m, dtype=np.int64)
    yhi = np.empty(m, dtype=np.int64)
    for i in range(m):
        ex, ey = px[i] + dx[i], py[i] + dy[i]
        xlo[i], xhi[i] = min(px[i], ex), max(px[i], ex)
        ylo[i], yhi[i] = min(py[i], ey), max(py[i], ey)
        if ray[i] == 1:
            if dx[i] > 0:
                xhi[i] = big
            elif dx[i] < 0:
                xlo[i] = -big
            if dy[i] > 0:
                yhi[i] = big
            elif dy[i] < 0:
                ylo[i] = -big
    # sweep in order of the left bounding-box edge
    order = np.argsort(xlo)
    for a in range(m):
        i = order[a]
        for b in range(a + 1, m):
            j = order[b]
            if xlo[j] > xhi[i]:
                break
            if ylo[j] > yhi[i] or ylo[i] > yhi[j]:
                continue
            if _pair_meets_jit(i, j, px, py, dx, dy, ray, ua, ub):
                return min(i, j), max(i, j)
    return -1, -1


def _candidate_pairs(px, py, dx, dy, ray):
    """Pairs a float filter cannot prove disjoint (always includes touching pairs)."""
    m = len(px)
    allx = np.concatenate([px, px + dx])
    ally = np.concatenate([py, py + dy])
    fx, fy, delta = _scaled_floats(allx, ally)
    sx, sy, ex, ey = fx[:m], fy[:m], fx[m:], fy[m:]
    tol = 64 * delta
    # unit directions for rays from the exact vectors, so tiny leaf edges keep their heading
    ux, uy = ex - sx, ey - sy
    for i in np.flatnonzero(ray):
        a, b = int(dx[i]), int(dy[i])
        cut = max(abs(a).bit_length(), abs(b).bit_length()) - 60
        if cut > 0:
            a = a >> cut if a >= 0 else -((-a) >> cut)
            b = b >> cut if b >= 0 else -((-b) >> cut)
        norm = math.hypot(a, b)
        ux[i], uy[i] = a / norm, b / norm
    isray = ray.astype(bool)
    xlo = np.where(isray, np.where(ux < 0, -np.inf, sx), np.minimum(sx, ex)) - tol
    xhi = np.where(isray, np.where(ux > 0, np.inf, sx), np.maximum(sx, ex)) + tol
    ylo = np.where(isray, np.where(uy < 0, -np.inf, sy), np.minimum(sy, ey)) - tol
    yhi = np.where(isray, np.where(uy > 0, np.inf, sy), np.maximum(sy, ey)) + tol
    out = []
    for i in range(m - 1):
        j = np.arange(i + 1, m)
        keep = (xlo[j] <= xhi[i]) & (xlo[i] <= xhi[j]) & (ylo[j] <= yhi[i]) & (ylo[i] <= yhi[j])
        j = j[keep]
        if not len(j):
            continue
        keep = ~(_separated(i, j, sx, sy, ux, uy, isray, tol) |
                 _separated_rev(i, j, sx, sy, ux, uy, isray, tol))
        out.extend((i, int(k)) for k in j[keep])
    return out


def _side(ox, oy, vx, vy, x, y):
    return vx * (y - oy) - vy * (x - ox)


def _separated(i, j, sx, sy, ux, uy, isray, tol):
    """Pieces ``j`` provably on one side of the line through piece ``i``."""
    scale = math.hypot(ux[i], uy[i])
    s0 = _side(sx[i], sy[i], ux[i], uy[i], sx[j], sy[j])
    s1 = np.where(isray[j],
                  np.where(s0 > 0, 1.0, -1.0) * _side(0, 0, ux[i], uy[i], ux[j], uy[j]),
                  _side(sx[i], sy[i], ux[i], uy[i], sx[j] + ux[j], sy[j] + uy[j]))
    lim = tol * (scale + 2)
    same = ((s0 > lim) & np.where(isray[j], s1 >= 0, s1 > lim)) | \
           ((s0 < -lim) & np.where(isray[j], s1 >= 0, s1 < -lim))
    return same


def _separated_rev(i, j, sx, sy, ux, uy, isray, tol):
    """Piece ``i`` provably on one side of the line through each piece ``j``."""
    scale = np.hypot(ux[j], uy[j])
    s0 = _side(sx[j], sy[j], ux[j], uy[j], sx[i], sy[i])
    if isray[i]:
        s1 = np.where(s0 > 0, 1.0, -1.0) * _side(0, 0, ux[j], uy[j], ux[i], uy[i])
        lim = tol * (scale + 2)
        return (np.abs(s0) > lim) & (s1 >= 0)
    s1 = _side(sx[j], sy[j], ux[j], uy[j], sx[i] + ux[i], sy[i] + uy[i])
    lim = tol * (scale + 2)
    return ((s0 > lim) & (s1 > lim)) | ((s0 < -lim) & (s1 < -lim))


def _describe_piece(d: Drawing, i, ray, ua, ub) -> dict:
    lab = d.graph.labels
    if ray[i]:
        return {"ray_from": lab[ua[i]]}
    return {"edge": [lab[ua[i]], lab[ub[i]]]}


def check_crossing_free(d: Drawing, with_rays: bool = True) -> CheckReport:
    """No two edges or leaf rays meet except at a shared endpoint."""
    X, Y, _, small = _coords(d)
    pieces = _pieces(d, X, Y, with_rays and d.is_tree)
    px, py, dx, dy, ray, ua, ub = pieces
    zero = [i for i in range(len(px)) if not ray[i] and dx[i] == 0 and dy[i] == 0]
    if zero:
        return CheckReport("crossing", False, {"zero_length": _describe_piece(d, zero[0], ray, ua, ub)})
    if small:
        i, j = _first_meeting(*pieces)
        hit = None if i < 0 else (int(i), int(j))
        tested = None
    else:
        cands = _candidate_pairs(px, py, dx, dy, ray)
        tested = len(cands)
        hit = next(((i, j) for i, j in cands if _pair_meets(i, j, *pieces)), None)
    stats = {"pieces": int(len(px))}
    if tested is not None:
        stats["exact_tests"] = tested
    if hit is None:
        return CheckReport("crossing", True, None, stats)
    i, j = hit
    return CheckReport("crossing", False, {"first": _describe_piece(d, i, ray, ua, ub),
                                           "second": _describe_piece(d, j, ray, ua, ub)}, stats)


# ------------------------------------------------------------ monotone paths

def half_plane_monotone(vectors: Sequence[Sequence[int]]) -> bool:
    """Do the vectors fit in an open half-plane through the origin? (exact)"""
    lo = hi = None
    for x, y in vectors:
        x, y = int(x), int(y)
        if x == 0 and y == 0:
            return False
        if lo is None:
            lo = hi = (x, y)
            continue
        ok, lo, hi = _extend_cone(lo, hi, (x, y))
        if not ok:
            return False
    return lo is not None


def _extend_cone(lo, hi, v):
    """Grow the cone from ``lo`` ccw to ``hi`` (angle < pi) so it holds ``v``."""
    c_lo = lo[0] * v[1] - lo[1] * v[0]   # > 0: v ccw of lo
    c_hi = hi[0] * v[1] - hi[1] * v[0]   # < 0: v cw of hi
    span = lo[0] * hi[1] - lo[1] * hi[0]
    if lo == hi or span == 0:
        # a single direction: anything but its opposite extends it
        if c_lo == 0:
            return lo[0] * v[0] + lo[1] * v[1] > 0, lo, hi
        return True, (lo if c_lo > 0 else v), (v if c_lo > 0 else hi)
    if c_lo >= 0 and c_hi <= 0:
        return True, lo, hi
    if c_hi > 0 and c_lo > 0:
        return True, lo, v
    if c_lo < 0 and c_hi < 0:
        return True, v, hi
    return False, lo, hi


@numba.njit(cache=True)
def _monotone_sweep(X, Y, ptr, nbr):
    """First failing ordered pair ``(a, b)`` whose tree path fits no open half-plane."""
    n = len(X)
    stack_v = np.empty(n, dtype=np.int64)
    stack_p = np.empty(n, dtype=np.int64)
    lox = np.zeros_like(X)
    loy = np.zeros_like(X)
    hix = np.zeros_like(X)
    hiy = np.zeros_like(X)
    for a in range(n):
        top = 0
        stack_v[0] = a
        stack_p[0] = -1
        while top >= 0:
            v = stack_v[top]
            p = stack_p[top]
            cl = (lox[v], loy[v])
            ch = (hix[v], hiy[v])
            top -= 1
            for k in range(ptr[v], ptr[v + 1]):
                w = nbr[k]
                if w == p:
                    continue
                vx = X[w] - X[v]
                vy = Y[w] - Y[v]
                if p < 0:
                    nlx, nly, nhx, nhy = vx, vy, vx, vy
                else:
                    lx, ly = cl
                    hx, hy = ch
                    c_lo = lx * vy - ly * vx
                    c_hi = hx * vy - hy * vx
                    span = lx * hy - ly * hx
                    nlx, nly, nhx, nhy = lx, ly, hx, hy
                    if span == 0:
                        if c_lo == 0:
                            if lx * vx + ly * vy <= 0:
                                return a, w
                        elif c_lo > 0:
                            nhx, nhy = vx, vy
                        else:
                            nlx, nly = vx, vy
                    elif c_lo >= 0 and c_hi <= 0:
                        pass
                    elif c_hi > 0 and c_lo > 0:
                        nhx, nhy = vx, vy
                    elif c_lo < 0 and c_hi < 0:
                        nlx, nly = vx, vy
                    else:
                        return a, w
                lox[w], loy[w], hix[w], hiy[w] = nlx, nly, nhx, nhy
                top += 1
                stack_v[top] = w
                stack_p[top] = v
    return -1, -1


def _adjacency(n, edges):
    a = np.concatenate([edges[:, 0], edges[:, 1]]) if len(edges) else np.zeros(0, np.int64)
    b = np.concatenate([edges[:, 1], edges[:, 0]]) if len(edges) else np.zeros(0, np.int64)
    order = np.argsort(a, kind="stable")
    ptr = np.zeros(n + 1, dtype=np.int64)
    np.add.at(ptr, a + 1, 1)
    return np.cumsum(ptr), b[order].astype(np.int64)


def _tree_path(t: RootedOrderedTree, a: int, b: int) -> list[int]:
    par = t.parent
    up = [a]
    seen = {a: 0}
    while par[up[-1]] >= 0:
        up.append(par[up[-1]])
        seen[up[-1]] = len(up) - 1
    down = [b]
    while down[-1] not in seen:
        down.append(par[down[-1]])
    return up[:seen[down[-1]]] + down[::-1]


def check_monotone(d: Drawing) -> CheckReport:
    """Every vertex pair's tree path is monotone in some direction."""
    if not d.is_tree:
        raise ValueError("check_monotone needs a tree drawing")
    X, Y, _, small = _coords(d)
    ptr, nbr = _adjacency(d.graph.n, d.edges)
    sweep = _monotone_sweep if small else _monotone_sweep.py_func
    a, b = sweep(X, Y, ptr, nbr)
    if a < 0:
        return CheckReport("monotone", True)
    lab = d.graph.labels
    path = _tree_path(d.graph, int(a), int(b))
    vecs = [[str(X[w] - X[v]), str(Y[w] - Y[v])] for v, w in zip(path, path[1:])]
    return CheckReport("monotone", False, {"pair": [lab[a], lab[b]],
                                           "path": [lab[v] for v in path],
                                           "edge_vectors": vecs})


def passes_projection(vectors, direction) -> bool:
    dx, dy = direction
    return all(x * dx + y * dy > 0 for x, y in vectors)


def oracle_monotone_pair(vectors, samples: int = 4096) -> bool:
    """Search for a direction with positive projections by sampling.

    Tries ``samples`` evenly spaced unit directions and, for every edge, its
    two normals nudged slightly towards the edge. Directions are evaluated in
    exact rational arithmetic, so a ``True`` answer is always certified.
    """
    vecs = [(int(x), int(y)) for x, y in vectors]
    if not vecs:
        raise ValueError("need at least one edge vector")
    cands = []
    for k in range(samples):
        ang = 2 * math.pi * k / samples
        cands.append((Fraction(math.cos(ang)), Fraction(math.sin(ang))))
    for x, y in vecs:
        norm2 = x * x + y * y
        for s in (1, -1):
            nx, ny = -s * y, s * x
            for nudge in (Fraction(1, 1 << 20), Fraction(1, 1 << 40)):
                cands.append((nx + nudge * x, ny + nudge * y))
        cands.append((Fraction(x, 1), Fraction(y, 1)) if norm2 else (0, 0))
    # bisectors of the two extreme vectors pin down narrow cones exactly
    for u in vecs:
        for v in vecs:
            cands.append((Fraction(u[0] + v[0]), Fraction(u[1] + v[1])))
    return any(passes_projection(vecs, c) for c in cands)


# ------------------------------------------------------------ strong monotone

def _eps_fraction(eps: float) -> tuple[int, int]:
    f = Fraction(eps) ** 2
    return f.numerator, f.denominator


@numba.njit(cache=True)
def _separation_sweep(X, Y, order, pos, size, parent):
    """Per edge ``(parent(x), x)``: min projection inside subtree(x) minus max outside."""
    n = len(X)
    for idx in range(1, n):
        x = order[idx]
        p = parent[x]
        wx = X[x] - X[p]
        wy = Y[x] - Y[p]
        lo = pos[x]
        hi = lo + size[x]
        min_in = X[x] * wx + Y[x] * wy
        for k in range(lo, hi):
            v = order[k]
            s = X[v] * wx + Y[v] * wy
            if s < min_in:
                min_in = s
        for k in range(n):
            if lo <= k < hi:
                continue
            v = order[k]
            s = X[v] * wx + Y[v] * wy
            if s >= min_in:
                return x
    return -1


def _subtree_layout(t: RootedOrderedTree):
    order = t.preorder_array
    par = t.parent_array
    size = np.ones(t.n, dtype=np.int64)
    for v in order[:0:-1].tolist():
        size[par[v]] += size[v]
    pos = np.empty(t.n, dtype=np.int64)
    pos[order] = np.arange(t.n)
    return order, pos, size, par


CHUNK = 52
LD_SPAN = 16000  # usable binary exponent range on each side of 1 in long double


def _chunks(X):
    """Base-2**52 digits of ``X + bias`` as float64 columns, least significant first.

    Differences of digit rows are exact in float64, so ``_offsets`` can form
    exact differences of huge integers and round them only a few times.
    """
    top = max(abs(int(v)) for v in X).bit_length() + 2
    k = -(-top // CHUNK)
    bias = 1 << (k * CHUNK - 1)
    mask = (1 << CHUNK) - 1
    out = np.empty((len(X), k), dtype=np.float64)
    for i, v in enumerate(X):
        u = int(v) + bias
        for j in range(k):
            out[i, j] = u & mask
            u >>= CHUNK
    return out


def _offsets(C: np.ndarray, p: int):
    """``(X - X[p]) * 2**-shift`` for all rows, plus an absolute error bound.

    The relative error is below ``2**-56``; digits that fall under the long
    double range contribute at most the returned absolute error.
    """
    k = C.shape[1]
    shift = max(0, k * CHUNK - LD_SPAN)
    diff = (C - C[p]).astype(np.longdouble)
    acc = np.zeros(len(C), dtype=np.longdouble)
    lost = 0
    for j in range(k - 1, -1, -1):
        e = j * CHUNK - shift
        if e < -LD_SPAN:
            lost += 1
            continue
        acc += np.ldexp(diff[:, j], e)
    floor = np.ldexp(np.longdouble(1), CHUNK - LD_SPAN) * lost
    return acc, floor


def _tree_strong(d: Drawing, X, Y, small, eps):
    t = d.graph
    order, pos, size, par = _subtree_layout(t)
    if small and not eps:
        x = int(_separation_sweep(X, Y, order, pos, size, par))
        if x < 0:
            return None, {}
        return _edge_violation(d, X, Y, order, pos, size, par, x, None), {}
    eps_q = _eps_fraction(eps) if eps else None
    CX, CY = _chunks(X), _chunks(Y)
    exact_edges = 0
    for idx in range(1, t.n):
        x = int(order[idx])
        p = int(par[x])
        lo, hi = int(pos[x]), int(pos[x] + size[x])
        inside = order[lo:hi]
        outside = np.concatenate([order[:lo], order[hi:]])
        # projections relative to p with a per-vertex error bound
        (ox, fx), (oy, fy) = _offsets(CX, p), _offsets(CY, p)
        wx, wy = ox[x], oy[x]
        # scale the edge by a power of two so products stay in range
        _, e = np.frexp(max(abs(wx), abs(wy)))
        wx, wy = np.ldexp(wx, -e), np.ldexp(wy, -e)
        with np.errstate(over="ignore", invalid="ignore"):
            proj = ox * wx + oy * wy
        size_o = np.abs(ox) + np.abs(oy)
        err = size_o * np.longdouble(2.0 ** -52)
        if fx + fy:
            with np.errstate(over="ignore", invalid="ignore"):  # an infinite bound just forces the exact path
                err = err + 2 * (fx + fy) * (1 + size_o * np.ldexp(np.longdouble(1), -e))
        with np.errstate(invalid="ignore", over="ignore"):
            lo_b, hi_b = proj - err, proj + err
        # a vertex whose bound overflowed stays a candidate for the exact test
        unsure = ~(np.isfinite(lo_b) & np.isfinite(hi_b))
        lo_b[unsure], hi_b[unsure] = -np.inf, np.inf
        low_in = lo_b[inside].min()
        high_out = hi_b[outside].max()
        if low_in > high_out:
            continue
        inside = inside[lo_b[inside] <= high_out]
        outside = outside[hi_b[outside] >= low_in]
        if not len(inside) or not len(outside):
            continue
        exact_edges += 1
        ex, ey = X[x] - X[p], Y[x] - Y[p]
        if min(X[v] * ex + Y[v] * ey for v in inside) > max(X[v] * ex + Y[v] * ey for v in outside):
            continue
        bad = _edge_violation(d, X, Y, order, pos, size, par, x, eps_q)
        if bad is not None:
            return bad, {"exact_edges": exact_edges}
    return None, {"exact_edges": exact_edges}


def _edge_violation(d, X, Y, order, pos, size, par, x, eps_q):
    """An ordered pair whose path uses edge ``(parent(x), x)`` against its direction."""
    p = int(par[x])
    wx, wy = X[x] - X[p], Y[x] - Y[p]
    w2 = wx * wx + wy * wy
    lo, hi = int(pos[x]), int(pos[x] + size[x])
    inside = [int(v) for v in order[lo:hi]]
    outside = [int(v) for v in order[:lo]] + [int(v) for v in order[hi:]]
    proj = {v: X[v] * wx + Y[v] * wy for v in inside + outside}
    top = max(proj[a] for a in outside)
    for b in sorted(inside, key=proj.__getitem__):
        if proj[b] > top:
            break
        for a in outside:
            m = proj[b] - proj[a]
            if m > 0:
                continue
            if eps_q is not None:
                ddx, ddy = int(X[b] - X[a]), int(Y[b] - Y[a])
                if int(m) ** 2 * eps_q[1] < eps_q[0] * int(w2) * (ddx * ddx + ddy * ddy):
                    continue
            lab = d.graph.labels
            return {"pair": [lab[a], lab[b]], "edge": [lab[p], lab[x]],
                    "dot": str(m), "edge_vector": [str(wx), str(wy)],
                    "direction": [str(X[b] - X[a]), str(Y[b] - Y[a])]}
    return None


def _reach_allowed(m, w2, dd2, eps_num, eps_den):
    if m > 0:
        return True
    return eps_num > 0 and int(m) ** 2 * eps_den < eps_num * int(w2) * int(dd2)


def _graph_strong(X, Y, ptr, nbr, eps_num, eps_den):
    """First ordered pair ``(a, b)`` with no path of positive projections onto ``b - a``."""
    n = len(X)
    seen = np.zeros(n, dtype=np.int64)
    stack = np.empty(n, dtype=np.int64)
    stamp = 0
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            stamp += 1
            ddx = X[b] - X[a]
            ddy = Y[b] - Y[a]
            dd2 = ddx * ddx + ddy * ddy
            top = 0
            stack[0] = a
            seen[a] = stamp
            found = False
            while top >= 0 and not found:
                u = stack[top]
                top -= 1
                for k in range(ptr[u], ptr[u + 1]):
                    v = nbr[k]
                    if seen[v] == stamp:
                        continue
                    wx = X[v] - X[u]
                    wy = Y[v] - Y[u]
                    m = wx * ddx + wy * ddy
                    if not _reach_allowed(m, wx * wx + wy * wy, dd2, eps_num, eps_den):
                        continue
                    if v == b:
                        found = True
                        break
                    # vertices of a strictly monotone a-b path stay in this slab
                    s = (X[v] - X[a]) * ddx + (Y[v] - Y[a]) * ddy
                    if eps_num == 0 and (s <= 0 or s >= dd2):
                        continue
                    seen[v] = stamp
                    top += 1
                    stack[top] = v
            if not found:
                return a, b
    return -1, -1


@numba.njit(cache=True)
def _graph_strong_jit(X, Y, ptr, nbr):
    n = len(X)
    seen = np.zeros(n, dtype=np.int64)
    stack = np.empty(n, dtype=np.int64)
    stamp = 0
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            stamp += 1
            ddx = X[b] - X[a]
            ddy = Y[b] - Y[a]
            dd2 = ddx * ddx + ddy * ddy
            top = 0
            stack[0] = a
            seen[a] = stamp
            found = False
            while top >= 0 and not found:
                u = stack[top]
                top -= 1
                for k in range(ptr[u], ptr[u + 1]):
                    v = nbr[k]
                    if seen[v] == stamp:
                        continue
                    m = (X[v] - X[u]) * ddx + (Y[v] - Y[u]) * ddy
                    if m <= 0:
                        continue
                    if v == b:
                        found = True
                        break
                    s = (X[v] - X[a]) * ddx + (Y[v] - Y[a]) * ddy
                    if s <= 0 or s >= dd2:
                        continue
                    seen[v] = stamp
                    top += 1
                    stack[top] = v
            if not found:
                return a, b
    return -1, -1


def _blocked_leaf(d: Drawing, X, Y, ptr, nbr, eps_num, eps_den) -> dict | None:
    """A degree-1 vertex whose only edge points away from some target.

    Such a pair fails with a one-line certificate, the negative dot product,
    so it is reported in preference to the result of a full search.
    """
    lab = d.graph.labels
    for a in np.flatnonzero(np.diff(ptr) == 1).tolist():
        u = int(nbr[ptr[a]])
        wx, wy = X[u] - X[a], Y[u] - Y[a]
        for b in range(len(X)):
            if b == a:
                continue
            ddx, ddy = X[b] - X[a], Y[b] - Y[a]
            m = wx * ddx + wy * ddy
            if not _reach_allowed(m, wx * wx + wy * wy, ddx * ddx + ddy * ddy, eps_num, eps_den):
                return {"pair": [lab[a], lab[b]], "direction": [str(ddx), str(ddy)],
                        "edge": [lab[a], lab[u]], "dot": str(m)}
    return None


def check_strong_monotone(d: Drawing, epsilon: float | None = None) -> CheckReport:
    """Every ordered pair ``(a, b)`` has a path monotone in direction ``b - a``.

    Trees: the unique path must project positively; this holds for all pairs
    iff each edge's direction strictly separates the subtree below it from the
    rest. Other graphs: ``b`` must be reachable from ``a`` along edges with
    positive projection. ``epsilon`` (floating drawings only) accepts margins
    ``m`` with ``m > -epsilon * |w| * |b - a|``.
    """
    X, Y, _, small = _coords(d)
    eps = 0.0 if d.kind == "int" or not epsilon else float(epsilon)
    if d.is_tree:
        witness, stats = _tree_strong(d, X, Y, small, eps)
    else:
        ptr, nbr = _adjacency(d.graph.n, d.edges)
        num, den = _eps_fraction(eps) if eps else (0, 1)
        witness = _blocked_leaf(d, X, Y, ptr, nbr, num, den)
        if witness is not None:
            return CheckReport("strong", False, witness, {"epsilon": eps})
        if small and not eps:
            a, b = _graph_strong_jit(X, Y, ptr, nbr)
        else:
            a, b = _graph_strong(X, Y, ptr, nbr, num, den)
        witness, stats = None, {}
        if a >= 0:
            lab = d.graph.labels
            witness = {"pair": [lab[a], lab[b]],
                       "direction": [str(X[b] - X[a]), str(Y[b] - Y[a])]}
    stats["epsilon"] = eps
    return CheckReport("strong", witness is None, witness, stats)


# ------------------------------------------------------------ convexity

def _ccw_key(vx, vy):
    half = 0 if (vy > 0 or (vy == 0 and vx > 0)) else 1
    return half


def _rotation(nbrs, X, Y, v):
    """Neighbors of ``v`` sorted counterclockwise by direction."""
    def cmp(a, b):
        ax, ay = X[a] - X[v], Y[a] - Y[v]
        bx, by = X[b] - X[v], Y[b] - Y[v]
        ha, hb = _ccw_key(ax, ay), _ccw_key(bx, by)
        if ha != hb:
            return ha - hb
        c = ax * by - ay * bx
        return -1 if c > 0 else (1 if c < 0 else 0)
    return sorted(nbrs, key=cmp_to_key(cmp))


def _faces(t: RootedOrderedTree, X, Y):
    """Face walks ``[leaf, ..., leaf]`` with the face on the left of the walk."""
    adj = [[] for _ in range(t.n)]
    for a, b in t.edges.tolist():
        adj[a].append(b)
        adj[b].append(a)
    rot = [_rotation(adj[v], X, Y, v) for v in range(t.n)]
    where = [{w: i for i, w in enumerate(r)} for r in rot]
    faces = []
    for leaf in range(t.n):
        if len(adj[leaf]) != 1:
            continue
        walk = [leaf, adj[leaf][0]]
        while len(adj[walk[-1]]) > 1:
            u, v = walk[-2], walk[-1]
            r = rot[v]
            walk.append(r[(where[v][u] - 1) % len(r)])
        faces.append(walk)
    return faces


def _convexity(d: Drawing, strict: bool) -> CheckReport:
    name = "strict-convex" if strict else "convex"
    if isinstance(d.graph, PlaneOuterGraph):
        return _outer_cycle_convex(d, strict, name)
    if not d.is_tree:
        raise ValueError("convexity is defined for tree drawings and outer cycles")
    cr = check_crossing_free(d, with_rays=True)
    if not cr:
        return CheckReport(name, False, {"crossing": cr.witness}, cr.stats)
    X, Y = _int_lists(d)
    t = d.graph
    lab = t.labels
    faces = _faces(t, X, Y) if t.n > 1 else []
    sharpest = -math.inf
    for walk in faces:
        total = 0.0
        for u, v, w in zip(walk, walk[1:], walk[2:]):
            ax, ay = X[v] - X[u], Y[v] - Y[u]
            bx, by = X[w] - X[v], Y[w] - Y[v]
            c = ax * by - ay * bx
            dot = ax * bx + ay * by
            straight = c == 0 and dot > 0
            tolerated = straight and v == t.root and len(t.children[v]) == 2
            if c < 0 or (c == 0 and not straight) or (strict and straight and not tolerated):
                angle = math.pi - _angle_of(c, dot)
                return CheckReport(name, False, {"face": [lab[walk[0]], lab[walk[-1]]],
                                                 "corner": [lab[u], lab[v], lab[w]],
                                                 "angle": angle})
            turn = _angle_of(c, dot)
            total += turn
            sharpest = max(sharpest, math.pi - turn)
        if total > math.pi - 1e-6:
            # settle near-pi totals exactly on the two ray directions
            ix, iy = X[walk[1]] - X[walk[0]], Y[walk[1]] - Y[walk[0]]
            ox, oy = X[walk[-1]] - X[walk[-2]], Y[walk[-1]] - Y[walk[-2]]
            c = ix * oy - iy * ox
            if total > math.pi + 1e-6 or c <= 0:
                return CheckReport(name, False, {"face": [lab[walk[0]], lab[walk[-1]]],
                                                 "rays_diverge": False, "turning": total})
    return CheckReport(name, True, None, {"faces": len(faces), "largest_corner": sharpest})


def _outer_cycle_convex(d: Drawing, strict: bool, name: str) -> CheckReport:
    X, Y = _int_lists(d)
    g = d.graph
    cyc = [g.index[v] for v in g.cycle]
    k = len(cyc)
    sign = 0
    total = 0.0
    for i in range(k):
        u, v, w = cyc[i - 1], cyc[i], cyc[(i + 1) % k]
        ax, ay = X[v] - X[u], Y[v] - Y[u]
        bx, by = X[w] - X[v], Y[w] - Y[v]
        c = ax * by - ay * bx
        s = (c > 0) - (c < 0)
        bad = (s == 0 and (strict or ax * bx + ay * by <= 0)) or (s and sign and s != sign)
        if bad:
            return CheckReport(name, False, {"corner": [g.labels[u], g.labels[v], g.labels[w]]})
        sign = sign or s
        total += _angle_of(c, ax * bx + ay * by)
    if abs(abs(total) - 2 * math.pi) > 1e-6:
        return CheckReport(name, False, {"winding_turn": total})
    return CheckReport(name, True, None, {"orientation": "ccw" if sign > 0 else "cw"})


def check_convex(d: Drawing) -> CheckReport:
    """Every face corner at most pi, bounding rays diverge, no crossings."""
    return _convexity(d, strict=False)


def check_strictly_convex(d: Drawing) -> CheckReport:
    """Every face corner below pi (a degree-2 root may be straight)."""
    return _convexity(d, strict=True)


# ------------------------------------------------------------ angles

class Resolution(NamedTuple):
    angle: float
    vertex: str | None
    pair: tuple[str, str] | None
    dot: int
    cross: int

    def at_least(self, bound: float) -> bool:
        """Exact ``angle >= bound`` for a bound in ``[0, pi/2)``."""
        if self.vertex is None:
            return True
        with mpmath.workprec(256):
            tb = mpmath.tan(mpmath.mpf(bound))
            if self.dot <= 0:
                return True
            return mpmath.mpf(self.cross) >= tb * self.dot


def angular_resolution(d: Drawing) -> Resolution:
    """Smallest angle between two edges at a common vertex (exact comparisons)."""
    X, Y = _int_lists(d)
    g = d.graph
    adj = [[] for _ in range(g.n)]
    for a, b in g.edges.tolist():
        adj[a].append(b)
        adj[b].append(a)
    best = None
    for v in range(g.n):
        if len(adj[v]) < 2:
            continue
        r = _rotation(adj[v], X, Y, v)
        pairs = zip(r, r[1:] + r[:1]) if len(r) > 2 else [(r[0], r[1])]
        for a, b in pairs:
            ax, ay = X[a] - X[v], Y[a] - Y[v]
            bx, by = X[b] - X[v], Y[b] - Y[v]
            key = (int(ax * bx + ay * by), int(abs(ax * by - ay * bx)))
            if best is None or angle_less(key, best[0]):
                best = (key, v, a, b)
    if best is None:
        return Resolution(math.pi * 2, None, None, 0, 0)
    (dot, cross), v, a, b = best
    lab = g.labels
    return Resolution(_angle_of(cross, dot), lab[v], (lab[a], lab[b]), dot, cross)


# ------------------------------------------------------------ dispatch

def _resolution_report(d: Drawing) -> CheckReport:
    r = angular_resolution(d)
    return CheckReport("resolution", True, None,
                       {"angle": r.angle, "vertex": r.vertex, "pair": r.pair})


CHECKS = {
    "crossing": lambda d, eps: check_crossing_free(d, with_rays=True),
    "monotone": lambda d, eps: check_monotone(d),
    "strong": lambda d, eps: check_strong_monotone(d, eps),
    "convex": lambda d, eps: check_convex(d),
    "strict-convex": lambda d, eps: check_strictly_convex(d),
    "resolution": lambda d, eps: _resolution_report(d),
}


def run_checks(d: Drawing, names: Iterable[str], epsilon: float | None = None) -> list[CheckReport]:
    names = list(names)
    if not names:
        raise ValueError("no checks requested")
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise ValueError(f"unknown check {unknown[0]!r}; choose from {', '.join(CHECKS)}")
    return [CHECKS[n](d, epsilon) for n in names]
