"""Straight-line drawings and their JSON form."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
import numpy as np

from .tree_model import Graph, PlaneOuterGraph, RootedOrderedTree, parse_tree

__all__ = ["Drawing", "drawing_from_json", "drawing_from_dict"]

INT64_SAFE = 1 << 62


def _as_int_array(values) -> np.ndarray:
    vals = [int(v) for v in values]
    if all(-INT64_SAFE < v < INT64_SAFE for v in vals):
        return np.array(vals, dtype=np.int64)
    out = np.empty(len(vals), dtype=object)
    out[:] = vals
    return out


@dataclass(frozen=True, eq=False)
class Drawing:
    """Coordinates for every vertex of ``graph``.

    ``kind`` is ``"int"`` (exact integers, int64 or Python ints in an object
    array), ``"float64"`` or ``"float<bits>"`` (mpmath numbers at that
    precision in an object array).
    """

    graph: RootedOrderedTree | PlaneOuterGraph | Graph
    x: np.ndarray
    y: np.ndarray
    kind: str
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(self.x) != self.graph.n or len(self.y) != self.graph.n:
            raise ValueError("one coordinate pair per vertex required")
        if not (self.kind in ("int", "float64") or self.kind.startswith("float")):
            raise ValueError(f"unknown coordinate kind {self.kind!r}")
        e = self.graph.edges
        if len(e):
            a, b = e[:, 0], e[:, 1]
            same = np.flatnonzero((self.x[a] == self.x[b]) & (self.y[a] == self.y[b]))
            if len(same):
                lab = self.graph.labels
                i = int(same[0])
                raise ValueError(f"edge ({lab[a[i]]},{lab[b[i]]}) has length zero")

    @property
    def is_tree(self) -> bool:
        return isinstance(self.graph, RootedOrderedTree)

    @property
    def bits(self) -> int | None:
        if self.kind == "int":
            return None
        return 53 if self.kind == "float64" else int(self.kind[5:])

    @property
    def edges(self) -> np.ndarray:
        return self.graph.edges

    def rays(self) -> list[tuple[int, int]]:
        """(leaf, neighbor) pairs; each leaf ray points away from the neighbor."""
        if not self.is_tree:
            return []
        t = self.graph
        out = []
        for v in range(t.n):
            if t.degree(v) == 1:
                p = t.parent[v] if t.parent[v] >= 0 else t.children[v][0]
                out.append((v, p))
        return out

    def point(self, label: str):
        i = self.graph.index[label]
        return self.x[i], self.y[i]

    def exact(self) -> tuple[np.ndarray, np.ndarray, int]:
        """Coordinates as exact integers scaled by ``2**shift``.

        Floating kinds are dyadic rationals, so this is lossless. Returns
        ``(X, Y, shift)`` with int64 arrays when the values fit.
        """
        if self.kind == "int":
            return _as_int_array(self.x), _as_int_array(self.y), 0
        pairs = [_dyadic(v) for v in self.x] + [_dyadic(v) for v in self.y]
        finite = [e for m, e in pairs if m]
        low = min(finite) if finite else 0
        ints = [m << (e - low) for m, e in pairs]
        n = len(self.x)
        return _as_int_array(ints[:n]), _as_int_array(ints[n:]), -low

    def as_float(self) -> tuple[np.ndarray, np.ndarray]:
        return (np.array([float(v) for v in self.x], dtype=np.float64),
                np.array([float(v) for v in self.y], dtype=np.float64))

    def bounding_box(self):
        return (min(self.x), min(self.y), max(self.x), max(self.y))

    # -------------------------------------------------------------- JSON

    def _fmt(self, v) -> str:
        if self.kind == "int":
            return str(int(v))
        if self.kind == "float64":
            return repr(float(v))
        bits = self.bits
        # enough digits that parsing back at ``bits`` precision is lossless
        with mpmath.workprec(bits):
            raw = mpmath.mpf(v)._mpf_
        return mpmath.libmp.to_str(raw, math.ceil(bits * 0.30103) + 2)

    def to_dict(self) -> dict:
        g = self.graph
        lab = g.labels
        doc: dict = {"kind": self.kind}
        if isinstance(g, RootedOrderedTree):
            doc["root"] = lab[g.root]
            doc["tree"] = g.to_dict()
        else:
            doc["graph"] = g.to_dict()
        doc["vertices"] = [{"id": lab[i], "x": self._fmt(self.x[i]), "y": self._fmt(self.y[i])}
                           for i in range(g.n)]
        doc["edges"] = [[lab[a], lab[b]] for a, b in g.edges.tolist()]
        if self.is_tree:
            rays = []
            # mpmath subtracts at the ambient precision, so widen it for the differences
            with mpmath.workprec(2 * (self.bits or 53) + 8):
                for leaf, p in self.rays():
                    dx, dy = self.x[leaf] - self.x[p], self.y[leaf] - self.y[p]
                    rays.append({"leaf": lab[leaf], "dx": self._fmt(dx), "dy": self._fmt(dy)})
            doc["rays"] = rays
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)


def _dyadic(v) -> tuple[int, int]:
    """``v == m * 2**e`` with integers ``m, e``."""
    if isinstance(v, (int, np.integer)):
        return int(v), 0
    if isinstance(v, mpmath.mpf):
        sign, man, exp, _ = v._mpf_
        if not man and exp:
            raise ValueError("non-finite coordinate")
        return (-int(man) if sign else int(man)), int(exp)
    f = float(v)
    if not math.isfinite(f):
        raise ValueError("non-finite coordinate")
    num, den = Fraction(f).as_integer_ratio()
    return num, -(den.bit_length() - 1)


def drawing_from_dict(doc: dict) -> Drawing:
    kind = doc.get("kind", "int")
    if "tree" in doc:
        graph = _in_vertex_order(parse_tree(json.dumps(doc["tree"])),
                                 [str(v["id"]) for v in doc["vertices"]])
    elif "graph" in doc:
        sub = doc["graph"]
        graph = (PlaneOuterGraph.make(sub["cycle"], sub.get("chords", ())) if "cycle" in sub
                 else Graph.from_edges(sub["edges"]))
    elif "root" in doc:
        graph = _tree_from_edges(doc["root"], doc["edges"], [v["id"] for v in doc["vertices"]])
    else:
        graph = Graph.from_edges(doc["edges"])
    coords = {str(v["id"]): (v["x"], v["y"]) for v in doc["vertices"]}
    missing = [lab for lab in graph.labels if lab not in coords]
    if missing:
        raise ValueError(f"no coordinates for {missing[:5]}")
    if kind == "int":
        conv = int
    elif kind == "float64":
        conv = float
    else:
        bits = int(kind[5:])

        def conv(text):
            with mpmath.workprec(bits):
                return mpmath.mpf(text)
    xs = [conv(coords[lab][0]) for lab in graph.labels]
    ys = [conv(coords[lab][1]) for lab in graph.labels]
    if kind == "int":
        x, y = _as_int_array(xs), _as_int_array(ys)
    elif kind == "float64":
        x, y = np.array(xs), np.array(ys)
    else:
        x = np.empty(len(xs), dtype=object)
        y = np.empty(len(ys), dtype=object)
        x[:], y[:] = xs, ys
    return Drawing(graph, x, y, kind)


def _in_vertex_order(t: RootedOrderedTree, ids: list[str]) -> RootedOrderedTree:
    """Same tree with vertex indices following ``ids`` (when it names every vertex)."""
    if list(t.labels) == ids or sorted(ids) != sorted(t.labels):
        return t
    new = {lab: i for i, lab in enumerate(ids)}
    old = t.labels
    table = [()] * t.n
    for v in range(t.n):
        table[new[old[v]]] = tuple(new[old[c]] for c in t.children[v])
    return RootedOrderedTree(tuple(ids), tuple(table), new[old[t.root]])


def drawing_from_json(text: str) -> Drawing:
    return drawing_from_dict(json.loads(text))


def _tree_from_edges(root, edges, order) -> RootedOrderedTree:
    # without an explicit tree document the child order follows the edge list
    children: dict[str, list[str]] = {str(v): [] for v in order}
    adj: dict[str, list[str]] = {str(v): [] for v in order}
    for a, b in edges:
        adj[str(a)].append(str(b))
        adj[str(b)].append(str(a))
    seen = {str(root)}
    stack = [str(root)]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                children[v].append(w)
                stack.append(w)
    return RootedOrderedTree.from_children(str(root), children)
