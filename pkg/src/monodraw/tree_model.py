"""Trees, outerplanar graphs, text formats, generators and binarization.

Vertices are stored by integer index; ``labels[i]`` is the user-facing id.
Children lists are ordered: they list the children of a vertex in
counterclockwise order starting right after the parent edge, which is the
left-to-right order when the tree is drawn hanging downwards.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import chain
from typing import Iterable, Mapping, Sequence

import numba
import numpy as np

__all__ = [
    "TreeFormatError",
    "RootedOrderedTree",
    "Graph",
    "PlaneOuterGraph",
    "BinarizationMap",
    "parse_tree",
    "parse_graph",
    "validate_no_degree2",
    "degree2_vertices",
    "binarize",
    "project_drawing",
    "gen_random_tree",
    "gen_k4_with_leaves",
    "k4_placement",
    "complete_binary_tree",
    "star_tree",
    "path_tree",
    "caterpillar_tree",
    "random_outerplanar",
]

LABEL_RE = re.compile(r"[A-Za-z0-9_#]+")


class TreeFormatError(ValueError):
    """Malformed tree or graph input."""


@dataclass(frozen=True, eq=False)
class RootedOrderedTree:
    labels: tuple[str, ...]
    children: tuple[tuple[int, ...], ...]
    root: int

    def __post_init__(self):
        n = len(self.labels)
        if len(self.children) != n:
            raise ValueError("children table does not match labels")
        if not 0 <= self.root < n:
            raise ValueError("root index out of range")

    @classmethod
    def from_children(cls, root: str, children: Mapping[str, Sequence[str]]) -> "RootedOrderedTree":
        """Build from ``{label: [child labels]}``; leaves may be omitted as keys."""
        labels: list[str] = [str(root)]
        index = {str(root): 0}
        for key, kids in children.items():
            for lab in (key, *kids):
                lab = str(lab)
                if lab not in index:
                    index[lab] = len(labels)
                    labels.append(lab)
        table: list[list[int]] = [[] for _ in labels]
        has_parent = [False] * len(labels)
        for key, kids in children.items():
            v = index[str(key)]
            if table[v]:
                raise TreeFormatError(f"duplicate vertex label {key!r}")
            for lab in kids:
                c = index[str(lab)]
                if has_parent[c] or c == index[str(root)]:
                    raise TreeFormatError(f"vertex {lab!r} has more than one parent")
                has_parent[c] = True
                table[v].append(c)
        tree = cls(tuple(labels), tuple(tuple(c) for c in table), 0)
        tree.preorder_array  # raises on disconnected input
        return tree

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Children as flat arrays: the children of ``v`` are ``flat[ptr[v]:ptr[v + 1]]``."""
        ptr = np.zeros(len(self.labels) + 1, dtype=np.int64)
        np.cumsum(np.fromiter(map(len, self.children), dtype=np.int64, count=len(self.labels)),
                  out=ptr[1:])
        flat = np.fromiter(chain.from_iterable(self.children), dtype=np.int64, count=int(ptr[-1]))
        return ptr, flat

    @cached_property
    def parent_array(self) -> np.ndarray:
        ptr, flat = self.csr
        par = np.full(len(self.labels), -1, dtype=np.int64)
        par[flat] = np.repeat(np.arange(len(self.labels)), np.diff(ptr))
        return par

    @cached_property
    def parent(self) -> tuple[int, ...]:
        return tuple(self.parent_array.tolist())

    @cached_property
    def degrees(self) -> np.ndarray:
        deg = np.diff(self.csr[0])
        deg += self.parent_array >= 0
        return deg

    @cached_property
    def preorder_array(self) -> np.ndarray:
        ptr, flat = self.csr
        order = _preorder(ptr, flat, self.root)
        if len(order) != len(self.labels):
            raise TreeFormatError("input is disconnected or cyclic")
        return order

    @cached_property
    def index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    @property
    def n(self) -> int:
        return len(self.labels)

    def degree(self, v: int) -> int:
        return len(self.children[v]) + (v != self.root)

    def is_leaf(self, v: int) -> bool:
        return self.degree(v) == 1

    def preorder(self) -> list[int]:
        return self.preorder_array.tolist()

    @cached_property
    def edges(self) -> np.ndarray:
        """(parent, child) index pairs in preorder of the child."""
        order = self.preorder_array[1:]
        return np.stack([self.parent_array[order], order], axis=1)

    def leaves(self) -> list[int]:
        return [v for v in self.preorder() if self.is_leaf(v)]

    def rotation(self, v: int) -> list[int]:
        """Neighbors of ``v`` in counterclockwise order, parent first."""
        p = self.parent[v]
        return ([p] if p >= 0 else []) + list(self.children[v])

    def rerooted(self, new_root: int) -> "RootedOrderedTree":
        """Same plane tree hung from another vertex; labels and indices kept."""
        table: list[tuple[int, ...]] = [()] * self.n
        stack = [(new_root, -1)]
        while stack:
            v, p = stack.pop()
            rot = self.rotation(v)
            if p >= 0:
                i = rot.index(p)
                kids = rot[i + 1:] + rot[:i]
            else:
                kids = rot
            table[v] = tuple(kids)
            stack.extend((c, v) for c in kids)
        return RootedOrderedTree(self.labels, tuple(table), new_root)

    def height(self) -> int:
        depth = [0] * self.n
        for v in self.preorder():
            for c in self.children[v]:
                depth[c] = depth[v] + 1
        return max(depth)

    def center(self) -> int:
        """A vertex of minimum eccentricity (the first of the two centers)."""
        deg = [self.degree(v) for v in range(self.n)]
        if self.n <= 2:
            return self.root
        adj = [self.rotation(v) for v in range(self.n)]
        layer = [v for v in range(self.n) if deg[v] == 1]
        remaining = self.n
        while remaining > 2:
            nxt = []
            for v in layer:
                remaining -= 1
                for w in adj[v]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
            layer = nxt
        return min(layer)

    def to_dict(self) -> dict:
        lab = self.labels
        return {
            "root": lab[self.root],
            "children": {lab[v]: [lab[c] for c in self.children[v]]
                         for v in self.preorder() if self.children[v]},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)

    def to_paren(self) -> str:
        """Parenthesized form with every label written out."""
        parts: list[str] = []
        stack: list[tuple[int, int]] = [(self.root, 0)]
        while stack:
            v, state = stack.pop()
            kids = self.children[v]
            if not kids:
                parts.append(self.labels[v])
            elif state < len(kids):
                parts.append("(" if state == 0 else ",")
                stack.append((v, state + 1))
                stack.append((kids[state], 0))
            else:
                parts.append(")" + self.labels[v])
        return "".join(parts)

    def __eq__(self, other):
        if not isinstance(other, RootedOrderedTree):
            return NotImplemented
        return self.to_dict() == other.to_dict() and set(self.labels) == set(other.labels)

    def __hash__(self):
        return hash(self.to_paren())

    def __repr__(self):
        return f"RootedOrderedTree(n={self.n}, root={self.labels[self.root]!r})"


@dataclass(frozen=True, eq=False)
class Graph:
    """Plain undirected graph, used for the K4-with-leaves fixtures."""

    labels: tuple[str, ...]
    edge_list: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def edges(self) -> np.ndarray:
        return np.array(self.edge_list, dtype=np.int64).reshape(-1, 2)

    @cached_property
    def index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def to_dict(self) -> dict:
        return {"edges": [[self.labels[a], self.labels[b]] for a, b in self.edge_list]}

    @classmethod
    def from_edges(cls, pairs: Iterable[Sequence]) -> "Graph":
        labels: list[str] = []
        index: dict[str, int] = {}
        edges = []
        for a, b in pairs:
            ij = []
            for lab in (str(a), str(b)):
                if lab not in index:
                    index[lab] = len(labels)
                    labels.append(lab)
                ij.append(index[lab])
            if ij[0] == ij[1]:
                raise TreeFormatError(f"self loop at {a!r}")
            edges.append(tuple(ij))
        return cls(tuple(labels), tuple(edges))


@dataclass(frozen=True, eq=False)
class PlaneOuterGraph:
    """Biconnected outerplanar graph given by its outer cycle and chords."""

    cycle: tuple[str, ...]
    chords: frozenset[tuple[str, str]] = field(default_factory=frozenset)

    def __post_init__(self):
        n = len(self.cycle)
        if n < 3:
            raise ValueError("outer cycle needs at least 3 vertices")
        if len(set(self.cycle)) != n:
            raise ValueError("outer cycle repeats a vertex")
        pos = {v: i for i, v in enumerate(self.cycle)}
        spans = []
        for a, b in self.chords:
            if a not in pos or b not in pos:
                raise ValueError(f"chord ({a},{b}) leaves the cycle")
            i, j = sorted((pos[a], pos[b]))
            if j - i in (0, 1) or (i == 0 and j == n - 1):
                raise ValueError(f"chord ({a},{b}) joins adjacent cycle vertices")
            spans.append((i, j))
        spans.sort(key=lambda s: (s[0], -s[1]))
        # non-crossing: chords as intervals must nest or be disjoint
        stack: list[int] = []
        for i, j in spans:
            while stack and stack[-1] <= i:
                stack.pop()
            if stack and j > stack[-1]:
                raise ValueError("chords cross")
            stack.append(j)

    @classmethod
    def make(cls, cycle: Sequence, chords: Iterable[Sequence] = ()) -> "PlaneOuterGraph":
        norm = set()
        for a, b in chords:
            a, b = str(a), str(b)
            norm.add((a, b) if a <= b else (b, a))
        return cls(tuple(str(v) for v in cycle), frozenset(norm))

    @property
    def labels(self) -> tuple[str, ...]:
        return self.cycle

    @property
    def n(self) -> int:
        return len(self.cycle)

    @cached_property
    def index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.cycle)}

    @cached_property
    def edges(self) -> np.ndarray:
        n = self.n
        out = [(i, (i + 1) % n) for i in range(n)]
        out += sorted((self.index[a], self.index[b]) for a, b in self.chords)
        return np.array(out, dtype=np.int64)

    def to_dict(self) -> dict:
        return {"cycle": list(self.cycle), "chords": [list(c) for c in sorted(self.chords)]}

    def __eq__(self, other):
        if not isinstance(other, PlaneOuterGraph):
            return NotImplemented
        return self.cycle == other.cycle and self.chords == other.chords

    def __hash__(self):
        return hash((self.cycle, self.chords))


@numba.njit(cache=True)
def _preorder(ptr, flat, root):
    n = len(ptr) - 1
    order = np.empty(n, dtype=np.int64)
    stack = np.empty(n + 1, dtype=np.int64)
    seen = np.zeros(n, dtype=np.bool_)
    top = 0
    stack[0] = root
    k = 0
    while top >= 0 and k < n:
        v = stack[top]
        top -= 1
        if seen[v]:
            break
        seen[v] = True
        order[k] = v
        k += 1
        for i in range(ptr[v + 1] - 1, ptr[v] - 1, -1):
            top += 1
            if top > n:
                return order[:k]
            stack[top] = flat[i]
    return order[:k]


# ---------------------------------------------------------------- parsing

def _position(text: str, i: int) -> str:
    line = text.count("\n", 0, i) + 1
    col = i - (text.rfind("\n", 0, i) + 1) + 1
    return f"line {line}, column {col}"


def _parse_paren(text: str) -> RootedOrderedTree:
    tokens = re.finditer(r"\s*(?:([(),;])|([A-Za-z0-9_#]+)|(\S))", text)
    labels: list[str | None] = []
    table: list[list[int]] = []
    open_nodes: list[int] = []
    top: int | None = None
    last_closed: int | None = None
    expect_item = True  # next token must start a node
    done = False
    for m in tokens:
        punct, label, bad = m.groups()
        where = m.start(m.lastindex)
        if bad is not None:
            raise TreeFormatError(f"unexpected character {bad!r} at {_position(text, where)}")
        if done:
            raise TreeFormatError(f"trailing input at {_position(text, where)}")
        if punct == ";":
            if open_nodes or top is None:
                raise TreeFormatError(f"unexpected ';' at {_position(text, where)}")
            done = True
            continue
        if expect_item:
            if punct == "(":
                v = len(labels)
                labels.append(None)
                table.append([])
                if open_nodes:
                    table[open_nodes[-1]].append(v)
                elif top is None:
                    top = v
                else:
                    raise TreeFormatError(f"second tree at {_position(text, where)}")
                open_nodes.append(v)
                continue
            if label is not None:
                v = len(labels)
                labels.append(label)
                table.append([])
                if open_nodes:
                    table[open_nodes[-1]].append(v)
                elif top is None:
                    top = v
                else:
                    raise TreeFormatError(f"second tree at {_position(text, where)}")
                expect_item = False
                last_closed = None
                if not open_nodes:
                    pass
                continue
            raise TreeFormatError(f"expected '(' or a label at {_position(text, where)}")
        # after a complete node
        if punct == ",":
            if not open_nodes:
                raise TreeFormatError(f"',' outside parentheses at {_position(text, where)}")
            expect_item = True
            last_closed = None
        elif punct == ")":
            if not open_nodes:
                raise TreeFormatError(f"unbalanced ')' at {_position(text, where)}")
            last_closed = open_nodes.pop()
        elif label is not None and last_closed is not None:
            labels[last_closed] = label
            last_closed = None
        else:
            raise TreeFormatError(f"unexpected token at {_position(text, where)}")
    if top is None:
        raise TreeFormatError("empty tree")
    if open_nodes or expect_item:
        raise TreeFormatError(f"unexpected end of input at {_position(text, len(text))}")
    used = {lab for lab in labels if lab is not None}
    counter = 0
    final: list[str] = []
    seen: set[str] = set()
    for lab in labels:
        if lab is None:
            while f"#{counter}" in used:
                counter += 1
            lab = f"#{counter}"
            counter += 1
        if lab in seen:
            raise TreeFormatError(f"duplicate vertex label {lab!r}")
        seen.add(lab)
        final.append(lab)
    return RootedOrderedTree(tuple(final), tuple(tuple(c) for c in table), top)


def parse_tree(text: str) -> RootedOrderedTree:
    """Parse a parenthesized tree such as ``((c,d)a,b)`` or a JSON tree document.

    Unlabeled inner nodes get reserved labels ``#0``, ``#1``, ... in order of
    their opening parenthesis.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise TreeFormatError(f"bad JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
        if "root" not in doc or "children" not in doc:
            raise TreeFormatError("JSON tree needs 'root' and 'children'")
        return RootedOrderedTree.from_children(str(doc["root"]), {
            str(k): [str(c) for c in v] for k, v in doc["children"].items()})
    return _parse_paren(text)


def parse_graph(text: str) -> Graph | PlaneOuterGraph:
    doc = json.loads(text)
    if "cycle" in doc:
        return PlaneOuterGraph.make(doc["cycle"], doc.get("chords", ()))
    if "edges" in doc:
        return Graph.from_edges(doc["edges"])
    raise TreeFormatError("graph JSON needs 'cycle' or 'edges'")


# ---------------------------------------------------------- degree checks

def degree2_vertices(t: RootedOrderedTree) -> list[str]:
    return [t.labels[v] for v in np.flatnonzero(t.degrees == 2).tolist()]


def validate_no_degree2(t: RootedOrderedTree) -> bool:
    return not bool(np.any(t.degrees == 2))


# ----------------------------------------------------------- binarization

@dataclass(frozen=True)
class BinarizationMap:
    """Where each original vertex went in the binarized tree."""

    original: RootedOrderedTree
    paths: Mapping[str, tuple[str, ...]]
    dummies: tuple[str, ...]

    def top(self, label: str) -> str:
        return self.paths[label][0]


def binarize(t: RootedOrderedTree) -> tuple[RootedOrderedTree, BinarizationMap]:
    """Turn ``t`` into a proper binary tree whose root has degree 2.

    A vertex with ``k >= 3`` children is replaced by a chain of ``k - 1``
    vertices; the chain continues through the first (left) child slot so the
    original children keep their left-to-right order.
    """
    if t.n < 2:
        raise ValueError("binarize needs at least two vertices")
    taken = set(t.labels)
    counter = 0

    def fresh() -> str:
        nonlocal counter
        while f"#d{counter}" in taken:
            counter += 1
        name = f"#d{counter}"
        taken.add(name)
        counter += 1
        return name

    lab = t.labels
    rot = {lab[v]: [lab[w] for w in t.rotation(v)] for v in range(t.n)}
    dummies: list[str] = []
    deg2 = [v for v in range(t.n) if t.degree(v) == 2]
    if deg2:
        root = lab[deg2[0]]
    else:
        a, b = lab[t.root], lab[t.children[t.root][0]]
        root = fresh()
        dummies.append(root)
        rot[a] = [root if w == b else w for w in rot[a]]
        rot[b] = [root if w == a else w for w in rot[b]]
        rot[root] = [a, b]

    children: dict[str, list[str]] = {}
    paths: dict[str, tuple[str, ...]] = {}
    stack: list[tuple[str, str | None]] = [(root, None)]
    while stack:
        v, p = stack.pop()
        ring = rot[v]
        if p is None:
            kids = list(ring)
        else:
            i = ring.index(p)
            kids = ring[i + 1:] + ring[:i]
        stack.extend((c, v) for c in kids)
        if v in dummies:
            children[v] = kids
            continue
        if p is not None and len(kids) == 1:
            leaf = fresh()
            dummies.append(leaf)
            children[v] = [kids[0], leaf]
            children[leaf] = []
            paths[v] = (v,)
        elif len(kids) <= 2:
            children[v] = kids
            paths[v] = (v,)
        else:
            chain = [v] + [fresh() for _ in range(len(kids) - 2)]
            dummies.extend(chain[1:])
            ws = kids[::-1]
            for i, node in enumerate(chain[:-1]):
                children[node] = [chain[i + 1], ws[i]]
            children[chain[-1]] = [kids[0], kids[1]]
            paths[v] = tuple(chain)
    out = RootedOrderedTree.from_children(root, children)
    return out, BinarizationMap(t, paths, tuple(dummies))


def project_drawing(bin_drawing, m: BinarizationMap):
    """Drop dummies; every original vertex keeps the position of its path top."""
    from .drawing import Drawing

    src = bin_drawing.graph.index
    t = m.original
    try:
        idx = [src[m.top(lab)] for lab in t.labels]
    except KeyError as exc:
        raise ValueError(f"binarized drawing has no coordinate for {exc.args[0]!r}") from None
    return Drawing(t, bin_drawing.x[idx], bin_drawing.y[idx], bin_drawing.kind,
                   dict(bin_drawing.meta, projected=True))


# ------------------------------------------------------------- generators

def _tree_from_lists(children: list[list[int]], root: int = 0) -> RootedOrderedTree:
    return RootedOrderedTree(tuple(str(i) for i in range(len(children))),
                             tuple(tuple(c) for c in children), root)


def gen_random_tree(n: int, max_deg: int = 4, seed: int = 0, no_deg2: bool = False) -> RootedOrderedTree:
    """Random ordered tree with vertex degrees at most ``max_deg``.

    Plain mode grows a random recursive tree. With ``no_deg2`` every inner
    vertex ends up with degree at least 3.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if max_deg < 3:
        raise ValueError("max_deg must be at least 3")
    rng = random.Random(seed)
    if no_deg2:
        return _random_no_deg2(n, max_deg, rng)
    children: list[list[int]] = [[] for _ in range(n)]
    deg = [0] * n
    open_ = [0]  # vertices that can take another child
    for v in range(1, n):
        k = rng.randrange(len(open_))
        p = open_[k]
        kids = children[p]
        kids.insert(rng.randint(0, len(kids)), v)
        deg[p] += 1
        deg[v] = 1
        if deg[p] >= max_deg:
            open_[k] = open_[-1]
            open_.pop()
        open_.append(v)
    return _tree_from_lists(children)


def _random_no_deg2(n: int, max_deg: int, rng: random.Random) -> RootedOrderedTree:
    if n == 2:
        return _tree_from_lists([[1], []])
    if n == 3 or (max_deg == 3 and n % 2):
        raise ValueError(f"no tree with {n} vertices, max degree {max_deg} and no degree-2 vertex")
    children: list[list[int]] = [[1, 2, 3], [], [], []]
    leaves = [1, 2, 3]
    spare: list[int] = [0] if max_deg > 3 else []  # inner vertices below max_deg

    def attach(p: int) -> int:
        v = len(children)
        children.append([])
        kids = children[p]
        kids.insert(rng.randint(0, len(kids)), v)
        return v

    def add_leaf_to_inner():
        k = rng.randrange(len(spare))
        p = spare[k]
        leaves.append(attach(p))
        if len(children[p]) + (p != 0) >= max_deg:
            spare[k] = spare[-1]
            spare.pop()

    def split_leaf():
        k = rng.randrange(len(leaves))
        p = leaves[k]
        leaves[k] = attach(p)
        leaves.append(attach(p))
        if max_deg > 3:
            spare.append(p)

    def free_slots() -> int:
        return sum(max_deg - len(children[p]) - (p != 0) for p in spare)

    if (n - 4) % 2:
        add_leaf_to_inner()
    while len(children) < n:
        # two single leaves or one split, so the parity of n - len stays even
        if free_slots() >= 2 and rng.random() < 0.5:
            add_leaf_to_inner()
            add_leaf_to_inner()
        else:
            split_leaf()
    return _tree_from_lists(children)


def complete_binary_tree(depth: int) -> RootedOrderedTree:
    """Complete binary tree with ``2**(depth+1) - 1`` vertices; the root has degree 2."""
    n = 2 ** (depth + 1) - 1
    children = [[2 * i + 1, 2 * i + 2] if 2 * i + 2 < n else [] for i in range(n)]
    return _tree_from_lists(children)


def star_tree(k: int) -> RootedOrderedTree:
    return _tree_from_lists([list(range(1, k + 1))] + [[] for _ in range(k)])


def path_tree(n: int) -> RootedOrderedTree:
    return _tree_from_lists([[i + 1] for i in range(n - 1)] + [[]])


def caterpillar_tree(spine: int, legs: int) -> RootedOrderedTree:
    """Spine path of ``spine`` vertices, each carrying ``legs`` pendant leaves."""
    children: list[list[int]] = [[] for _ in range(spine)]
    for i in range(spine):
        for _ in range(legs):
            children[i].append(len(children))
            children.append([])
        if i + 1 < spine:
            children[i].insert(legs // 2, i + 1)
    return _tree_from_lists(children)


def random_outerplanar(n: int, seed: int = 0, chord_prob: float = 0.5) -> PlaneOuterGraph:
    """Cycle ``0..n-1`` plus a random set of non-crossing chords."""
    if n < 3:
        raise ValueError("outer cycle needs at least 3 vertices")
    rng = random.Random(seed)
    chords = []
    stack = [(0, n - 1)]
    while stack:
        i, j = stack.pop()
        if j - i < 2:
            continue
        # triangulate the polygon i..j by a random apex, keep chords at random
        k = rng.randint(i + 1, j - 1)
        for a, b in ((i, k), (k, j)):
            if b - a >= 2 and rng.random() < chord_prob:
                chords.append((a, b))
        stack.append((i, k))
        stack.append((k, j))
    return PlaneOuterGraph.make([str(i) for i in range(n)], [(str(a), str(b)) for a, b in chords])


def gen_k4_with_leaves(leaves: int = 1) -> Graph:
    """K4 on ``v1..v4`` with ``leaves`` pendant vertices hung on each of them."""
    if leaves < 1:
        raise ValueError("need at least one leaf per vertex")
    pairs = [(f"v{i}", f"v{j}") for i in range(1, 5) for j in range(i + 1, 5)]
    for i in range(1, 5):
        for j in range(leaves):
            pairs.append((f"v{i}", f"w{i}_{j}"))
    return Graph.from_edges(pairs)


def k4_placement(leaves: int = 1, seed: int = 0, scale: int = 1 << 20):
    """A random planar straight-line placement of :func:`gen_k4_with_leaves`.

    The outer triangle is ``v2, v3, v4``; ``v1`` is sampled inside it and
    each leaf sits just off its vertex inside one of the incident faces.
    Coordinates are integers.
    """
    from .drawing import Drawing

    g = gen_k4_with_leaves(leaves)
    rng = random.Random(seed)
    pos = {"v2": (0, 2 * scale), "v3": (-2 * scale, -scale), "v4": (2 * scale, -scale)}
    while True:
        a, b = rng.random(), rng.random()
        if a + b < 0.9 and a > 0.05 and b > 0.05:
            break
    c = 1 - a - b
    pos["v1"] = tuple(round(a * pos["v2"][k] + b * pos["v3"][k] + c * pos["v4"][k]) for k in range(2))
    nbrs = {v: [w for w in ("v1", "v2", "v3", "v4") if w != v] for v in pos}
    reach = scale // 64
    for i in range(1, 5):
        v = f"v{i}"
        vx, vy = pos[v]
        dirs = sorted(nbrs[v], key=lambda w: np.arctan2(pos[w][1] - vy, pos[w][0] - vx))
        angles = [float(np.arctan2(pos[w][1] - vy, pos[w][0] - vx)) for w in dirs]
        for j in range(leaves):
            # pick an angular gap between consecutive neighbors, then a direction inside it
            k = rng.randrange(3)
            lo, hi = angles[k], angles[(k + 1) % 3]
            if hi <= lo:
                hi += 2 * np.pi
            t = lo + (hi - lo) * rng.uniform(0.15, 0.85)
            r = reach * rng.uniform(0.3, 1.0) / (j + 1)
            pos[f"w{i}_{j}"] = (vx + round(r * np.cos(t)), vy + round(r * np.sin(t)))
    xs = np.array([pos[lab][0] for lab in g.labels], dtype=np.int64)
    ys = np.array([pos[lab][1] for lab in g.labels], dtype=np.int64)
    return Drawing(g, xs, ys, "int", {"seed": seed})
