import numpy as np
from hypothesis import HealthCheck, settings

from monodraw import Drawing, Graph, RootedOrderedTree

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def tree(root, children):
    return RootedOrderedTree.from_children(root, children)


def int_drawing(g, points):
    """Integer drawing from ``{label: (x, y)}``."""
    xs = np.array([points[lab][0] for lab in g.labels], dtype=np.int64)
    ys = np.array([points[lab][1] for lab in g.labels], dtype=np.int64)
    return Drawing(g, xs, ys, "int")


def path_drawing(vectors):
    """A path whose consecutive edge vectors are ``vectors``, rooted at its first vertex."""
    labels = [f"p{i}" for i in range(len(vectors) + 1)]
    t = tree(labels[0], {a: [b] for a, b in zip(labels, labels[1:])})
    pts = {labels[0]: (0, 0)}
    x = y = 0
    for lab, (dx, dy) in zip(labels[1:], vectors):
        x, y = x + dx, y + dy
        pts[lab] = (x, y)
    return int_drawing(t, pts)


def graph_drawing(pairs, points):
    return int_drawing(Graph.from_edges(pairs), points)


def strong_reach_oracle(adj, pos, a, b):
    """Is there an a-b path whose every edge has positive projection on b - a?"""
    wx, wy = pos[b][0] - pos[a][0], pos[b][1] - pos[a][1]
    seen, stack = {a}, [a]
    while stack:
        v = stack.pop()
        if v == b:
            return True
        for w in adj[v]:
            if w not in seen and (pos[w][0] - pos[v][0]) * wx + (pos[w][1] - pos[v][1]) * wy > 0:
                seen.add(w)
                stack.append(w)
    return False


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
