"""Command line front end: ``monodraw gen | draw | verify | primvec | render``."""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

from .convex_grid import Degree2Error, draw_ce_grid, draw_inorder
from .disk_strong import PrecisionExhausted, PrecisionPolicy, draw_disk, draw_strong
from .drawing import Drawing, drawing_from_json
from .outerplanar import draw_outerchain
from .primvec import farey_vectors, octant_fill
from .tree_model import (
    PlaneOuterGraph,
    TreeFormatError,
    caterpillar_tree,
    complete_binary_tree,
    gen_k4_with_leaves,
    gen_random_tree,
    k4_placement,
    parse_graph,
    parse_tree,
    random_outerplanar,
    star_tree,
)
from .verify import CHECKS, run_checks

GEN_KINDS = ("random-tree", "binary", "star", "caterpillar", "k4leaves", "outerplanar-random")
ALGOS = ("inorder", "ce", "disk", "strong", "outerchain")


class CliError(Exception):
    pass


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    return int(os.environ.get("MONODRAW_SEED", "0"))


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


# ------------------------------------------------------------ gen

def cmd_gen(args) -> int:
    seed = _seed(args)
    kind = args.kind
    if kind == "random-tree":
        doc = gen_random_tree(args.n, args.max_deg, seed, no_deg2=args.no_deg2).to_dict()
    elif kind == "binary":
        doc = complete_binary_tree(args.depth).to_dict()
    elif kind == "star":
        doc = star_tree(args.n - 1).to_dict()
    elif kind == "caterpillar":
        doc = caterpillar_tree(args.n, args.l).to_dict()
    elif kind == "k4leaves":
        if args.placement:
            doc = k4_placement(args.l, seed).to_dict()
        else:
            doc = gen_k4_with_leaves(args.l).to_dict()
    else:
        doc = random_outerplanar(args.n, seed, args.chord_prob).to_dict()
    _emit(json.dumps(doc, indent=1), args.out)
    return 0


# ------------------------------------------------------------ draw

def _policy(args) -> PrecisionPolicy:
    return PrecisionPolicy(bits=args.precision, epsilon=args.epsilon)


def cmd_draw(args) -> int:
    text = _read(args.input)
    if args.algo == "outerchain":
        g = parse_graph(text)
        if not isinstance(g, PlaneOuterGraph):
            raise CliError("outerchain needs a graph document with an outer cycle")
        d = draw_outerchain(g)
    else:
        t = parse_tree(text)
        if args.algo == "inorder":
            d = draw_inorder(t)
        elif args.algo == "ce":
            d = draw_ce_grid(t)
        elif args.algo == "disk":
            d = draw_disk(t, _policy(args))
        else:
            d = draw_strong(t, _policy(args), method=args.method)
    _emit(d.to_json(), args.out)
    if args.svg:
        Path(args.svg).write_text(render_svg(d))
    return 0


# ------------------------------------------------------------ verify

def cmd_verify(args) -> int:
    names = [c.strip() for c in args.checks.split(",") if c.strip()]
    if not names:
        raise CliError("no checks requested")
    d = drawing_from_json(_read(args.input))
    if args.max_n and d.graph.n > args.max_n:
        raise CliError(f"drawing has {d.graph.n} vertices, above --max-n {args.max_n}")
    reports = run_checks(d, names, args.epsilon)
    ok = all(r.passed for r in reports)
    out = {"passed": ok, "checks": [r.to_dict() for r in reports]}
    sys.stdout.write(json.dumps(out, indent=1, default=str) + "\n")
    return 0 if ok else 1


# ------------------------------------------------------------ primvec

def cmd_primvec(args) -> int:
    vs = farey_vectors(args.d)
    if args.fill:
        vs = octant_fill(vs)
    _emit("\n".join(f"{x} {y}" for x, y in vs.tolist()), args.out)
    return 0


# ------------------------------------------------------------ render

def _clip_ray(x, y, dx, dy, box) -> tuple[float, float]:
    xmin, ymin, xmax, ymax = box
    t = math.inf
    if dx > 0:
        t = min(t, (xmax - x) / dx)
    elif dx < 0:
        t = min(t, (xmin - x) / dx)
    if dy > 0:
        t = min(t, (ymax - y) / dy)
    elif dy < 0:
        t = min(t, (ymin - y) / dy)
    t = max(t, 0.0) if math.isfinite(t) else 0.0
    return x + t * dx, y + t * dy


def render_svg(d: Drawing, size: int = 800) -> str:
    """SVG with the y axis pointing up, 2px vertex dots and dashed leaf rays."""
    xs, ys = d.as_float()
    lo_x, hi_x = float(xs.min()), float(xs.max())
    lo_y, hi_y = float(ys.min()), float(ys.max())
    cx, cy = (lo_x + hi_x) / 2, (lo_y + hi_y) / 2
    half = max(hi_x - lo_x, hi_y - lo_y, 1e-300) / 2 * 1.2
    box = (cx - half, cy - half, cx + half, cy + half)
    scale = size / (2 * half)

    def sx(x):
        return (x - box[0]) * scale

    def sy(y):
        return (box[3] - y) * scale

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
             f'viewBox="0 0 {size} {size}">',
             '<rect width="100%" height="100%" fill="white"/>']
    for a, b in d.edges.tolist():
        parts.append(f'<line x1="{sx(xs[a]):.3f}" y1="{sy(ys[a]):.3f}" x2="{sx(xs[b]):.3f}" '
                     f'y2="{sy(ys[b]):.3f}" stroke="black" stroke-width="1"/>')
    for leaf, nb in d.rays():
        ex, ey = _clip_ray(xs[leaf], ys[leaf], xs[leaf] - xs[nb], ys[leaf] - ys[nb], box)
        parts.append(f'<line x1="{sx(xs[leaf]):.3f}" y1="{sy(ys[leaf]):.3f}" x2="{sx(ex):.3f}" '
                     f'y2="{sy(ey):.3f}" stroke="gray" stroke-width="1" stroke-dasharray="4 3"/>')
    for i in range(d.graph.n):
        parts.append(f'<circle cx="{sx(xs[i]):.3f}" cy="{sy(ys[i]):.3f}" r="2" fill="black"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def cmd_render(args) -> int:
    d = drawing_from_json(_read(args.input))
    svg = render_svg(d)
    if args.out:
        Path(args.out).write_text(svg)
    else:
        sys.stdout.write(svg)
    return 0


# ------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="monodraw", description="Monotone drawings of trees and graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a tree or graph")
    g.add_argument("kind", choices=GEN_KINDS)
    g.add_argument("--n", type=int, default=10, help="vertex count (spine length for caterpillar)")
    g.add_argument("--l", type=int, default=1, help="leaves per vertex (k4leaves, caterpillar)")
    g.add_argument("--depth", type=int, default=3)
    g.add_argument("--max-deg", type=int, default=4)
    g.add_argument("--no-deg2", action="store_true")
    g.add_argument("--chord-prob", type=float, default=0.5)
    g.add_argument("--placement", action="store_true",
                   help="k4leaves: emit a sample planar drawing instead of the graph")
    g.add_argument("--seed", type=int, default=None, help="overrides MONODRAW_SEED")
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    d = sub.add_parser("draw", help="draw a tree or outerplanar graph")
    d.add_argument("--algo", choices=ALGOS, required=True)
    d.add_argument("--in", dest="input", required=True)
    d.add_argument("--out")
    d.add_argument("--svg")
    d.add_argument("--precision", type=int, default=None,
                   help="bits for disk/strong (default: chosen automatically)")
    d.add_argument("--epsilon", type=float, default=1e-9)
    d.add_argument("--method", choices=("fan", "binarize"), default="fan")
    d.set_defaults(func=cmd_draw)

    v = sub.add_parser("verify", help="check properties of a drawing")
    v.add_argument("--checks", required=True, help=f"comma list from {','.join(CHECKS)}")
    v.add_argument("--in", dest="input", required=True)
    v.add_argument("--epsilon", type=float, default=1e-9)
    v.add_argument("--max-n", type=int, default=5000, help="refuse larger drawings (0 = no limit)")
    v.set_defaults(func=cmd_verify)

    pv = sub.add_parser("primvec", help="primitive vector tables")
    pv.add_argument("action", choices=("dump",))
    pv.add_argument("--d", type=int, required=True)
    pv.add_argument("--fill", action="store_true", help="reflect into all eight octants")
    pv.add_argument("--out")
    pv.set_defaults(func=cmd_primvec)

    r = sub.add_parser("render", help="SVG from a drawing file")
    r.add_argument("--in", dest="input", required=True)
    r.add_argument("--out")
    r.set_defaults(func=cmd_render)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CliError, TreeFormatError, Degree2Error, PrecisionExhausted, ValueError,
            KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        sys.stderr.write(f"monodraw: error: {msg}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
