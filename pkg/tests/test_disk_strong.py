import math

import mpmath
import pytest

from monodraw import (
    CircularSegment,
    PrecisionExhausted,
    PrecisionPolicy,
    check_strictly_convex,
    check_strong_monotone,
    complete_binary_tree,
    disk_layout,
    draw_disk,
    draw_strong,
    gen_random_tree,
    path_tree,
    star_tree,
)
from conftest import tree


def right_cap():
    # the cap right of the chord x = 1/2 spans angles -pi/3 .. pi/3
    return CircularSegment(-mpmath.pi / 3, mpmath.pi / 3, (mpmath.mpf(0.5), mpmath.mpf(0)))


def test_place_children_feet():
    from monodraw import place_children
    with mpmath.workprec(200):
        l, r, seg_l, seg_r = place_children((0.5, 0), right_cap())
        s3 = mpmath.sqrt(3)
        assert abs(l[0] - mpmath.mpf(7) / 8) < 1e-50 and abs(l[1] - s3 / 8) < 1e-50
        assert abs(r[0] - mpmath.mpf(7) / 8) < 1e-50 and abs(r[1] + s3 / 8) < 1e-50
        # the split point is where the perpendicular ray meets the circle: (1, 0)
        assert abs(seg_l.start) < 1e-50 and abs(seg_r.stop) < 1e-50
        assert seg_l.owner_on_chord_interior() and seg_r.owner_on_chord_interior()


def test_place_children_mirror_symmetry():
    from monodraw import place_children
    with mpmath.workprec(120):
        seg = CircularSegment(mpmath.mpf("0.1"), mpmath.mpf("1.3"), None)
        v = (mpmath.mpf("0.55"), mpmath.mpf("0.45"))
        l, r, _, _ = place_children(v, seg)
        mseg = CircularSegment(-seg.stop, -seg.start, None)
        ml, mr, _, _ = place_children((v[0], -v[1]), mseg)
        assert abs(ml[0] - r[0]) < 1e-30 and abs(ml[1] + r[1]) < 1e-30
        assert abs(mr[0] - l[0]) < 1e-30 and abs(mr[1] + l[1]) < 1e-30


def test_place_children_on_diameter_is_symmetric():
    from monodraw import place_children
    with mpmath.workprec(120):
        seg = CircularSegment(-mpmath.pi / 2, mpmath.pi / 2, None)
        l, r, _, _ = place_children((0, 0), seg)
        assert abs(l[0] - r[0]) < 1e-30 and abs(l[1] + r[1]) < 1e-30


def test_segment_contains():
    seg = right_cap()
    assert seg.contains((0.9, 0.0))
    assert not seg.contains((0.3, 0.0))
    assert not seg.contains((0.5, 0.0))
    assert seg.contains((0.5 + 1e-12, 0.0), strict=False)
    assert not seg.contains((1.1, 0.0))


def test_disk_root_children():
    d = draw_disk(tree("r", {"r": ["a", "b"]}))
    assert (d.point("r")) == (0, 0)
    assert d.point("a") == (0.5, 0) and d.point("b") == (-0.5, 0)


def test_depth_one_feet():
    d = draw_disk(complete_binary_tree(2))
    xs = sorted((float(d.x[v]), float(d.y[v])) for v in range(3, 7))
    want = sorted([(7 / 8, math.sqrt(3) / 8), (7 / 8, -math.sqrt(3) / 8),
                   (-7 / 8, math.sqrt(3) / 8), (-7 / 8, -math.sqrt(3) / 8)])
    for got, exp in zip(xs, want):
        assert got == pytest.approx(exp, abs=1e-12)


@pytest.mark.parametrize("depth", [1, 2, 3, 5])
def test_disk_complete_binary(depth):
    d = draw_disk(complete_binary_tree(depth))
    assert check_strong_monotone(d, 1e-9)
    assert check_strictly_convex(d)


def test_disk_rejects_non_binary():
    with pytest.raises(ValueError, match="children"):
        draw_disk(star_tree(3))
    with pytest.raises(ValueError):
        draw_disk(tree("r", {"r": ["a", "b"], "a": ["c"]}))


def test_sibling_segments_disjoint():
    _, segs = disk_layout(complete_binary_tree(4))
    t = complete_binary_tree(4)
    for v in range(t.n):
        kids = t.children[v]
        if v == t.root or len(kids) < 2:
            continue
        a, b = segs[kids[0]], segs[kids[1]]
        assert a.stop <= b.start or b.stop <= a.start
        # children sit inside the parent's cap
        assert segs[v].start <= min(a.start, b.start) and max(a.stop, b.stop) <= segs[v].stop


def test_fixed_precision_too_small():
    with pytest.raises(PrecisionExhausted):
        draw_disk(complete_binary_tree(10), PrecisionPolicy(bits=53))


def test_precision_kinds():
    d = draw_disk(complete_binary_tree(2), PrecisionPolicy(bits=53))
    assert d.kind == "float64"
    d = draw_disk(complete_binary_tree(2), PrecisionPolicy(bits=200))
    assert d.kind == "float200"
    auto = draw_disk(complete_binary_tree(8))
    assert auto.kind == f"float{auto.meta['bits']}" and auto.meta["bits"] > 128
    with pytest.raises(ValueError):
        PrecisionPolicy(bits=20)
    with pytest.raises(ValueError):
        PrecisionPolicy(epsilon=0)


def test_strong_single_edge():
    d = draw_strong(tree("u", {"u": ["v"]}))
    assert check_strong_monotone(d)


@pytest.mark.parametrize("t", [star_tree(5), path_tree(5), tree("r", {"r": ["a"], "a": ["b", "c", "d"]})],
                         ids=["K1,5", "P5", "mixed"])
def test_strong_small_trees(t):
    d = draw_strong(t)
    assert [str(x) for x in d.graph.labels] == list(t.labels)
    assert check_strong_monotone(d, 1e-9)


def test_literal_binarize_route_breaks_on_high_degree():
    # projecting the comb moves several edges onto one substitute vertex, and
    # the parent edge of a comb vertex no longer separates its subtree
    d = draw_strong(star_tree(5), method="binarize")
    assert not check_strong_monotone(d, 1e-9)
    # vertices of degree at most 3 need no comb, so the route works there
    d3 = draw_strong(complete_binary_tree(3), method="binarize")
    assert check_strong_monotone(d3, 1e-9)


def test_unknown_method():
    with pytest.raises(ValueError):
        draw_strong(star_tree(3), method="spiral")


@pytest.mark.parametrize("seed", range(4))
def test_strong_random(seed):
    d = draw_strong(gen_random_tree(60, 5, seed=seed))
    assert check_strong_monotone(d, 1e-9)


def test_deterministic():
    t = gen_random_tree(40, 4, seed=5)
    assert draw_strong(t).to_json() == draw_strong(t).to_json()


def test_high_precision_json_is_lossless():
    from monodraw import drawing_from_json
    d = draw_disk(complete_binary_tree(7))
    assert d.meta["bits"] > 53
    back = drawing_from_json(d.to_json())
    assert back.kind == d.kind
    assert all(back.point(lab) == d.point(lab) for lab in d.graph.labels)
    assert check_strong_monotone(back, 1e-9)
