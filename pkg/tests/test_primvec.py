import math
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, strategies as st

from monodraw import (
    CONES,
    angle_less,
    farey_size,
    farey_vectors,
    map_to_cone,
    min_pairwise_angle,
    octant_fill,
    select_d_for,
    separation_bound,
    sort_by_angle,
    verify_neighbor_identity,
)


def brute_farey(d):
    fr = sorted({Fraction(x, y) for y in range(1, d + 1) for x in range(0, y + 1)})
    return [(f.numerator, f.denominator) for f in fr]


def brute_min_angle(vs):
    best = None
    for u, v in combinations(vs, 2):
        a = math.atan2(abs(u[0] * v[1] - u[1] * v[0]), u[0] * v[0] + u[1] * v[1])
        if best is None or a < best[0]:
            best = (a, {tuple(u), tuple(v)})
    return best


def test_small_orders():
    assert farey_vectors(1).tolist() == [[0, 1], [1, 1]]
    assert [f"{x}/{y}" for x, y in farey_vectors(6).tolist()] == [
        "0/1", "1/6", "1/5", "1/4", "1/3", "2/5", "1/2", "3/5", "2/3", "3/4", "4/5", "5/6", "1/1"]
    assert len(farey_vectors(12)) == 47


@pytest.mark.parametrize("d", [1, 2, 3, 7, 12, 25, 40])
def test_against_brute_force(d):
    assert [tuple(v) for v in farey_vectors(d).tolist()] == brute_farey(d)
    assert farey_size(d) == len(brute_farey(d))


def test_bad_order():
    with pytest.raises(ValueError):
        farey_vectors(0)
    with pytest.raises(ValueError):
        select_d_for(0)


def test_select_d():
    assert select_d_for(13) == 12
    assert select_d_for(1) == 4 and farey_size(4) == 7
    assert select_d_for(100) == 33 and farey_size(33) >= 100


def test_neighbor_identity():
    assert verify_neighbor_identity(farey_vectors(6))
    assert verify_neighbor_identity([(0, 1), (1, 1)])
    shuffled = farey_vectors(6)[[0, 2, 1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]]
    assert not verify_neighbor_identity(shuffled)


@pytest.mark.parametrize("cone,image,lo,hi", [
    ("C1", (2, 1), 0, 45), ("C2", (-2, 1), 135, 180), ("C3", (1, -2), 270, 315)])
def test_cones(cone, image, lo, hi):
    out = map_to_cone(np.array([[1, 2]]), cone)
    assert tuple(out[0]) == image
    assert CONES[cone][1] == (lo, hi)
    for x, y in map_to_cone(farey_vectors(9), cone).tolist():
        ang = math.degrees(math.atan2(y, x)) % 360
        assert lo - 1e-9 <= ang <= hi + 1e-9


def test_cone_rejects_outside_vectors():
    with pytest.raises(ValueError):
        map_to_cone(np.array([[2, 1]]), "C1")


def test_octant_fill_f6():
    fan = octant_fill(farey_vectors(6))
    assert len(fan) == 96
    assert tuple(fan[0]) == (1, 1)
    assert len({tuple(v) for v in fan.tolist()}) == 96
    ang = np.mod(np.arctan2(fan[:, 1], fan[:, 0]) - math.pi / 4, 2 * math.pi)
    assert np.all(np.diff(ang) > 0)


def test_min_angle_f6_fan():
    angle, pair = min_pairwise_angle(octant_fill(farey_vectors(6)))
    assert angle == pytest.approx(math.atan(1 / 50), abs=1e-15)
    assert set(pair) == {(4, 5), (5, 6)}
    assert math.degrees(angle) == pytest.approx(1.1458, abs=1e-4)


def test_min_angle_f12_brute():
    angle, pair = min_pairwise_angle(farey_vectors(12))
    assert angle == pytest.approx(math.atan(1 / 242), abs=1e-15)
    assert set(pair) == {(10, 11), (11, 12)}
    b_angle, b_pair = brute_min_angle(farey_vectors(12).tolist())
    assert angle == pytest.approx(b_angle, abs=1e-15) and set(pair) == b_pair


def test_min_angle_trivial():
    angle, _ = min_pairwise_angle([(1, 0), (0, 1)])
    assert angle == pytest.approx(math.pi / 2)
    with pytest.raises(ValueError):
        min_pairwise_angle([(1, 0)])


def test_sort_by_angle_exact():
    vs = [(1, 0), (-1, 0), (0, -1), (0, 1), (1, 1), (-1, -1), (10**30, 1), (1, -10**30)]
    assert sort_by_angle(vs) == [(1, 0), (10**30, 1), (1, 1), (0, 1), (-1, 0),
                                 (-1, -1), (0, -1), (1, -10**30)]


def test_angle_less():
    # (dot, |cross|) of 45 and 90 degrees
    assert angle_less((1, 1), (0, 1))
    assert not angle_less((0, 1), (1, 1))
    assert angle_less((1, 0), (-1, 0))


def test_separation_bound_holds_for_full_sets():
    for d in (3, 6, 12, 30):
        vs = farey_vectors(d)
        angle, _ = min_pairwise_angle(vs)
        assert angle >= separation_bound(len(vs), 1.0)


@given(st.integers(1, 60))
def test_size_is_phi_sum(d):
    phi = sum(1 for m in range(1, d + 1) for k in range(1, m + 1) if math.gcd(k, m) == 1)
    assert farey_size(d) == 1 + phi


@given(st.integers(2, 80))
def test_identity_and_minimum_everywhere(d):
    vs = farey_vectors(d)
    assert verify_neighbor_identity(vs)
    # neighbors p/q, r/s span tan(angle) = 1 / (pr + qs)
    dots = vs[:-1, 0] * vs[1:, 0] + vs[:-1, 1] * vs[1:, 1]
    angle, _ = min_pairwise_angle(vs)
    assert angle == pytest.approx(math.atan(1 / dots.max()), rel=1e-12)
