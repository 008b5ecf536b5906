from fractions import Fraction as Fr
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from convexlogic.realization import Interval, build_interval_surjection, open_interval, stated_cases

F = build_interval_surjection(0, 1, 2, 3, 4, 5)
GRID = [Fr(k, 4) for k in range(0, 21)]


def test_knots_and_values():
    assert [F(t) for t in F.knots] == [2, 1, 2, 3, 4, 3]
    assert F(Fr(1, 2)) == Fr(3, 2)
    assert F.codomain == Interval(Fr(1), Fr(4), True, True)
    with pytest.raises(ValueError):
        F(6)
    with pytest.raises(ValueError):
        build_interval_surjection(0, 2, 1, 3, 4, 5)


def test_open_domain_maps_onto_codomain():
    assert F.image(open_interval(0, 5)) == Interval(Fr(1), Fr(4), True, True)


def _brute_image(a, b):
    # the map is piecewise affine, so a fine exact grid plus limits decides the image
    pts = [a + (b - a) * Fr(k, 240) for k in range(1, 240)]
    vals = [F(t) for t in pts]
    return min(vals), max(vals)


@pytest.mark.parametrize("a,b", list(combinations(GRID[::2], 2)))
def test_images_are_relatively_open(a, b):
    img = F.image(open_interval(a, b))
    assert F.is_relatively_open(img)
    lo, hi = _brute_image(a, b)
    assert img.lo <= lo and hi <= img.hi
    assert img.contains(lo) and img.contains(hi)


@given(st.integers(0, 40), st.integers(0, 40))
def test_image_of_closed_interval_is_exact(i, j):
    a, b = sorted((Fr(i, 8), Fr(j, 8)))
    img = F.image(Interval(a, b, True, True))
    if a == b:
        assert img.lo == img.hi == F(a)
        return
    grid = [F(a + (b - a) * Fr(k, 64)) for k in range(65)]
    assert img.lo == min(grid + [F(k) for k in F.knots if a <= k <= b])
    assert img.hi == max(grid + [F(k) for k in F.knots if a <= k <= b])
    assert img.lo_closed and img.hi_closed


def test_case_one_holds_inside_the_identity_part():
    for a, b in combinations([Fr(k, 4) for k in range(4, 17)], 2):
        cases = stated_cases(F, a, b)
        assert (1, open_interval(a, b)) in cases
        assert F.image(open_interval(a, b)) == open_interval(a, b)
