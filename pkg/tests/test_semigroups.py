from itertools import combinations
from math import gcd

import pytest
from hypothesis import given, strategies as st

from kummergaps.curve import INFTY, KummerCurve, NotUrPlusOne, Place, ur_curve
from kummergaps.oracle import in_semigroup
from kummergaps.semigroups import (
    Flavor,
    GammaSet,
    brute_force_two_point_gaps,
    closed_form_counts,
    count_gaps_two_points,
    gamma_finite_finite,
    gamma_infty_finite,
    gap_sum_finite_closed_form,
    gap_sum_infty_closed_form,
    inversions,
    inversions_finite_closed_form,
    inversions_infty_closed_form,
    lub,
    one_point_gaps,
    semigroup_box,
)

HERMITIAN_Q4_GAMMA = [(1, 11), (2, 7), (3, 3), (6, 6), (7, 2), (11, 1)]


def small_curves(max_genus):
    return [KummerCurve(m, r) for m in range(2, 2 * max_genus + 2) for r in range(2, 2 * max_genus + 2)
            if gcd(m, r) == 1 and (m - 1) * (r - 1) <= 2 * max_genus]


def test_gamma_examples(c54, c32):
    assert list(gamma_finite_finite(c54)) == HERMITIAN_Q4_GAMMA
    assert list(gamma_infty_finite(c54)) == HERMITIAN_Q4_GAMMA
    assert list(gamma_finite_finite(c32)) == [(1, 1)]
    assert list(gamma_infty_finite(c32)) == [(1, 1)]


def test_gamma_is_lexicographic(c54):
    g = GammaSet(((7, 2), (1, 11)), Flavor.FINITE_FINITE)
    assert g.pairs == ((1, 11), (7, 2))


@pytest.mark.parametrize("curve", small_curves(12), ids=lambda c: f"m{c.m}r{c.r}")
def test_gamma_projects_onto_gap_sets(curve):
    for flavor in Flavor:
        gs = gamma_finite_finite(curve) if flavor is Flavor.FINITE_FINITE else gamma_infty_finite(curve)
        p, q = flavor.places()
        assert len(gs) == curve.genus
        assert gs.first() == one_point_gaps(curve, p)
        assert gs.second() == one_point_gaps(curve, q)
        assert all(in_semigroup(curve, [p, q], pair) for pair in gs)


def test_one_point_gaps(c54, c32):
    assert one_point_gaps(c54, INFTY) == [1, 2, 3, 6, 7, 11]
    assert one_point_gaps(c54, Place(1)) == [1, 2, 3, 6, 7, 11]
    assert sum(one_point_gaps(c54, Place(1))) == gap_sum_finite_closed_form(1, 4) == 30
    assert one_point_gaps(c32, Place(1)) == [1]


def test_inversions_examples(c54):
    assert inversions(gamma_finite_finite(c54)) == 14 == inversions_finite_closed_form(1, 4)
    assert inversions(gamma_infty_finite(c54)) == 14 == inversions_infty_closed_form(1, 4)
    assert inversions([(1, 1)]) == 0


@given(st.lists(st.tuples(st.integers(0, 30), st.integers(0, 30)), max_size=12, unique=True))
def test_inversions_match_sorted_count(pairs):
    # independent count: sort by first coordinate, count descents in the second
    seq = [b for _, b in sorted(pairs)]
    expected = sum(1 for i, j in combinations(range(len(seq)), 2)
                   if seq[i] > seq[j] and sorted(pairs)[i][0] < sorted(pairs)[j][0])
    assert inversions(pairs) == expected


def test_count_examples(c54, c32):
    for flavor in ("ff", "inf"):
        count = count_gaps_two_points(c54, flavor)
        assert (count.total, count.sum_gaps_first, count.sum_gaps_second, count.inversions) == (46, 30, 30, 14)
    assert count_gaps_two_points(c32, "ff").total == 2
    assert sorted(brute_force_two_point_gaps(c32, "ff")) == [(0, 1), (1, 0)]


def test_closed_form_examples():
    assert closed_form_counts(ur_curve(1, 4)) == (46, 46)
    # (u, r) = (2, 3): pinned from brute force over the Maharaj oracle on y^7 = f(x), deg f = 3
    assert closed_form_counts(ur_curve(2, 3)) == (42, 44)
    c = ur_curve(2, 3)
    assert len(brute_force_two_point_gaps(c, "ff")) == 42
    assert len(brute_force_two_point_gaps(c, "inf")) == 44
    assert closed_form_counts(ur_curve(1, 2)) == (2, 2)
    with pytest.raises(NotUrPlusOne):
        closed_form_counts(KummerCurve(7, 4))


@pytest.mark.parametrize("u", [1, 2, 3])
@pytest.mark.parametrize("r", [2, 3, 4, 5, 6])
def test_cross_check_constants(u, r):
    c = ur_curve(u, r)
    assert sum(one_point_gaps(c, Place(1))) == gap_sum_finite_closed_form(u, r)
    assert sum(one_point_gaps(c, INFTY)) == gap_sum_infty_closed_form(u, r)
    assert inversions(gamma_finite_finite(c)) == inversions_finite_closed_form(u, r)
    assert inversions(gamma_infty_finite(c)) == inversions_infty_closed_form(u, r)


def test_lub():
    assert lub((2, 3), (5, 1)) == (5, 3)


def test_semigroup_box_examples(c54):
    box = set(semigroup_box(c54, "ff", 4))
    assert {(0, 0), (4, 0), (0, 4), (3, 3), (4, 4)} <= box
    assert (1, 0) not in box and (2, 3) not in box
    assert semigroup_box(c54, "ff", 0) == [(0, 0)]
    with pytest.raises(ValueError):
        semigroup_box(c54, "ff", -1)


@pytest.mark.parametrize("curve", small_curves(10), ids=lambda c: f"m{c.m}r{c.r}")
def test_semigroup_box_matches_oracle(curve):
    bound = 2 * curve.genus
    for flavor in Flavor:
        places = list(flavor.places())
        expected = [(a, b) for a in range(bound + 1) for b in range(bound + 1)
                    if (a, b) == (0, 0) or in_semigroup(curve, places, (a, b))]
        assert semigroup_box(curve, flavor, bound) == expected
