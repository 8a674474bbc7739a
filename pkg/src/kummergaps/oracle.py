"""Exact l(D) for divisors supported on the totally ramified places.

Such divisors are invariant under Gal(F/F_q(x)), so L(D) splits as a direct
sum over t = 0..m-1 of Riemann-Roch spaces on the rational function field,
one for each restriction of D + (y^t).  Every summand lives in genus 0, where
l(E) = max(0, deg E + 1), so l(D) is a finite sum of floors.

This module is the ground truth the closed forms elsewhere are checked
against; it deliberately uses nothing but the definitions.
"""
from __future__ import annotations

from typing import Sequence

from .curve import Divisor, KummerCurve, KummerError, Place


def restriction_profile(curve: KummerCurve, divisor: Divisor) -> tuple[int, ...]:
    """Degrees of [D + (y^t)] restricted to F_q(x), for t = 0..m-1.

    With (y) = P_1 + ... + P_r - r*P_inf, the coefficient of D + (y^t) is
    a_0 - r*t at P_inf and a_i + t at P_i.  Every supported place has
    ramification index m, so each restricted coefficient is a floor by m.
    Untouched P_i contribute floor(t/m) = 0 and are skipped.

    >>> from .curve import INFTY, Place
    >>> restriction_profile(KummerCurve(5, 4), Divisor({INFTY: 7, Place(1): 1}))
    (1, 0, -1, -1, -1)
    """
    for p in divisor:
        curve.check_place(p)
    m, r = curve.m, curve.r
    a0 = 0
    rest = []
    for p, c in divisor.items():
        if p.is_infinity:
            a0 = c
        else:
            rest.append(c)
    return tuple((a0 - r * t) // m + sum((a + t) // m for a in rest) for t in range(m))


def dim_L(curve: KummerCurve, divisor: Divisor) -> int:
    return sum(d + 1 for d in restriction_profile(curve, divisor) if d >= 0)


def _divisor(curve: KummerCurve, places: Sequence[Place], values: Sequence[int]) -> Divisor:
    if not places:
        raise KummerError("need at least one place")
    for p in places:
        curve.check_place(p)
    return Divisor.from_tuple(places, values)


def is_gap(curve: KummerCurve, places: Sequence[Place], values: Sequence[int]) -> bool:
    """True iff l(D) = l(D - P_j) for some j, with D = sum n_j P_j."""
    if any(v < 0 for v in values):
        raise KummerError(f"gap tuples are non-negative, got {tuple(values)}")
    D = _divisor(curve, places, values)
    ell = dim_L(curve, D)
    return any(dim_L(curve, D - p) == ell for p in places)


def is_pure_gap(curve: KummerCurve, places: Sequence[Place], values: Sequence[int]) -> bool:
    """True iff l(D) = l(D - P_1 - ... - P_s); equivalent to the drop failing at every P_j."""
    if any(v < 1 for v in values):
        raise KummerError(f"pure-gap tuples have entries >= 1, got {tuple(values)}")
    D = _divisor(curve, places, values)
    lowered = Divisor.from_tuple(places, [v - 1 for v in values])
    return dim_L(curve, D) == dim_L(curve, lowered)


def in_semigroup(curve: KummerCurve, places: Sequence[Place], values: Sequence[int]) -> bool:
    """Membership in H(P_1, ..., P_s): a non-negative tuple that is not a gap."""
    return not is_gap(curve, places, values)
