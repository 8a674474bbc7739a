"""Two-point Weierstrass semigroups at totally ramified places.

Gamma(P, Q) is the graph of the bijection between the gap sets G(P) and G(Q)
that sends a gap a at P to the least b with (a, b) in H(P, Q).  Its
lub-closure with the axis semigroups regenerates H(P, Q), and its inversion
count feeds Homma's formula for |G(P, Q)|.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .curve import INFTY, KummerCurve, Place, UParameter, checked, resolve_u
from .oracle import is_gap


class Flavor(str, enum.Enum):
    FINITE_FINITE = "ff"
    INFTY_FINITE = "inf"

    def places(self) -> tuple[Place, Place]:
        if self is Flavor.FINITE_FINITE:
            return Place(1), Place(2)
        return INFTY, Place(1)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class GammaSet:
    pairs: tuple[tuple[int, int], ...]
    flavor: Flavor

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(sorted(self.pairs)))

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def first(self) -> list[int]:
        return sorted(a for a, _ in self.pairs)

    def second(self) -> list[int]:
        return sorted(b for _, b in self.pairs)


def gamma_finite_finite(curve: KummerCurve) -> GammaSet:
    """Gamma(P_1, P_2) for two finite totally ramified places.

    (m*i - j, m*(ceil(rj/m) - i) - j) over 1 + floor(m/r) <= j <= m-1 and
    1 <= i <= ceil(rj/m) - 1; the pole divisor of y^j / ((x-a1)^i (x-a2)^k).
    """
    m, r = curve.m, curve.r
    pairs = []
    for j in range(1 + m // r, m):
        c = _ceil_div(r * j, m)
        for i in range(1, c):
            pairs.append((m * i - j, m * (c - i) - j))
    return GammaSet(tuple(pairs), Flavor.FINITE_FINITE)


def gamma_infty_finite(curve: KummerCurve) -> GammaSet:
    """Gamma(P_inf, P_1): (mr - mj - ri, i + m(j-1)) over 1 <= i <= m-1-floor(m/r), 1 <= j <= r-1-floor(ri/m)."""
    m, r = curve.m, curve.r
    pairs = []
    for i in range(1, m - m // r):
        for j in range(1, r - (r * i) // m):
            pairs.append((m * r - m * j - r * i, i + m * (j - 1)))
    return GammaSet(tuple(pairs), Flavor.INFTY_FINITE)


def gamma(curve: KummerCurve, flavor: Flavor | str) -> GammaSet:
    flavor = Flavor(flavor)
    if flavor is Flavor.FINITE_FINITE:
        return gamma_finite_finite(curve)
    return gamma_infty_finite(curve)


def one_point_gaps(curve: KummerCurve, place: Place) -> list[int]:
    """G(P) by brute force over 1..2g-1 with the l-dimension oracle."""
    curve.check_place(place)
    return [n for n in range(1, 2 * curve.genus) if is_gap(curve, [place], [n])]


def inversions(gamma_set: GammaSet | set | list) -> int:
    """Number of pairs {(a, b), (a', b')} with a < a' and b > b'."""
    pairs = list(gamma_set)
    return sum(1 for (a, b), (c, d) in combinations(pairs, 2) if (a - c) * (b - d) < 0)


@dataclass(frozen=True)
class TwoPointGapCount:
    total: int
    sum_gaps_first: int
    sum_gaps_second: int
    inversions: int

    def __post_init__(self):
        assert self.total == self.sum_gaps_first + self.sum_gaps_second - self.inversions


def count_gaps_two_points(curve: KummerCurve, flavor: Flavor | str) -> TwoPointGapCount:
    """|G(P, Q)| = sum G(P) + sum G(Q) - r(P, Q)."""
    flavor = Flavor(flavor)
    p, q = flavor.places()
    s1 = sum(one_point_gaps(curve, p))
    s2 = sum(one_point_gaps(curve, q))
    inv = inversions(gamma(curve, flavor))
    return TwoPointGapCount(s1 + s2 - inv, s1, s2, inv)


def brute_force_two_point_gaps(curve: KummerCurve, flavor: Flavor | str) -> list[tuple[int, int]]:
    """All gaps (a, b) at the flavor's two places, axes included.

    A gap has a + b <= 2g - 1: past that, D - P_j has degree >= 2g - 1 and
    l drops by exactly one at either place.
    """
    places = list(Flavor(flavor).places())
    top = 2 * curve.genus - 1
    return [
        (a, b)
        for a in range(top + 1)
        for b in range(top + 1 - a)
        if (a, b) != (0, 0) and is_gap(curve, places, (a, b))
    ]


def closed_form_counts(curve: KummerCurve, u: UParameter | int | None = None) -> tuple[int, int]:
    """(|G(P_1, P_2)|, |G(P_inf, P_1)|) for m = ur + 1."""
    u = resolve_u(curve, u)
    r = curve.r
    n_ff = u * r * (r - 1) * (3 * u * r * r - 5 * u * r + 4 * r + 4 * u - 2)
    n_inf = u * r * (r - 1) * (3 * u * r * r - 3 * u * r + 2 * r + 2)
    assert n_ff % 12 == 0 and n_inf % 12 == 0
    return checked(n_ff // 12), checked(n_inf // 12)


# Cross-check constants for m = ur + 1 (not used by the counting path above).

def gap_sum_finite_closed_form(u: int, r: int) -> int:
    num = u * r * (r - 1) * (2 * r * r * u - 2 * r * u + 2 * r - u - 1)
    assert num % 12 == 0
    return num // 12


def gap_sum_infty_closed_form(u: int, r: int) -> int:
    num = u * r * (r - 1) * (2 * u * r * r - u * r + r - 2)
    assert num % 12 == 0
    return num // 12


def inversions_finite_closed_form(u: int, r: int) -> int:
    num = u * u * (r - 2) * (r - 1) * r * (r + 3)
    assert num % 12 == 0
    return num // 12


def inversions_infty_closed_form(u: int, r: int) -> int:
    num = u * (r - 1) * r * (u * r * r + r - u - 5)
    assert num % 12 == 0
    return num // 12


def lub(x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
    return max(x[0], y[0]), max(x[1], y[1])


def semigroup_box(curve: KummerCurve, flavor: Flavor | str, bound: int) -> list[tuple[int, int]]:
    """H(P, Q) inside [0, bound]^2, rebuilt as the lub-closure of Gamma and the two axes.

    The one-point semigroups are the complements of the gap lists, which
    sit below 2g.  lub never decreases a coordinate, so only generators
    inside the box can produce points inside it.
    """
    if bound < 0:
        raise ValueError("bound must be >= 0")
    flavor = Flavor(flavor)
    p, q = flavor.places()
    gaps_p = set(one_point_gaps(curve, p))
    gaps_q = set(one_point_gaps(curve, q))
    gens = {(a, 0) for a in range(bound + 1) if a not in gaps_p}
    gens |= {(0, b) for b in range(bound + 1) if b not in gaps_q}
    gens |= {(a, b) for a, b in gamma(curve, flavor) if a <= bound and b <= bound}
    gens = sorted(gens)
    return sorted({lub(x, y) for i, x in enumerate(gens) for y in gens[i:]})
