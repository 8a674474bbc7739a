"""Pure gaps at several totally ramified places.

The arithmetic tests below reduce the l-dimension comparison of the oracle
to a per-t floor condition: for each t in 0..m-1, the restricted degree
is either negative (both summands vanish) or the lowering by one at every
place does not change any floor (both summands agree).  Tuples are written
with the P_inf entry first whenever P_inf is involved.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .curve import INFTY, KummerCurve, KummerError, Place, SOutOfRange, TooManyPlaces, resolve_u
from .oracle import is_pure_gap


@dataclass(frozen=True)
class PureGapTuple:
    entries: tuple[int, ...]
    with_infty: bool = False

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if any(a < 1 for a in self.entries):
            raise KummerError(f"pure-gap entries must be >= 1, got {self.entries}")

    @property
    def s(self) -> int:
        """Number of finite places."""
        return len(self.entries) - (1 if self.with_infty else 0)

    def places(self) -> list[Place]:
        finite = [Place(i) for i in range(1, self.s + 1)]
        return [INFTY] + finite if self.with_infty else finite


@dataclass(frozen=True)
class PureGapBox:
    low: tuple[int, ...]
    high: tuple[int, ...]
    with_infty: bool = False

    def __post_init__(self):
        object.__setattr__(self, "low", tuple(self.low))
        object.__setattr__(self, "high", tuple(self.high))
        if len(self.low) != len(self.high) or not self.low:
            raise KummerError("box corners must be non-empty and of equal arity")
        if any(a > b for a, b in zip(self.low, self.high)):
            raise KummerError(f"box needs low <= high componentwise, got {self.low}..{self.high}")
        if any(a < 1 for a in self.low):
            raise KummerError(f"box entries must be >= 1, got low={self.low}")

    def points(self) -> Iterator[tuple[int, ...]]:
        return product(*(range(a, b + 1) for a, b in zip(self.low, self.high)))

    @property
    def size(self) -> int:
        n = 1
        for a, b in zip(self.low, self.high):
            n *= b - a + 1
        return n

    @property
    def arity(self) -> int:
        return len(self.low)


def _check_s(curve: KummerCurve, s: int) -> None:
    if s < 1:
        raise KummerError("need at least one finite place")
    if s > curve.r:
        raise TooManyPlaces(f"s={s} exceeds the r={curve.r} finite totally ramified places")


def check_pure_finite(curve: KummerCurve, entries: Sequence[int]) -> bool:
    """Pure gap test for (a_1, ..., a_s) at P_1, ..., P_s."""
    _check_s(curve, len(entries))
    if any(a < 1 for a in entries):
        raise KummerError(f"pure-gap entries must be >= 1, got {tuple(entries)}")
    m, r = curve.m, curve.r
    for t in range(m):
        floors = [(a + t) // m for a in entries]
        if sum(floors) + (-r * t) // m < 0:
            continue
        if any(f != (a - 1 + t) // m for f, a in zip(floors, entries)):
            return False
    return True


def check_pure_with_infty(curve: KummerCurve, entries: Sequence[int]) -> bool:
    """Pure gap test for (a_0, a_1, ..., a_s) at P_inf, P_1, ..., P_s; s = 0 is allowed."""
    if not entries:
        raise KummerError("need at least the P_inf entry")
    if len(entries) - 1 > curve.r:
        raise TooManyPlaces(f"s={len(entries) - 1} exceeds the r={curve.r} finite totally ramified places")
    if any(a < 1 for a in entries):
        raise KummerError(f"pure-gap entries must be >= 1, got {tuple(entries)}")
    m, r = curve.m, curve.r
    a0, rest = entries[0], entries[1:]
    for t in range(m):
        f0 = (a0 - r * t) // m
        floors = [(a + t) // m for a in rest]
        if sum(floors) + f0 < 0:
            continue
        if f0 != (a0 - 1 - r * t) // m:
            return False
        if any(f != (a - 1 + t) // m for f, a in zip(floors, rest)):
            return False
    return True


def check_pure(curve: KummerCurve, entries: Sequence[int], with_infty: bool = False) -> bool:
    if with_infty:
        return check_pure_with_infty(curve, entries)
    return check_pure_finite(curve, entries)


def _canonical(places: Sequence[Place], entries: Sequence[int]):
    """Reorder to (P_inf first, then finite places) and report whether P_inf is present."""
    if len(places) != len(entries):
        raise KummerError("places and entries must have the same length")
    if len(set(places)) != len(places):
        raise KummerError("places must be distinct")
    pairs = sorted(zip(places, entries), key=lambda pe: 0 if pe[0].is_infinity else 1)
    return pairs[0][0].is_infinity, [e for _, e in pairs]


def is_pure(curve: KummerCurve, places: Sequence[Place], entries: Sequence[int], oracle: bool = False) -> bool:
    """Pure-gap test for an arbitrary place signature.

    The finite places are interchangeable in the arithmetic criterion, so
    only the position of P_inf matters there; oracle mode evaluates the
    actual places.
    """
    for p in places:
        curve.check_place(p)
    if oracle:
        return is_pure_gap(curve, places, entries)
    with_infty, ordered = _canonical(places, entries)
    return check_pure(curve, ordered, with_infty)


def tuples_with_sum_at_most(k: int, bound: int) -> Iterator[tuple[int, ...]]:
    """All k-tuples of positive integers with sum <= bound, in lexicographic order."""
    if k == 0:
        yield ()
        return
    for first in range(1, bound - (k - 1) + 1):
        for rest in tuples_with_sum_at_most(k - 1, bound - first):
            yield (first,) + rest


def enumerate_pure_gaps(
    curve: KummerCurve,
    places: Sequence[Place],
    bound: int | None = None,
    oracle: bool = False,
) -> list[tuple[int, ...]]:
    """Every pure gap at `places` (in that order) with entry sum <= bound.

    The default bound 2g - 1 is exhaustive: any gap, pure or not, has
    entry sum at most 2g - 1.
    """
    if not places:
        raise KummerError("need at least one place")
    s = sum(1 for p in places if not p.is_infinity)
    if s:
        _check_s(curve, s)
    top = 2 * curve.genus - 1
    bound = top if bound is None else min(bound, top)
    return [
        tup for tup in tuples_with_sum_at_most(len(places), bound)
        if is_pure(curve, places, tup, oracle=oracle)
    ]


def verify_box(curve: KummerCurve, box: PureGapBox, oracle: bool = False) -> bool:
    """True iff every lattice point of the box is a pure gap."""
    if oracle:
        places = PureGapTuple(box.low, box.with_infty).places()
        return all(is_pure_gap(curve, places, pt) for pt in box.points())
    return all(check_pure(curve, pt, box.with_infty) for pt in box.points())


def grow_box(curve: KummerCurve, seed: Sequence[int], with_infty: bool = False) -> PureGapBox:
    """Greedily push each upper corner coordinate outward while the box stays pure.

    Plumbing only: the result is a valid pure-gap box, not a largest one.
    """
    if not check_pure(curve, seed, with_infty):
        raise KummerError(f"seed {tuple(seed)} is not a pure gap")
    low, high = tuple(seed), list(seed)
    grew = True
    while grew:
        grew = False
        for i in range(len(high)):
            # only the new face needs checking
            face = PureGapBox(low[:i] + (high[i] + 1,) + low[i + 1:],
                              tuple(high[:i]) + (high[i] + 1,) + tuple(high[i + 1:]), with_infty)
            if verify_box(curve, face):
                high[i] += 1
                grew = True
    return PureGapBox(low, tuple(high), with_infty)


def family_two_point(curve: KummerCurve, u=None) -> dict[str, list[PureGapTuple]]:
    """The three two-point families for m = ur + 1, keyed "i", "ii", "iii".

    (i)   ((r-1)m - 2r, 1)                     at P_inf, P_1
    (ii)  ((r-2)m - r, b), 1 <= b <= u+1       at P_inf, P_1
    (iii) ((r-3)m + 1 + alpha, 1 + beta)       at P_1, P_2
          with 0 <= alpha < 2u, 0 <= beta < u

    A family whose leading entry would be non-positive for this r is
    returned empty rather than emitted.
    """
    u = resolve_u(curve, u)
    m, r = curve.m, curve.r
    fam: dict[str, list[PureGapTuple]] = {"i": [], "ii": [], "iii": []}
    a = (r - 1) * m - 2 * r
    if a >= 1:
        fam["i"].append(PureGapTuple((a, 1), True))
    a = (r - 2) * m - r
    if a >= 1:
        fam["ii"] = [PureGapTuple((a, b), True) for b in range(1, u + 2)]
    if r >= 3:
        base = (r - 3) * m + 1
        fam["iii"] = [PureGapTuple((base + al, 1 + be)) for al in range(2 * u) for be in range(u)]
    return fam


def family_many_finite(curve: KummerCurve, s: int, u=None) -> Iterator[PureGapTuple]:
    """((r-s-1)m + 1 + alpha_1, 1 + alpha_2, ..., 1 + alpha_s), alpha_i in 0..(s+1-i)u - 1, at P_1..P_s."""
    u = resolve_u(curve, u)
    m, r = curve.m, curve.r
    if not 1 <= s < r:
        raise SOutOfRange(f"need 1 <= s < r, got s={s}, r={r}")
    base = (r - s - 1) * m + 1
    ranges = [range((s + 1 - i) * u) for i in range(1, s + 1)]
    for alphas in product(*ranges):
        yield PureGapTuple((base + alphas[0],) + tuple(1 + al for al in alphas[1:]))


def family_many_infty(curve: KummerCurve, s: int, u=None) -> Iterator[PureGapTuple]:
    """((r-s-1)m - r + alpha, 1 + beta_1, ..., 1 + beta_s), alpha in 0..s, beta_i in 0..iu - 1, at P_inf, P_1..P_s."""
    u = resolve_u(curve, u)
    m, r = curve.m, curve.r
    if not 1 <= s < r - 1:
        raise SOutOfRange(f"need 1 <= s < r-1, got s={s}, r={r}")
    base = (r - s - 1) * m - r
    ranges = [range(s + 1)] + [range(i * u) for i in range(1, s + 1)]
    for combo in product(*ranges):
        yield PureGapTuple((base + combo[0],) + tuple(1 + b for b in combo[1:]), True)
