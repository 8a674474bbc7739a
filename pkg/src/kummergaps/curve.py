"""Kummer curves y^m = f(x), their totally ramified places and divisors.

Only the pair (m, r) matters for everything in this package; the polynomial
f(x) itself is never represented.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Iterator, Mapping, Sequence

INT64_MAX = 2**63 - 1


class KummerError(ValueError):
    """Base class for every validation error raised by this package."""


class NonCoprime(KummerError):
    pass


class CharDividesM(KummerError):
    pass


class NotUrPlusOne(KummerError):
    pass


class UnsupportedPlace(KummerError):
    pass


class TooManyPlaces(KummerError):
    pass


class SOutOfRange(KummerError):
    pass


class BoxNotPure(KummerError):
    pass


class DegreeOutOfRange(KummerError):
    pass


def checked(value: int) -> int:
    """Reject integers outside the signed 64-bit range instead of letting them wrap elsewhere."""
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise OverflowError(f"{value} does not fit in 64 bits")
    return value


@dataclass(frozen=True, order=True)
class Place:
    """A totally ramified rational place: index 0 is P_inf, 1..r the zeros of f."""

    index: int

    def __post_init__(self):
        if self.index < 0:
            raise UnsupportedPlace(f"place index must be >= 0, got {self.index}")

    @property
    def is_infinity(self) -> bool:
        return self.index == 0

    def __str__(self):
        return "P_inf" if self.index == 0 else f"P_{self.index}"


INFTY = Place(0)


def finite(i: int) -> Place:
    if i < 1:
        raise UnsupportedPlace(f"finite place index must be >= 1, got {i}")
    return Place(i)


@dataclass(frozen=True)
class KummerCurve:
    m: int
    r: int
    q: int | None = None

    def __post_init__(self):
        if self.m < 2 or self.r < 2:
            raise KummerError(f"need m >= 2 and r >= 2, got m={self.m}, r={self.r}")
        if gcd(self.m, self.r) != 1:
            raise NonCoprime(f"gcd(m,r) must be 1, got gcd({self.m},{self.r}) = {gcd(self.m, self.r)}")
        if self.q is not None and gcd(self.q, self.m) != 1:
            raise CharDividesM(f"the characteristic divides m: gcd(q={self.q}, m={self.m}) != 1")
        checked(self.m * self.r * self.r)
        two_g = (self.m - 1) * (self.r - 1)
        assert two_g % 2 == 0, "gcd(m,r)=1 forces (m-1)(r-1) even"

    @property
    def genus(self) -> int:
        return (self.m - 1) * (self.r - 1) // 2

    def places(self) -> list[Place]:
        """P_inf followed by P_1, ..., P_r."""
        return [Place(i) for i in range(self.r + 1)]

    def check_place(self, place: Place) -> None:
        if not 0 <= place.index <= self.r:
            raise UnsupportedPlace(f"{place} is not a totally ramified place of y^{self.m} = f(x), deg f = {self.r}")

    def __str__(self):
        return f"y^{self.m} = f(x), deg f = {self.r}, g = {self.genus}"


def new_curve(m: int, r: int, q: int | None = None) -> KummerCurve:
    return KummerCurve(m, r, q)


def genus(curve: KummerCurve) -> int:
    return curve.genus


@dataclass(frozen=True)
class UParameter:
    """The integer u with m = u*r + 1."""

    u: int

    @classmethod
    def of(cls, curve: KummerCurve) -> "UParameter":
        if curve.m % curve.r != 1:
            raise NotUrPlusOne(f"m={curve.m} is not of the form u*r+1 for r={curve.r}")
        return cls((curve.m - 1) // curve.r)

    def __post_init__(self):
        if self.u < 1:
            raise NotUrPlusOne(f"u must be >= 1, got {self.u}")


def resolve_u(curve: KummerCurve, u: UParameter | int | None) -> int:
    """Return u for the curve, checking a caller-supplied value against m = ur+1."""
    derived = UParameter.of(curve).u
    if u is not None:
        given = u.u if isinstance(u, UParameter) else u
        if given != derived:
            raise NotUrPlusOne(f"u={given} does not satisfy m = u*r+1 for m={curve.m}, r={curve.r}")
    return derived


def ur_curve(u: int, r: int, q: int | None = None) -> KummerCurve:
    return KummerCurve(u * r + 1, r, q)


@dataclass(frozen=True)
class Divisor:
    """Integer combination of totally ramified places; zero coefficients are dropped."""

    coefficients: Mapping[Place, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {p: int(c) for p, c in self.coefficients.items() if c != 0}
        object.__setattr__(self, "coefficients", dict(sorted(clean.items())))

    @classmethod
    def from_tuple(cls, places: Sequence[Place], values: Sequence[int]) -> "Divisor":
        if len(places) != len(values):
            raise KummerError("places and values must have the same length")
        if len(set(places)) != len(places):
            raise KummerError("places must be distinct")
        return cls(dict(zip(places, values)))

    def __getitem__(self, place: Place) -> int:
        return self.coefficients.get(place, 0)

    def __iter__(self) -> Iterator[Place]:
        return iter(self.coefficients)

    def items(self) -> Iterable[tuple[Place, int]]:
        return self.coefficients.items()

    @property
    def degree(self) -> int:
        return sum(self.coefficients.values())

    def __add__(self, other: "Divisor | Place") -> "Divisor":
        if isinstance(other, Place):
            other = Divisor({other: 1})
        out = dict(self.coefficients)
        for p, c in other.items():
            out[p] = out.get(p, 0) + c
        return Divisor(out)

    def __neg__(self) -> "Divisor":
        return Divisor({p: -c for p, c in self.items()})

    def __sub__(self, other: "Divisor | Place") -> "Divisor":
        if isinstance(other, Place):
            other = Divisor({other: 1})
        return self + (-other)

    def __hash__(self):
        return hash(tuple(self.coefficients.items()))

    def __eq__(self, other):
        return isinstance(other, Divisor) and self.coefficients == other.coefficients

    def __str__(self):
        if not self.coefficients:
            return "0"
        return " + ".join(f"{c}*{p}" for p, c in self.items())
