"""AG-code parameters from pure-gap boxes.

For pure gaps a <= b with every point of the box [a, b] also pure, the
code C_Omega(D, G) with G = sum (a_i + b_i - 1) P_i has minimum distance at
least deg G - (2g - 2) + s + sum (b_i - a_i).  Inside 2g - 2 < deg G < n the
dimension is n + g - 1 - deg G.
"""
from __future__ import annotations

from dataclasses import dataclass

from .curve import BoxNotPure, DegreeOutOfRange, KummerCurve, KummerError, SOutOfRange, checked, resolve_u
from .puregaps import PureGapBox, verify_box


@dataclass(frozen=True)
class CodeDesign:
    n: int
    deg_G: int
    k: int
    d_bound: int
    delta_bound: int
    s: int
    with_infty: bool

    def __post_init__(self):
        assert self.delta_bound == self.n + 1 - self.k - self.d_bound

    def goppa_gain(self, curve: KummerCurve) -> int:
        """How far d_bound exceeds the designed distance deg G - (2g - 2)."""
        return self.d_bound - (self.deg_G - (2 * curve.genus - 2))


def design_from_box(curve: KummerCurve, box: PureGapBox, n: int, verify: bool = True) -> CodeDesign:
    """Code parameters for the divisor built from a pure-gap box.

    `s` in the result counts finite places; the distance gain uses every
    place in the box signature, P_inf included.
    """
    if verify and not verify_box(curve, box):
        raise BoxNotPure(f"box {box.low}..{box.high} contains a point that is not a pure gap")
    g = curve.genus
    deg_G = checked(sum(a + b - 1 for a, b in zip(box.low, box.high)))
    if not 2 * g - 2 < deg_G < n:
        raise DegreeOutOfRange(
            f"degree window violated: need 2g-2 = {2 * g - 2} < deg G = {deg_G} < n = {n}"
        )
    spread = sum(b - a for a, b in zip(box.low, box.high))
    k = n + g - 1 - deg_G
    d = deg_G - (2 * g - 2) + box.arity + spread
    s = box.arity - (1 if box.with_infty else 0)
    return CodeDesign(n, deg_G, k, d, n + 1 - k - d, s, box.with_infty)


def canonical_box_finite(curve: KummerCurve, s: int, u=None) -> PureGapBox:
    """a = ((r-s-1)m + 1, 1, ..., 1), b = ((r-s-1)m + su, (s-1)u, ..., u) at P_1..P_s."""
    u = resolve_u(curve, u)
    m, r = curve.m, curve.r
    if not 1 <= s <= r - 1:
        raise SOutOfRange(f"need 1 <= s <= r-1, got s={s}, r={r}")
    base = (r - s - 1) * m
    low = (base + 1,) + (1,) * (s - 1)
    high = (base + s * u,) + tuple((s + 1 - i) * u for i in range(2, s + 1))
    return PureGapBox(low, high, False)


def canonical_box_infty(curve: KummerCurve, s: int, u=None) -> PureGapBox:
    """a = ((r-s-1)m - r, 1, ..., 1), b = ((r-s-1)m - r + s, u, 2u, ..., su) at P_inf, P_1..P_s."""
    u = resolve_u(curve, u)
    m, r = curve.m, curve.r
    if not 1 <= s <= r - 2:
        raise SOutOfRange(f"need 1 <= s <= r-2, got s={s}, r={r}")
    base = (r - s - 1) * m - r
    low = (base,) + (1,) * s
    high = (base + s,) + tuple(i * u for i in range(1, s + 1))
    return PureGapBox(low, high, True)


def defect_bound_finite(curve: KummerCurve, s: int, u=None) -> tuple[int, PureGapBox]:
    """Singleton-defect bound (ur(r-1) - us(s+1))/2 and the box it belongs to."""
    u = resolve_u(curve, u)
    box = canonical_box_finite(curve, s, u)
    r = curve.r
    num = u * r * (r - 1) - u * s * (s + 1)
    assert num % 2 == 0
    return num // 2, box


def defect_bound_infty(curve: KummerCurve, s: int, u=None) -> tuple[int, PureGapBox]:
    """Singleton-defect bound (ur(r-1) - us(s+1))/2 - s - 1 and the box it belongs to."""
    u = resolve_u(curve, u)
    box = canonical_box_infty(curve, s, u)
    r = curve.r
    num = u * r * (r - 1) - u * s * (s + 1)
    assert num % 2 == 0
    return num // 2 - s - 1, box


@dataclass(frozen=True)
class HermitianRow:
    q_sq: int
    s: int
    n: int
    k: int
    d_bound: int

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return self.q_sq, self.s, self.n, self.k, self.d_bound


def is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = 2
    while p * p <= q and q % p:
        p += 1
    if q % p:
        p = q
    while q % p == 0:
        q //= p
    return q == 1


def hermitian_curve(q: int) -> KummerCurve:
    """y^(q+1) = x^q + x over F_(q^2)."""
    return KummerCurve(q + 1, q, q * q)


def hermitian_row_closed_form(q: int, s: int) -> HermitianRow:
    n = q**3 + 1 - s
    twice_k = 2 * q**3 - 3 * q * q + (4 * s - 1) * q - (s * s - s) + 4
    assert twice_k % 2 == 0
    d = q * q - (2 * s - 1) * q + s * s - s
    return HermitianRow(q * q, s, n, twice_k // 2, d)


def hermitian_table(q: int) -> list[HermitianRow]:
    """Rows for every s in 1..q-1 whose divisor degree lies in the window.

    Each row is computed from the closed forms of the Hermitian example and
    recomputed through design_from_box on the canonical box; a mismatch is
    an error, not a silent choice.
    """
    if q < 3 or not is_prime_power(q):
        raise KummerError(f"q must be a prime power >= 3, got {q}")
    curve = hermitian_curve(q)
    g = curve.genus
    rows = []
    for s in range(1, q):
        deg_G = 2 * (q - s - 1) * (q + 1) + s * (s + 1) // 2
        n = q**3 + 1 - s
        if not 2 * g - 2 < deg_G < n:
            continue
        row = hermitian_row_closed_form(q, s)
        design = design_from_box(curve, canonical_box_finite(curve, s, 1), n)
        if (design.deg_G, design.n, design.k, design.d_bound) != (deg_G, row.n, row.k, row.d_bound):
            raise AssertionError(f"Hermitian q={q}, s={s}: closed form {row} disagrees with {design}")
        rows.append(row)
    return rows
