"""Oracle-equivalence sweeps: every closed form against the l-dimension oracle.

Each check returns a CheckResult listing the witnesses of any disagreement.
The sweeps call into the other modules through their module objects so a
test harness can swap a function out and watch the sweep catch it.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Iterator

from . import codes, oracle, puregaps, semigroups
from .curve import INFTY, Divisor, KummerCurve, Place, ur_curve

# Hermitian codes listed for q^2 in {16, 25, 49, 64, 81}: (q^2, s, n, k, d).
HERMITIAN_REFERENCE_ROWS = (
    (16, 1, 64, 48, 12),
    (16, 2, 63, 55, 6),
    (25, 1, 125, 97, 20),
    (25, 2, 124, 106, 12),
    (49, 2, 342, 295, 30),
    (49, 3, 341, 307, 20),
    (64, 1, 512, 430, 56),
    (64, 2, 511, 445, 42),
    (64, 3, 510, 459, 30),
    (64, 4, 509, 472, 20),
    (81, 3, 727, 656, 42),
    (81, 4, 726, 671, 30),
)


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, **witness) -> None:
        self.failures.append(witness)


def curves_up_to_genus(max_genus: int) -> Iterator[KummerCurve]:
    """Every admissible (m, r) with genus <= max_genus, ordered by (m, r)."""
    for m in range(2, 2 * max_genus + 2):
        for r in range(2, 2 * max_genus + 2):
            if gcd(m, r) == 1 and (m - 1) * (r - 1) <= 2 * max_genus:
                yield KummerCurve(m, r)


def ur_curves(max_u: int, max_r: int, max_genus: int | None = None) -> Iterator[tuple[int, KummerCurve]]:
    for u in range(1, max_u + 1):
        for r in range(2, max_r + 1):
            c = ur_curve(u, r)
            if max_genus is None or c.genus <= max_genus:
                yield u, c


def check_hermitian_table(qs=(4, 5, 7, 8, 9), max_genus: int | None = None) -> CheckResult:
    res = CheckResult("hermitian-table")
    produced = set()
    wanted = set()
    for q in qs:
        if max_genus is not None and q * (q - 1) // 2 > max_genus:
            continue
        produced |= {row.as_tuple() for row in codes.hermitian_table(q)}
        wanted |= {row for row in HERMITIAN_REFERENCE_ROWS if row[0] == q * q}
    for row in sorted(wanted):
        res.cases += 1
        if row not in produced:
            res.fail(q_sq=row[0], s=row[1], expected=list(row), detail="reference row not reproduced")
    return res


def check_closed_form_counts(max_u: int = 3, max_r: int = 7, max_genus: int | None = None) -> CheckResult:
    res = CheckResult("closed-form-counts")
    for u, c in ur_curves(max_u, max_r, max_genus):
        res.cases += 1
        ff, inf = semigroups.closed_form_counts(c, u)
        brute_ff = len(semigroups.brute_force_two_point_gaps(c, "ff"))
        brute_inf = len(semigroups.brute_force_two_point_gaps(c, "inf"))
        if (ff, inf) != (brute_ff, brute_inf):
            res.fail(m=c.m, r=c.r, u=u, closed_form=[ff, inf], oracle=[brute_ff, brute_inf])
    return res


def check_gamma_sets(max_genus: int) -> CheckResult:
    res = CheckResult("gamma-sets")
    for c in curves_up_to_genus(max_genus):
        for flavor in semigroups.Flavor:
            res.cases += 1
            gs = semigroups.gamma(c, flavor)
            p, q = flavor.places()
            gp = semigroups.one_point_gaps(c, p)
            gq = semigroups.one_point_gaps(c, q)
            pairs = list(gs.pairs)
            firsts = sorted(a for a, _ in pairs)
            seconds = sorted(b for _, b in pairs)
            if len(pairs) != c.genus or firsts != gp or seconds != gq:
                res.fail(m=c.m, r=c.r, flavor=flavor.value, detail="gamma is not a bijection between gap sets",
                         size=len(pairs), genus=c.genus)
                continue
            for a, b in pairs:
                if not oracle.in_semigroup(c, [p, q], (a, b)):
                    res.fail(m=c.m, r=c.r, flavor=flavor.value, pair=[a, b], detail="pair not in H")
    return res


def check_homma(max_genus: int) -> CheckResult:
    res = CheckResult("homma-count")
    for c in curves_up_to_genus(max_genus):
        for flavor in semigroups.Flavor:
            res.cases += 1
            count = semigroups.count_gaps_two_points(c, flavor)
            brute = len(semigroups.brute_force_two_point_gaps(c, flavor))
            if count.total != brute:
                res.fail(m=c.m, r=c.r, flavor=flavor.value, homma=count.total, oracle=brute)
    return res


def check_pure_characterization(max_genus: int, max_s: int = 3) -> CheckResult:
    res = CheckResult("pure-gap-characterization")
    for c in curves_up_to_genus(max_genus):
        top = 2 * c.genus - 1
        for s in range(1, min(c.r, max_s) + 1):
            fin = [Place(i) for i in range(1, s + 1)]
            for tup in puregaps.tuples_with_sum_at_most(s, top):
                res.cases += 1
                if puregaps.check_pure_finite(c, tup) != oracle.is_pure_gap(c, fin, tup):
                    res.fail(m=c.m, r=c.r, s=s, places="finite", tuple=list(tup))
            for tup in puregaps.tuples_with_sum_at_most(s + 1, top):
                res.cases += 1
                if puregaps.check_pure_with_infty(c, tup) != oracle.is_pure_gap(c, [INFTY] + fin, tup):
                    res.fail(m=c.m, r=c.r, s=s, places="infty", tuple=list(tup))
    return res


def _family_tuples(c: KummerCurve, u: int):
    for label, tuples in puregaps.family_two_point(c, u).items():
        for t in tuples:
            yield label, t
    for s in range(1, c.r):
        for t in puregaps.family_many_finite(c, s, u):
            yield f"many-finite(s={s})", t
    for s in range(1, c.r - 1):
        for t in puregaps.family_many_infty(c, s, u):
            yield f"many-infty(s={s})", t


def check_families(max_u: int = 3, max_r: int = 6, max_genus: int | None = None) -> CheckResult:
    res = CheckResult("pure-gap-families")
    for u, c in ur_curves(max_u, max_r, max_genus):
        for label, t in _family_tuples(c, u):
            res.cases += 1
            if not oracle.is_pure_gap(c, t.places(), t.entries):
                res.fail(m=c.m, r=c.r, u=u, family=label, tuple=list(t.entries))
    return res


def check_defect_bounds(max_u: int = 3, max_r: int = 7, max_genus: int | None = None) -> CheckResult:
    """Canonical boxes with the synthetic length n = 2 deg G + 1; boxes below the window are skipped."""
    res = CheckResult("defect-bounds")
    bounders: list[tuple[str, Callable, Callable[[int], range]]] = [
        ("finite", codes.defect_bound_finite, lambda r: range(1, r)),
        ("infty", codes.defect_bound_infty, lambda r: range(1, r - 1)),
    ]
    for u, c in ur_curves(max_u, max_r, max_genus):
        for label, bounder, s_range in bounders:
            for s in s_range(c.r):
                bound, box = bounder(c, s, u)
                deg_G = sum(a + b - 1 for a, b in zip(box.low, box.high))
                if deg_G <= 2 * c.genus - 2:
                    continue
                res.cases += 1
                n = 2 * deg_G + 1
                if not puregaps.verify_box(c, box, oracle=True):
                    res.fail(m=c.m, r=c.r, u=u, s=s, flavor=label, detail="canonical box not pure",
                             low=list(box.low), high=list(box.high))
                    continue
                d = codes.design_from_box(c, box, n, verify=False)
                if d.n + 1 - d.k - d.d_bound != bound:
                    res.fail(m=c.m, r=c.r, u=u, s=s, flavor=label, defect=d.delta_bound, bound=bound)
    return res


def check_oracle_properties(samples: int = 10_000, seed: int = 0, max_genus: int = 10) -> CheckResult:
    """Randomized self-consistency of the oracle.

    Per sampled divisor: Riemann-Roch exactness above 2g-2, the Riemann
    lower bound, vanishing in negative degree, and unit steps when one place
    is added.  Per distinct curve: l(0) = 1 and exactly g gaps at each of
    the r + 1 ramified places.
    """
    res = CheckResult("oracle-properties")
    curves = list(curves_up_to_genus(max_genus))
    if not curves:
        return res
    rng = random.Random(seed)
    seen: set[tuple[int, int]] = set()
    for _ in range(samples):
        c = rng.choice(curves)
        g = c.genus
        places = c.places()
        support = rng.sample(places, rng.randint(1, min(len(places), 4)))
        D = Divisor({p: rng.randint(-g - 2, 2 * g + 3) for p in support})
        res.cases += 1
        ell = oracle.dim_L(c, D)
        deg = D.degree
        if deg > 2 * g - 2 and ell != deg + 1 - g:
            res.fail(m=c.m, r=c.r, divisor=str(D), ell=ell, detail="Riemann-Roch exactness")
        if ell < deg + 1 - g:
            res.fail(m=c.m, r=c.r, divisor=str(D), ell=ell, detail="Riemann inequality")
        if deg < 0 and ell != 0:
            res.fail(m=c.m, r=c.r, divisor=str(D), ell=ell, detail="negative degree")
        step = oracle.dim_L(c, D + rng.choice(places)) - ell
        if step not in (0, 1):
            res.fail(m=c.m, r=c.r, divisor=str(D), step=step, detail="monotonicity")
        if (c.m, c.r) not in seen:
            seen.add((c.m, c.r))
            if oracle.dim_L(c, Divisor()) != 1:
                res.fail(m=c.m, r=c.r, detail="l(0) != 1")
            for p in places:
                n_gaps = len(semigroups.one_point_gaps(c, p))
                if n_gaps != g:
                    res.fail(m=c.m, r=c.r, place=str(p), gaps=n_gaps, detail="one-point gap count != g")
    return res


def run_all(max_genus: int, seed: int = 0, samples: int = 2000) -> list[CheckResult]:
    """Every sweep, each restricted to curves of genus <= max_genus."""
    return [
        check_hermitian_table(max_genus=max_genus),
        check_closed_form_counts(max_genus=max_genus),
        check_gamma_sets(max_genus),
        check_homma(max_genus),
        check_pure_characterization(max_genus),
        check_families(max_genus=max_genus),
        check_defect_bounds(max_genus=max_genus),
        check_oracle_properties(samples=samples, seed=seed, max_genus=max_genus),
    ]
