"""Command-line front end.

    kummergaps gaps   --m 5 --r 4 --place infty
    kummergaps gamma  --m 5 --r 4 --flavor ff
    kummergaps pure   --m 5 --r 4 --places infty,1 --check 7,1
    kummergaps design --hermitian --q 8 --format csv
    kummergaps verify --max-genus 10

Exit codes: 0 success, 2 invalid input, 3 a verification sweep failed.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import __version__, codes, puregaps, semigroups, verify
from .curve import INFTY, KummerCurve, KummerError, Place, resolve_u

EXIT_OK, EXIT_INVALID, EXIT_VERIFY = 0, 2, 3


class UsageError(KummerError):
    pass


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def parse_places(text: str) -> list[Place]:
    """'infty,1,2' -> [P_inf, P_1, P_2]; the order given is the tuple order."""
    places = []
    for tok in text.split(","):
        tok = tok.strip().lower()
        if tok in ("infty", "inf", "oo"):
            places.append(INFTY)
        else:
            try:
                idx = int(tok)
            except ValueError:
                raise UsageError(f"bad place {tok!r}: use 'infty' or a finite index >= 1") from None
            if idx < 1:
                raise UsageError(f"finite place indices start at 1, got {idx}")
            places.append(Place(idx))
    if len(set(places)) != len(places):
        raise UsageError("places must be distinct")
    return places


def _fmt_tuple(t: Sequence[int]) -> str:
    return "(" + ", ".join(str(x) for x in t) + ")"


def _csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _emit(args, payload: dict, text: str, csv_header: Sequence[str], csv_rows: Sequence[Sequence], meta: dict) -> None:
    if args.format == "json":
        envelope = {
            "command": args.command,
            "meta": {"m": meta.get("m"), "r": meta.get("r"), "q": meta.get("q"), "version": __version__},
            "payload": payload,
        }
        sys.stdout.write(json.dumps(envelope, sort_keys=True) + "\n")
    elif args.format == "csv":
        sys.stdout.write(_csv(csv_header, csv_rows))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _curve(args) -> KummerCurve:
    if args.m is None or args.r is None:
        raise UsageError("--m and --r are required")
    return KummerCurve(args.m, args.r, getattr(args, "q", None))


def _meta(curve: KummerCurve) -> dict:
    return {"m": curve.m, "r": curve.r, "q": curve.q}


def cmd_gaps(args) -> int:
    curve = _curve(args)
    if args.place in ("infty", "inf"):
        place = INFTY
    elif args.place == "finite":
        place = Place(1)
    else:
        place = parse_places(args.place)[0]
    curve.check_place(place)
    gaps = semigroups.one_point_gaps(curve, place)
    _emit(args, {"place": str(place), "gaps": gaps}, " ".join(map(str, gaps)),
          ["gap"], [[n] for n in gaps], _meta(curve))
    return EXIT_OK


def cmd_gamma(args) -> int:
    curve = _curve(args)
    gs = semigroups.gamma(curve, args.flavor)
    pairs = [list(p) for p in gs.pairs]
    text = "\n".join(_fmt_tuple(p) for p in gs.pairs) + f"\ncount: {len(gs)}"
    _emit(args, {"flavor": gs.flavor.value, "pairs": pairs, "count": len(gs)}, text,
          ["a", "b"], pairs, _meta(curve))
    return EXIT_OK


def _families_for(curve: KummerCurve, places: list[Place], u) -> dict[str, list[tuple[int, ...]]]:
    with_infty = any(p.is_infinity for p in places)
    s = len(places) - (1 if with_infty else 0)
    u = resolve_u(curve, u)
    out: dict[str, list[tuple[int, ...]]] = {}
    two = puregaps.family_two_point(curve, u)
    if with_infty:
        if s == 1:
            out["i"] = [t.entries for t in two["i"]]
            out["ii"] = [t.entries for t in two["ii"]]
        if 1 <= s < curve.r - 1:
            out["many-infty"] = [t.entries for t in puregaps.family_many_infty(curve, s, u)]
    else:
        if s == 2:
            out["iii"] = [t.entries for t in two["iii"]]
        if 1 <= s < curve.r:
            out["many-finite"] = [t.entries for t in puregaps.family_many_finite(curve, s, u)]
    if not out:
        raise UsageError(f"no family covers {len(places)} places with P_inf={'yes' if with_infty else 'no'} for r={curve.r}")
    # families are stated with P_inf first; follow the caller's order instead
    if with_infty and not places[0].is_infinity:
        pos = next(i for i, p in enumerate(places) if p.is_infinity)
        for k, tuples in out.items():
            out[k] = [t[1:pos + 1] + t[:1] + t[pos + 1:] for t in tuples]
    return out


def cmd_pure(args) -> int:
    curve = _curve(args)
    places = parse_places(args.places)
    for p in places:
        curve.check_place(p)
    names = [str(p) for p in places]
    meta = _meta(curve)
    if args.check is not None:
        tup = _int_list(args.check)
        if len(tup) != len(places):
            raise UsageError(f"--check needs {len(places)} entries, got {len(tup)}")
        if any(a < 1 for a in tup):
            raise UsageError("pure-gap entries must be >= 1")
        ok = puregaps.is_pure(curve, places, tup, oracle=args.oracle)
        _emit(args, {"mode": "check", "places": names, "tuple": list(tup), "pure": ok},
              f"pure-gap: {'true' if ok else 'false'}", names + ["pure"], [list(tup) + [ok]], meta)
    elif args.enumerate:
        found = puregaps.enumerate_pure_gaps(curve, places, bound=args.bound, oracle=args.oracle)
        text = "\n".join(_fmt_tuple(t) for t in found) + f"\ncount: {len(found)}"
        _emit(args, {"mode": "enumerate", "places": names, "tuples": [list(t) for t in found]},
              text, names, [list(t) for t in found], meta)
    else:
        fams = _families_for(curve, places, args.u)
        lines = [f"family {k}: " + " ".join(_fmt_tuple(t) for t in v) for k, v in fams.items()]
        _emit(args, {"mode": "families", "places": names, "families": {k: [list(t) for t in v] for k, v in fams.items()}},
              "\n".join(lines), ["family"] + names, [[k] + list(t) for k, v in fams.items() for t in v], meta)
    return EXIT_OK


def _parse_box(text: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if ".." not in text:
        raise UsageError(f"--box expects LOW..HIGH such as 6,1..7,1, got {text!r}")
    lo, hi = text.split("..", 1)
    return _int_list(lo), _int_list(hi)


def cmd_design(args) -> int:
    if args.hermitian:
        if args.q is None:
            raise UsageError("--hermitian needs --q")
        rows = codes.hermitian_table(args.q)
        header = ["q_sq", "s", "n", "k", "d_bound"]
        text = "\n".join(["q^2  s  n  k  d>="] + [" ".join(str(x) for x in r.as_tuple()) for r in rows])
        _emit(args, {"rows": [dict(zip(header, r.as_tuple())) for r in rows]}, text,
              header, [r.as_tuple() for r in rows], {"m": args.q + 1, "r": args.q, "q": args.q * args.q})
        return EXIT_OK
    curve = _curve(args)
    if args.box is None or args.n is None:
        raise UsageError("design needs either --hermitian --q Q or --box LOW..HIGH --n N")
    low, high = _parse_box(args.box)
    if args.places is not None:
        places = parse_places(args.places)
    else:
        places = [Place(i) for i in range(1, len(low) + 1)]
    if len(places) != len(low):
        raise UsageError(f"box arity {len(low)} does not match {len(places)} places")
    for p in places:
        curve.check_place(p)
    with_infty = any(p.is_infinity for p in places)
    if with_infty and not places[0].is_infinity:
        pos = next(i for i, p in enumerate(places) if p.is_infinity)
        low = (low[pos],) + low[:pos] + low[pos + 1:]
        high = (high[pos],) + high[:pos] + high[pos + 1:]
    box = puregaps.PureGapBox(low, high, with_infty)
    d = codes.design_from_box(curve, box, args.n)
    header = ["n", "deg_G", "k", "d_bound", "delta_bound", "s", "with_infty"]
    values = [d.n, d.deg_G, d.k, d.d_bound, d.delta_bound, d.s, d.with_infty]
    text = "\n".join(f"{h}: {v}" for h, v in zip(header, values))
    _emit(args, {"design": dict(zip(header, values))}, text, header, [values], _meta(curve))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.max_genus < 0:
        raise UsageError("--max-genus must be >= 0")
    results = verify.run_all(args.max_genus, seed=args.seed, samples=args.samples)
    passed = all(r.passed for r in results)
    lines = []
    for r in results:
        lines.append(f"{'PASS' if r.passed else 'FAIL'} {r.name} cases={r.cases} failures={len(r.failures)}")
        for w in r.failures[:20]:
            lines.append("  witness: " + json.dumps(w, sort_keys=True))
    lines.append("all checks passed" if passed else "verification FAILED")
    payload = {
        "passed": passed,
        "checks": [{"name": r.name, "cases": r.cases, "passed": r.passed, "failures": r.failures} for r in results],
    }
    _emit(args, payload, "\n".join(lines), ["check", "cases", "failures"],
          [[r.name, r.cases, len(r.failures)] for r in results], {})
    return EXIT_OK if passed else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kummergaps", description="Weierstrass gaps, pure gaps and AG-code "
                                     "parameters at totally ramified places of y^m = f(x).")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, curve_required=True):
        p.add_argument("--m", type=int, required=curve_required, help="Kummer degree m")
        p.add_argument("--r", type=int, required=curve_required, help="degree of f(x)")
        p.add_argument("--format", choices=["text", "json", "csv"], default="text")

    p = sub.add_parser("gaps", help="one-point gap sequence")
    common(p)
    p.add_argument("--place", default="finite", help="'infty', 'finite' (P_1) or a finite index")
    p.set_defaults(func=cmd_gaps)

    p = sub.add_parser("gamma", help="the set Gamma(P, Q)")
    common(p)
    p.add_argument("--flavor", choices=["ff", "inf"], default="ff")
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("pure", help="pure gaps at several places")
    common(p)
    p.add_argument("--places", required=True, help="signature such as infty,1,2")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--check", metavar="A,B,...")
    mode.add_argument("--enumerate", action="store_true")
    mode.add_argument("--families", action="store_true")
    p.add_argument("--u", type=int, help="u with m = ur+1 (derived when omitted)")
    p.add_argument("--bound", type=int, help="cap on the entry sum when enumerating")
    p.add_argument("--oracle", action="store_true", help="use the l-dimension oracle instead of the floor criterion")
    p.set_defaults(func=cmd_pure)

    p = sub.add_parser("design", help="AG-code parameters from a pure-gap box")
    common(p, curve_required=False)
    p.add_argument("--q", type=int, help="constant-field size, or the Hermitian q with --hermitian")
    p.add_argument("--hermitian", action="store_true")
    p.add_argument("--box", metavar="LOW..HIGH")
    p.add_argument("--places", help="box signature; defaults to 1..s")
    p.add_argument("--n", type=int, help="code length")
    p.set_defaults(func=cmd_design)

    p = sub.add_parser("verify", help="run the oracle-equivalence sweeps")
    p.add_argument("--max-genus", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=2000, help="random divisors for the oracle self-checks")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except KummerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
