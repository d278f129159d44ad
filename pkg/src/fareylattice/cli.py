"""Command-line interface: generation, mapping, stepping, counting, verify sweeps.

Exit status: 0 on success, 1 when a verify sweep finds a failure, 2 for
usage errors (bad arguments, fractions outside the requested sequence).
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import dropwhile, takewhile
from math import comb
from typing import Iterable, Iterator

from . import identities as ident
from . import lattice
from .catalog import (
    MAP_NAMES,
    catalog,
    matrix_coherence_checks,
    quarter_indices,
    verify_catalog,
    verify_map,
)
from .fracs import HALF, Frac
from .neighbors import (
    next_in_farey,
    pred_in_boolean,
    prev_in_farey,
    succ_in_boolean,
)
from .sequences import (
    FareySeq,
    farey,
    farey_boolean,
    iter_boolean,
    iter_farey,
    iter_upper,
    left_half,
    materialize,
    right_half,
    upper_subsequence,
)


def emit_json(seq: FareySeq) -> str:
    """Compact JSON: {"family":..., "n":..., "m":..., "terms":[[h,k],...]}."""
    d = seq.descriptor
    obj = {
        "family": d.family,
        "n": d.n,
        "m": d.m,
        "terms": [[f.h, f.k] for f in seq],
    }
    return json.dumps(obj, separators=(",", ":"))


def _stream(fractions: Iterable[Frac], out) -> None:
    for f in fractions:
        print(f, file=out)


def _gen_plain_terms(args) -> Iterator[Frac]:
    if args.family == "farey":
        return iter_farey(args.n)
    if args.family == "upper":
        return iter_upper(args.n, args.m)
    terms = iter_boolean(args.n, args.m)
    if args.half is None:
        return terms
    if args.n != 2 * args.m:
        raise ValueError("--half requires n = 2m")
    if args.half == "left":
        return takewhile(lambda f: f <= HALF, terms)
    return dropwhile(lambda f: f < HALF, terms)


def _gen_materialized(args) -> FareySeq:
    if args.family == "farey":
        return farey(args.n)
    if args.family == "upper":
        return upper_subsequence(args.n, args.m)
    seq = farey_boolean(args.n, args.m)
    if args.half == "left":
        return left_half(seq)
    if args.half == "right":
        return right_half(seq)
    return seq


def _cmd_gen(args, out) -> int:
    if args.family in ("upper", "boolean") and args.m is None:
        raise ValueError(f"--m is required for family {args.family}")
    if args.family == "farey" and args.m is not None:
        raise ValueError("--m does not apply to the farey family")
    if args.half is not None and args.family != "boolean":
        raise ValueError("--half applies only to the boolean family")
    if args.format == "plain":
        _stream(_gen_plain_terms(args), out)
    else:
        print(emit_json(_gen_materialized(args)), file=out)
    return 0


def _cmd_map(args, out) -> int:
    entries = {d.name: d for d in catalog(args.n, args.m)}
    if args.name not in entries:
        known = ", ".join(sorted(entries))
        raise ValueError(
            f"map {args.name!r} is not applicable for n={args.n}, m={args.m} "
            f"(available: {known})"
        )
    d = entries[args.name]
    f = Frac.parse(args.frac)
    if f not in materialize(d.domain):
        raise ValueError(f"{f} is not a term of the domain {d.domain}")
    print(d.matrix.apply(f), file=out)
    return 0


def _cmd_neighbor(args, out) -> int:
    f = Frac.parse(args.frac)
    step = {
        ("farey", "next"): next_in_farey,
        ("farey", "prev"): prev_in_farey,
        ("boolean", "next"): succ_in_boolean,
        ("boolean", "prev"): pred_in_boolean,
    }[(args.family, args.dir)]
    print(step(f, args.m), file=out)
    return 0


def _cmd_index(args, out) -> int:
    f = Frac.parse(args.frac)
    seq = farey(args.m) if args.family == "farey" else farey_boolean(2 * args.m, args.m)
    i = seq.index_of(f)
    print("absent" if i is None else i, file=out)
    return 0


def _cmd_count(args, out) -> int:
    size = ident.farey_size if args.family == "farey" else ident.farey_boolean_size
    print(size(args.m), file=out)
    return 0


# ----- verify sweeps -------------------------------------------------------

Check = tuple[str, bool, str]  # label, ok, failure detail


def _sweep_bijections(max_n: int, max_m: int) -> Iterator[Check]:
    for m in range(2, max_m + 1):
        for report in verify_catalog(2 * m, m):
            yield (f"bijection {report.name} n={report.n} m={report.m}",
                   report.passed, str(report.counterexample or ""))
        try:
            t13, t12, t23, t11 = quarter_indices(m)
            ok, detail = t11 % 4 == 0, ""
        except ArithmeticError as exc:
            ok, detail = False, str(exc)
        yield (f"quarter-indices m={m}", ok, detail)
    for n in range(2, max_n + 1):
        for m in range(1, n):
            report = verify_map(catalog(n, m)[0])
            yield (f"bijection {report.name} n={n} m={m}",
                   report.passed, str(report.counterexample or ""))
    for label, ok in matrix_coherence_checks():
        yield (f"matrix {label}", ok, "")


def _check_report(report: ident.IdentityReport) -> Check:
    params = " ".join(f"{k}={v}" for k, v in report.params.items())
    return (f"identity {report.name} {params}", report.passed,
            "" if report.passed else f"lhs={report.lhs} rhs={report.rhs}")


def _sweep_identities(max_n: int, max_m: int) -> Iterator[Check]:
    for m in range(1, max_m + 1):
        got, want = len(farey(m)), ident.farey_size(m)
        yield (f"size farey m={m}", got == want, f"generated {got}, closed form {want}")
        got, want = len(farey_boolean(2 * m, m)), ident.farey_boolean_size(m)
        yield (f"size boolean m={m}", got == want, f"generated {got}, closed form {want}")
    for m in range(2, max_m + 1):
        lhs, rhs = ident.farey_boolean_size(m), 2 * ident.farey_size(m) - 1
        yield (f"size relation m={m}", lhs == rhs, f"{lhs} != 2*|F_m|-1 = {rhs}")
    for n in range(2, max_n + 1):
        for m in range(1, n):
            yield _check_report(ident.interior_duality(n, m))
    for m in range(2, max_m + 1):
        for report in ident.symmetric_identities(m) + ident.farey_identities(m):
            yield _check_report(report)
    for m in range(2, max_m + 1):
        ok = all(
            ident.phi_interval(h, 2 * h + 1, h + m) == ident.phi_interval(h, h + 1, m)
            for h in range(1, m + 1)
        )
        yield (f"totient chain m={m}", ok, "")
    span = 2 * max_m
    for h in range(1, max_m + 1):
        ok = all(
            ident.phi_interval_mobius(h, lo, hi) == ident.phi_interval(h, lo + 1, hi)
            for lo in range(span) for hi in range(lo + 1, span + 1)
        )
        yield (f"totient divisor-sum h={h}", ok, "")


def _sweep_partition(max_n: int) -> Iterator[Check]:
    for n in range(2, max_n + 1):
        for m in range(1, n):
            yield _check_report(ident.filter_partition(n, m))


def _sweep_oracle(max_n: int) -> Iterator[Check]:
    for n in range(2, min(max_n, lattice.ENUM_BOUND) + 1):
        for m in range(1, n):
            same = lattice.enumerate_fractions(n, m).terms == farey_boolean(n, m).terms
            yield (f"oracle enumerate n={n} m={m}", same, "")
            if n <= 16:
                ok = all(
                    lattice.count_exact_intersection(n, m, j, l) == comb(m, j) * comb(n - m, l - j)
                    for l in range(n + 1) for j in range(l + 1)
                )
                yield (f"oracle rank-counts n={n} m={m}", ok, "")
            if n <= 20:
                yield _check_report(lattice.filter_cardinality_check(n, m))


def _cmd_verify(args, out) -> int:
    sweeps = {
        "bijections": lambda: _sweep_bijections(args.max_n, args.max_m),
        "identities": lambda: _sweep_identities(args.max_n, args.max_m),
        "partition": lambda: _sweep_partition(args.max_n),
        "oracle": lambda: _sweep_oracle(args.max_n),
    }
    names = list(sweeps) if args.suite == "all" else [args.suite]
    total = failed = 0
    for name in names:
        for label, ok, detail in sweeps[name]():
            total += 1
            print(("PASS " if ok else "FAIL ") + label, file=out)
            if not ok:
                failed += 1
                print(f"counterexample: {label}: {detail}", file=sys.stderr)
    print(f"FAIL {failed}/{total}" if failed else f"PASS {total}/{total}", file=out)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fareylattice",
        description="Exact Farey sequences, their subset-lattice subsequences, "
                    "and the verified bijections between them.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    gen = sub.add_parser("gen", help="print a sequence")
    gen.add_argument("--family", choices=["farey", "upper", "boolean"], required=True)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--m", type=int)
    gen.add_argument("--half", choices=["left", "right"])
    gen.add_argument("--format", choices=["plain", "json"], default="plain")
    gen.set_defaults(func=_cmd_gen)

    mp = sub.add_parser("map", help="apply a catalog map to one fraction")
    mp.add_argument("--name", required=True, metavar="MAP",
                    help="one of: " + ", ".join(MAP_NAMES))
    mp.add_argument("--n", type=int, required=True)
    mp.add_argument("--m", type=int, required=True)
    mp.add_argument("--frac", required=True, metavar="H/K")
    mp.set_defaults(func=_cmd_map)

    nb = sub.add_parser("neighbor", help="step to an adjacent term")
    nb.add_argument("--family", choices=["farey", "boolean"], required=True)
    nb.add_argument("--m", type=int, required=True)
    nb.add_argument("--frac", required=True, metavar="H/K")
    nb.add_argument("--dir", choices=["next", "prev"], required=True)
    nb.set_defaults(func=_cmd_neighbor)

    idx = sub.add_parser("index", help="zero-based position of a fraction")
    idx.add_argument("--family", choices=["farey", "boolean"], default="boolean")
    idx.add_argument("--m", type=int, required=True)
    idx.add_argument("--frac", required=True, metavar="H/K")
    idx.set_defaults(func=_cmd_index)

    cnt = sub.add_parser("count", help="closed-form sequence cardinality")
    cnt.add_argument("--family", choices=["farey", "boolean"], required=True)
    cnt.add_argument("--m", type=int, required=True)
    cnt.set_defaults(func=_cmd_count)

    ver = sub.add_parser("verify", help="run verification sweeps")
    ver.add_argument("--suite", choices=["bijections", "identities", "partition",
                                         "oracle", "all"], required=True)
    ver.add_argument("--max-n", type=int, default=14, dest="max_n")
    ver.add_argument("--max-m", type=int, default=12, dest="max_m")
    ver.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
