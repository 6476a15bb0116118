"""Command-line interface.

    rootcount approx --m 3 --N 2 --iters 15
    rootcount expand --m 2 --N 2 --depth 4
    rootcount verify --m 2 --N 2
    rootcount rules --m 3 --N 5

Exit codes: 0 success, 1 failed check or domain error, 2 usage error,
3 word expansion truncated by the length cap.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .approximation import (
    NonFinite,
    approximants,
    reference_digits,
    scientific,
    stream_rows,
)
from .counts import incidence, power_counts
from .serialize import write_csv, write_jsonl
from .spectral import (
    dominant_eigenvalue_root_family,
    is_primitive,
    perron_residual,
    perron_vector_root_family,
    power_iteration,
)
from .words import (
    DEFAULT_LENGTH_CAP,
    DomainError,
    RulesFormatError,
    count,
    format_rules,
    format_word,
    iterate_words,
    make_root_rules,
    parse_rules,
    parse_word,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_TRUNCATED = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _add_system_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--m", type=int, help="alphabet size (root order)")
    p.add_argument("--N", type=int, help="radicand")
    p.add_argument("--rules-file", help="use the rules in this file instead of the root family")


def _load_rules(args):
    if args.rules_file:
        try:
            with open(args.rules_file) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read rules file: {exc}") from None
        try:
            return parse_rules(text)
        except RulesFormatError as exc:
            raise UsageError(f"{args.rules_file}: {exc}") from None
    if args.m is None or args.N is None:
        raise UsageError("either --m and --N or --rules-file is required")
    if args.m < 1 or args.N < 1:
        raise UsageError("--m and --N must both be >= 1")
    return make_root_rules(args.m, args.N)


def _parse_seed_counts(text: Optional[str], m: int):
    if text is None:
        return (1,) + (0,) * (m - 1)
    try:
        counts = tuple(int(tok) for tok in text.replace(",", " ").split())
    except ValueError:
        raise UsageError(f"bad --seed-counts {text!r}") from None
    if len(counts) != m:
        raise UsageError(f"--seed-counts needs {m} entries, got {len(counts)}")
    return counts


def cmd_approx(args, out) -> int:
    rules = _load_rules(args)
    m = rules.m
    if m < 2:
        raise UsageError("approx needs an alphabet of at least 2 symbols")
    if args.ratio_index is not None and not 0 <= args.ratio_index <= m - 2:
        raise UsageError(f"--ratio-index must be in [0, {m - 2}]")
    seed = _parse_seed_counts(args.seed_counts, m)

    if args.rules_file:
        mat = incidence(rules)
        rows = list(stream_rows(mat, seed, args.iters, args.stop_places, args.digits))
        pi = power_iteration(mat)
        limit = pi.vector[0] / pi.vector[1]
        reference = f"{limit!r} (power iteration)"
        ref_value = None
    else:
        rows = list(approximants(m, args.N, seed, args.iters, args.stop_places, args.digits))
        reference = reference_digits(m, args.N, args.digits)
        ref_value = Fraction(reference_digits(m, args.N, args.digits + 2))

    if args.format == "csv":
        write_csv(rows, m, out)
        out.write(f"# reference n0/n1 limit = {reference}\n")
    elif args.format == "jsonl":
        write_jsonl(rows, out)
        out.write(json.dumps({"reference": reference}) + "\n")
    else:
        _write_table(rows, m, args.ratio_index, ref_value, out)
        label = "n0/n1 limit" if args.rules_file else f"{args.N}^(1/{m})"
        out.write(f"{label} = {reference}\n")
    return EXIT_OK


def _write_table(rows, m, ratio_index, ref_value, out) -> None:
    idx = range(m - 1) if ratio_index is None else [ratio_index]
    header = ["iter"] + [f"n{j}" for j in range(m)] + [f"n{j}/n{j + 1}" for j in idx]
    if ref_value is not None:
        header += [f"|r{j}^{m}-N|" for j in idx] + [f"|r{j}-root|" for j in idx]
    table = [header]
    for row in rows:
        cells = [str(row.iter)] + [str(c) for c in row.counts]
        cells += [row.decimals[j] for j in idx]
        if ref_value is not None:
            cells += ["-" if row.abs_errors[j] is None else scientific(row.abs_errors[j]) for j in idx]
            cells += [
                "-" if isinstance(row.ratios[j], NonFinite) else scientific(abs(row.ratios[j] - ref_value))
                for j in idx
            ]
        table.append(cells)
    widths = [max(len(r[i]) for r in table) for i in range(len(header))]
    notes = [""] + ["  converged" if row.stop_reason == "converged" else "" for row in rows]
    for r, note in zip(table, notes):
        out.write("  ".join(c.rjust(w) for c, w in zip(r, widths)) + note + "\n")


def cmd_expand(args, out, err) -> int:
    rules = _load_rules(args)
    seed = parse_word(args.seed)
    if not seed:
        raise UsageError("seed word must be nonempty")
    if any(not 0 <= s < rules.m for s in seed):
        raise UsageError(f"seed word uses symbols outside 0..{rules.m - 1}")
    if args.depth < 0:
        raise UsageError("--depth must be >= 0")
    if args.length_cap < len(seed):
        raise UsageError("--length-cap is shorter than the seed word")
    words, truncated = iterate_words(rules, seed, args.depth, args.length_cap)
    for w in words:
        out.write(format_word(w, rules.m) + "\n")
    if truncated:
        err.write(
            f"truncated: word {len(words)} would exceed the length cap of {args.length_cap}\n"
        )
        return EXIT_TRUNCATED
    return EXIT_OK


def cmd_verify(args, out) -> int:
    rules = _load_rules(args)
    mat = incidence(rules)
    m = rules.m
    results: list[tuple[str, Optional[bool], str]] = []

    seed = (0,)
    words, truncated = iterate_words(rules, seed, args.depth, args.length_cap)
    v0 = count(seed, m)
    bad = [d for d, w in enumerate(words) if count(w, m) != power_counts(mat, v0, d)]
    detail = f"depths 0..{len(words) - 1}"
    if truncated:
        detail += f", length cap {args.length_cap} reached"
    if bad:
        detail += f"; mismatch at depth {bad[0]}"
    results.append(("oracle-equivalence", not bad, detail))

    primitive = is_primitive(mat)
    results.append(("primitivity", primitive, f"{m}x{m} incidence matrix"))

    if not primitive:
        results.append(("eigenvalue", None, "skipped: matrix is not primitive"))
        results.append(("eigenvector-residual", None, "skipped: matrix is not primitive"))
    else:
        pi = power_iteration(mat, args.tol)
        if args.rules_file:
            results.append((
                "eigenvalue",
                pi.converged,
                f"power iteration {pi.eigenvalue!r} after {pi.iterations} iterations",
            ))
            ok = pi.converged and pi.residual <= 1e-6 * max(1.0, pi.eigenvalue)
            results.append(("eigenvector-residual", ok, f"power-iteration residual {pi.residual:.3e}"))
        else:
            N = args.N
            exact = dominant_eigenvalue_root_family(m, N, args.digits)
            gap = abs(pi.eigenvalue - float(exact.as_fraction()))
            ok = pi.converged and gap <= 10 * args.tol
            results.append((
                "eigenvalue",
                ok,
                f"1+{N}^(1/{m}) = {exact}, power iteration {pi.eigenvalue!r}, gap {gap:.3e}",
            ))
            vec = [c.as_fraction() for c in perron_vector_root_family(m, N, args.digits)]
            res = perron_residual(mat, exact.as_fraction(), vec)
            bound = Fraction(m * (N + 1), 10 ** (args.digits - 1))
            results.append((
                "eigenvector-residual",
                res <= bound,
                f"residual {scientific(res)} <= bound {scientific(bound)}",
            ))

    failed = [name for name, ok, _ in results if ok is False]
    for name, ok, detail in results:
        status = "SKIP" if ok is None else ("PASS" if ok else "FAIL")
        out.write(f"{name}: {status} ({detail})\n")
    if failed:
        out.write(f"FAILED: {', '.join(failed)}\n")
        return EXIT_FAIL
    return EXIT_OK


def cmd_rules(args, out) -> int:
    out.write(format_rules(_load_rules(args)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rootcount",
        description="Rational approximants to N^(1/m) by substitution and counting.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("approx", help="table of count-ratio approximants")
    _add_system_flags(p)
    p.add_argument("--iters", type=int, default=16)
    p.add_argument("--digits", type=int, default=14, help="decimal places in ratio columns")
    p.add_argument("--seed-counts", help="comma-separated initial counts (default 1,0,...,0)")
    p.add_argument("--stop-places", type=int, help="stop once n0/n1 moves by < 10^-k")
    p.add_argument("--ratio-index", type=int, help="show only ratio n_j/n_{j+1} in the table")
    p.add_argument("--format", choices=["table", "csv", "jsonl"], default="table")

    p = sub.add_parser("expand", help="print the words W_0 .. W_depth")
    _add_system_flags(p)
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--length-cap", type=int, default=DEFAULT_LENGTH_CAP)
    p.add_argument("--seed", default="0", help="seed word, e.g. 0 or 0112")

    p = sub.add_parser("verify", help="check counting and eigenpair claims")
    _add_system_flags(p)
    p.add_argument("--digits", type=int, default=20)
    p.add_argument("--depth", type=int, default=12)
    p.add_argument("--length-cap", type=int, default=DEFAULT_LENGTH_CAP)
    p.add_argument("--tol", type=float, default=1e-12)

    p = sub.add_parser("rules", help="print the substitution rules")
    _add_system_flags(p)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        for flag in ("iters", "digits", "stop_places"):
            value = getattr(args, flag, None)
            if value is not None and value < 0:
                raise UsageError(f"--{flag.replace('_', '-')} must be >= 0")
        if args.command == "approx":
            return cmd_approx(args, out)
        if args.command == "expand":
            return cmd_expand(args, out, err)
        if args.command == "verify":
            return cmd_verify(args, out)
        return cmd_rules(args, out)
    except UsageError as exc:
        parser.print_usage(err)
        err.write(f"{parser.prog}: error: {exc}\n")
        return EXIT_USAGE
    except DomainError as exc:
        err.write(f"{parser.prog}: {exc}\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
