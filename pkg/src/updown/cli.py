"""Command-line front end.

Exit status: 0 success, 1 verification failure, 2 usage error, 3 budget
exceeded.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Callable, Sequence

from . import alternant, basis, conjectures, oracle, series, triangle
from .errors import BudgetExceeded, check_budget
from .kernel import thue_morse
from .reference_table import REFERENCE_TABLE
from .signatures import (
    SignatureParseError,
    alternating_index,
    decode_index,
    encode_index,
    exponents,
    format_signature,
    parse_signature,
    signature_of,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

# largest n each enumerating route accepts unless --max-n says otherwise
ROUTE_BUDGETS = {"oracle": 12, "alternant": 14, "triangle": 256, "niven1": 256, "det14": 256}
SIGNATURE_METHODS = ("oracle", "triangle", "alternant")
INDEX_METHODS = ("oracle", "triangle", "alternant", "niven1", "det14", "det40", "lambda66", "poly")


class UsageError(Exception):
    pass


# -- output helpers --------------------------------------------------------


def emit_sequence(values: Sequence[int], fmt: str, offset: int = 0, label: str = "value") -> str:
    if fmt == "json":
        return json.dumps([str(v) for v in values])
    if fmt == "bfile":
        lines = [f"# offset {offset}: first line is index {offset}"]
        lines += [f"{offset + i} {v}" for i, v in enumerate(values)]
        return "\n".join(lines)
    if fmt == "csv":
        return "\n".join(["index," + label] + [f"{offset + i},{v}" for i, v in enumerate(values)])
    return " ".join(str(v) for v in values)


def _parse_mask(text: str | None, n: int):
    if text is None or text == "ones":
        return None
    if text == "no-fixed":
        return alternant.build_weight("ones_minus_identity", n)
    if text.startswith("endpoint:"):
        try:
            l, m = (int(x) for x in text.split(":", 1)[1].split(","))
        except ValueError:
            raise UsageError(f"bad endpoint mask {text!r}; expected endpoint:l,m") from None
        try:
            return alternant.build_weight("endpoint", n, l, m)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    raise UsageError(f"unknown mask {text!r}; expected ones, no-fixed or endpoint:l,m")


# -- subcommands -----------------------------------------------------------


def cmd_count(args) -> tuple[int, str]:
    if (args.signature is None) == (args.n is None):
        raise UsageError("count needs either --signature or both --n and --k")
    if args.signature is not None:
        try:
            sig = parse_signature(args.signature)
        except SignatureParseError as exc:
            raise UsageError(str(exc)) from None
        n = len(sig) + 1
        method = args.method or "oracle"
        if method not in SIGNATURE_METHODS:
            raise UsageError(f"--method {method} is not available for --signature; use {SIGNATURE_METHODS}")
        mask = _parse_mask(args.mask, n)
        check_budget("n", n, args.max_n or ROUTE_BUDGETS[method])
        if method == "oracle":
            result = oracle.count_signature(sig, mask)
        elif method == "alternant":
            weights = mask if mask is not None else alternant.build_weight("ones", n)
            result = alternant.alt(weights, sig)
        else:
            if mask is not None:
                raise UsageError("the triangle method does not support position masks")
            tri = triangle.triangle_rows(sig)
            result = sum(tri.last_row)
            if args.show_triangle:
                return EXIT_OK, tri.pretty() + "\n" + str(result)
        k = encode_index(sig)
    else:
        if args.k is None:
            raise UsageError("--n needs --k")
        if args.mask is not None:
            raise UsageError("--mask applies to --signature counts only")
        n, k = args.n, args.k
        method = args.method or "poly"
        if method not in INDEX_METHODS:
            raise UsageError(f"unknown method {method!r}")
        if method in ROUTE_BUDGETS:
            check_budget("n", n, args.max_n or ROUTE_BUDGETS[method])
        try:
            result = basis.value(n, k, method)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        sig = decode_index(n, k) if 0 <= k < 2 ** max(n - 1, 0) else None
    if args.format == "json":
        payload = {"n": n, "k": k, "method": method, "count": str(result)}
        if sig is not None:
            payload["signature"] = format_signature(sig)
        return EXIT_OK, json.dumps(payload)
    return EXIT_OK, str(result)


def cmd_poly(args) -> tuple[int, str]:
    p = basis.construct(args.k, args.method)
    if args.format == "json":
        return EXIT_OK, json.dumps(p.to_json())
    return EXIT_OK, str(p)


def cmd_table(args) -> tuple[int, str]:
    check_budget("k_max", args.k_max, 4096)
    lines = []
    records = []
    for k in range(args.k_max + 1):
        p = basis.construct(k)
        records.append(p.to_json())
        lines.append(f"{{n\\{k}}} = {p}")
    if args.format == "json":
        return EXIT_OK, json.dumps(records)
    return EXIT_OK, "\n".join(lines)


def cmd_row(args) -> tuple[int, str]:
    check_budget("len", args.len, 1 << 16)
    values = [basis.formal_value(args.a, k) for k in range(args.len)]
    return EXIT_OK, emit_sequence(values, args.format, 0, f"{{{args.a}\\k}}")


def cmd_series(args) -> tuple[int, str]:
    return EXIT_OK, emit_sequence(series.pn_polynomial(args.n), args.format, 0, "coefficient")


def cmd_numbers(args) -> tuple[int, str]:
    if args.kind == "euler":
        values = [series.euler_determinant(m) for m in range(1, args.m_max + 1)]
        offset = 1
    elif args.kind == "tangent":
        values = [series.tangent_determinant(m) for m in range(2, args.m_max + 1)]
        offset = 2
    else:
        values = [series.bernoulli_recover(m) for m in range(2, args.m_max + 1)]
        offset = 2
        if args.format == "json":
            return EXIT_OK, json.dumps([str(v) for v in values])
        return EXIT_OK, " ".join(str(v) for v in values)
    return EXIT_OK, emit_sequence(values, args.format, offset, args.kind)


def cmd_witness(args) -> tuple[int, str]:
    try:
        perm = oracle.witness_permutation(args.n, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        return EXIT_OK, json.dumps({"n": args.n, "k": args.k, "permutation": list(perm)})
    return EXIT_OK, " ".join(map(str, perm))


def cmd_conjecture(args) -> tuple[int, str]:
    if args.topic == "real-roots":
        profiles = [conjectures.real_root_profile(k) for k in range(1, args.k_max + 1)]
        if args.format == "csv":
            return EXIT_OK, conjectures.profiles_csv(profiles).rstrip("\n")
        return EXIT_OK, " ".join(str(p.k) for p in profiles if p.all_real)
    if args.topic == "minus-one":
        return EXIT_OK, emit_sequence(conjectures.minus_one_root_scan(args.k_max), args.format, 1, "k")
    if args.topic == "derangement":
        lines = ["n,D,a,ratio,float"]
        for n in range(1, args.n_max + 1):
            r = conjectures.derangement_ratio(n)
            lines.append(f"{n},{r.derangements},{r.alternating},{r.ratio},{float(r.ratio):.6f}")
        lines.append(f"# 1/e = {1 / math.e:.6f}")
        return EXIT_OK, "\n".join(lines)
    lines = ["n,l,S,a,ratio"]
    for n in range(1, args.n_max + 1):
        for l in range(1, min(args.l_max, n) + 1):
            r = conjectures.stirling_ratio(n, l)
            lines.append(f"{n},{l},{r.count},{r.alternating},{r.ratio:.6f}")
    return EXIT_OK, "\n".join(lines)


# -- verification suites ---------------------------------------------------


def _reference_table_ok() -> bool:
    for k, (terms, const) in REFERENCE_TABLE.items():
        p = basis.construct(k)
        if p.terms != tuple(terms) or p.constant != const:
            return False
    return True


def suite_core(n_max: int) -> dict[str, bool]:
    checks: dict[str, bool] = {"reference table": _reference_table_ok()}
    for k in range(2 ** min(n_max, 10)):
        forms = {basis.construct(k, m) for m in basis.METHODS}
        checks.setdefault("five-way construction", True)
        checks["five-way construction"] &= len(forms) == 1
    for n in range(1, min(n_max, oracle.COUNTS_ALL_MAX_N) + 1):
        table = oracle.counts_all(n)
        ok = sum(table) == math.factorial(n)
        for k, expected in enumerate(table):
            for route in INDEX_METHODS:
                if route == "oracle" and n > 8:
                    continue
                ok &= basis.value(n, k, route) == expected
            ok &= table[2 ** (n - 1) - 1 - k] == expected
        checks[f"routes n={n}"] = ok
    return checks


def suite_identities(n_max: int) -> dict[str, bool]:
    checks = {}
    checks["sum = n!"] = all(sum(series.pn_polynomial(n)) == math.factorial(n) for n in range(1, min(n_max, 12) + 1))
    checks["partial sums"] = all(
        a == b for n in range(2, min(n_max, 12) + 1) for r in range(1, n) for a, b in [series.partial_sum_check(n, r)]
    )
    checks["central determinant"] = all(
        basis.det_exact(basis.central_identity_matrix(n, m)) == math.comb(n - 1, m)
        for n in range(1, min(n_max, 12) + 1)
        for m in range(n)
    )
    checks["tan+sec"] = series.tan_sec_coefficients(12) == [series.zigzag(n) for n in range(13)]
    checks["euler"] = all(
        series.euler_determinant(m) == (-1) ** m * basis.value(2 * m, alternating_index(2 * m)) for m in range(1, 7)
    )
    checks["bernoulli"] = all(series.bernoulli_recover(m) == series.bernoulli_akiyama_tanigawa(2 * m) for m in range(2, 9))
    checks["generating function"] = all(series.gf_quotient_check(n) for n in range(1, 7))
    checks["thue-morse product"] = all(
        series.thue_morse_prefix(n) == [thue_morse(k) for k in range(2 ** (n - 1))] for n in range(2, 8)
    )
    return checks


def suite_roots(n_max: int) -> dict[str, bool]:
    checks = {}
    checks["positive roots = exponents"] = all(basis.positive_roots(k) == set(exponents(k)) for k in range(1, 257))
    checks["rank drops at exponents"] = all(
        basis.rank_check(n, k) == (n not in exponents(k)) for k in range(1, 65) for n in range(0, n_max + 1)
    )
    checks["formal zeros"] = all(
        (basis.formal_value(a, k) == 0) == (2 ** (a - 1) <= k % 2**a)
        for a in range(1, min(n_max, 8) + 1)
        for k in range(2048)
    )
    checks["witnesses"] = all(
        encode_index(signature_of(oracle.witness_permutation(n, k))) == k
        for n in range(1, min(n_max, 10) + 1)
        for k in range(2 ** (n - 1))
    )
    return checks


SUITES: dict[str, Callable[[int], dict[str, bool]]] = {
    "core": suite_core,
    "identities": suite_identities,
    "roots": suite_roots,
}


def cmd_verify(args) -> tuple[int, str]:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    lines = []
    passed = failed = 0
    for name in names:
        for check, ok in SUITES[name](args.n_max).items():
            lines.append(f"{'PASS' if ok else 'FAIL'} {name}: {check}")
            passed += ok
            failed += not ok
    lines.append(f"{passed} passed, {failed} failed")
    return (EXIT_FAIL if failed else EXIT_OK), "\n".join(lines)


# -- parser ----------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="updown", description="Permutations by up-down index and basis polynomials.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, help_text: str, formats=("text", "json")) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=formats, default="text")
        return p

    p = add("count", "count permutations by signature or by (n, k)")
    p.add_argument("--signature", help="comma-separated +1/-1 or u/d tokens")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--mask", help="ones | no-fixed | endpoint:l,m")
    p.add_argument("--method", choices=INDEX_METHODS)
    p.add_argument("--max-n", type=int, help="override the per-method order budget")
    p.add_argument("--show-triangle", action="store_true")
    p.set_defaults(func=cmd_count)

    p = add("poly", "print a basis polynomial")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=basis.METHODS, default=basis.DEFAULT_METHOD)
    p.set_defaults(func=cmd_poly)

    p = add("table", "list basis polynomials for k = 0..K")
    p.add_argument("--k-max", type=int, required=True)
    p.set_defaults(func=cmd_table)

    p = add("row", "formal values {a\\k} for k = 0..len-1", ("text", "json", "csv", "bfile"))
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--len", type=int, required=True)
    p.set_defaults(func=cmd_row)

    p = add("series", "coefficients of P_n(x)", ("text", "json", "csv", "bfile"))
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_series)

    p = add("numbers", "Euler, tangent or Bernoulli numbers from determinants", ("text", "json", "csv", "bfile"))
    p.add_argument("kind", choices=("euler", "tangent", "bernoulli"))
    p.add_argument("--m-max", type=int, required=True)
    p.set_defaults(func=cmd_numbers)

    p = add("witness", "a permutation with index k")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_witness)

    p = add("verify", "run invariant suites", ("text",))
    p.add_argument("--suite", choices=("all", *SUITES), default="all")
    p.add_argument("--n-max", type=int, default=8)
    p.set_defaults(func=cmd_verify)

    p = add("conjecture", "exploratory reports", ("text", "json", "csv", "bfile"))
    p.add_argument("topic", choices=("real-roots", "minus-one", "derangement", "stirling"))
    p.add_argument("--k-max", type=int, default=32)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--l-max", type=int, default=3)
    p.set_defaults(func=cmd_conjecture)
    return parser


def _glue_signature(argv: list[str]) -> list[str]:
    # "-1,1,..." looks like an option to argparse; bind it to --signature
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--signature" and i + 1 < len(argv):
            out.append(f"--signature={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def run(argv: Sequence[str] | None = None) -> tuple[int, str]:
    """Parse and dispatch; returns (exit status, output text)."""
    argv = _glue_signature(list(sys.argv[1:] if argv is None else argv))
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        return EXIT_USAGE, f"error: {exc}"
    except BudgetExceeded as exc:
        return EXIT_BUDGET, f"budget exceeded: {exc}"


def main(argv: Sequence[str] | None = None) -> int:
    status, text = run(argv)
    if text:
        stream = sys.stderr if status in (EXIT_USAGE, EXIT_BUDGET) else sys.stdout
        print(text, file=stream)
    return status


if __name__ == "__main__":
    sys.exit(main())
