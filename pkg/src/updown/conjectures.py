"""Exact exploration of open questions about basis polynomials.

Nothing here asserts a conjecture; the functions report exact data (root
counts, ratios) that tests compare only against known lists.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import alternant, oracle
from .basis import construct, evaluate
from .errors import check_budget
from .kernel import to_monomial
from .series import zigzag
from .signatures import alternating_signature, exponents

PROFILE_MAX_K = 4096
RATIO_MAX_N = 14
STIRLING_MAX_N = 12

QPoly = list[Fraction]


# -- polynomial arithmetic over Q (ascending coefficients) -----------------


def _trim(p: QPoly) -> QPoly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _derivative(p: QPoly) -> QPoly:
    return _trim([i * c for i, c in enumerate(p)][1:])


def _divmod(num: QPoly, den: QPoly) -> tuple[QPoly, QPoly]:
    num = _trim(num)
    den = _trim(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    if len(num) < len(den):
        return [], num
    quot = [Fraction(0)] * (len(num) - len(den) + 1)
    rem = list(num)
    lead = den[-1]
    for i in range(len(quot) - 1, -1, -1):
        c = rem[i + len(den) - 1] / lead
        quot[i] = c
        if c:
            for j, d in enumerate(den):
                rem[i + j] -= c * d
    return _trim(quot), _trim(rem[: len(den) - 1])


def _gcd(a: QPoly, b: QPoly) -> QPoly:
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _divmod(a, b)[1]
    return [c / a[-1] for c in a] if a else a


def _eval(p: QPoly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def sturm_sequence(p: QPoly) -> list[QPoly]:
    seq = [_trim(p), _derivative(p)]
    while seq[-1]:
        rem = _divmod(seq[-2], seq[-1])[1]
        if not rem:
            break
        seq.append([-c for c in rem])
    return [s for s in seq if s]


def _sign_changes(values: Iterable[Fraction]) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def cauchy_bound(p: QPoly) -> Fraction:
    p = _trim(p)
    lead = abs(p[-1])
    return 1 + max((abs(c) / lead for c in p[:-1]), default=Fraction(0))


def count_distinct_real_roots(p: QPoly) -> int:
    """Distinct real roots by Sturm's theorem on (-B, B), B the Cauchy bound."""
    p = _trim(p)
    if len(p) <= 1:
        return 0
    b = cauchy_bound(p)
    seq = sturm_sequence(p)
    return _sign_changes(_eval(s, -b) for s in seq) - _sign_changes(_eval(s, b) for s in seq)


def count_real_roots_with_multiplicity(p: QPoly) -> int:
    # a root of multiplicity mu survives in g, gcd(g, g'), ... mu times
    total = 0
    g = _trim(p)
    while len(g) > 1:
        total += count_distinct_real_roots(_divmod(g, _gcd(g, _derivative(g)))[0])
        g = _gcd(g, _derivative(g))
    return total


def _divisors(x: int) -> list[int]:
    x = abs(x)
    out = []
    for d in range(1, math.isqrt(x) + 1):
        if x % d == 0:
            out.append(d)
            if d * d != x:
                out.append(x // d)
    return sorted(out)


def rational_roots(coeffs: list[int]) -> list[Fraction]:
    """Distinct rational roots of an integer polynomial by the candidate test."""
    coeffs = list(coeffs)
    roots: list[Fraction] = []
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
    if len(coeffs) <= 1:
        return roots
    content = math.gcd(*coeffs)
    coeffs = [c // content for c in coeffs]
    deg = len(coeffs) - 1
    for q in _divisors(coeffs[-1]):
        for p in _divisors(coeffs[0]):
            if math.gcd(p, q) != 1:
                continue
            for sp in (p, -p):
                # sum a_i sp^i q^(deg-i) == 0 without fractions
                if sum(c * sp**i * q ** (deg - i) for i, c in enumerate(coeffs)) == 0:
                    roots.append(Fraction(sp, q))
    return sorted(roots)


@dataclass(frozen=True)
class RootProfile:
    k: int
    degree: int
    real_count: int
    real_count_with_multiplicity: int
    rational_roots: tuple[Fraction, ...]
    all_real: bool
    zero_bits: int


def integer_coefficients(k: int) -> list[int]:
    """Monomial coefficients of t_1! * {n\\k}, ascending."""
    p = construct(k)
    scale = math.factorial(p.degree)
    return [int(c * scale) for c in to_monomial(p).coeffs]


def real_root_profile(k: int) -> RootProfile:
    if k < 1:
        raise ValueError("k must be positive")
    check_budget("k", k, PROFILE_MAX_K)
    coeffs = integer_coefficients(k)
    q = [Fraction(c) for c in coeffs]
    deg = len(coeffs) - 1
    distinct = count_distinct_real_roots(_divmod(q, _gcd(q, _derivative(q)))[0])
    with_mult = count_real_roots_with_multiplicity(q)
    zero_bits = k.bit_length() - bin(k).count("1")
    return RootProfile(k, deg, distinct, with_mult, tuple(rational_roots(coeffs)), with_mult == deg, zero_bits)


def profiles_csv(profiles: Iterable[RootProfile]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["k", "degree", "real_count", "all_real", "zero_bits", "rational_roots"])
    for p in profiles:
        w.writerow([p.k, p.degree, p.real_count, p.all_real, p.zero_bits, " ".join(str(r) for r in p.rational_roots)])
    return buf.getvalue()


def minus_one_root_scan(k_max: int) -> list[int]:
    """All k <= k_max whose basis polynomial vanishes at n = -1."""
    check_budget("k_max", k_max, PROFILE_MAX_K)
    return [k for k in range(1, k_max + 1) if evaluate(construct(k), -1) == 0]


@dataclass(frozen=True)
class DerangementReport:
    n: int
    derangements: int
    alternating: int
    ratio: Fraction
    dual_agrees: bool | None


def derangement_ratio(n: int, dual_max_n: int = 10) -> DerangementReport:
    """D_n / a_n for up-first alternating permutations without fixed points.

    Up to ``dual_max_n`` the count is taken twice, by plain enumeration and by
    the memoized alternant of J - I, and the agreement is reported.
    """
    if n < 1:
        raise ValueError("n must be positive")
    check_budget("n", n, RATIO_MAX_N)
    weights = alternant.build_weight("ones_minus_identity", n)
    via_alt = alternant.alt(weights, alternating_signature(n))
    agrees = None
    if n <= dual_max_n:
        agrees = oracle.alternating_derangements(n, memo=False) == via_alt
    a_n = zigzag(n)
    return DerangementReport(n, via_alt, a_n, Fraction(via_alt, a_n), agrees)


@dataclass(frozen=True)
class StirlingReport:
    n: int
    l: int
    count: int
    alternating: int
    ratio: float


def stirling_ratio(n: int, l: int) -> StirlingReport:
    """n S(n, l) / (a_n (ln n)^(l-1)) with S counted exactly by enumeration."""
    check_budget("n", n, STIRLING_MAX_N)
    s = oracle.alternating_stirling(n, l)
    a_n = zigzag(n)
    log_term = math.log(n) ** (l - 1) if l > 1 else 1.0
    ratio = n * s / (a_n * log_term) if log_term else math.inf
    return StirlingReport(n, l, s, a_n, ratio)


def exponents_are_roots(profile: RootProfile) -> bool:
    return set(Fraction(t) for t in exponents(profile.k)) <= set(profile.rational_roots)
