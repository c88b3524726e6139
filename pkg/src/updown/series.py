"""Generating functions and number identities.

Dense integer polynomials are plain lists of coefficients in ascending
powers of x.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .basis import formal_value, value
from .errors import check_budget
from .kernel import binomial_general, det_exact, falling_factorial, thue_morse
from .signatures import alternating_index

PN_MAX_N = 12
GF_MAX_N = 6
NUMBERS_MAX_M = 8
TAN_SEC_MAX_N = 14


def poly_mul(a: list[int], b: list[int], order: int | None = None) -> list[int]:
    size = len(a) + len(b) - 1
    if order is not None:
        size = min(size, order)
    out = [0] * max(size, 0)
    for i, x in enumerate(a):
        if x == 0 or i >= size:
            continue
        for j, y in enumerate(b[: size - i]):
            out[i + j] += x * y
    return out


def poly_add(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] += y
    return out


def poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact quotient num / den; raises if the division leaves a remainder."""
    num = list(num)
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    lead = den[-1]
    dd = len(den) - 1
    if len(num) - 1 < dd:
        if any(num):
            raise ArithmeticError("polynomial division is not exact")
        return [0]
    quot = [0] * (len(num) - dd)
    for i in range(len(quot) - 1, -1, -1):
        c = num[i + dd]
        if c % lead:
            raise ArithmeticError("polynomial division is not exact")
        q = c // lead
        quot[i] = q
        if q:
            for j, y in enumerate(den):
                num[i + j] -= q * y
    if any(num):
        raise ArithmeticError("polynomial division is not exact")
    return quot


def one_minus_x_pow(e: int) -> list[int]:
    out = [0] * (e + 1)
    out[0] = 1
    out[e] -= 1
    return out


def dyadic_product(first: int, last: int, order: int | None = None) -> list[int]:
    """prod_{i=first}^{last} (1 - x^(2^i)), optionally truncated below x^order."""
    out = [1]
    for i in range(first, last + 1):
        out = poly_mul(out, one_minus_x_pow(2**i), order)
    return out


@lru_cache(maxsize=None)
def _pn(n: int) -> tuple[int, ...]:
    # (1 - x^(2^(n-1))) P_n = prod_{j=0}^{n-1}(1 - x^(2^j))
    #     + sum_{i<n} C(n,i) prod_{j=i}^{n-1}(1 - x^(2^j)) x^(2^(i-1)) P_i
    # The factor on the left is divided out last, exactly.
    total = dyadic_product(0, n - 1)
    for i in range(1, n):
        shift = [0] * 2 ** (i - 1) + list(_pn(i))
        term = poly_mul(dyadic_product(i, n - 1), shift)
        total = poly_add(total, [binomial_general(n, i) * c for c in term])
    return tuple(poly_divexact(total, one_minus_x_pow(2 ** (n - 1))))


def pn_polynomial(n: int) -> list[int]:
    """Coefficients of P_n(x); the coefficient of x^k is {n\\k}."""
    if n < 1:
        raise ValueError("n must be positive")
    check_budget("n", n, PN_MAX_N)
    return list(_pn(n))


def gf_quotient_check(n: int, order: int | None = None, first_factor: int | None = None) -> bool:
    """Compare sum_k {n\\k} x^k with P_n(x) prod_{i>=first}(1 - x^(2^i)) below x^order.

    The left side comes from formal values, the right from the P_n
    recursion.  ``first_factor`` defaults to n, the start for which the two
    series agree.
    """
    if n < 1:
        raise ValueError("n must be positive")
    check_budget("n", n, GF_MAX_N)
    if order is None:
        order = 2 ** (n - 1) + 16
    check_budget("order", order, max(2 ** (n + 2), 2 ** (n - 1) + 16))
    first = n if first_factor is None else first_factor
    lhs = [formal_value(n, k) for k in range(order)]
    last = max(first, order.bit_length())
    tail = dyadic_product(first, last, order)
    rhs = poly_mul(pn_polynomial(n), tail, order)
    rhs += [0] * (order - len(rhs))
    return lhs == rhs


def thue_morse_prefix(n: int) -> list[int]:
    """Expansion of (1-x)(1-x^2)...(1-x^(2^(n-2))), of degree 2^(n-1)-1."""
    return dyadic_product(0, n - 2)


def partial_sum_check(n: int, r: int) -> tuple[int, int]:
    """(sum_{k<2^r} {n\\k}, n(n-1)...(n-r+1)); the two agree."""
    if not 1 <= r <= n - 1:
        raise ValueError(f"r={r} out of range [1, {n - 1}]")
    return sum(value(n, k, "poly") for k in range(2**r)), falling_factorial(n, r)


def _odd_chain_matrix(top: int, tops: list[int], bottoms: list[int]) -> list[list[int]]:
    # first row 1, C(top, b) for b in bottoms; then unit upper triangle C(a, b)
    size = len(bottoms) + 1
    rows = [[1] + [binomial_general(top, b) for b in bottoms]]
    for i in range(1, size):
        row = [1] + [0] * (size - 1)
        row[i] = 1
        for j in range(i + 1, size):
            row[j] = binomial_general(tops[i - 1], bottoms[j - 1])
        rows.append(row)
    return rows


def euler_matrix(m: int) -> list[list[int]]:
    odd = list(range(2 * m - 1, 0, -2))
    return _odd_chain_matrix(2 * m, odd, odd)


def euler_determinant(m: int) -> int:
    """Signed Euler number E_(2m)."""
    if m < 1:
        raise ValueError("m must be positive")
    check_budget("m", m, NUMBERS_MAX_M)
    return det_exact(euler_matrix(m))


def tangent_matrix(m: int) -> list[list[int]]:
    even = list(range(2 * m - 2, 0, -2))
    return _odd_chain_matrix(2 * m - 1, even, even)


def tangent_determinant(m: int) -> int:
    if m < 2:
        raise ValueError("m must be at least 2")
    check_budget("m", m, NUMBERS_MAX_M)
    return det_exact(tangent_matrix(m))


def bernoulli_recover(m: int) -> Fraction:
    """B_(2m) from the tangent determinant D: D * 2m / ((2^(2m) - 1) 2^(2m))."""
    d = tangent_determinant(m)
    return Fraction(d * 2 * m, (2 ** (2 * m) - 1) * 2 ** (2 * m))


def bernoulli_akiyama_tanigawa(n: int) -> Fraction:
    """B_n by the Akiyama-Tanigawa algorithm (B_1 = +1/2 convention)."""
    a = [Fraction(0)] * (n + 1)
    for mm in range(n + 1):
        a[mm] = Fraction(1, mm + 1)
        for j in range(mm, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
    return a[0]


def tan_sec_coefficients(n_max: int) -> list[int]:
    """n! [x^n] (tan x + sec x) for n = 0..n_max via the Seidel-Entringer triangle."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    check_budget("n_max", n_max, TAN_SEC_MAX_N)
    out = [1]
    row = [1]
    for _ in range(n_max):
        nxt = [0]
        for x in reversed(row):
            nxt.append(nxt[-1] + x)
        row = nxt
        out.append(row[-1])
    return out


def zigzag(n: int) -> int:
    """Up-down count a_n as {n\\k_(n-1)}."""
    return 1 if n == 0 else value(n, alternating_index(n), "poly")


def concatenation_sequence(length: int) -> list[int]:
    """Entry k (1-based) is {floor(log2 k)+1 \\ k - 2^floor(log2 k)}."""
    if length < 1:
        raise ValueError("length must be positive")
    out = []
    for k in range(1, length + 1):
        d = k.bit_length()
        out.append(formal_value(d, k - 2 ** (d - 1)))
    return out


def thue_morse_list(length: int) -> list[int]:
    return [thue_morse(k) for k in range(length)]
