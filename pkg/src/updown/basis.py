"""Basis polynomials {n\\k}: the number of permutations of n with index k.

For fixed k with exponents t_1 > ... > t_m (k = sum 2^(t_i - 1)),
{n\\k} = (-1)^m + sum_p c_p C(n, t_p) is a polynomial in n of degree t_1.
This module builds the coefficients c_p by several independent routes,
evaluates {n\\k} through determinant and recursion formulas, and extends
it to the formal values outside the combinatorial range k < 2^(n-1).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Callable, Optional

from . import alternant, kernel, oracle, triangle
from .kernel import MonomialPoly, binomial_general, det_exact, thue_morse
from .signatures import decode_index, exponents, places

METHODS = ("explicit15", "symmetric30", "recursion37", "system46", "step47")
DEFAULT_METHOD = "system46"
ROUTES = ("niven1", "det14", "det40", "lambda66", "poly")
COMBINATORIAL_ROUTES = ("oracle", "triangle", "alternant")


@dataclass(frozen=True)
class BasisPolynomial:
    """``constant + sum(c * C(n, t) for t, c in terms)``, terms by descending t."""

    k: int
    terms: tuple[tuple[int, int], ...]
    constant: int

    @property
    def exponents(self) -> list[int]:
        return [t for t, _ in self.terms]

    @property
    def coefficients(self) -> tuple[int, ...]:
        return tuple(c for _, c in self.terms)

    @property
    def degree(self) -> int:
        return self.terms[0][0] if self.terms else 0

    def __call__(self, n: int) -> int:
        return evaluate(self, n)

    def __str__(self) -> str:
        out = ""
        for t, c in self.terms:
            if not out:
                out = f"{c}*C(n,{t})"
            else:
                out += f" {'-' if c < 0 else '+'} {abs(c)}*C(n,{t})"
        if not out:
            return str(self.constant)
        return out + f" {'-' if self.constant < 0 else '+'} {abs(self.constant)}"

    def to_json(self) -> dict:
        return {"k": self.k, "terms": [[t, c] for t, c in self.terms], "const": self.constant}

    @classmethod
    def from_json(cls, data: dict) -> BasisPolynomial:
        return cls(int(data["k"]), tuple((int(t), int(c)) for t, c in data["terms"]), int(data["const"]))


def _make(k: int, coeffs: list[int]) -> BasisPolynomial:
    ts = exponents(k)
    return BasisPolynomial(k, tuple(zip(ts, coeffs)), (-1) ** len(ts))


# -- constructions ---------------------------------------------------------


def _explicit15(k: int) -> BasisPolynomial:
    # Evaluate the explicit place-based sum at n = 0..t_1 and read off the
    # binomial-basis coefficients from forward differences.
    ts = exponents(k)
    if not ts:
        return _make(0, [])
    t, m, s = ts[0], len(ts), places(k)

    def value(n: int) -> int:
        # chain[e]: signed sum over index chains i_1 < ... < i_p = e of the
        # product of C(n - t + s_{i_r} - 1, s_{i_r} - s_{i_{r-1}})
        chain = []
        total = (-1) ** m
        for e in range(m):
            acc = (-1) ** (m - 1)
            for d in range(e):
                acc -= chain[d] * binomial_general(n - t + s[e] - 1, s[e] - s[d])
            chain.append(acc)
            total += acc * binomial_general(n, t + 1 - s[e])
        return total

    newton = kernel.forward_differences_at_origin([value(n) for n in range(t + 1)])
    if newton[0] != (-1) ** m or any(newton[r] != 0 for r in range(1, t + 1) if r not in ts):
        raise ArithmeticError(f"explicit sum for k={k} left the binomial span of its exponents")
    return _make(k, [int(newton[r]) for r in ts])


def _symmetric30(k: int) -> BasisPolynomial:
    # c_p = (-1)^m * sum over subsets {j_1 < ... < j_q} of {p+1..m} of
    #       (-1)^(q+1) C(t_p, t_j1) C(t_j1, t_j2) ... C(t_j(q-1), t_jq)
    ts = exponents(k)
    m = len(ts)
    coeffs = []
    for p in range(m):
        c = 0
        later = range(p + 1, m)
        for q in range(0, m - p):
            for subset in itertools.combinations(later, q):
                prod = 1
                prev = ts[p]
                for j in subset:
                    prod *= binomial_general(prev, ts[j])
                    prev = ts[j]
                c += (-1) ** (q + 1) * prod
        coeffs.append((-1) ** m * c)
    return _make(k, coeffs)


@lru_cache(maxsize=None)
def _recursion37(k: int) -> BasisPolynomial:
    # c_p is the formal value {t_p \ k - 2^(t_p - 1)}
    ts = exponents(k)
    return _make(k, [_formal37(t, k - 2 ** (t - 1)) for t in ts])


@lru_cache(maxsize=None)
def _formal37(a: int, j: int) -> int:
    i = j % 2**a
    if i >= 2 ** (a - 1):
        return 0
    return thue_morse(j - i) * evaluate(_recursion37(i), a)


def _system46(k: int) -> BasisPolynomial:
    # a_1..a_m attach to C(n, t_m), ..., C(n, t_1); forward substitution on
    # sum_{j<i} C(t_(m+1-i), t_(m+1-j)) a_j + a_i + (-1)^m = 0
    ts = exponents(k)
    m = len(ts)
    rev = ts[::-1]
    a: list[int] = []
    for i in range(m):
        acc = -((-1) ** m)
        for j in range(i):
            acc -= binomial_general(rev[i], rev[j]) * a[j]
        a.append(acc)
    return _make(k, a[::-1])


def _step47(k: int) -> BasisPolynomial:
    # Add the bits of k from the lowest: {n\j + 2^(l-1)} = {l\j} C(n,l) - {n\j}
    cur = BasisPolynomial(0, (), 1)
    for t in reversed(exponents(k)):
        top = evaluate(cur, t)
        terms = ((t, top),) + tuple((u, -c) for u, c in cur.terms)
        cur = BasisPolynomial(cur.k + 2 ** (t - 1), terms, -cur.constant)
    return cur


_BUILDERS: dict[str, Callable[[int], BasisPolynomial]] = {
    "explicit15": _explicit15,
    "symmetric30": _symmetric30,
    "recursion37": _recursion37,
    "system46": _system46,
    "step47": _step47,
}


def construct(k: int, method: str = DEFAULT_METHOD) -> BasisPolynomial:
    if k < 0:
        raise ValueError("k must be non-negative")
    try:
        builder = _BUILDERS[method]
    except KeyError:
        raise ValueError(f"unknown construction method {method!r}; expected one of {METHODS}") from None
    return builder(k)


def evaluate(p: BasisPolynomial, n: int) -> int:
    return p.constant + sum(c * binomial_general(n, t) for t, c in p.terms)


def degree(k: int) -> int:
    """floor(log2(2k)) for k >= 1, else 0."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return k.bit_length()


# -- determinant matrices --------------------------------------------------


def niven_matrix(n: int, k: int) -> list[list[int]]:
    """Order m+1 matrix of C(k_i, k_(j-1)) over the ascent positions k_i."""
    sig = decode_index(n, k)
    asc = [0] + [i for i, q in enumerate(sig, start=1) if q == 1] + [n]
    size = len(asc) - 1
    return [[binomial_general(asc[i], asc[j - 1]) for j in range(1, size + 1)] for i in range(1, size + 1)]


def places_matrix(n: int, k: int) -> list[list[int]]:
    """Hessenberg matrix in the places s_i of the ones of k."""
    if k == 0:
        return [[1]]
    t, s = degree(k), places(k)
    m = len(s)
    rows = []
    for r in range(1, m + 1):
        row = [0] * (m + 1)
        row[0] = 1
        for c in range(2, r + 1):
            row[c - 1] = binomial_general(n - t + s[r - 1] - 1, s[r - 1] - s[c - 2])
        row[r] = 1
        rows.append(row)
    rows.append([1] + [binomial_general(n, t + 1 - s[c]) for c in range(m)])
    return rows


def exponent_matrix(n: int, k: int) -> list[list[int]]:
    """First row 1, C(n, t_1..t_m); below it unit upper-triangular C(t_i, t_j)."""
    ts = exponents(k)
    m = len(ts)
    rows = [[1] + [binomial_general(n, t) for t in ts]]
    for i in range(1, m + 1):
        row = [1] + [0] * m
        row[i] = 1
        for j in range(i + 1, m + 1):
            row[j] = binomial_general(ts[i - 1], ts[j - 1])
        rows.append(row)
    return rows


def central_identity_matrix(n: int, m: int) -> list[list[int]]:
    """Order m+1 matrix whose determinant is C(n-1, m)."""
    rows = []
    for r in range(1, m + 1):
        row = [0] * (m + 1)
        row[0] = 1
        base = n - m + r - 1
        for c in range(2, r + 1):
            row[c - 1] = binomial_general(base, r - c + 1)
        row[r] = 1
        rows.append(row)
    rows.append([1] + [binomial_general(n, m - c) for c in range(m)])
    return rows


# -- value routes ----------------------------------------------------------


def _combinatorial(n: int, k: int, route: str) -> None:
    if n < 1 or not 0 <= k < 2 ** (n - 1):
        raise ValueError(f"route {route} needs 0 <= k < 2^(n-1); got n={n}, k={k}")


@lru_cache(maxsize=None)
def _lambda66(n: int, k: int) -> int:
    if k == 0:
        return 1
    total = thue_morse(k)
    for i, lam in lambda_set(k).items():
        inner = k - 2 ** (i - 1) - lam * 2**i
        total += binomial_general(n, i) * _lambda66(i, inner) * thue_morse(lam)
    return total


def value(n: int, k: int, route: str = "poly") -> int:
    """{n\\k} through one of the evaluation routes.

    ``niven1``, ``det14`` and the combinatorial routes (``oracle``,
    ``triangle``, ``alternant``) need 0 <= k < 2^(n-1); ``det40``,
    ``lambda66`` and ``poly`` give formal values for any n, k >= 0.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if route == "poly":
        return evaluate(construct(k), n)
    if route == "det40":
        return (-1) ** len(exponents(k)) * det_exact(exponent_matrix(n, k))
    if route == "lambda66":
        if n < 0:
            raise ValueError("lambda66 needs n >= 0")
        return _lambda66(n, k)
    _combinatorial(n, k, route)
    if route == "niven1":
        return det_exact(niven_matrix(n, k))
    if route == "det14":
        return det_exact(places_matrix(n, k))
    sig = decode_index(n, k)
    if route == "oracle":
        return oracle.count_signature(sig)
    if route == "triangle":
        return triangle.count_by_triangle(sig)
    if route == "alternant":
        return alternant.alt(alternant.build_weight("ones", n), sig)
    raise ValueError(f"unknown route {route!r}")


# -- formal values and rows ------------------------------------------------


@lru_cache(maxsize=None)
def _row_head(a: int, i: int) -> int:
    return evaluate(construct(i), a)


def formal_value(a: int, k: int) -> int:
    """{a\\k} for any k: tau_(k-i) {a\\i} with i = k mod 2^a, zero on the upper half-period."""
    if a < 0 or k < 0:
        raise ValueError("a and k must be non-negative")
    if a == 0:
        return thue_morse(k)
    i = k % 2**a
    if i >= 2 ** (a - 1):
        return 0
    return thue_morse(k - i) * _row_head(a, i)


def lambda_set(k: int) -> dict[int, int]:
    """Members i of A_k mapped to lambda(k; i).

    i is a member when floor(k/2^i - 1/2) equals ceil((k+1)/2^i - 1).
    """
    if k < 1:
        raise ValueError("k must be positive")
    out = {}
    for i in range(1, degree(k) + 1):
        lo = (2 * k - 2**i) // 2 ** (i + 1)
        hi = -((2**i - k - 1) // 2**i)
        if lo == hi:
            out[i] = lo
    return out


def leading_asymptotic(k: int) -> tuple[int, int]:
    """(leading binomial coefficient, degree) of {n\\k}."""
    if k < 1:
        raise ValueError("k must be positive")
    d = k.bit_length()
    return formal_value(d, k - 2 ** (d - 1)), d


# -- roots, recognition, congruences ---------------------------------------


def _integer_form(p: MonomialPoly) -> list[int]:
    den = lcm(*(c.denominator for c in p.coeffs))
    return [int(c * den) for c in p.coeffs]


def _divisors(x: int) -> list[int]:
    x = abs(x)
    small, large = [], []
    d = 1
    while d * d <= x:
        if x % d == 0:
            small.append(d)
            if d * d != x:
                large.append(x // d)
        d += 1
    return small + large[::-1]


def positive_roots(k: int) -> set[int]:
    """Positive integer roots of {n\\k}, found by the divisors of the constant term."""
    if k < 1:
        raise ValueError("k must be positive")
    p = construct(k)
    coeffs = _integer_form(kernel.to_monomial(p))
    # constant term is (-1)^m times the denominator, never zero
    return {d for d in _divisors(coeffs[0]) if evaluate(p, d) == 0}


def recognize(p: MonomialPoly) -> Optional[tuple[Fraction, int]]:
    """Return (C, k) with p = C * {n\\k}, or None when p is not of that shape."""
    if p.is_zero():
        raise ValueError("recognize needs a nonzero polynomial")
    l = p.degree
    vals = [p(r) for r in range(l + 1)]
    if vals[0] == 0:
        return None
    diffs = kernel.forward_differences_at_origin(vals)
    for r in range(1, l + 1):
        if diffs[r] * vals[r] != 0:
            return None
    ts = [r for r in range(1, l + 1) if diffs[r] != 0]
    k = sum(2 ** (t - 1) for t in ts)
    return (-1) ** len(ts) * vals[0], k


def smallest_divisor(n: int) -> int:
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


@dataclass(frozen=True)
class CongruenceResult:
    residue: int
    applicable: bool
    expected: int
    holds: bool


def congruence_residue(n: int, k: int) -> CongruenceResult:
    """{n\\k} mod n next to tau_k mod n; applicable when every divisor > 1 of n exceeds deg.

    k may exceed the combinatorial range, in which case the formal value is
    used and the flag is normally false.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if k < 0:
        raise ValueError("k must be non-negative")
    residue = value(n, k, "poly") % n
    expected = thue_morse(k) % n
    return CongruenceResult(residue, smallest_divisor(n) > degree(k), expected, residue == expected)


def rank_check(n: int, k: int) -> bool:
    """Whether the exponent matrix of k at n has full rank m+1."""
    if k < 1:
        raise ValueError("k must be positive")
    mat = exponent_matrix(n, k)
    return kernel.rank_exact(mat) == len(mat)
