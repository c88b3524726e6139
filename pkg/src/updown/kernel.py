"""Exact arithmetic primitives.

Integers are Python ints and rationals are :class:`fractions.Fraction`, so
nothing here ever rounds.  Matrices are lists of rows.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Matrix = list[list[int]]


def binomial_general(x: int, t: int) -> int:
    """C(x, t) = x(x-1)...(x-t+1)/t! for any integer x and t >= 0."""
    if t < 0:
        raise ValueError("t must be non-negative")
    num = 1
    den = 1
    for i in range(t):
        num *= x - i
        den *= i + 1
    return num // den


def falling_factorial(n: int, r: int) -> int:
    if r < 0:
        raise ValueError("r must be non-negative")
    out = 1
    for i in range(r):
        out *= n - i
    return out


def thue_morse(k: int) -> int:
    """(-1) ** (number of binary ones of k)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return -1 if bin(k).count("1") & 1 else 1


def _check_square(m: Sequence[Sequence[int]]) -> int:
    n = len(m)
    for row in m:
        if len(row) != n:
            raise ValueError(f"matrix is not square: {n} rows, row of length {len(row)}")
    return n


def det_exact(m: Sequence[Sequence[int]]) -> int:
    """Determinant by single-step fraction-free (Bareiss) elimination.

    Every division is exact, so all intermediates stay integral.
    """
    n = _check_square(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def rank_exact(m: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix (any shape) by fraction-free elimination."""
    a = [list(row) for row in m]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    rank = 0
    prev = 1
    for c in range(cols):
        pivot_row = next((r for r in range(rank, rows) if a[r][c] != 0), None)
        if pivot_row is None:
            continue
        a[rank], a[pivot_row] = a[pivot_row], a[rank]
        pivot = a[rank][c]
        for i in range(rank + 1, rows):
            aic = a[i][c]
            for j in range(c + 1, cols):
                a[i][j] = (a[i][j] * pivot - aic * a[rank][j]) // prev
            a[i][c] = 0
        prev = pivot
        rank += 1
        if rank == rows:
            break
    return rank


@dataclass(frozen=True)
class MonomialPoly:
    """Rational coefficients in ascending degree; the zero polynomial is ``()``."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def of(cls, coeffs: Iterable[int | Fraction]) -> MonomialPoly:
        return cls(tuple(Fraction(c) for c in coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x: int | Fraction) -> Fraction:
        return eval_rational(self, Fraction(x))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(self.degree, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            mono = "" if d == 0 else ("n" if d == 1 else f"n^{d}")
            mag = abs(c)
            text = str(mag) if (mag != 1 or d == 0) else ""
            if text and mono:
                text += "*"
            parts.append(("-" if c < 0 else "+", text + mono))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for s, p in parts[1:]:
            out += f" {s} {p}"
        return out


def eval_rational(p: MonomialPoly, x: Fraction | int) -> Fraction:
    """Horner evaluation in exact rationals."""
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def falling_factorial_coeffs(t: int) -> list[int]:
    """Integer monomial coefficients of n(n-1)...(n-t+1), ascending degree."""
    coeffs = [1]
    for i in range(t):
        # multiply by (n - i)
        nxt = [0] * (len(coeffs) + 1)
        for d, c in enumerate(coeffs):
            nxt[d + 1] += c
            nxt[d] -= i * c
        coeffs = nxt
    return coeffs


def binomial_basis_to_monomial(terms: Iterable[tuple[int, int]], constant: int) -> MonomialPoly:
    """Convert ``constant + sum c * C(n, t)`` over (t, c) pairs to monomial form."""
    terms = list(terms)
    deg = max((t for t, _ in terms), default=0)
    acc = [Fraction(0)] * (deg + 1)
    acc[0] += constant
    fact = [1]
    for i in range(1, deg + 1):
        fact.append(fact[-1] * i)
    for t, c in terms:
        for d, f in enumerate(falling_factorial_coeffs(t)):
            acc[d] += Fraction(c * f, fact[t])
    return MonomialPoly(tuple(acc))


def forward_differences_at_origin(values: Sequence[int | Fraction]) -> list[Fraction]:
    """Newton coefficients a_r with P(n) = sum a_r C(n, r) from P(0..l).

    ``a_r`` is the r-th difference taken at the origin, which equals the
    backward difference at r.
    """
    row = [Fraction(v) for v in values]
    out = []
    while row:
        out.append(row[0])
        row = [row[i + 1] - row[i] for i in range(len(row) - 1)]
    return out


def to_monomial(p) -> MonomialPoly:
    """Monomial form of a basis polynomial (anything with ``terms``/``constant``)."""
    return binomial_basis_to_monomial(p.terms, p.constant)
