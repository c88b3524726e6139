"""Signature-restricted alternant of a weight matrix.

alt_sig(A) sums prod_i A[i][pi_i] over the permutations pi with signature
``sig``.  Both evaluators expand along the first row: choosing column j for
row 1 leaves the minor without row 1 and column j, in which the new first
row keeps only the columns right of j (ascent) or left of j (descent).
"""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .errors import check_budget
from .signatures import Signature, validate

WeightMatrix = list[list[int]]

NAIVE_MAX_N = 9


def _check(a: Sequence[Sequence[int]], sig: Signature) -> int:
    n = len(sig) + 1
    if len(a) != n or any(len(row) != n for row in a):
        raise ValueError(f"weight matrix must be {n}x{n} for a signature of length {len(sig)}")
    return n


def alt_naive(a: Sequence[Sequence[int]], sig: Signature) -> int:
    """Literal recursive first-row expansion on explicit submatrices."""
    sig = validate(sig)
    n = _check(a, sig)
    check_budget("n", n, NAIVE_MAX_N)
    return _expand([list(r) for r in a], sig)


def _expand(a: list[list[int]], sig: Signature) -> int:
    n = len(a)
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] if sig[0] == 1 else a[0][1] * a[1][0]
    q, rest = sig[0], sig[1:]
    total = 0
    for j in range(n):
        w = a[0][j]
        if w == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in a[1:]]
        first = minor[0][:]
        if q == 1:
            first[:j] = [0] * j
        else:
            first[j:] = [0] * (n - 1 - j)
        minor[0] = first
        total += w * _expand(minor, rest)
    return total


def alt(a: Sequence[Sequence[int]], sig: Signature) -> int:
    """First-row expansion with memoized minors.

    A minor is fixed by the set of surviving columns and the window of them
    still open in its first row, so identical minors reached along different
    expansion paths are evaluated once.
    """
    sig = validate(sig)
    n = _check(a, sig)
    a = [tuple(r) for r in a]

    @lru_cache(maxsize=None)
    def minor(cols: int, lo: int, hi: int) -> int:
        # ``cols``: bitmask of surviving columns; window [lo, hi) of them is open
        row = n - cols.bit_count()
        live = [c for c in range(n) if cols >> c & 1]
        if row == n - 1:
            return sum(a[row][live[p]] for p in range(lo, hi))
        q = sig[row]
        total = 0
        for p in range(lo, hi):
            w = a[row][live[p]]
            if w == 0:
                continue
            rest = cols & ~(1 << live[p])
            sub = minor(rest, p, len(live) - 1) if q == 1 else minor(rest, 0, p)
            if sub:
                total += w * sub
        return total

    return minor((1 << n) - 1, 0, n)


def build_weight(kind: str, n: int, l: int | None = None, m: int | None = None) -> WeightMatrix:
    """``ones`` (J), ``ones_minus_identity`` (J - I) or ``endpoint`` (first value l, last m)."""
    if n < 1:
        raise ValueError("n must be positive")
    if kind == "ones":
        return [[1] * n for _ in range(n)]
    if kind == "ones_minus_identity":
        return [[0 if i == j else 1 for j in range(n)] for i in range(n)]
    if kind == "endpoint":
        if l is None or m is None or not (1 <= l <= n and 1 <= m <= n):
            raise ValueError(f"endpoint values must lie in [1, {n}], got l={l}, m={m}")
        out = [[1] * n for _ in range(n)]
        out[0] = [1 if j == l - 1 else 0 for j in range(n)]
        if n > 1:
            out[-1] = [1 if j == m - 1 else 0 for j in range(n)]
        return out
    raise ValueError(f"unknown weight kind {kind!r}")
