"""Ground truth by direct enumeration of permutations.

Values are 1..n in the public API; internally positions and values are
0-based and sets of values are bitmasks.
"""
from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import check_budget
from .signatures import Signature, alternating_signature, decode_index, validate

Permutation = tuple[int, ...]
PositionMask = Sequence[Sequence[int]]

COUNTS_ALL_MAX_N = 10
DERANGEMENT_MAX_N = 14
STIRLING_MAX_N = 12
# prefix-sharing memo switches on above this order unless forced either way
PLAIN_DFS_MAX_N = 10


def _allowed_masks(n: int, mask: PositionMask | None) -> list[int]:
    if mask is None:
        return [(1 << n) - 1] * n
    if len(mask) != n or any(len(row) != n for row in mask):
        raise ValueError(f"position mask must be {n}x{n}")
    out = []
    for row in mask:
        bits = 0
        for j, a in enumerate(row):
            if a not in (0, 1):
                raise ValueError("position mask entries must be 0 or 1")
            if a:
                bits |= 1 << j
        out.append(bits)
    return out


def count_signature(sig: Signature, mask: PositionMask | None = None, memo: bool | None = None) -> int:
    """Number of permutations with signature ``sig`` that respect ``mask``.

    Depth-first construction by position; a partial permutation is extended
    only by values consistent with the next comparison and the mask.  With
    ``memo`` the counts of completions are shared between prefixes that have
    the same used-value set and last value.
    """
    sig = validate(sig)
    n = len(sig) + 1
    allowed = _allowed_masks(n, mask)
    if memo is None:
        memo = n > PLAIN_DFS_MAX_N

    def extend(used: int, last: int) -> int:
        pos = used.bit_count()
        if pos == n:
            return 1
        cand = allowed[pos] & ~used
        if sig[pos - 1] == 1:
            cand &= ~((1 << (last + 1)) - 1)
        else:
            cand &= (1 << last) - 1
        total = 0
        while cand:
            low = cand & -cand
            cand ^= low
            total += step(used | low, low.bit_length() - 1)
        return total

    step = lru_cache(maxsize=None)(extend) if memo else extend

    total = 0
    first = allowed[0]
    while first:
        low = first & -first
        first ^= low
        total += step(low, low.bit_length() - 1)
    return total


def counts_all(n: int, max_n: int = COUNTS_ALL_MAX_N) -> list[int]:
    """Entry k is the number of permutations of n with index k (one n! scan)."""
    if n < 1:
        raise ValueError("n must be positive")
    check_budget("n", n, max_n)
    if n == 1:
        return [1]
    flat = itertools.chain.from_iterable(itertools.permutations(range(n)))
    perms = np.fromiter(flat, dtype=np.int8, count=n * math.factorial(n)).reshape(-1, n)
    ascents = (perms[:, 1:] > perms[:, :-1]).astype(np.int64)
    weights = 1 << np.arange(n - 2, -1, -1, dtype=np.int64)
    index = ascents @ weights
    return [int(c) for c in np.bincount(index, minlength=2 ** (n - 1))]


def witness_permutation(n: int, k: int) -> Permutation:
    """A permutation of 1..n with index k, from the run-reversal construction.

    Start from the identity; each maximal run of binary zeros of k at
    signature positions i..i+t-1 reverses the entries at positions i..i+t.
    """
    sig = decode_index(n, k)
    perm = list(range(1, n + 1))
    i = 0
    while i < len(sig):
        if sig[i] == 1:
            i += 1
            continue
        j = i
        while j < len(sig) and sig[j] == -1:
            j += 1
        # run of descents at comparisons i..j-1 touches positions i..j
        perm[i : j + 1] = reversed(perm[i : j + 1])
        i = j
    return tuple(perm)


def ones_minus_identity(n: int) -> list[list[int]]:
    return [[0 if i == j else 1 for j in range(n)] for i in range(n)]


def alternating_derangements(n: int, memo: bool | None = None) -> int:
    """Up-first alternating permutations of n without fixed points."""
    if n < 1:
        raise ValueError("n must be positive")
    check_budget("n", n, DERANGEMENT_MAX_N)
    return count_signature(alternating_signature(n), ones_minus_identity(n), memo=memo)


@lru_cache(maxsize=None)
def alternating_stirling_row(n: int) -> tuple[int, ...]:
    """Entry l counts up-first alternating permutations of n with l cycles."""
    if n < 1:
        raise ValueError("n must be positive")
    check_budget("n", n, STIRLING_MAX_N)
    sig = alternating_signature(n)
    row = [0] * (n + 1)
    # paths of the partial functional graph: start_of[end], end_of[start]
    start_of = list(range(n))
    end_of = list(range(n))

    def extend(pos: int, used: int, last: int, cycles: int) -> None:
        if pos == n:
            row[cycles] += 1
            return
        cand = ~used & ((1 << n) - 1)
        if sig[pos - 1] == 1:
            cand &= ~((1 << (last + 1)) - 1)
        else:
            cand &= (1 << last) - 1
        s = start_of[pos]
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            if v == s:
                extend(pos + 1, used | low, v, cycles + 1)
                continue
            e = end_of[v]
            old = (end_of[s], start_of[e])
            end_of[s], start_of[e] = e, s
            extend(pos + 1, used | low, v, cycles)
            end_of[s], start_of[e] = old

    for v in range(n):
        s = start_of[0]
        if v == s:
            extend(1, 1 << v, v, 1)
            continue
        e = end_of[v]
        old = (end_of[s], start_of[e])
        end_of[s], start_of[e] = e, s
        extend(1, 1 << v, v, 0)
        end_of[s], start_of[e] = old
    return tuple(row)


def alternating_stirling(n: int, l: int) -> int:
    if not 1 <= l <= n:
        raise ValueError(f"cycle count l={l} out of range [1, {n}]")
    return alternating_stirling_row(n)[l]


def cycle_count(perm: Sequence[int]) -> int:
    """Cycles of a permutation of 1..n in one-line notation."""
    seen = [False] * len(perm)
    cycles = 0
    for i in range(len(perm)):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j] - 1
    return cycles
