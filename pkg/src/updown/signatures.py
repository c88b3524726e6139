"""Up-down signatures and their binary index.

A signature of order n is a tuple of n-1 entries from {+1, -1}: entry i is
+1 when the permutation ascends from position i to i+1.  Its index is the
(n-1)-digit binary number whose most significant digit is the first
comparison, with 1 marking an ascent.
"""
from __future__ import annotations

from dataclasses import dataclass

Signature = tuple[int, ...]


class SignatureParseError(ValueError):
    pass


def validate(sig: Signature) -> Signature:
    sig = tuple(sig)
    for pos, q in enumerate(sig, start=1):
        if q not in (1, -1):
            raise ValueError(f"signature entry {pos} is {q!r}, expected +1 or -1")
    return sig


def order(sig: Signature) -> int:
    return len(sig) + 1


_TOKENS = {"+1": 1, "1": 1, "u": 1, "+": 1, "-1": -1, "d": -1, "-": -1}


def parse_signature(text: str) -> Signature:
    """Parse ``"-1,1,1,-1,1"`` or ``"d,u,u,d,u"`` (tokens may mix).

    An empty string is the empty signature of order 1.
    """
    text = text.strip()
    if not text:
        return ()
    out = []
    for pos, raw in enumerate(text.split(","), start=1):
        tok = raw.strip().lower()
        if tok not in _TOKENS:
            raise SignatureParseError(f"bad signature token {raw.strip()!r} at position {pos}")
        out.append(_TOKENS[tok])
    return tuple(out)


def format_signature(sig: Signature) -> str:
    return ",".join("1" if q == 1 else "-1" for q in sig)


def signature_of(perm) -> Signature:
    return tuple(1 if b > a else -1 for a, b in zip(perm, perm[1:]))


def _check_range(n: int, k: int) -> None:
    if n < 1:
        raise ValueError(f"order n must be positive, got {n}")
    if not 0 <= k < 2 ** (n - 1):
        raise ValueError(f"index {k} out of range [0, {2 ** (n - 1)}) for n={n}")


def encode_index(sig: Signature) -> int:
    k = 0
    for q in validate(sig):
        k = 2 * k + (1 if q == 1 else 0)
    return k


def decode_index(n: int, k: int) -> Signature:
    _check_range(n, k)
    return tuple(1 if (k >> (n - 2 - i)) & 1 else -1 for i in range(n - 1))


def complement_index(n: int, k: int) -> int:
    """Index of the reversed, negated signature; preserves the count."""
    _check_range(n, k)
    return 2 ** (n - 1) - 1 - k


def reverse_negate(sig: Signature) -> Signature:
    return tuple(-q for q in reversed(sig))


def exponents(k: int) -> list[int]:
    """Strictly decreasing t_1 > ... > t_m with k = sum 2^(t_i - 1)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return [t for t in range(k.bit_length(), 0, -1) if (k >> (t - 1)) & 1]


def places(k: int) -> list[int]:
    """Places s_1 < ... < s_m of the ones after the leading zeros (s_1 = 1)."""
    ts = exponents(k)
    return [ts[0] - t + 1 for t in ts] if ts else []


@dataclass(frozen=True)
class UpDownIndex:
    k: int
    exponents: tuple[int, ...]
    places: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.exponents)

    @classmethod
    def of(cls, k: int) -> UpDownIndex:
        return cls(k, tuple(exponents(k)), tuple(places(k)))


def alternating_index(n: int) -> int:
    """Index of the up-first alternating signature of order n."""
    if n < 1:
        raise ValueError("n must be positive")
    return (2 ** (n + 1) - 3 + (-1) ** n) // 6


def alternating_signature(n: int) -> Signature:
    return tuple(1 if i % 2 == 0 else -1 for i in range(n - 1))
