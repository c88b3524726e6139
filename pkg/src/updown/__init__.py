"""Permutations with prescribed up-down structure and the basis polynomials {n\\k}."""
from .basis import BasisPolynomial, construct, evaluate, formal_value, value
from .oracle import count_signature, counts_all
from .signatures import decode_index, encode_index, exponents

__all__ = [
    "BasisPolynomial",
    "construct",
    "count_signature",
    "counts_all",
    "decode_index",
    "encode_index",
    "evaluate",
    "exponents",
    "formal_value",
    "value",
]
