import math
from fractions import Fraction

import pytest

from updown import series
from updown.basis import formal_value, value
from updown.errors import BudgetExceeded
from updown.kernel import det_exact, thue_morse
from updown.signatures import alternating_index


def test_pn_examples():
    assert series.pn_polynomial(1) == [1]
    assert series.pn_polynomial(2) == [1, 1]
    assert series.pn_polynomial(3) == [1, 2, 2, 1]
    assert series.pn_polynomial(6)[10] == 61


@pytest.mark.parametrize("n", range(1, 10))
def test_pn_coefficients_are_counts(n, count_tables):
    assert series.pn_polynomial(n) == count_tables[n]


@pytest.mark.parametrize("n", range(1, 11))
def test_pn_at_one_is_factorial(n):
    assert sum(series.pn_polynomial(n)) == math.factorial(n)


def test_pn_budget():
    with pytest.raises(BudgetExceeded):
        series.pn_polynomial(series.PN_MAX_N + 1)


def test_poly_divexact_detects_remainder():
    assert series.poly_divexact([1, 0, -1], [1, -1]) == [1, 1]
    with pytest.raises(ArithmeticError):
        series.poly_divexact([1, 0, 1], [1, -1])


@pytest.mark.parametrize("n,order", [(2, 16), (1, 8), (4, 40), (3, None), (5, None), (6, None)])
def test_gf_quotient_examples(n, order):
    assert series.gf_quotient_check(n, order)


@pytest.mark.parametrize("n", range(2, 7))
def test_gf_product_must_start_at_n(n):
    # starting the dyadic product one factor earlier breaks the identity
    assert not series.gf_quotient_check(n, first_factor=n - 1)


def test_gf_order_budget():
    with pytest.raises(BudgetExceeded):
        series.gf_quotient_check(2, order=10**6)


@pytest.mark.parametrize("n", range(2, 9))
def test_thue_morse_prefix(n):
    assert series.thue_morse_prefix(n) == [thue_morse(k) for k in range(2 ** (n - 1))]


@pytest.mark.parametrize("n", range(2, 11))
def test_partial_sums(n):
    for r in range(1, n):
        s, prod = series.partial_sum_check(n, r)
        assert s == prod
    assert series.partial_sum_check(n, n - 1)[0] == math.factorial(n)
    assert series.partial_sum_check(n, 1)[0] == n


def test_partial_sum_r3_is_six_binomial():
    for n in range(4, 10):
        assert series.partial_sum_check(n, 3)[1] == 6 * math.comb(n, 3)


def test_euler_determinants():
    assert [series.euler_determinant(m) for m in (1, 2, 3)] == [-1, 5, -61]
    assert det_exact(series.euler_matrix(2)) == 5
    for m in range(1, 7):
        assert series.euler_determinant(m) == (-1) ** m * value(2 * m, alternating_index(2 * m))


def test_tangent_and_bernoulli():
    assert series.tangent_determinant(2) == -2
    assert series.tangent_determinant(3) == 16
    assert series.bernoulli_recover(2) == Fraction(-1, 30)
    assert series.bernoulli_recover(3) == Fraction(1, 42)
    assert series.bernoulli_recover(4) == Fraction(-1, 30)


@pytest.mark.parametrize("m", range(2, 9))
def test_bernoulli_against_akiyama_tanigawa(m):
    assert series.bernoulli_recover(m) == series.bernoulli_akiyama_tanigawa(2 * m)


def test_akiyama_tanigawa_known_values():
    assert series.bernoulli_akiyama_tanigawa(0) == 1
    assert series.bernoulli_akiyama_tanigawa(2) == Fraction(1, 6)
    assert series.bernoulli_akiyama_tanigawa(12) == Fraction(-691, 2730)


def test_tan_sec():
    coeffs = series.tan_sec_coefficients(7)
    assert coeffs == [1, 1, 1, 2, 5, 16, 61, 272]
    assert coeffs[7] == value(7, 42)


@pytest.mark.parametrize("n", range(1, 13))
def test_zigzag_matches_seidel(n):
    assert series.zigzag(n) == series.tan_sec_coefficients(12)[n]


def test_concatenation_sequence():
    seq = series.concatenation_sequence(31)
    assert seq[:7] == [1, 1, 1, 1, 2, 2, 1]
    assert seq[7:15] == [1, 3, 5, 3, 3, 5, 3, 1]
    assert seq[20] == 16


def test_concatenation_is_formal_value_blocks():
    seq = series.concatenation_sequence(63)
    for d in range(1, 7):
        assert seq[2 ** (d - 1) - 1 : 2**d - 1] == [formal_value(d, i) for i in range(2 ** (d - 1))]
