from fractions import Fraction

import pytest

from updown import conjectures
from updown.basis import construct, evaluate
from updown.series import zigzag
from updown.signatures import exponents

EXPECTED_ALL_REAL = [1, 2, 3, 5, 6, 7, 11, 13, 14, 15, 23, 27, 29, 30, 31]


def test_sturm_on_known_polynomials():
    # (x-1)(x-2)(x+3) has three real roots; x^2+1 none; (x-1)^2 one distinct
    p = [Fraction(c) for c in (6, -7, 0, 1)]
    assert conjectures.count_distinct_real_roots(p) == 3
    assert conjectures.count_distinct_real_roots([Fraction(1), Fraction(0), Fraction(1)]) == 0
    sq = [Fraction(1), Fraction(-2), Fraction(1)]
    assert conjectures.count_distinct_real_roots(sq) == 1
    assert conjectures.count_real_roots_with_multiplicity(sq) == 2


def test_sturm_count_invariant_under_scaling():
    for k in range(1, 40):
        q = [Fraction(c) for c in conjectures.integer_coefficients(k)]
        scaled = [7 * c for c in q]
        assert conjectures.count_distinct_real_roots(q) == conjectures.count_distinct_real_roots(scaled)


def test_rational_roots():
    assert conjectures.rational_roots([6, -7, 0, 1]) == [-3, 1, 2]
    assert conjectures.rational_roots([0, 0, 1]) == [0]
    assert conjectures.rational_roots([-1, 2]) == [Fraction(1, 2)]


def test_all_real_list():
    profiles = [conjectures.real_root_profile(k) for k in range(1, 33)]
    assert [p.k for p in profiles if p.all_real] == EXPECTED_ALL_REAL


def test_k4_not_all_real():
    p = conjectures.real_root_profile(4)
    assert not p.all_real
    assert p.real_count == 1
    assert p.rational_roots == (Fraction(3),)


@pytest.mark.parametrize("k", range(1, 257))
def test_exponents_among_rational_roots(k):
    assert conjectures.exponents_are_roots(conjectures.real_root_profile(k))


def test_profiles_csv_header():
    text = conjectures.profiles_csv([conjectures.real_root_profile(5)])
    lines = text.splitlines()
    assert lines[0] == "k,degree,real_count,all_real,zero_bits,rational_roots"
    assert lines[1] == "5,3,3,True,1,-1 1 3"


def test_minus_one_scan():
    scan = conjectures.minus_one_root_scan(64)
    assert scan[:5] == [2, 5, 8, 11, 23]
    assert 1 not in scan
    assert evaluate(construct(1), -1) == -2
    assert all(evaluate(construct(k), -1) == 0 for k in scan)


@pytest.mark.parametrize("n", range(1, 11))
def test_derangement_dual_computation(n):
    r = conjectures.derangement_ratio(n)
    assert r.dual_agrees is True
    assert r.alternating == zigzag(n)
    assert r.ratio == Fraction(r.derangements, r.alternating)


def test_derangement_denominators():
    assert [conjectures.derangement_ratio(n).alternating for n in range(1, 7)] == [1, 1, 2, 5, 16, 61]


def test_derangement_beyond_dual_range():
    r = conjectures.derangement_ratio(12)
    assert r.dual_agrees is None
    assert 0 < r.ratio < 1


def test_stirling_ratio_report():
    r = conjectures.stirling_ratio(8, 1)
    assert r.ratio == pytest.approx(8 * r.count / zigzag(8))
    assert sum(conjectures.stirling_ratio(8, l).count for l in range(1, 9)) == zigzag(8)


def test_profile_rejects_zero():
    with pytest.raises(ValueError):
        conjectures.real_root_profile(0)


def test_zero_bits():
    assert conjectures.real_root_profile(21).zero_bits == 2
    assert conjectures.real_root_profile(31).zero_bits == 0
    assert len(exponents(21)) + conjectures.real_root_profile(21).zero_bits == 5


def test_few_zero_bits_imply_real_roots():
    profiles = [conjectures.real_root_profile(k) for k in range(1, 65)]
    assert all(p.all_real for p in profiles if p.zero_bits < 2)
    # for k <= 31 the two sets coincide; two zero bits can also give real roots later on
    assert [p.k for p in profiles[:31] if p.zero_bits < 2] == EXPECTED_ALL_REAL
    assert profiles[38].k == 39 and profiles[38].all_real and profiles[38].zero_bits == 2
