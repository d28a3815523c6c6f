import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pslab.exceptions import BudgetExceededError
from pslab.primes import RationalExponent, is_prime, max_index, membership, pi_c, sequence_values, small_primes

THREE_HALVES = RationalExponent(3, 2)

exponents = st.builds(
    lambda q, extra: RationalExponent(q + extra, q) if math.gcd(q + extra, q) == 1 else RationalExponent(2, 1),
    st.integers(1, 12), st.integers(1, 12),
)

def test_sequence_values():
    assert sequence_values(10, THREE_HALVES) == [1, 2, 5, 8, 11, 14, 18, 22, 27, 31]

def test_max_index():
    assert max_index(31, THREE_HALVES) == 10
    assert max_index(30, THREE_HALVES) == 9

def test_small_counts():
    report = pi_c(31, THREE_HALVES)
    assert report.count == 4
    assert report.n_max == 10
    assert pi_c(2, THREE_HALVES).count == 1
    assert report.main_term == pytest.approx(31 ** (2 / 3) / math.log(31))

def test_count_matches_brute_force():
    values = [v for v in sequence_values(max_index(20000, THREE_HALVES), THREE_HALVES) if v <= 20000]
    expected = sum(1 for v in values if is_prime(v))
    assert pi_c(20000, THREE_HALVES).count == expected

def test_segmented_count_matches_serial(context, monkeypatch):
    monkeypatch.setattr(context, 'PS_SEGMENT_WIDTH', 64)
    serial = pi_c(10 ** 5, RationalExponent(6, 5), workers=1)
    parallel = pi_c(10 ** 5, RationalExponent(6, 5), workers=3)
    assert parallel.count == serial.count

def test_count_is_monotone_in_x():
    counts = [pi_c(x, THREE_HALVES).count for x in (10, 100, 1000, 10000)]
    assert counts == sorted(counts)

@pytest.mark.parametrize('x', [10 ** 4, 10 ** 5, 10 ** 6])
def test_ratio_band(x):
    report = pi_c(x, RationalExponent(6, 5))
    assert 0.8 <= report.ratio <= 1.3

def test_invalid_x():
    with pytest.raises(ValueError):
        pi_c(1, THREE_HALVES)

def test_budget_exceeded(context):
    with pytest.raises(BudgetExceededError) as info:
        pi_c(10 ** 10, THREE_HALVES)
    assert info.value.budget == context.PS_COUNT_BUDGET

@pytest.mark.parametrize('pr, expected', [(5, True), (7, False), (2, True), (11, True), (13, False)])
def test_membership(pr, expected):
    assert membership(pr, THREE_HALVES) is expected

def test_membership_rejects_small():
    with pytest.raises(ValueError):
        membership(1, THREE_HALVES)

@given(exponents, st.integers(1, 5000))
def test_sequence_strictly_increasing(c, n):
    a, b = sequence_values(n + 1, c, n_start=n)
    assert a < b

@given(exponents, st.integers(2, 5000))
def test_membership_agrees_with_enumeration(c, value):
    values = set(sequence_values(max_index(value, c), c))
    assert membership(value, c) == (value in values)

@pytest.mark.parametrize('c', [THREE_HALVES, RationalExponent(6, 5), RationalExponent(7, 6)])
def test_membership_of_small_primes(c):
    values = set(sequence_values(max_index(10 ** 4, c), c))
    for pr in small_primes(10 ** 4).tolist():
        assert membership(pr, c) == (pr in values)
