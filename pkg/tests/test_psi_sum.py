import math

import numpy as np
import pytest

from pslab.exceptions import BudgetExceededError
from pslab.primes import (
    RationalExponent,
    psi_difference_sum,
    psi_of_negative_power,
    small_primes,
    smallest_prime_factor_segment,
    von_mangoldt_segment,
)

THREE_HALVES = RationalExponent(3, 2)

def psi_negative(y: float) -> float:
    return 0.5 - (y - math.floor(y))

def test_small_primes():
    assert small_primes(30).tolist() == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert small_primes(1).size == 0

def test_smallest_prime_factor():
    assert smallest_prime_factor_segment(1, 11).tolist() == [0, 2, 3, 2, 5, 2, 7, 2, 3, 2]
    assert smallest_prime_factor_segment(91, 92).tolist() == [7]

def test_von_mangoldt():
    weights = von_mangoldt_segment(1, 13)
    expected = [0, math.log(2), math.log(3), math.log(2), math.log(5), 0, math.log(7), math.log(2),
                math.log(3), 0, math.log(11), 0]
    assert np.allclose(weights, expected)

def test_segments_agree_with_whole_range():
    whole = von_mangoldt_segment(1, 2001)
    pieces = np.concatenate([von_mangoldt_segment(low, low + 250) for low in range(1, 2001, 250)])
    assert np.array_equal(whole, pieces)

def test_psi_at_integer_power():
    # 8^{2/3} = 4
    assert psi_of_negative_power(8, THREE_HALVES) == -0.5
    assert psi_of_negative_power(7, THREE_HALVES) == pytest.approx(psi_negative(7 ** (2 / 3)), abs=1e-12)

def test_hand_computed_sum():
    expected = (
        math.log(7) * (psi_negative(7 ** (2 / 3)) + 0.5)
        + math.log(2) * (-0.5 - psi_negative(9 ** (2 / 3)))
        + math.log(3) * (psi_negative(9 ** (2 / 3)) - psi_negative(10 ** (2 / 3)))
    )
    report = psi_difference_sum(10, THREE_HALVES)
    assert report.value == pytest.approx(expected, abs=1e-9)
    assert report.terms == 3

def test_normalized_sum_is_small():
    report = psi_difference_sum(10 ** 5, RationalExponent(6, 5))
    assert abs(report.normalized) < 0.5

def test_invalid_and_budget(context):
    with pytest.raises(ValueError):
        psi_difference_sum(1, THREE_HALVES)
    with pytest.raises(BudgetExceededError):
        psi_difference_sum(context.PSI_SUM_BUDGET + 1, THREE_HALVES)
