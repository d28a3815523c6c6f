import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pslab.expsum import spacing_bound_ratio, spacing_count, spacing_count_naive, spacing_count_sorted

sizes = st.integers(1, 12)
powers = st.floats(-3, 3).filter(lambda v: abs(v) > 1e-3)
deltas = st.floats(1e-6, 1.0)

def test_single_quadruple():
    assert spacing_count(1, 1, 1, 1, 1e-6) == 1

def test_small_grid():
    assert spacing_count_naive(2, 2, 1, 1, 0.01) == 6
    assert spacing_count_sorted(2, 2, 1, 1, 0.01) == 6

def test_bound_ratios():
    assert spacing_bound_ratio(1, 1, 1, 1, 0.5) == pytest.approx(0.838, abs=5e-3)
    assert spacing_bound_ratio(2, 2, 1, 1, 0.01) == pytest.approx(0.708, abs=5e-3)

@pytest.mark.parametrize('M, N', [(8, 8), (16, 16), (32, 32), (8, 32)])
def test_ratio_below_ceiling(context, M, N):
    for alpha, beta in ((0.5, 1.0), (1.5, -0.5)):
        for delta in (1e-4, 1e-2):
            assert spacing_bound_ratio(M, N, alpha, beta, delta) <= context.SPACING_RATIO_CEILING

def test_reciprocal_exponents_ratio(context):
    assert spacing_bound_ratio(32, 32, 1, -1, 0.01) <= context.SPACING_RATIO_CEILING

@pytest.mark.slow
@pytest.mark.parametrize('M', [1, 2, 4, 8, 16, 32])
@pytest.mark.parametrize('N', [1, 2, 4, 8, 16, 32])
def test_full_grid(context, M, N):
    for alpha in (1, -1, 0.5):
        for beta in (1, -1, 0.5):
            for delta in (1e-3, 1e-2, 1e-1, 0.3):
                naive = spacing_count_naive(M, N, alpha, beta, delta)
                assert spacing_count_sorted(M, N, alpha, beta, delta) == naive
                assert spacing_bound_ratio(M, N, alpha, beta, delta) <= context.SPACING_RATIO_CEILING

@pytest.mark.parametrize('args', [(1, 1, 0, 1, 0.1), (1, 1, 1, 0, 0.1), (1, 1, 1, 1, 0), (0, 1, 1, 1, 0.1)])
def test_invalid_arguments(args):
    with pytest.raises(ValueError):
        spacing_count(*args)

@settings(max_examples=60, deadline=None)
@given(sizes, sizes, powers, powers, deltas)
def test_implementations_agree(M, N, alpha, beta, delta):
    assert spacing_count_sorted(M, N, alpha, beta, delta) == spacing_count_naive(M, N, alpha, beta, delta)

@settings(max_examples=60, deadline=None)
@given(sizes, sizes, powers, powers, deltas)
def test_swapping_sides(M, N, alpha, beta, delta):
    assert spacing_count(M, N, alpha, beta, delta) == spacing_count(N, M, beta, alpha, delta)

@settings(max_examples=60, deadline=None)
@given(sizes, sizes, powers, powers, deltas, deltas)
def test_monotone_in_delta(M, N, alpha, beta, d1, d2):
    small, large = sorted((d1, d2))
    assert spacing_count(M, N, alpha, beta, small) <= spacing_count(M, N, alpha, beta, large)
