from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pslab.exponents import (
    PAIR_MAP,
    TRIVIAL_PAIR,
    ExponentPair,
    InvalidPairError,
    apply_A,
    apply_B,
    apply_word,
    get_pair_by_identifier,
    is_valid_pair,
)

words = st.text(alphabet='AB', max_size=10)

valid_pairs = st.builds(
    ExponentPair,
    st.fractions(min_value=0, max_value=F(1, 2), max_denominator=1000),
    st.fractions(min_value=F(1, 2), max_value=1, max_denominator=1000),
)

def test_validity_region(tty_pair):
    assert is_valid_pair(TRIVIAL_PAIR)
    assert is_valid_pair(tty_pair)
    assert is_valid_pair(ExponentPair.of('1/2', '1/2'))
    assert not is_valid_pair(ExponentPair.of('3/5', '1/2'))
    assert not is_valid_pair(ExponentPair.of('0', '2/5'))

def test_a_process():
    assert apply_A(TRIVIAL_PAIR) == TRIVIAL_PAIR
    assert apply_A(ExponentPair.of('1/2', '1/2')) == ExponentPair.of('1/6', '2/3')

def test_b_process():
    assert apply_B(TRIVIAL_PAIR) == ExponentPair.of('1/2', '1/2')
    assert apply_B(ExponentPair.of('1/6', '2/3')) == ExponentPair.of('1/6', '2/3')
    assert apply_B(ExponentPair.of('1/14', '11/14')) == ExponentPair(F(2, 7), F(4, 7))

def test_b_process_rejects_invalid_input():
    with pytest.raises(InvalidPairError) as info:
        apply_B(ExponentPair.of('3/4', '1/2'))
    assert info.value.pair == ExponentPair.of('3/4', '1/2')

@pytest.mark.parametrize('word, kappa, lambda_', [
    ('', '0', '1'),
    ('B', '1/2', '1/2'),
    ('BA', '1/6', '2/3'),
    ('BAA', '1/14', '11/14'),
])
def test_words(word, kappa, lambda_):
    assert apply_word(word) == ExponentPair.of(kappa, lambda_)

@pytest.mark.parametrize('word', ['ABX', 'ab', None])
def test_bad_word(word):
    with pytest.raises(ValueError):
        apply_word(word)

def test_pair_registry():
    assert get_pair_by_identifier('ba').pair == apply_word('BA')
    named = get_pair_by_identifier('tty2025')
    assert named.to_dict()['kappa'] == '10769/351096'
    assert named.to_dict()['lambda'] == '609317/702192'
    assert all(is_valid_pair(entry.pair) for entry in PAIR_MAP.values())
    with pytest.raises(ValueError):
        get_pair_by_identifier('nope')

@given(valid_pairs)
def test_processes_stay_in_region(pair):
    assert is_valid_pair(apply_A(pair))
    assert is_valid_pair(apply_B(pair))

@given(words, words)
def test_word_application_composes(u, v):
    assert apply_word(u + v) == apply_word(v, start=apply_word(u))
    assert apply_word(u) == apply_word(u)
    assert is_valid_pair(apply_word(u + v))
