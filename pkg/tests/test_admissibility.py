from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pslab.bounds import (
    AffineExponent,
    NeverSatisfiableError,
    Window,
    combine,
    derive_E_terms,
    threshold_from_E,
    type1_constraint,
    type2_constraint,
)
from pslab.bounds.admissibility import ALWAYS, BOUND, GREATER, NEVER, reduce_constraints, solve_linear, type1_m_bound
from pslab.exponents import PAIR_MAP, TRIVIAL_PAIR, ExponentPair, to_decimal

@pytest.mark.parametrize('triple, expected', [
    ((F(17, 12), F(-13, 12), F(5, 12)), F(15, 19)),
    ((F(4, 3), F(-2, 3), F(1, 3)), F(6, 7)),
    ((F(23, 12), F(-13, 12), F(-7, 12)), F(19, 39)),
    ((F(19, 12), F(-11, 12), F(1, 12)), F(3, 4)),
    ((F(3, 2), F(-1), F(0)), F(1, 2)),
])
def test_threshold_from_exponent(triple, expected):
    constraint = threshold_from_E(AffineExponent(*triple))
    assert constraint.direction == GREATER
    assert constraint.threshold == expected

def test_threshold_reports_m_condition():
    constraint = threshold_from_E(AffineExponent(F(17, 12), F(-13, 12), F(5, 12)), label='E5')
    row = constraint.to_dict()
    assert row['constraint'] == 'gamma > 15/19'
    assert row['m_condition'] == 'M << x^(-1/1 + 13/5*gamma)'
    assert row['window_edge'] == 'mu_high'

def test_type_constraints():
    assert type2_constraint().threshold == F(6, 7)
    assert type1_constraint().threshold == F(6, 7)
    assert type1_m_bound() == (F(-2), F(3))

def test_tty_range(tty_pair):
    report = combine(tty_pair)
    assert report.gamma_min == F(8886224, 10318869)
    assert report.c_max == F(10318869, 8886224)
    assert report.binding_source == 'E1'
    assert report.to_dict()['c_max'] == '10318869/8886224'
    assert round(float(report.c_max), 4) == 1.1612

def test_tty_per_term_thresholds(tty_pair):
    thresholds = {c.source_label: c.threshold for c in combine(tty_pair).all_constraints}
    assert thresholds['E5'] == F(15, 19)
    assert thresholds['E6'] == F(6, 7)
    assert thresholds['E7'] == F(19, 39)
    assert thresholds['E8'] == F(3, 4)
    assert thresholds['typeI'] == thresholds['typeII'] == F(6, 7)
    exact = {
        'E2': F(4386825, 5762948),
        'E3': F(10778789, 15996564),
        'E4': F(18403303, 22530303),
        'E9': F(5101094, 6533739),
    }
    for label, value in exact.items():
        assert thresholds[label] == value
    assert to_decimal(thresholds['E4']) == 0.816824
    printed = {'E2': 0.762, 'E3': 0.675, 'E9': 0.782}
    for label, value in printed.items():
        assert abs(float(thresholds[label]) - value) <= 1.5e-3

def test_every_constraint_holds_above_gamma_min(tty_pair):
    report = combine(tty_pair)
    gamma = report.gamma_min + F(1, 10 ** 9)
    assert all(c.is_satisfied(gamma) for c in report.all_constraints)
    assert not next(c for c in report.all_constraints if c.source_label == 'E1').is_satisfied(report.gamma_min)

@pytest.mark.parametrize('identifier, gamma_min', [
    ('trivial', F(13, 15)),
    ('b', F(9, 10)),
    ('ba', F(76, 87)),
    ('baa', F(44, 51)),
])
def test_classical_pairs(identifier, gamma_min):
    assert combine(PAIR_MAP[identifier].pair).gamma_min == gamma_min

def test_trivial_pair_binding():
    report = combine(TRIVIAL_PAIR)
    assert report.binding_source == 'E1'
    assert report.c_max == F(15, 13)

def test_csv_records_mark_binding(tty_pair):
    records = combine(tty_pair).to_records()
    assert len(records) == 14
    assert [r['source_label'] for r in records if r['binding']] == ['E1']

def test_flat_constraints():
    assert solve_linear(F(1, 2), F(0), 'flat').status == ALWAYS
    never = solve_linear(F(2), F(0), 'broken')
    assert never.status == NEVER
    assert never.threshold is None
    with pytest.raises(NeverSatisfiableError) as info:
        reduce_constraints([type2_constraint(), never])
    assert info.value.label == 'broken'

def test_empty_range_is_rejected():
    constraints = [solve_linear(F(2), F(-1), 'low'), solve_linear(F(0), F(2), 'high')]
    # gamma > 1 且 gamma < 1/2
    with pytest.raises(NeverSatisfiableError):
        reduce_constraints(constraints)

def test_invalid_pair_rejected():
    with pytest.raises(ValueError):
        combine(ExponentPair.of('3/4', '1/2'))

def _bound_thresholds(pair, mu_low):
    window = Window.type_one_prime(mu_low=mu_low)
    result = {}
    for term in derive_E_terms(pair, window):
        constraint = threshold_from_E(term, window)
        if constraint.status == BOUND and constraint.direction == GREATER:
            result[term.label] = constraint.threshold
    return result

@settings(max_examples=30, deadline=None)
@given(
    st.sampled_from(sorted(PAIR_MAP)),
    st.fractions(min_value=F(1, 3), max_value=F(4, 5), max_denominator=60),
    st.fractions(min_value=0, max_value=F(1, 5), max_denominator=60),
)
def test_raising_mu_low_never_raises_thresholds(identifier, mu_low, step):
    pair = PAIR_MAP[identifier].pair
    wide = _bound_thresholds(pair, mu_low)
    narrow = _bound_thresholds(pair, mu_low + step)
    for label, threshold in narrow.items():
        if label in wide:
            assert threshold <= wide[label]

@given(st.sampled_from(sorted(PAIR_MAP)))
def test_reciprocity(identifier):
    report = combine(PAIR_MAP[identifier].pair)
    assert report.c_max * report.gamma_min == 1

def test_thresholds_lie_in_unit_interval(tty_pair):
    for constraint in combine(tty_pair).all_constraints:
        assert constraint.status == BOUND
        assert 0 < constraint.threshold < 1

def test_dropping_dominated_terms_keeps_gamma_min(tty_pair):
    report = combine(tty_pair)
    kept = [c for c in report.all_constraints if not c.dominated]
    assert len(kept) < len(report.all_constraints)
    assert reduce_constraints(kept)[0] == report.gamma_min

@given(st.sampled_from(sorted(PAIR_MAP)))
def test_dropping_non_binding_constraint_keeps_gamma_min(identifier):
    report = combine(PAIR_MAP[identifier].pair)
    constraints = report.all_constraints
    for index, constraint in enumerate(constraints):
        if constraint.source_label == report.binding_source:
            continue
        rest = constraints[:index] + constraints[index + 1:]
        assert reduce_constraints(rest)[0] == report.gamma_min
