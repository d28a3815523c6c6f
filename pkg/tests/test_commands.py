import io
import json

import pandas as pd
import pytest

from manage import cli

def invoke(runner, *args):
    return runner.invoke(cli, ['--config', 'testing', *args])

def data_of(result):
    assert result.exit_code == 0, result.stderr
    return json.loads(result.stdout)['data']

def test_derive_range_default_pair(runner):
    data = data_of(invoke(runner, 'derive-range'))
    assert data['c_max'] == '10318869/8886224'
    assert data['gamma_min'] == '8886224/10318869'
    assert data['binding_source'] == 'E1'

def test_derive_range_explicit_pair(runner):
    data = data_of(invoke(runner, 'derive-range', '--kappa', '0', '--lambda', '1'))
    assert data['c_max'] == '15/13'

def test_derive_range_needs_both_components(runner):
    result = invoke(runner, 'derive-range', '--kappa', '1/6')
    assert result.exit_code == 2
    assert '❌' in result.stderr

def test_manifest_is_attached(runner):
    payload = json.loads(invoke(runner, 'derive-range', '--pair', 'ba').stdout)
    assert payload['code'] == 0
    assert payload['manifest']['subcommand'] == 'derive-range'
    assert payload['manifest']['parameters']['pair'] == 'ba'

def test_pairs_word(runner):
    data = data_of(invoke(runner, 'pairs', '--word', 'BA'))
    assert (data['kappa'], data['lambda'], data['valid']) == ('1/6', '2/3', True)

def test_pairs_bad_word(runner):
    assert invoke(runner, 'pairs', '--word', 'ABX').exit_code == 2

def test_pairs_list(runner):
    identifiers = [row['identifier'] for row in data_of(invoke(runner, 'pairs', '--list'))['pairs']]
    assert 'tty2025' in identifiers

def test_terms_table(runner):
    data = data_of(invoke(runner, 'terms', '--table', 'wu', '--k', '3'))
    assert len(data['terms']) == 7
    assert data['restriction'] == 'X <= min(H^2, H^2 N / M)'
    assert invoke(runner, 'terms', '--table', 'wu', '--k', '1').exit_code == 2

def test_search(runner):
    data = data_of(invoke(runner, 'search', '--max-len', '1'))
    assert data['best_word'] == ''
    assert data['evaluated_words'] == 3

def test_history(runner):
    assert data_of(invoke(runner, 'history'))['improves_asymptotic_record']

def test_count(runner):
    data = data_of(invoke(runner, 'count', '--c', '3/2', '--x', '31'))
    assert data['count'] == 4

def test_count_sweep_csv(runner):
    result = invoke(runner, 'count', '--c', '3/2', '--x', '31', '--x', '1000', '--csv')
    assert result.exit_code == 0, result.stderr
    frame = pd.read_csv(io.StringIO(result.stdout), comment='#')
    assert list(frame.columns) == ['x', 'c', 'count', 'main_term', 'ratio']
    assert list(frame['x']) == [31, 1000]
    assert frame['count'][0] == 4

def test_count_budget_exit_code(runner):
    result = invoke(runner, 'count', '--c', '3/2', '--x', str(10 ** 10))
    assert result.exit_code == 1

def test_count_rejects_bad_exponent(runner):
    assert invoke(runner, 'count', '--c', '2/3', '--x', '100').exit_code == 2

def test_membership(runner):
    assert data_of(invoke(runner, 'membership', '--p', '5', '--c', '3/2'))['member'] is True
    assert data_of(invoke(runner, 'membership', '--p', '7', '--c', '3/2'))['member'] is False

def test_psi_sum(runner):
    assert data_of(invoke(runner, 'psi-sum', '--c', '3/2', '--x', '10'))['terms'] == 3

def test_verify_vaaler(runner):
    data = data_of(invoke(runner, 'verify', 'vaaler', '--H', '4', '--grid', '1000'))
    assert data['pass'] is True
    assert invoke(runner, 'verify', 'vaaler', '--H', '4', '--grid', '50').exit_code == 2

def test_verify_kl(runner):
    data = data_of(invoke(runner, 'verify', 'kl'))
    assert data['passed'] == data['cases']

def test_verify_spacing(runner):
    data = data_of(invoke(runner, 'verify', 'spacing', '--M', '2', '--N', '2', '--alpha', '1', '--beta', '1',
                          '--delta', '0.01'))
    assert data['count_naive'] == data['count_sorted'] == 6

def test_verify_t2(runner):
    payload = json.loads(invoke(runner, 'verify', 't2', '--X', '100', '--H', '8', '--M', '8', '--N', '8').stdout)
    assert payload['data']['ratio'] <= 1.0
    assert payload['manifest']['seed'] == 42
    assert payload['manifest']['generator'].startswith('numpy')

def test_verify_t2_sweep(runner):
    data = data_of(invoke(runner, 'verify', 't2-sweep', '--X', '100', '--H', '8', '--M', '8', '--N', '8',
                          '--N', '16'))
    assert data['cells'] == 2
    assert data['within_ceiling'] is True

def test_output_file(runner, tmp_path):
    target = tmp_path / 'range.json'
    result = invoke(runner, 'derive-range', '--output', str(target))
    assert result.exit_code == 0
    assert '✅' in result.stderr
    assert json.loads(target.read_text(encoding='utf-8'))['data']['binding_source'] == 'E1'

def test_json_and_csv_are_exclusive(runner):
    assert invoke(runner, 'derive-range', '--json', '--csv').exit_code == 2

def test_failure_envelope(runner):
    result = invoke(runner, 'count', '--c', '2/3', '--x', '100')
    assert result.exit_code == 2
    assert '❌' in result.stderr
    payload = json.loads(result.stdout)
    assert payload['code'] == 2
    assert 'data' not in payload
    assert payload['manifest']['subcommand'] == 'count'
    assert payload['manifest']['parameters']['c'] == '2/3'

def test_budget_failure_envelope(runner):
    payload = json.loads(invoke(runner, 'count', '--c', '3/2', '--x', str(10 ** 10)).stdout)
    assert payload['code'] == 1

def test_csv_failure_has_no_envelope(runner):
    result = invoke(runner, 'count', '--c', '2/3', '--x', '100', '--csv')
    assert result.exit_code == 2
    assert result.stdout == ''

def test_json_and_csv_carry_same_numbers(runner):
    args = ('count', '--c', '6/5', '--x', '1000', '--x', '5000')
    rows = data_of(invoke(runner, *args, '--json'))['rows']
    result = invoke(runner, *args, '--csv')
    assert result.exit_code == 0, result.stderr
    frame = pd.read_csv(io.StringIO(result.stdout), comment='#')
    assert len(frame) == len(rows) == 2
    for row, (_, record) in zip(rows, frame.iterrows()):
        assert record['x'] == row['x']
        assert record['count'] == row['count']
        assert record['c'] == row['c']
        assert record['main_term'] == pytest.approx(row['main_term'], rel=1e-12)
        assert record['ratio'] == pytest.approx(row['ratio'], rel=1e-12)
