import io
import json
from fractions import Fraction

import numpy as np
import pandas as pd

from pslab import __version__
from pslab.responses import RunManifest, render_csv, render_json, result_error, result_success, to_jsonable

def test_jsonable_conversions():
    data = {'c': Fraction(3, 2), 'n': np.int64(4), 'x': np.float64(0.5), 'ok': np.bool_(True), 'z': 1 + 2j,
            'rows': (Fraction(7), np.array([1, 2]))}
    assert to_jsonable(data) == {'c': '3/2', 'n': 4, 'x': 0.5, 'ok': True, 'z': {'re': 1.0, 'im': 2.0},
                                 'rows': ['7/1', [1, 2]]}

def test_success_envelope():
    manifest = RunManifest('count', {'c': Fraction(3, 2)}, seed=None, duration_seconds=0.1)
    response = result_success({'count': 4}, 'counted', manifest)
    assert response['code'] == 0
    assert response['data'] == {'count': 4}
    assert response['manifest']['parameters'] == {'c': '3/2'}
    assert response['manifest']['version'] == __version__
    assert json.loads(render_json(response)) == response

def test_error_envelope():
    response = result_error('bad input', code=2)
    assert response == {'code': 2, 'message': 'bad input'}

def test_csv_has_manifest_header():
    manifest = RunManifest('verify t2', {'X': 100.0}, seed=42, generator='pcg64')
    text = render_csv([{'x': 1, 'ratio': Fraction(1, 2)}, {'x': 2, 'ratio': Fraction(1, 3)}], manifest)
    assert text.startswith('# subcommand: "verify t2"\n')
    assert '# seed: 42\n' in text
    frame = pd.read_csv(io.StringIO(text), comment='#')
    assert list(frame['ratio']) == ['1/2', '1/3']
