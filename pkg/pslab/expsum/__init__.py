from .sawtooth import distance_to_integer, e, sawtooth
from .vaaler import VaalerApprox, VaalerCheck, vaaler_coefficients, verify_vaaler
from .kusmin_landau import MonomialPhase, KusminLandauResult, default_suite, kusmin_landau_check, run_suite
from .spacing import spacing_bound_ratio, spacing_count, spacing_count_naive, spacing_count_sorted
from .accumulator import CompensatedSum, ComplexCompensatedSum
from .trilinear import TrilinearSpec, random_spec, trilinear_sum
from .envelope import EnvelopeReport, check_hypotheses, envelope_ratio, sweep_grid

__all__ = [
    'CompensatedSum',
    'ComplexCompensatedSum',
    'EnvelopeReport',
    'KusminLandauResult',
    'MonomialPhase',
    'TrilinearSpec',
    'VaalerApprox',
    'VaalerCheck',
    'check_hypotheses',
    'default_suite',
    'distance_to_integer',
    'e',
    'envelope_ratio',
    'kusmin_landau_check',
    'random_spec',
    'run_suite',
    'sawtooth',
    'spacing_bound_ratio',
    'spacing_count',
    'spacing_count_naive',
    'spacing_count_sorted',
    'sweep_grid',
    'trilinear_sum',
    'vaaler_coefficients',
    'verify_vaaler',
]
