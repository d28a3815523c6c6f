from .arithmetic import RationalExponent, ceil_pow, floor_pow, is_prime
from .sieve import small_primes, smallest_prime_factor_segment, von_mangoldt_segment
from .counting import PrimeCountReport, max_index, membership, pi_c, sequence_values
from .psi_sum import PsiSumReport, psi_difference_sum, psi_difference_terms, psi_of_negative_power

__all__ = [
    'PrimeCountReport',
    'PsiSumReport',
    'RationalExponent',
    'ceil_pow',
    'floor_pow',
    'is_prime',
    'max_index',
    'membership',
    'pi_c',
    'psi_difference_sum',
    'psi_difference_terms',
    'psi_of_negative_power',
    'sequence_values',
    'small_primes',
    'smallest_prime_factor_segment',
    'von_mangoldt_segment',
]
