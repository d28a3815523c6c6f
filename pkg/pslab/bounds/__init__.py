from .terms import MonomialTerm, small_x_terms, twelve_term_bound, wu_terms
from .substitution import (
    AffineExponent,
    SubstitutedTerm,
    SubstitutionMap,
    Window,
    derive_E_terms,
    substitute,
    type_one_prime_map,
)
from .admissibility import (
    GammaConstraint,
    NeverSatisfiableError,
    RangeReport,
    combine,
    threshold_from_E,
    type1_constraint,
    type2_constraint,
)
from .search import SearchResult, search_pairs
from .history import historical_compare

__all__ = [
    'AffineExponent',
    'GammaConstraint',
    'MonomialTerm',
    'NeverSatisfiableError',
    'RangeReport',
    'SearchResult',
    'SubstitutedTerm',
    'SubstitutionMap',
    'Window',
    'combine',
    'derive_E_terms',
    'historical_compare',
    'search_pairs',
    'small_x_terms',
    'substitute',
    'twelve_term_bound',
    'threshold_from_E',
    'type1_constraint',
    'type2_constraint',
    'type_one_prime_map',
    'wu_terms',
]
