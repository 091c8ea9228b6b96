"""2-rank of the class group of L_d = Q(zeta_8, sqrt d), with a quadratic class number oracle."""

from .arith import (
    OddSquarefree,
    UnitRadicand,
    factor_odd_squarefree,
    is_prime,
    jacobi,
    mod_pow,
    normalize_radicand,
    sum_of_two_squares,
)
from .errors import (
    CapacityError,
    DomainError,
    FormulaInconsistency,
    NotCovered,
    NotSquarefree,
    RangeError,
    TheoremCheckError,
)
from .formulas import (
    ProductFormulaInput,
    crosscheck,
    h2_biquad_sqrt2_minusd,
    h2_Ld_two_primes,
    kuroda_h2,
    parry_rank,
    wada_h2,
)
from .quadforms import BinaryQuadraticForm, ClassNumberResult, class_number, fundamental_discriminant, fundamental_unit_norm
from .rank import Classification, Kind, RankReport, class_number_even, classify, rank2
from .symbols import PrimeClass, SymbolPair, prime_class, quartic_2_over_p, quartic_p_over_2, ramified_count_t, symbol_pair
from .unit_index import SymbolMatrix, e_via_cases, e_via_matrix, symbol_matrix

__version__ = "0.1.0"
