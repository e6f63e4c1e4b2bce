"""Peterson's hit problem over odd primes: hit matrices, cohit bases and
GL(h, F_p) invariants of the top-exterior slice."""
from .arith import EvenPrimeError, PrimeError, check_prime, lucas_binom, p_digits, primitive_root
from .cohit import (CohitBasis, QuotientBlocks, build_quotient_blocks, classify_rank1, cohit_basis,
                    cohit_dimension, is_hit)
from .glinv import InvariantSpace, gl_generators, invariants, invariants_of
from .monomials import ORDERS, compositions, enumerate_degree, score
from .report import (ParityError, crossley_expected, rank2_expected, digit_report, generic_degree, slice_degree)
from .steenrod import MODES, HitMatrix, hit_matrix

__version__ = "0.1.0"

__all__ = [
    "EvenPrimeError", "PrimeError", "check_prime", "lucas_binom", "p_digits", "primitive_root",
    "CohitBasis", "QuotientBlocks", "build_quotient_blocks", "classify_rank1", "cohit_basis",
    "cohit_dimension", "is_hit", "InvariantSpace", "gl_generators", "invariants", "invariants_of",
    "ORDERS", "compositions", "enumerate_degree", "score", "ParityError", "rank2_expected", "crossley_expected",
    "digit_report", "generic_degree", "slice_degree", "MODES", "HitMatrix", "hit_matrix",
]
