"""Classification of words over finite rings by their image in SL_2."""

from .classify import (
    RING, ClassLabel, FieldTarget, RingTarget, Side, Verdict, classify_field, classify_ring,
    count_formula, enumerate_class, extend_field, extend_ring,
)
from .dynamics import OrbitInfo, PeriodicAnalysis, orbit, periodic_t, predecessor, successor
from .errors import *  # noqa: F401,F403
from .factor import Factorization, factorize, is_prime_word
from .rewrite import (
    ReductionTrace, RewriteStep, Rule, classify_by_rewrite_field, classify_by_rewrite_ring,
    reduce_step_field, reduce_step_ring,
)
from .ring import Element, ExtensionField, IntegersMod, PrimeField, Ring, inv, is_unit, ring_make
from .sl2 import Mat2, generator, identity, mat_inv, mat_mul, mat_order, parse_matrix
from .wordsearch import CayleyCoverReport, cayley_cover, find_word, sl2_size
from .words import Word, format_word, parse_word, pi, prefix_images

__version__ = "0.1.0"
