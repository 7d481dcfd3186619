"""Singular words, extremal continuants and symmetric interval exchanges."""

from .binary import binary_singular_from_parikh, christoffel, is_binary_singular
from .continuants import continuant_regular, continuant_semiregular, tridiagonal_check
from .errors import AlphabetError, DomainError, ScopeError, SingwordsError, SizeError
from .extremal import brute_extremal, regular_max_pattern, verify_ternary_conjecture
from .iet import IETSpec, collect_language, h_conditions_check, natural_coding, soc_check
from .morphisms import lambda_a, rho_c, xi_apply, xi_bounded, xi_bounded_inverse
from .streams import BiWord, Stream, markoff_check, window_singular_check
from .ternary import construct_ternary, reduction_trace
from .words import OrderedAlphabet, classify_singular, is_balanced, is_singular, lex_compare

__all__ = [
    "AlphabetError",
    "BiWord",
    "DomainError",
    "IETSpec",
    "OrderedAlphabet",
    "ScopeError",
    "SingwordsError",
    "SizeError",
    "Stream",
    "binary_singular_from_parikh",
    "brute_extremal",
    "christoffel",
    "classify_singular",
    "collect_language",
    "construct_ternary",
    "continuant_regular",
    "continuant_semiregular",
    "h_conditions_check",
    "is_balanced",
    "is_binary_singular",
    "is_singular",
    "lambda_a",
    "lex_compare",
    "markoff_check",
    "natural_coding",
    "reduction_trace",
    "regular_max_pattern",
    "rho_c",
    "soc_check",
    "tridiagonal_check",
    "verify_ternary_conjecture",
    "window_singular_check",
    "xi_apply",
    "xi_bounded",
    "xi_bounded_inverse",
]
