"""Exact Hilbert-function and matrix-factorization invariants over local quotient rings."""

from .core import DEFAULT_PRIME, Field, Poly, parse_poly, poly_str
from .presentations import (
    ModulePresentation,
    RingPresentation,
    annihilator_socle_dim,
    h_polynomial,
    hilbert_function,
    hilbert_function_ideal,
    hilbert_samuel,
    minimal_generators,
    ring_from_strings,
)
from .series import (
    HPolynomial,
    LengthSeries,
    chi_coefficients,
    e_coefficients,
    extract_h_polynomial,
    series_identity_check,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_PRIME",
    "Field",
    "Poly",
    "parse_poly",
    "poly_str",
    "RingPresentation",
    "ModulePresentation",
    "ring_from_strings",
    "hilbert_function",
    "hilbert_function_ideal",
    "hilbert_samuel",
    "h_polynomial",
    "minimal_generators",
    "annihilator_socle_dim",
    "HPolynomial",
    "LengthSeries",
    "extract_h_polynomial",
    "e_coefficients",
    "chi_coefficients",
    "series_identity_check",
    "__version__",
]
