"""Exact GF(2) engine for Floer-type complexes, their spectral sequence, and rank deduction."""

from .complex import (
    CochainComplex,
    FloerComplex,
    LaurentComplex,
    build_laurent,
    complex_from_json,
    complex_to_json,
    hf_dims,
    homology,
    load_complex,
    morse_homology,
    validate,
)
from .errors import (
    BoundTooSmall,
    DimensionMismatch,
    FloerSSError,
    HFNotZero,
    NotAComplex,
    NuTooLarge,
    OutOfRange,
    ParseError,
    RangeError,
    SearchBudgetExceeded,
    ShapeMismatch,
    SRange,
    WindowTooSmall,
)
from .gf2 import BitMatrix

__version__ = "0.1.0"

__all__ = [
    "BitMatrix",
    "FloerComplex",
    "LaurentComplex",
    "CochainComplex",
    "build_laurent",
    "homology",
    "hf_dims",
    "morse_homology",
    "validate",
    "complex_from_json",
    "complex_to_json",
    "load_complex",
    "FloerSSError",
    "DimensionMismatch",
    "ShapeMismatch",
    "NotAComplex",
    "RangeError",
    "WindowTooSmall",
    "SRange",
    "HFNotZero",
    "NuTooLarge",
    "SearchBudgetExceeded",
    "BoundTooSmall",
    "OutOfRange",
    "ParseError",
]
