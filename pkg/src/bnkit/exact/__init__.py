"""Exact coefficient arithmetic and homology over F_c[H]."""

from .complex import (
    Bigrading,
    FreeBigradedComplex,
    HomologySummary,
    InvalidComplexError,
    free_homology,
    specialized_homology_dims,
    validate_complex,
)
from .field import Field, field, is_prime
from .poly import Poly, poly_divmod
from .snf import PolyMatrix, det, identity, matmul, rank, snf

__all__ = [
    "Bigrading",
    "Field",
    "FreeBigradedComplex",
    "HomologySummary",
    "InvalidComplexError",
    "Poly",
    "PolyMatrix",
    "det",
    "field",
    "free_homology",
    "identity",
    "is_prime",
    "matmul",
    "poly_divmod",
    "rank",
    "snf",
    "specialized_homology_dims",
    "validate_complex",
]
