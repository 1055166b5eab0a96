"""Exact reduced Bar-Natan homology of 2-strand tangle closures.

Two independent routes: pairing type D structures over the Bar-Natan
algebra (:mod:`bnkit.pairing`) and the cube of resolutions
(:mod:`bnkit.cube`).
"""

from .algebra import (
    CIRCLE,
    DOT,
    AlgebraElement,
    BasisPath,
    ParseError,
    Vertex,
    decompose_kH,
    expand_kH,
    h_element,
    mul,
    parse_element,
)
from .cube import LinkDiagram, cbn_complex, cube_homology, lee_homology_dims, linking_number, torus_diagram
from .exact import Bigrading, FreeBigradedComplex, HomologySummary, field, free_homology, snf, validate_complex
from .pairing import closure_complex, mor_complex, reduced_bn_of_closure, torus_link_bn
from .typed import (
    TypeDStructure,
    build_qn,
    identify_rational,
    parse_typed,
    serialize_typed,
    theta_of_rational,
    validate,
)
from .verify import VerificationReport, compare_pairing_oracle, verify_lemma_towers, verify_main_theorem

__version__ = "0.1.0"
