"""Characteristic-p commutative algebra toolkit.

Exact arithmetic over prime fields, Groebner bases, Frobenius and corner
powers, test ideals of hypersurface quotients, tight-closure bounds, ideal
linkage, Hilbert-Kunz style length tables, a batch script interpreter, and
named verification suites (CLI: ``alg``).
"""

from .core import (
    AlgebraError,
    ExponentOverflow,
    MonomialOrder,
    PolynomialSyntaxError,
    PolyRing,
    Polynomial,
    PrimeField,
    RingMismatch,
    UnknownVariableError,
    format_polynomial,
    parse_polynomial,
)
from .frobenius import bracket_power, frobenius_preimage, frobenius_root
from .groebner import buchberger, eliminate, normal_form
from .lengths import LengthTable, corner_length_identity, hk_table
from .linkage import (
    LinkageRecord,
    corner_power,
    direct_link,
    link_delta,
    m_primary_link_lift,
    tilde_approx,
)
from .rings import (
    Ideal,
    RingContext,
    find_parameter_ideal,
    is_unmixed,
    unmixed_part,
)
from .script import run_script, run_script_text
from .singularity import (
    certify_not_in_star,
    iq_approx,
    star_approx,
    star_colon,
    test_element,
    test_ideal,
)
from .suites import SUITE_NAMES, make_ring, verify_suite

__all__ = [
    "AlgebraError",
    "ExponentOverflow",
    "Ideal",
    "LengthTable",
    "LinkageRecord",
    "MonomialOrder",
    "PolyRing",
    "Polynomial",
    "PolynomialSyntaxError",
    "PrimeField",
    "RingContext",
    "RingMismatch",
    "SUITE_NAMES",
    "UnknownVariableError",
    "bracket_power",
    "buchberger",
    "certify_not_in_star",
    "corner_length_identity",
    "corner_power",
    "direct_link",
    "eliminate",
    "find_parameter_ideal",
    "format_polynomial",
    "frobenius_preimage",
    "frobenius_root",
    "hk_table",
    "iq_approx",
    "is_unmixed",
    "link_delta",
    "m_primary_link_lift",
    "make_ring",
    "normal_form",
    "parse_polynomial",
    "run_script",
    "run_script_text",
    "star_approx",
    "star_colon",
    "test_element",
    "test_ideal",
    "tilde_approx",
    "unmixed_part",
    "verify_suite",
]
