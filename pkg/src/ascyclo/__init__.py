"""Artin-Schreier extensions of F_q(T) and their cyclotomic embeddings.

Exact arithmetic over F_q (q <= 2^16), normal forms modulo wp(K), exhaustive
censuses of fields with one ramified prime, unit-group counts, Carlitz module
data and embedding certificates.
"""

__version__ = "0.1.0"

from .algebra import (
    INFINITY,
    FieldSpec,
    FqElem,
    Poly,
    PrimePoly,
    RatFunc,
    field_from_q,
    field_make,
    parse_poly,
    parse_ratfunc,
)
from .artin_schreier import (
    NormalForm,
    TwistFamily,
    equivalent_generator_data,
    in_wp,
    is_equivalent,
    normal_form,
    twist_family,
    wp_reduce,
)
from .carlitz import (
    CarlitzOperator,
    RamificationData,
    carlitz_action,
    ramification_data,
    torsion_degree,
)
from .census import CensusReport, census_bruteforce, census_identity_check, n_alpha, phi
from .embed import EmbeddingCertificate, certify, splitting_smoke_test
from .unit_group import (
    Residue,
    count_order_p,
    count_order_p_bruteforce,
    element_order,
    n_beta,
    n_beta_difference,
)

__all__ = [
    "INFINITY", "FieldSpec", "FqElem", "Poly", "PrimePoly", "RatFunc", "field_from_q",
    "field_make", "parse_poly", "parse_ratfunc", "NormalForm", "TwistFamily",
    "equivalent_generator_data", "in_wp", "is_equivalent", "normal_form", "twist_family",
    "wp_reduce", "CarlitzOperator", "RamificationData", "carlitz_action", "ramification_data",
    "torsion_degree", "CensusReport", "census_bruteforce", "census_identity_check", "n_alpha",
    "phi", "EmbeddingCertificate", "certify", "splitting_smoke_test", "Residue",
    "count_order_p", "count_order_p_bruteforce", "element_order", "n_beta",
    "n_beta_difference",
]
