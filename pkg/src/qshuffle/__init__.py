"""Exact q-shuffle algebra computations over F_p with a numeric zeta oracle.

The package has two independent halves that check each other.  The
symbolic half implements the word algebras: the y-free span with its
recursive q-shuffle product, the full span with x- and y-letters, the
structure maps between them, Hopf-structure transport, and symbolic Goss
polynomials.  The numeric half implements truncated Thakur multiple zeta
values in F_q((1/theta)) by direct summation over monic polynomials.
The two halves meet in check_shuffle_oracle: a symbolic product identity
must reproduce an exact numeric product of zeta values.
"""

from .fields import FiniteField, PrimeField, binom_mod_p, delta_coeff, factor_prime_power
from .goss import FormalPoly, GossPolynomial, goss, goss_table
from .hopf import (
    AxiomReport,
    HopfStructureE,
    HopfStructureR,
    antipode_of_element,
    check_axioms,
    counit_of_element,
    delta_of_element,
    hopf_from_json,
    transport,
    transport_antipode,
    transport_coproduct,
    transport_counit,
)
from .maps import (
    BasisDecomposition,
    ehat,
    ehat_word,
    iota,
    phi,
    phi_inv,
    pi_hat,
    rbasis_decompose,
)
from .series import LaurentSeries, PolyA, monic_polys
from .shuffle import ShuffleContext
from .verify import PROPERTIES, VerificationReport, run_property
from .words import (
    EMPTY_WORD,
    Element,
    ParseError,
    TensorElement,
    Word,
    all_indices,
    canonical_order,
    e_words,
    element_from_json,
    element_to_json,
    format_element,
    format_tensor,
    format_word,
    parse_element,
    parse_tensor,
    parse_word,
    r_words,
    tensor_from_json,
    tensor_to_json,
    xw,
    yw,
)
from .zeta import (
    MzvValue,
    OracleReport,
    ThakurReport,
    check_shuffle_oracle,
    mzv,
    power_sum,
    power_sum_val_bound,
    realize,
    thakur_relation_check,
    theta_minus_theta_q,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomReport",
    "BasisDecomposition",
    "EMPTY_WORD",
    "Element",
    "FiniteField",
    "FormalPoly",
    "GossPolynomial",
    "HopfStructureE",
    "HopfStructureR",
    "LaurentSeries",
    "MzvValue",
    "OracleReport",
    "PROPERTIES",
    "ParseError",
    "PolyA",
    "PrimeField",
    "ShuffleContext",
    "TensorElement",
    "ThakurReport",
    "VerificationReport",
    "Word",
    "all_indices",
    "antipode_of_element",
    "binom_mod_p",
    "canonical_order",
    "check_axioms",
    "check_shuffle_oracle",
    "counit_of_element",
    "delta_coeff",
    "delta_of_element",
    "e_words",
    "ehat",
    "ehat_word",
    "element_from_json",
    "element_to_json",
    "factor_prime_power",
    "format_element",
    "format_tensor",
    "format_word",
    "goss",
    "goss_table",
    "hopf_from_json",
    "iota",
    "monic_polys",
    "mzv",
    "parse_element",
    "parse_tensor",
    "parse_word",
    "phi",
    "phi_inv",
    "pi_hat",
    "power_sum",
    "power_sum_val_bound",
    "r_words",
    "rbasis_decompose",
    "realize",
    "run_property",
    "tensor_from_json",
    "tensor_to_json",
    "thakur_relation_check",
    "theta_minus_theta_q",
    "transport",
    "transport_antipode",
    "transport_coproduct",
    "transport_counit",
    "xw",
    "yw",
]
