"""orderlab: bi-orderability analysis of two-generator one-relator groups.

Everything is exact: free-group words with arbitrary-precision exponents,
integer/rational polynomial arithmetic with Sturm-chain root certification,
integer Smith normal forms, and free-reduction-verified generalized-torsion
certificates, combined into a justified verdict.
"""

__version__ = "0.1.0"

from . import errors
from .words import (
    BasisChange,
    Elementary,
    T,
    Word,
    X,
    commutator,
    conjugate,
    cyclic_reduce,
    exponent_sum,
    free_reduce,
    generator,
    identity,
    inverse_basis_change,
    is_proper_power,
    parse_word,
    substitute,
    zero_t_weight,
)
from .polynomials import (
    IntPolynomial,
    SturmChain,
    all_roots_real_positive,
    cauchy_bound,
    count_real_roots_in,
    divides,
    has_positive_real_root,
    parse_polynomial,
    squarefree_decomposition,
    squarefree_part,
    sturm_chain,
)
from .matrices import (
    IntMatrix,
    PrimeWitnesses,
    minors_gcd,
    prime_factorize,
    prime_witnesses,
    smith_normal_form,
    unit_smith_diagonal,
    weight_matrix,
    weight_matrix_with_corner,
)
from .relators import (
    FactorForm,
    HnnForm,
    Spectrum,
    WordClass,
    alexander_poly,
    classify,
    conjugate_factorization,
    hnn_normal_form,
    orientation_orbit,
    spectrum,
)
from .torsion import (
    DEFAULT_CANDIDATES,
    GtCertificate,
    bounded_search,
    commutator_expansion,
    family_certificates,
    verify_certificate,
)
from .decide import (
    BI_ORDERABLE,
    INCONCLUSIVE,
    NOT_BI_ORDERABLE,
    UNSUPPORTED,
    AnalyzeOptions,
    ConditionReport,
    Justification,
    Verdict,
    analyze,
    gcd_divisibility_conditions,
    nontrivial_in_quotient,
    parafree_conditions,
)

__all__ = [
    "errors",
    "__version__",
    # words
    "Word", "Elementary", "BasisChange", "X", "T",
    "parse_word", "free_reduce", "cyclic_reduce", "exponent_sum",
    "substitute", "zero_t_weight", "is_proper_power",
    "commutator", "conjugate", "generator", "identity", "inverse_basis_change",
    # polynomials
    "IntPolynomial", "SturmChain", "parse_polynomial",
    "squarefree_part", "squarefree_decomposition", "sturm_chain",
    "count_real_roots_in", "has_positive_real_root",
    "all_roots_real_positive", "cauchy_bound", "divides",
    # matrices
    "IntMatrix", "PrimeWitnesses", "weight_matrix", "weight_matrix_with_corner",
    "smith_normal_form", "minors_gcd", "unit_smith_diagonal",
    "prime_witnesses", "prime_factorize",
    # relators
    "FactorForm", "Spectrum", "WordClass", "HnnForm",
    "conjugate_factorization", "spectrum", "alexander_poly", "classify",
    "orientation_orbit", "hnn_normal_form",
    # torsion
    "GtCertificate", "verify_certificate", "commutator_expansion",
    "family_certificates", "bounded_search", "DEFAULT_CANDIDATES",
    # decide
    "Verdict", "AnalyzeOptions", "ConditionReport", "Justification",
    "analyze", "gcd_divisibility_conditions", "parafree_conditions",
    "nontrivial_in_quotient",
    "BI_ORDERABLE", "NOT_BI_ORDERABLE", "INCONCLUSIVE", "UNSUPPORTED",
]
