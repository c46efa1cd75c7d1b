"""Exact-arithmetic toolkit for binomial concentration probabilities.

Computes f(n, k), the probability that B(n, k/n) lands within one standard
deviation of its mean, entirely in big-integer rationals; verifies that the
minimum over k sits at k = 1 and k = n - 1 with value ((n-1)/n)^(n-1);
checks the supporting normal-approximation chain and per-case certificates;
and provides desk-scale exhaustive verification of the sign-sum lower bound
P(|sum a_i e_i| <= 1) >= 1/2 for unit vectors.
"""

from .berry_esseen import (
    DEFAULT_C0,
    F40_ANCHOR,
    F_FLOOR,
    PER_SIDE_CAP,
    PHI_WIDTH_HIGH,
    PHI_WIDTH_LOW,
    TWO_SIDED_CAP,
    BerryEsseenReport,
    SummandMoments,
    be_bound,
    rho,
    summand_moments,
    sup_discrepancy,
    third_abs_moment,
    third_abs_moment_exact,
    verify_chain,
    verify_f40_threshold,
)
from .binomial import BinomialParams, cdf, interval_prob, pmf
from .cases import (
    CK_REFERENCE,
    K4_ANCHOR,
    K9_ANCHOR,
    CaseCertificate,
    CaseKind,
    case5_chain,
    certificates_to_jsonl,
    ck_constant,
    closed_form_f,
    sufficient_sum,
    verify_all_cases,
)
from .concentration import (
    ArgminReport,
    ConcentrationQuery,
    argmin_chvatal,
    argmin_f,
    chvatal_q,
    f,
    in_window,
    min_value_closed_form,
    nearest_two_thirds,
    symmetry_check,
    window,
)
from .exactprob import ONE, ROUND_HALF_EVEN, TRUNCATE, ZERO, ExactProb, to_decimal
from .exceptions import CapacityError, DomainError
from .normal import erfc, normal_cdf
from .rademacher import (
    MonteCarloEstimate,
    SignVector,
    iter_signed_sums,
    prob_within,
    random_unit_vector,
    sample_prob_within,
    tomaszewski_property,
)
from .tables import TableSpec, render_table, table_records

__version__ = "0.1.0"

__all__ = [
    "ArgminReport",
    "BerryEsseenReport",
    "BinomialParams",
    "CK_REFERENCE",
    "CapacityError",
    "CaseCertificate",
    "CaseKind",
    "ConcentrationQuery",
    "DEFAULT_C0",
    "DomainError",
    "ExactProb",
    "F40_ANCHOR",
    "F_FLOOR",
    "K4_ANCHOR",
    "K9_ANCHOR",
    "MonteCarloEstimate",
    "ONE",
    "PER_SIDE_CAP",
    "PHI_WIDTH_HIGH",
    "PHI_WIDTH_LOW",
    "ROUND_HALF_EVEN",
    "SignVector",
    "SummandMoments",
    "TRUNCATE",
    "TableSpec",
    "TWO_SIDED_CAP",
    "ZERO",
    "argmin_chvatal",
    "argmin_f",
    "be_bound",
    "case5_chain",
    "cdf",
    "certificates_to_jsonl",
    "chvatal_q",
    "ck_constant",
    "closed_form_f",
    "erfc",
    "f",
    "in_window",
    "interval_prob",
    "iter_signed_sums",
    "min_value_closed_form",
    "nearest_two_thirds",
    "normal_cdf",
    "pmf",
    "prob_within",
    "random_unit_vector",
    "render_table",
    "rho",
    "sample_prob_within",
    "sufficient_sum",
    "summand_moments",
    "sup_discrepancy",
    "symmetry_check",
    "table_records",
    "third_abs_moment",
    "third_abs_moment_exact",
    "to_decimal",
    "tomaszewski_property",
    "verify_all_cases",
    "verify_chain",
    "verify_f40_threshold",
    "window",
]
