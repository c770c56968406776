"""Exact-arithmetic toolkit for Baxter numbers: refined counts and their
generating polynomials, recurrence and annihilator verification, power-scale
asymptotics of P-recursive sequences, Sturm real-rootedness checks, and
finite-n normal-limit diagnostics."""

from .asymptotics import (
    AsymptoticBranch,
    BranchStatus,
    UnsupportedExpansionError,
    characteristic_polynomial,
    characteristic_roots,
    dominant_branch,
    expand_branch,
    ratio_diagnostic,
    residual_series,
)
from .exact import (
    baxter_number,
    baxter_polynomial,
    binomial,
    binomial_row,
    hyp3f2_terminating,
    pochhammer,
    refined_baxter,
    refined_baxter_row,
    theta_number,
)
from .limitstats import (
    DistributionSummary,
    LimitRatioReport,
    NormalityReport,
    distribution,
    kolmogorov_distance,
    limit_ratio_report,
    local_limit_distance,
    mean_value,
    moment_via_recurrence,
    normality_report,
    standard_normal_cdf,
    variance_value,
)
from .permoracle import StatTable, enumerate_counts, is_baxter, rise_descent_counts
from .poly import Polynomial, rational_roots
from .realroots import (
    RealRootReport,
    check_baxter_real_rooted,
    count_real_roots,
    squarefree_part,
    sturm_chain,
)
from .recurrences import (
    MIXED_IDENTITIES,
    NEXT_FROM_DERIVATIVES,
    VALUE_FROM_NEXT_DERIVATIVE,
    IdentityReport,
    OreOperatorExpr,
    PolyCoeffRecurrence,
    SeedMismatchError,
    VerificationReport,
    annihilator_operators,
    apply_ore_operator,
    builtin_recurrence,
    derive_seed,
    franel_number,
    generate_terms,
    verify_mixed_identity,
    verify_recurrence,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticBranch",
    "BranchStatus",
    "DistributionSummary",
    "IdentityReport",
    "LimitRatioReport",
    "MIXED_IDENTITIES",
    "NEXT_FROM_DERIVATIVES",
    "NormalityReport",
    "OreOperatorExpr",
    "PolyCoeffRecurrence",
    "Polynomial",
    "RealRootReport",
    "SeedMismatchError",
    "StatTable",
    "UnsupportedExpansionError",
    "VALUE_FROM_NEXT_DERIVATIVE",
    "VerificationReport",
    "annihilator_operators",
    "apply_ore_operator",
    "baxter_number",
    "baxter_polynomial",
    "binomial",
    "binomial_row",
    "builtin_recurrence",
    "characteristic_polynomial",
    "characteristic_roots",
    "check_baxter_real_rooted",
    "count_real_roots",
    "derive_seed",
    "distribution",
    "dominant_branch",
    "enumerate_counts",
    "expand_branch",
    "franel_number",
    "generate_terms",
    "hyp3f2_terminating",
    "is_baxter",
    "kolmogorov_distance",
    "limit_ratio_report",
    "local_limit_distance",
    "mean_value",
    "moment_via_recurrence",
    "normality_report",
    "pochhammer",
    "rational_roots",
    "ratio_diagnostic",
    "refined_baxter",
    "refined_baxter_row",
    "residual_series",
    "rise_descent_counts",
    "squarefree_part",
    "standard_normal_cdf",
    "sturm_chain",
    "theta_number",
    "variance_value",
    "verify_mixed_identity",
    "verify_recurrence",
]
