"""Grunsky coefficients, Grunsky norms, and abelian-differential bounds.

Thin Python surface over the C++ core; see the package README for the
mathematical conventions and the CLI.
"""

from ._core import (  # noqa: F401
    AbelianMatrix,
    BeltramiSpec,
    BNormEstimate,
    ConvergenceReport,
    ConvergenceRow,
    ExtremalDifferential,
    FamilyKind,
    FamilySpec,
    FredholmResult,
    GolusinResult,
    GrunskyMatrix,
    GrunskyTable,
    LaurentMap,
    Lemma4Result,
    MetricSample,
    MomentVector,
    PolarTerm,
    SymmetricNormResult,
    TaylorMap,
    VerificationReport,
    VerificationRow,
    abelian_matrix,
    alpha_norm,
    beltrami_moments,
    beltrami_oracle_at,
    bnorm,
    default_n_ladder,
    default_t_grid,
    extremal_omega,
    family_beltrami,
    family_extension,
    family_map,
    fredholm_eigenvalue,
    fredholm_eigenvalue_map,
    golusin_bound_check,
    grunsky_coefficients,
    grunsky_matrix,
    grunsky_norm,
    h_eval,
    inversion_map,
    lemma4_check,
    metric_lambda_kappa,
    pairing,
    parse_family,
    qc_bound_check,
    schwarzian,
    symmetric_bilinear_norm,
    verify_theorem1,
)

__version__ = "0.1.0"
