"""Exact arithmetic for Schur- and Schubert-family polynomials, the
monomial normalization operator, and certification of the Lorentzian
property with checkable witnesses."""

__version__ = "0.1.0"

from .polynomials import (
    Polynomial,
    PolynomialSyntaxError,
    ShiftedLaurent,
    format_polynomial,
    format_terms,
    normalize,
    normalize_shifted,
    parse_polynomial,
)
from .symmetric import (
    Partition,
    SkewShape,
    StrictPartition,
    complement_partition,
    complete_homogeneous,
    kostant_partition,
    kostka,
    schur,
    schur_p,
    skew_schur,
    verma_truncated_normalized,
)
from .schubert import (
    BruhatCover,
    Permutation,
    avoids_pattern,
    bruhat_covers,
    degree_polynomial,
    demazure_pi,
    divided_difference,
    grassmannian_for,
    grothendieck,
    grothendieck_component,
    homogeneous_grothendieck,
    key_polynomial,
    lehmer_code,
    schubert,
    schubert_dual,
)
from .certify import (
    InertiaSignature,
    LorentzCertificate,
    SymmetricMatrix,
    bivariate_ulc,
    characteristic_polynomial,
    discrete_root_log_concavity,
    inertia,
    is_m_convex,
    lorentzian_certify,
    m_convex_failure,
    numeric_log_concavity_spot,
    quadratic_form_matrix,
    root_direction_violations,
    verify_certificate,
)
from .sweeps import SweepBounds, SweepReport, SweepSpec, run_sweep

__all__ = [
    "Polynomial",
    "PolynomialSyntaxError",
    "ShiftedLaurent",
    "format_polynomial",
    "format_terms",
    "normalize",
    "normalize_shifted",
    "parse_polynomial",
    "Partition",
    "SkewShape",
    "StrictPartition",
    "complement_partition",
    "complete_homogeneous",
    "kostant_partition",
    "kostka",
    "schur",
    "schur_p",
    "skew_schur",
    "verma_truncated_normalized",
    "BruhatCover",
    "Permutation",
    "avoids_pattern",
    "bruhat_covers",
    "degree_polynomial",
    "demazure_pi",
    "divided_difference",
    "grassmannian_for",
    "grothendieck",
    "grothendieck_component",
    "homogeneous_grothendieck",
    "key_polynomial",
    "lehmer_code",
    "schubert",
    "schubert_dual",
    "InertiaSignature",
    "LorentzCertificate",
    "SymmetricMatrix",
    "bivariate_ulc",
    "characteristic_polynomial",
    "discrete_root_log_concavity",
    "inertia",
    "is_m_convex",
    "lorentzian_certify",
    "m_convex_failure",
    "numeric_log_concavity_spot",
    "quadratic_form_matrix",
    "root_direction_violations",
    "verify_certificate",
    "SweepBounds",
    "SweepReport",
    "SweepSpec",
    "run_sweep",
    "__version__",
]
