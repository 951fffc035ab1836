"""Numerical toolkit for algebraic curvature operators of the second kind.

Assembles and diagonalizes the curvature operator on traceless symmetric
2-tensors, grades its eigenvalue positivity, minimizes isotropic
curvature over orthonormal 4-frames, and stress-tests the implications
between those conditions on random and closed-form model tensors.
"""

__version__ = "0.1.0"

from .errors import (
    BianchiViolation,
    CurvopError,
    DegeneratePlane,
    DimensionMismatch,
    DimensionTooSmall,
    FrameNotOrthonormal,
    IndexOutOfRange,
    IoFailure,
    NoConvergence,
    NotSymmetric,
    ParameterOutOfRange,
    ParseError,
    SymmetryConflict,
    ValidationFailure,
)
from .tensor import (
    DEFAULT_TOL,
    SIGN_CONVENTION,
    CurvatureTensor,
    ToleranceConfig,
    bianchi_project,
    canonical_index,
    canonical_quadruples,
    from_dense,
    from_dict,
    load_tensor,
    new_from_components,
    ricci,
    save_tensor,
    scalar,
    sectional,
    to_dict,
    write_json_atomic,
)
from .secondkind import (
    ALPHA_ALWAYS,
    ALPHA_UNATTAINABLE,
    PositivityProfile,
    Spectrum,
    SymTensorBasis,
    alpha_star,
    eigen_sym,
    first_kind_matrix,
    k_alpha_positive,
    k_alpha_value,
    lambda2_basis,
    lambda2_dim,
    named_conditions,
    positivity_profile,
    s20_basis,
    s20_dim,
    second_kind_matrix,
)
from .conditions import (
    FrameSearchResult,
    check_frame,
    IdentityReport,
    isotropic_value,
    min_isotropic,
    phi_family,
    pullback,
    quadratic_form,
    random_frame,
    ric_family,
    ricci_min,
    second_kind_spectrum,
    verify_pic_identities,
    verify_ric_identities,
)
from .models import (
    ModelSpec,
    build_model,
    complex_space_form,
    constant_curvature,
    cp2_explicit,
    flat,
    interpolate,
    parse_model,
    product,
    random_curvature,
    shift,
)
from .harness import (
    Counterexample,
    PredicateSpec,
    ProbeReport,
    TrialReport,
    boost_to_hypothesis,
    emit_report,
    implication_trial,
    parse_predicate,
    replay_counterexample,
    sharpness_probe,
)

__all__ = [name for name in dir() if not name.startswith("_")]
