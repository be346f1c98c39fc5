"""Exact computations with degenerations of linear series on a nodal curve
made of two rational components glued at one point.

The library works entirely over the rationals with exact arithmetic. It
provides canonical subspaces and their Pluecker coordinates, the
one-parameter torus action on a split Grassmannian with structural orbit
limits and degrees, the subdivided twist ladder with its section-space
model, level-delta limit linear series with exactness and minimal
reduction, the chain construction that realizes an exact minimal series as
a torus-invariant chain of orbit closures, and an independent brute-force
oracle for every structural formula.
"""

from .linalg import (
    Matrix,
    Rational,
    Subspace,
    format_rational,
    parse_rational,
    pluecker,
    rref,
    subspace_intersection,
    subspace_sum,
)
from .torus import (
    BlockProfile,
    Direction,
    IntersectionHypothesisError,
    TorusSplit,
    act,
    block_profile,
    is_fixed,
    limit,
    meeting_is_transverse,
    orbit_degree,
    orbit_intersection,
    orbit_weight_profile,
)
from .delta import DeltaSet, NumericalData, build_delta, consecutive_pairs, support_subset
from .curve import (
    CurveModel,
    SectionSpace,
    is_generalized_linear_series,
    section_space,
    twisted_space_at,
)
from .series import (
    LimitLinearSeries,
    LinkReport,
    check_compatible,
    check_exact,
    is_exact_via_sum,
    is_minimal,
    membership_failures,
    numerical_data,
    project_level_one,
    reduce_minimal,
    torus_equivalence_witnesses,
    torus_equivalent,
)
from .chain import (
    ChainBuildError,
    ChainComponent,
    ChainError,
    ComponentKind,
    ContinuousChain,
    build_chain,
    emit_dot,
    evaluate_at_base_points,
    hilbert_coefficients,
    validate_chain,
)
from .oracle import (
    degree_via_pluecker,
    limit_via_pluecker,
    sample_orbit_check,
    subspace_from_minors,
)
from .generate import (
    GenerationError,
    corrupt_exactness,
    pad_with_trivial_slots,
    random_exact_lls,
    random_linked_pair,
    random_nonfixed_subspace,
    random_subspace,
)
from .serialize import (
    SchemaError,
    SubspaceTask,
    dumps_instance,
    load_instance,
    loads_instance,
    save_instance,
)

__version__ = "0.1.0"
