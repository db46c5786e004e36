"""Exact computations around Fano threefolds of Picard rank one.

Schubert calculus on Grassmannians, Chern classes of formal bundles by the
splitting principle, Riemann-Roch in dimensions two and three, weighted
projective combinatorics, the classification table, and the degree
certificates for finite morphisms onto Fano threefolds.  All arithmetic is
exact (arbitrary-precision integers and rationals).
"""

from .chern import (
    FormalBundle,
    chern_class,
    dual,
    ext_power,
    line_bundle,
    sym_power,
    top_chern,
    trivial_bundle,
    twist_line,
    whitney_sum,
)
from .degree_bound import (
    E_value,
    MorphismScenario,
    RamificationVerdict,
    SourceInvariants,
    boundedness_verdict,
    cotangent_twist,
    degree_from_multiplier,
    feasibility_witnesses,
    feasible_multipliers,
    generic_iso_exists,
    max_multiplier,
    multiplier_bound_from_negative_lines,
    noether_lefschetz_threshold,
    quadric_degree_bound,
    quadric_multiplier_bound,
    ramification_feasibility,
    source_invariants,
    tangent_twist_hypersurface,
)
from .fano_db import (
    FanoDatabase,
    FanoRecord,
    conic_normal_bundle_degrees,
    default_database,
    expected_line_family_dim,
    line_normal_bundle_options,
    load_database,
    lookup,
    validate,
)
from .riemann_roch import (
    FanoNumericalInvariants,
    SurfaceIntersectionData,
    ThreefoldIntersectionData,
    assert_integral,
    chi_surface,
    chi_threefold,
    derive_fano_invariants,
    noether_surface_fano,
)
from .rings import GradedRing, PolyElement, TruncatedPolynomialRing, line_ring
from .schubert import (
    ChowElement,
    GrassmannContext,
    SchubertRing,
    giambelli,
    integrate,
    multiply,
    pieri,
    sigma,
    tautological_dual,
    unit,
    zero,
)
from .wps import (
    HypersurfaceModel,
    SingularStratum,
    WeightVector,
    canonical_degree,
    cotangent_twist_lmin,
    double_cover_model,
    is_generated,
    normalize,
    singular_strata,
)

__all__ = [name for name in dir() if not name.startswith("_")]
