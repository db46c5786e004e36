from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fanocalc.chern import FormalBundle, chern_class, twist_line
from fanocalc.degree_bound import (
    ALWAYS_OK,
    BOUND,
    INFEASIBLE_FOR_ALL_M,
    MorphismScenario,
    SourceInvariants,
    E_value,
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
from fanocalc.fano_db import lookup
from fanocalc.rings import line_ring

QUARTIC_X = SourceInvariants(H3X=4, kappa=-1, c2HX=24, c3OmegaX=56)


# -- cotangent twist -------------------------------------------------------------

def test_cotangent_twist_very_ample_is_two():
    assert cotangent_twist(lookup("V6")) == 2
    assert cotangent_twist(lookup("A5")) == 2


def test_cotangent_twist_from_weighted_models():
    assert cotangent_twist(lookup("A2")) == 3
    assert cotangent_twist(lookup("A1")) == 7
    assert cotangent_twist(lookup("V2")) == 4
    assert cotangent_twist(lookup("V4-double-quadric")) == 3


def test_cotangent_twist_needs_an_ambient_model():
    from fanocalc.fano_db import FanoRecord

    bare = FanoRecord("A2-bare", 2, 2, None, 20, False, 4)
    with pytest.raises(ValueError):
        cotangent_twist(bare)


# -- the E criterion -------------------------------------------------------------

def test_E_values_for_the_worked_families():
    assert E_value(lookup("V4-quartic"), 2) == 88
    assert E_value(lookup("A4"), 2) == -8
    assert E_value(lookup("A2"), 4) == 0
    assert E_value(lookup("A2"), 3) == 16


def test_E_negative_on_quadric_and_projective_space():
    for twist in range(1, 11):
        assert E_value(lookup("Q3"), twist) == -4 + 8 * twist - 6 * twist**2
        assert E_value(lookup("Q3"), twist) < 0
        assert E_value(lookup("P3"), twist) < 0


def test_E_requires_b3():
    with pytest.raises(ValueError):
        E_value(lookup("V6"), 2)


def test_verdicts():
    assert boundedness_verdict(lookup("V4-quartic"), 2) == "bounded"
    assert boundedness_verdict(lookup("A4"), 2) == "inconclusive"
    assert boundedness_verdict(lookup("A2"), 4) == "inconclusive"


@pytest.mark.parametrize("name", ["V4-quartic", "A4", "A2"])
def test_E_matches_twisted_cotangent_chern_computation(name):
    # Seed the hyperplane-class ring with c(Omega) and compare the degree of
    # c_3(Omega(l h)) with E + l^3 H^3; the twist formula supplies the
    # independent route.
    record = lookup(name)
    r, H3 = record.index, record.H3
    ring = line_ring(3, top_integral=H3)
    h = ring.gen()
    c2_coeff = 24 // (r * H3)
    c3_coeff = (record.b3 - 4) // H3
    cotangent = FormalBundle(
        ring, 3, (-r * h, c2_coeff * h**2, c3_coeff * h**3)
    )
    for twist in range(1, 7):
        twisted = twist_line(cotangent, twist * h)
        total = ring.integral(chern_class(twisted, 3))
        assert total == E_value(record, twist) + twist**3 * H3


# -- the multiplier search ---------------------------------------------------------

def test_identity_self_map_of_the_quartic_is_extremal():
    Y = lookup("V4-quartic")
    assert max_multiplier(QUARTIC_X, Y, 2) == 1
    # equality at m = 1: both sides of the inequality are E = 88
    lhs = 1 * E_value(Y, 2)
    rhs = 56 + 2 * 1 * 24 + 4 * 1 * (-1) * 4
    assert lhs == rhs == 88


def test_multiplier_two_fails_for_the_quartic_self_map():
    Y = lookup("V4-quartic")
    degree = 2**3 * 4 // 4
    lhs = degree * E_value(Y, 2)
    rhs = 56 + 2 * 2 * 24 + 4 * 4 * (-1) * 4
    assert lhs == 704 and rhs == 88 and lhs > rhs


def test_large_c3_gives_cube_root_scale():
    X = SourceInvariants(H3X=4, kappa=-1, c2HX=24, c3OmegaX=10**6)
    assert max_multiplier(X, lookup("V4-quartic"), 2) == 22


def test_max_multiplier_requires_positive_E():
    with pytest.raises(ValueError):
        max_multiplier(QUARTIC_X, lookup("A4"), 2)


def test_identity_always_passes_where_E_is_positive():
    for name in ("V4-quartic", "A2"):
        record = lookup(name)
        twist = cotangent_twist(record)
        if E_value(record, twist) > 0:
            X = source_invariants(record)
            assert max_multiplier(X, record, twist) >= 1


def test_source_invariants_from_record():
    X = source_invariants(lookup("V4-quartic"))
    assert X == QUARTIC_X
    with pytest.raises(ValueError):
        source_invariants(lookup("V6"))  # b3 unknown


def test_source_invariants_validation():
    with pytest.raises(ValueError):
        SourceInvariants(H3X=0, kappa=-1, c2HX=24, c3OmegaX=56)
    with pytest.raises(ValueError):
        SourceInvariants(H3X=1, kappa=-5, c2HX=24, c3OmegaX=56)
    assert SourceInvariants(1, -1, 24, 56).is_fano
    assert not SourceInvariants(1, 0, 0, 0).is_fano


# -- degree arithmetic ---------------------------------------------------------------

def test_degree_from_multiplier():
    assert degree_from_multiplier(1, 4, 4) == 1
    assert degree_from_multiplier(2, 2, 2) == 8
    with pytest.raises(ValueError):
        degree_from_multiplier(1, 3, 4)
    with pytest.raises(ValueError):
        degree_from_multiplier(0, 4, 4)


def test_morphism_scenario():
    scenario = MorphismScenario(QUARTIC_X, lookup("V4-quartic"), l=2, m=2)
    assert scenario.is_realizable
    assert scenario.degree() == 8
    skew = MorphismScenario(SourceInvariants(3, -1, 24, 56), lookup("V4-quartic"), 2, 1)
    assert not skew.is_realizable
    with pytest.raises(ValueError):
        MorphismScenario(QUARTIC_X, lookup("V4-quartic"), 2, 0)


# -- ramification feasibility ----------------------------------------------------------

def test_positive_slope_bound():
    verdict = ramification_feasibility(1, 3, SourceInvariants(1, 4, 0, 0))
    assert verdict.kind == BOUND and verdict.bound == 8


def test_fano_source_never_contains_preimage():
    fano = SourceInvariants(2, -1, 0, 0)
    assert ramification_feasibility(1, 2, fano).kind == INFEASIBLE_FOR_ALL_M
    assert ramification_feasibility(2, 4, fano).kind == INFEASIBLE_FOR_ALL_M


def test_negative_kappa_with_positive_slope_is_infeasible():
    assert ramification_feasibility(1, 3, SourceInvariants(2, -1, 0, 0)).kind == INFEASIBLE_FOR_ALL_M


def test_no_constraint_cases():
    assert ramification_feasibility(2, 3, SourceInvariants(1, 5, 0, 0)).kind == ALWAYS_OK
    assert ramification_feasibility(1, 2, SourceInvariants(1, 0, 0, 0)).kind == ALWAYS_OK


def test_input_validation():
    with pytest.raises(ValueError):
        ramification_feasibility(3, 3, QUARTIC_X)
    with pytest.raises(ValueError):
        ramification_feasibility(1, 0, QUARTIC_X)


@given(st.integers(1, 2), st.integers(1, 12), st.integers(-4, 8))
def test_feasibility_matches_direct_inequality(rY, k, kappa):
    X = SourceInvariants(1, kappa, 0, 0)
    verdict = ramification_feasibility(rY, k, X)
    feasible = [m for m in range(1, 60) if Fraction(kappa) >= m * (Fraction(k, 2) - rY)]
    if verdict.kind == INFEASIBLE_FOR_ALL_M:
        assert feasible == []
    elif verdict.kind == BOUND:
        assert feasible == list(range(1, verdict.bound + 1))
    else:
        # no upper bound: large multipliers stay feasible
        assert 59 in feasible


@given(st.integers(1, 2), st.integers(1, 12), st.integers(-4, 8))
def test_fano_with_k_at_least_2r_is_always_infeasible(rY, k, kappa):
    X = SourceInvariants(1, kappa, 0, 0)
    if X.is_fano and k >= 2 * rY:
        assert ramification_feasibility(rY, k, X).kind == INFEASIBLE_FOR_ALL_M


# -- tangent twists and negative lines ----------------------------------------------------

def test_tangent_twist_of_hypersurfaces():
    assert tangent_twist_hypersurface(4) == 2
    assert tangent_twist_hypersurface(2) == 0
    assert tangent_twist_hypersurface(5) == 3
    with pytest.raises(ValueError):
        tangent_twist_hypersurface(1)


def test_multiplier_bound_from_negative_lines():
    assert multiplier_bound_from_negative_lines(2) == 2
    assert multiplier_bound_from_negative_lines(0) == 0
    assert multiplier_bound_from_negative_lines(3) == 3
    with pytest.raises(ValueError):
        multiplier_bound_from_negative_lines(-1)


# -- split maps on rational curves ----------------------------------------------------------

def test_generic_iso_examples():
    assert generic_iso_exists((0, 0), (0, 0))
    assert not generic_iso_exists((1, -1), (0, 0))
    assert generic_iso_exists((0, -1), (1, -1))


pairs = st.tuples(st.integers(-5, 5), st.integers(-5, 5))


@given(pairs)
def test_generic_iso_reflexive(src):
    assert generic_iso_exists(src, src)


@given(pairs, pairs, st.integers(0, 3), st.integers(0, 3))
def test_generic_iso_monotone_in_target(src, dst, da, db):
    c, d = sorted(dst, reverse=True)
    if generic_iso_exists(src, dst):
        assert generic_iso_exists(src, (c + da, d + db))


# -- multiplier enumeration -------------------------------------------------------------------

def test_index_one_to_index_one_forces_multiplier_one():
    assert feasible_multipliers(1, 1, True, range(1, 11)) == {1}


def test_identity_witness_is_the_trivial_line_case():
    witnesses = feasibility_witnesses(1, 1, True, 1)
    assert any(
        w.component == "line" and w.source == (0, -1) and w.target == (0, -1)
        for w in witnesses
    )


def test_multipliers_beyond_one_have_no_witnesses():
    for m in range(2, 6):
        assert feasibility_witnesses(1, 1, True, m) == ()


def test_feasible_multipliers_rejects_empty_range():
    with pytest.raises(ValueError):
        feasible_multipliers(1, 1, True, [])


@pytest.mark.parametrize("rX", [1, 2])
@pytest.mark.parametrize("rY", [1, 2])
@pytest.mark.parametrize("very_ample", [True, False])
def test_feasibility_is_downward_closed(rX, rY, very_ample):
    feasible = feasible_multipliers(rX, rY, very_ample, range(1, 13))
    for m in range(1, 12):
        if m not in feasible:
            assert m + 1 not in feasible


# -- the quadric threshold ----------------------------------------------------------------------

def test_threshold_values():
    assert noether_lefschetz_threshold(-3) == 7
    assert noether_lefschetz_threshold(0) == 16


def test_quadric_chain():
    X = SourceInvariants(H3X=2, kappa=-1, c2HX=0, c3OmegaX=0)
    assert quadric_multiplier_bound(X) == 13
    assert quadric_degree_bound(X) == 13**3 * 2 // 2 == 2197


def test_quadric_bound_odd_degree_source():
    X = SourceInvariants(H3X=3, kappa=-1, c2HX=0, c3OmegaX=0)
    # threshold 13 is odd and 13^3*3 is odd, so the chain drops to m = 12
    assert quadric_degree_bound(X) == 12**3 * 3 // 2


def test_quadric_unsupported_combination():
    X = SourceInvariants(H3X=2, kappa=0, c2HX=0, c3OmegaX=0)
    with pytest.raises(ValueError):
        quadric_multiplier_bound(X, h_very_ample=False)
    assert quadric_multiplier_bound(X) == 16
