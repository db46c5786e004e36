"""Acceptance suite: one exact check per shipped guarantee.

Every assertion is an integer identity (zero tolerance); each test prints a
single PASS/FAIL line so the suite doubles as a checklist when run with
``pytest tests/test_acceptance.py -v -s``.
"""

from fractions import Fraction

from fanocalc.chern import chern_class, sym_power, top_chern
from fanocalc.degree_bound import (
    INFEASIBLE_FOR_ALL_M,
    SourceInvariants,
    E_value,
    boundedness_verdict,
    feasibility_witnesses,
    feasible_multipliers,
    max_multiplier,
    noether_lefschetz_threshold,
    quadric_degree_bound,
    quadric_multiplier_bound,
    ramification_feasibility,
)
from fanocalc.fano_db import lookup
from fanocalc.reports import lines_on_cubic_threefold
from fanocalc.riemann_roch import (
    SurfaceIntersectionData,
    ThreefoldIntersectionData,
    chi_surface,
    chi_threefold,
    noether_surface_fano,
)
from fanocalc.schubert import GrassmannContext, integrate, multiply, sigma, tautological_dual
from fanocalc.wps import (
    WeightVector,
    canonical_degree,
    cotangent_twist_lmin,
    is_generated,
    normalize,
    singular_strata,
)
from oracles import cotangent_twist_brute


def _report(number: int, ok: bool, description: str) -> None:
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {number:02d} {status}: {description}")
    assert ok, f"criterion {number} failed: {description}"


def test_criterion_01_cubic_surface_line_count():
    ctx = GrassmannContext.from_projective(1, 3)
    count = integrate(top_chern(sym_power(tautological_dual(ctx), 3)))
    _report(1, count == 27, f"27 lines on a cubic surface (got {count})")


def test_criterion_02_cubic_threefold_chain():
    ctx = GrassmannContext.from_projective(1, 4)
    ub = tautological_dual(ctx)
    c1, c2 = chern_class(ub, 1), chern_class(ub, 2)
    c4 = chern_class(sym_power(ub, 3), 4)
    ok = c4.terms == {(3, 1): 18, (2, 2): 27}
    ok = ok and c4 == 9 * (c2 * (2 * c1 * c1 + c2))
    incidence = integrate(multiply(c4, sigma(ctx, 2)))
    ok = ok and incidence == 18
    report = lines_on_cubic_threefold()
    ok = ok and report["lines_through_general_point"] == 6
    ok = ok and report["cl_self_intersection"] == 5
    ok = ok and report["projection_degree"] == 5
    ramification = 4 * 5 - 5 * (-2)
    ok = ok and report["ramification_degree"] == ramification == 30
    ok = ok and report["special_surface_multiple_expected"] == 30
    _report(2, ok, "lines on the cubic threefold: 18+27 class, 6 per point, ramification 30")


def test_criterion_03_schubert_sanity_and_duality():
    ctx = GrassmannContext(2, 5)
    ok = integrate(sigma(ctx, 1, 1) * sigma(ctx, 2) * sigma(ctx, 2)) == 1
    ok = ok and integrate(sigma(ctx, 1, 1) ** 2 * sigma(ctx, 2)) == 0
    for lam in ctx.partitions():
        comp = ctx.complement(lam)
        for mu in ctx.partitions(weight=ctx.top_degree - sum(lam)):
            pairing = integrate(multiply(sigma(ctx, *lam), sigma(ctx, *mu)))
            ok = ok and pairing == (1 if mu == comp else 0)
    _report(3, ok, "sigma products on G(1,4) and the full duality pairing matrix")


def test_criterion_04_riemann_roch_identities():
    ok = True
    for H3 in range(2, 23, 2):
        data = ThreefoldIntersectionData(D3=H3, KD2=-H3, KKD=H3, c2D=24, c1c2=24)
        ok = ok and chi_threefold(data) == Fraction(H3, 2) + 3
    for H3 in range(1, 6):
        data = ThreefoldIntersectionData(D3=H3, KD2=-2 * H3, KKD=4 * H3, c2D=12, c1c2=24)
        ok = ok and chi_threefold(data) == H3 + 2
    ok = ok and chi_surface(SurfaceIntersectionData(1, -3, 9, 3)) == 3
    ok = ok and noether_surface_fano().K2 == 9
    _report(4, ok, "chi(-K) = H^3/2 + 3, h0(H) = H^3 + 2, chi(P2, H) = 3, K^2 = 9")


def test_criterion_05_E_table():
    ok = E_value(lookup("V4-quartic"), 2) == 88 > 0
    ok = ok and E_value(lookup("A4"), 2) == -8 < 0
    ok = ok and E_value(lookup("A2"), 4) == 0
    ok = ok and E_value(lookup("A2"), 3) > 0
    for twist in range(1, 11):
        ok = ok and E_value(lookup("Q3"), twist) < 0
        ok = ok and E_value(lookup("P3"), twist) < 0
    ok = ok and boundedness_verdict(lookup("V4-quartic"), 2) == "bounded"
    _report(5, ok, "E table: 88, -8, 0, positive at (A2,3), negative on Q3 and P3")


def test_criterion_06_self_map_bound():
    X = SourceInvariants(H3X=4, kappa=-1, c2HX=24, c3OmegaX=56)
    Y = lookup("V4-quartic")
    m = max_multiplier(X, Y, 2)
    equality = E_value(Y, 2) == 56 + 48 - 16 == 88
    _report(6, m == 1 and equality, "quartic self-map multiplier capped at 1, tight at 88 = 56+48-16")


def test_criterion_07_weighted_projective_suite():
    ok = normalize(WeightVector((1, 2, 2))) == WeightVector((1, 1, 1))
    strata = singular_strata(WeightVector((1, 1, 1, 1, 2)))
    ok = ok and [(s.k, s.coords) for s in strata] == [(2, (4,))]
    ok = ok and canonical_degree(WeightVector((1, 1, 1, 1, 2))) == -6
    ok = ok and is_generated(WeightVector((1, 1, 1, 1, 2)), 1)
    for n in range(4, 9):
        ok = ok and cotangent_twist_lmin(WeightVector((1,) * n)) == 2
    ok = ok and cotangent_twist_lmin(WeightVector((1, 1, 1, 1, 2))) == 3
    brute = cotangent_twist_brute((1, 1, 1, 2, 3), lmax=20)
    ok = ok and cotangent_twist_lmin(WeightVector((1, 1, 1, 2, 3))) == brute == 7
    _report(7, ok, "weighted projective suite incl. lmin values 2 / 3 / 7 (7 cross-checked brute force)")


def test_criterion_08_ramification_arithmetic():
    fano = SourceInvariants(H3X=2, kappa=-1, c2HX=0, c3OmegaX=0)
    ok = ramification_feasibility(1, 2, fano).kind == INFEASIBLE_FOR_ALL_M
    ok = ok and ramification_feasibility(2, 4, fano).kind == INFEASIBLE_FOR_ALL_M
    for kappa, rY, k in [(4, 1, 3), (6, 1, 4), (5, 2, 5), (8, 2, 6)]:
        verdict = ramification_feasibility(rY, k, SourceInvariants(1, kappa, 0, 0))
        feasible = [m for m in range(1, 80) if Fraction(kappa) >= m * (Fraction(k, 2) - rY)]
        ok = ok and verdict.kind == "bound" and feasible == list(range(1, verdict.bound + 1))
    _report(8, ok, "ramification feasibility: Fano cases infeasible, bounds match the exact inequality")


def test_criterion_09_multiplier_enumeration():
    feasible = feasible_multipliers(1, 1, True, range(1, 11))
    witnesses = feasibility_witnesses(1, 1, True, 1)
    witness_ok = any(
        w.component == "line" and w.source == (0, -1) and w.target == (0, -1)
        for w in witnesses
    )
    _report(9, feasible == {1} and witness_ok, "index-1 to index-1: only m = 1, via the (0,-1) line")


def test_criterion_10_quadric_threshold():
    ok = noether_lefschetz_threshold(-3) == 7
    X = SourceInvariants(H3X=2, kappa=-1, c2HX=0, c3OmegaX=0)
    ok = ok and quadric_multiplier_bound(X) == 13
    ok = ok and quadric_degree_bound(X) == 13**3 * 2 // 2 == 2197
    _report(10, ok, "threshold 3k+16: 7 at k=-3; quadric chain 13 -> degree 2197")
