"""Harness checks at reduced trial counts (the acceptance suite runs the
full counts); failure paths are exercised with deliberately broken inputs."""

import pytest

from minkval import DEGREE_1, DEGREE_NP1, Mat, Q, ValuationSpec, convex_hull
from minkval.balls import ball_moment_ratio, inscribed_ball_polytope, rational_sphere_points
from minkval.checks import (
    CheckReport,
    check_bp_inequality,
    check_centroid_counterexample,
    check_coefficient_recovery,
    check_equivariance,
    check_line_projection_reduction,
    check_line_projection_spec,
    check_lower_dim_collapse,
    check_mstar_independence,
    check_simplex_split_battery,
    check_simplex_split_identity,
    check_star_vanishing,
    check_symmetry_invariance,
    check_valuation_identity,
    even_permutation_matrices,
    recover_degree1_coeffs,
    recover_degree_np1_coeffs,
    standard_simplexes,
)
from minkval.errors import InvalidLambda, NotASymmetry, NotAValuationWitness, ZeroVolume
from minkval.randgen import TrialConfig

CFG = TrialConfig(n=3, trials=6, seed=3)


@pytest.mark.parametrize("op", ["Id", "Neg", "OHull", "NegOHull", "MomentVec", "MomentVecStar", "MomentBody", "MomentBodyStar", "DiffBody"])
def test_valuation_identity(op):
    rep = check_valuation_identity(op, CFG)
    assert rep.verdict == "pass", rep.witness


def test_centroid_fails_identity():
    rep = check_centroid_counterexample(CFG)
    assert rep.verdict == "pass"
    assert "counterexample" in rep.details


@pytest.mark.parametrize("op", ["Id", "OHull", "MomentVec", "MomentBody", "MomentBodyStar", "ProjBody", "DiffBody"])
def test_equivariance(op):
    rep = check_equivariance(op, CFG, shears=6, dilations=4)
    assert rep.verdict == "pass", rep.witness


@pytest.mark.parametrize("op", ["MomentVec", "MomentVecStar", "MomentBody", "MomentBodyStar", "Id", "Neg", "OHull", "NegOHull"])
def test_lower_dim_collapse(op):
    rep = check_lower_dim_collapse(op, CFG)
    assert rep.verdict == "pass", rep.witness


def test_simplex_split_examples():
    # pure starred moment body: f(1,0) = h(MT, e1) = 1/24
    rep = check_simplex_split_identity(ValuationSpec(DEGREE_NP1, 0, 0, 0, 1), Q(1, 3), 1, 2, CFG)
    assert rep.verdict == "pass", rep.witness
    rep = check_simplex_split_identity(ValuationSpec(DEGREE_NP1, 0, 1, 0, 0), Q(1, 2), 1, 2, CFG)
    assert rep.verdict == "pass", rep.witness
    with pytest.raises(InvalidLambda):
        check_simplex_split_identity(ValuationSpec(DEGREE_NP1, 0, 0, 1, 0), Q(3, 2), 1, 2, CFG)


def test_simplex_split_battery_small():
    rep = check_simplex_split_battery(CFG, specs=3, lambdas=(Q(1, 2), Q(1, 4)))
    assert rep.verdict == "pass", rep.witness


def test_recovery_hand_tables():
    rep = check_coefficient_recovery(DEGREE_1, CFG)
    assert rep.verdict == "pass", rep.witness
    rep = check_coefficient_recovery(DEGREE_NP1, CFG)
    assert rep.verdict == "pass", rep.witness


def test_recovery_rejects_non_member():
    # a map outside the degree-1 family fails validation on random bodies
    from minkval import support_value, volume

    def fake(K, u):
        return support_value(K, u) + volume(K)

    with pytest.raises(NotAValuationWitness):
        recover_degree1_coeffs(fake, 3, CFG)


def test_recovery_np1_direct():
    spec = ValuationSpec(DEGREE_NP1, 2, -1, 3, 1)

    def ev(K, u):
        from minkval import apply_valuation_eval

        return apply_valuation_eval(spec, K, u)

    assert recover_degree_np1_coeffs(ev, 3, CFG) == spec.coefficients


def test_independence():
    rep = check_mstar_independence(CFG)
    assert rep.verdict == "pass", rep.witness
    assert rep.details["equality_solution"] == [0, 0, -1, 1]


@pytest.mark.parametrize("op", ["Id", "Neg", "OHull", "NegOHull", "DiffBody"])
def test_line_projection(op):
    rep = check_line_projection_reduction(op, CFG)
    assert rep.verdict == "pass", rep.witness


def test_line_projection_specs():
    rep = check_line_projection_spec(CFG)
    assert rep.verdict == "pass", rep.witness


def test_symmetry_invariance():
    S, _ = standard_simplexes(3)
    G = even_permutation_matrices(3)
    assert len(G) >= 2
    rep = check_symmetry_invariance("MomentBodyStar", S, G, CFG)
    assert rep.verdict == "pass", rep.witness
    # non-symmetry shear is rejected
    with pytest.raises(NotASymmetry):
        check_symmetry_invariance("MomentBodyStar", S, [Mat.shear(3, 0, 1, 1)], CFG)


def test_star_vanishing():
    rep = check_star_vanishing(CFG)
    assert rep.verdict == "pass", rep.witness


def test_ball_moment_ratio_values():
    lo, hi = ball_moment_ratio(3)
    assert lo == hi == Q(27, 512)
    lo5, hi5 = ball_moment_ratio(5)
    assert lo5 == hi5 == Q(5, 16) ** 5  # exact in odd dims
    lo4, hi4 = ball_moment_ratio(4)
    assert lo4 < hi4 and float(hi4 - lo4) < 1e-10


def test_sphere_points_exactly_unit():
    pts = rational_sphere_points(11)
    assert len(pts) > 100
    for p in pts:
        assert sum(c * c for c in p) == 1


def test_bp_cube_passes(big_centered_cube):
    rep = check_bp_inequality(big_centered_cube, CFG, budget=300)
    assert rep.verdict == "pass", rep.details
    assert rep.details["margin_float"] > 1


def test_bp_simplex_passes(corner_simplex):
    rep = check_bp_inequality(corner_simplex, CFG, budget=200)
    assert rep.verdict == "pass"


def test_bp_near_ball_inconclusive_never_fail():
    ball = inscribed_ball_polytope(9)
    rep = check_bp_inequality(ball, CFG, budget=120)
    assert rep.verdict == "inconclusive"


def test_bp_rejects_flat(facet_simplex):
    with pytest.raises(ZeroVolume):
        check_bp_inequality(facet_simplex, CFG)


def test_report_serialization():
    rep = CheckReport("demo", "pass", 3, 7, witness={"value": Q(1, 3), "vec": (Q(1), Q(-2, 5))})
    d = rep.to_dict()
    assert d["schema"] == 1
    assert d["witness"] == {"value": "1/3", "vec": ["1", "-2/5"]}
