"""Acceptance suite: every criterion at its stated trial counts and
tolerances, one printed pass/fail line per criterion.

All identity checks are exact rational equalities; the only tolerances
anywhere are the 3-standard-error bands of the Monte-Carlo cross-oracle
(criterion 7) and the rigorous rational sandwich of the Busemann-Petty
check (criterion 8), which is a bound, not a tolerance.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines stream.
"""

import random
import time
from itertools import product

import pytest

from minkval import (
    DEGREE_1,
    DEGREE_NP1,
    Q,
    convex_hull,
    moment_body_eval,
    moment_vector,
    volume,
)
from minkval.balls import inscribed_ball_polytope
from minkval.checks import (
    EQUIVARIANCE_OPS,
    VALUATION_IDENTITY_OPS,
    check_bp_inequality,
    check_centroid_counterexample,
    check_coefficient_recovery,
    check_equivariance,
    check_lower_dim_collapse,
    check_mstar_independence,
    check_simplex_split_battery,
    check_star_vanishing,
    check_valuation_identity,
)
from minkval.linalg import vadd, vec, vscale
from minkval.mc import mc_moment_body_value, mc_moment_vector, mc_volume
from minkval.randgen import TrialConfig, direction_set, random_polytope, random_vector

SEED = 7


def _report(criterion: str, ok: bool, extra: str = ""):
    status = "PASS" if ok else "FAIL"
    tail = f" ({extra})" if extra else ""
    print(f"ACCEPTANCE {criterion}: {status}{tail}", flush=True)
    assert ok, f"{criterion} failed{tail}"


def test_criterion_1_valuation_identity_suite():
    t0 = time.perf_counter()
    cfg3 = TrialConfig(n=3, trials=100, seed=SEED, extra_dirs=32)
    cfg4 = TrialConfig(n=4, trials=25, seed=SEED, extra_dirs=8)
    assert len(direction_set(3, cfg3.extra_dirs, SEED)) >= 50
    assert len(direction_set(4, cfg4.extra_dirs, SEED)) >= 50
    bad = []
    for cfg in (cfg3, cfg4):
        for op in VALUATION_IDENTITY_OPS:
            rep = check_valuation_identity(op, cfg)
            if rep.verdict != "pass":
                bad.append((rep.check, rep.witness))
    gamma = check_centroid_counterexample(cfg3)
    if gamma.verdict != "pass" or "counterexample" not in gamma.details:
        bad.append((gamma.check, gamma.witness))
    elapsed = time.perf_counter() - t0
    _report(
        "1 valuation-identity suite (9 ops x 100 trials n=3 + 25 trials n=4, >=50 dirs; centroid counterexample)",
        not bad and elapsed < 300,
        f"{elapsed:.1f}s" + (f"; failures: {bad}" if bad else ""),
    )


def test_criterion_2_equivariance_suite():
    t0 = time.perf_counter()
    cfg = TrialConfig(n=3, trials=50, seed=SEED)
    bad = []
    for op in EQUIVARIANCE_OPS:
        rep = check_equivariance(op, cfg, shears=50, dilations=20)
        if rep.verdict != "pass":
            bad.append((rep.check, rep.witness))
    elapsed = time.perf_counter() - t0
    _report(
        "2 equivariance q/r table (10 ops x 50 shears + 20 dilations, n=3)",
        not bad,
        f"{elapsed:.1f}s" + (f"; failures: {bad}" if bad else ""),
    )


def test_criterion_3_lemma1_collapse():
    cfg = TrialConfig(n=3, trials=50, seed=SEED)
    bad = []
    for op in ("MomentVec", "MomentVecStar", "MomentBody", "MomentBodyStar", "Id", "Neg", "OHull", "NegOHull"):
        rep = check_lower_dim_collapse(op, cfg)
        if rep.verdict != "pass":
            bad.append((rep.check, rep.witness))
    _report("3 lower-dimensional collapse (4 vanishing ops + 4 span-membership ops x 50 trials)", not bad, f"failures: {bad}" if bad else "")


def test_criterion_4_simplex_identities():
    t0 = time.perf_counter()
    lambdas = (Q(1, 4), Q(1, 3), Q(1, 2), Q(2, 3))
    bad = []
    for n in (3, 4):
        cfg = TrialConfig(n=n, trials=20, seed=SEED, extra_dirs=8)
        rep = check_simplex_split_battery(cfg, specs=20, lambdas=lambdas)
        if rep.verdict != "pass":
            bad.append((rep.check, rep.witness))
    elapsed = time.perf_counter() - t0
    _report(
        "4 simplex split identity + Lemma-3 specializations + symmetry + closed form (20 specs x 4 lambdas x all (i,j), n=3,4)",
        not bad,
        f"{elapsed:.1f}s" + (f"; failures: {bad}" if bad else ""),
    )


def test_criterion_5_coefficient_recovery():
    cfg = TrialConfig(n=3, trials=100, seed=SEED)
    bad = []
    for family in (DEGREE_1, DEGREE_NP1):
        rep = check_coefficient_recovery(family, cfg)
        if rep.verdict != "pass":
            bad.append((rep.check, rep.witness))
    _report("5 coefficient recovery round-trips (100 specs per family, z-formulas, side inequalities, hand tables)", not bad, f"failures: {bad}" if bad else "")


def test_criterion_6_independence():
    cfg = TrialConfig(n=3, trials=10, seed=SEED)
    rep = check_mstar_independence(cfg)
    ok = (
        rep.verdict == "pass"
        and rep.details["equality_solution"] == [0, 0, -1, 1]
        and rep.details["controls"]["target-M-in-o-family"] == [0, 0, 1, 0]
        and rep.details["controls"]["target-Mstar-in-star-family"] == [0, 0, 0, 1]
    )
    _report("6 starred-moment-body independence certificate + control systems", ok, str(rep.witness) if not ok else "")


def _mc_bodies():
    cube = convex_hull([(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)])
    half = Q(1, 2)
    ccube = convex_hull([(x * half, y * half, z * half) for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)])
    T = convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
    box = convex_hull([(x * half, Q(y), Q(z)) for x in (0, 1) for y in (0, 1) for z in (0, 1)])
    shifted = convex_hull([(x, y, z) for x in (1, 2) for y in (1, 2) for z in (1, 2)])
    cross = convex_hull([(s, 0, 0) for s in (-1, 1)] + [(0, s, 0) for s in (-1, 1)] + [(0, 0, s) for s in (-1, 1)])
    bigT = convex_hull([(0, 0, 0), (2, 0, 0), (0, 2, 0), (0, 0, 2)])
    rng = random.Random("mc-bodies")
    rand1 = random_polytope(rng, 3, full_dim=True)
    rand2 = random_polytope(rng, 3, full_dim=True)
    gens = [random_vector(rng, 3) for _ in range(3)]
    par = convex_hull([vadd(vadd(vscale(sx, gens[0]), vscale(sy, gens[1])), vscale(sz, gens[2])) for sx, sy, sz in product((-1, 1), repeat=3)])
    return [cube, ccube, T, box, shifted, cross, bigT, rand1, rand2, par]


def test_criterion_7_monte_carlo_cross_oracle():
    t0 = time.perf_counter()
    bodies = _mc_bodies()
    assert len(bodies) == 10
    u = vec((1, 2, -1))
    bad = []
    for i, K in enumerate(bodies):
        vol_exact = float(volume(K))
        est, se = mc_volume(K, samples=10**6, seed=100 + i)
        if abs(est - vol_exact) > 3 * se:
            bad.append((i, "volume", est, vol_exact, se))
        m_exact = [float(c) for c in moment_vector(K)]
        mest, mse = mc_moment_vector(K, samples=10**6, seed=200 + i)
        for got, want, s in zip(mest, m_exact, mse):
            if abs(got - want) > 3 * s:
                bad.append((i, "moment", got, want, s))
        mb_exact = float(moment_body_eval(K, u)[0])
        best, bse = mc_moment_body_value(K, u, samples=10**6, seed=300 + i)
        if abs(best - mb_exact) > 3 * bse:
            bad.append((i, "moment-body", best, mb_exact, bse))
    elapsed = time.perf_counter() - t0
    _report(
        "7 Monte-Carlo cross-oracle (volume, moment vector, moment body on 10 bodies, 1e6 samples, 3 sigma)",
        not bad,
        f"{elapsed:.1f}s" + (f"; failures: {bad}" if bad else ""),
    )


def test_criterion_8_busemann_petty():
    t0 = time.perf_counter()
    cfg = TrialConfig(n=3, trials=10, seed=SEED)
    cube = convex_hull([(Q(x), Q(y), Q(z)) for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)])
    rng = random.Random("bp-acceptance")
    simplex = None
    while simplex is None or simplex.intrinsic_dim < 3:
        simplex = convex_hull([random_vector(rng, 3) for _ in range(4)])
    gens = [random_vector(rng, 3) for _ in range(3)]
    sym = convex_hull([vadd(vadd(vscale(sx, gens[0]), vscale(sy, gens[1])), vscale(sz, gens[2])) for sx, sy, sz in product((-1, 1), repeat=3)])
    assert sym.intrinsic_dim == 3
    results = []
    ok = True
    for label, body in (("centered-cube", cube), ("random-simplex", simplex), ("random-centrally-symmetric", sym)):
        rep = check_bp_inequality(body, cfg, budget=300)
        results.append((label, rep.verdict, round(rep.details["margin_float"], 4), rep.details["directions"]))
        ok = ok and rep.verdict == "pass" and rep.details["directions"] <= 300
    near = check_bp_inequality(inscribed_ball_polytope(9), cfg, budget=150)
    results.append(("near-ball", near.verdict, round(near.details["margin_float"], 4), near.details["directions"]))
    ok = ok and near.verdict == "inconclusive"
    elapsed = time.perf_counter() - t0
    _report(
        "8 Busemann-Petty corollary sandwich (cube, simplex, centrally symmetric certified; near-ball inconclusive; <=300 dirs)",
        ok and elapsed < 600,
        f"{elapsed:.1f}s; {results}",
    )


def test_criterion_9_star_vanishing():
    cfg = TrialConfig(n=3, trials=50, seed=SEED)
    rep = check_star_vanishing(cfg)
    _report("9 starred operators vanish on 50 origin-containing bodies", rep.verdict == "pass", str(rep.witness) if rep.verdict != "pass" else "")
