"""Support-oracle soundness properties: the boundary point attains the
support value and lies in the body, oracles are 1-homogeneous and
subadditive, moment bodies are origin-symmetric and dissection-additive,
and the degree-1 inclusion Phi{x} inside Phi[0,x] holds."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from minkval import (
    DEGREE_1,
    Q,
    apply_valuation_eval,
    clip_halfspace,
    convex_hull,
    moment_body,
    moment_body_eval,
    moment_body_star,
    projection_body,
    vec,
)
from minkval.linalg import dot, is_zero_vec, vadd, vscale
from minkval.polytope import Halfspace
from minkval.randgen import direction_set, random_polytope, random_valuation_spec

DIRS = direction_set(3, extra=6, seed=42)


def _bodies():
    rng = random.Random("oracle-bodies")
    out = []
    for _ in range(4):
        out.append(random_polytope(rng, 3, full_dim=True))
    return out

BODIES = _bodies()

small_rats = st.fractions(min_value=0, max_value=4, max_denominator=3).map(lambda f: Q(f.numerator, f.denominator))


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(BODIES), st.sampled_from(DIRS), st.sampled_from(DIRS))
def test_oracle_soundness(K, u, v):
    for make in (moment_body, moment_body_star, projection_body):
        body = make(K)
        val, pt = body.eval(u)
        assert dot(u, pt) == val
        assert dot(v, pt) <= body.eval(v)[0]


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(BODIES), st.sampled_from(DIRS), st.sampled_from(DIRS))
def test_oracle_subadditive(K, u, v):
    w = vadd(u, v)
    if is_zero_vec(w):
        return
    for make in (moment_body, moment_body_star, projection_body):
        body = make(K)
        assert body.eval(w)[0] <= body.eval(u)[0] + body.eval(v)[0]


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(BODIES), st.sampled_from(DIRS), small_rats.filter(lambda c: c > 0))
def test_oracle_homogeneous(K, u, lam):
    for make in (moment_body, moment_body_star, projection_body):
        body = make(K)
        assert body.eval(vscale(lam, u))[0] == lam * body.eval(u)[0]


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(BODIES), st.sampled_from(DIRS), st.sampled_from(DIRS))
def test_moment_body_symmetric(K, u, _v):
    assert moment_body_eval(K, u)[0] == moment_body_eval(K, vscale(Q(-1), u))[0]


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(BODIES), st.sampled_from(DIRS))
def test_moment_body_dissection_additive(K, u):
    H = Halfspace(vec((1, 2, -1)), Q(1, 3))
    A = clip_halfspace(K, H)
    B = clip_halfspace(K, H.complement())
    total = moment_body_eval(K, u)[0]
    va = moment_body_eval(A, u)[0] if A else Q(0)
    vb = moment_body_eval(B, u)[0] if B else Q(0)
    assert va + vb == total


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=10**6), st.sampled_from(DIRS))
def test_degree1_point_in_segment_inclusion(seed, u):
    rng = random.Random(seed)
    spec = random_valuation_spec(rng, DEGREE_1)
    x = tuple(Q(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(3))
    if is_zero_vec(x):
        return
    point = convex_hull([x])
    segment = convex_hull([(0, 0, 0), x])
    assert apply_valuation_eval(spec, point, u) <= apply_valuation_eval(spec, segment, u)
