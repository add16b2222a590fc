"""Machine checks for the valuation identities, lemma consequences,
coefficient-recovery formulas and the generalized Busemann-Petty inequality.

Every pass verdict is backed by exact rational equalities or inequalities at
every tested direction.  The only non-exact ingredients in the whole harness
are the Monte-Carlo cross-oracle (separate module) and nothing else; the
Busemann-Petty check uses rigorous rational sandwich bounds, not tolerances.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .balls import ball_moment_ratio, sphere_point_families
from .bodies import (
    DEGREE_1,
    DEGREE_NP1,
    OPERATORS,
    ValuationSpec,
    apply_valuation_eval,
    m_star,
    moment_body,
    moment_body_eval,
    moment_body_star_eval,
    o_hull,
    volume_bounds,
)
from .errors import (
    GeometryError,
    InvalidLambda,
    NotASymmetry,
    NotAValuationWitness,
    ZeroVolume,
)
from .linalg import Mat, dot, is_zero_vec, rank, unit_vec, vadd, vec, vneg, vscale, zero_vec
from .polytope import (
    Polytope,
    apply_linear,
    clip_halfspace,
    contains_point,
    convex_hull,
    moment_vector,
    project_onto_line,
    scale as scale_polytope,
    support_value,
    translate,
    volume,
)
from .randgen import (
    TrialConfig,
    direction_set,
    random_interior_halfspace,
    random_polytope,
    random_dilation,
    random_subspace_polytope,
    random_unimodular,
    random_valuation_spec,
)
from .rational import ONE, ZERO, Q, rat_str

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"
INCONCLUSIVE = "inconclusive"

REPORT_SCHEMA_VERSION = 1


@dataclass
class CheckReport:
    check: str
    verdict: str
    trials: int
    seed: int
    witness: Optional[dict] = None
    details: dict = field(default_factory=dict)

    def to_dict(self):
        out = {
            "schema": REPORT_SCHEMA_VERSION,
            "check": self.check,
            "verdict": self.verdict,
            "trials": self.trials,
            "seed": self.seed,
        }
        if self.witness is not None:
            out["witness"] = jsonable(self.witness)
        if self.details:
            out["details"] = jsonable(self.details)
        return out

    @property
    def ok(self):
        return self.verdict in (PASS, INCONCLUSIVE, SKIPPED)


def jsonable(x):
    """Recursively render exact data as JSON-safe values (rationals become
    lowest-term strings)."""
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, Polytope):
        return {"dim": x.ambient_dim, "vertices": [[rat_str(c) for c in v] for v in x.vertices]}
    if isinstance(x, Mat):
        return [[rat_str(c) for c in row] for row in x.rows]
    return rat_str(x)


# ---------------------------------------------------------------------------
# Per-body support evaluators (precompute what can be shared across the
# direction loop: o-hulls, moment vectors, facet areas all cache on the body)


def support_evaluator(op_name: str, K: Polytope) -> Callable:
    op = OPERATORS[op_name]
    if op.vector is not None:
        v = op.vector(K)
        return lambda u: dot(v, u)
    if op.body is not None:
        B = op.body(K)
        if op_name == "Neg":
            return lambda u: support_value(K, vneg(u))
        if op_name == "DiffBody":
            return lambda u: support_value(K, u) + support_value(K, vneg(u))
        return lambda u: support_value(B, u)
    return lambda u: op.support(K, u)


# ---------------------------------------------------------------------------
# Valuation identity: Phi K + Phi L = Phi(K u L) + Phi(K n L) on splits


def check_valuation_identity(op_name: str, cfg: TrialConfig, dirs=None) -> CheckReport:
    """Hyperplane-split trials of the defining identity, exact at every
    direction.  K u L = P is convex by construction and K n L is the slice."""
    op = OPERATORS[op_name]
    if dirs is None:
        dirs = direction_set(cfg.n, cfg.extra_dirs, cfg.seed)
    name = f"valuation-identity:{op_name}:n={cfg.n}"
    skipped = 0
    for t in range(cfg.trials):
        rng = cfg.rng(f"vi:{op_name}", t)
        P = random_polytope(rng, cfg.n, full_dim=True)
        try:
            H = random_interior_halfspace(rng, P)
        except GeometryError:
            skipped += 1
            continue
        K = clip_halfspace(P, H)
        L = clip_halfspace(P, H.complement())
        M = clip_halfspace(K, H.complement())  # = P intersect boundary of H
        if K is None or L is None or M is None:
            skipped += 1
            continue
        if op.is_vector:
            lhs = vadd(op.vector(K), op.vector(L))
            rhs = vadd(op.vector(P), op.vector(M))
            if lhs != rhs:
                return CheckReport(
                    name,
                    FAIL,
                    t + 1,
                    cfg.seed,
                    witness={"trial": t, "P": P, "halfspace_normal": H.normal, "halfspace_offset": H.offset, "lhs": lhs, "rhs": rhs},
                )
        else:
            fK, fL, fP, fM = (support_evaluator(op_name, X) for X in (K, L, P, M))
            for u in dirs:
                lhs = fK(u) + fL(u)
                rhs = fP(u) + fM(u)
                if lhs != rhs:
                    return CheckReport(
                        name,
                        FAIL,
                        t + 1,
                        cfg.seed,
                        witness={
                            "trial": t,
                            "P": P,
                            "halfspace_normal": H.normal,
                            "halfspace_offset": H.offset,
                            "direction": u,
                            "lhs": lhs,
                            "rhs": rhs,
                        },
                    )
    verdict = PASS if skipped < cfg.trials else SKIPPED
    return CheckReport(name, verdict, cfg.trials - skipped, cfg.seed, details={"skipped": skipped, "directions": len(dirs)})


def check_centroid_counterexample(cfg: TrialConfig) -> CheckReport:
    """The centroid body is not a valuation (its split identity must fail);
    lower-dimensional slices count as {0} so the identity is evaluable."""
    inner = check_valuation_identity("CentroidBody", cfg)
    name = f"centroid-not-a-valuation:n={cfg.n}"
    if inner.verdict == FAIL:
        return CheckReport(name, PASS, inner.trials, cfg.seed, details={"counterexample": jsonable(inner.witness)})
    return CheckReport(name, FAIL, inner.trials, cfg.seed, witness={"reason": "identity unexpectedly held on all trials"})


# ---------------------------------------------------------------------------
# Equivariance / homogeneity


def check_equivariance(op_name: str, cfg: TrialConfig, shears=None, dilations=None, dirs=None) -> CheckReport:
    """Exact GL(n) law per the hard-coded descriptor table: unimodular
    shears probe phi-equivariance (or contravariance for the projection
    body), rational dilations probe the homogeneity degree r."""
    op = OPERATORS[op_name]
    desc = op.descriptor
    if shears is None:
        shears = cfg.trials
    if dilations is None:
        dilations = max(1, cfg.trials // 2)
    if dirs is None:
        dirs = direction_set(cfg.n, min(cfg.extra_dirs, 8), cfg.seed)
    name = f"equivariance:{op_name}:n={cfg.n}"
    r = desc.degree(cfg.n)

    for t in range(shears):
        rng = cfg.rng(f"eq:{op_name}:shear", t)
        K = random_polytope(rng, cfg.n, full_dim=True)
        phi = random_unimodular(rng, cfg.n)
        KK = apply_linear(phi, K)
        if op.is_vector:
            lhs = op.vector(KK)
            rhs = phi.apply(op.vector(K))
            if lhs != rhs:
                return CheckReport(name, FAIL, t + 1, cfg.seed, witness={"trial": t, "K": K, "phi": phi, "lhs": lhs, "rhs": rhs})
        else:
            fKK = support_evaluator(op_name, KK)
            fK = support_evaluator(op_name, K)
            if desc.variance == "contravariant":
                inv = phi.inverse()
                pull = inv.apply
            else:
                phit = phi.transpose()
                pull = phit.apply
            for u in dirs:
                lhs = fKK(u)
                rhs = fK(pull(u))
                if lhs != rhs:
                    return CheckReport(
                        name, FAIL, t + 1, cfg.seed,
                        witness={"trial": t, "K": K, "phi": phi, "direction": u, "lhs": lhs, "rhs": rhs},
                    )

    for t in range(dilations):
        rng = cfg.rng(f"eq:{op_name}:dilation", t)
        K = random_polytope(rng, cfg.n, full_dim=True)
        lam, _ = random_dilation(rng, cfg.n)
        KK = scale_polytope(K, lam)
        factor = lam ** int(r)
        if op.is_vector:
            lhs = op.vector(KK)
            rhs = vscale(factor, op.vector(K))
            if lhs != rhs:
                return CheckReport(name, FAIL, t + 1, cfg.seed, witness={"trial": t, "K": K, "lambda": lam, "lhs": lhs, "rhs": rhs})
        else:
            fKK = support_evaluator(op_name, KK)
            fK = support_evaluator(op_name, K)
            for u in dirs:
                lhs = fKK(u)
                rhs = factor * fK(u)
                if lhs != rhs:
                    return CheckReport(
                        name, FAIL, t + 1, cfg.seed,
                        witness={"trial": t, "K": K, "lambda": lam, "direction": u, "lhs": lhs, "rhs": rhs},
                    )
    return CheckReport(
        name, PASS, shears + dilations, cfg.seed,
        details={"q": desc.det_exponent, "r": r, "variance": desc.variance, "shears": shears, "dilations": dilations},
    )


# ---------------------------------------------------------------------------
# Lemma 1: collapse on lower-dimensional bodies


DEGREE_NP1_BASIS = ("MomentVec", "MomentVecStar", "MomentBody", "MomentBodyStar")
DEGREE_1_BASIS = ("Id", "Neg", "OHull", "NegOHull")


def check_lower_dim_collapse(op_name: str, cfg: TrialConfig, dirs=None) -> CheckReport:
    """For K inside a proper linear subspace: degree-(n+1) basis operators
    vanish exactly; degree-1 operators keep their output inside span K."""
    op = OPERATORS[op_name]
    if dirs is None:
        dirs = direction_set(cfg.n, min(cfg.extra_dirs, 8), cfg.seed)
    name = f"lower-dim-collapse:{op_name}:n={cfg.n}"
    for t in range(cfg.trials):
        rng = cfg.rng(f"ld:{op_name}", t)
        K, basis = random_subspace_polytope(rng, cfg.n)
        if op_name in DEGREE_NP1_BASIS:
            if op.is_vector:
                if not is_zero_vec(op.vector(K)):
                    return CheckReport(name, FAIL, t + 1, cfg.seed, witness={"trial": t, "K": K, "value": op.vector(K)})
            else:
                f = support_evaluator(op_name, K)
                for u in dirs:
                    if f(u) != 0:
                        return CheckReport(name, FAIL, t + 1, cfg.seed, witness={"trial": t, "K": K, "direction": u, "value": f(u)})
        else:
            body = op.body(K)
            base_rank = rank(list(basis))
            for v in body.vertices:
                if rank(list(basis) + [v]) != base_rank:
                    return CheckReport(name, FAIL, t + 1, cfg.seed, witness={"trial": t, "K": K, "vertex": v})
    return CheckReport(name, PASS, cfg.trials, cfg.seed)


# ---------------------------------------------------------------------------
# Simplex split identity (eq. of section 2) and its section-4 consequences


def shear_pair(n: int, i: int, j: int, lam):
    """The two elementary maps sending e_i (resp. e_j) to
    lam e_i + (1-lam) e_j and fixing the other basis vectors; i, j are
    1-indexed."""
    if not (1 <= i < j <= n):
        raise GeometryError(f"need 1 <= i < j <= n, got ({i}, {j})")
    lam = Q(lam)
    i -= 1
    j -= 1
    phi = [[ONE if r == c else ZERO for c in range(n)] for r in range(n)]
    phi[i][i] = lam
    phi[j][i] = 1 - lam
    psi = [[ONE if r == c else ZERO for c in range(n)] for r in range(n)]
    psi[i][j] = lam
    psi[j][j] = 1 - lam
    return Mat(phi), Mat(psi)


def standard_simplexes(n: int):
    """(S, T): the (n-1)-simplex conv{e_1..e_n} and the n-simplex
    conv{0, e_1..e_n}."""
    S = convex_hull([unit_vec(n, k) for k in range(n)])
    T = convex_hull([zero_vec(n)] + [unit_vec(n, k) for k in range(n)])
    return S, T


LEMMA3_PAIRS = ((1, 1), (2, 1), (1, 2), (Q(1, 2), 3), (5, Q(2, 3)), (0, 1), (1, 0), (4, 4))


def check_simplex_split_identity(spec: ValuationSpec, lam, i: int, j: int, cfg: TrialConfig, dirs=None) -> CheckReport:
    """On the standard (n-1)-simplex S: the split identity
    h(Psi S, u) = lam h(Psi S, phi^t u) + (1-lam) h(Psi S, psi^t u),
    the three two-variable specializations of the homogeneous functional
    equation, the coordinate-swap symmetry, and the closed form
    Psi S = a2 m(T) + a4 M T."""
    lam = Q(lam)
    if not (0 < lam < 1):
        raise InvalidLambda(f"lambda must lie strictly between 0 and 1, got {lam}")
    if spec.family != DEGREE_NP1:
        raise NotAValuationWitness("split identity check applies to the degree-(n+1) family")
    n = cfg.n
    if n < 3:
        raise GeometryError("needs n >= 3")
    if dirs is None:
        dirs = direction_set(n, min(cfg.extra_dirs, 8), cfg.seed)
    name = f"simplex-split:{spec.coefficients}:lam={lam}:ij=({i},{j}):n={n}"
    S, T = standard_simplexes(n)
    phi, psi = shear_pair(n, i, j, lam)
    phit, psit = phi.transpose(), psi.transpose()

    def h(u):
        return apply_valuation_eval(spec, S, u)

    for u in dirs:
        lhs = h(u)
        rhs = lam * h(phit.apply(u)) + (1 - lam) * h(psit.apply(u))
        if lhs != rhs:
            return CheckReport(name, FAIL, 1, cfg.seed, witness={"direction": u, "lhs": lhs, "rhs": rhs})

    ei = unit_vec(n, i - 1)
    ej = unit_vec(n, j - 1)

    def f(x1, x2):
        u = vadd(vscale(Q(x1), ei), vscale(Q(x2), ej))
        return h(u)

    f10, fm10 = f(1, 0), f(-1, 0)
    for x1, x2 in LEMMA3_PAIRS:
        x1, x2 = Q(x1), Q(x2)
        checks = [
            ("f(x1,x2)=(x1+x2)f(1,0)", f(x1, x2), (x1 + x2) * f10),
            ("f(-x1,-x2)=(x1+x2)f(-1,0)", f(-x1, -x2), (x1 + x2) * fm10),
            ("(x1+x2)f(-x1,x2)=x2^2 f(1,0)+x1^2 f(-1,0)", (x1 + x2) * f(-x1, x2), x2 * x2 * f10 + x1 * x1 * fm10),
            ("symmetry", f(x1, x2), f(x2, x1)),
            ("symmetry-mixed", f(-x1, x2), f(x2, -x1)),
        ]
        for label, lhs, rhs in checks:
            if lhs != rhs:
                return CheckReport(name, FAIL, 1, cfg.seed, witness={"identity": label, "x1": x1, "x2": x2, "lhs": lhs, "rhs": rhs})

    # closed form on S: only the starred terms survive and pull back to T
    mT = moment_vector(T)
    for u in dirs:
        lhs = h(u)
        rhs = spec.a2 * dot(mT, u) + spec.a4 * moment_body_eval(T, u)[0]
        if lhs != rhs:
            return CheckReport(name, FAIL, 1, cfg.seed, witness={"identity": "PsiS=a2 m(T)+a4 MT", "direction": u, "lhs": lhs, "rhs": rhs})
    return CheckReport(name, PASS, 1, cfg.seed, details={"directions": len(dirs), "lemma3_pairs": len(LEMMA3_PAIRS)})


def check_simplex_split_battery(cfg: TrialConfig, specs=20, lambdas=(Q(1, 4), Q(1, 3), Q(1, 2), Q(2, 3))) -> CheckReport:
    """Random degree-(n+1) specs across all (i, j) pairs and the given
    lambda grid."""
    name = f"simplex-split-battery:n={cfg.n}"
    count = 0
    for s in range(specs):
        rng = cfg.rng("split-spec", s)
        spec = random_valuation_spec(rng, DEGREE_NP1)
        for lam in lambdas:
            for i in range(1, cfg.n + 1):
                for j in range(i + 1, cfg.n + 1):
                    rep = check_simplex_split_identity(spec, lam, i, j, cfg)
                    count += 1
                    if rep.verdict != PASS:
                        rep.details["spec"] = jsonable(spec.coefficients)
                        return rep
    return CheckReport(name, PASS, count, cfg.seed, details={"specs": specs, "lambdas": [rat_str(l) for l in lambdas]})


# ---------------------------------------------------------------------------
# Coefficient recovery


def recover_degree1_coeffs(evaluator: Callable, n: int, cfg: Optional[TrialConfig] = None):
    """Recover (a1, a2, a3, a4) of a degree-1 family member from the four
    support numbers z of its values on {e_1} and [0, e_1]; checks the
    nonnegativity side inequalities and validates the recovered spec against
    the black box on random polytopes."""
    e1 = unit_vec(n, 0)
    seg = convex_hull([zero_vec(n), e1])
    pt = convex_hull([e1])
    z1 = evaluator(seg, vneg(e1))
    z2 = evaluator(seg, e1)
    z3 = evaluator(pt, vneg(e1))
    z4 = evaluator(pt, e1)
    zs = (z1, z2, z3, z4)
    if not (2 * z2 <= z4 + z1 + z2 and 2 * z1 <= z3 + z1 + z2 and z4 <= z2 and z3 <= z1):
        raise NotAValuationWitness(f"side inequalities violated by z = {tuple(map(rat_str, zs))}")
    a = (z1 - z3, z2 - z4, z2 + z3 - z1, z1 + z4 - z2)
    spec = ValuationSpec(DEGREE_1, *a)
    _validate_recovery(evaluator, spec, n, cfg)
    return a


def recover_degree_np1_coeffs(evaluator: Callable, n: int, cfg: Optional[TrialConfig] = None):
    """Recover (a1, a2, a3, a4) of a degree-(n+1) family member from its
    values on the two standard simplices; mu = <e_1, m(T)> = h(MT, e_1)
    since T lies in the halfspace y_1 >= 0."""
    S, T = standard_simplexes(n)
    e1 = unit_vec(n, 0)
    mu = dot(moment_vector(T), e1)
    tp, tm = evaluator(T, e1), evaluator(T, vneg(e1))
    sp, sm = evaluator(S, e1), evaluator(S, vneg(e1))
    a1 = (tp - tm) / (2 * mu)
    a3 = (tp + tm) / (2 * mu)
    a2 = (sp - sm) / (2 * mu)
    a4 = (sp + sm) / (2 * mu)
    if a3 < 0 or a4 < 0:
        raise NotAValuationWitness(f"recovered body coefficients are negative: a3={rat_str(a3)}, a4={rat_str(a4)}")
    a = (a1, a2, a3, a4)
    spec = ValuationSpec(DEGREE_NP1, *a)
    _validate_recovery(evaluator, spec, n, cfg)
    return a


def _validate_recovery(evaluator, spec, n, cfg):
    cfg = cfg or TrialConfig(n=n, trials=4)
    for t in range(cfg.validation_trials):
        rng = cfg.rng("recovery-validate", t)
        K = random_polytope(rng, n)
        for u in (unit_vec(n, 0), vneg(unit_vec(n, 0)), tuple(Q(1) for _ in range(n))):
            if evaluator(K, u) != apply_valuation_eval(spec, K, u):
                raise NotAValuationWitness("recovered coefficients fail to reproduce the operator")


def check_coefficient_recovery(family: str, cfg: TrialConfig) -> CheckReport:
    """Round-trip exactness for random specs; for degree 1 also the three
    hand tables (identity, o-hull, reflection) with their z vectors."""
    name = f"coefficient-recovery:{family}:n={cfg.n}"
    n = cfg.n
    if family == DEGREE_1:
        hand = [
            ((1, 0, 0, 0), (0, 1, -1, 1)),
            ((0, 0, 1, 0), (0, 1, 0, 1)),
            ((0, 1, 0, 0), (1, 0, 1, -1)),
        ]
        e1 = unit_vec(n, 0)
        seg = convex_hull([zero_vec(n), e1])
        pt = convex_hull([e1])
        for coeffs, zs in hand:
            spec = ValuationSpec(DEGREE_1, *coeffs)

            def ev(K, u, spec=spec):
                return apply_valuation_eval(spec, K, u)

            got_z = (ev(seg, vneg(e1)), ev(seg, e1), ev(pt, vneg(e1)), ev(pt, e1))
            if got_z != tuple(Q(z) for z in zs):
                return CheckReport(name, FAIL, 0, cfg.seed, witness={"table": coeffs, "expected_z": zs, "z": got_z})
            if recover_degree1_coeffs(ev, n, cfg) != tuple(Q(c) for c in coeffs):
                return CheckReport(name, FAIL, 0, cfg.seed, witness={"table": coeffs})
    for t in range(cfg.trials):
        rng = cfg.rng(f"recover:{family}", t)
        spec = random_valuation_spec(rng, family)

        def ev(K, u, spec=spec):
            return apply_valuation_eval(spec, K, u)

        try:
            if family == DEGREE_1:
                got = recover_degree1_coeffs(ev, n, cfg)
            else:
                got = recover_degree_np1_coeffs(ev, n, cfg)
        except NotAValuationWitness as exc:
            return CheckReport(name, FAIL, t + 1, cfg.seed, witness={"trial": t, "spec": spec.coefficients, "error": str(exc)})
        if got != spec.coefficients:
            return CheckReport(name, FAIL, t + 1, cfg.seed, witness={"trial": t, "spec": spec.coefficients, "recovered": got})
    return CheckReport(name, PASS, cfg.trials, cfg.seed)


# ---------------------------------------------------------------------------
# Independence of the starred moment body


def _linear_system_solution(rows, rhs):
    """Solve the exact linear system; returns (solution or None, pinned) where
    pinned marks coordinates constant across the solution set."""
    from .linalg import nullspace, solve

    sol = solve(rows, rhs)
    if sol is None:
        return None, ()
    null = nullspace(rows)
    pinned = tuple(all(v[k] == 0 for v in null) for k in range(len(sol)))
    return sol, pinned


def check_mstar_independence(cfg: TrialConfig, dirs=None) -> CheckReport:
    """The starred moment body is not expressible as a1 m + a2 m_o + a3 M +
    a4 M_o (a3, a4 >= 0).  Mirrors the proof: on a centrally symmetric
    origin-containing witness the M-terms must cancel, which combined with
    the sign constraints forces a3 = a4 = 0; the remaining linear system on
    a shifted simplex is then exactly inconsistent.  Control systems with
    targets inside the family solve exactly."""
    n = cfg.n
    if n < 3:
        raise GeometryError("needs n >= 3")
    if dirs is None:
        dirs = direction_set(n, 8, cfg.seed)
    name = f"mstar-independence:n={cfg.n}"
    cross_poly = convex_hull([unit_vec(n, k) for k in range(n)] + [vneg(unit_vec(n, k)) for k in range(n)])
    S, T = standard_simplexes(n)
    shifted = translate(S, tuple(ONE for _ in range(n)))

    def mo(K, u):
        return dot(moment_vector(o_hull(K)), u)

    def Mo(K, u):
        return moment_body_eval(o_hull(K), u)[0]

    candidates_o = [
        lambda K, u: dot(moment_vector(K), u),
        mo,
        lambda K, u: moment_body_eval(K, u)[0],
        Mo,
    ]
    target_star = lambda K, u: moment_body_star_eval(K, u)[0]

    # Step 1: the centered witness forces a3 + a4 = 0 (hence a3 = a4 = 0
    # under the family's sign constraints).
    u1 = unit_vec(n, 0)
    mc = moment_body_eval(cross_poly, u1)[0]
    if not (mc > 0 and mc == Mo(cross_poly, u1) and target_star(cross_poly, u1) == 0 and is_zero_vec(moment_vector(cross_poly))):
        return CheckReport(name, FAIL, 0, cfg.seed, witness={"reason": "centered witness malfunction"})

    # Step 2: with a3 = a4 = 0 the remaining system on the shifted simplex is
    # inconsistent: summing the equations at u and -u eliminates the linear
    # moment terms and leaves 0 = width of the starred body, which is > 0.
    width = target_star(shifted, u1) + target_star(shifted, vneg(u1))
    if not width > 0:
        return CheckReport(name, FAIL, 0, cfg.seed, witness={"reason": "shifted witness has flat starred body", "width": width})

    # The unrestricted equality system pins (a2, a3, a4) = (0, -1, 1): the
    # support-function identity M_o = M + M_*; a3 = -1 certifies sign
    # infeasibility.
    rows, rhs = [], []
    for K in (cross_poly, shifted, T):
        for u in dirs:
            rows.append([c(K, u) for c in candidates_o])
            rhs.append(target_star(K, u))
    sol, pinned = _linear_system_solution(rows, rhs)
    details = {
        "forced": "a3 + a4 = 0 on the centered witness; signs force a3 = a4 = 0",
        "contradiction_width": width,
    }
    if sol is None:
        details["equality_system"] = "inconsistent"
    else:
        details["equality_solution"] = list(sol)
        details["solution_pinned"] = list(pinned)
        if not (pinned[2] and pinned[3] and (sol[2] < 0 or sol[3] < 0)):
            return CheckReport(name, FAIL, 0, cfg.seed, witness={"reason": "equality system did not pin a negative body coefficient", "solution": sol})

    # Controls: targets inside the family must solve exactly.
    controls = {}
    target_M = lambda K, u: moment_body_eval(K, u)[0]
    for label, cands, target, expected in (
        ("target-M-in-o-family", candidates_o, target_M, (ZERO, ZERO, ONE, ZERO)),
        (
            "target-Mstar-in-star-family",
            [
                lambda K, u: dot(moment_vector(K), u),
                lambda K, u: dot(m_star(K), u),
                lambda K, u: moment_body_eval(K, u)[0],
                lambda K, u: moment_body_star_eval(K, u)[0],
            ],
            target_star,
            (ZERO, ZERO, ZERO, ONE),
        ),
    ):
        rows, rhs = [], []
        for K in (cross_poly, shifted, T):
            for u in dirs:
                rows.append([c(K, u) for c in cands])
                rhs.append(target(K, u))
        sol, pinned = _linear_system_solution(rows, rhs)
        if sol != expected:
            return CheckReport(name, FAIL, 0, cfg.seed, witness={"control": label, "solution": sol, "expected": expected})
        controls[label] = list(sol)
    details["controls"] = controls
    return CheckReport(name, PASS, 1, cfg.seed, details=details)


# ---------------------------------------------------------------------------
# Busemann-Petty corollary


def bp_direction_set(n: int, budget: int = 300, seed: int = 0):
    """Well-spread rational directions: the sign-vector core plus exact
    rational sphere points (n = 3); seeded rationals elsewhere."""
    dirs = list(direction_set(n, 0, seed))
    if n == 3:
        core = set(dirs)
        # whole symmetric orbits only: a split orbit would cluster directions
        for fam in sphere_point_families(21):
            fresh = [p for p in fam if p not in core]
            if len(dirs) + len(fresh) > budget:
                break
            dirs.extend(fresh)
            core.update(fresh)
    elif budget > len(dirs):
        dirs.extend(direction_set(n, budget - len(dirs), seed, label="bp-extra")[len(dirs):])
    return tuple(dirs[:budget])


def _isotropic_normalizer(K: Polytope) -> Mat:
    """A rational unimodular-up-to-scaling map making K roughly isotropic.

    Both sides of the Busemann-Petty inequality scale by |det phi|^{n+1}
    under linear maps, so checking the normalized body is exactly
    equivalent; normalization only improves how much of vol(MK) a fixed
    direction budget can capture.  Uses the exact LDL^t factorization of the
    centered covariance with rational square-root approximations."""
    from math import isqrt

    from .polytope import second_moment_matrix

    n = K.ambient_dim
    volK = volume(K)
    m = moment_vector(K)
    sm = second_moment_matrix(K)
    cov = [[sm.rows[i][j] - m[i] * m[j] / volK for j in range(n)] for i in range(n)]
    # LDL^t with L unit lower triangular (exact, SPD input)
    L = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    d = [ZERO] * n
    for j in range(n):
        d[j] = cov[j][j] - sum(L[j][k] * L[j][k] * d[k] for k in range(j))
        if d[j] <= 0:
            return Mat.identity(n)
        for i in range(j + 1, n):
            L[i][j] = (cov[i][j] - sum(L[i][k] * L[j][k] * d[k] for k in range(j))) / d[j]
    Linv = Mat(L).inverse()
    # rational approximation of 1/sqrt(d_j); any positive value is valid
    scales = []
    for dj in d:
        p, q = int(dj.numerator), int(dj.denominator)
        s = Q(isqrt(q * p * 4**20), p * 2**20)  # ~ sqrt(q/p) with 2^-20 relative slack
        scales.append(s if s > 0 else ONE)
    phi = Mat.diagonal(scales) @ Linv
    # only the rough shape matters: snap entries to small rationals to keep
    # downstream exact arithmetic light
    from fractions import Fraction

    snapped = Mat(
        [
            [Q(*Fraction(float(e)).limit_denominator(128).as_integer_ratio()) for e in row]
            for row in phi.rows
        ]
    )
    return snapped if snapped.det != 0 else phi


def check_bp_inequality(K: Polytope, cfg: TrialConfig, budget: int = 300, normalize: bool = True) -> CheckReport:
    """Certified check of vol(MK) vol(B)^{n+1} >= vol(MB) vol(K)^{n+1}.

    The ball side is the exact rational bracket of vol(MB)/vol(B)^{n+1}
    (rational in odd dimensions); the body side is a rigorous inner bound:
    the hull of exact boundary points, with a second adaptive round spending
    the remaining direction budget on the facet normals of the first-round
    hull.  The verdict is pass / inconclusive / fail where fail requires a
    certified violation (outer bound below the exact right-hand side);
    loose bounds only ever yield inconclusive."""
    n = K.ambient_dim
    volK = volume(K)
    if volK == 0:
        raise ZeroVolume("the inequality needs a full-dimensional body")
    if normalize:
        phi = _isotropic_normalizer(K)
        if phi.det != 0:
            K = apply_linear(phi, K)
            volK = volume(K)
    c_lo, c_hi = ball_moment_ratio(n)
    rhs_hi = c_hi * volK ** (n + 1)
    rhs_lo = c_lo * volK ** (n + 1)
    # the hull of m points in R^3 has about 2m facets, so a first round of
    # budget/3 spread directions leaves room to refine at every facet normal
    first = bp_direction_set(n, max(n + 2, budget // 3), cfg.seed)
    MK = moment_body(K)
    evals = {u: MK.eval(u) for u in first}
    inner = convex_hull([pt for _, pt in evals.values()])
    name = f"busemann-petty:n={n}"
    lower = volume(inner)
    if lower < rhs_hi and len(evals) < budget and inner.intrinsic_dim == n:
        # adaptive round: the inner hull's facet normals point exactly at
        # the caps the first round missed
        cands = sorted({h.normal for h in inner.hull_data.facets} - set(evals))
        for nu in cands[: budget - len(evals)]:
            evals[nu] = MK.eval(nu)
        inner = convex_hull([pt for _, pt in evals.values()])
        lower = volume(inner)
    details = {
        "directions": len(evals),
        "normalized": bool(normalize),
        "vol_K": volK,
        "lower_vol_MK": lower,
        "rhs": rhs_hi,
        "margin_float": float(lower / rhs_hi) if rhs_hi != 0 else None,
    }
    if lower >= rhs_hi:
        return CheckReport(name, PASS, 1, cfg.seed, details=details)
    _, upper = volume_bounds(MK, list(evals.keys()))
    details["upper_vol_MK"] = upper
    if upper < rhs_lo:
        return CheckReport(name, FAIL, 1, cfg.seed, witness={"upper": upper, "rhs_lower": rhs_lo}, details=details)
    return CheckReport(name, INCONCLUSIVE, 1, cfg.seed, details=details)


# ---------------------------------------------------------------------------
# Line-projection reduction (degree 1)


def check_line_projection_reduction(op_name: str, cfg: TrialConfig) -> CheckReport:
    """h(Phi K, u) = h(Phi(pi_u K), u) for degree-1 operators."""
    if op_name not in DEGREE_1_BASIS + ("DiffBody",):
        raise GeometryError(f"{op_name} is not a degree-1 operator")
    name = f"line-projection:{op_name}:n={cfg.n}"
    for t in range(cfg.trials):
        rng = cfg.rng(f"lp:{op_name}", t)
        K = random_polytope(rng, cfg.n)
        from .randgen import random_nonzero_vector

        u = random_nonzero_vector(rng, cfg.n)
        lhs = support_evaluator(op_name, K)(u)
        rhs = support_evaluator(op_name, project_onto_line(K, u))(u)
        if lhs != rhs:
            return CheckReport(name, FAIL, t + 1, cfg.seed, witness={"trial": t, "K": K, "direction": u, "lhs": lhs, "rhs": rhs})
    return CheckReport(name, PASS, cfg.trials, cfg.seed)


def check_line_projection_spec(cfg: TrialConfig) -> CheckReport:
    """Same reduction for random degree-1 combinations."""
    name = f"line-projection:degree1-specs:n={cfg.n}"
    for t in range(cfg.trials):
        rng = cfg.rng("lp:spec", t)
        spec = random_valuation_spec(rng, DEGREE_1)
        K = random_polytope(rng, cfg.n)
        from .randgen import random_nonzero_vector

        u = random_nonzero_vector(rng, cfg.n)
        lhs = apply_valuation_eval(spec, K, u)
        rhs = apply_valuation_eval(spec, project_onto_line(K, u), u)
        if lhs != rhs:
            return CheckReport(name, FAIL, t + 1, cfg.seed, witness={"trial": t, "spec": spec.coefficients, "K": K, "direction": u, "lhs": lhs, "rhs": rhs})
    return CheckReport(name, PASS, cfg.trials, cfg.seed)


# ---------------------------------------------------------------------------
# Symmetry invariance


def even_permutation_matrices(n: int):
    """All 3-cycle coordinate permutations (determinant 1)."""
    from itertools import permutations

    mats = []
    for triple in permutations(range(n), 3):
        a, b, c = triple
        if not (a < b or a < c):
            continue  # one representative per oriented 3-cycle
        perm = list(range(n))
        perm[a], perm[b], perm[c] = b, c, a
        rows = [[ONE if perm[r] == col else ZERO for col in range(n)] for r in range(n)]
        mats.append(Mat(rows))
    return mats


def check_symmetry_invariance(op_name: str, K: Polytope, G, cfg: TrialConfig, dirs=None) -> CheckReport:
    """h(Phi K, g^t u) = h(Phi K, u) for every g fixing K with det g = 1.

    The transpose form is the one the equivariance law licenses for general
    determinant-1 stabilizers; for the coordinate-permutation groups used by
    default it coincides with the g u form."""
    name = f"symmetry-invariance:{op_name}:n={cfg.n}"
    if dirs is None:
        dirs = direction_set(K.ambient_dim, min(cfg.extra_dirs, 8), cfg.seed)
    for g in G:
        if g.det != 1:
            raise NotASymmetry(f"group element has determinant {g.det}")
        if apply_linear(g, K) != K:
            raise NotASymmetry("group element does not fix K")
    f = support_evaluator(op_name, K)
    for g in G:
        gt = g.transpose()
        for u in dirs:
            lhs = f(gt.apply(u))
            rhs = f(u)
            if lhs != rhs:
                return CheckReport(name, FAIL, 1, cfg.seed, witness={"g": g, "direction": u, "lhs": lhs, "rhs": rhs})
    return CheckReport(name, PASS, len(G), cfg.seed, details={"group_order_tested": len(G), "directions": len(dirs)})


# ---------------------------------------------------------------------------
# Vanishing of the starred operators on origin-containing bodies


def check_star_vanishing(cfg: TrialConfig, dirs=None) -> CheckReport:
    """M*K = {0} and m*(K) = 0 for every K containing the origin."""
    if dirs is None:
        dirs = direction_set(cfg.n, min(cfg.extra_dirs, 8), cfg.seed)
    name = f"star-vanishing:n={cfg.n}"
    origin = zero_vec(cfg.n)
    for t in range(cfg.trials):
        rng = cfg.rng("star-vanish", t)
        P = random_polytope(rng, cfg.n)
        if t % 2 == 0:
            K = convex_hull(list(P.vertices) + [origin])
        else:
            c = moment_vector(P)
            v = volume(P)
            K = translate(P, vneg(vscale(ONE / v, c))) if v > 0 else convex_hull(list(P.vertices) + [origin])
        if not contains_point(K, origin):
            return CheckReport(name, FAIL, t + 1, cfg.seed, witness={"trial": t, "reason": "generator produced a body without the origin"})
        if not is_zero_vec(m_star(K)):
            return CheckReport(name, FAIL, t + 1, cfg.seed, witness={"trial": t, "K": K, "m_star": m_star(K)})
        for u in dirs:
            val, pt = moment_body_star_eval(K, u)
            if val != 0 or not is_zero_vec(pt):
                return CheckReport(name, FAIL, t + 1, cfg.seed, witness={"trial": t, "K": K, "direction": u, "value": val})
    return CheckReport(name, PASS, cfg.trials, cfg.seed)


# ---------------------------------------------------------------------------
# Full battery


VALUATION_IDENTITY_OPS = ("Id", "Neg", "OHull", "NegOHull", "MomentVec", "MomentVecStar", "MomentBody", "MomentBodyStar", "DiffBody")
EQUIVARIANCE_OPS = VALUATION_IDENTITY_OPS + ("ProjBody",)


def run_all(cfg: TrialConfig, include_bp: bool = True, progress: Optional[Callable] = None):
    """The full harness battery; returns the list of CheckReports."""
    reports = []

    def emit(rep):
        reports.append(rep)
        if progress:
            progress(rep)

    for op in VALUATION_IDENTITY_OPS:
        emit(check_valuation_identity(op, cfg))
    emit(check_centroid_counterexample(cfg))
    for op in EQUIVARIANCE_OPS:
        emit(check_equivariance(op, cfg, shears=min(cfg.trials, 50), dilations=min(cfg.trials, 20)))
    for op in DEGREE_NP1_BASIS + DEGREE_1_BASIS:
        emit(check_lower_dim_collapse(op, cfg))
    emit(check_simplex_split_battery(cfg, specs=min(cfg.trials, 20)))
    emit(check_coefficient_recovery(DEGREE_1, cfg))
    emit(check_coefficient_recovery(DEGREE_NP1, cfg))
    emit(check_mstar_independence(cfg))
    for op in DEGREE_1_BASIS + ("DiffBody",):
        emit(check_line_projection_reduction(op, cfg))
    emit(check_line_projection_spec(cfg))
    S, _ = standard_simplexes(cfg.n)
    emit(check_symmetry_invariance("MomentBodyStar", S, even_permutation_matrices(cfg.n), cfg))
    emit(check_star_vanishing(cfg))
    if include_bp:
        cube = convex_hull([tuple(Q(s) for s in signs) for signs in _corners(cfg.n)])
        emit(check_bp_inequality(cube, cfg, budget=160))
    return reports


def _corners(n):
    from itertools import product

    return product((-1, 1), repeat=n)
