"""Float-only smoke test of Hausdorff continuity for the support oracles:
shaving a shrinking corner off the cube perturbs moment-body and projection
support values by O(cut size).  Not an exact check by design; the exact
theory covers polytopes only and limits are out of scope."""

from minkval import Halfspace, Q, clip_halfspace, convex_hull, moment_body_eval, projection_body_eval, vec
from minkval.randgen import direction_set


def test_support_values_converge_under_corner_shaving(unit_cube):
    dirs = direction_set(3, extra=4, seed=0)
    base_m = [float(moment_body_eval(unit_cube, u)[0]) for u in dirs]
    base_p = [float(projection_body_eval(unit_cube, u)[0]) for u in dirs]
    prev_m_err = prev_p_err = None
    for k in (2, 4, 8, 16):
        cut = Halfspace(vec((1, 1, 1)), Q(3) - Q(1, k))
        shaved = clip_halfspace(unit_cube, cut)
        m_err = max(abs(float(moment_body_eval(shaved, u)[0]) - b) for u, b in zip(dirs, base_m))
        p_err = max(abs(float(projection_body_eval(shaved, u)[0]) - b) for u, b in zip(dirs, base_p))
        if prev_m_err is not None:
            assert m_err <= prev_m_err
            assert p_err <= prev_p_err
        prev_m_err, prev_p_err = m_err, p_err
    assert prev_m_err < 1e-3
    assert prev_p_err < 1e-1
