"""Exact-arithmetic Minkowski valuations on rational polytopes.

Everything geometric is computed over Q: convex hulls, clips, volumes and
moment integrals, the operator zoo (o-hull, moment vector/body and their
starred variants, projection, difference and centroid bodies, the two
classified linear-combination families), and a verification harness that
checks the defining valuation identity, GL(n) equivariance laws, simplex
split identities, coefficient recovery, an independence certificate and the
generalized Busemann-Petty inequality with rigorous rational bounds.
"""

__version__ = "0.1.0"

from .bodies import (
    DEGREE_1,
    DEGREE_NP1,
    OPERATORS,
    SupportBody,
    ValuationSpec,
    apply_valuation_eval,
    centroid_body_eval,
    difference_body,
    m_star,
    moment_body,
    moment_body_eval,
    moment_body_star,
    moment_body_star_eval,
    o_hull,
    projection_body,
    projection_body_eval,
    transform_support_body,
    volume_bounds,
)
from .linalg import Mat, cross, dot, vec
from .polytope import (
    Halfspace,
    Polytope,
    apply_linear,
    clip_halfspace,
    contains_point,
    convex_hull,
    minkowski_sum,
    moment_vector,
    negate,
    polytope_equal,
    project_onto_line,
    support_point,
    support_value,
    translate,
    volume,
)
from .randgen import TrialConfig
from .rational import Q, rat, rat_str

__all__ = [
    "DEGREE_1",
    "DEGREE_NP1",
    "Halfspace",
    "Mat",
    "OPERATORS",
    "Polytope",
    "Q",
    "SupportBody",
    "TrialConfig",
    "ValuationSpec",
    "apply_linear",
    "apply_valuation_eval",
    "centroid_body_eval",
    "clip_halfspace",
    "contains_point",
    "convex_hull",
    "cross",
    "difference_body",
    "dot",
    "m_star",
    "minkowski_sum",
    "moment_body",
    "moment_body_eval",
    "moment_body_star",
    "moment_body_star_eval",
    "moment_vector",
    "negate",
    "o_hull",
    "polytope_equal",
    "project_onto_line",
    "projection_body",
    "projection_body_eval",
    "rat",
    "rat_str",
    "support_point",
    "support_value",
    "transform_support_body",
    "translate",
    "vec",
    "volume",
    "volume_bounds",
]
