"""Monte-Carlo cross-oracles.

Floating point is allowed here and only here (plus report formatting): these
estimators exist to cross-check the exact integrals against an independent
computation, with agreement asserted within a few standard errors.
"""

from __future__ import annotations

import numpy as np

from .polytope import Polytope, volume


def _float_hrep(P: Polytope):
    hd = P.hull_data
    A = np.array([[float(c) for c in h.normal] for h in hd.facets], dtype=float)
    b = np.array([float(h.offset) for h in hd.facets], dtype=float)
    return A, b


def _bbox(P: Polytope):
    vs = np.array([[float(c) for c in v] for v in P.vertices], dtype=float)
    return vs.min(axis=0), vs.max(axis=0)


def sample_box_points(P: Polytope, samples: int, seed: int):
    """Uniform points in the bounding box plus an inside mask; the box volume
    comes along for estimator scaling."""
    lo, hi = _bbox(P)
    rng = np.random.default_rng(seed)
    pts = rng.uniform(lo, hi, size=(samples, P.ambient_dim))
    A, b = _float_hrep(P)
    inside = (pts @ A.T <= b + 1e-12).all(axis=1)
    box_vol = float(np.prod(hi - lo))
    return pts, inside, box_vol


def mc_volume(P: Polytope, samples: int = 10**6, seed: int = 0):
    """(estimate, standard error) for the volume of a full-dimensional P."""
    pts, inside, box_vol = sample_box_points(P, samples, seed)
    p = inside.mean()
    est = box_vol * p
    se = box_vol * float(np.sqrt(p * (1 - p) / samples))
    return est, se


def mc_moment_vector(P: Polytope, samples: int = 10**6, seed: int = 0):
    """(estimate vector, standard error vector) for integral of x over P."""
    pts, inside, box_vol = sample_box_points(P, samples, seed)
    vals = pts * inside[:, None]
    est = box_vol * vals.mean(axis=0)
    se = box_vol * vals.std(axis=0) / np.sqrt(samples)
    return est, se


def mc_moment_body_value(P: Polytope, u, samples: int = 10**6, seed: int = 0):
    """(estimate, standard error) for integral of |<u, x>| over P."""
    pts, inside, box_vol = sample_box_points(P, samples, seed)
    uf = np.array([float(c) for c in u], dtype=float)
    vals = np.abs(pts @ uf) * inside
    est = box_vol * float(vals.mean())
    se = box_vol * float(vals.std()) / float(np.sqrt(samples))
    return est, se


def mc_support_membership_volume(values_by_dir, box, samples: int = 10**5, seed: int = 0):
    """Volume estimate of {x : <u, x> <= c_u for all given (u, c_u)} inside
    the box (lo, hi); membership is the support-based halfspace test."""
    lo, hi = box
    rng = np.random.default_rng(seed)
    n = len(lo)
    pts = rng.uniform(lo, hi, size=(samples, n))
    A = np.array([[float(c) for c in u] for u, _ in values_by_dir], dtype=float)
    b = np.array([float(v) for _, v in values_by_dir], dtype=float)
    inside = (pts @ A.T <= b + 1e-12).all(axis=1)
    box_vol = float(np.prod(np.asarray(hi) - np.asarray(lo)))
    p = inside.mean()
    return box_vol * p, box_vol * float(np.sqrt(p * (1 - p) / samples))
