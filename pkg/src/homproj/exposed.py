"""Exposed points, exposed diameters, and antipodally exposed points.

A vertex v is exposed when some direction u has its strict maximum over the
polytope at v; a vertex pair (x, z) spans an exposed diameter when one u has
its strict maximum at x and strict minimum at z. Both are decided by the
separation-margin LP over the |u|_inf <= 1 box.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotAVertex, PerturbationFailed, SingletonInput, ZeroDirection
from .lp import margin_direction
from .polytope import minkowski_sum, negate, scale_of, support

MARGIN_TOL = 1e-9
PERTURB_RETRIES = 64


@dataclass(frozen=True, eq=False)
class ExposedDiameter:
    """Antipodally exposed vertex pair with its witness direction.

    support(P, witness) is the singleton {x} with gap margin_max, and
    support(P, -witness) is the singleton {z} with gap margin_min.
    """

    x: np.ndarray
    z: np.ndarray
    witness: np.ndarray
    margin_max: float
    margin_min: float


def _vertex_index(P, v):
    v = np.asarray(v, dtype=float)
    hits = np.flatnonzero((P.vertices == v).all(axis=1))
    if hits.size == 0:
        raise NotAVertex(f"{v.tolist()} is not a vertex of the polytope")
    return int(hits[0])


def is_exposed(P, v):
    """Whether vertex v is exposed; returns (flag, witness direction, margin)."""
    i = _vertex_index(P, v)
    if P.num_vertices == 1:
        u = np.zeros(P.dim)
        u[0] = 1.0
        return True, u, math.inf
    others = np.delete(P.vertices, i, axis=0)
    delta, u = margin_direction(P.vertices[i] - others)
    return delta > MARGIN_TOL * scale_of(P), u, delta


def _unique_face(P, direction):
    """Vertex index if support(P, direction) is a strict singleton, else None."""
    res = support(P, direction)
    if len(res.face) == 1 and res.margin > MARGIN_TOL * scale_of(P):
        return res.face[0]
    return None


def exposed_point_near(P, f, eps, seed=0):
    """Exposed point of P in a direction g with |f - g| <= eps.

    If f itself has a unique support vertex it is returned unchanged;
    otherwise f is perturbed by seeded random directions (magnitude halved
    until the eps bound holds) until the support face becomes a singleton.
    """
    f = np.asarray(f, dtype=float)
    if abs(np.linalg.norm(f) - 1.0) > 1e-9:
        raise ZeroDirection("f must be a unit vector")
    if eps <= 0.0:
        raise ValueError("eps must be positive")
    i = _unique_face(P, f)
    if i is not None:
        return P.vertices[i], f
    for attempt in range(PERTURB_RETRIES):
        rng = np.random.default_rng(np.random.SeedSequence([seed, attempt]))
        d = rng.standard_normal(P.dim)
        d /= np.linalg.norm(d)
        eta = eps
        for _ in range(30):
            g = f + eta * d
            g /= np.linalg.norm(g)
            if np.linalg.norm(f - g) > eps:
                eta /= 2.0
                continue
            i = _unique_face(P, g)
            if i is not None:
                return P.vertices[i], g
            break
    raise PerturbationFailed(
        f"no unique exposing direction within eps={eps} after {PERTURB_RETRIES} retries"
    )


def exposed_diameter_near(P, f, eps, seed=0):
    """Exposed diameter of P whose witness direction is within eps of f.

    Works through the difference body K* = P + (-P): an exposed vertex of K*
    in direction g decomposes as x - z with x the unique maximizer and z the
    unique minimizer of g over P.
    """
    if P.num_vertices < 2:
        raise SingletonInput("exposed diameters need at least two vertices")
    kstar = minkowski_sum(P, negate(P))
    vstar, g = exposed_point_near(kstar, f, eps, seed=seed)
    hi = _unique_face(P, g)
    lo = _unique_face(P, -g)
    if hi is None or lo is None:
        raise PerturbationFailed("difference-body direction does not split P strictly")
    x, z = P.vertices[hi], P.vertices[lo]
    if np.linalg.norm((x - z) - vstar) > MARGIN_TOL * scale_of(kstar):
        raise PerturbationFailed("difference-body vertex does not match x - z")
    return ExposedDiameter(
        x=x,
        z=z,
        witness=g,
        margin_max=support(P, g).margin,
        margin_min=support(P, -g).margin,
    )


def exposed_diameters(P):
    """All exposed diameters, one per unordered vertex pair that admits one.

    For each pair (v, w) the LP maximizes the joint margin delta subject to
    u.(v - x) >= delta for x != v and u.(y - w) >= delta for y != w over the
    |u|_inf <= 1 box; the pair qualifies iff delta > 1e-9 * scale.
    """
    if P.num_vertices < 2:
        raise SingletonInput("exposed diameters need at least two vertices")
    V = P.vertices
    k = V.shape[0]
    tol = MARGIN_TOL * scale_of(P)
    out = []
    for i in range(k):
        max_rows = V[i] - np.delete(V, i, axis=0)
        for j in range(i + 1, k):
            min_rows = np.delete(V, j, axis=0) - V[j]
            delta, u = margin_direction(np.vstack([max_rows, min_rows]))
            if delta <= tol:
                continue
            u = u / np.linalg.norm(u)
            hi = support(P, u)
            lo = support(P, -u)
            if hi.face != (i,) or lo.face != (j,):
                continue
            out.append(
                ExposedDiameter(
                    x=V[i],
                    z=V[j],
                    witness=u,
                    margin_max=hi.margin,
                    margin_min=lo.margin,
                )
            )
    return out


def antipodally_exposed_points(P):
    """Vertices appearing as an endpoint of at least one exposed diameter."""
    if P.num_vertices < 2:
        raise SingletonInput("needs at least two vertices")
    endpoints = set()
    for d in exposed_diameters(P):
        endpoints.add(_vertex_index(P, d.x))
        endpoints.add(_vertex_index(P, d.z))
    return [P.vertices[i] for i in sorted(endpoints)]
