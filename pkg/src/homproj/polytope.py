"""Canonical V-representation of compact convex sets.

A Polytope stores exactly the extreme points of its convex hull, sorted
lexicographically (with a tolerance band so near-ties order stably). All
predicates use tolerances relative to scale = max(1, diameter), so they are
robust under translation and scaling.
"""

import functools
import math
from dataclasses import dataclass

import numpy as np

from .errors import BadDims, DimensionMismatch, EmptyInput, ZeroDirection
from .lp import margin_direction

EXTREME_TOL = 1e-9
FACE_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class Polytope:
    """Extreme points (rows, canonical order) of a compact convex set."""

    vertices: np.ndarray

    def __post_init__(self):
        V = np.ascontiguousarray(np.atleast_2d(np.asarray(self.vertices, dtype=float)))
        V.setflags(write=False)
        object.__setattr__(self, "vertices", V)

    @property
    def dim(self):
        return self.vertices.shape[1]

    @property
    def num_vertices(self):
        return self.vertices.shape[0]


@dataclass(frozen=True)
class SupportResult:
    """Support value, attaining vertex indices, and the uniqueness margin."""

    value: float
    face: tuple
    margin: float


def _pairwise_max_dist(V):
    if V.shape[0] < 2:
        return 0.0
    diff = V[:, None, :] - V[None, :, :]
    return float(np.sqrt((diff * diff).sum(axis=2).max()))


def diameter(P):
    """Largest pairwise vertex distance; 0 for a singleton."""
    return _pairwise_max_dist(P.vertices)


def scale_of(P):
    return max(1.0, diameter(P))


def _canonical_sort(V, scale):
    """Lexicographic row order with a tolerance band on each comparison."""
    band = 1e-9 * scale

    def cmp(i, j):
        for x, y in zip(V[i], V[j]):
            if x - y > band:
                return 1
            if y - x > band:
                return -1
        return 0

    order = sorted(range(V.shape[0]), key=functools.cmp_to_key(cmp))
    return V[order]


def extreme_points(points):
    """Canonical polytope from an arbitrary point set.

    A point survives iff it is not a convex combination of the others,
    certified by the separation LP (margin > 1e-9 * scale).
    """
    try:
        P = np.asarray(points, dtype=float)
    except ValueError as exc:
        raise DimensionMismatch("points do not share a common length") from exc
    if P.size == 0:
        raise EmptyInput("no input points")
    if P.ndim == 1:
        P = P[None, :]
    if P.ndim != 2:
        raise DimensionMismatch("points do not share a common length")
    if not np.all(np.isfinite(P)):
        raise ValueError("non-finite coordinates")
    scale = max(1.0, _pairwise_max_dist(P))
    tol = EXTREME_TOL * scale

    # drop near-duplicates first so a duplicated extreme point survives
    kept = []
    for p in P:
        if all(np.linalg.norm(p - q) > tol for q in kept):
            kept.append(p)
    V = np.array(kept)

    if V.shape[0] > 1:
        extreme = []
        for i in range(V.shape[0]):
            others = np.delete(V, i, axis=0)
            delta, _ = margin_direction(V[i] - others)
            if delta > tol:
                extreme.append(V[i])
        V = np.array(extreme)
    return Polytope(_canonical_sort(V, scale))


def support(P, u):
    """Support function value of P at u, with the attaining face.

    face holds the argmax vertex indices within 1e-9 * scale * |u|; margin is
    the gap to the best vertex outside the face (inf when there is none).
    """
    u = np.asarray(u, dtype=float)
    if u.shape != (P.dim,):
        raise DimensionMismatch(f"direction length {u.shape} vs dim {P.dim}")
    norm_u = float(np.linalg.norm(u))
    if norm_u == 0.0:
        raise ZeroDirection("zero support direction")
    vals = P.vertices @ u
    best = float(vals.max())
    tol = FACE_TOL * scale_of(P) * norm_u
    on_face = vals >= best - tol
    face = tuple(int(i) for i in np.flatnonzero(on_face))
    off = vals[~on_face]
    margin = float(best - off.max()) if off.size else math.inf
    return SupportResult(value=best, face=face, margin=margin)


def negate(P):
    """Reflection through the origin."""
    return Polytope(_canonical_sort(-P.vertices, scale_of(P)))


def minkowski_sum(P, Q):
    """Minkowski sum; vertices are extreme points of all pairwise sums."""
    if P.dim != Q.dim:
        raise DimensionMismatch(f"dims {P.dim} vs {Q.dim}")
    sums = (P.vertices[:, None, :] + Q.vertices[None, :, :]).reshape(-1, P.dim)
    return extreme_points(sums)


def project_polytope(P, frame):
    """Orthogonal projection onto the frame's subspace, in frame coordinates."""
    if frame.ambient_dim != P.dim:
        raise DimensionMismatch(
            f"frame ambient dim {frame.ambient_dim} vs polytope dim {P.dim}"
        )
    return extreme_points(P.vertices @ frame.basis.T)


def random_polytope(n, k, seed):
    """Hull of k standard-normal samples in R^n; deterministic per seed."""
    if n < 1 or k < 1:
        raise BadDims(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    rng = np.random.default_rng(seed)
    return extreme_points(rng.standard_normal((k, n)))
