"""Homotheties x -> z + lambda * x and detection of homothetic polytopes."""

from dataclasses import dataclass

import numpy as np

from .errors import BadTolerance, DimensionMismatch, ZeroLambda
from .polytope import Polytope, _canonical_sort, diameter, scale_of

DEFAULT_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class HomothetyResult:
    """Witness of P1 = shift + ratio * P2; residual is the worst vertex match."""

    shift: np.ndarray
    ratio: float
    residual: float


def apply_homothety(P, z, ratio):
    """Image of P under x -> z + ratio * x (vertex count is preserved)."""
    z = np.asarray(z, dtype=float)
    if ratio == 0.0:
        raise ZeroLambda("homothety ratio must be nonzero")
    if z.shape != (P.dim,):
        raise DimensionMismatch(f"shift length {z.shape} vs dim {P.dim}")
    V = z + ratio * P.vertices
    return Polytope(_canonical_sort(V, max(1.0, abs(ratio) * diameter(P))))


def _match_bijection(V1, V2, dist_tol):
    """Max distance of the nearest-neighbor bijection V1 -> V2, or None.

    Vertices of a canonical polytope are pairwise separated well beyond the
    matching tolerance, so nearest-neighbor assignment is unambiguous
    whenever a bijection within tolerance exists.
    """
    dists = np.linalg.norm(V1[:, None, :] - V2[None, :, :], axis=2)
    nearest = dists.argmin(axis=1)
    best = dists[np.arange(len(V1)), nearest]
    if best.max() > dist_tol or len(set(nearest.tolist())) != len(V1):
        return None
    return float(best.max())


def set_equal(P1, P2, tol=DEFAULT_TOL):
    """True iff the vertex sets match bijectively within tol * scale."""
    if P1.dim != P2.dim:
        raise DimensionMismatch(f"dims {P1.dim} vs {P2.dim}")
    if P1.num_vertices != P2.num_vertices:
        return False
    scale = max(1.0, diameter(P1), diameter(P2))
    return _match_bijection(P1.vertices, P2.vertices, tol * scale) is not None


def detect_homothety(P1, P2, tol=DEFAULT_TOL):
    """Find (z, lambda) with P1 = z + lambda * P2, or None.

    |lambda| is fixed by the diameter ratio and the translation by the vertex
    centroids (both are homothety covariant); the positive sign is tried
    first, so centrally symmetric pairs deterministically report lambda > 0.
    """
    if P1.dim != P2.dim:
        raise DimensionMismatch(f"dims {P1.dim} vs {P2.dim}")
    if tol <= 0.0:
        raise BadTolerance(f"tolerance must be positive, got {tol}")
    if P1.num_vertices != P2.num_vertices:
        return None
    scale = scale_of(P1)
    if P1.num_vertices == 1:
        z = P1.vertices[0] - P2.vertices[0]
        return HomothetyResult(shift=z, ratio=1.0, residual=0.0)
    ratio_abs = diameter(P1) / diameter(P2)
    c1 = P1.vertices.mean(axis=0)
    c2 = P2.vertices.mean(axis=0)
    for ratio in (ratio_abs, -ratio_abs):
        z = c1 - ratio * c2
        residual = _match_bijection(P1.vertices, z + ratio * P2.vertices, tol * scale)
        if residual is not None:
            return HomothetyResult(shift=z, ratio=float(ratio), residual=residual)
    return None
