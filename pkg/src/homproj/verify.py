"""Executable checks for the theorem-level statements, over fixtures and
random instances. Universal statements are sampled (the quantifier over
planes is uncountable); reports say which kind of evidence they carry.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import BadDims, SingletonInput
from .exposed import antipodally_exposed_points, exposed_diameters
from .geometry import frame_containing, random_frame
from .homothety import apply_homothety, detect_homothety, set_equal
from .paraboloid import (
    ParaboloidSpec,
    parabola_homothety,
    paraboloid_homothetic,
    project_paraboloid,
)
from .polytope import project_polytope, scale_of

PARALLEL_TOL = 1e-9


@dataclass
class Report:
    """Outcome of one verification check.

    For universal checks the verdict is pass iff every instance passed; for
    existential checks (``existential`` True) it is pass iff a witness was
    found. ``witnesses`` carries JSON-ready records for offline reproduction.
    """

    check_name: str
    instances_run: int
    passes: int
    seed: int
    verdict: str
    existential: bool = False
    witnesses: list = field(default_factory=list)

    def to_dict(self):
        return {
            "check_name": self.check_name,
            "instances_run": self.instances_run,
            "passes": self.passes,
            "seed": self.seed,
            "verdict": self.verdict,
            "existential": self.existential,
            "witnesses": self.witnesses,
        }


def _subseed(seed, index):
    return int(np.random.SeedSequence([seed, index]).generate_state(1)[0])


def _homothety_record(result):
    if result is None:
        return None
    return {
        "z": result.shift.tolist(),
        "lambda": result.ratio,
        "residual": result.residual,
    }


def _projection_record(frame, Q1, Q2, result):
    return {
        "frame": frame.basis.tolist(),
        "projection_1": Q1.vertices.tolist(),
        "projection_2": Q2.vertices.tolist(),
        "homothety": _homothety_record(result),
    }


def _projection_sweep(name, P1, P2, frames, seed):
    """Shared body of the theorem-1 style checks.

    When P1 and P2 are homothetic the check is universal: every sampled
    projection pair must be homothetic (and the detected map must reproduce
    the projection at set level). When they are not, the check is
    existential: a non-homothetic projection is the sought witness; finding
    none is flagged as converse tension, since sampling cannot prove the
    universal hypothesis of the converse direction.
    """
    direct = detect_homothety(P1, P2)
    witnesses = []
    homothetic_count = 0
    n_frames = 0
    first_bad = None
    for frame in frames:
        n_frames += 1
        Q1 = project_polytope(P1, frame)
        Q2 = project_polytope(P2, frame)
        result = detect_homothety(Q1, Q2)
        sound = result is not None and set_equal(
            Q1, apply_homothety(Q2, result.shift, result.ratio)
        )
        if sound:
            homothetic_count += 1
        elif first_bad is None:
            first_bad = _projection_record(frame, Q1, Q2, result)

    if direct is not None:
        verdict = "pass" if homothetic_count == n_frames else "fail"
        if first_bad is not None:
            witnesses.append(first_bad)
        return Report(
            check_name=name,
            instances_run=n_frames,
            passes=homothetic_count,
            seed=seed,
            verdict=verdict,
            witnesses=witnesses
            + [{"direct_homothety": _homothety_record(direct)}],
        )
    if first_bad is not None:
        witnesses.append(first_bad)
        verdict = "pass"
    else:
        witnesses.append({"converse_tension": True})
        verdict = "fail"
    return Report(
        check_name=name,
        instances_run=n_frames,
        passes=n_frames - homothetic_count,
        seed=seed,
        verdict=verdict,
        existential=True,
        witnesses=witnesses,
    )


def verify_theorem1(P1, P2, m, samples, seed):
    """Projection sweep over random m-frames."""
    n = P1.dim
    if P2.dim != n:
        raise BadDims(f"dims {P1.dim} vs {P2.dim}")
    if not 2 <= m <= n - 1:
        raise BadDims(f"need 2 <= m <= n - 1, got m={m}, n={n}")
    if samples < 1:
        raise BadDims("samples must be >= 1")
    frames = (random_frame(n, m, _subseed(seed, i)) for i in range(samples))
    return _projection_sweep("theorem1", P1, P2, frames, seed)


def verify_corollary1(P1, P2, sub, m, samples, seed):
    """Projection sweep restricted to m-frames containing the subspace.

    ``sub`` may be None for the trivial zero subspace (r = 0), in which case
    the frames are unconstrained.
    """
    n = P1.dim
    if P2.dim != n or (sub is not None and sub.ambient_dim != n):
        raise BadDims("ambient dimensions differ")
    r = 0 if sub is None else sub.sub_dim
    if not (r <= m - 2 and m - 2 <= n - 3):
        raise BadDims(f"need r <= m - 2 <= n - 3, got r={r}, m={m}, n={n}")
    if samples < 1:
        raise BadDims("samples must be >= 1")
    if sub is None:
        frames = (random_frame(n, m, _subseed(seed, i)) for i in range(samples))
    else:
        frames = (frame_containing(sub, m, _subseed(seed, i)) for i in range(samples))
    return _projection_sweep("corollary1", P1, P2, frames, seed)


def verify_theorem2(P):
    """Every vertex must be antipodally exposed (polytope specialization)."""
    if P.num_vertices < 2:
        raise SingletonInput("theorem 2 excludes singletons")
    exposed = antipodally_exposed_points(P)
    hit = {tuple(v.tolist()) for v in exposed}
    passes = sum(1 for v in P.vertices if tuple(v.tolist()) in hit)
    witnesses = [
        {"missed_vertex": v.tolist()}
        for v in P.vertices
        if tuple(v.tolist()) not in hit
    ]
    return Report(
        check_name="theorem2",
        instances_run=P.num_vertices,
        passes=passes,
        seed=0,
        verdict="pass" if passes == P.num_vertices else "fail",
        witnesses=witnesses,
    )


def verify_no_parallel_diameters(P):
    """No two distinct exposed diameters may be parallel."""
    if P.num_vertices < 2:
        raise SingletonInput("needs at least two vertices")
    diams = exposed_diameters(P)
    dirs = []
    for d in diams:
        u = d.x - d.z
        dirs.append(u / np.linalg.norm(u))
    pairs = 0
    passes = 0
    witnesses = []
    for i in range(len(dirs)):
        for j in range(i + 1, len(dirs)):
            pairs += 1
            if abs(float(dirs[i] @ dirs[j])) < 1.0 - PARALLEL_TOL:
                passes += 1
            else:
                witnesses.append(
                    {
                        "diameter_1": [diams[i].x.tolist(), diams[i].z.tolist()],
                        "diameter_2": [diams[j].x.tolist(), diams[j].z.tolist()],
                    }
                )
    return Report(
        check_name="no_parallel_diameters",
        instances_run=pairs,
        passes=passes,
        seed=0,
        verdict="pass" if passes == pairs else "fail",
        witnesses=witnesses,
    )


def verify_diameter_transfer(P1, P2):
    """Exposed diameters must map onto each other under a detected homothety.

    With P1 = z + lambda * P2, the inverse map v -> (v - z) / lambda must
    carry the exposed diameters of P1 exactly onto those of P2 (as unordered
    endpoint pairs). Non-homothetic inputs yield a not-applicable verdict.
    """
    h = detect_homothety(P1, P2)
    if h is None:
        return Report(
            check_name="diameter_transfer",
            instances_run=0,
            passes=0,
            seed=0,
            verdict="not-applicable",
        )
    d1 = exposed_diameters(P1)
    d2 = exposed_diameters(P2)
    tol = PARALLEL_TOL * scale_of(P2)

    def mapped(v):
        return (v - h.shift) / h.ratio

    def same_pair(a, b, pair):
        x, z = pair
        direct = np.linalg.norm(a - x) <= tol and np.linalg.norm(b - z) <= tol
        crossed = np.linalg.norm(a - z) <= tol and np.linalg.norm(b - x) <= tol
        return direct or crossed

    matched = 0
    witnesses = []
    used = set()
    for d in d1:
        a, b = mapped(d.x), mapped(d.z)
        hit = None
        for j, e in enumerate(d2):
            if j not in used and same_pair(a, b, (e.x, e.z)):
                hit = j
                break
        if hit is None:
            witnesses.append({"unmatched_diameter": [d.x.tolist(), d.z.tolist()]})
        else:
            used.add(hit)
            matched += 1
    ok = matched == len(d1) and len(d1) == len(d2)
    return Report(
        check_name="diameter_transfer",
        instances_run=max(len(d1), len(d2)),
        passes=matched,
        seed=0,
        verdict="pass" if ok else "fail",
        witnesses=witnesses,
    )


def verify_example1(samples, seed):
    """Sharpness example: non-homothetic paraboloids, homothetic shadows.

    Runs the fixed pair A1 = I, A2 = diag(2, 1) over random non-horizontal
    2-frames; every shadow pair must be positively homothetic while the
    solid bodies themselves are not.
    """
    if samples < 1:
        raise BadDims("samples must be >= 1")
    s1 = ParaboloidSpec(np.eye(2))
    s2 = ParaboloidSpec(np.diag([2.0, 1.0]))
    body_ratio = paraboloid_homothetic(s1, s2)
    passes = 0
    witnesses = []
    for i in range(samples):
        frame = random_frame(3, 2, _subseed(seed, i))
        r1 = project_paraboloid(s1, frame)
        r2 = project_paraboloid(s2, frame)
        h = parabola_homothety(r1, r2)
        if h is not None and h.ratio > 0.0:
            passes += 1
        else:
            witnesses.append({"frame": frame.basis.tolist()})
    ok = passes == samples and body_ratio is None
    witnesses.append({"body_homothety_ratio": body_ratio})
    return Report(
        check_name="example1",
        instances_run=samples,
        passes=passes,
        seed=seed,
        verdict="pass" if ok else "fail",
        witnesses=witnesses,
    )
