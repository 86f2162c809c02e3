"""Orthogonal projection of a vertex onto its opposite face, and volumes.

Euclidean feet come from signed-minor row sums of the apex Gram matrix; the
signed-minor total doubles as the determinant of the face Gram matrix, which
gives the altitude and the face volume for free.  Curved feet (hyperbolic and
spherical) come from the first-row minors of the full vertex Gram matrix.

The hyperbolic foot must NOT be computed by projecting inside the convex hull
of the vertices: the induced form there can fail to be positive definite.  The
spherical foot is computed with the same first-row-minor formula on the cos
Gram matrix (the radial lift of the in-hull Euclidean foot is generally not
the geodesic minimizer; the minor formula is, as the brute-force oracle
confirms).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .domain import (
    BarycentricPoint,
    CurvatureSpec,
    EdgeLengths,
    curved_gram,
    euclidean_gram,
    lift_to_model,
)
from .errors import (
    DegenerateDirection,
    NotRealizableInput,
    OutsideLightCone,
    ProjectionDegenerate,
)
from .metrics import euclidean_distance, hyperbolic_distance, spherical_distance
from .realizability import Verdict, check_euclidean, check_hyperbolic, check_spherical
from .symmat import DEFAULT_TOL

INSIDE_TOL = 1e-12


@dataclass(frozen=True)
class ProjectionResult:
    """Foot of the perpendicular from a vertex to its opposite face.

    ``foot`` has coordinate 0 at the projected vertex.  For curved simplices
    ``foot_model`` is the lift of the foot onto the model surface.
    """

    foot: BarycentricPoint
    altitude: float
    inside_face: bool
    foot_model: BarycentricPoint | None = None


def _cofactor_matrix(m: np.ndarray) -> np.ndarray:
    """Matrix of signed minors (-1)^(i+j) M_ij for an invertible matrix."""
    det = np.linalg.det(m)
    return det * np.linalg.inv(m).T


def _signed_minor_rowsums(m: np.ndarray) -> tuple[np.ndarray, float]:
    """Row sums of (-1)^(i+j) M_ij and their total."""
    cof = _cofactor_matrix(m)
    rows = cof.sum(axis=1)
    return rows, float(rows.sum())


def euclidean_project(e: EdgeLengths, vertex: int,
                      tol: float = DEFAULT_TOL) -> ProjectionResult:
    """Project ``vertex`` orthogonally onto the face spanned by the others.

    Coordinates of the foot are signed-minor row sums of the apex Gram matrix
    built at the projected vertex, normalized by their total (which equals
    the determinant of the face Gram matrix).  The altitude is
    sqrt(det(Q) / det(Q_face)).
    """
    report = check_euclidean(e, tol)
    if report.verdict is not Verdict.REALIZABLE:
        raise NotRealizableInput(f"not a Euclidean simplex: {report.detail}")
    q = euclidean_gram(e, apex=vertex)
    m = q.matrix.data
    rows, total = _signed_minor_rowsums(m)
    if total <= 0:
        raise ProjectionDegenerate(f"face Gram determinant {total} is not positive")
    alpha = rows / total
    coords = np.insert(alpha, vertex - 1, 0.0)
    foot = BarycentricPoint(coords)
    altitude = math.sqrt(max(float(np.linalg.det(m)) / total, 0.0))
    inside = bool(np.all(coords >= -INSIDE_TOL))
    return ProjectionResult(foot=foot, altitude=altitude, inside_face=inside)


def euclidean_volume(e: EdgeLengths, tol: float = DEFAULT_TOL) -> float:
    """n-dimensional volume sqrt(det(Q)) / n! (zero for flat configurations)."""
    report = check_euclidean(e, tol)
    if report.verdict is Verdict.NOT_REALIZABLE:
        raise NotRealizableInput(f"not a Euclidean edge set: {report.detail}")
    q = euclidean_gram(e, apex=e.num_vertices)
    det = q.matrix.determinant()
    scale = max(1.0, float(np.max(np.abs(q.matrix.data))) ** e.n)
    if det < 0:
        if det < -tol * scale:
            raise NotRealizableInput(f"negative Gram determinant {det}")
        det = 0.0
    return math.sqrt(det) / math.factorial(e.n)


def euclidean_face_volume(e: EdgeLengths, vertex: int,
                          tol: float = DEFAULT_TOL) -> float:
    """Volume of the face opposite ``vertex``: sqrt of the signed-minor sum.

    Uses the identity that the signed-minor sum of the apex Gram matrix at
    ``vertex`` equals the determinant of the face's own Gram matrix, so only
    one matrix is ever built.
    """
    q = euclidean_gram(e, apex=vertex)
    _, total = _signed_minor_rowsums(q.matrix.data)
    scale = max(1.0, float(np.max(np.abs(q.matrix.data))) ** (e.n - 1))
    if total < 0:
        if total < -tol * scale:
            raise NotRealizableInput(f"negative face Gram determinant {total}")
        total = 0.0
    return math.sqrt(total) / math.factorial(e.n - 1)


def _curved_foot(e: EdgeLengths, c: CurvatureSpec, vertex: int) -> BarycentricPoint:
    """First-row-minor foot formula on the full vertex Gram matrix.

    With the projected vertex relabeled first, the face coordinates are
    alpha_i = (-1)^(i+1) M_1i / sum_j (-1)^(1+j) M_1j over i, j >= 2, where
    M_1i are the first-row minors of the vertex Gram matrix.
    """
    k = e.num_vertices
    order = [vertex] + [v for v in range(1, k + 1) if v != vertex]
    q = curved_gram(e.permuted(order), c).matrix
    minors = np.array([q.minor(1, i) for i in range(2, k + 1)])
    signs = np.array([(-1.0) ** (i + 1) for i in range(2, k + 1)])
    signed = signs * minors
    denom = float(signed.sum())
    if abs(denom) < 1e-300 or not math.isfinite(denom):
        raise ProjectionDegenerate("signed first-row minors sum to zero")
    alpha = signed / denom
    coords = np.insert(alpha, vertex - 1, 0.0)
    return BarycentricPoint(coords)


def _curved_project(e: EdgeLengths, c: CurvatureSpec, vertex: int) -> ProjectionResult:
    foot = _curved_foot(e, c, vertex)
    q = curved_gram(e, c)
    inside = bool(np.all(foot.coords >= -INSIDE_TOL))
    apex_point = BarycentricPoint.vertex(vertex, e.num_vertices)
    dist_fn = hyperbolic_distance if c.kappa < 0 else spherical_distance
    try:
        foot_model = lift_to_model(q, foot)
        altitude = dist_fn(q, apex_point, foot)
    except (OutsideLightCone, DegenerateDirection):
        # Feet far outside the face can leave the model's valid cone; they are
        # still reported (inside_face is False) but have no lift or altitude.
        if inside:
            raise
        foot_model = None
        altitude = math.nan
    return ProjectionResult(foot=foot, altitude=altitude, inside_face=inside,
                            foot_model=foot_model)


def hyperbolic_project(e: EdgeLengths, vertex: int,
                       tol: float = DEFAULT_TOL) -> ProjectionResult:
    """Project ``vertex`` onto its opposite face in the hyperbolic metric."""
    report = check_hyperbolic(e, tol)
    if report.verdict is not Verdict.REALIZABLE:
        raise NotRealizableInput(f"not a hyperbolic simplex: {report.detail}")
    return _curved_project(e, CurvatureSpec(-1.0), vertex)


def spherical_project(e: EdgeLengths, vertex: int,
                      tol: float = DEFAULT_TOL) -> ProjectionResult:
    """Project ``vertex`` onto its opposite face in the spherical metric."""
    report = check_spherical(e, tol)
    if report.verdict is not Verdict.REALIZABLE:
        raise NotRealizableInput(f"not a spherical simplex: {report.detail}")
    return _curved_project(e, CurvatureSpec(1.0), vertex)


def project(e: EdgeLengths, c: CurvatureSpec, vertex: int,
            tol: float = DEFAULT_TOL) -> ProjectionResult:
    """Curvature-dispatching projection; general kappa rescales to the unit model.

    The foot's barycentric coordinates are scale invariant; the altitude is
    divided back by sqrt(|kappa|).
    """
    kappa = c.kappa
    if kappa == 0:
        return euclidean_project(e, vertex, tol)
    scale = c.scale
    scaled = e if abs(kappa) == 1 else e.scaled(scale)
    if kappa < 0:
        res = hyperbolic_project(scaled, vertex, tol)
    else:
        res = spherical_project(scaled, vertex, tol)
    if scale == 1.0:
        return res
    return ProjectionResult(foot=res.foot, altitude=res.altitude / scale,
                            inside_face=res.inside_face, foot_model=res.foot_model)


def project_onto_subface(e: EdgeLengths, c: CurvatureSpec, vertex: int, face,
                         tol: float = DEFAULT_TOL) -> ProjectionResult:
    """Convenience wrapper: project onto a lower-dimensional sub-simplex.

    Restricts the simplex to ``vertex`` plus the face vertices and projects
    there; the returned coordinates refer to the restricted vertex set in
    ascending original order.
    """
    face = sorted(set(face))
    if vertex in face:
        raise ValueError("vertex must not belong to the target face")
    keep = sorted(face + [vertex])
    sub = e.restricted(keep)
    return project(sub, c, keep.index(vertex) + 1, tol)
