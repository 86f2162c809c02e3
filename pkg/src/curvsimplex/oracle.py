"""Embedding oracle: explicit model-space coordinates and brute-force checks.

Everything here recomputes geometric quantities the slow, coordinate-based
way: vertices are placed in Euclidean, Minkowski, or spherical model space by
factoring the Gram matrix, distances come straight from the model metric, and
projections from numerical minimization over the face.  The rest of the
library never depends on this module; the test suite uses it as an
independent second route to every quantity.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .domain import (
    BarycentricPoint,
    CurvatureSpec,
    EdgeLengths,
    curved_gram,
    euclidean_gram,
)
from .errors import (
    DegenerateDirection,
    EmbeddingInconsistency,
    NotRealizableInput,
    OutsideLightCone,
)
from .realizability import Verdict, check
from .symmat import DEFAULT_TOL

GRID_POINT_BUDGET = 20_000


class ModelSpace(enum.Enum):
    EUCLIDEAN = "euclidean"
    MINKOWSKI = "minkowski"
    SPHERE = "sphere"


@dataclass(frozen=True)
class Embedding:
    """Explicit vertex coordinates in a model space.

    ``vertices`` is a (num_vertices, ambient_dim) array.  For the Minkowski
    model the bilinear form is diag(1, ..., 1, -1) and every vertex sits on
    the upper sheet; for the sphere model vertices have norm 1/sqrt(kappa).
    """

    model: ModelSpace
    vertices: np.ndarray
    curvature: CurvatureSpec

    @property
    def num_vertices(self) -> int:
        return self.vertices.shape[0]

    @property
    def radius(self) -> float:
        """Model radius 1/sqrt(|kappa|) (1.0 for the Euclidean model)."""
        if self.curvature.kappa == 0:
            return 1.0
        return 1.0 / self.curvature.scale

    def form(self, u: np.ndarray, v: np.ndarray) -> float:
        """Ambient bilinear form applied to coordinate vectors."""
        if self.model is ModelSpace.MINKOWSKI:
            return float(u[:-1] @ v[:-1] - u[-1] * v[-1])
        return float(u @ v)


def _embed_euclidean(e: EdgeLengths) -> np.ndarray:
    q = euclidean_gram(e, apex=e.num_vertices).matrix.data
    try:
        lower = np.linalg.cholesky(q)
    except np.linalg.LinAlgError as exc:
        raise EmbeddingInconsistency("Cholesky failed on a Realizable input") from exc
    return np.vstack([lower, np.zeros(q.shape[0])])


def _embed_minkowski(e: EdgeLengths, c: CurvatureSpec) -> np.ndarray:
    q = curved_gram(e, c).matrix.data
    eigvals, eigvecs = np.linalg.eigh(q)
    if np.sum(eigvals < 0) != 1:
        raise EmbeddingInconsistency("expected exactly one negative eigenvalue")
    # Spatial axes first, time axis last, so the form is diag(1, ..., 1, -1).
    order = np.argsort(-eigvals)
    eigvals, eigvecs = eigvals[order], eigvecs[:, order]
    verts = eigvecs * np.sqrt(np.abs(eigvals))[None, :]
    time = verts[:, -1]
    if np.all(time < 0):
        verts = verts.copy()
        verts[:, -1] = -verts[:, -1]
    elif not np.all(time > 0):
        raise EmbeddingInconsistency("vertices landed on both hyperboloid sheets")
    return verts


def _embed_sphere(e: EdgeLengths, c: CurvatureSpec) -> np.ndarray:
    q = curved_gram(e, c).matrix.data
    try:
        lower = np.linalg.cholesky(q)
    except np.linalg.LinAlgError as exc:
        raise EmbeddingInconsistency("Cholesky failed on a Realizable input") from exc
    return lower


def embed(e: EdgeLengths, c: CurvatureSpec, tol: float = DEFAULT_TOL) -> Embedding:
    """Place the vertices in the model space of curvature ``c``.

    The configuration is only determined up to model isometry; consumers
    should rely on pairwise distances and inner products, not positions.
    """
    report = check(e, c, tol)
    if report.verdict is not Verdict.REALIZABLE:
        raise NotRealizableInput(f"cannot embed: {report.detail}")
    kappa = c.kappa
    if kappa == 0:
        return Embedding(ModelSpace.EUCLIDEAN, _embed_euclidean(e), c)
    if kappa < 0:
        return Embedding(ModelSpace.MINKOWSKI, _embed_minkowski(e, c), c)
    return Embedding(ModelSpace.SPHERE, _embed_sphere(e, c), c)


def _hull_point(emb: Embedding, x: BarycentricPoint) -> np.ndarray:
    if x.coords.size != emb.num_vertices:
        raise ValueError("coordinate length does not match the embedding")
    return x.coords @ emb.vertices


def _model_distance(emb: Embedding, px: np.ndarray, py: np.ndarray) -> float:
    """Geodesic distance between hull points, lifted to the model surface."""
    if emb.model is ModelSpace.EUCLIDEAN:
        return float(np.linalg.norm(px - py))
    sx = emb.form(px, px)
    sy = emb.form(py, py)
    sxy = emb.form(px, py)
    radius = emb.radius
    if emb.model is ModelSpace.MINKOWSKI:
        if sx >= 0 or sy >= 0:
            raise OutsideLightCone("hull point outside the light cone")
        arg = max(-sxy / math.sqrt(sx * sy), 1.0)
        return radius * math.acosh(arg)
    if sx <= 0 or sy <= 0:
        raise DegenerateDirection("hull point with non-positive norm")
    arg = min(max(sxy / math.sqrt(sx * sy), -1.0), 1.0)
    return radius * math.acos(arg)


def brute_distance(emb: Embedding, x: BarycentricPoint, y: BarycentricPoint) -> float:
    """Distance recomputed directly from explicit coordinates."""
    return _model_distance(emb, _hull_point(emb, x), _hull_point(emb, y))


def _simplex_grid(dim: int, resolution: int) -> np.ndarray:
    """All barycentric grid points with coordinates multiples of 1/resolution."""
    if dim == 1:
        return np.array([[1.0]])
    pts = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            pts.append(prefix + [remaining])
            return
        for c in range(remaining + 1):
            rec(prefix + [c], remaining - c, slots - 1)

    rec([], resolution, dim)
    return np.array(pts, dtype=float) / resolution


def _grid_resolution(dim: int) -> int:
    """Largest resolution <= 64 whose grid stays within the point budget."""
    res = 64
    while res > 2 and math.comb(res + dim - 1, dim - 1) > GRID_POINT_BUDGET:
        res //= 2
    return res


def brute_project(emb: Embedding, vertex: int) -> BarycentricPoint:
    """Foot of the perpendicular found by direct minimization over the face.

    Deterministic: a fixed barycentric grid pick of the face, then a
    Nelder-Mead polish of the model distance with negative coordinates
    penalized.  Serves as ground truth for the closed-form projections.
    """
    k = emb.num_vertices
    if not 1 <= vertex <= k:
        raise IndexError(f"vertex {vertex} out of range 1..{k}")
    face = [i for i in range(k) if i != vertex - 1]
    apex = emb.vertices[vertex - 1]
    face_verts = emb.vertices[face]
    m = len(face)

    def objective_full(alpha: np.ndarray) -> float:
        return _model_distance(emb, apex, alpha @ face_verts)

    grid = _simplex_grid(m, _grid_resolution(m))
    values = [objective_full(a) for a in grid]
    best = grid[int(np.argmin(values))]

    def objective_free(free: np.ndarray) -> float:
        alpha = np.append(free, 1.0 - free.sum())
        if np.min(alpha) < -1e-9:
            return 1e6 - np.min(alpha)
        return objective_full(alpha)

    if m > 1:
        res = minimize(objective_free, best[:-1], method="Nelder-Mead",
                       options={"xatol": 1e-10, "fatol": 1e-15,
                                "maxiter": 20_000, "maxfev": 20_000})
        alpha = np.append(res.x, 1.0 - res.x.sum())
    else:
        alpha = np.array([1.0])
    coords = np.insert(alpha, vertex - 1, 0.0)
    return BarycentricPoint(coords)


def edge_lengths_of(emb: Embedding) -> EdgeLengths:
    """Pairwise model distances of the embedded vertices, as an edge set."""
    k = emb.num_vertices
    g = np.zeros((k, k))
    for i in range(k):
        for j in range(i + 1, k):
            g[i, j] = g[j, i] = _model_distance(emb, emb.vertices[i], emb.vertices[j])
    return EdgeLengths(g)
