"""Realizability checks: do the edge lengths define a non-degenerate simplex?

Euclidean: the apex Gram matrix must be positive definite.  Hyperbolic: the
full vertex Gram matrix must have signature (n, 1).  Spherical: all edges
must be shorter than pi/2 and the vertex Gram matrix positive definite.
General curvature reduces to the unit-curvature case by rescaling edges.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .domain import CurvatureSpec, EdgeLengths, curved_gram, euclidean_gram
from .symmat import DEFAULT_TOL, Signature


class Verdict(enum.Enum):
    REALIZABLE = "Realizable"
    DEGENERATE = "Degenerate"
    NOT_REALIZABLE = "NotRealizable"


@dataclass(frozen=True)
class RealizabilityReport:
    verdict: Verdict
    signature: Signature
    detail: str

    def __bool__(self) -> bool:
        return self.verdict is Verdict.REALIZABLE


def _classify(sig: Signature, target: tuple[int, int], detail_ok: str) -> RealizabilityReport:
    """Compare a signature against the (plus, minus) target for the class."""
    plus, minus = target
    if sig.as_tuple() == (plus, minus, 0):
        return RealizabilityReport(Verdict.REALIZABLE, sig, detail_ok)
    if sig.n_zero > 0 and sig.n_plus <= plus and sig.n_minus <= minus:
        return RealizabilityReport(
            Verdict.DEGENERATE, sig,
            f"flat configuration: signature {sig.as_tuple()} has zero eigenvalues",
        )
    return RealizabilityReport(
        Verdict.NOT_REALIZABLE, sig,
        f"signature {sig.as_tuple()} incompatible with target ({plus},{minus},0)",
    )


def check_euclidean(e: EdgeLengths, tol: float = DEFAULT_TOL) -> RealizabilityReport:
    """Realizable iff the apex Gram matrix is positive definite (any apex)."""
    q = euclidean_gram(e, apex=e.num_vertices)
    sig = q.matrix.signature(tol)
    return _classify(sig, (e.n, 0), "apex Gram matrix is positive definite")


def check_hyperbolic(e: EdgeLengths, tol: float = DEFAULT_TOL) -> RealizabilityReport:
    """Realizable iff the -cosh vertex Gram matrix has signature (n, 1)."""
    q = curved_gram(e, CurvatureSpec(-1.0))
    sig = q.matrix.signature(tol)
    return _classify(sig, (e.n, 1), f"vertex Gram matrix has signature ({e.n},1)")


def check_spherical(e: EdgeLengths, tol: float = DEFAULT_TOL) -> RealizabilityReport:
    """Realizable iff every edge is < pi/2 and the cos Gram matrix is PD."""
    q = curved_gram(e, CurvatureSpec(1.0))
    sig = q.matrix.signature(tol)
    if float(e.gamma.max()) >= math.pi / 2:
        return RealizabilityReport(Verdict.NOT_REALIZABLE, sig, "edge >= pi/2")
    return _classify(sig, (e.num_vertices, 0), "vertex Gram matrix is positive definite")


def check(e: EdgeLengths, c: CurvatureSpec, tol: float = DEFAULT_TOL) -> RealizabilityReport:
    """Dispatch on curvature class; general kappa rescales to the unit model."""
    kappa = c.kappa
    if kappa == 0:
        return check_euclidean(e, tol)
    scaled = e if abs(kappa) == 1 else e.scaled(c.scale)
    if kappa < 0:
        return check_hyperbolic(scaled, tol)
    return check_spherical(scaled, tol)
