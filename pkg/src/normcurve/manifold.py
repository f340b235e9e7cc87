"""Generic engine for submanifolds of R^D given by smooth constraint maps.

A manifold is the zero set of a constraint map c: R^D -> R^C near a base
point.  The constraint rows may be redundant: tangent spaces come from a
rank-revealing SVD of the Jacobian (singular values below ``rank_tol``
times the largest are treated as zero), and all normal-space solves use
the pseudo-inverse restricted to the numerically determined row space.

For the quadratic varieties used in this package the constraint Hessian
is exact and constant, so the second fundamental form

    II(u, v) = the normal vector w solving  Dc(p) w = -D^2c[u, v]

involves no numerical differentiation.  Geodesics integrate the ODE
gamma'' = II(gamma', gamma') with a classical 4th-order step followed by
re-projection of the position onto the constraint set (Gauss-Newton) and
of the velocity onto the tangent space.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .curves import DiscreteCurve

__all__ = [
    "ImplicitManifold",
    "GeodesicState",
    "SingularPointError",
    "ProjectionError",
    "tangent_basis",
    "second_fundamental_form",
    "normal_curvature",
    "sectional_curvature",
    "mean_curvature_vector",
    "project_point",
    "project_velocity",
    "geodesic_state",
    "integrate_geodesic",
]


class SingularPointError(RuntimeError):
    """Constraint rank at a point differs from the base-point rank."""


class ProjectionError(RuntimeError):
    """Gauss-Newton projection onto the constraint set failed to converge."""


@dataclass
class ImplicitManifold:
    """Submanifold of R^D cut out by ``constraint`` near ``base_point``.

    ``hessian`` is the constant bilinear map (u, v) -> D^2c[u, v]; it is
    exact for quadratic constraints.  ``intrinsic_dim`` may be omitted, in
    which case it is inferred from the Jacobian rank at the base point.
    """

    ambient_dim: int
    constraint: Callable[[np.ndarray], np.ndarray]
    jacobian: Callable[[np.ndarray], np.ndarray]
    hessian: Callable[[np.ndarray, np.ndarray], np.ndarray]
    base_point: np.ndarray
    intrinsic_dim: int | None = None
    rank_tol: float = 1e-8
    name: str = ""

    def __post_init__(self):
        self.base_point = np.asarray(self.base_point, dtype=float)
        if self.base_point.shape != (self.ambient_dim,):
            raise ValueError("base_point shape does not match ambient_dim")
        residual = np.max(np.abs(self.constraint(self.base_point)))
        if residual > 1e-10:
            raise ValueError(f"base point violates the constraint (residual {residual:.2e})")
        rank = _jacobian_rank(self, self.base_point)
        inferred = self.ambient_dim - rank
        if self.intrinsic_dim is None:
            self.intrinsic_dim = inferred
        elif self.intrinsic_dim != inferred:
            raise ValueError(
                f"declared intrinsic_dim {self.intrinsic_dim} but Jacobian rank "
                f"at the base point gives {inferred}"
            )

    @property
    def codim(self) -> int:
        return self.ambient_dim - self.intrinsic_dim


@dataclass
class GeodesicState:
    """Position, unit velocity, and accumulated arc length along a geodesic."""

    position: np.ndarray
    velocity: np.ndarray
    arc_length: float = 0.0

    def __post_init__(self):
        self.position = np.asarray(self.position, dtype=float)
        self.velocity = np.asarray(self.velocity, dtype=float)
        speed = np.linalg.norm(self.velocity)
        if abs(speed - 1.0) > 1e-9:
            raise ValueError(f"velocity must be unit (got |v| = {speed:.12g})")


def _svd(manifold: ImplicitManifold, p: np.ndarray, full: bool = False):
    jac = manifold.jacobian(p)
    u, s, vt = np.linalg.svd(jac, full_matrices=full)
    if s.size == 0 or s[0] == 0.0:
        rank = 0
    else:
        rank = int(np.sum(s > manifold.rank_tol * s[0]))
    return u, s, vt, rank


def _jacobian_rank(manifold: ImplicitManifold, p: np.ndarray) -> int:
    return _svd(manifold, p)[3]


def _check_rank(manifold: ImplicitManifold, p: np.ndarray, rank: int) -> None:
    if rank != manifold.codim:
        raise SingularPointError(
            f"constraint rank {rank} at the query point differs from "
            f"base-point rank {manifold.codim}"
        )


def _solve_normal(u, s, vt, rank, rhs: np.ndarray) -> np.ndarray:
    """Minimum-norm solution of J w = rhs; lies in the row space of J."""
    coeff = (u[:, :rank].T @ rhs) / s[:rank]
    return vt[:rank].T @ coeff


def tangent_basis(manifold: ImplicitManifold, p: np.ndarray) -> np.ndarray:
    """Orthonormal basis of ker Dc(p), shape (intrinsic_dim, D)."""
    p = np.asarray(p, dtype=float)
    _, _, vt, rank = _svd(manifold, p, full=True)
    _check_rank(manifold, p, rank)
    return vt[rank:]


def second_fundamental_form(
    manifold: ImplicitManifold, p: np.ndarray, u: np.ndarray, v: np.ndarray
) -> np.ndarray:
    """Normal-space value II(u, v) for tangent vectors u, v at p."""
    p = np.asarray(p, dtype=float)
    su, ss, svt, rank = _svd(manifold, p)
    _check_rank(manifold, p, rank)
    rhs = -manifold.hessian(np.asarray(u, float), np.asarray(v, float))
    return _solve_normal(su, ss, svt, rank, rhs)


def normal_curvature(manifold: ImplicitManifold, p: np.ndarray, u: np.ndarray) -> float:
    """|II(u, u)| for a unit tangent direction u."""
    u = np.asarray(u, dtype=float)
    speed = np.linalg.norm(u)
    if abs(speed - 1.0) > 1e-9:
        raise ValueError(f"direction must be unit (got |u| = {speed:.12g})")
    return float(np.linalg.norm(second_fundamental_form(manifold, p, u, u)))


def mean_curvature_vector(manifold: ImplicitManifold, p: np.ndarray) -> np.ndarray:
    """Trace of II over an orthonormal tangent basis at p."""
    p = np.asarray(p, dtype=float)
    su, ss, svt, rank = _svd(manifold, p)
    _check_rank(manifold, p, rank)
    basis = tangent_basis(manifold, p)
    rhs = -sum(manifold.hessian(e, e) for e in basis)
    return _solve_normal(su, ss, svt, rank, rhs)


def sectional_curvature(
    manifold: ImplicitManifold, p: np.ndarray, u: np.ndarray, v: np.ndarray
) -> float:
    """Gauss-equation curvature <II(u,u), II(v,v)> - |II(u,v)|^2.

    Requires u, v orthonormal and tangent; the ambient space is flat, so
    this is the intrinsic sectional curvature of the plane span(u, v).
    """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if abs(np.linalg.norm(u) - 1.0) > 1e-9 or abs(np.linalg.norm(v) - 1.0) > 1e-9:
        raise ValueError("u and v must be unit vectors")
    if abs(float(u @ v)) > 1e-9:
        raise ValueError("u and v must be orthogonal")
    p = np.asarray(p, dtype=float)
    su, ss, svt, rank = _svd(manifold, p)
    _check_rank(manifold, p, rank)
    ii_uu = _solve_normal(su, ss, svt, rank, -manifold.hessian(u, u))
    ii_vv = _solve_normal(su, ss, svt, rank, -manifold.hessian(v, v))
    ii_uv = _solve_normal(su, ss, svt, rank, -manifold.hessian(u, v))
    return float(ii_uu @ ii_vv - ii_uv @ ii_uv)


def project_point(
    manifold: ImplicitManifold,
    p: np.ndarray,
    tol: float = 1e-12,
    max_iter: int = 5,
) -> np.ndarray:
    """Gauss-Newton projection of p onto the constraint set."""
    p = np.asarray(p, dtype=float).copy()
    for _ in range(max_iter):
        r = manifold.constraint(p)
        if np.max(np.abs(r)) <= tol:
            return p
        su, ss, svt, rank = _svd(manifold, p)
        if rank == 0:
            raise SingularPointError("zero Jacobian during projection")
        p -= _solve_normal(su, ss, svt, rank, r)
    residual = np.max(np.abs(manifold.constraint(p)))
    if residual > 1e-8:
        raise ProjectionError(f"projection stalled at residual {residual:.2e}")
    return p


def project_velocity(manifold: ImplicitManifold, p: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Project v onto the tangent space at p and renormalize to unit length."""
    su, ss, svt, rank = _svd(manifold, p)
    _check_rank(manifold, p, rank)
    v = np.asarray(v, dtype=float)
    v = v - _solve_normal(su, ss, svt, rank, manifold.jacobian(p) @ v)
    speed = np.linalg.norm(v)
    if speed == 0.0:
        raise ValueError("velocity projects to zero")
    return v / speed


def geodesic_state(manifold: ImplicitManifold, p: np.ndarray, u: np.ndarray) -> GeodesicState:
    """Admissible initial state: p projected onto M, u projected and normalized."""
    p = project_point(manifold, p)
    u = project_velocity(manifold, p, u)
    return GeodesicState(position=p, velocity=u, arc_length=0.0)


def _acceleration(manifold: ImplicitManifold, p: np.ndarray, v: np.ndarray) -> np.ndarray:
    su, ss, svt, rank = _svd(manifold, p)
    if rank == 0:
        raise SingularPointError("zero Jacobian along geodesic")
    return _solve_normal(su, ss, svt, rank, -manifold.hessian(v, v))


def integrate_geodesic(
    manifold: ImplicitManifold,
    state: GeodesicState,
    length: float,
    step: float = 1e-3,
    project_tol: float = 1e-12,
    edge_tol: float | None = None,
) -> DiscreteCurve:
    """Integrate gamma'' = II(gamma', gamma') for the given arc length.

    The step count is rounded so that the nominal step divides the length
    exactly.  After each full step the position is re-projected onto the
    constraint set and the velocity onto the tangent space (renormalized),
    so the recorded vertices satisfy |c| <= project_tol-level residuals
    throughout.

    Vertices sit at equal arc spacing, so chords fall short of the step by
    about step^3 * curvature^2 / 24; unless ``edge_tol`` is given, the
    returned curve's edge tolerance is sized from the measured normal
    curvature (never below 1e-9).
    """
    if step <= 0.0:
        raise ValueError("step must be positive")
    if length < 0.0:
        raise ValueError("length must be nonnegative")
    p = np.asarray(state.position, dtype=float).copy()
    v = np.asarray(state.velocity, dtype=float).copy()
    if length == 0.0:
        return DiscreteCurve(np.asarray([p]), nominal_step=step)
    nsteps = max(1, int(round(length / step)))
    h = length / nsteps
    vertices = np.empty((nsteps + 1, manifold.ambient_dim))
    vertices[0] = p
    max_accel = 0.0
    for k in range(nsteps):
        # classical RK4 on (position, velocity)
        a1 = _acceleration(manifold, p, v)
        max_accel = max(max_accel, float(np.linalg.norm(a1)))
        p2 = p + 0.5 * h * v
        v2 = v + 0.5 * h * a1
        a2 = _acceleration(manifold, p2, v2)
        p3 = p + 0.5 * h * v2
        v3 = v + 0.5 * h * a2
        a3 = _acceleration(manifold, p3, v3)
        p4 = p + h * v3
        v4 = v + h * a3
        a4 = _acceleration(manifold, p4, v4)
        p = p + (h / 6.0) * (v + 2.0 * v2 + 2.0 * v3 + v4)
        v = v + (h / 6.0) * (a1 + 2.0 * a2 + 2.0 * a3 + a4)
        p = project_point(manifold, p, tol=project_tol)
        v = project_velocity(manifold, p, v)
        vertices[k + 1] = p
    if edge_tol is None:
        edge_tol = max(1e-9, h**3 * max_accel**2 / 16.0)
    return DiscreteCurve(vertices, nominal_step=h, edge_tol=edge_tol)
