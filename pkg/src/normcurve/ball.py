"""Minimal enclosing ball of a finite point set in R^D.

First-order core-set iteration: move the center toward the current
farthest point with step 1/(k+1).  The iteration count grows like 1/tol,
which is the practical regime for the well-conditioned point sets used
here (up to D = 28, 10^3-10^4 points); the returned radius is always the
exact maximum distance from the returned center, so the ball is feasible
by construction.  The run is deterministic for a fixed input order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["Ball", "min_enclosing_ball"]


@dataclass
class Ball:
    """Enclosing ball plus a convergence report."""

    center: np.ndarray
    radius: float
    iterations: int = 0
    converged: bool = True
    lower_bound: float = 0.0

    @property
    def gap(self) -> float:
        return self.radius - self.lower_bound

    def contains(self, points, slack: float = 0.0) -> bool:
        d = np.linalg.norm(np.asarray(points, float) - self.center, axis=-1)
        return bool(np.all(d <= self.radius + slack))


def _farthest(points: np.ndarray, sq_norms: np.ndarray, center: np.ndarray) -> int:
    # argmax |p - c|^2 = argmax (|p|^2 - 2 <p, c>); the |c|^2 term is common
    return int(np.argmax(sq_norms - 2.0 * (points @ center)))


def min_enclosing_ball(points, tol: float = 1e-6, max_iter: int | None = None) -> Ball:
    """Approximate minimal enclosing ball with relative tolerance ``tol``.

    Parameters
    ----------
    points : array-like, shape (N, D)
        Nonempty point set.
    tol : float
        Target relative accuracy of the radius.
    max_iter : int, optional
        Iteration cap; defaults to min(ceil(2/tol), 200000).

    Returns
    -------
    Ball with the best center seen, its exact covering radius, the number
    of iterations used, a half-diameter lower bound, and a convergence
    flag (radius gap below tol relative to the radius, or the iterate
    displacement became negligible).
    """
    points = np.asarray(points, dtype=float)
    if points.ndim == 1:
        points = points[None, :]
    if points.size == 0:
        raise ValueError("min_enclosing_ball requires at least one point")
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    n = points.shape[0]
    if n == 1:
        return Ball(center=points[0].copy(), radius=0.0, iterations=0, converged=True)

    if max_iter is None:
        max_iter = min(int(np.ceil(2.0 / tol)), 200_000)

    sq_norms = np.einsum("ij,ij->i", points, points)
    center = points.mean(axis=0)

    # half-diameter lower bound from a double farthest-point scan
    a = points[_farthest(points, sq_norms, center)]
    b = points[_farthest(points, sq_norms, a)]
    lower = 0.5 * float(np.linalg.norm(a - b))

    best_center = center.copy()
    best_radius = float(np.max(np.linalg.norm(points - center, axis=1)))
    last_step = np.inf
    k = 0
    for k in range(1, max_iter + 1):
        far = points[_farthest(points, sq_norms, center)]
        move = (far - center) / (k + 1.0)
        center += move
        last_step = float(np.linalg.norm(move))
        if last_step <= 0.05 * tol * max(best_radius, lower):
            break
    radius = float(np.max(np.linalg.norm(points - center, axis=1)))
    if radius < best_radius:
        best_center, best_radius = center, radius
    converged = (best_radius - lower) <= tol * best_radius or last_step <= 0.05 * tol * best_radius
    return Ball(
        center=best_center,
        radius=best_radius,
        iterations=k,
        converged=bool(converged),
        lower_bound=lower,
    )
