"""Discrete unit-speed curves and comparison tools.

A curve is a polyline whose consecutive vertices are (within tolerance)
equally spaced by ``nominal_step``; the discrete curvature at an interior
vertex is the turning angle between the adjacent edges divided by the
step.  On a circle of radius rho sampled with equal chords of length h
this estimator returns exactly (2/h) * asin(h / (2 rho)) (see
``sampled_circle_curvature``), and on equal-arc samples it returns
exactly 1/rho, so tests can set tolerances analytically; for smooth
curves it converges at rate O(h^2).

The module also provides:

* ``bow_check`` -- the classical endpoint comparison: a planar convex arc
  has endpoint distance no larger than any equally long curve of
  pointwise smaller (or equal) curvature, with planar congruence in the
  equality case.
* ``reflect_concat`` -- reflection of an initial arc across a hyperplane
  the curve is tangent to, keeping the curvature profile.
* ``monotonicity_check`` -- the chord/tangent inner product of a
  length-pi/2 curve with curvature below 2, which must be positive.
* ``fary_check`` -- average-curvature lower bound (>= 1) for closed
  curves inside the unit ball.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import numpy as np

from .ball import min_enclosing_ball

__all__ = [
    "DiscreteCurve",
    "Hyperplane",
    "InvalidComparison",
    "BowReport",
    "FaryReport",
    "discrete_curvature",
    "turning_angles",
    "sampled_circle_curvature",
    "sample_circle_arc",
    "sample_circle_chords",
    "straight_segment",
    "reflect_concat",
    "bow_check",
    "monotonicity_check",
    "fary_check",
    "fit_circle",
    "planarity_residual",
    "random_curvature_profile",
    "random_convex_arc",
    "random_space_curve",
    "random_closed_curve",
    "curve_to_csv",
    "curve_from_csv",
]


class InvalidComparison(ValueError):
    """A comparison was requested on inputs violating its preconditions."""


@dataclass
class DiscreteCurve:
    """Polyline approximation of a unit-speed curve.

    ``closed`` curves do not repeat the first vertex; the wrap-around edge
    from the last vertex back to the first is implied and is held to the
    same step tolerance.
    """

    vertices: np.ndarray
    nominal_step: float
    closed: bool = False
    edge_tol: float = 1e-9

    def __post_init__(self):
        self.vertices = np.asarray(self.vertices, dtype=float)
        if self.vertices.ndim != 2:
            raise ValueError("vertices must be a (N, D) array")
        if self.nominal_step <= 0.0:
            raise ValueError("nominal_step must be positive")
        n = len(self.vertices)
        if self.closed and n < 3:
            raise ValueError("closed curves need at least 3 vertices")
        lengths = np.linalg.norm(self.edges(), axis=1)
        if lengths.size:
            worst = float(np.max(np.abs(lengths - self.nominal_step)))
            if worst > self.edge_tol:
                raise ValueError(
                    f"edge lengths deviate from nominal_step by {worst:.3e} "
                    f"(tolerance {self.edge_tol:.1e})"
                )

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def dim(self) -> int:
        return self.vertices.shape[1]

    @property
    def n_edges(self) -> int:
        return self.n_vertices if self.closed else self.n_vertices - 1

    @property
    def length(self) -> float:
        return self.n_edges * self.nominal_step

    @property
    def endpoint_gap(self) -> float:
        if self.closed:
            return 0.0
        return float(np.linalg.norm(self.vertices[-1] - self.vertices[0]))

    def edges(self) -> np.ndarray:
        if self.closed:
            return np.roll(self.vertices, -1, axis=0) - self.vertices
        return np.diff(self.vertices, axis=0)

    def unit_tangents(self) -> np.ndarray:
        e = self.edges()
        return e / np.linalg.norm(e, axis=1, keepdims=True)


def turning_angles(curve: DiscreteCurve) -> np.ndarray:
    """Angle between consecutive edges, one value per interior vertex.

    For closed curves every vertex is interior and the result wraps; for
    open curves the endpoints carry no angle.
    """
    if curve.n_vertices < 3:
        raise ValueError("need at least 3 vertices for turning angles")
    t = curve.unit_tangents()
    if curve.closed:
        a, b = t, np.roll(t, -1, axis=0)
    else:
        a, b = t[:-1], t[1:]
    # 2*asin(|b - a|/2) is accurate for small angles and exact on unit vectors
    half_chord = 0.5 * np.linalg.norm(b - a, axis=1)
    return 2.0 * np.arcsin(np.clip(half_chord, 0.0, 1.0))


def discrete_curvature(curve: DiscreteCurve) -> np.ndarray:
    """Turning angle divided by the nominal step, per interior vertex."""
    return turning_angles(curve) / curve.nominal_step


def sampled_circle_curvature(step: float, radius: float) -> float:
    """Exact discrete curvature of a circle sampled with equal chords.

    Vertices on a circle of radius ``radius`` spaced by chords of length
    ``step`` turn by 2*asin(step / (2*radius)) at every vertex, so the
    discrete estimator reports (2/step)*asin(step/(2*radius)); the bias
    relative to 1/radius is O(step^2).  Equal-arc sampling instead gives
    exactly 1/radius.
    """
    return 2.0 * math.asin(step / (2.0 * radius)) / step


def _plane_embedding(dim: int):
    basis = np.zeros((2, dim))
    basis[0, 0] = 1.0
    basis[1, 1] = 1.0
    return basis


def sample_circle_arc(
    radius: float,
    arc_length: float | None,
    step: float,
    dim: int = 2,
    closed: bool = False,
) -> DiscreteCurve:
    """Circle vertices at equal-arc spacing (chords are O(step^3) short).

    ``arc_length`` is ignored for closed circles, where the step is
    adjusted so an integer number of edges closes up exactly.
    """
    if dim < 2:
        raise ValueError("need dim >= 2")
    basis = _plane_embedding(dim)
    if closed:
        total = 2.0 * math.pi * radius
        n = max(3, int(round(total / step)))
        h = total / n
        phis = 2.0 * math.pi * np.arange(n) / n
    else:
        if arc_length is None:
            raise ValueError("open arcs need arc_length")
        n = max(1, int(round(arc_length / step)))
        h = arc_length / n
        phis = (h / radius) * np.arange(n + 1)
    pts = radius * (np.cos(phis)[:, None] * basis[0] + np.sin(phis)[:, None] * basis[1])
    deficit = abs(h - 2.0 * radius * math.sin(h / (2.0 * radius)))
    return DiscreteCurve(pts, nominal_step=h, closed=closed, edge_tol=max(1e-9, 2.0 * deficit))


def sample_circle_chords(radius: float, n_edges: int, step: float, dim: int = 2) -> DiscreteCurve:
    """Open circle polyline whose edges are chords of length exactly ``step``."""
    if step >= 2.0 * radius:
        raise ValueError("chord step must be below the diameter")
    basis = _plane_embedding(dim)
    phi = 2.0 * math.asin(step / (2.0 * radius))
    phis = phi * np.arange(n_edges + 1)
    pts = radius * (np.cos(phis)[:, None] * basis[0] + np.sin(phis)[:, None] * basis[1])
    return DiscreteCurve(pts, nominal_step=step)


def straight_segment(length: float, step: float, dim: int = 2) -> DiscreteCurve:
    n = max(1, int(round(length / step)))
    h = length / n
    direction = np.zeros(dim)
    direction[0] = 1.0
    pts = np.outer(h * np.arange(n + 1), direction)
    return DiscreteCurve(pts, nominal_step=h)


# -- reflection surgery ------------------------------------------------------


@dataclass
class Hyperplane:
    """Affine hyperplane {x : <normal, x> = offset} with unit normal."""

    normal: np.ndarray
    offset: float = 0.0

    def __post_init__(self):
        self.normal = np.asarray(self.normal, dtype=float)
        norm = np.linalg.norm(self.normal)
        if norm == 0.0:
            raise ValueError("hyperplane normal must be nonzero")
        self.normal = self.normal / norm
        self.offset = float(self.offset)

    def signed_distance(self, points) -> np.ndarray:
        return np.asarray(points, float) @ self.normal - self.offset

    def reflect(self, points) -> np.ndarray:
        points = np.asarray(points, float)
        sd = self.signed_distance(points)
        return points - 2.0 * np.outer(np.atleast_1d(sd), self.normal).reshape(points.shape)


def reflect_concat(
    curve: DiscreteCurve,
    split_index: int,
    mirror: Hyperplane,
    angle_tol: float | None = None,
    position_tol: float = 1e-9,
) -> DiscreteCurve:
    """Reflect the initial arc across ``mirror`` and keep the tail.

    The split vertex must lie on the mirror (within ``position_tol``) and
    the curve must be tangent to the mirror there; for a polyline the
    adjacent edges meet a tangent hyperplane at angle O(step * curvature),
    so ``angle_tol`` defaults to 2 * nominal_step.  Under these conditions
    turning angles away from the split are exactly preserved (reflection
    is an isometry) and the turning angle at the split does not increase.
    """
    if curve.closed:
        raise InvalidComparison("reflection surgery applies to open curves")
    if angle_tol is None:
        angle_tol = 2.0 * curve.nominal_step
    n = curve.n_vertices
    if not 0 < split_index < n - 1:
        raise ValueError("split_index must be interior")
    split = curve.vertices[split_index]
    if abs(mirror.signed_distance(split)) > position_tol:
        raise InvalidComparison("split vertex does not lie on the mirror hyperplane")
    e_in = curve.vertices[split_index] - curve.vertices[split_index - 1]
    e_out = curve.vertices[split_index + 1] - curve.vertices[split_index]
    for e in (e_in, e_out):
        if abs(float(e @ mirror.normal)) > angle_tol * np.linalg.norm(e):
            raise InvalidComparison("curve is not tangent to the mirror at the split vertex")
    head = mirror.reflect(curve.vertices[: split_index + 1])
    new_vertices = np.vstack([head[:-1], curve.vertices[split_index:]])
    return DiscreteCurve(
        new_vertices,
        nominal_step=curve.nominal_step,
        edge_tol=max(curve.edge_tol, 4.0 * position_tol),
    )


# -- endpoint comparison -----------------------------------------------------


@dataclass
class BowReport:
    endpoint_gap_1: float
    endpoint_gap_2: float
    inequality_holds: bool
    rigidity_detected: bool
    alignment_residual: float


def planarity_residual(points) -> float:
    """Third singular value of the centered point cloud over the first."""
    points = np.asarray(points, dtype=float)
    centered = points - points.mean(axis=0)
    s = np.linalg.svd(centered, compute_uv=False)
    if s.size < 3 or s[0] == 0.0:
        return 0.0
    return float(s[2] / s[0])


def _principal_plane_coords(points: np.ndarray) -> np.ndarray:
    centered = points - points.mean(axis=0)
    _, _, vt = np.linalg.svd(centered, full_matrices=False)
    return centered @ vt[:2].T


def _signed_plane_turnings(coords2: np.ndarray) -> np.ndarray:
    e = np.diff(coords2, axis=0)
    a, b = e[:-1], e[1:]
    cross = a[:, 0] * b[:, 1] - a[:, 1] * b[:, 0]
    dot = np.einsum("ij,ij->i", a, b)
    return np.arctan2(cross, dot)


def _best_rigid_residual(a: np.ndarray, b: np.ndarray) -> float:
    """RMS residual of the best orthogonal alignment of b onto a."""
    d = max(a.shape[1], b.shape[1])
    pa = np.zeros((len(a), d))
    pa[:, : a.shape[1]] = a
    pb = np.zeros((len(b), d))
    pb[:, : b.shape[1]] = b
    pa -= pa.mean(axis=0)
    pb -= pb.mean(axis=0)
    u, _, vt = np.linalg.svd(pb.T @ pa)
    rot = u @ vt
    return float(np.sqrt(np.mean(np.sum((pb @ rot - pa) ** 2, axis=1))))


def bow_check(
    c1: DiscreteCurve,
    c2: DiscreteCurve,
    gap_tol: float = 1e-9,
    curvature_tol: float = 1e-9,
    planarity_tol: float = 1e-8,
    rigidity_tol: float = 1e-7,
) -> BowReport:
    """Endpoint comparison of a planar convex arc against a less curved curve.

    Preconditions (violation raises InvalidComparison, never a failed
    inequality): both curves open with equal step and vertex count; c1
    planar and convex (signed turning angles of one sign, total turning
    at most pi); the discrete curvature of c2 pointwise at most that of
    c1 plus ``curvature_tol``.

    The report states whether gap(c1) <= gap(c2) + gap_tol, and flags
    rigidity when the gaps agree within tolerance and c2 is congruent to
    c1 (best orthogonal alignment residual below ``rigidity_tol``).
    """
    if c1.closed or c2.closed:
        raise InvalidComparison("bow comparison is for open arcs")
    if c1.n_vertices != c2.n_vertices:
        raise InvalidComparison("curves must have the same number of vertices")
    if abs(c1.nominal_step - c2.nominal_step) > 1e-12 * max(c1.nominal_step, c2.nominal_step):
        raise InvalidComparison("curves must share the same step")
    if c1.n_vertices < 3:
        raise InvalidComparison("need at least 3 vertices")

    if planarity_residual(c1.vertices) > planarity_tol:
        raise InvalidComparison("reference curve is not planar")
    signed = _signed_plane_turnings(_principal_plane_coords(c1.vertices))
    angle_tol = curvature_tol * c1.nominal_step + 1e-12
    if not (np.all(signed >= -angle_tol) or np.all(signed <= angle_tol)):
        raise InvalidComparison("reference curve is not convex (mixed turning signs)")
    if float(np.sum(np.abs(signed))) > math.pi + 1e-9:
        raise InvalidComparison("reference curve turns by more than pi")

    k1 = discrete_curvature(c1)
    k2 = discrete_curvature(c2)
    if np.any(k2 > k1 + curvature_tol):
        raise InvalidComparison("comparison curve exceeds the reference curvature")

    gap1 = c1.endpoint_gap
    gap2 = c2.endpoint_gap
    holds = gap1 <= gap2 + gap_tol
    rigidity = False
    residual = math.inf
    if abs(gap1 - gap2) <= max(rigidity_tol, gap_tol):
        residual = _best_rigid_residual(c1.vertices, c2.vertices)
        rigidity = residual <= rigidity_tol
    return BowReport(
        endpoint_gap_1=gap1,
        endpoint_gap_2=gap2,
        inequality_holds=bool(holds),
        rigidity_detected=bool(rigidity),
        alignment_residual=residual,
    )


def monotonicity_check(
    curve: DiscreteCurve,
    t0_index: int,
    curvature_limit: float = 2.0,
    limit_margin: float = 1e-6,
    length_tol: float = 1e-9,
) -> float:
    """Inner product <y - x, tangent(t0)> for a length-pi/2 curve.

    Requires an open curve of total length pi/2 whose discrete curvature
    stays below ``curvature_limit - limit_margin``; under that hypothesis
    the returned value is strictly positive (it exceeds the integral of
    cos(2|t - t0|), which is sin(2 t0) >= 0).
    """
    if curve.closed:
        raise InvalidComparison("monotonicity check applies to open curves")
    if abs(curve.length - math.pi / 2.0) > length_tol:
        raise InvalidComparison(f"curve length {curve.length:.12g} is not pi/2")
    kmax = float(np.max(discrete_curvature(curve))) if curve.n_vertices >= 3 else 0.0
    if kmax >= curvature_limit - limit_margin:
        raise InvalidComparison(
            f"max curvature {kmax:.6g} violates the bound {curvature_limit} - {limit_margin}"
        )
    if not 0 <= t0_index < curve.n_vertices:
        raise ValueError("t0_index out of range")
    t = curve.unit_tangents()
    if t0_index == 0:
        tangent = t[0]
    elif t0_index == curve.n_vertices - 1:
        tangent = t[-1]
    else:
        tangent = t[t0_index - 1] + t[t0_index]
        tangent = tangent / np.linalg.norm(tangent)
    chord = curve.vertices[-1] - curve.vertices[0]
    return float(chord @ tangent)


@dataclass
class FaryReport:
    average_curvature: float
    bound_satisfied: bool
    enclosing_radius: float


def fary_check(curve: DiscreteCurve, slack: float = 5e-3, ball_tol: float = 1e-3) -> FaryReport:
    """Average-curvature bound for a closed curve inside the unit ball.

    The average of the discrete curvature over arc length must be at
    least 1 - ``slack``.  Raises on open curves or curves not contained
    in the unit ball (up to the enclosing-ball tolerance).
    """
    if not curve.closed:
        raise InvalidComparison("average-curvature bound applies to closed curves")
    pts = curve.vertices
    if len(pts) > 1500:
        sub = pts[:: max(1, len(pts) // 1000)]
    else:
        sub = pts
    # each candidate center certifies an upper bound on the minimal radius
    candidates = [
        np.zeros(curve.dim),
        pts.mean(axis=0),
        min_enclosing_ball(sub, tol=ball_tol).center,
    ]
    radius = min(float(np.max(np.linalg.norm(pts - c, axis=1))) for c in candidates)
    if radius > 1.0 + 1e-6:
        raise InvalidComparison(f"curve is not contained in the unit ball (radius {radius:.6g})")
    average = float(np.sum(turning_angles(curve))) / curve.length
    return FaryReport(
        average_curvature=average,
        bound_satisfied=bool(average >= 1.0 - slack),
        enclosing_radius=radius,
    )


# -- circle fitting ----------------------------------------------------------


def fit_circle(points) -> tuple[np.ndarray, float, float]:
    """Best-fit circle of near-planar points in R^D.

    Projects onto the two principal axes and solves the algebraic
    least-squares circle fit.  Returns (center in R^D, radius, RMS radial
    residual); exact on noise-free circles.
    """
    points = np.asarray(points, dtype=float)
    if len(points) < 3:
        raise ValueError("circle fitting needs at least 3 points")
    mean = points.mean(axis=0)
    centered = points - mean
    _, _, vt = np.linalg.svd(centered, full_matrices=False)
    plane = vt[:2]
    xy = centered @ plane.T
    a = np.column_stack([2.0 * xy, np.ones(len(xy))])
    b = np.einsum("ij,ij->i", xy, xy)
    sol, *_ = np.linalg.lstsq(a, b, rcond=None)
    c2 = sol[:2]
    radius = math.sqrt(max(sol[2] + float(c2 @ c2), 0.0))
    residual = float(np.sqrt(np.mean((np.linalg.norm(xy - c2, axis=1) - radius) ** 2)))
    center = mean + c2 @ plane
    return center, radius, residual


# -- randomized generators ---------------------------------------------------


def random_curvature_profile(
    rng: np.random.Generator, n: int, high: float, low: float = 0.0
) -> np.ndarray:
    """Smooth random curvature values in [low, high] on n grid points."""
    s = np.linspace(0.0, 1.0, n)
    raw = np.zeros(n)
    for k in range(1, 4):
        amp = rng.standard_normal() / k
        phase = rng.uniform(0.0, 2.0 * math.pi)
        raw += amp * np.sin(2.0 * math.pi * k * s + phase)
    raw -= raw.min()
    if raw.max() > 0:
        raw /= raw.max()
    return low + (high - low) * raw


def random_convex_arc(
    rng: np.random.Generator,
    n_edges: int,
    step: float,
    max_curvature: float,
    turning_cap: float = 0.98 * math.pi,
) -> DiscreteCurve:
    """Planar convex arc with curvature in (0, max_curvature].

    Turning angles are rescaled if needed so the total turning stays
    below ``turning_cap`` (an arc of a convex curve).
    """
    kappa = random_curvature_profile(rng, n_edges - 1, max_curvature, low=0.0)
    theta = kappa * step
    total = float(np.sum(theta))
    if total > turning_cap:
        theta *= turning_cap / total
    phi = np.concatenate([[0.0], np.cumsum(theta)])
    tangents = np.column_stack([np.cos(phi), np.sin(phi)])
    vertices = np.vstack([np.zeros(2), np.cumsum(step * tangents, axis=0)])
    return DiscreteCurve(vertices, nominal_step=step)


def random_space_curve(
    rng: np.random.Generator,
    turning: np.ndarray,
    step: float,
    dim: int = 3,
) -> DiscreteCurve:
    """Curve in R^dim realizing the prescribed turning angles exactly.

    At each interior vertex the tangent is rotated by the given angle
    toward a random unit normal, which produces arbitrary torsion-like
    twisting while keeping the discrete curvature profile exact.
    """
    turning = np.asarray(turning, dtype=float)
    n_edges = len(turning) + 1
    t = rng.standard_normal(dim)
    t /= np.linalg.norm(t)
    tangents = np.empty((n_edges, dim))
    tangents[0] = t
    for i, theta in enumerate(turning):
        xi = rng.standard_normal(dim)
        normal = xi - (xi @ t) * t
        nn = np.linalg.norm(normal)
        while nn < 1e-12:
            xi = rng.standard_normal(dim)
            normal = xi - (xi @ t) * t
            nn = np.linalg.norm(normal)
        normal /= nn
        t = math.cos(theta) * t + math.sin(theta) * normal
        t /= np.linalg.norm(t)
        tangents[i + 1] = t
    vertices = np.vstack([np.zeros(dim), np.cumsum(step * tangents, axis=0)])
    return DiscreteCurve(vertices, nominal_step=step)


def random_closed_curve(
    rng: np.random.Generator,
    dim: int = 3,
    harmonics: int = 3,
    step_target: float = 1e-3,
    max_curvature: float = 5.5,
    max_attempts: int = 200,
) -> DiscreteCurve:
    """Random smooth closed curve, resampled by arc length and scaled to
    fit exactly inside the unit ball.

    The curve is a random trigonometric loop; draws whose scaled
    curvature would break the equal-edge tolerance at the target step are
    rejected and redrawn.  Arc length comes from a fine cumulative
    Simpson rule; equal-arc parameters are found by spline inversion plus
    Newton refinement, so vertices lie on the smooth curve at equally
    spaced arc positions up to ~1e-12.
    """
    from scipy.interpolate import CubicSpline

    for _ in range(max_attempts):
        ks = np.arange(1, harmonics + 1)
        coef_cos = rng.standard_normal((harmonics, dim)) / ks[:, None] ** 2
        coef_sin = rng.standard_normal((harmonics, dim)) / ks[:, None] ** 2

        def c(u):
            u = np.atleast_1d(u)
            arg = np.outer(u, ks)
            return np.cos(arg) @ coef_cos + np.sin(arg) @ coef_sin

        def c1(u):
            u = np.atleast_1d(u)
            arg = np.outer(u, ks)
            return (-np.sin(arg) * ks) @ coef_cos + (np.cos(arg) * ks) @ coef_sin

        dense = np.linspace(0.0, 2.0 * math.pi, 4096, endpoint=False)
        d1 = c1(dense)
        arg = np.outer(dense, ks)
        d2 = (-np.cos(arg) * ks**2) @ coef_cos + (-np.sin(arg) * ks**2) @ coef_sin
        speed = np.linalg.norm(d1, axis=1)
        if speed.min() < 0.25 * speed.mean():
            continue
        cross_sq = np.einsum("ij,ij->i", d1, d1) * np.einsum("ij,ij->i", d2, d2) - (
            np.einsum("ij,ij->i", d1, d2)
        ) ** 2
        kappa = np.sqrt(np.maximum(cross_sq, 0.0)) / speed**3

        probe = c(dense[::16])
        radius_est = float(np.max(np.linalg.norm(probe - probe.mean(axis=0), axis=1)))
        if float(kappa.max()) * radius_est > max_curvature:
            continue

        # cumulative Simpson arc length on a fine grid, then invert
        panels = 8192
        grid = np.linspace(0.0, 2.0 * math.pi, 2 * panels + 1)
        f = np.linalg.norm(c1(grid), axis=1)
        du = grid[1] - grid[0]
        increments = (du / 3.0) * (f[0:-2:2] + 4.0 * f[1::2] + f[2::2])
        s_even = np.concatenate([[0.0], np.cumsum(increments)])
        u_even = grid[::2]
        total = float(s_even[-1])

        h_eff = step_target * min(1.0, 0.75 * radius_est)
        n = int(np.clip(round(total / h_eff), 64, 40000))
        h = total / n
        targets = h * np.arange(n)
        forward = CubicSpline(u_even, s_even)
        u = CubicSpline(s_even, u_even)(targets)
        for _newton in range(2):
            u = u - (forward(u) - targets) / np.linalg.norm(c1(u), axis=1)
        vertices = c(u)

        sub = vertices[:: max(1, n // 800)]
        center = min_enclosing_ball(sub, tol=1e-3).center
        scale = float(np.max(np.linalg.norm(vertices - center, axis=1)))
        vertices = (vertices - center) / scale
        try:
            return DiscreteCurve(vertices, nominal_step=h / scale, closed=True)
        except ValueError:
            continue
    raise RuntimeError("failed to draw an acceptable closed curve")


# -- serialization -----------------------------------------------------------


def curve_to_csv(curve: DiscreteCurve, path) -> None:
    """One vertex per row; step and closedness recorded in a comment line."""
    with open(path, "w", newline="") as fh:
        fh.write(
            f"# nominal_step={curve.nominal_step!r} closed={int(curve.closed)} "
            f"edge_tol={curve.edge_tol!r}\n"
        )
        writer = csv.writer(fh)
        writer.writerow([f"x{i}" for i in range(curve.dim)])
        writer.writerows(curve.vertices.tolist())


def curve_from_csv(path) -> DiscreteCurve:
    with open(path, newline="") as fh:
        header = fh.readline().strip()
        if not header.startswith("#"):
            raise ValueError("missing metadata comment line")
        meta = dict(item.split("=") for item in header[1:].split())
        rows = list(csv.reader(fh))
    vertices = np.array(rows[1:], dtype=float)
    return DiscreteCurve(
        vertices,
        nominal_step=float(meta["nominal_step"]),
        closed=bool(int(meta["closed"])),
        edge_tol=float(meta.get("edge_tol", 1e-9)),
    )
