"""Scaled Veronese embeddings of projective spaces over R, C, H, O.

A projective point with unit homogeneous representative v in A^m
(m = n + 1) maps to the flat coordinates of

    X = (v v* - I/m) / sqrt(2),

the centered, rescaled rank-one projection.  With this normalization the
image lies on the sphere of radius r_n = sqrt(n / (2n + 2)), geodesics
are unit-speed planar circles of radius 1/2 that close after length pi,
and the chordal distance between two points equals sin(theta) for
intrinsic distance theta in [0, pi/2].

Octonionic projective points exist only for m = 3 (the Albert algebra),
and a homogeneous vector is admissible only when its entries generate an
associative subalgebra -- e.g. when one entry is real, which covers all
of OP^2 chart by chart.  Admissibility is enforced by checking the
idempotency of the resulting matrix, which is exactly what fails for an
inadmissible representative.

``variety`` builds the quadratic constraint presentation

    {X o X = X, tr X = 1}   (in centered, scaled coordinates)

as an ImplicitManifold with exact constant Hessian, which is how points,
tangents, curvatures, and geodesics are computed uniformly over all four
algebras, including the nonassociative one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .algebra import Algebra, algebra_by_kind
from .ambient import SQRT2, HermitianMatrix, flat_dim, flatten, jordan_product, unflatten
from .manifold import ImplicitManifold

__all__ = [
    "VeroneseSpace",
    "GeodesicCircle",
    "space",
    "space_from_name",
    "standard_planes",
    "point_from_homogeneous",
    "base_point",
    "random_homogeneous",
    "random_frame",
    "sample_points",
    "geodesic_circle",
    "chordal_distance",
    "intrinsic_distance",
    "simplex_circumradius",
    "variety",
]


@dataclass(frozen=True)
class VeroneseSpace:
    """Projective space KP^n with its centered, rescaled projection model."""

    algebra: Algebra
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("projective dimension must be at least 1")
        if self.algebra.kind == "octonion" and self.n != 2:
            raise ValueError("the octonionic projective space exists only for n = 2")

    @property
    def m(self) -> int:
        return self.n + 1

    @property
    def sphere_radius(self) -> float:
        return math.sqrt(self.n / (2.0 * self.n + 2.0))

    @property
    def flat_dim(self) -> int:
        return flat_dim(self.algebra, self.m)

    @property
    def intrinsic_dim(self) -> int:
        return self.n * self.algebra.dim

    @property
    def name(self) -> str:
        letter = {"real": "R", "complex": "C", "quaternion": "H", "octonion": "O"}
        return f"{letter[self.algebra.kind]}P{self.n}"


_KIND_FROM_LETTER = {"r": "real", "c": "complex", "h": "quaternion", "o": "octonion"}


def space(kind: str, n: int) -> VeroneseSpace:
    return VeroneseSpace(algebra_by_kind(kind), n)


def space_from_name(name: str) -> VeroneseSpace:
    """Parse names like 'rp2', 'CP3', 'op2'."""
    label = name.strip().lower()
    if len(label) < 3 or label[1] != "p" or label[0] not in _KIND_FROM_LETTER:
        raise ValueError(f"unrecognized space name {name!r}")
    return space(_KIND_FROM_LETTER[label[0]], int(label[2:]))


def standard_planes() -> tuple[VeroneseSpace, ...]:
    """The four projective planes RP2, CP2, HP2, OP2."""
    return tuple(space(kind, 2) for kind in ("real", "complex", "quaternion", "octonion"))


# -- homogeneous vectors -----------------------------------------------------


def _hermitian_dot(alg: Algebra, u: np.ndarray, w: np.ndarray) -> np.ndarray:
    """sum_i conj(u_i) * w_i, an algebra element."""
    uc = u * alg.conj_signs
    return np.einsum("pqk,ip,iq->k", alg.table, uc, w)


def _coerce_vector(spc: VeroneseSpace, v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if v.shape != (spc.m, spc.algebra.dim):
        raise ValueError(
            f"expected homogeneous vector of shape ({spc.m}, {spc.algebra.dim}), "
            f"got {v.shape}"
        )
    return v


def _projection_matrix(spc: VeroneseSpace, v: np.ndarray, tol: float = 1e-9) -> HermitianMatrix:
    norm = np.linalg.norm(v)
    if abs(norm - 1.0) > tol:
        raise ValueError(f"homogeneous representative must be unit (got |v| = {norm:.12g})")
    proj = HermitianMatrix.outer(spc.algebra, v)
    if spc.algebra.kind == "octonion":
        drift = (jordan_product(proj, proj) - proj).frobenius_norm()
        if drift > 1e-10:
            raise ValueError(
                "invalid octonionic representative: entries do not generate "
                f"an associative subalgebra (idempotency defect {drift:.2e})"
            )
    return proj


def point_from_homogeneous(spc: VeroneseSpace, v) -> np.ndarray:
    """Flat coordinates of the centered, rescaled projection of v."""
    v = _coerce_vector(spc, v)
    proj = _projection_matrix(spc, v)
    centered = proj - HermitianMatrix.identity(spc.algebra, spc.m) * (1.0 / spc.m)
    return flatten(centered * (1.0 / SQRT2))


def base_point(spc: VeroneseSpace) -> np.ndarray:
    """Image of the first coordinate axis (the projection diag(1, 0, ..., 0))."""
    e1 = np.zeros((spc.m, spc.algebra.dim))
    e1[0, 0] = 1.0
    return point_from_homogeneous(spc, e1)


def random_homogeneous(spc: VeroneseSpace, rng: np.random.Generator) -> np.ndarray:
    """Random unit representative; for O, one random entry is kept real."""
    alg = spc.algebra
    v = alg.random(rng, (spc.m,))
    if alg.kind == "octonion":
        pos = int(rng.integers(spc.m))
        v[pos, 1:] = 0.0
        while abs(v[pos, 0]) < 0.1:
            v[pos, 0] = rng.standard_normal()
    return v / np.linalg.norm(v)


def random_frame(spc: VeroneseSpace, rng: np.random.Generator) -> np.ndarray:
    """Orthonormal frame (m unit vectors, pairwise Hermitian-orthogonal).

    Gram-Schmidt over the algebra.  For the octonions the first vector has
    a real entry and the completion uses standard basis columns, so every
    product stays inside the associative subalgebra generated by the two
    non-real entries and the resulting projections are exact idempotents.
    """
    alg = spc.algebra
    m = spc.m
    v0 = random_homogeneous(spc, rng)
    if alg.kind == "octonion":
        anchor = int(np.argmax(np.linalg.norm(v0, axis=1)))
        cols = [v0]
        for j in range(m):
            if j == anchor:
                continue
            e = np.zeros((m, alg.dim))
            e[j, 0] = 1.0
            cols.append(e)
    else:
        cols = [v0] + [alg.random(rng, (m,)) for _ in range(m - 1)]

    frame = np.empty((m, m, alg.dim))
    count = 0
    for col in cols:
        w = col.copy()
        for i in range(count):
            coeff = _hermitian_dot(alg, frame[i], w)
            w = w - np.einsum("pqk,ip,q->ik", alg.table, frame[i], coeff)
        norm = np.linalg.norm(w)
        if norm < 1e-8:
            raise RuntimeError("degenerate frame draw")
        frame[count] = w / norm
        count += 1
    return frame


def sample_points(spc: VeroneseSpace, count: int, rng: np.random.Generator) -> np.ndarray:
    """Sample points as complete orthonormal frames.

    Each frame contributes m projections summing to the identity, so the
    centered images of a full frame sum to zero; the returned array holds
    the first ``count`` points.
    """
    points = []
    while len(points) < count:
        frame = random_frame(spc, rng)
        for k in range(spc.m):
            points.append(point_from_homogeneous(spc, frame[k]))
    return np.asarray(points[:count])


# -- closed-form geodesics ---------------------------------------------------


@dataclass
class GeodesicCircle:
    """Unit-speed closed geodesic t -> center + cos(2t) a + sin(2t) b.

    The image is a planar circle of radius |a| = 1/2 traversed with period
    pi; ``__call__`` accepts scalars or arrays of arc-length parameters.
    """

    center: np.ndarray
    axis_a: np.ndarray
    axis_b: np.ndarray
    period: float = math.pi

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        phase = 2.0 * t
        return (
            self.center
            + np.multiply.outer(np.cos(phase), self.axis_a)
            + np.multiply.outer(np.sin(phase), self.axis_b)
        )

    def velocity(self, t):
        t = np.asarray(t, dtype=float)
        phase = 2.0 * t
        return 2.0 * (
            -np.multiply.outer(np.sin(phase), self.axis_a)
            + np.multiply.outer(np.cos(phase), self.axis_b)
        )

    @property
    def radius(self) -> float:
        return float(np.linalg.norm(self.axis_a))


def geodesic_circle(spc: VeroneseSpace, v, w, tol: float = 1e-10) -> GeodesicCircle:
    """Closed-form geodesic through the points of v and of cos t v + sin t w.

    Requires v, w orthonormal (unit, Hermitian inner product zero) over an
    associative algebra; octonionic geodesics come from the integrator on
    the ``variety`` instead.
    """
    if spc.algebra.kind == "octonion":
        raise ValueError("closed-form circles need an associative algebra; integrate instead")
    v = _coerce_vector(spc, v)
    w = _coerce_vector(spc, w)
    for vec, label in ((v, "v"), (w, "w")):
        if abs(np.linalg.norm(vec) - 1.0) > tol:
            raise ValueError(f"{label} must be a unit vector")
    inner = _hermitian_dot(spc.algebra, v, w)
    if np.max(np.abs(inner)) > tol:
        raise ValueError("v and w must be Hermitian-orthogonal")
    pv = HermitianMatrix.outer(spc.algebra, v)
    pw = HermitianMatrix.outer(spc.algebra, w)
    cross = HermitianMatrix.outer(spc.algebra, v + w) - pv - pw  # v w* + w v*
    identity = HermitianMatrix.identity(spc.algebra, spc.m)
    center = flatten(((pv + pw) * 0.5 - identity * (1.0 / spc.m)) * (1.0 / SQRT2))
    axis_a = flatten((pv - pw) * (0.5 / SQRT2))
    axis_b = flatten(cross * (0.5 / SQRT2))
    return GeodesicCircle(center=center, axis_a=axis_a, axis_b=axis_b)


# -- distances ---------------------------------------------------------------


def chordal_distance(spc: VeroneseSpace, p, q) -> float:
    """Euclidean distance between embedded points; equals sin of the
    intrinsic distance."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if p.shape != (spc.flat_dim,) or q.shape != (spc.flat_dim,):
        raise ValueError("points do not match the space's flat dimension")
    return float(np.linalg.norm(p - q))


def intrinsic_distance(spc: VeroneseSpace, v, w) -> float:
    """Geodesic distance arccos |<v, w>| between projective points
    (associative algebras)."""
    if not spc.algebra.is_associative:
        raise ValueError("intrinsic distance from representatives needs associativity")
    v = _coerce_vector(spc, v)
    w = _coerce_vector(spc, w)
    inner = _hermitian_dot(spc.algebra, v, w)
    return math.acos(min(1.0, float(np.linalg.norm(inner))))


def simplex_circumradius(k: int, edge: float) -> float:
    """Circumradius of k points pairwise at distance ``edge`` (a regular
    (k-1)-simplex): edge * sqrt((k-1) / (2k))."""
    if k < 2:
        raise ValueError("need at least two points")
    if edge <= 0.0:
        raise ValueError("edge must be positive")
    return edge * math.sqrt((k - 1) / (2.0 * k))


# -- implicit variety --------------------------------------------------------


@lru_cache(maxsize=None)
def _variety_tensors(kind: str, n: int):
    spc = space(kind, n)
    alg = spc.algebra
    m = spc.m
    d = spc.flat_dim
    c_rows = d + 1

    basis = np.stack([unflatten(e, alg, m).entries for e in np.eye(d)])
    prod = np.einsum("pqk,aijp,bjlq->abilk", alg.table, basis, basis, optimize=True)
    sym = 0.5 * (prod + prod.transpose(1, 0, 2, 3, 4))  # jordan products of basis pairs

    # flatten the (a, b) family of matrices: diag then sqrt(2)-scaled upper entries
    diag = sym[:, :, np.arange(m), np.arange(m), 0]
    iu, ju = np.triu_indices(m, k=1)
    off = SQRT2 * sym[:, :, iu, ju, :].reshape(d, d, -1)
    q_flat = np.concatenate([diag, off], axis=2)  # (d, d, d)

    quad = np.zeros((c_rows, d, d))
    quad[:d] = 2.0 * np.moveaxis(q_flat, 2, 0)

    identity_flat = flatten(HermitianMatrix.identity(alg, m))
    linear = np.zeros((c_rows, d))
    linear[:d] = SQRT2 * (2.0 / m - 1.0) * np.eye(d)
    linear[d] = SQRT2 * identity_flat

    const = np.zeros(c_rows)
    const[:d] = (1.0 / m**2 - 1.0 / m) * identity_flat

    quad.setflags(write=False)
    linear.setflags(write=False)
    const.setflags(write=False)
    return quad, linear, const


def variety(spc: VeroneseSpace) -> ImplicitManifold:
    """The scaled projection variety {X o X = X, tr X = 1} as an implicit
    manifold in flat coordinates.

    The constraint is quadratic; its coefficient tensors are precomputed
    once per space, so constraint, Jacobian, and the exact constant
    Hessian are single einsum evaluations.
    """
    quad, linear, const = _variety_tensors(spc.algebra.kind, spc.n)

    def constraint(y: np.ndarray) -> np.ndarray:
        return const + linear @ y + np.einsum("cab,a,b->c", quad, y, y)

    def jacobian(y: np.ndarray) -> np.ndarray:
        return linear + 2.0 * np.einsum("cab,b->ca", quad, y)

    def hessian(u: np.ndarray, v: np.ndarray) -> np.ndarray:
        return 2.0 * np.einsum("cab,a,b->c", quad, u, v)

    return ImplicitManifold(
        ambient_dim=spc.flat_dim,
        constraint=constraint,
        jacobian=jacobian,
        hessian=hessian,
        base_point=base_point(spc),
        intrinsic_dim=spc.intrinsic_dim,
        name=spc.name,
    )
