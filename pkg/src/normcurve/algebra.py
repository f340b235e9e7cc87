"""The four normed division algebras over the reals: R, C, H, and O.

Elements are coefficient vectors in the fixed basis (1, e1, ..., e_{d-1})
with d in {1, 2, 4, 8}.  Products come from a dense structure-constant
tensor built once per algebra by Cayley-Dickson doubling with the
convention

    (a, b) * (c, d) = (a*c - conj(d)*b,  d*a + b*conj(c)),

which reproduces the standard quaternion table (i*j = k) and yields the
octonions as pairs of quaternions.  All operations accept numpy arrays
whose trailing axis holds the coefficients, so they vectorize over
leading axes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "Algebra",
    "AlgebraElement",
    "REAL",
    "COMPLEX",
    "QUATERNION",
    "OCTONION",
    "ALGEBRAS",
    "algebra_by_kind",
    "multiply",
    "conjugate",
]

_KIND_DIMS = {"real": 1, "complex": 2, "quaternion": 4, "octonion": 8}


def _doubled(table: np.ndarray) -> np.ndarray:
    """One Cayley-Dickson doubling step applied to a structure tensor.

    ``table[i, j, k]`` is the coefficient of e_k in the product e_i * e_j
    of the half-dimensional algebra.
    """
    h = table.shape[0]
    conj = -np.ones(h)
    conj[0] = 1.0
    out = np.zeros((2 * h, 2 * h, 2 * h))
    for p in range(h):
        for q in range(h):
            for k in range(h):
                s = table[p, q, k]
                if s == 0.0:
                    continue
                # x = (a, b), y = (c, d); xy = (ac - conj(d) b, da + b conj(c))
                out[p, q, k] += s
                out[h + q, h + p, k] -= conj[p] * s
                out[q, h + p, h + k] += s
                out[h + p, q, h + k] += conj[q] * s
    return out


@lru_cache(maxsize=None)
def _structure_tensor(dim: int) -> np.ndarray:
    if dim == 1:
        t = np.ones((1, 1, 1))
    else:
        t = _doubled(_structure_tensor(dim // 2))
    t.setflags(write=False)
    return t


class Algebra:
    """One of R, C, H, O, identified by its multiplication tensor.

    Use the module-level singletons ``REAL``, ``COMPLEX``, ``QUATERNION``,
    ``OCTONION`` instead of constructing new instances.
    """

    def __init__(self, kind: str):
        if kind not in _KIND_DIMS:
            raise ValueError(f"unknown algebra kind {kind!r}")
        self.kind = kind
        self.dim = _KIND_DIMS[kind]
        self.table = _structure_tensor(self.dim)
        signs = -np.ones(self.dim)
        signs[0] = 1.0
        signs.setflags(write=False)
        self.conj_signs = signs

    def __repr__(self) -> str:
        return f"Algebra({self.kind!r})"

    @property
    def is_associative(self) -> bool:
        return self.dim <= 4

    def _coerce(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if x.shape[-1:] != (self.dim,):
            raise ValueError(
                f"expected trailing axis of length {self.dim} for {self.kind}, "
                f"got shape {x.shape}"
            )
        return x

    def multiply(self, x, y) -> np.ndarray:
        """Algebra product; broadcasts over leading axes."""
        x = self._coerce(x)
        y = self._coerce(y)
        return np.einsum("ijk,...i,...j->...k", self.table, x, y)

    def conjugate(self, x) -> np.ndarray:
        """Negate all imaginary coefficients."""
        return self._coerce(x) * self.conj_signs

    def norm(self, x) -> np.ndarray:
        return np.linalg.norm(self._coerce(x), axis=-1)

    def real_part(self, x) -> np.ndarray:
        return self._coerce(x)[..., 0]

    def zero(self) -> np.ndarray:
        return np.zeros(self.dim)

    def one(self) -> np.ndarray:
        return self.from_real(1.0)

    def from_real(self, r: float) -> np.ndarray:
        out = np.zeros(self.dim)
        out[0] = float(r)
        return out

    def basis(self, i: int) -> np.ndarray:
        if not 0 <= i < self.dim:
            raise ValueError(f"basis index {i} out of range for {self.kind}")
        out = np.zeros(self.dim)
        out[i] = 1.0
        return out

    def random(self, rng: np.random.Generator, shape=()) -> np.ndarray:
        """Standard Gaussian coefficients, shape ``shape + (dim,)``."""
        return rng.standard_normal(tuple(shape) + (self.dim,))

    def element(self, coeffs) -> "AlgebraElement":
        return AlgebraElement(self, self._coerce(coeffs).copy())


@dataclass(frozen=True)
class AlgebraElement:
    """A single algebra element: a tag plus a coefficient vector."""

    algebra: Algebra
    coeffs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "coeffs", self.algebra._coerce(self.coeffs))

    def _check_tag(self, other: "AlgebraElement") -> None:
        if self.algebra is not other.algebra:
            raise ValueError(
                f"algebra mismatch: {self.algebra.kind} vs {other.algebra.kind}"
            )

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._check_tag(other)
            return AlgebraElement(self.algebra, self.algebra.multiply(self.coeffs, other.coeffs))
        return AlgebraElement(self.algebra, self.coeffs * float(other))

    def __rmul__(self, other):
        return AlgebraElement(self.algebra, float(other) * self.coeffs)

    def __add__(self, other: "AlgebraElement"):
        self._check_tag(other)
        return AlgebraElement(self.algebra, self.coeffs + other.coeffs)

    def __sub__(self, other: "AlgebraElement"):
        self._check_tag(other)
        return AlgebraElement(self.algebra, self.coeffs - other.coeffs)

    def __neg__(self):
        return AlgebraElement(self.algebra, -self.coeffs)

    def conjugate(self) -> "AlgebraElement":
        return AlgebraElement(self.algebra, self.algebra.conjugate(self.coeffs))

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    @property
    def real(self) -> float:
        return float(self.coeffs[0])

    def allclose(self, other: "AlgebraElement", atol: float = 1e-12) -> bool:
        self._check_tag(other)
        return bool(np.allclose(self.coeffs, other.coeffs, rtol=0.0, atol=atol))


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Product of two elements of the same algebra."""
    return x * y


def conjugate(x: AlgebraElement) -> AlgebraElement:
    """Conjugation (negates imaginary coefficients)."""
    return x.conjugate()


REAL = Algebra("real")
COMPLEX = Algebra("complex")
QUATERNION = Algebra("quaternion")
OCTONION = Algebra("octonion")

ALGEBRAS = (REAL, COMPLEX, QUATERNION, OCTONION)
_BY_KIND = {a.kind: a for a in ALGEBRAS}


def algebra_by_kind(kind: str) -> Algebra:
    try:
        return _BY_KIND[kind]
    except KeyError:
        raise ValueError(f"unknown algebra kind {kind!r}") from None
