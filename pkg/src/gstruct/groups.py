"""Connection families on compact Lie groups with biinvariant metrics:
the per-ideal commutator-rescaling torsion family, kernels of the
skew-torsion compatibility map for adjoint embeddings, and the two
exceptional equivariant bilinear maps with their metricity defects.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import reps
from .errors import DimensionMismatch, NotAnIdeal
from .liealg import CoordinateFrame, MatrixLieAlgebra, inner, structure_constants
from .linalg import DEFAULT_TOL, ToleranceProfile


def su_algebra(n: int) -> MatrixLieAlgebra:
    """su(n) with an orthonormal basis under -Re tr(XY)."""
    from .sp3 import E, S

    basis = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            basis.append(E(n, i, j) / np.sqrt(2.0))
            basis.append(1j * S(n, i, j) / np.sqrt(2.0))
    diag = []
    for k in range(1, n):
        diag.append(1j * (S(n, k, k) - S(n, k + 1, k + 1)))
    # orthonormalize the torus part (deterministic Gram-Schmidt)
    ortho = []
    for d in diag:
        v = d.copy()
        for u in ortho:
            v = v - inner(v, u) * u
        ortho.append(v / np.sqrt(inner(v, v)))
    return MatrixLieAlgebra(f"su{n}", tuple(basis + ortho))


def u_algebra(n: int) -> MatrixLieAlgebra:
    base = su_algebra(n)
    center = 1j * np.eye(n) / np.sqrt(n)
    return MatrixLieAlgebra(f"u{n}", tuple(base.basis) + (center,))


def su2_plus_su2() -> MatrixLieAlgebra:
    a = su_algebra(2)
    basis = []
    for b in a.basis:
        m = np.zeros((4, 4), dtype=complex)
        m[:2, :2] = b
        basis.append(m)
    for b in a.basis:
        m = np.zeros((4, 4), dtype=complex)
        m[2:, 2:] = b
        basis.append(m)
    return MatrixLieAlgebra("su2+su2", tuple(basis))


@dataclass(frozen=True)
class BilinearConnectionMap:
    """A bilinear map on the algebra, tabulated over the basis:
    table[i, j] = coefficients of lambda(b_i, b_j)."""

    algebra: MatrixLieAlgebra
    table: np.ndarray
    symmetry: str  # "symmetric" | "antisymmetric" | "none"

    def apply(self, X, Y):
        frame = CoordinateFrame(list(self.algebra.basis))
        cx, _ = frame.coords(X)
        cy, _ = frame.coords(Y)
        coeffs = np.einsum("i,j,ijk->k", cx, cy, self.table)
        return sum(c * b for c, b in zip(coeffs, self.algebra.basis))


def commutator_map(alg: MatrixLieAlgebra, scale: float = 0.5) -> BilinearConnectionMap:
    c = structure_constants(alg)
    return BilinearConnectionMap(algebra=alg, table=scale * c, symmetry="antisymmetric")


def verify_ideals(alg: MatrixLieAlgebra, ideal_partition, tol: ToleranceProfile = DEFAULT_TOL):
    """Each block of the partition must be an ideal: [g, block] in block."""
    c = structure_constants(alg, tol)
    for block in ideal_partition:
        block = set(block)
        outside = [k for k in range(alg.dim) if k not in block]
        for i in range(alg.dim):
            for j in block:
                leak = np.linalg.norm(c[i, j, outside])
                if leak > 1e3 * tol.residual_tol * max(np.linalg.norm(c[i, j]), 1.0):
                    raise NotAnIdeal(f"block {sorted(block)} is not an ideal (leak {leak:.3e})")
    return c


def canonical_torsion_family(alg: MatrixLieAlgebra, ideal_partition, tol: ToleranceProfile = DEFAULT_TOL):
    """One torsion 3-form per (non-abelian) ideal: the commutator rescaled
    on that ideal, as vectors over increasing basis triples."""
    c = verify_ideals(alg, ideal_partition, tol)
    trips = reps.triples(alg.dim)
    family = []
    for block in ideal_partition:
        block = set(block)
        v = np.array([c[i, j, k] if k in block else 0.0 for i, j, k in trips])
        if np.linalg.norm(v) > tol.residual_tol:
            family.append(v)
    return family


def adjoint_generators(alg: MatrixLieAlgebra, tol: ToleranceProfile = DEFAULT_TOL):
    """ad matrices in the orthonormal basis (antisymmetric for compact type)."""
    c = structure_constants(alg, tol)
    return [c[i].T.copy() for i in range(alg.dim)]  # ad(b_i)[k, j] = c[i, j, k]


def theta_kernel_adjoint(alg: MatrixLieAlgebra, tol: ToleranceProfile = DEFAULT_TOL):
    """(kernel dimension, kernel basis, theta map) for the adjoint embedding."""
    ads = adjoint_generators(alg, tol)
    tmap = reps.theta_map(ads, tol)
    dim, basis = reps.theta_kernel(tmap, tol)
    return dim, basis, tmap


def laquer_eta(X, Y, alpha: float = 1.0) -> np.ndarray:
    """The symmetric equivariant map i*alpha*[XY + YX - (2/n) tr(XY) I]."""
    X = np.asarray(X, dtype=complex)
    Y = np.asarray(Y, dtype=complex)
    if X.shape != Y.shape or X.shape[0] != X.shape[1]:
        raise DimensionMismatch(f"incompatible shapes {X.shape}, {Y.shape}")
    n = X.shape[0]
    anti = X @ Y + Y @ X
    return 1j * alpha * (anti - (2.0 / n) * np.trace(X @ Y) * np.eye(n))


def laquer_nu(X, Y) -> np.ndarray:
    """The antisymmetric equivariant map i (X tr Y - Y tr X) on u(n)."""
    X = np.asarray(X, dtype=complex)
    Y = np.asarray(Y, dtype=complex)
    if X.shape != Y.shape or X.shape[0] != X.shape[1]:
        raise DimensionMismatch(f"incompatible shapes {X.shape}, {Y.shape}")
    return 1j * (X * np.trace(Y) - Y * np.trace(X))


def su_metric(n: int):
    """The biinvariant metric -2n tr(XY) used for the metricity tests."""
    return lambda X, Y: float(-2 * n * np.real(np.trace(X @ Y)))


def u_metric(n: int, center_coefficient: float = 1.0):
    """Any positive extension of the su(n) metric to the center."""

    def g(X, Y):
        tx, ty = np.trace(X), np.trace(Y)
        X0 = X - tx / n * np.eye(n)
        Y0 = Y - ty / n * np.eye(n)
        return float(-2 * n * np.real(np.trace(X0 @ Y0)) + center_coefficient * np.real(np.conj(tx) * ty))

    return g


def metricity_defect(lam, metric, basis, samples: int = 100, seed: int = 11) -> float:
    """max over random triples of |g(lambda(X,Y), Z) + g(Y, lambda(X,Z))|,
    with X, Y, Z drawn as unit-coefficient combinations of the basis."""
    rng = np.random.default_rng(seed)
    d = len(basis)
    worst = 0.0
    for _ in range(samples):
        cs = rng.standard_normal((3, d))
        cs /= np.linalg.norm(cs, axis=1, keepdims=True)
        X, Y, Z = (sum(c * b for c, b in zip(row, basis)) for row in cs)
        worst = max(worst, abs(metric(lam(X, Y), Z) + metric(Y, lam(X, Z))))
    return worst
