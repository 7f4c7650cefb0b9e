"""Invariant metric connections with image in the symplectic subalgebra:
the equivariant-family solver, torsion and its covariant derivative, the
unique skew-torsion (characteristic) connection, intrinsic-type
classification, holonomy, and parallel vector fields.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import reps, sp3
from .errors import Infeasible, NotSkew
from .linalg import DEFAULT_TOL, ToleranceProfile, nullspace, orthonormal_columns
from .spaces import HomogeneousSpaceInstance


@dataclass(frozen=True)
class EquivariantFamily:
    """All isotropy-equivariant maps of the tangent space into rho(sp3),
    encoded as (dim, 14, 21) coefficient stacks over the tangent/A bases."""

    space: HomogeneousSpaceInstance
    basis: np.ndarray

    @property
    def dim(self) -> int:
        return self.basis.shape[0]


@dataclass(frozen=True)
class InvariantConnection:
    space: HomogeneousSpaceInstance
    lambda_coeffs: np.ndarray  # (14, 21) over the A basis

    def so_matrices(self) -> np.ndarray:
        """(14, 14, 14) stack: entry [j] is the so(14) matrix of Lambda(K_j)."""
        R = np.array(sp3.load().rho)
        return np.einsum("ja,akl->jkl", self.lambda_coeffs, R)

    def nonzero_entries(self, cutoff: float = 1e-9):
        """[(K index, A index, coefficient)] with 1-based indices."""
        out = []
        for j in range(14):
            for a in range(21):
                c = self.lambda_coeffs[j, a]
                if abs(c) > cutoff:
                    out.append((j + 1, a + 1, float(c)))
        return out


@dataclass(frozen=True)
class TorsionTensor:
    t12: np.ndarray  # t12[k, i, j]: K_k component of T(K_i, K_j)
    t3: np.ndarray  # t3[i, j, k] = g(T(K_i, K_j), K_k) = t12[k, i, j]

    @property
    def norm2_increasing(self) -> float:
        """Sum of squared coefficients over strictly increasing triples."""
        n = self.t3.shape[0]
        total = 0.0
        for i, j, k in reps.triples(n):
            total += self.t3[i, j, k] ** 2
        return float(total)

    def skew_defect(self) -> float:
        return float(np.max(np.abs(self.t3 + np.swapaxes(self.t3, 1, 2))))


@dataclass(frozen=True)
class HolonomyResult:
    basis: tuple  # antisymmetric 14x14 matrices
    dim: int
    label: str


def solve_equivariant(space: HomogeneousSpaceInstance, tol: ToleranceProfile = DEFAULT_TOL) -> EquivariantFamily:
    """Nullspace of the infinitesimal equivariance system
    Lambda(rho(h) X) = [rho(h), Lambda(X)] over coefficient stacks."""
    data = sp3.load()
    R21 = np.array(data.rho)
    rows = []
    for R, rc in zip(space.iso, space.iso_coeffs):
        # [R, rho_a] expanded over the rho basis
        br = np.einsum("kl,alm->akm", R, R21) - np.einsum("akl,lm->akm", R21, R)
        m = np.einsum("akm,cmk->ac", br, R21) / (-4.0)  # <., .> = -tr(..)/4
        block = np.zeros((14 * 21, 14 * 21))
        for j in range(14):
            for c in range(21):
                row = np.zeros((14, 21))
                row[:, c] += R[:, j]
                row[j, :] -= m[:, c]
                block[j * 21 + c] = row.ravel()
        rows.append(block)
    ker = nullspace(np.vstack(rows), tol)
    return EquivariantFamily(space=space, basis=ker.T.reshape(-1, 14, 21))


def torsion_of_map(space: HomogeneousSpaceInstance, lam: np.ndarray) -> TorsionTensor:
    """Torsion of an arbitrary connection map (stack of so(14) matrices):
    T(X, Y) = Lambda(X)Y - Lambda(Y)X - [X, Y]_m."""
    t12 = np.einsum("ikj->kij", lam) - np.einsum("jki->kij", lam) - np.einsum("ijk->kij", space.pm)
    return TorsionTensor(t12=t12, t3=np.einsum("kij->ijk", t12))


def torsion(conn: InvariantConnection) -> TorsionTensor:
    return torsion_of_map(conn.space, conn.so_matrices())


def characteristic_connection(
    space: HomogeneousSpaceInstance,
    family: EquivariantFamily = None,
    tol: ToleranceProfile = DEFAULT_TOL,
) -> InvariantConnection:
    """The unique family member with totally antisymmetric torsion.

    Solves the affine-linear skewness system inside the equivariant family;
    raises Infeasible when the residual shows no member has skew torsion,
    and asserts a zero-dimensional solution set otherwise.
    """
    if family is None:
        family = solve_equivariant(space, tol)
    R21 = np.array(sp3.load().rho)
    lam_members = np.einsum("dja,akl->djkl", family.basis, R21)
    # torsion is affine in the coefficients: T = A(t) + T0
    t0 = torsion_of_map(space, np.zeros((14, 14, 14))).t3
    a_parts = np.einsum("dikj->dkij", lam_members) - np.einsum("djki->dkij", lam_members)
    a_t3 = np.einsum("dkij->dijk", a_parts)
    sym = lambda t: t + np.swapaxes(t, -2, -1)
    A = sym(a_t3).reshape(family.dim, -1).T
    b = -sym(t0).ravel()
    coeffs, _, rank_, sv = np.linalg.lstsq(A, b, rcond=None)
    resid = float(np.linalg.norm(A @ coeffs - b))
    scale = max(float(np.linalg.norm(b)), 1.0)
    if resid > 1e3 * tol.residual_tol * scale:
        raise Infeasible(
            f"{space.space_id}: no skew-torsion member (residual {resid:.3e})"
        )
    if family.dim and sv.size and np.count_nonzero(sv > tol.rank_tol * sv[0]) < family.dim:
        # solution set would be positive-dimensional, contradicting uniqueness
        raise Infeasible(f"{space.space_id}: skewness system is degenerate")
    L = np.einsum("d,dja->ja", coeffs, family.basis)
    L[np.abs(L) < 1e-12 * max(1.0, float(np.max(np.abs(L))))] = 0.0
    return InvariantConnection(space=space, lambda_coeffs=L)


def nabla_torsion(conn_lam: np.ndarray, t12: np.ndarray) -> np.ndarray:
    """(nabla_V T)(X, Y) over all frame directions: nt[v, k, i, j]."""
    lam = conn_lam
    return (
        np.einsum("vkl,lij->vkij", lam, t12)
        - np.einsum("vli,klj->vkij", lam, t12)
        - np.einsum("vlj,kil->vkij", lam, t12)
    )


def torsion_is_parallel(conn: InvariantConnection, T: TorsionTensor = None, rel: float = 1e-7):
    """(flag, max |nabla T| / ||T||); the threshold is relative per the
    accumulation of triple products.  Vanishing torsion is parallel."""
    if T is None:
        T = torsion(conn)
    nt = nabla_torsion(conn.so_matrices(), T.t12)
    tnorm = float(np.sqrt(T.norm2_increasing))
    if tnorm <= 1e-12:
        return True, 0.0
    ratio = float(np.max(np.abs(nt)) / tnorm)
    return ratio <= rel, ratio


@lru_cache(maxsize=1)
def _lambda3_projectors():
    rep = reps.lambda3_action(list(sp3.load().rho))
    dec = reps.isotypic_decompose(rep)
    return tuple((round(ev), basis) for ev, _, basis in dec.parts)


def classify_type(t3: np.ndarray, tol: ToleranceProfile = DEFAULT_TOL) -> dict:
    """Squared norms of the 3-form over the Casimir eigenspaces of the
    3-form module; the keys are the (integer) Casimir eigenvalues."""
    skew_defect = max(
        float(np.max(np.abs(t3 + np.swapaxes(t3, 1, 2)))),
        float(np.max(np.abs(t3 + np.swapaxes(t3, 0, 1)))),
    )
    scale = max(float(np.max(np.abs(t3))), 1.0)
    if skew_defect > 1e3 * tol.residual_tol * scale:
        raise NotSkew(f"tensor is not a 3-form (defect {skew_defect:.3e})")
    trips = reps.triples(14)
    v = np.array([t3[i, j, k] for i, j, k in trips])
    return {ev: float(np.linalg.norm(basis.T @ v) ** 2) for ev, basis in _lambda3_projectors()}


def _span_rank(vectors, tol: ToleranceProfile):
    if not vectors:
        return 0, np.zeros((91, 0))
    V = np.array([reps.pack_so(m, 14) for m in vectors]).T
    on = orthonormal_columns(V, tol)
    return on.shape[1], on


def holonomy_algebra(
    conn: InvariantConnection, tol: ToleranceProfile = DEFAULT_TOL
) -> HolonomyResult:
    """Nested-bracket closure of the curvature span:
    seed [Lambda X, Lambda Y] - Lambda([X,Y]_m) - rho([X,Y]_h), then close
    under bracketing with the image of Lambda until the rank stabilizes."""
    space = conn.space
    lam = conn.so_matrices()
    seeds = []
    for i in range(14):
        for j in range(i + 1, 14):
            m = lam[i] @ lam[j] - lam[j] @ lam[i]
            m -= np.einsum("k,kab->ab", space.pm[i, j], lam)
            m -= space.iso_so14(space.ph[i, j])
            seeds.append(m)
    rank_, on = _span_rank(seeds, tol)
    basis = [reps.unpack_so(col, 14) for col in on.T]
    for _ in range(91):
        new = []
        for L in lam:
            for Bm in basis:
                new.append(L @ Bm - Bm @ L)
        rank2, on2 = _span_rank(basis + new, tol)
        if rank2 == rank_:
            break
        rank_ = rank2
        basis = [reps.unpack_so(col, 14) for col in on2.T]
    return HolonomyResult(basis=tuple(basis), dim=rank_, label=_holonomy_label(basis, tol))


def _holonomy_label(basis, tol: ToleranceProfile) -> str:
    data = sp3.load()
    dim = len(basis)

    def inside(target_idx):
        T = np.array([reps.pack_so(data.rho[i], 14) for i in target_idx]).T
        Ton = orthonormal_columns(T, tol)
        for m in basis:
            v = reps.pack_so(m, 14)
            if np.linalg.norm(v - Ton @ (Ton.T @ v)) > 1e3 * tol.residual_tol * max(np.linalg.norm(v), 1.0):
                return False
        return True

    if dim <= 3 and inside([8, 9, 20]):
        return "torus"
    if dim == 10 and inside(range(10)):
        return "sp2"
    if dim == 11 and inside(list(range(10)) + [18, 19, 20]):
        return "sp2+w1"
    if dim == 21 and inside(range(21)):
        return "sp3"
    return f"other({dim})" if not inside(range(21)) else f"sp3-subalgebra({dim})"


def parallel_vector_fields(
    conn: InvariantConnection, T: TorsionTensor = None, tol: ToleranceProfile = DEFAULT_TOL
):
    """Frame vectors killed by both the holonomy algebra and the isotropy,
    together with the 2-forms obtained by contracting them into the torsion.

    Returns (vectors as columns, list of 14x14 antisymmetric 2-forms).
    """
    space = conn.space
    hol = holonomy_algebra(conn, tol)
    mats = list(hol.basis) + list(space.iso)
    if mats:
        vecs = nullspace(np.vstack(mats), tol)
    else:
        vecs = np.eye(14)
    if T is None:
        T = torsion(conn)
    omegas = [np.einsum("i,ijk->jk", v, T.t3) for v in vecs.T]
    return vecs, omegas
