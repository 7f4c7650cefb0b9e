"""Matrix Lie algebras: brackets, structure constants, reductive splits,
isotropy representations, and natural-reductivity checks.

Conventions fixed here and used everywhere else:

* base inner product  ``<X, Y> = -Re tr(XY)``  (the catalog bases are
  orthonormal for it);
* isotropy matrices act by columns,  ``[H, K_j] = sum_k rho(H)_{kj} K_k``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, NotClosed, NotReductive
from .linalg import DEFAULT_TOL, ToleranceProfile, nullspace, orthonormal_columns


def inner(X, Y) -> float:
    """Base invariant form -Re tr(XY) on anti-hermitian matrices."""
    return float(-np.real(np.trace(X @ Y)))


def bracket(X, Y) -> np.ndarray:
    """Matrix commutator XY - YX."""
    X = np.asarray(X)
    Y = np.asarray(Y)
    if X.shape != Y.shape or X.shape[0] != X.shape[1]:
        raise DimensionMismatch(f"incompatible shapes {X.shape} and {Y.shape}")
    return X @ Y - Y @ X


def _stack(mats) -> np.ndarray:
    """Real column-stack of complex matrices (re/im interleaved)."""
    cols = [np.concatenate([m.real.ravel(), m.imag.ravel()]) for m in mats]
    return np.array(cols).T if cols else np.zeros((0, 0))


class CoordinateFrame:
    """Least-squares coordinates with respect to a fixed list of matrices."""

    def __init__(self, mats):
        self.mats = [np.asarray(m, dtype=complex) for m in mats]
        self._pinv = np.linalg.pinv(_stack(self.mats)) if self.mats else None

    def coords(self, X):
        """Coefficients c with X ~ sum c_i mats_i, plus the residual norm."""
        if self._pinv is None:
            return np.zeros(0), float(np.linalg.norm(X))
        v = np.concatenate([np.asarray(X).real.ravel(), np.asarray(X).imag.ravel()])
        c = self._pinv @ v
        recon = sum(ci * m for ci, m in zip(c, self.mats))
        return c, float(np.linalg.norm(X - recon))


@dataclass(frozen=True)
class MatrixLieAlgebra:
    """A finite basis of anti-hermitian matrices, closed under the bracket."""

    name: str
    basis: tuple

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(np.asarray(b, dtype=complex) for b in self.basis))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def ambient_dim(self) -> int:
        return self.basis[0].shape[0]

    def validate(self, tol: ToleranceProfile = DEFAULT_TOL) -> None:
        """Check anti-hermiticity, linear independence, and closure."""
        for i, X in enumerate(self.basis):
            scale = max(np.linalg.norm(X), 1.0)
            if np.linalg.norm(X + X.conj().T) > tol.residual_tol * scale:
                raise ValueError(f"{self.name}: basis element {i} is not anti-hermitian")
        S = _stack(self.basis)
        if np.linalg.matrix_rank(S, tol=1e-10) != self.dim:
            raise ValueError(f"{self.name}: basis is linearly dependent")
        structure_constants(self, tol)  # raises NotClosed on failure


def structure_constants(alg: MatrixLieAlgebra, tol: ToleranceProfile = DEFAULT_TOL) -> np.ndarray:
    """c[i, j, k] with [b_i, b_j] = sum_k c[i, j, k] b_k."""
    d = alg.dim
    frame = CoordinateFrame(alg.basis)
    c = np.zeros((d, d, d))
    for i in range(d):
        for j in range(i + 1, d):
            br = bracket(alg.basis[i], alg.basis[j])
            coef, res = frame.coords(br)
            scale = max(np.linalg.norm(br), 1.0)
            if res > tol.residual_tol * scale:
                raise NotClosed(
                    f"{alg.name}: [b_{i}, b_{j}] leaves the span (residual {res:.3e})"
                )
            c[i, j] = coef
            c[j, i] = -coef
    return c


@dataclass(frozen=True)
class InnerProductSpec:
    """Blockwise positive rescaling of the base form on a fixed basis.

    ``blocks`` partitions the basis indices; block b carries coefficient
    ``coefficients[b]``, i.e. g = sum_b coeff_b * <pr_b X, pr_b Y>.
    """

    blocks: tuple
    coefficients: tuple

    def __post_init__(self):
        if len(self.blocks) != len(self.coefficients):
            raise ValueError("one coefficient per block required")
        if any(c <= 0 for c in self.coefficients):
            raise ValueError("coefficients must be positive")
        seen = sorted(i for blk in self.blocks for i in blk)
        if seen != list(range(len(seen))):
            raise ValueError("blocks must partition the index range")

    def coefficient_of(self, index: int) -> float:
        for blk, c in zip(self.blocks, self.coefficients):
            if index in blk:
                return float(c)
        raise IndexError(index)


def uniform_ip(dim: int, coefficient: float = 1.0) -> InnerProductSpec:
    return InnerProductSpec((tuple(range(dim)),), (coefficient,))


@dataclass
class ReductiveSplit:
    """A decomposition k = h + m with [h, m] contained in m.

    ``m_basis`` is orthonormal for the metric described by ``ip``; all
    coordinate extraction goes through a least-squares frame over the
    combined (h, m) basis.
    """

    algebra: MatrixLieAlgebra
    h_basis: list
    m_basis: list
    ip: InnerProductSpec
    _frame: CoordinateFrame = field(default=None, repr=False)

    def __post_init__(self):
        self.h_basis = [np.asarray(h, dtype=complex) for h in self.h_basis]
        self.m_basis = [np.asarray(m, dtype=complex) for m in self.m_basis]
        self._frame = CoordinateFrame(self.h_basis + self.m_basis)

    @property
    def dim_h(self) -> int:
        return len(self.h_basis)

    @property
    def dim_m(self) -> int:
        return len(self.m_basis)

    def split_coords(self, X, tol: ToleranceProfile = DEFAULT_TOL):
        """(h-coordinates, m-coordinates) of X; raises if X leaves h + m."""
        c, res = self._frame.coords(X)
        scale = max(np.linalg.norm(X), 1.0)
        if res > 1e3 * tol.residual_tol * scale:
            raise NotReductive(f"element leaves h+m (residual {res:.3e})")
        return c[: self.dim_h], c[self.dim_h:]

    def gram_m(self) -> np.ndarray:
        """Gram matrix of m_basis under the ip metric (identity if orthonormal)."""
        K = self.m_basis
        n = len(K)
        blocks = self.ip.blocks
        # metric = sum_b coeff_b <pr_b X, pr_b Y>; with block-orthogonal bases
        # this reduces to coeff-weighted base inner products, so evaluate via
        # projections onto each block's span.
        G = np.zeros((n, n))
        spans = []
        for blk in blocks:
            vecs = _stack([K[i] for i in blk])
            spans.append(orthonormal_columns(vecs))
        for i in range(n):
            vi = np.concatenate([K[i].real.ravel(), K[i].imag.ravel()])
            for j in range(i, n):
                vj = np.concatenate([K[j].real.ravel(), K[j].imag.ravel()])
                total = 0.0
                for span, coeff in zip(spans, self.ip.coefficients):
                    total += coeff * float((span.T @ vi) @ (span.T @ vj))
                G[i, j] = G[j, i] = total
        return G


def reductive_split(
    k: MatrixLieAlgebra,
    h_basis,
    ip: InnerProductSpec = None,
    m_basis=None,
    tol: ToleranceProfile = DEFAULT_TOL,
) -> ReductiveSplit:
    """Split k = h + m, with m the base-form orthogonal complement of h
    unless an explicit (already orthonormal) ``m_basis`` is supplied.

    Raises NotReductive if [h, m] does not stay inside m.
    """
    h_basis = [np.asarray(h, dtype=complex) for h in h_basis]
    if m_basis is None:
        # complement of span(h) inside span(k.basis) under -Re tr(XY):
        # the base form is the Euclidean form on the real stacking.
        K = _stack(k.basis)
        Kon = orthonormal_columns(K)
        if h_basis:
            H = _stack(h_basis)
            proj = Kon.T @ H  # h expressed in the k-frame
            comp = nullspace(proj.T, tol)  # directions of k orthogonal to h
            vecs = Kon @ comp
        else:
            vecs = Kon
        n = k.ambient_dim
        mats = []
        for col in vecs.T:
            m = (col[: n * n] + 1j * col[n * n:]).reshape(n, n)
            mats.append(m / np.sqrt(max(inner(m, m), 1e-300)))
        m_basis = mats
    if ip is None:
        ip = uniform_ip(len(m_basis))
    split = ReductiveSplit(algebra=k, h_basis=h_basis, m_basis=list(m_basis), ip=ip)
    # reductivity: every [h, m] must have vanishing h-part
    for H in h_basis:
        for M in split.m_basis:
            br = bracket(H, M)
            ch, _ = split.split_coords(br, tol)
            scale = max(np.linalg.norm(br), 1.0)
            if ch.size and np.linalg.norm(ch) > 1e3 * tol.residual_tol * scale:
                raise NotReductive(f"[h, m] leaves m (h-part {np.linalg.norm(ch):.3e})")
    return split


def isotropy_matrices(split: ReductiveSplit, tol: ToleranceProfile = DEFAULT_TOL):
    """ad(h)|_m in the orthonormal m basis, one real matrix per h generator."""
    out = []
    for H in split.h_basis:
        R = np.zeros((split.dim_m, split.dim_m))
        for j, Kj in enumerate(split.m_basis):
            br = bracket(H, Kj)
            ch, cm = split.split_coords(br, tol)
            scale = max(np.linalg.norm(br), 1.0)
            if ch.size and np.linalg.norm(ch) > 1e3 * tol.residual_tol * scale:
                raise NotReductive("isotropy action leaves m")
            R[:, j] = cm
        out.append(R)
    return out


def is_naturally_reductive(split: ReductiveSplit, tol: ToleranceProfile = DEFAULT_TOL):
    """(flag, max defect) for g([X,Y]_m, Z) + g(Y, [X,Z]_m) over basis triples."""
    n = split.dim_m
    # n3[i, j, k] = g([K_i, K_j]_m, K_k); with orthonormal m the metric
    # coefficients are already absorbed into the basis.
    n3 = np.zeros((n, n, n))
    for i in range(n):
        for j in range(i + 1, n):
            _, cm = split.split_coords(bracket(split.m_basis[i], split.m_basis[j]), tol)
            n3[i, j] = cm
            n3[j, i] = -cm
    defect = float(np.max(np.abs(n3 + np.swapaxes(n3, 1, 2))))
    return defect <= 1e3 * tol.residual_tol, defect
