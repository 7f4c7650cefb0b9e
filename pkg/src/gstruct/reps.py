"""Representation machinery on top of the 14-dimensional isotropy module:
induced actions on 3-forms and tensor products, Casimir operators and
isotypic splittings, the skew-torsion compatibility map and its kernel,
joint invariants, and subgroup branching.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from . import sp3
from .errors import DimensionMismatch, NotClosed
from .linalg import DEFAULT_TOL, ToleranceProfile, eig_selfadjoint, nullspace


@dataclass(frozen=True)
class RepAction:
    """A Lie algebra action: one N x N generator per basis element of the
    source algebra (the generators inherit the source's structure constants)."""

    dim: int
    generators: tuple
    source: str = ""


@dataclass(frozen=True)
class IsotypicDecomposition:
    parts: tuple  # (casimir eigenvalue, dimension, orthonormal basis columns)

    def dimension_table(self) -> dict:
        return {ev: dim for ev, dim, _ in self.parts}

    def dimension_multiset(self) -> tuple:
        return tuple(sorted(dim for _, dim, _ in self.parts))


def triples(n: int):
    return list(combinations(range(n), 3))


@lru_cache(maxsize=8)
def triple_index(n: int):
    return {t: i for i, t in enumerate(triples(n))}


_PERM_SIGN = {p: (1 if p in ((0, 1, 2), (1, 2, 0), (2, 0, 1)) else -1)
              for p in permutations(range(3))}


def _sort_sign(t):
    """(sorted tuple, permutation sign); None sign for repeated indices."""
    i, j, k = t
    if i == j or j == k or i == k:
        return None, 0
    order = tuple(sorted(range(3), key=lambda s: t[s]))
    return tuple(sorted(t)), _PERM_SIGN[order]


def lambda3_action(rho_list) -> RepAction:
    """Derivative action on 3-forms, in the orthonormal e_i^e_j^e_k basis."""
    rho_list = [np.asarray(r) for r in rho_list]
    n = rho_list[0].shape[0]
    for r in rho_list:
        if r.shape != (n, n):
            raise DimensionMismatch("generators must share one square shape")
    trips = triples(n)
    idx = triple_index(n)
    gens = []
    for A in rho_list:
        M = np.zeros((len(trips), len(trips)))
        nz_cols = [np.nonzero(A[:, c])[0] for c in range(n)]
        for col, t in enumerate(trips):
            for slot in range(3):
                orig = t[slot]
                for l in nz_cols[orig]:
                    newt = list(t)
                    newt[slot] = int(l)
                    srt, sign = _sort_sign(tuple(newt))
                    if sign:
                        M[idx[srt], col] += sign * A[l, orig]
        gens.append(M)
    return RepAction(dim=len(trips), generators=tuple(gens), source="lambda3")


def casimir(rep: RepAction) -> np.ndarray:
    """Sum of squared generators (for an orthonormal source basis)."""
    C = np.zeros((rep.dim, rep.dim))
    for g in rep.generators:
        C += g @ g
    return C


def isotypic_decompose(rep: RepAction, tol: ToleranceProfile = DEFAULT_TOL) -> IsotypicDecomposition:
    """Casimir eigenspace decomposition; one part per clustered eigenvalue."""
    parts = [
        (ev, basis.shape[1], basis)
        for ev, basis in eig_selfadjoint(casimir(rep), tol)
    ]
    return IsotypicDecomposition(parts=tuple(parts))


def invariant_vectors(rep: RepAction, tol: ToleranceProfile = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal basis (columns) of the joint kernel of all generators."""
    if not rep.generators:
        return np.eye(rep.dim)
    stacked = np.vstack([np.asarray(g) for g in rep.generators])
    return nullspace(stacked, tol)


# ---------------------------------------------------------------------------
# so(n) bookkeeping: a 2-form sum_{a<b} w_ab e_a^e_b corresponds to the
# matrix sum_{a<b} w_ab E_ab, and the pairs basis {E_ab} is orthonormal
# for <A, B> = -tr(AB)/2.


def pair_index(n: int):
    pairs = list(combinations(range(n), 2))
    return pairs, {p: i for i, p in enumerate(pairs)}


def pack_so(M, n: int) -> np.ndarray:
    pairs, _ = pair_index(n)
    M = np.asarray(M)
    return np.array([M[a, b] for a, b in pairs])


def unpack_so(v, n: int) -> np.ndarray:
    pairs, _ = pair_index(n)
    M = np.zeros((n, n))
    for coeff, (a, b) in zip(v, pairs):
        M[a, b] = coeff
        M[b, a] = -coeff
    return M


def so_complement(group_gens, n: int, tol: ToleranceProfile = DEFAULT_TOL):
    """Orthonormal basis of the complement of span(group_gens) in so(n)."""
    if len(group_gens) == 0:
        G = np.zeros((0, n * (n - 1) // 2))
    else:
        G = np.array([pack_so(g, n) for g in group_gens])
    comp = nullspace(G, tol)
    return [unpack_so(col, n) for col in comp.T]


@dataclass(frozen=True)
class ThetaMap:
    """Skew-torsion compatibility map of a subalgebra g of so(n):
    T |-> sum_l e_l (x) pr_m(e_l _| T), with m the complement of g."""

    matrix: np.ndarray  # (n * dim m) x C(n, 3)
    complement_basis: tuple
    n: int


def theta_map(group_gens, tol: ToleranceProfile = DEFAULT_TOL) -> ThetaMap:
    group_gens = [np.asarray(g) for g in group_gens]
    n = group_gens[0].shape[0] if group_gens else 0
    comp = so_complement(group_gens, n, tol)
    q = len(comp)
    F = np.array([pack_so(f, n) for f in comp]) if q else np.zeros((0, n * (n - 1) // 2))
    trips = triples(n)
    _, pidx = pair_index(n)
    theta = np.zeros((n * q, len(trips)))
    if q == 0:
        return ThetaMap(matrix=theta, complement_basis=tuple(comp), n=n)
    for col, (i, j, k) in enumerate(trips):
        # e_l _| (e_i^e_j^e_k) for l = i, j, k
        for l, pair, sign in ((i, (j, k), 1.0), (j, (i, k), -1.0), (k, (i, j), 1.0)):
            w = np.zeros(F.shape[1])
            w[pidx[pair]] = sign
            theta[l * q:(l + 1) * q, col] = F @ w
    return ThetaMap(matrix=theta, complement_basis=tuple(comp), n=n)


def theta_kernel(tmap: ThetaMap, tol: ToleranceProfile = DEFAULT_TOL):
    """(kernel dimension, orthonormal kernel basis as columns over triples)."""
    ker = nullspace(tmap.matrix, tol)
    return ker.shape[1], ker


# ---------------------------------------------------------------------------
# Branching of the 14-dimensional module under subalgebras of sp(3).


def _symmetric_basis(n: int):
    mats = []
    for p in range(n):
        for q in range(p, n):
            m = np.zeros((n, n))
            m[p, q] = m[q, p] = 1.0
            mats.append(m)
    return mats


def subgroup_decompose(row: sp3.SubgroupRow, tol: ToleranceProfile = DEFAULT_TOL):
    """Invariant-block dimensions of the 14-dim module under a subalgebra.

    Finds the symmetric commutant of the generator images, eigen-splits a
    seeded random commutant element, and merges blocks connected by the
    commutant (same isotypic type).
    """
    data = sp3.load()
    gens = [data.rho_of(v) for v in row.generators]
    # closure check of the generator span
    from .liealg import CoordinateFrame, bracket

    frame = CoordinateFrame(gens)
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            br = bracket(gens[i], gens[j])
            _, res = frame.coords(br)
            if res > 1e3 * tol.residual_tol * max(np.linalg.norm(br), 1.0):
                raise NotClosed(f"{row.name}: generators do not span a subalgebra")

    sym = _symmetric_basis(14)
    rows = []
    for R in gens:
        block = np.array([(S @ R - R @ S).ravel() for S in sym]).T
        rows.append(block)
    ker = nullspace(np.vstack(rows), tol)
    commutant = [sum(c * S for c, S in zip(col, sym)) for col in ker.T]

    rng = np.random.default_rng(20140314)
    Sstar = sum(rng.standard_normal() * C for C in commutant)
    Sstar = 0.5 * (Sstar + Sstar.T)
    eigparts = eig_selfadjoint(Sstar, tol)
    blocks = [basis for _, basis in eigparts]

    # merge blocks mapped into each other by some commutant element
    parent = list(range(len(blocks)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in range(len(blocks)):
        for b in range(a + 1, len(blocks)):
            linked = any(
                np.linalg.norm(blocks[a].T @ C @ blocks[b]) > 1e3 * tol.residual_tol
                for C in commutant
            )
            if linked and find(a) != find(b):
                parent[find(a)] = find(b)
    sizes = {}
    for i, blk in enumerate(blocks):
        root = find(i)
        sizes[root] = sizes.get(root, 0) + blk.shape[1]
    return tuple(sorted(sizes.values()))


# ---------------------------------------------------------------------------
# Invariant symmetric cubics on the 14-dimensional module.


@lru_cache(maxsize=1)
def _sym3_basis(n: int = 14):
    """Orthonormal monomial basis of Sym^3(R^n) inside (R^n)^(x3).

    Returns (multisets, weights) with weights = sqrt(#distinct permutations);
    the basis vector of a multiset has entry 1/weight at each distinct
    permutation of its indices.
    """
    multis = []
    for i in range(n):
        for j in range(i, n):
            for k in range(j, n):
                multis.append((i, j, k))
    weights = np.array([np.sqrt(len(set(permutations(m)))) for m in multis])
    return multis, weights


def _sym3_tensors(n: int = 14):
    multis, weights = _sym3_basis(n)
    T = np.zeros((len(multis), n, n, n))
    for r, (m, w) in enumerate(zip(multis, weights)):
        for p in set(permutations(m)):
            T[r][p] = 1.0 / w
    return T


def _sym3_action(A, batch):
    """Derivative action of A on a batch of symmetric 3-tensors."""
    W1 = np.moveaxis(np.tensordot(A, batch, axes=(1, 1)), 0, 1)
    W2 = np.moveaxis(np.tensordot(A, batch, axes=(1, 2)), 0, 2)
    W3 = np.tensordot(batch, A, axes=(3, 1))
    return W1 + W2 + W3


@lru_cache(maxsize=1)
def invariant_cubics_cached():
    return tuple(invariant_cubics())


def invariant_cubics(tol: ToleranceProfile = DEFAULT_TOL):
    """Orthonormal basis of invariant symmetric 3-tensors on the 14-dim
    module, as (14,14,14) arrays (joint kernel of the derivative action)."""
    data = sp3.load()
    n = 14
    multis, weights = _sym3_basis(n)
    batch = _sym3_tensors(n)  # (560, n, n, n)
    I = np.array([m[0] for m in multis])
    J = np.array([m[1] for m in multis])
    K = np.array([m[2] for m in multis])
    gens = []
    for A in data.rho:
        W = _sym3_action(A, batch)
        D = (W[:, I, J, K] * weights[None, :]).T  # (560, 560), D[r, c]
        gens.append(D)
    ker = nullspace(np.vstack(gens), tol)
    out = []
    for col in ker.T:
        U = np.einsum("n,nabc->abc", col, batch)
        for perm in ((0, 2, 1), (1, 0, 2)):
            if np.max(np.abs(U - np.transpose(U, perm))) > tol.residual_tol:
                raise RuntimeError("invariant cubic is not totally symmetric")
        if np.linalg.norm(np.einsum("iik->k", U)) > tol.residual_tol:
            raise RuntimeError("invariant cubic is not trace-free")
        out.append(U)
    return out


def trace_cubic() -> np.ndarray:
    """The invariant cubic built directly from the ambient triple trace,
    Im tr(sym(B_i B_j B_k)); an independent construction used as an oracle."""
    B = sp3.load().B
    n = 14
    t = np.zeros((n, n, n))
    for i in range(n):
        for j in range(i, n):
            for k in range(j, n):
                val = 0.0
                for p in permutations((i, j, k)):
                    val += float(np.imag(np.trace(B[p[0]] @ B[p[1]] @ B[p[2]])))
                val /= 6.0
                for p in set(permutations((i, j, k))):
                    t[p] = val
    return t


def metric_reconstructor(tol: ToleranceProfile = DEFAULT_TOL):
    """A scaled invariant cubic U with U_v^2 v = |v|^2 v for every v.

    Uses the ambient-trace construction, fixes the scale on one sample
    vector, and returns (tensor, scale applied).
    """
    t = trace_cubic()
    rng = np.random.default_rng(7)
    v = rng.standard_normal(14)
    v /= np.linalg.norm(v)
    M = np.einsum("ijk,k->ij", t, v)
    denom = float(v @ (M @ M) @ v)
    if denom <= 0:
        raise RuntimeError("trace cubic degenerate on the sample vector")
    c = 1.0 / np.sqrt(denom)
    return c * t, c


# ---------------------------------------------------------------------------
# The tensor product of the 14-dim module with its so(14)-complement.


@lru_cache(maxsize=1)
def complement_action():
    """(complement basis of rho(sp3) in so(14), the 21 induced 70x70 actions)."""
    data = sp3.load()
    comp = so_complement(list(data.rho), 14)
    F = np.array(comp)  # (70, 14, 14)
    acts = []
    for R in data.rho:
        Br = np.einsum("ab,lbc->lac", R, F) - np.einsum("lab,bc->lac", F, R)
        ad = -0.5 * np.einsum("lab,kba->kl", Br, F)
        acts.append(ad)
    return comp, acts


def v14_v70_rep() -> RepAction:
    """Action on the 980-dimensional product module."""
    data = sp3.load()
    _, acts = complement_action()
    gens = []
    I14, I70 = np.eye(14), np.eye(70)
    for R, ad in zip(data.rho, acts):
        gens.append(np.kron(R, I70) + np.kron(I14, ad))
    return RepAction(dim=980, generators=tuple(gens), source="v14xv70")
