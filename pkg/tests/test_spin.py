import numpy as np
import pytest
from conftest import pipeline

from gstruct import spin, spaces
from gstruct import curvature as curv
from gstruct.errors import BadDimension, NoInvariantSpinors, NotAntisymmetric, TorsionNotParallel
from gstruct.linalg import nullspace


def test_clifford_small_and_large():
    cl2 = spin.build_clifford(2)
    assert cl2.dim == 2
    for g in cl2.gammas:
        assert np.max(np.abs(g @ g + np.eye(2))) < 1e-15
    cl14 = spin.build_clifford(14)
    assert cl14.dim == 128
    rng = np.random.default_rng(0)
    for _ in range(12):
        i, j = rng.integers(0, 14, 2)
        anti = cl14.gammas[i] @ cl14.gammas[j] + cl14.gammas[j] @ cl14.gammas[i]
        target = -2.0 * np.eye(128) if i == j else np.zeros((128, 128))
        assert np.max(np.abs(anti - target)) <= 1e-12
    for g in cl14.gammas[:3]:
        assert np.max(np.abs(g.conj().T @ g - np.eye(128))) < 1e-12


def test_clifford_bad_dimension():
    for n in (1, 3, 16, 0):
        with pytest.raises(BadDimension):
            spin.build_clifford(n)


def test_clifford_irreducible_small():
    cl = spin.build_clifford(4)
    rows = []
    for g in cl.gammas:
        rows.append(np.kron(np.eye(4), g) - np.kron(g.T, np.eye(4)))
    ker = nullspace(np.vstack(rows))
    assert ker.shape[1] == 1  # commutant is scalar


def test_spin_lift_properties(sp3_data):
    cl = spin.build_clifford(14)
    assert np.max(np.abs(spin.spin_lift(cl, np.zeros((14, 14))))) == 0.0
    with pytest.raises(NotAntisymmetric):
        spin.spin_lift(cl, np.eye(14))
    # [lift(A), c(v)] = c(Av)
    A = sp3_data.rho[8]
    lam = spin.spin_lift(cl, A)
    v = np.zeros(14)
    v[4] = 1.0  # e5
    cv = cl.gammas[4]
    Av = A @ v
    cAv = sum(Av[i] * cl.gammas[i] for i in range(14))
    assert np.max(np.abs(lam @ cv - cv @ lam - cAv)) < 1e-12
    # homomorphism on random antisymmetric pairs
    rng = np.random.default_rng(4)
    for _ in range(3):
        X = rng.standard_normal((14, 14))
        X = X - X.T
        Y = rng.standard_normal((14, 14))
        Y = Y - Y.T
        lhs = spin.spin_lift(cl, X @ Y - Y @ X)
        lx, ly = spin.spin_lift(cl, X), spin.spin_lift(cl, Y)
        assert np.max(np.abs(lhs - (lx @ ly - ly @ lx))) < 1e-10


def test_invariant_spinor_dimensions():
    for sid, want in [("M1", 48), ("M2", 16), ("M3", 0), ("M4", 4)]:
        space = pipeline(sid, alpha=1.1, beta=0.8, gamma=1.4, want_char=False)["space"]
        assert spin.invariant_spinors(space).dim == want


def test_no_invariant_spinors_error():
    ctx = pipeline("M3", alpha=1.0, beta=1.0, gamma=1.0)
    with pytest.raises(NoInvariantSpinors):
        spin.dirac_on_invariants(ctx["space"], ctx["conn"])


def test_m2_dirac_closed_form_three_draws():
    for a, b in [(1.0, 1.0), (1.0, 2.3), (1.0, 0.41)]:
        ctx = pipeline("M2", alpha=a, beta=b, gamma=1.7)
        rep = spin.dirac_on_invariants(ctx["space"], ctx["conn"])
        expect = np.sqrt((a + 4 * b) / (a * b))
        assert np.max(np.abs(np.abs(rep.eigenvalues) - expect)) <= 1e-9
        assert int(np.sum(rep.eigenvalues > 0)) == 8
        assert int(np.sum(rep.eigenvalues < 0)) == 8


def test_m2_mu_and_torsion_norm():
    for b in (1.0, 0.6, 2.4):
        ctx = pipeline("M2", alpha=1.0, beta=b, gamma=1.1)
        rep = spin.dirac_on_invariants(ctx["space"], ctx["conn"])
        assert abs(np.max(np.abs(rep.torsion_op_eigenvalues)) - 2 * np.sqrt(4 + b)) <= 1e-9
        assert abs(rep.torsion_norm2 - (8 + 4 * b)) <= 1e-9


def test_torsion_norm_convention():
    from gstruct import connections as con

    ctx = pipeline("M2", alpha=1.0, beta=1.7, gamma=1.0)
    T = con.torsion(ctx["conn"])
    full_sum = float(np.sum(T.t3**2))
    assert abs(full_sum - 6 * T.norm2_increasing) < 1e-10


def test_m4_dirac_formula_three_draws():
    fx = spaces.fixtures("M4")
    for a, b, g in [(1.0, 1.0, 1.0), (1.3, 0.9, 1.1), (0.8, 1.7, 2.2)]:
        ctx = pipeline("M4", alpha=a, beta=b, gamma=g)
        rep = spin.dirac_on_invariants(ctx["space"], ctx["conn"])
        expect = fx.extras["dirac"](ctx["params"])
        assert np.max(np.abs(np.abs(rep.eigenvalues) - expect)) <= 1e-9
    ctx = pipeline("M4", alpha=1.0, beta=1.0, gamma=1.0)
    rep = spin.dirac_on_invariants(ctx["space"], ctx["conn"])
    assert np.max(np.abs(np.abs(rep.eigenvalues) - 0.5 * np.sqrt(30))) <= 1e-12


def test_m4_mu_and_norm_alpha_beta_one():
    for g in (1.0, 0.5, 2.0):
        ctx = pipeline("M4", alpha=1.0, beta=1.0, gamma=g)
        rep = spin.dirac_on_invariants(ctx["space"], ctx["conn"])
        assert abs(np.max(np.abs(rep.torsion_op_eigenvalues)) - np.sqrt(25 + 5 * g)) <= 1e-9
        assert abs(rep.torsion_norm2 - (5 + 5 * g)) <= 1e-9


def _estimates(sid, a, b, g):
    ctx = pipeline(sid, alpha=a, beta=b, gamma=g)
    rep = spin.dirac_on_invariants(ctx["space"], ctx["conn"])
    crep = curv.curvature_report(ctx["space"], ctx["conn"])
    return spin.eigenvalue_estimates(rep, crep.scal_riem, conn=ctx["conn"])


def test_friedrich_equality_and_parallel_spinors():
    rep = _estimates("M2", 1.0, 1.0, 1.4)
    assert rep.friedrich_equality
    assert abs(min(rep.eigenvalues**2) - rep.friedrich_rhs) <= 1e-9
    assert rep.parallel_spinor_dim == 16
    rep4 = _estimates("M4", 1.0, 1.0, 1.0)
    assert rep4.friedrich_equality
    assert rep4.parallel_spinor_dim == 4
    assert abs(rep4.friedrich_rhs - 7.5) < 1e-12


def test_twistor_strict_everywhere_sampled():
    for b in (0.5, 1.0, 1.8):
        rep = _estimates("M2", 1.0, b, 1.2)
        assert rep.twistor_strict
    for g in (0.6, 1.0, 1.9):
        rep = _estimates("M4", 1.0, 1.0, g)
        assert rep.twistor_strict


def test_estimate_crossovers_bracketing():
    b0 = 166.0 / 275.0
    d_lo = _estimates("M2", 1.0, b0 - 1e-6, 1.2)
    d_hi = _estimates("M2", 1.0, b0 + 1e-6, 1.2)
    assert d_lo.twistor_rhs - d_lo.friedrich_rhs > 0
    assert d_hi.twistor_rhs - d_hi.friedrich_rhs < 0
    g0 = 189.0 / 275.0
    d_lo = _estimates("M4", 1.0, 1.0, g0 - 1e-6)
    d_hi = _estimates("M4", 1.0, 1.0, g0 + 1e-6)
    assert d_lo.twistor_rhs - d_lo.friedrich_rhs > 0
    assert d_hi.twistor_rhs - d_hi.friedrich_rhs < 0


def test_estimates_require_parallel_torsion():
    ctx = pipeline("M4", alpha=1.0, beta=1.5, gamma=1.0)
    rep = spin.dirac_on_invariants(ctx["space"], ctx["conn"])
    with pytest.raises(TorsionNotParallel):
        spin.eigenvalue_estimates(rep, 10.0, conn=ctx["conn"])


def test_dirac_selfadjoint_and_symmetric_spectrum_m1():
    # no closed form exists for the 48-dimensional case; assert structure only
    ctx = pipeline("M1", alpha=1.0, beta=1.3, gamma=0.7)
    rep = spin.dirac_on_invariants(ctx["space"], ctx["conn"])
    assert rep.invariant_dim == 48
    ev = np.sort(rep.eigenvalues)
    assert np.max(np.abs(ev + ev[::-1])) < 1e-9


def test_parallel_spinors_are_torsion_eigenvectors():
    ctx = pipeline("M2", alpha=1.0, beta=1.0, gamma=1.0)
    rep = spin.dirac_on_invariants(ctx["space"], ctx["conn"])
    assert rep.parallel_spinor_dim == 16
    # with a vanishing connection map the Dirac matrix is the torsion term
    assert set(np.round(np.abs(rep.eigenvalues), 9)) == {round(np.sqrt(5.0), 9)}
    assert np.max(np.abs(np.abs(rep.torsion_op_eigenvalues) - 2 * np.sqrt(5.0))) < 1e-9
