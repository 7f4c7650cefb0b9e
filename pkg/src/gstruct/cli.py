"""Command-line front end: machine-readable analysis reports per space and
parameter choice, plus standalone representation-theory commands.

Exit codes: 0 success, 1 usage error, 2 infeasible-but-valid analysis,
3 internal invariant violation.  Reports are deterministic: identical
invocations produce byte-identical JSON (fixed field order, floats
rendered to 15 significant digits).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import groups, reps, sp3, spaces
from . import connections as con
from . import curvature as curv
from . import spin
from .errors import GstructError, Infeasible, StructureViolation
from .linalg import ToleranceProfile


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _round15(obj):
    """Normalize floats to 15 significant digits for stable rendering."""
    if isinstance(obj, dict):
        return {k: _round15(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round15(v) for v in obj]
    if isinstance(obj, (np.floating, float)):
        return float(f"{float(obj):.15g}")
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, np.ndarray):
        return _round15(obj.tolist())
    return obj


def _emit(report: dict, fmt: str):
    report = _round15(report)
    if fmt == "json":
        print(json.dumps(report, indent=2))
        return

    def walk(prefix, obj, lines):
        if isinstance(obj, dict):
            for k, v in obj.items():
                walk(f"{prefix}{k}." if prefix else f"{k}.", v, lines) if isinstance(
                    v, dict
                ) else lines.append((f"{prefix}{k}", v))
        else:
            lines.append((prefix.rstrip("."), obj))

    lines = []
    walk("", report, lines)
    width = max(len(k) for k, _ in lines)
    for k, v in lines:
        print(f"{k:<{width}}  {v}")


def _tolerance(args) -> ToleranceProfile:
    rank_tol = None
    if getattr(args, "tol", None) is not None:
        rank_tol = args.tol
    elif os.environ.get("GSTRUCT_TOL"):
        rank_tol = float(os.environ["GSTRUCT_TOL"])
    if rank_tol is None:
        return ToleranceProfile()
    return ToleranceProfile(rank_tol=rank_tol)


def _params_from_args(sid: str, args) -> spaces.MetricParams:
    extra_count = {"su4-so2": 7, "u4-so2so2": 5, "u4u1-so2so2so2": 5, "su5-sp2": 0}[sid]
    supplied = [getattr(args, f"alpha{i}") for i in range(2, 9)]
    supplied = [s for s in supplied if s is not None]
    if supplied and len(supplied) != extra_count:
        raise GstructError(
            f"{sid} takes {extra_count} extra alpha coefficients, got {len(supplied)}"
        )
    return spaces.MetricParams(
        alpha=args.alpha, alphas=tuple(supplied), beta=args.beta, gamma=args.gamma
    )


def cmd_analyze(args) -> int:
    tol = _tolerance(args)
    sid = spaces.canonical_id(args.space)
    params = _params_from_args(sid, args)
    space = spaces.build(sid, params, tol)
    fam = con.solve_equivariant(space, tol)

    report = {
        "space_id": sid,
        "params": {
            "alpha": params.alpha,
            "alphas": list(params.alphas),
            "beta": params.beta,
            "gamma": params.gamma,
        },
        "family_dim": fam.dim,
    }
    exit_code = 0
    try:
        conn = con.characteristic_connection(space, fam, tol)
    except Infeasible:
        conn = None
        exit_code = 2
    report["characteristic"] = {
        "exists": conn is not None,
        "lambda_nonzero_entries": (
            [[j, a, c] for j, a, c in conn.nonzero_entries()] if conn else None
        ),
    }

    if conn is not None:
        T = con.torsion(conn)
        parallel, _ = con.torsion_is_parallel(conn, T)
        comps = con.classify_type(T.t3, tol)
        report["torsion"] = {
            "norm2": T.norm2_increasing,
            "type_components": {str(k): v for k, v in sorted(comps.items())},
            "parallel": parallel,
        }
    else:
        T, parallel = None, False
        report["torsion"] = None

    if not args.no_holonomy and conn is not None:
        hol = con.holonomy_algebra(conn, tol)
        report["holonomy"] = {"dim": hol.dim, "label": hol.label}
    else:
        report["holonomy"] = None

    if not args.no_curvature:
        crep = curv.curvature_report(space, conn, tol)
        report["curvature"] = {
            "ricci_conn_diag": None if conn is None else np.diag(crep.ricci_conn),
            "ricci_riem_diag": np.diag(crep.ricci_riem),
            "scal_conn": None if conn is None else crep.scal_conn,
            "scal_riem": crep.scal_riem,
            "einstein_defect": crep.einstein_defect,
        }
    else:
        crep = None
        report["curvature"] = None

    if not args.no_spin:
        sub = spin.invariant_spinors(space, tol)
        spin_report = {"invariant_dim": sub.dim}
        if conn is not None and sub.dim > 0:
            drep = spin.dirac_on_invariants(space, conn, tol)
            if parallel and crep is not None:
                drep = spin.eigenvalue_estimates(
                    drep, crep.scal_riem, conn=conn, parallel_checked=True, tol=tol
                )
            spin_report.update(
                {
                    "dirac_eigenvalues": drep.eigenvalues,
                    "mu": float(np.max(np.abs(drep.torsion_op_eigenvalues))),
                    "torsion_norm2": drep.torsion_norm2,
                    "friedrich_rhs": drep.friedrich_rhs,
                    "twistor_rhs": drep.twistor_rhs,
                    "equality_flags": {
                        "friedrich_equality": drep.friedrich_equality,
                        "twistor_strict": drep.twistor_strict,
                    },
                    "parallel_spinor_dim": drep.parallel_spinor_dim,
                }
            )
        report["spin"] = spin_report
    else:
        report["spin"] = None

    _emit(report, args.format)
    return exit_code


def cmd_decompose(args) -> int:
    tol = _tolerance(args)
    if args.selector == "lambda3":
        rep = reps.lambda3_action(list(sp3.load().rho))
    elif args.selector == "v14xv70":
        rep = reps.v14_v70_rep()
    else:
        raise GstructError(f"unknown selector {args.selector!r}")
    dec = reps.isotypic_decompose(rep, tol)
    _emit(
        {
            "selector": args.selector,
            "total_dim": rep.dim,
            "parts": [{"casimir_eigenvalue": ev, "dim": d} for ev, d, _ in dec.parts],
        },
        args.format,
    )
    return 0


def cmd_theta(args) -> int:
    tol = _tolerance(args)
    if args.selector == "sp3":
        tmap = reps.theta_map(list(sp3.load().rho), tol)
    elif args.selector == "su3-adjoint":
        _, _, tmap = groups.theta_kernel_adjoint(groups.su_algebra(3), tol)
    else:
        raise GstructError(f"unknown selector {args.selector!r}")
    kdim, _ = reps.theta_kernel(tmap, tol)
    from .linalg import rank

    _emit(
        {
            "selector": args.selector,
            "shape": list(tmap.matrix.shape),
            "rank": rank(tmap.matrix, tol),
            "kernel_dim": kdim,
        },
        args.format,
    )
    return 0


def cmd_subgroups(args) -> int:
    tol = _tolerance(args)
    rows = []
    ok = True
    for row in sp3.subgroup_rows():
        got = reps.subgroup_decompose(row, tol)
        match = tuple(sorted(got)) == tuple(sorted(row.expected_blocks))
        ok = ok and match
        rows.append(
            {
                "name": row.name,
                "computed_blocks": sorted(got, reverse=True),
                "expected_blocks": sorted(row.expected_blocks, reverse=True),
                "match": match,
            }
        )
    _emit({"rows": rows}, args.format)
    return 0 if ok else 3


_LIEGROUP_ALGEBRAS = {
    "su2": (lambda: groups.su_algebra(2), ((0, 1, 2),)),
    "su3": (lambda: groups.su_algebra(3), (tuple(range(8)),)),
    "su2+su2": (lambda: groups.su2_plus_su2(), ((0, 1, 2), (3, 4, 5))),
}


def cmd_liegroup(args) -> int:
    tol = _tolerance(args)
    if args.selector not in _LIEGROUP_ALGEBRAS:
        raise GstructError(f"unknown selector {args.selector!r}")
    build, partition = _LIEGROUP_ALGEBRAS[args.selector]
    alg = build()
    kdim, _, tmap = groups.theta_kernel_adjoint(alg, tol)
    family = groups.canonical_torsion_family(alg, partition, tol)
    in_kernel = [
        float(np.linalg.norm(tmap.matrix @ v) / np.linalg.norm(v)) for v in family
    ]
    _emit(
        {
            "selector": args.selector,
            "dim": alg.dim,
            "theta_kernel_dim": kdim,
            "torsion_family_size": len(family),
            "family_in_kernel_residuals": in_kernel,
        },
        args.format,
    )
    return 0


def cmd_verify(args) -> int:
    from . import verify as verify_mod

    tol = _tolerance(args)
    results = verify_mod.run_all(space=args.space, tol=tol)
    failed = 0
    for name, ok, detail in results:
        status = "PASS" if ok else "FAIL"
        print(f"[{status}] {name}: {detail}")
        failed += 0 if ok else 1
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 0 if failed == 0 else 3


def make_parser() -> _Parser:
    p = _Parser(prog="gstruct", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="full report for one space at fixed parameters")
    pa.add_argument("space", help="space id or alias (su4-so2/M1, u4-so2so2/M2, ...)")
    pa.add_argument("--alpha", type=float, default=1.0)
    for i in range(2, 9):
        pa.add_argument(f"--alpha{i}", type=float, default=None)
    pa.add_argument("--beta", type=float, default=1.0)
    pa.add_argument("--gamma", type=float, default=1.0)
    pa.add_argument("--no-spin", action="store_true")
    pa.add_argument("--no-curvature", action="store_true")
    pa.add_argument("--no-holonomy", action="store_true")
    pa.set_defaults(func=cmd_analyze)

    pd = sub.add_parser("decompose", help="isotypic decomposition tables")
    pd.add_argument("selector", choices=["lambda3", "v14xv70"])
    pd.set_defaults(func=cmd_decompose)

    pt = sub.add_parser("theta", help="skew-torsion compatibility map ranks/kernels")
    pt.add_argument("selector", choices=["sp3", "su3-adjoint"])
    pt.set_defaults(func=cmd_theta)

    ps = sub.add_parser("subgroups", help="maximal-subgroup module splittings")
    ps.set_defaults(func=cmd_subgroups)

    pl = sub.add_parser("liegroup", help="biinvariant connection families")
    pl.add_argument("selector", choices=sorted(_LIEGROUP_ALGEBRAS))
    pl.set_defaults(func=cmd_liegroup)

    pv = sub.add_parser("verify", help="re-evaluate every closed-form claim (PASS/FAIL)")
    pv.add_argument("--space", default=None, help="restrict to one space id")
    pv.set_defaults(func=cmd_verify)

    for sp_ in (pa, pd, pt, ps, pl, pv):
        sp_.add_argument("--format", choices=["json", "table"], default="json")
        sp_.add_argument("--tol", type=float, default=None, help="rank tolerance override")
    return p


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (StructureViolation,) as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 3
    except GstructError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
