"""pgeigen command line: qnum, enum, matrix, basis, verify, crosscheck.

Every subcommand writes JSON: one document for qnum and matrix, one record
per line for enum, basis and verify.  Exit status is 0 when everything
passed, 1 when a suite failed or was skipped, 2 on bad invocation.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import qcomb, verify
from .eigenbasis import enumerate_indices, build_vector
from .errors import PgeigenError
from .field import field_for_q
from .lattice import enumerate_all, enumerate_subspaces, lattice
from .operators import adjacency_entry, dual_entry
from .scalars import _fmt_rational

SUITE_ORDER = ("eigen", "orth", "qpoly", "structure")


def parse_phi(text: str):
    """'symbolic' -> None, otherwise an exact Fraction from 'a/b' or a decimal."""
    if text == "symbolic":
        return None
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"phi must be 'symbolic', a/b or a decimal, got {text!r}")
    if value <= 0:
        raise argparse.ArgumentTypeError(f"phi must be positive, got {text}")
    return value


def _nonneg(text):
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return n


def _positive(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, required=True, help="field order (prime power <= 16)")
    common.add_argument("--n", type=_nonneg, required=True, help="ambient dimension")
    common.add_argument("--out", default="-", help="output file, '-' for stdout")

    parser = argparse.ArgumentParser(prog="pgeigen", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("qnum", parents=[common], help="Gaussian binomials and Galois number")

    p = sub.add_parser("enum", parents=[common], help="stream the subspaces of F_q^n")
    p.add_argument("--k", type=_nonneg, default=None, help="only subspaces of this dimension")

    p = sub.add_parser("matrix", parents=[common], help="export A_n and A_n* as sparse entries")
    p.add_argument("--phi", type=parse_phi, default=None, help="'symbolic', a/b or decimal")

    p = sub.add_parser("basis", parents=[common], help="stream the eigenbasis")
    p.add_argument("--phi", type=parse_phi, default=None)

    p = sub.add_parser("verify", parents=[common], help="run exact verification suites")
    p.add_argument("--suite", choices=SUITE_ORDER + ("all",), default="all")
    p.add_argument("--phi", type=parse_phi, default=None,
                   help="check at a rational phi instead of symbolically")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pair-budget", type=_positive, default=None)
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--max-subspaces", type=_positive, default=verify.DEFAULT_MAX_SUBSPACES)

    p = sub.add_parser("crosscheck", parents=[common], help="floating-point spectrum check")
    p.add_argument("--phi", type=parse_phi, required=True)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--max-subspaces", type=_positive, default=verify.DEFAULT_MAX_SUBSPACES)
    return parser


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _scalar_json(poly, phi):
    if phi is None:
        return poly.to_json()
    return poly.evaluate(phi).to_json()


def cmd_qnum(args, field, out):
    out.write(_dump({"q": args.q, "n": args.n, "qbinom": qcomb.qbinom_row(args.n, args.q),
                     "galois": qcomb.galois(args.n, args.q)}) + "\n")
    return 0


def cmd_enum(args, field, out):
    subs = enumerate_all(field, args.n) if args.k is None else enumerate_subspaces(field, args.n, args.k)
    for X in subs:
        out.write(_dump(X.to_json()) + "\n")
    return 0


def cmd_matrix(args, field, out):
    lat = lattice(field, args.n)
    adjacency = []
    for i, X in enumerate(lat.elements):
        for j in sorted([i] + lat.down[i] + lat.up[i]):
            value = adjacency_entry(X, lat.elements[j])
            adjacency.append({"row": i, "col": j, "value": _scalar_json(value, args.phi)})
    dual = [{"row": i, "col": i, "value": _fmt_rational(dual_entry(X))}
            for i, X in enumerate(lat.elements)]
    doc = {"q": args.q, "n": args.n, "field": field.to_json(),
           "phi": "symbolic" if args.phi is None else _fmt_rational(args.phi),
           "subspaces": [X.to_json() for X in lat.elements],
           "adjacency": adjacency, "dual": dual}
    out.write(_dump(doc) + "\n")
    return 0


def cmd_basis(args, field, out):
    for alpha in enumerate_indices(field, args.n):
        v = build_vector(alpha, field)
        lam = qcomb.eigenvalue_poly(args.n, alpha.weight, field.q, p=field.p)
        if args.phi is None:
            vec = v.to_json()
        else:
            vec = {"n": v.n, "entries": [{"subspace": X.to_json(), "scalar": c.evaluate(args.phi).to_json()}
                                         for X, c in v.items()]}
        out.write(_dump({"index": alpha.to_json(), "weight": alpha.weight,
                         "eigenvalue": _scalar_json(lam, args.phi), "vector": vec}) + "\n")
    return 0


def _run_suite(job):
    name, q, n, phi, seed, budget, max_subspaces = job
    field = field_for_q(q)
    if name == "eigen":
        r = verify.suite_eigen(field, n, phi=phi, max_subspaces=max_subspaces)
    elif name == "orth":
        r = verify.suite_orthogonality(field, n, pair_budget=budget, seed=seed, phi=phi,
                                       max_subspaces=max_subspaces)
    elif name == "qpoly":
        r = verify.suite_qpoly(field, n, pair_budget=budget, seed=seed, phi=phi,
                               max_subspaces=max_subspaces)
    else:
        r = verify.suite_structure(field, n, seed=seed, max_subspaces=max_subspaces)
    return r.to_json()


def cmd_verify(args, field, out):
    names = SUITE_ORDER if args.suite == "all" else (args.suite,)
    jobs = [(name, args.q, args.n, args.phi, args.seed, args.pair_budget, args.max_subspaces)
            for name in names]
    if args.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            reports = list(pool.map(_run_suite, jobs))
    else:
        reports = [_run_suite(job) for job in jobs]
    for rep in reports:
        out.write(_dump(rep) + "\n")
    return 0 if all(rep["passed"] for rep in reports) else 1


def cmd_crosscheck(args, field, out):
    rep = verify.suite_crosscheck(field, args.n, args.phi, tolerance=args.tol,
                                  max_subspaces=args.max_subspaces)
    out.write(_dump(rep.to_json()) + "\n")
    return 0 if rep.passed else 1


COMMANDS = {"qnum": cmd_qnum, "enum": cmd_enum, "matrix": cmd_matrix, "basis": cmd_basis,
            "verify": cmd_verify, "crosscheck": cmd_crosscheck}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        field = field_for_q(args.q)
    except PgeigenError as exc:
        print(f"pgeigen: {exc}", file=sys.stderr)
        return 2
    out = sys.stdout if args.out == "-" else open(args.out, "w", encoding="utf-8")
    try:
        return COMMANDS[args.command](args, field, out)
    except PgeigenError as exc:
        print(f"pgeigen: {exc}", file=sys.stderr)
        return 2
    finally:
        if out is not sys.stdout:
            out.close()


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
