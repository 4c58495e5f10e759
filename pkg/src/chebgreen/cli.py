"""Command-line front end: export, solve, verify, benchmark.

Exit codes: 0 on success, 1 when a verification exceeds its recorded
tolerance or an output path cannot be written, 2 for usage errors.
"""

import argparse
import json
import sys
import time

import numpy as np

from .core import NodeVector, cheb_grid
from .green import METHODS, apply_green_matrix_free, green_matrix, solve_bvp
from .operators import (
    diff2_bc_matrix,
    green_bc_matrix,
    solve_stripped,
    verify_left_inverse,
    verify_right_inverse,
)
from .oracle import green_matrix_dense_oracle
from .quadrature import cc_weights, verify_d2_symmetry

_EPS = np.finfo(np.float64).eps

_RHS_NAMES = ("one", "x", "exp", "sin")


def _fmt(v):
    # 17 significant digits: enough for exact float round-trips
    return format(v, ".17g")


def _write_text(text, path):
    """Write to path, or stdout when path is None.  Returns an exit code."""
    if path is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {path}: {exc}", file=sys.stderr)
        return 1
    return 0


# ---------------------------------------------------------------------------
# green


def _cmd_green(args, parser):
    if args.n < 1:
        parser.error("--n must be >= 1")
    G = green_matrix(args.n).entries
    ordering = "descending"
    if args.ascending:
        G = G[::-1, ::-1]
        ordering = "ascending"
    if args.fmt == "csv":
        text = "\n".join(",".join(_fmt(v) for v in row) for row in G) + "\n"
    else:
        payload = {"degree": args.n, "ordering": ordering, "entries": G.tolist()}
        text = json.dumps(payload, indent=2) + "\n"
    return _write_text(text, args.out)


# ---------------------------------------------------------------------------
# solve


def _load_rhs(rhs_name, n, parser):
    x = cheb_grid(n).points
    if rhs_name == "one":
        return np.ones(n + 1)
    if rhs_name == "x":
        return x.copy()
    if rhs_name == "exp":
        return np.exp(x)
    if rhs_name == "sin":
        return np.sin(x)
    if rhs_name.startswith("file:"):
        path = rhs_name[5:]
        with open(path) as fh:
            lines = [ln.strip() for ln in fh]
        lines = [ln for ln in lines if ln]
        if len(lines) != n + 1:
            parser.error(f"{path} holds {len(lines)} values, expected {n + 1}")
        try:
            return np.array([float(ln) for ln in lines])
        except ValueError:
            parser.error(f"{path} contains a non-numeric line")
    parser.error(f"unknown --rhs {rhs_name!r}: choose from "
                 f"{', '.join(_RHS_NAMES)} or file:<path>")


def _cmd_solve(args, parser):
    if args.n < 1:
        parser.error("--n must be >= 1")
    if args.method != "dense-green" and args.n < 2:
        parser.error(f"method {args.method} needs --n >= 2")
    try:
        f = _load_rhs(args.rhs, args.n, parser)
    except OSError as exc:
        print(f"error: cannot read {exc.filename}: {exc}", file=sys.stderr)
        return 1
    y = solve_bvp(NodeVector(f, grid_degree=args.n), args.method)
    text = "\n".join(_fmt(v) for v in y.values) + "\n"
    return _write_text(text, args.out)


# ---------------------------------------------------------------------------
# verify


def _dev_oracle(n):
    return float(np.max(np.abs(green_matrix(n).entries
                               - green_matrix_dense_oracle(n).entries)))


def _dev_centrosymmetry(n):
    G = green_matrix(n).entries
    return float(np.max(np.abs(G - G[::-1, ::-1])))


def _dev_bc_inverse(n):
    A = diff2_bc_matrix(n).entries
    B = green_bc_matrix(n).entries
    eye = np.eye(n + 1)
    return max(
        float(np.max(np.abs(A @ B - eye))),
        float(np.max(np.abs(B @ A - eye))),
    )


def _dev_cc_weights(n):
    w = cc_weights(n).weights
    return max(abs(float(w.sum()) - 2.0), max(0.0, -float(w.min())))


def _tol_inverse(n):
    return max(1e-12, 40.0 * n**3 * _EPS)


def _tol_bc_inverse(n):
    # the embedded pair multiplies through D2, whose corner entries grow ~n^4
    return max(1e-12, 2.0 * n**4 * _EPS)


# name -> (min n, max n or None, deviation, recorded tolerance)
_CHECKS = {
    "oracle": (1, 10, _dev_oracle, lambda n: 1e-12),
    "centrosymmetry": (1, None, _dev_centrosymmetry, lambda n: 0.0),
    "cc-weights": (1, None, _dev_cc_weights, lambda n: 1e-13),
    "bc-inverse": (2, None, _dev_bc_inverse, _tol_bc_inverse),
    "left-inverse": (3, None, verify_left_inverse, _tol_inverse),
    "right-inverse": (4, None, verify_right_inverse, _tol_inverse),
    "symmetry": (3, None, verify_d2_symmetry, lambda n: max(1e-11, 4.0 * n**2 * _EPS)),
}


def _cmd_verify(args, parser):
    if args.n < 1:
        parser.error("--n must be >= 1")
    if args.check == "all":
        names = [name for name, (lo, hi, _, _) in _CHECKS.items()
                 if args.n >= lo and (hi is None or args.n <= hi)]
    else:
        lo, hi, _, _ = _CHECKS[args.check]
        if args.n < lo:
            parser.error(f"check {args.check} needs --n >= {lo}")
        if hi is not None and args.n > hi:
            parser.error(f"check {args.check} is limited to --n <= {hi}")
        names = [args.check]
    rows = []
    ok = True
    for name in names:
        _, _, dev_fn, tol_fn = _CHECKS[name]
        dev = float(dev_fn(args.n))
        tol = float(tol_fn(args.n))
        ok = ok and dev <= tol
        rows.append({"check": name, "n": args.n, "deviation": dev, "tolerance": tol})
    sys.stdout.write(json.dumps(rows, indent=2) + "\n")
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# bench


def _median_ms(fn, repeat):
    samples = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        samples.append((time.perf_counter() - t0) * 1e3)
    return float(np.median(samples))


def _cmd_bench(args, parser):
    try:
        n_list = [int(tok) for tok in args.n_list.split(",") if tok.strip()]
    except ValueError:
        parser.error(f"--n-list must be comma-separated integers, got {args.n_list!r}")
    if not n_list or any(n < 3 for n in n_list):
        parser.error("--n-list entries must each be >= 3")
    if args.repeat < 1:
        parser.error("--repeat must be >= 1")
    rows = []
    for n in n_list:
        G = green_matrix(n)
        f = NodeVector(np.exp(cheb_grid(n).points), grid_degree=n)
        times = {
            "build": _median_ms(lambda: green_matrix(n), args.repeat),
            "dense-apply": _median_ms(lambda: G.entries @ f.values, args.repeat),
            "matrix-free-apply": _median_ms(
                lambda: apply_green_matrix_free(f), args.repeat),
            "stripped-solve": _median_ms(lambda: solve_stripped(f), args.repeat),
        }
        rows.append({"n": n, "times_ms": times})
    return _write_text(json.dumps(rows, indent=2) + "\n", args.out)


# ---------------------------------------------------------------------------


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="chebgreen",
        description="Pseudospectral Green-matrix tools for u'' = f with "
                    "zero Dirichlet data on [-1, 1].",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("green", help="export the Green matrix")
    p.add_argument("--n", type=int, required=True, help="grid degree")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")
    p.add_argument("--ascending", action="store_true",
                   help="emit rows/columns in ascending node order")
    p.set_defaults(func=_cmd_green)

    p = sub.add_parser("solve", help="solve the boundary-value problem")
    p.add_argument("--n", type=int, required=True, help="grid degree")
    p.add_argument("--rhs", required=True,
                   help="one of one, x, exp, sin, or file:<path>")
    p.add_argument("--method", choices=METHODS, default="dense-green")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="run invariant checks")
    p.add_argument("--n", type=int, required=True, help="grid degree")
    p.add_argument("--check", default="all",
                   choices=tuple(_CHECKS) + ("all",))
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bench", help="time the main code paths")
    p.add_argument("--n-list", required=True,
                   help="comma-separated grid degrees, each >= 3")
    p.add_argument("--repeat", type=int, default=5,
                   help="samples per timing (median is reported)")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    raise SystemExit(main())
