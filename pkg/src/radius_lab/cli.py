"""``radius-lab`` command line: compute radii, evaluate bounds, run verification, sweep, export W(A)."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import fields
from pathlib import Path
from typing import Sequence

import numpy as np

from .bounds import PARAMETERIZED, BoundEvaluation, check_ids, evaluate_all, evaluate_at
from .config import ToleranceConfig
from .ensembles import KINDS, EnsembleSpec
from .errors import DimensionMismatch, MatrixFormatError, RadiusLabError, UnknownBoundId
from .harness import emit_report, identity_suite, lemma_property_suite, run_verification, summary_lines
from .linalg import operator_norm
from .matrix_io import read_matrix
from .radii import boundary_angles, crawford_number, euclidean_radius, numerical_radius, numerical_range_boundary, real_product_inf

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_DIMENSION = 0, 1, 2, 3
SEED_ENV = "RADIUS_LAB_SEED"
EVAL_COLUMNS = ("bound_id", "kind", "target", "bound_value", "target_value", "slack", "satisfied", "paper_id")


class UsageError(Exception):
    pass


def _tol_flag(name: str) -> str:
    return "--tol-" + name.replace("_", "-")


def _add_tolerances(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("tolerances")
    for f in fields(ToleranceConfig):
        kind = int if f.type in (int, "int") else float
        g.add_argument(_tol_flag(f.name), dest=f"tol_{f.name}", type=kind, default=None, metavar=kind.__name__.upper())


def _config(args) -> ToleranceConfig:
    overrides = {f.name: getattr(args, f"tol_{f.name}") for f in fields(ToleranceConfig)}
    return ToleranceConfig(**{k: v for k, v in overrides.items() if v is not None})


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def _split_ids(text: str | None) -> list[str] | None:
    if text is None:
        return None
    ids = [t.strip() for t in text.split(",") if t.strip()]
    if not ids:
        raise UsageError("empty bound id list")
    return check_ids(ids)


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _g6(x: float) -> str:
    return format(x, ".6g")


# ---------------------------------------------------------------------------
# subcommands


def cmd_compute(args) -> int:
    cfg = _config(args)
    A = read_matrix(args.matrix)
    B = read_matrix(args.matrix2) if args.matrix2 else None
    if args.quantity in ("we", "rho") and B is None:
        raise UsageError(f"--quantity {args.quantity} requires --matrix2")
    if B is not None and B.shape != A.shape:
        raise DimensionMismatch(f"matrix shapes differ: {A.shape} vs {B.shape}")
    if args.quantity == "w":
        res = numerical_radius(A, cfg)
    elif args.quantity == "c":
        res = crawford_number(A, cfg)
    elif args.quantity == "we":
        res = euclidean_radius(A, B, cfg)
    elif args.quantity == "rho":
        res = real_product_inf(A, B, cfg)
    else:
        value, res = operator_norm(A), None
    value = res.value if res is not None else value
    if not args.json:
        print(format(value, ".12g"))
        return EXIT_OK
    payload = {"quantity": args.quantity, "value": value, "method": res.method if res else "eigvalsh"}
    vec = res.argmax_vector if res is not None else None
    payload["argmax_theta"] = res.argmax_theta if res is not None else None
    payload["argmax_vector"] = None if vec is None else [[float(z.real), float(z.imag)] for z in np.ravel(vec)]
    print(json.dumps(payload, sort_keys=True))
    return EXIT_OK


def _confirmed(evals: list[BoundEvaluation], A, B, cfg, params) -> list[BoundEvaluation]:
    failing = [e.bound_id for e in evals if not e.satisfied]
    if not failing:
        return evals
    again = {e.bound_id: e for e in evaluate_all(A, B, cfg.scaled(4), only=failing, **params)}
    return [again.get(e.bound_id, e) for e in evals]


def _status(e: BoundEvaluation, ineq_tol: float) -> str:
    if "error" in e.extra:
        return "ERROR"
    if not e.satisfied:
        return "FAIL"
    return "OK TIGHT" if e.is_tight(ineq_tol) else "OK"


def _table(evals: list[BoundEvaluation], ineq_tol: float) -> str:
    head = ("bound_id", "kind", "target", "bound", "target_value", "slack", "status")
    rows = [head] + [
        (e.bound_id, e.kind, e.target, _g6(e.bound_value), _g6(e.target_value), _g6(e.slack), _status(e, ineq_tol))
        for e in evals
    ]
    widths = [max(len(r[i]) for r in rows) for i in range(len(head))]
    return "".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n" for r in rows)


def cmd_bounds(args) -> int:
    cfg = _config(args)
    only = _split_ids(args.only)
    A = read_matrix(args.matrix)
    B = read_matrix(args.matrix2) if args.matrix2 else None
    if B is not None and B.shape != A.shape:
        raise DimensionMismatch(f"matrix shapes differ: {A.shape} vs {B.shape}")
    params = dict(alpha=args.alpha, alpha_steps=args.alpha_steps, r=args.r, s=args.s)
    evals = _confirmed(evaluate_all(A, B, cfg, only=only, **params), A, B, cfg, params)
    for e in evals:
        if "error" in e.extra:
            print(f"{e.bound_id}: {e.extra['error']}", file=sys.stderr)
    if args.format == "json":
        text = json.dumps([e.to_dict() for e in evals], indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(EVAL_COLUMNS)
        for e in evals:
            d = e.to_dict()
            writer.writerow([repr(d[k]) if isinstance(d[k], float) else d[k] for k in EVAL_COLUMNS])
        text = buf.getvalue()
    else:
        text = _table(evals, cfg.ineq_tol)
    sys.stdout.write(text)
    return EXIT_VIOLATION if any(not e.satisfied for e in evals) else EXIT_OK


def cmd_verify(args) -> int:
    cfg = _config(args)
    try:
        spec = EnsembleSpec(args.kind, args.dim, args.trials, _seed(args))
    except (TypeError, ValueError) as exc:
        raise UsageError(f"invalid ensemble: {exc}") from None
    if args.workers < 1:
        raise UsageError("--workers must be at least 1")
    if args.suite == "catalog":
        report = run_verification(spec, _split_ids(args.bounds), cfg, workers=args.workers)
    elif args.bounds is not None:
        raise UsageError("--bounds applies to the catalog suite only")
    elif args.suite == "lemmas":
        report = lemma_property_suite(spec, cfg, workers=args.workers)
    else:
        report = identity_suite(spec, cfg, workers=args.workers)
    if args.out:
        Path(args.out).write_bytes(emit_report(report, args.format))
    sys.stdout.write("".join(line + "\n" for line in summary_lines(report)))
    for err in report.errors:
        print(f"trial {err['trial_index']} {err['bound_id']}: {err['message']}", file=sys.stderr)
    return EXIT_VIOLATION if report.confirmed_violations else EXIT_OK


def sweep_grid(param: str, steps: int, r_max: float) -> np.ndarray:
    """alpha: closed grid on [0, 1]; s: interior points k/(steps+1); r: closed grid on [2, r_max]."""
    if steps < 1 or (param == "alpha" and steps < 2):
        raise UsageError(f"--steps too small for {param}: {steps}")
    if param == "alpha":
        return np.linspace(0.0, 1.0, steps)
    if param == "s":
        return np.arange(1, steps + 1) / (steps + 1)
    if r_max < 2:
        raise UsageError(f"--r-max must be at least 2, got {r_max}")
    return np.linspace(2.0, r_max, steps)


def cmd_sweep(args) -> int:
    cfg = _config(args)
    check_ids([args.bound])
    if PARAMETERIZED.get(args.bound) != args.param:
        raise UsageError(f"bound {args.bound} is not parameterized by {args.param}")
    A = read_matrix(args.matrix)
    B = read_matrix(args.matrix2) if args.matrix2 else None
    if B is None and args.bound != "corn1.lower":
        raise UsageError(f"bound {args.bound} requires --matrix2")
    if B is not None and B.shape != A.shape:
        raise DimensionMismatch(f"matrix shapes differ: {A.shape} vs {B.shape}")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("param", "bound_value", "target_value", "slack"))
    for v in sweep_grid(args.param, args.steps, args.r_max):
        e = evaluate_at(args.bound, A, B, float(v), cfg)
        writer.writerow([repr(float(v)), repr(e.bound_value), repr(e.target_value), repr(e.slack)])
    _write(buf.getvalue(), args.out)
    return EXIT_OK


def cmd_range(args) -> int:
    if args.points < 3:
        raise UsageError(f"--points must be at least 3, got {args.points}")
    A = read_matrix(args.matrix)
    pts = numerical_range_boundary(A, args.points)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("theta", "re", "im"))
    for t, z in zip(boundary_angles(args.points), pts):
        writer.writerow([repr(float(t)), repr(float(z.real)), repr(float(z.imag))])
    _write(buf.getvalue(), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="radius-lab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="numerical radius, Crawford number, norm, w_e or rho")
    p.add_argument("--matrix", required=True)
    p.add_argument("--matrix2")
    p.add_argument("--quantity", required=True, choices=("w", "c", "norm", "we", "rho"))
    p.add_argument("--json", action="store_true", help="print value and witness as JSON")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("bounds", help="evaluate the bound catalog on one matrix or a pair")
    p.add_argument("--matrix", required=True)
    p.add_argument("--matrix2")
    p.add_argument("--only", help="comma-separated bound ids")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.add_argument("--alpha", type=float, default=0.5)
    p.add_argument("--alpha-steps", type=int, default=11)
    p.add_argument("--r", type=float, default=2.0)
    p.add_argument("--s", type=float, default=0.5)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="run a seeded random-ensemble verification")
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--dim", required=True, type=int)
    p.add_argument("--trials", required=True, type=int)
    p.add_argument("--seed", type=int, help=f"ensemble seed (falls back to ${SEED_ENV}, then 0)")
    p.add_argument("--bounds", help="comma-separated bound ids (default: whole catalog)")
    p.add_argument("--suite", choices=("catalog", "lemmas", "identities"), default="catalog")
    p.add_argument("--out", help="write the full report here")
    p.add_argument("--format", choices=("json", "csv"), default="json", help="format of --out")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="evaluate one parameterized bound over a parameter grid")
    p.add_argument("--matrix", required=True)
    p.add_argument("--matrix2")
    p.add_argument("--param", required=True, choices=("alpha", "s", "r"))
    p.add_argument("--steps", required=True, type=int)
    p.add_argument("--bound", required=True, help=f"one of: {', '.join(sorted(PARAMETERIZED))}")
    p.add_argument("--r-max", type=float, default=6.0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("range", help="export boundary points of the numerical range")
    p.add_argument("--matrix", required=True)
    p.add_argument("--points", required=True, type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_range)

    for name in ("compute", "bounds", "verify", "sweep"):
        _add_tolerances(sub.choices[name])
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DimensionMismatch as exc:
        print(f"radius-lab: {exc}", file=sys.stderr)
        return EXIT_DIMENSION
    except UnknownBoundId as exc:
        print(f"radius-lab: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, MatrixFormatError, RadiusLabError, ValueError) as exc:
        print(f"radius-lab: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
