"""Batch verification of the bound catalog, lemma checks and identities over ensembles."""

from __future__ import annotations

import csv
import io
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

import numpy as np

from .bounds import ALL_IDS, PAIR_IDS, check_ids, evaluate_all
from .config import DEFAULT_CONFIG, ToleranceConfig
from .ensembles import EnsembleSpec, draw, generate_matrix, generate_pair, trial_rng, trial_seed
from .linalg import operator_norm, psd_power, re_part
from .matrix_io import matrix_to_dict
from .radii import euclidean_radius, numerical_radius

LEMMA_IDS = ("b2", "b3", "lem1", "lem11")
IDENTITY_IDS = ("identity.self_adjoint", "identity.sum_difference")
CSV_COLUMNS = ("bound_id", "trials", "violations", "min_slack", "mean_slack", "tightness_hits")


@dataclass
class ViolationRecord:
    """A trial where a check failed; ``reverified`` means it still failed at 4x resolution."""

    bound_id: str
    trial_index: int
    seed_used: int
    matrices: list[dict]
    bound_value: float
    target_value: float
    slack: float
    reverified: bool

    def to_dict(self) -> dict:
        return {
            "bound_id": self.bound_id,
            "trial_index": self.trial_index,
            "seed_used": self.seed_used,
            "matrices": self.matrices,
            "bound_value": self.bound_value,
            "target_value": self.target_value,
            "slack": self.slack,
            "reverified": self.reverified,
        }


@dataclass
class BoundStats:
    trials: int = 0
    violations: int = 0
    confirmed: int = 0
    min_slack: float = math.inf
    tightness_hits: int = 0
    slacks: list[float] = field(default_factory=list, repr=False)

    @property
    def mean_slack(self) -> float:
        return math.fsum(self.slacks) / len(self.slacks) if self.slacks else math.nan

    def add(self, slack: float, tight: bool) -> None:
        self.trials += 1
        self.slacks.append(slack)
        self.min_slack = min(self.min_slack, slack)
        self.tightness_hits += int(tight)

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "violations": self.violations,
            "confirmed": self.confirmed,
            "min_slack": _finite_or_none(self.min_slack),
            "mean_slack": _finite_or_none(self.mean_slack),
            "tightness_hits": self.tightness_hits,
        }


def _finite_or_none(x: float) -> float | None:
    return x if math.isfinite(x) else None


@dataclass
class VerificationReport:
    """Per-check statistics and failure records from one ensemble run."""

    ensemble: EnsembleSpec
    per_bound: dict[str, BoundStats]
    violations: list[ViolationRecord]
    errors: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def confirmed_violations(self) -> int:
        return sum(1 for v in self.violations if v.reverified)

    def to_dict(self) -> dict:
        return {
            "ensemble": self.ensemble.to_dict(),
            "per_bound": {k: self.per_bound[k].to_dict() for k in sorted(self.per_bound)},
            "violations": [v.to_dict() for v in self.violations],
            "errors": self.errors,
            "wall_time": self.wall_time,
        }


# ---------------------------------------------------------------------------
# catalog runs


def _trial_matrices(spec: EnsembleSpec, trial: int, pair: bool) -> tuple[np.ndarray, np.ndarray | None]:
    if pair:
        return generate_pair(spec, trial)
    return generate_matrix(spec, trial), None


def _catalog_trial(args) -> tuple[list[tuple[str, float, bool]], list[ViolationRecord], list[dict]]:
    spec, trial, ids, cfg, pair = args
    B, C = _trial_matrices(spec, trial, pair)
    evals = evaluate_all(B, C, cfg, only=ids)
    rows, errors, raw = [], [], []
    for e in evals:
        if "error" in e.extra:
            errors.append({"trial_index": trial, "bound_id": e.bound_id, "message": e.extra["error"]})
            continue
        rows.append((e.bound_id, e.slack, e.is_tight(cfg.ineq_tol)))
        if not e.satisfied:
            raw.append(e)
    records = []
    if raw:
        fine = {e.bound_id: e for e in evaluate_all(B, C, cfg.scaled(4), only=[e.bound_id for e in raw])}
        mats = [matrix_to_dict(M) for M in (B, C) if M is not None]
        for e in raw:
            again = fine[e.bound_id]
            records.append(
                ViolationRecord(
                    e.bound_id,
                    trial,
                    trial_seed(spec, trial),
                    mats,
                    e.bound_value,
                    e.target_value,
                    e.slack,
                    reverified=not again.satisfied,
                )
            )
    return rows, records, errors


def _map(fn: Callable, jobs: list, workers: int) -> list:
    if workers <= 1:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs, chunksize=max(1, len(jobs) // (4 * workers))))


def _assemble(spec, ids, results, started) -> VerificationReport:
    stats = {i: BoundStats() for i in ids}
    violations: list[ViolationRecord] = []
    errors: list[dict] = []
    for rows, records, errs in results:
        for bound_id, slack, tight in rows:
            stats[bound_id].add(slack, tight)
        for rec in records:
            stats[rec.bound_id].violations += 1
            stats[rec.bound_id].confirmed += int(rec.reverified)
        violations += records
        errors += errs
    return VerificationReport(spec, stats, violations, errors, time.perf_counter() - started)


def run_verification(
    spec: EnsembleSpec,
    bound_ids: Iterable[str] | None = None,
    cfg: ToleranceConfig = DEFAULT_CONFIG,
    *,
    workers: int = 1,
    pair: bool | None = None,
) -> VerificationReport:
    """Evaluate catalog bounds on every trial of an ensemble.

    With ``pair=None`` a pair (B, C) is drawn per trial whenever a pair bound
    is requested, otherwise a single matrix. A raw violation is re-run with
    4x angle grid and 4x restarts; only a violation that survives is marked
    ``reverified``. Results do not depend on `workers`.
    """
    ids = sorted(set(check_ids(bound_ids))) if bound_ids is not None else list(ALL_IDS)
    if not ids:
        raise ValueError("bound_ids must be a nonempty subset of the catalog")
    if pair is None:
        pair = any(i in PAIR_IDS for i in ids)
    started = time.perf_counter()
    jobs = [(spec, t, ids, cfg, pair) for t in range(spec.trials)]
    return _assemble(spec, ids, _map(_catalog_trial, jobs, workers), started)


# ---------------------------------------------------------------------------
# lemma and identity suites


def _unit(rng: np.random.Generator, n: int) -> np.ndarray:
    z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return z / np.linalg.norm(z)


def _lemma_checks(A: np.ndarray, rng: np.random.Generator) -> dict[str, tuple[float, float]]:
    """(lhs, rhs) per lemma; each asks lhs <= rhs."""
    n = A.shape[0]
    x, y, e = _unit(rng, n), _unit(rng, n), _unit(rng, n)
    alpha = rng.uniform(0.0, 1.0)
    s = rng.uniform(0.0, 1.0)
    p = rng.uniform(2.0, 8.0)
    AtA, AAt = A.conj().T @ A, A @ A.conj().T
    axy = abs(np.vdot(y, A @ x))

    lem1_rhs = np.real(np.vdot(x, psd_power(AtA, alpha) @ x)) * np.real(np.vdot(y, psd_power(AAt, 1.0 - alpha) @ y))

    # Buzano with non-unit x, y
    xs, ys = x * rng.uniform(0.1, 1.0), y * rng.uniform(0.1, 1.0)
    lem11_lhs = abs(np.vdot(e, xs) * np.vdot(ys, e))
    lem11_rhs = 0.5 * (abs(np.vdot(ys, xs)) + np.linalg.norm(xs) * np.linalg.norm(ys))

    a = rng.uniform(0.0, 1.0, size=int(rng.integers(1, 12))) + 1e-12
    mean = a.mean()
    b3_rhs = np.mean(a**p) - np.mean(np.abs(a - mean) ** p)

    b2_rhs = np.linalg.norm(psd_power(AtA, s / 2) @ x) * np.linalg.norm(psd_power(AAt, (1.0 - s) / 2) @ y)
    return {
        "lem1": (axy**2, float(lem1_rhs)),
        "lem11": (float(lem11_lhs), float(lem11_rhs)),
        "b3": (float(mean**p), float(b3_rhs)),
        "b2": (float(axy), float(b2_rhs)),
    }


def _lemma_trial(args):
    spec, trial, tol = args
    rng = trial_rng(spec, trial)
    A = draw(spec.kind, spec.dim, rng)
    nrm = operator_norm(A)
    if nrm > 0:
        A = A / nrm
    rows, records = [], []
    for lemma, (lhs, rhs) in _lemma_checks(A, rng).items():
        slack = rhs - lhs
        rows.append((lemma, slack, slack <= 10 * tol))
        if slack < -tol:
            records.append(
                ViolationRecord(lemma, trial, trial_seed(spec, trial), [matrix_to_dict(A)], lhs, rhs, slack, True)
            )
    return rows, records, []


def lemma_property_suite(
    spec: EnsembleSpec,
    cfg: ToleranceConfig = DEFAULT_CONFIG,
    *,
    tol: float = 1e-10,
    workers: int = 1,
) -> VerificationReport:
    """Scalar and vector lemma checks on unit-scale random inputs.

    Per trial: a matrix from the ensemble scaled to unit operator norm, unit
    vectors x, y, e, and random alpha, s in [0, 1], p in [2, 8], a positive
    sequence in (0, 1]. Checks the mixed Cauchy-Schwarz inequality (lem1),
    Buzano's inequality (lem11), the superquadratic Jensen inequality (b3)
    and the generalized Cauchy-Schwarz inequality with t^s, t^(1-s) (b2) to
    absolute tolerance `tol`. Failures are exact computations, so every
    record counts as confirmed.
    """
    started = time.perf_counter()
    jobs = [(spec, t, tol) for t in range(spec.trials)]
    return _assemble(spec, list(LEMMA_IDS), _map(_lemma_trial, jobs, workers), started)


def _identity_trial(args):
    spec, trial, cfg, rel_tol = args
    B, C = generate_pair(spec, trial)
    P, Q = re_part(B), re_part(C)
    checks = {
        "identity.sum_difference": (
            euclidean_radius(B + C, B - C, cfg).value ** 2,
            2.0 * euclidean_radius(B, C, cfg).value ** 2,
            (B, C),
        ),
        "identity.self_adjoint": (
            euclidean_radius(P, Q, cfg).value,
            numerical_radius(P + 1j * Q, cfg).value,
            (P, Q),
        ),
    }
    rows, records = [], []
    for name, (lhs, rhs, mats) in checks.items():
        slack = rel_tol * abs(rhs) - abs(lhs - rhs)
        rows.append((name, slack, False))
        if slack < 0:
            records.append(
                ViolationRecord(
                    name, trial, trial_seed(spec, trial), [matrix_to_dict(M) for M in mats], lhs, rhs, slack, True
                )
            )
    return rows, records, []


def identity_suite(
    spec: EnsembleSpec,
    cfg: ToleranceConfig = DEFAULT_CONFIG,
    *,
    rel_tol: float = 1e-6,
    workers: int = 1,
) -> VerificationReport:
    """Check w_e^2(B+C, B-C) = 2 w_e^2(B, C) and, for Hermitian P, Q, w_e(P, Q) = w(P + iQ).

    The Hermitian pair is (Re B, Re C) of the drawn pair. ``slack`` is
    ``rel_tol * |rhs| - |lhs - rhs|``.
    """
    started = time.perf_counter()
    jobs = [(spec, t, cfg, rel_tol) for t in range(spec.trials)]
    return _assemble(spec, list(IDENTITY_IDS), _map(_identity_trial, jobs, workers), started)


# ---------------------------------------------------------------------------
# report emission


def emit_report(report: VerificationReport, format: str = "json") -> bytes:
    """Serialize a report: full nested JSON, or one CSV row per bound id."""
    if format == "json":
        return (json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n").encode("utf-8")
    if format != "csv":
        raise ValueError(f"unknown report format {format!r}")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for bound_id in sorted(report.per_bound):
        st = report.per_bound[bound_id]
        writer.writerow(
            [bound_id, st.trials, st.violations, _csv_float(st.min_slack), _csv_float(st.mean_slack), st.tightness_hits]
        )
    return buf.getvalue().encode("utf-8")


def _csv_float(x: float) -> str:
    return repr(float(x)) if math.isfinite(x) else ""


def summary_lines(report: VerificationReport) -> list[str]:
    """Human-readable per-bound summary without timing, stable across runs."""
    e = report.ensemble
    lines = [f"ensemble kind={e.kind} dim={e.dim} trials={e.trials} seed={e.seed}"]
    for bound_id in sorted(report.per_bound):
        st = report.per_bound[bound_id]
        lines.append(
            f"{bound_id:24s} trials={st.trials} violations={st.violations} confirmed={st.confirmed} "
            f"min_slack={st.min_slack:.6g} tight={st.tightness_hits}"
        )
    lines.append(f"confirmed violations: {report.confirmed_violations}; errors: {len(report.errors)}")
    return lines


def report_from_dict(payload: dict[str, Any]) -> VerificationReport:
    """Inverse of :meth:`VerificationReport.to_dict` (slack lists are not kept)."""
    spec = EnsembleSpec(**payload["ensemble"])
    stats = {}
    for k, d in payload["per_bound"].items():
        st = BoundStats(d["trials"], d["violations"], d["confirmed"], d["min_slack"] if d["min_slack"] is not None else math.inf, d["tightness_hits"])
        if d["mean_slack"] is not None:
            st.slacks = [d["mean_slack"]]
        stats[k] = st
    violations = [ViolationRecord(**v) for v in payload["violations"]]
    return VerificationReport(spec, stats, violations, payload["errors"], payload["wall_time"])
