"""Numerical radius, Crawford number, Euclidean operator radius and related extrema.

The production routes reduce every quantity to Hermitian eigenvalue problems:

* ``w(A) = max_theta lambda_max(Re(e^{i theta} A))`` (support-function sweep),
* ``c(A) = max(0, max_theta lambda_min(Re(e^{i theta} A)))``,
* ``w_e(B, C) = max over unit u in R^4 of lambda_max(u . (Re B, Im B, Re C, Im C))``.

The last identity is the same reduction as maximizing
``w(cos t B + e^{i phi} sin t C)`` over ``(t, phi)``: in Hopf coordinates
``(t, phi, theta)`` the unit vector ``u`` sweeps the whole 3-sphere.

:func:`sphere_oracle_radius` attacks the same suprema directly over unit
vectors in C^n by projected gradient ascent, and exists only to cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .config import DEFAULT_CONFIG, ToleranceConfig
from .errors import DimensionMismatch
from .linalg import as_matrix, im_part, re_part

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class RadiusResult:
    """Value of a radius-type extremum plus whatever witness the method produced."""

    value: float
    method: str
    argmax_theta: float | None = None
    argmax_vector: np.ndarray | None = None


def _pair(B, C) -> tuple[np.ndarray, np.ndarray]:
    B = as_matrix(B)
    C = np.zeros_like(B) if C is None else as_matrix(C)
    if B.shape != C.shape:
        raise DimensionMismatch(f"shapes {B.shape} and {C.shape} differ")
    return B, C


def _rotated(H: np.ndarray, K: np.ndarray, thetas: np.ndarray) -> np.ndarray:
    """Stack of Re(e^{i theta} A) for A = H + iK."""
    return np.cos(thetas)[:, None, None] * H - np.sin(thetas)[:, None, None] * K


def support_value(A, theta: float) -> float:
    """lambda_max(Re(e^{i theta} A))."""
    A = as_matrix(A)
    M = _rotated(re_part(A), im_part(A), np.array([theta]))[0]
    return float(np.linalg.eigvalsh(M)[-1])


def _golden_max(f: Callable[[np.ndarray], np.ndarray], lo: np.ndarray, hi: np.ndarray, tol: float):
    """Golden-section maximization run on many brackets at once.

    Stops when every bracket is narrower than `tol`, or earlier once the two
    interior probes of every bracket agree to rounding. Returns the best
    abscissa and value seen in each bracket.
    """
    a, b = lo.astype(float).copy(), hi.astype(float).copy()
    width = float(np.max(b - a))
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    steps = max(0, math.ceil(math.log(tol / width) / math.log(INV_PHI))) if width > tol else 0
    for _ in range(steps):
        if np.all(np.abs(fc - fd) <= 4.0 * np.finfo(float).eps * np.maximum(np.abs(fc), 1e-300)):
            break
        left = fc >= fd
        # keep [a, d] where the left probe won, [c, b] otherwise
        b = np.where(left, d, b)
        a = np.where(left, a, c)
        keep_x = np.where(left, c, d)
        keep_f = np.where(left, fc, fd)
        x = np.where(left, b - INV_PHI * (b - a), a + INV_PHI * (b - a))
        fx = f(x)
        c = np.where(left, x, keep_x)
        fc = np.where(left, fx, keep_f)
        d = np.where(left, keep_x, x)
        fd = np.where(left, keep_f, fx)
    take_c = fc >= fd
    return np.where(take_c, c, d), np.where(take_c, fc, fd)


def _local_max_indices(vals: np.ndarray) -> np.ndarray:
    """Indices of circular local maxima; a flat run reports its last index."""
    prev = np.roll(vals, 1)
    nxt = np.roll(vals, -1)
    return np.flatnonzero((vals >= prev) & (vals > nxt))


def _best(thetas: np.ndarray, values: np.ndarray) -> tuple[float, float]:
    """Largest value, ties broken by the smallest angle in [0, 2 pi)."""
    thetas = np.mod(thetas, TWO_PI)
    top = np.max(values)
    tied = thetas[values == top]
    return float(top), float(np.min(tied))


def _sweep(A: np.ndarray, cfg: ToleranceConfig, lowest: bool) -> tuple[float, float, np.ndarray, np.ndarray]:
    """Maximize lambda_max (or lambda_min) of Re(e^{i theta} A) over theta.

    Returns (value, theta, H, K) where H, K are the Cartesian parts.
    """
    H, K = re_part(A), im_part(A)
    col = 0 if lowest else -1

    def f(thetas: np.ndarray) -> np.ndarray:
        return np.linalg.eigvalsh(_rotated(H, K, thetas))[:, col]

    n = cfg.theta_grid
    step = TWO_PI / n
    grid = np.arange(n) * step
    vals = f(grid)
    gmax = float(np.max(vals))
    # |d/dtheta lambda| <= ||H sin + K cos|| <= sqrt(||H||_F^2 + ||K||_F^2)
    lip = math.hypot(np.linalg.norm(H), np.linalg.norm(K))
    if lowest and gmax + lip * step <= 0.0:
        value, theta = _best(grid, vals)
        return value, theta, H, K
    spread = gmax - float(np.min(vals))
    if spread <= 1e-14 * max(1.0, abs(gmax)):
        value, theta = _best(grid, vals)
        return value, theta, H, K
    peaks = _local_max_indices(vals)
    peaks = peaks[vals[peaks] >= gmax - lip * step]
    if peaks.size == 0:
        peaks = np.array([int(np.argmax(vals))])
    lo = grid[peaks] - step
    hi = grid[peaks] + step
    xs, fx = _golden_max(f, lo, hi, cfg.refine_tol)
    value, theta = _best(np.concatenate([grid, xs]), np.concatenate([vals, fx]))
    return value, theta, H, K


def numerical_radius(A, cfg: ToleranceConfig = DEFAULT_CONFIG) -> RadiusResult:
    """w(A) by a support-function sweep with golden-section refinement.

    The angle grid has ``cfg.theta_grid`` points; every grid-local maximum that
    could still hide the global one (by a Lipschitz bound) is refined to a
    bracket of width ``cfg.refine_tol``. The witness is the top eigenvector
    of ``Re(e^{i theta} A)`` at the best angle, so ``|<Ax, x>| >= value``.
    """
    A = as_matrix(A)
    value, theta, H, K = _sweep(A, cfg, lowest=False)
    M = np.cos(theta) * H - np.sin(theta) * K
    x = np.linalg.eigh(M)[1][:, -1]
    return RadiusResult(max(value, 0.0), "angle_sweep", theta, x)


def crawford_number(A, cfg: ToleranceConfig = DEFAULT_CONFIG) -> RadiusResult:
    """c(A) as the best supporting half-plane margin of the numerical range.

    The witness vector is only attached when the value is positive.
    """
    A = as_matrix(A)
    value, theta, H, K = _sweep(A, cfg, lowest=True)
    if value <= 0.0:
        return RadiusResult(0.0, "angle_sweep", theta, None)
    M = np.cos(theta) * H - np.sin(theta) * K
    x = np.linalg.eigh(M)[1][:, 0]
    return RadiusResult(value, "angle_sweep", theta, x)


def _hopf_grid(n_ang: int) -> np.ndarray:
    """Distinct unit vectors u(t, phi, theta), t in [0, pi/2], phi and theta in [0, 2 pi).

    Hopf coordinates collapse at t = 0 and t = pi/2; duplicates are dropped.
    """
    t = np.linspace(0.0, math.pi / 2, n_ang // 2 + 1)
    ang = np.arange(n_ang) * (TWO_PI / n_ang)
    T, F, TH = np.meshgrid(t, ang, ang, indexing="ij")
    U = np.stack(
        [
            np.cos(T) * np.cos(TH),
            -np.cos(T) * np.sin(TH),
            np.sin(T) * np.cos(TH + F),
            -np.sin(T) * np.sin(TH + F),
        ],
        axis=-1,
    ).reshape(-1, 4)
    _, first = np.unique(np.round(U, 12), axis=0, return_index=True)
    return U[np.sort(first)]


def _spread_seeds(U: np.ndarray, values: np.ndarray, count: int, radius: float) -> list[int]:
    """Best grid points, skipping any within `radius` of a point already taken."""
    chosen: list[int] = []
    for g in np.argsort(-values, kind="stable"):
        if all(np.linalg.norm(U[g] - U[h]) > radius for h in chosen):
            chosen.append(int(g))
            if len(chosen) == count:
                break
    return chosen


def _joint_values(parts: np.ndarray, x: np.ndarray) -> np.ndarray:
    """(<H_k x, x>)_k as a real vector."""
    return np.real(np.einsum("i,kij,j->k", x.conj(), parts, x))


def _alternating_ascent(parts: np.ndarray, u: np.ndarray, max_iter: int = 10_000):
    """Maximize ||(<H_k x, x>)_k|| by alternating exact block updates.

    x <- top eigenvector of sum_k u_k H_k, then u <- v(x)/||v(x)||. Both
    steps can only increase the value, which is attained at the returned x.
    """
    best = -1.0
    x = None
    for _ in range(max_iter):
        M = np.tensordot(u, parts, axes=1)
        x_new = np.linalg.eigh(M)[1][:, -1]
        v = _joint_values(parts, x_new)
        val = float(np.linalg.norm(v))
        if val <= best * (1.0 + 1e-15):
            break
        best, x = val, x_new
        if val == 0.0:
            break
        u = v / val
    return best, x


def euclidean_radius(B, C, cfg: ToleranceConfig = DEFAULT_CONFIG) -> RadiusResult:
    """w_e(B, C) = sup over unit x of sqrt(|<Bx,x>|^2 + |<Cx,x>|^2).

    A coarse grid over ``(t, phi, theta)`` with ``max(8, theta_grid // 30)``
    angles per periodic axis seeds alternating-ascent refinement from the best
    mutually separated grid points. The result is attained at the witness vector, so it never
    exceeds the true supremum.
    """
    B, C = _pair(B, C)
    parts = np.stack([re_part(B), im_part(B), re_part(C), im_part(C)])
    n_ang = max(8, cfg.theta_grid // 30)
    U = _hopf_grid(n_ang)
    stacked = np.einsum("gk,kij->gij", U, parts)
    top = np.linalg.eigvalsh(stacked)[:, -1]
    seeds = _spread_seeds(U, top, max(4, n_ang // 2), 2.0 * TWO_PI / n_ang)
    best, best_x = -1.0, None
    for g in seeds:
        val, x = _alternating_ascent(parts, U[g])
        if val > best:
            best, best_x = val, x
    return RadiusResult(max(best, 0.0), "angle_sweep", None, best_x)


# ---------------------------------------------------------------------------
# unit-sphere searches


def _unit_columns(X: np.ndarray) -> np.ndarray:
    return X / np.linalg.norm(X, axis=0, keepdims=True)


def _forms(M: np.ndarray, X: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Quadratic forms x* M x per column, and M X."""
    MX = M @ X
    return np.einsum("ir,ir->r", X.conj(), MX), MX


def _sphere_search(
    objective: Callable[[np.ndarray], tuple[np.ndarray, np.ndarray]],
    starts: np.ndarray,
    maximize: bool,
    tol: float,
    max_iter: int = 20_000,
) -> tuple[np.ndarray, np.ndarray]:
    """Projected gradient ascent/descent on the unit sphere, one column per start.

    `objective(X)` returns per-column values and the Wirtinger gradients
    d f / d conj(x). Steps follow an Armijo rule with per-column step sizes.
    Returns final values and points.
    """
    sign = 1.0 if maximize else -1.0
    X = _unit_columns(starts.astype(np.complex128))
    f, G = objective(X)
    eta = np.ones(X.shape[1])
    stalled = np.zeros(X.shape[1], dtype=int)
    active = np.ones(X.shape[1], dtype=bool)
    for _ in range(max_iter):
        if not active.any():
            break
        radial = np.real(np.einsum("ir,ir->r", X.conj(), G))
        D = sign * (G - X * radial)
        gnorm2 = np.sum(np.abs(D) ** 2, axis=0)
        trial = _unit_columns(X + eta * D)
        f_new, G_new = objective(trial)
        gain = sign * (f_new - f)
        ok = active & (gain >= 1e-4 * eta * gnorm2) & (gnorm2 > 0)
        X = np.where(ok, trial, X)
        f = np.where(ok, f_new, f)
        G = np.where(ok, G_new, G)
        eta = np.where(ok, eta * 1.5, eta * 0.5)
        small = (np.abs(gain) <= tol * np.abs(f)) | (gnorm2 <= tol * tol)
        stalled = np.where(small | ~ok, stalled + 1, 0)
        active &= (stalled < 30) & (eta > 1e-16)
    return f, X


def _random_starts(n: int, restarts: int, rng: np.random.Generator) -> np.ndarray:
    Z = rng.standard_normal((n, restarts)) + 1j * rng.standard_normal((n, restarts))
    return np.concatenate([np.eye(n, dtype=np.complex128), Z], axis=1)


def sphere_oracle_radius(
    B,
    C=None,
    cfg: ToleranceConfig = DEFAULT_CONFIG,
    *,
    minimize: bool = False,
    seed: int = 0,
) -> RadiusResult:
    """Brute-force sup (or inf) of sqrt(|<Bx,x>|^2 + |<Cx,x>|^2) over unit x.

    Independent of the eigenvalue reductions: it only evaluates quadratic
    forms. With ``C=None`` and ``minimize=False`` this is w(B); with
    ``minimize=True`` it is c(B); with a second matrix it is w_e(B, C).
    Runs ``cfg.sphere_restarts`` random starts plus the coordinate vectors.
    """
    B, C = _pair(B, C)
    scale = np.linalg.norm(B) + np.linalg.norm(C)
    if scale == 0.0:
        return RadiusResult(0.0, "sphere_search", None, np.eye(B.shape[0])[:, 0].astype(complex))
    Bs, Cs = B / scale, C / scale
    mats = [M for M in (Bs, Cs) if np.any(M)]

    def objective(X):
        f = np.zeros(X.shape[1])
        G = np.zeros_like(X)
        for M in mats:
            b, MX = _forms(M, X)
            f = f + np.abs(b) ** 2
            G = G + b.conj() * MX + b * (M.conj().T @ X)
        return f, G

    rng = np.random.default_rng(seed)
    starts = _random_starts(B.shape[0], cfg.sphere_restarts, rng)
    f, X = _sphere_search(objective, starts, maximize=not minimize, tol=cfg.sphere_tol)
    k = int(np.argmin(f)) if minimize else int(np.argmax(f))
    return RadiusResult(math.sqrt(max(float(f[k]), 0.0)) * scale, "sphere_search", None, X[:, k])


def real_product_inf(B, C, cfg: ToleranceConfig = DEFAULT_CONFIG, *, seed: int = 0) -> RadiusResult:
    """Best found min over unit x of |Re(<Bx,x> conj(<Cx,x>))|.

    Multi-start descent on a nonconvex objective: the value is attained at the
    returned vector, hence an upper estimate of the true infimum.
    """
    B, C = _pair(B, C)
    scale = np.linalg.norm(B) * np.linalg.norm(C)
    n = B.shape[0]
    if scale == 0.0:
        return RadiusResult(0.0, "sphere_search", None, np.eye(n)[:, 0].astype(complex))
    Bs, Cs = B / np.linalg.norm(B), C / np.linalg.norm(C)
    BsH, CsH = Bs.conj().T, Cs.conj().T

    def objective(X):
        b, BX = _forms(Bs, X)
        c, CX = _forms(Cs, X)
        re = np.real(b * c.conj())
        # d Re(b conj c) / d conj(x)
        dre = 0.5 * (c.conj() * BX + b * (CsH @ X) + c * (BsH @ X) + b.conj() * CX)
        return re**2, 2.0 * re * dre

    rng = np.random.default_rng(seed)
    starts = _random_starts(n, cfg.sphere_restarts, rng)
    f, X = _sphere_search(objective, starts, maximize=False, tol=cfg.sphere_tol)
    k = int(np.argmin(f))
    x = X[:, k]
    exact = abs(float(np.real((x.conj() @ B @ x) * np.conj(x.conj() @ C @ x))))
    return RadiusResult(exact, "sphere_search", None, x)


def numerical_range_boundary(A, k: int) -> np.ndarray:
    """Points <A x_theta, x_theta> for theta = 2 pi j / k, j = 0..k-1.

    x_theta is the top eigenvector of Re(e^{-i theta} A), so each point is the
    support point of the numerical range in direction theta.
    """
    if k < 3:
        raise ValueError(f"need at least 3 boundary points, got {k}")
    A = as_matrix(A)
    thetas = boundary_angles(k)
    V = np.linalg.eigh(_rotated(re_part(A), im_part(A), -thetas))[1][:, :, -1]
    return np.einsum("ti,ij,tj->t", V.conj(), A, V)


def boundary_angles(k: int) -> np.ndarray:
    return np.arange(k) * (TWO_PI / k)
