"""Catalog of numerical-radius and Euclidean-operator-radius inequalities.

Every entry compares a closed-form bound against a target computed
independently by :mod:`radius_lab.radii`: ``w^2(A)`` for single-operator
bounds, ``w_e^2(B, C)`` for pair bounds, ``w_e^{2r}`` for the power-mean
bound, and ``||B + C||^2 / 2`` for the product-of-radii norm bound.

Bound ids are stable keys used by reports, the CLI and the tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

import numpy as np

from .config import DEFAULT_CONFIG, ToleranceConfig
from .errors import AlphaOutOfRange, DimensionMismatch, RTooSmall, SOutOfRange, UnknownBoundId
from .linalg import as_matrix, im_part, is_hermitian, matrix_abs, operator_norm, psd_power, re_part
from .radii import crawford_number, euclidean_radius, numerical_radius, real_product_inf

SINGLE_IDS = (
    "cor1.lower",
    "cor1.upper",
    "corn1.lower",
    "eq2.lower",
    "eq2.upper",
    "eqv.lower",
    "eqv.upper",
    "k5.lower",
    "k5.upper",
    "pcor.lower",
    "pcor.upper",
    "th3.remark.single",
)
PAIR_IDS = (
    "buzano.lower",
    "cor2.lower",
    "d06.lower",
    "d06.upper",
    "drag01.lower",
    "eqn1.lower",
    "eqn1.upper",
    "eqn2.lower",
    "eqn2.upper",
    "jensen.upper.derived",
    "jensen.upper.stated",
    "th1.lower",
    "th1.remark.upper",
    "th1.upper",
    "th2.lower",
    "th3.upper",
    "th4.lower",
    "th5.remark.half",
    "th5.upper",
)
ALL_IDS = tuple(sorted(SINGLE_IDS + PAIR_IDS))

# bound id -> parameter it can be swept over
PARAMETERIZED = {
    "th4.lower": "alpha",
    "drag01.lower": "alpha",
    "corn1.lower": "alpha",
    "th5.upper": "alpha",
    "buzano.lower": "s",
    "jensen.upper.stated": "r",
    "jensen.upper.derived": "r",
}

_SOURCES = {
    "eqv": "classical half-norm/norm equivalence",
    "k5": "Kittaneh refinement via A*A + AA*",
    "eqn1": "Popescu norm equivalence for w_e",
    "eqn2": "Popescu equivalence, self-adjoint pair",
    "d06": "Dragomir w_e bounds",
    "drag01": "Dragomir midpoint lower bound",
    "th1": "radius/modulus two-sided w_e bound",
    "eq2": "self-adjoint two-sided w_e bound on (Re A, Im A)",
    "pcor": "Cartesian-part bounds for w(A)",
    "cor1": "bounds from the pair (A, A*)",
    "th2": "Crawford-number lower bound for w_e",
    "cor2": "w/c mixed lower bound for w_e",
    "th3": "Buzano-inequality upper bound for w_e",
    "th4": "convex-combination-of-squares lower bound",
    "corn1": "convex combination of squared Cartesian parts",
    "th5": "rotated-pair upper bound for w_e",
    "jensen": "superquadratic power-mean upper bound",
    "buzano": "generalized Cauchy-Schwarz product bound",
}


def check_ids(ids: Iterable[str]) -> list[str]:
    ids = list(ids)
    unknown = [i for i in ids if i not in ALL_IDS]
    if unknown:
        raise UnknownBoundId(f"unknown bound id: {', '.join(unknown)}")
    return ids


@dataclass
class BoundEvaluation:
    """One inequality instance.

    ``slack`` is target - bound for lower bounds and bound - target for upper
    bounds; the inequality counts as satisfied when ``slack >= -ineq_tol *
    max(1, target_value)``. For the power-mean bound the slack is that of the
    relaxation without the infimum term (see :func:`jensen_upper`).
    """

    bound_id: str
    kind: str
    target: str
    bound_value: float
    target_value: float
    slack: float
    satisfied: bool
    paper_id: str
    extra: dict[str, Any] = field(default_factory=dict, compare=False)

    @property
    def scale(self) -> float:
        return max(1.0, abs(self.target_value))

    def is_tight(self, ineq_tol: float) -> bool:
        return self.slack <= 10.0 * ineq_tol * self.scale

    def to_dict(self) -> dict[str, Any]:
        return {
            "bound_id": self.bound_id,
            "kind": self.kind,
            "target": self.target,
            "bound_value": self.bound_value,
            "target_value": self.target_value,
            "slack": self.slack,
            "satisfied": self.satisfied,
            "paper_id": self.paper_id,
        }


def _evaluation(
    bound_id: str,
    kind: str,
    target: str,
    bound: float,
    target_value: float,
    cfg: ToleranceConfig,
    *,
    slack: float | None = None,
    **extra: Any,
) -> BoundEvaluation:
    bound, target_value = float(bound), float(target_value)
    if slack is None:
        slack = target_value - bound if kind == "lower" else bound - target_value
    ok = bool(slack >= -cfg.ineq_tol * max(1.0, abs(target_value)))
    return BoundEvaluation(
        bound_id, kind, target, bound, target_value, float(slack), ok, _SOURCES[bound_id.split(".")[0]], extra
    )


class Quantities:
    """Memoized radii and norms of the matrices met while evaluating bounds."""

    def __init__(self, cfg: ToleranceConfig = DEFAULT_CONFIG):
        self.cfg = cfg
        self._cache: dict[tuple, float] = {}

    def _memo(self, tag: str, mats: tuple[np.ndarray, ...], fn: Callable[[], float]) -> float:
        key = (tag,) + tuple(m.tobytes() for m in mats)
        if key not in self._cache:
            self._cache[key] = float(fn())
        return self._cache[key]

    def w(self, M: np.ndarray) -> float:
        return self._memo("w", (M,), lambda: numerical_radius(M, self.cfg).value)

    def c(self, M: np.ndarray) -> float:
        return self._memo("c", (M,), lambda: crawford_number(M, self.cfg).value)

    def we(self, B: np.ndarray, C: np.ndarray) -> float:
        return self._memo("we", (B, C), lambda: euclidean_radius(B, C, self.cfg).value)

    def norm(self, M: np.ndarray) -> float:
        return self._memo("norm", (M,), lambda: operator_norm(M))

    def rho(self, B: np.ndarray, C: np.ndarray) -> float:
        return self._memo("rho", (B, C), lambda: real_product_inf(B, C, self.cfg).value)

    def abs(self, M: np.ndarray) -> np.ndarray:
        return matrix_abs(M, eig_tol=self.cfg.eig_tol)


def _q(cfg: ToleranceConfig, q: Quantities | None) -> Quantities:
    return q if q is not None else Quantities(cfg)


def _same_dim(B, C) -> tuple[np.ndarray, np.ndarray]:
    B, C = as_matrix(B), as_matrix(C)
    if B.shape != C.shape:
        raise DimensionMismatch(f"shapes {B.shape} and {C.shape} differ")
    return B, C


def _adj(M: np.ndarray) -> np.ndarray:
    return M.conj().T


# ---------------------------------------------------------------------------
# single-operator bounds, target w^2(A)


def classical_single(A, cfg: ToleranceConfig = DEFAULT_CONFIG, q: Quantities | None = None) -> list[BoundEvaluation]:
    """Half-norm/norm sandwich and its Kittaneh refinement, squared."""
    q = _q(cfg, q)
    A = as_matrix(A)
    w2 = q.w(A) ** 2
    nrm = q.norm(A)
    kit = q.norm(_adj(A) @ A + A @ _adj(A))
    return [
        _evaluation("eqv.lower", "lower", "w_sq", (nrm / 2) ** 2, w2, cfg),
        _evaluation("eqv.upper", "upper", "w_sq", nrm**2, w2, cfg),
        _evaluation("k5.lower", "lower", "w_sq", kit / 4, w2, cfg),
        _evaluation("k5.upper", "upper", "w_sq", kit / 2, w2, cfg),
    ]


def corollaries_single(A, cfg: ToleranceConfig = DEFAULT_CONFIG, q: Quantities | None = None) -> list[BoundEvaluation]:
    """Bounds on w^2(A) obtained from the pairs (Re A, Im A) and (A, A*).

    The ``pcor.upper`` and ``cor1.upper`` evaluations carry the comparison
    values of their dominance chains in ``extra``.
    """
    q = _q(cfg, q)
    A = as_matrix(A)
    R, I = re_part(A), im_part(A)
    w = q.w(A)
    w2 = w**2
    nR, nI = q.norm(R), q.norm(I)
    half_kit = q.norm(_adj(A) @ A + A @ _adj(A)) / 2
    mu = abs(q.norm(R + I) - q.norm(R - I))
    absR, absI = q.abs(R), q.abs(I)
    absA, absAs = q.abs(A), q.abs(_adj(A))

    pcor_low = half_kit / 2 + 0.5 * max(nR, nI) * mu
    pcor_up = q.w(absR + 1j * absI) ** 2
    eq2_low = 0.5 * q.norm(R @ R + I @ I) + 0.5 * max(nR, nI) * mu
    cor1_low = 0.5 * q.norm(re_part(A @ A)) + 0.5 * w * abs(nR - nI)
    cor1_up = 0.5 * q.w(absA + 1j * absAs) * q.w(absAs + 1j * absA)
    chain = {"half_kittaneh": half_kit, "cartesian_norm_sq_sum": nR**2 + nI**2}
    return [
        _evaluation("pcor.lower", "lower", "w_sq", pcor_low, w2, cfg),
        _evaluation("pcor.upper", "upper", "w_sq", pcor_up, w2, cfg, **chain),
        _evaluation("cor1.lower", "lower", "w_sq", cor1_low, w2, cfg),
        _evaluation("cor1.upper", "upper", "w_sq", cor1_up, w2, cfg, half_kittaneh=half_kit),
        _evaluation("eq2.lower", "lower", "w_sq", eq2_low, w2, cfg),
        _evaluation("eq2.upper", "upper", "w_sq", pcor_up, w2, cfg),
    ]


def th3_remark_single(A, cfg: ToleranceConfig = DEFAULT_CONFIG, q: Quantities | None = None) -> BoundEvaluation:
    """w^2(A) <= ||A*A + AA*||/4 + w(A^2)/2."""
    q = _q(cfg, q)
    A = as_matrix(A)
    bound = q.norm(_adj(A) @ A + A @ _adj(A)) / 4 + q.w(A @ A) / 2
    return _evaluation("th3.remark.single", "upper", "w_sq", bound, q.w(A) ** 2, cfg)


def alpha_grid(steps: int) -> np.ndarray:
    if steps < 2:
        raise ValueError(f"alpha_steps must be at least 2, got {steps}")
    return np.linspace(0.0, 1.0, steps)


def corn1_lower(
    A, alpha_steps: int = 11, cfg: ToleranceConfig = DEFAULT_CONFIG, q: Quantities | None = None
) -> BoundEvaluation:
    """max over the alpha grid of ||alpha Re(A)^2 + (1 - alpha) Im(A)^2|| <= w^2(A)."""
    q = _q(cfg, q)
    A = as_matrix(A)
    R2, I2 = re_part(A) @ re_part(A), im_part(A) @ im_part(A)
    alphas = alpha_grid(alpha_steps)
    vals = [q.norm(a * R2 + (1 - a) * I2) for a in alphas]
    k = int(np.argmax(vals))
    return _evaluation("corn1.lower", "lower", "w_sq", vals[k], q.w(A) ** 2, cfg, argmax_alpha=float(alphas[k]))


# ---------------------------------------------------------------------------
# pair bounds, target w_e^2(B, C)


def classical_pair(B, C, cfg: ToleranceConfig = DEFAULT_CONFIG, q: Quantities | None = None) -> list[BoundEvaluation]:
    """Popescu and Dragomir two-sided bounds; the self-adjoint form only for Hermitian pairs."""
    q = _q(cfg, q)
    B, C = _same_dim(B, C)
    we2 = q.we(B, C) ** 2
    gram = q.norm(_adj(B) @ B + _adj(C) @ C)
    out = [
        _evaluation("eqn1.lower", "lower", "we_sq", gram / 8, we2, cfg),
        _evaluation("eqn1.upper", "upper", "we_sq", gram, we2, cfg),
        _evaluation("d06.lower", "lower", "we_sq", q.w(B @ B + C @ C) / 2, we2, cfg),
        _evaluation("d06.upper", "upper", "we_sq", gram, we2, cfg),
    ]
    if is_hermitian(B) and is_hermitian(C):
        sq = q.norm(B @ B + C @ C)
        out += [
            _evaluation("eqn2.lower", "lower", "we_sq", sq / 8, we2, cfg),
            _evaluation("eqn2.upper", "upper", "we_sq", sq, we2, cfg),
        ]
    return out


def th1_bounds(B, C, cfg: ToleranceConfig = DEFAULT_CONFIG, q: Quantities | None = None) -> list[BoundEvaluation]:
    """Two-sided bound through w(B +- C) and the moduli |B|, |C|, |B*|, |C*|.

    ``th1.lower`` carries the weaker Dragomir value ``w(B^2 + C^2)/2`` in
    ``extra["d06"]`` for the dominance check.
    """
    q = _q(cfg, q)
    B, C = _same_dim(B, C)
    we2 = q.we(B, C) ** 2
    d06 = q.w(B @ B + C @ C) / 2
    lower = d06 + 0.5 * max(q.w(B), q.w(C)) * abs(q.w(B + C) - q.w(B - C))
    aB, aC, aBs, aCs = q.abs(B), q.abs(C), q.abs(_adj(B)), q.abs(_adj(C))
    upper = min(
        q.w(aB + 1j * aC) * q.w(aBs + 1j * aCs),
        q.w(aB + 1j * aCs) * q.w(aBs + 1j * aC),
    )
    BtB, CtC, BBt, CCt = _adj(B) @ B, _adj(C) @ C, B @ _adj(B), C @ _adj(C)
    remark = min(
        math.sqrt(q.norm(BtB + CtC) * q.norm(BBt + CCt)),
        math.sqrt(q.norm(BtB + CCt) * q.norm(BBt + CtC)),
    )
    return [
        _evaluation("th1.lower", "lower", "we_sq", lower, we2, cfg, d06=d06),
        _evaluation("th1.upper", "upper", "we_sq", upper, we2, cfg),
        _evaluation("th1.remark.upper", "upper", "we_sq", remark, we2, cfg),
    ]


def th2_lower(B, C, cfg: ToleranceConfig = DEFAULT_CONFIG, q: Quantities | None = None) -> BoundEvaluation:
    """max{w^2(B+C) + c^2(B-C), w^2(B-C) + c^2(B+C)} / 2 <= w_e^2."""
    q = _q(cfg, q)
    B, C = _same_dim(B, C)
    wp, wm = q.w(B + C), q.w(B - C)
    cp, cm = q.c(B + C), q.c(B - C)
    bound = 0.5 * max(wp**2 + cm**2, wm**2 + cp**2)
    plain = 0.5 * max(wp**2, wm**2)
    return _evaluation("th2.lower", "lower", "we_sq", bound, q.we(B, C) ** 2, cfg, without_crawford=plain)


def cor2_lower(B, C, cfg: ToleranceConfig = DEFAULT_CONFIG, q: Quantities | None = None) -> BoundEvaluation:
    """max{w^2(B) + c^2(C), w^2(C) + c^2(B)} <= w_e^2."""
    q = _q(cfg, q)
    B, C = _same_dim(B, C)
    bound = max(q.w(B) ** 2 + q.c(C) ** 2, q.w(C) ** 2 + q.c(B) ** 2)
    return _evaluation("cor2.lower", "lower", "we_sq", bound, q.we(B, C) ** 2, cfg)


def th3_upper(B, C, cfg: ToleranceConfig = DEFAULT_CONFIG, q: Quantities | None = None) -> BoundEvaluation:
    """w_e^2 <= min{w^2(B+C), w^2(B-C)} + ||C*C + BB*||/2 + w(BC)."""
    q = _q(cfg, q)
    B, C = _same_dim(B, C)
    bound = min(q.w(B + C), q.w(B - C)) ** 2 + q.norm(_adj(C) @ C + B @ _adj(B)) / 2 + q.w(B @ C)
    return _evaluation("th3.upper", "upper", "we_sq", bound, q.we(B, C) ** 2, cfg)


def th4_values(B, C, alphas: Iterable[float], q: Quantities) -> list[float]:
    B2, C2 = B @ B, C @ C
    return [q.w(a * B2 + (1 - a) * C2) for a in alphas]


def th4_lower(
    B, C, alpha_steps: int = 11, cfg: ToleranceConfig = DEFAULT_CONFIG, q: Quantities | None = None
) -> BoundEvaluation:
    """max over a closed uniform alpha grid of w(alpha B^2 + (1 - alpha) C^2) <= w_e^2.

    Each grid point is a valid lower bound on its own, so any grid works.
    """
    q = _q(cfg, q)
    B, C = _same_dim(B, C)
    alphas = alpha_grid(alpha_steps)
    vals = th4_values(B, C, alphas, q)
    k = int(np.argmax(vals))
    return _evaluation("th4.lower", "lower", "we_sq", vals[k], q.we(B, C) ** 2, cfg, argmax_alpha=float(alphas[k]))


def drag01_lower(B, C, cfg: ToleranceConfig = DEFAULT_CONFIG, q: Quantities | None = None) -> BoundEvaluation:
    """w(B^2/2 + C^2/2) <= w_e^2."""
    q = _q(cfg, q)
    B, C = _same_dim(B, C)
    return _evaluation("drag01.lower", "lower", "we_sq", th4_values(B, C, [0.5], q)[0], q.we(B, C) ** 2, cfg)


def _check_alpha(alpha: float) -> float:
    if not 0.0 <= alpha <= 1.0:
        raise AlphaOutOfRange(f"alpha must lie in [0, 1], got {alpha}")
    return float(alpha)


def th5_upper(
    B, C, alpha: float = 0.5, cfg: ToleranceConfig = DEFAULT_CONFIG, q: Quantities | None = None
) -> BoundEvaluation:
    """w_e^2 <= w^2(sqrt(a) B + sqrt(1-a) C) + w^2(sqrt(1-a) B - sqrt(a) C).

    The variant with ``+ sqrt(a) C`` in the second term is not a valid bound
    in general; its value is reported in ``extra["plus_form"]`` only.
    """
    q = _q(cfg, q)
    a = _check_alpha(alpha)
    B, C = _same_dim(B, C)
    sa, sb = math.sqrt(a), math.sqrt(1.0 - a)
    first = q.w(sa * B + sb * C) ** 2
    bound = first + q.w(sb * B - sa * C) ** 2
    plus = first + q.w(sb * B + sa * C) ** 2
    return _evaluation("th5.upper", "upper", "we_sq", bound, q.we(B, C) ** 2, cfg, alpha=a, plus_form=plus)


def th5_remark_half(B, C, cfg: ToleranceConfig = DEFAULT_CONFIG, q: Quantities | None = None) -> BoundEvaluation:
    """w_e^2 <= (w^2(B+C) + w^2(B-C)) / 2."""
    q = _q(cfg, q)
    B, C = _same_dim(B, C)
    bound = 0.5 * (q.w(B + C) ** 2 + q.w(B - C) ** 2)
    return _evaluation("th5.remark.half", "upper", "we_sq", bound, q.we(B, C) ** 2, cfg)


def jensen_upper(
    B, C, r: float = 2.0, cfg: ToleranceConfig = DEFAULT_CONFIG, q: Quantities | None = None
) -> list[BoundEvaluation]:
    """Power-mean upper bounds on w_e^{2r}(B, C) for r >= 2.

    Both variants subtract ``2^r`` times an infimum ``rho`` of
    ``|Re(<Bx,x> conj<Cx,x>)|``: the stated form subtracts ``rho`` itself,
    the derived form ``rho^r``. The infimum is only estimated from above by
    multi-start descent, so ``slack`` and ``satisfied`` refer to the
    relaxation ``(w^{2r}(B+C) + w^{2r}(B-C)) / 2`` without the subtracted
    term. ``bound_value`` is the full expression; ``extra`` holds the
    estimate, the relaxation and the full-expression slack.
    """
    if r < 2:
        raise RTooSmall(f"r must be at least 2, got {r}")
    q = _q(cfg, q)
    B, C = _same_dim(B, C)
    relaxed = 0.5 * q.w(B + C) ** (2 * r) + 0.5 * q.w(B - C) ** (2 * r)
    target = q.we(B, C) ** (2 * r)
    rho = q.rho(B, C)
    out = []
    for bound_id, term in (("jensen.upper.stated", rho), ("jensen.upper.derived", rho**r)):
        full = relaxed - 2.0**r * term
        out.append(
            _evaluation(
                bound_id,
                "upper",
                "we_2r",
                full,
                target,
                cfg,
                slack=relaxed - target,
                r=float(r),
                rho_hat=rho,
                relaxed_bound=relaxed,
                full_slack=full - target,
            )
        )
    return out


def buzano_norm_lower(
    B, C, s: float = 0.5, cfg: ToleranceConfig = DEFAULT_CONFIG, q: Quantities | None = None
) -> BoundEvaluation:
    """||B + C||^2 / 2 <= w_e(|B|^{2s}, |C|^{2s}) w_e(|B*|^{2(1-s)}, |C*|^{2(1-s)}).

    Uses the power pair f(t) = t^s, g(t) = t^(1-s). The norm side is the
    target (``norm_sq``) and the product of radii is an upper bound for it.
    """
    if not 0.0 < s < 1.0:
        raise SOutOfRange(f"s must lie in (0, 1), got {s}")
    q = _q(cfg, q)
    B, C = _same_dim(B, C)
    tol = cfg.eig_tol
    BtB, CtC = _adj(B) @ B, _adj(C) @ C
    BBt, CCt = B @ _adj(B), C @ _adj(C)
    # |M|^{2s} = (M*M)^s
    left = q.we(psd_power(BtB, s, tol), psd_power(CtC, s, tol))
    right = q.we(psd_power(BBt, 1.0 - s, tol), psd_power(CCt, 1.0 - s, tol))
    target = 0.5 * q.norm(B + C) ** 2
    return _evaluation("buzano.lower", "upper", "norm_sq", left * right, target, cfg, s=float(s))


# ---------------------------------------------------------------------------


def _pair_groups(alpha: float, alpha_steps: int, r: float, s: float):
    return [
        (("eqn1.lower", "eqn1.upper", "d06.lower", "d06.upper", "eqn2.lower", "eqn2.upper"), classical_pair),
        (("th1.lower", "th1.upper", "th1.remark.upper"), th1_bounds),
        (("th2.lower",), th2_lower),
        (("cor2.lower",), cor2_lower),
        (("th3.upper",), th3_upper),
        (("th4.lower",), lambda B, C, cfg, q: th4_lower(B, C, alpha_steps, cfg, q)),
        (("drag01.lower",), drag01_lower),
        (("th5.upper",), lambda B, C, cfg, q: th5_upper(B, C, alpha, cfg, q)),
        (("th5.remark.half",), th5_remark_half),
        (("jensen.upper.stated", "jensen.upper.derived"), lambda B, C, cfg, q: jensen_upper(B, C, r, cfg, q)),
        (("buzano.lower",), lambda B, C, cfg, q: buzano_norm_lower(B, C, s, cfg, q)),
    ]


def _single_groups(alpha_steps: int):
    return [
        (("eqv.lower", "eqv.upper", "k5.lower", "k5.upper"), classical_single),
        (("pcor.lower", "pcor.upper", "cor1.lower", "cor1.upper", "eq2.lower", "eq2.upper"), corollaries_single),
        (("th3.remark.single",), th3_remark_single),
        (("corn1.lower",), lambda A, cfg, q: corn1_lower(A, alpha_steps, cfg, q)),
    ]


def _failed(ids: Iterable[str], exc: Exception) -> list[BoundEvaluation]:
    nan = float("nan")
    return [
        BoundEvaluation(i, "", "", nan, nan, nan, False, _SOURCES[i.split(".")[0]], {"error": f"{type(exc).__name__}: {exc}"})
        for i in ids
    ]


def evaluate_all(
    B,
    C=None,
    cfg: ToleranceConfig = DEFAULT_CONFIG,
    *,
    only: Iterable[str] | None = None,
    alpha: float = 0.5,
    alpha_steps: int = 11,
    r: float = 2.0,
    s: float = 0.5,
) -> list[BoundEvaluation]:
    """Run every applicable catalog entry, sorted by bound id.

    Single-operator bounds always run on ``A = B``. Pair bounds run on
    ``(B, C)`` when `C` is given and on ``(Re B, Im B)`` otherwise (then
    ``w_e^2`` equals ``w^2(B)``). An entry that raises is reported with NaN
    values, ``satisfied=False`` and the message in ``extra["error"]``.
    """
    wanted = set(check_ids(only)) if only is not None else set(ALL_IDS)
    q = Quantities(cfg)
    A = as_matrix(B)
    if C is None:
        P, Q = re_part(A), im_part(A)
    else:
        P, Q = _same_dim(A, C)
    out: list[BoundEvaluation] = []
    jobs = [(ids, fn, (A,)) for ids, fn in _single_groups(alpha_steps)]
    jobs += [(ids, fn, (P, Q)) for ids, fn in _pair_groups(alpha, alpha_steps, r, s)]
    for ids, fn, args in jobs:
        if not wanted.intersection(ids):
            continue
        try:
            res = fn(*args, cfg, q)
        except Exception as exc:  # reported per bound, never aborts the batch
            out += _failed([i for i in ids if i in wanted], exc)
            continue
        res = res if isinstance(res, list) else [res]
        out += [e for e in res if e.bound_id in wanted]
    return sorted(out, key=lambda e: e.bound_id)


def dominance_checks(evals: Iterable[BoundEvaluation], ineq_tol: float) -> list[tuple[str, float, float, bool]]:
    """Orderings between catalog values that must hold on every input.

    Each entry is ``(name, smaller, larger, holds)`` with ``holds`` evaluated
    as ``smaller <= larger + ineq_tol * max(1, |larger|)``.
    """
    by_id = {e.bound_id: e for e in evals}
    pairs: list[tuple[str, float, float]] = []
    if "th1.lower" in by_id:
        e = by_id["th1.lower"]
        pairs.append(("th1.lower >= d06", e.extra["d06"], e.bound_value))
    if "pcor.upper" in by_id:
        e = by_id["pcor.upper"]
        pairs.append(("pcor.upper <= half kittaneh", e.bound_value, e.extra["half_kittaneh"]))
        pairs.append(("half kittaneh <= cartesian norms", e.extra["half_kittaneh"], e.extra["cartesian_norm_sq_sum"]))
    if "cor1.upper" in by_id:
        e = by_id["cor1.upper"]
        pairs.append(("cor1.upper <= half kittaneh", e.bound_value, e.extra["half_kittaneh"]))
    if "th2.lower" in by_id:
        e = by_id["th2.lower"]
        pairs.append(("th2.lower >= half max w^2(B+-C)", e.extra["without_crawford"], e.bound_value))
    return [(name, lo, hi, bool(lo <= hi + ineq_tol * max(1.0, abs(hi)))) for name, lo, hi in pairs]


def evaluate_at(
    bound_id: str,
    B,
    C,
    value: float,
    cfg: ToleranceConfig = DEFAULT_CONFIG,
    q: Quantities | None = None,
) -> BoundEvaluation:
    """Evaluate one parameterized entry at a single parameter value.

    For the grid-maximum entries (``th4.lower``, ``corn1.lower``) this is the
    value at that alpha alone; ``drag01.lower`` has its alpha fixed at 1/2 and
    ignores `value`. ``corn1.lower`` runs on `B` only.
    """
    check_ids([bound_id])
    if bound_id not in PARAMETERIZED:
        raise ValueError(f"bound {bound_id!r} takes no parameter")
    q = _q(cfg, q)
    if bound_id == "corn1.lower":
        a = _check_alpha(value)
        A = as_matrix(B)
        R, I = re_part(A), im_part(A)
        bound = q.norm(a * R @ R + (1 - a) * I @ I)
        return _evaluation(bound_id, "lower", "w_sq", bound, q.w(A) ** 2, cfg, alpha=a)
    B, C = _same_dim(B, C)
    if bound_id == "th4.lower":
        a = _check_alpha(value)
        return _evaluation(bound_id, "lower", "we_sq", th4_values(B, C, [a], q)[0], q.we(B, C) ** 2, cfg, alpha=a)
    if bound_id == "drag01.lower":
        return drag01_lower(B, C, cfg, q)
    if bound_id == "th5.upper":
        return th5_upper(B, C, value, cfg, q)
    if bound_id == "buzano.lower":
        return buzano_norm_lower(B, C, value, cfg, q)
    return next(e for e in jensen_upper(B, C, value, cfg, q) if e.bound_id == bound_id)
