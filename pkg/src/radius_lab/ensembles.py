"""Seeded random matrix ensembles.

Every draw is a pure function of ``(seed, trial, kind)``: the generator for a
trial is built from a ``SeedSequence`` over those three values, so trials can
be scheduled on any number of workers without changing results.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

KINDS = ("general", "hermitian", "normal", "nilpotent", "nilpotent2", "unitary", "diagonal")
MAX_DIM = 64
MAX_TRIALS = 10**6


@dataclass(frozen=True)
class EnsembleSpec:
    """Random-matrix family plus dimension, trial count and 64-bit seed.

    ``nilpotent`` is strictly upper triangular (A^dim = 0); ``nilpotent2`` is
    the block matrix [[0, X], [0, 0]] with A^2 = 0.
    """

    kind: str
    dim: int
    trials: int
    seed: int = 0

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown ensemble kind {self.kind!r}; expected one of {', '.join(KINDS)}")
        if not 2 <= self.dim <= MAX_DIM:
            raise ValueError(f"dim must lie in [2, {MAX_DIM}], got {self.dim}")
        if not 1 <= self.trials <= MAX_TRIALS:
            raise ValueError(f"trials must lie in [1, {MAX_TRIALS}], got {self.trials}")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")

    def to_dict(self) -> dict:
        return asdict(self)


def trial_seed(spec: EnsembleSpec, trial: int) -> int:
    """64-bit integer identifying the generator of one trial."""
    ss = np.random.SeedSequence([spec.seed, trial, KINDS.index(spec.kind)])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def trial_rng(spec: EnsembleSpec, trial: int) -> np.random.Generator:
    if not 0 <= trial < spec.trials:
        raise IndexError(f"trial {trial} outside [0, {spec.trials})")
    return np.random.default_rng(trial_seed(spec, trial))


def complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    """Standard complex Gaussian entries, E|z|^2 = 1."""
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def haar_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    Q, R = np.linalg.qr(complex_gaussian(rng, (n, n)))
    d = np.diag(R)
    return Q * (d / np.abs(d))


def draw(kind: str, n: int, rng: np.random.Generator) -> np.ndarray:
    if kind == "general":
        return complex_gaussian(rng, (n, n))
    if kind == "hermitian":
        G = complex_gaussian(rng, (n, n))
        return (G + G.conj().T) / 2
    if kind == "normal":
        U = haar_unitary(rng, n)
        return (U * complex_gaussian(rng, n)) @ U.conj().T
    if kind == "nilpotent":
        return np.triu(complex_gaussian(rng, (n, n)), k=1)
    if kind == "nilpotent2":
        k = n // 2
        A = np.zeros((n, n), dtype=np.complex128)
        A[:k, k:] = complex_gaussian(rng, (k, n - k))
        return A
    if kind == "unitary":
        return haar_unitary(rng, n)
    if kind == "diagonal":
        return np.diag(rng.standard_normal(n)).astype(np.complex128)
    raise ValueError(f"unknown ensemble kind {kind!r}")


def generate_matrix(spec: EnsembleSpec, trial: int) -> np.ndarray:
    return draw(spec.kind, spec.dim, trial_rng(spec, trial))


def generate_pair(spec: EnsembleSpec, trial: int) -> tuple[np.ndarray, np.ndarray]:
    """Two independent draws from the same trial generator; the first equals generate_matrix."""
    rng = trial_rng(spec, trial)
    B = draw(spec.kind, spec.dim, rng)
    return B, draw(spec.kind, spec.dim, rng)
