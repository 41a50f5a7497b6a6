import numpy as np
from hypothesis import strategies as st

SHIFT = np.array([[0, 1], [0, 0]], dtype=complex)
DIAG_B = np.diag([1.0, 0.0]).astype(complex)
DIAG_C = np.diag([0.0, 2.0]).astype(complex)


def gaussian(rng, n, m=None):
    m = n if m is None else m
    return rng.standard_normal((n, m)) + 1j * rng.standard_normal((n, m))


def hermitian(rng, n):
    G = gaussian(rng, n)
    return (G + G.conj().T) / 2


def unit(rng, n):
    z = gaussian(rng, n, 1)[:, 0]
    return z / np.linalg.norm(z)


@st.composite
def matrices(draw, min_dim=1, max_dim=6, kind="general"):
    """Random matrices driven by a hypothesis-chosen seed and dimension."""
    n = draw(st.integers(min_dim, max_dim))
    rng = np.random.default_rng(draw(st.integers(0, 2**32 - 1)))
    if kind == "hermitian":
        return hermitian(rng, n)
    if kind == "psd":
        G = gaussian(rng, n)
        return G @ G.conj().T
    return gaussian(rng, n)


@st.composite
def matrix_pairs(draw, min_dim=1, max_dim=5):
    n = draw(st.integers(min_dim, max_dim))
    rng = np.random.default_rng(draw(st.integers(0, 2**32 - 1)))
    return gaussian(rng, n), gaussian(rng, n)

