import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from radius_lab.config import DEFAULT_CONFIG, ToleranceConfig
from radius_lab.errors import DimensionMismatch
from radius_lab.linalg import operator_norm, re_part
from radius_lab.radii import (
    boundary_angles,
    crawford_number,
    euclidean_radius,
    numerical_radius,
    numerical_range_boundary,
    real_product_inf,
    sphere_oracle_radius,
    support_value,
)

from .helpers import DIAG_B, DIAG_C, SHIFT, gaussian, hermitian, matrices, matrix_pairs, unit


def ellipse_radius(a, b, d, samples=200_001):
    """w of [[a, b], [0, d]] from the elliptical numerical range (foci a, d, minor axis |b|)."""
    m = (a + d) / 2
    major = 0.5 * math.sqrt(abs(a - d) ** 2 + abs(b) ** 2)
    minor = 0.5 * abs(b)
    rot = (d - a) / abs(d - a) if d != a else 1.0
    phi = np.linspace(0, 2 * np.pi, samples)
    z = m + rot * (major * np.cos(phi) + 1j * minor * np.sin(phi))
    k = int(np.argmax(np.abs(z)))
    # polish the sampled maximum by a dense local resample
    loc = np.linspace(phi[k] - 1e-4, phi[k] + 1e-4, 200_001)
    return float(np.max(np.abs(m + rot * (major * np.cos(loc) + 1j * minor * np.sin(loc)))))


def random_unit_max(A, count, rng):
    X = rng.standard_normal((A.shape[0], count)) + 1j * rng.standard_normal((A.shape[0], count))
    X /= np.linalg.norm(X, axis=0)
    return float(np.max(np.abs(np.einsum("ir,ij,jr->r", X.conj(), A, X))))


def brute_euclidean(B, C, n_t=201, n_phi=72):
    """max over (t, phi) of w(cos t B + e^{i phi} sin t C) on a grid."""
    best = 0.0
    for t in np.linspace(0, np.pi / 2, n_t):
        for phi in np.arange(n_phi) * 2 * np.pi / n_phi:
            best = max(best, numerical_radius(np.cos(t) * B + np.exp(1j * phi) * np.sin(t) * C).value)
    return best


class TestSupportValue:
    def test_examples(self):
        assert support_value(np.diag([1.0, 4.0]), 0.0) == pytest.approx(4, abs=1e-15)
        assert support_value(1j * np.eye(2), -np.pi / 2) == pytest.approx(1, abs=1e-15)

    @given(st.floats(-10, 10))
    def test_shift_is_constant(self, theta):
        # Re(e^{i theta} S) = [[0, e^{i theta}/2], [e^{-i theta}/2, 0]] with eigenvalues +-1/2
        assert support_value(SHIFT, theta) == pytest.approx(0.5, abs=1e-15)


class TestNumericalRadius:
    def test_examples(self, rng):
        assert numerical_radius(np.diag([1.0, 4.0])).value == pytest.approx(4, abs=1e-12)
        assert numerical_radius(SHIFT).value == pytest.approx(0.5, abs=1e-12)
        assert random_unit_max(SHIFT, 100_000, rng) == pytest.approx(0.5, abs=1e-3)
        assert numerical_radius(np.diag([1.0, 2.0j])).value == pytest.approx(2, abs=1e-12)
        assert sphere_oracle_radius(np.diag([1.0, 2.0j])).value == pytest.approx(2, abs=1e-9)

    def test_two_by_two_ellipse_oracle(self, rng):
        for _ in range(15):
            a, b, d = gaussian(rng, 3, 1)[:, 0]
            A = np.array([[a, b], [0, d]])
            assert numerical_radius(A).value == pytest.approx(ellipse_radius(a, b, d), rel=1e-9)

    def test_witness(self, rng):
        A = gaussian(rng, 5)
        res = numerical_radius(A)
        x = res.argmax_vector
        assert np.linalg.norm(x) == pytest.approx(1, abs=1e-12)
        assert abs(np.vdot(x, A @ x)) >= res.value - DEFAULT_CONFIG.ineq_tol
        assert support_value(A, res.argmax_theta) == pytest.approx(res.value, abs=1e-14)
        assert res.method == "angle_sweep"

    def test_ties_take_smallest_angle(self):
        assert numerical_radius(np.diag([1.0, -1.0])).argmax_theta == 0.0
        assert numerical_radius(np.eye(3)).argmax_theta == 0.0

    def test_never_below_grid(self, rng):
        A = gaussian(rng, 6)
        cfg = ToleranceConfig(theta_grid=64)
        grid = np.arange(64) * 2 * np.pi / 64
        assert numerical_radius(A, cfg).value >= max(support_value(A, t) for t in grid)

    @given(matrices(), st.floats(0, 2 * np.pi))
    def test_phase_invariance(self, A, phi):
        assert numerical_radius(np.exp(1j * phi) * A).value == pytest.approx(
            numerical_radius(A).value, abs=1e-9 * max(1, operator_norm(A))
        )

    @given(matrices(), st.floats(-50, 50).filter(lambda s: abs(s) > 1e-3))
    def test_scale_covariance(self, A, s):
        assert numerical_radius(s * A).value == pytest.approx(abs(s) * numerical_radius(A).value, rel=1e-9)

    @given(matrices())
    def test_norm_sandwich(self, A):
        w, nrm = numerical_radius(A).value, operator_norm(A)
        assert nrm / 2 <= w + 1e-12 * nrm and w <= nrm + DEFAULT_CONFIG.ineq_tol

    @given(st.integers(1, 8), st.integers(0, 2**32 - 1))
    def test_normal_equals_norm(self, n, seed):
        rng = np.random.default_rng(seed)
        D = np.diag(gaussian(rng, n, 1)[:, 0])
        Q, _ = np.linalg.qr(gaussian(rng, n))
        for A in (D, Q @ D @ Q.conj().T):
            assert numerical_radius(A).value == pytest.approx(operator_norm(A), rel=1e-8)

    def test_zero_matrix(self):
        assert numerical_radius(np.zeros((3, 3))).value == 0.0


class TestCrawford:
    def test_examples(self):
        assert crawford_number(np.eye(2)).value == pytest.approx(1, abs=1e-12)
        assert crawford_number(np.diag([1.0, -2.0])).value == 0.0
        assert crawford_number(np.diag([1.0, 2.0])).value == pytest.approx(1, abs=1e-12)
        assert sphere_oracle_radius(np.diag([1.0, 2.0]), minimize=True).value == pytest.approx(1, abs=1e-9)

    def test_witness_when_positive(self, rng):
        A = gaussian(rng, 4) + 8 * np.eye(4)
        res = crawford_number(A)
        assert res.value > 0
        assert abs(np.vdot(res.argmax_vector, A @ res.argmax_vector)) >= res.value - 1e-12
        assert crawford_number(SHIFT).argmax_vector is None

    @given(matrices())
    def test_below_numerical_radius(self, A):
        assert crawford_number(A).value <= numerical_radius(A).value + 1e-12

    def test_positive_definite_hermitian(self, rng):
        G = gaussian(rng, 5)
        H = G @ G.conj().T + np.eye(5)
        assert crawford_number(H).value == pytest.approx(np.linalg.eigvalsh(H)[0], rel=1e-9)

    def test_oracle_on_shifted(self, rng):
        for _ in range(10):
            A = gaussian(rng, 3) + (4 + 3j) * np.eye(3)
            assert crawford_number(A).value == pytest.approx(
                sphere_oracle_radius(A, minimize=True).value, rel=1e-6
            )


class TestEuclidean:
    def test_diag_example(self):
        t = np.linspace(0, 1, 100_001)
        direct = float(np.max(np.sqrt(t**2 + 4 * (1 - t) ** 2)))
        assert direct == pytest.approx(2, abs=1e-15)
        assert euclidean_radius(DIAG_B, DIAG_C).value == pytest.approx(direct, abs=1e-12)
        assert sphere_oracle_radius(DIAG_B, DIAG_C).value == pytest.approx(2, abs=1e-6)

    def test_zero_second(self, rng):
        B = gaussian(rng, 4)
        assert euclidean_radius(B, np.zeros((4, 4))).value == pytest.approx(numerical_radius(B).value, rel=1e-10)

    def test_equal_pair(self, rng):
        for _ in range(5):
            B = gaussian(rng, 4)
            assert euclidean_radius(B, B).value == pytest.approx(math.sqrt(2) * numerical_radius(B).value, rel=1e-6)

    def test_brute_grid_lower_bound(self, rng):
        B, C = gaussian(rng, 3), gaussian(rng, 3)
        brute = brute_euclidean(B, C, n_t=61, n_phi=48)
        we = euclidean_radius(B, C).value
        assert brute <= we * (1 + 1e-12)
        assert we == pytest.approx(brute, rel=5e-3)

    @given(matrix_pairs())
    def test_symmetric(self, pair):
        B, C = pair
        assert euclidean_radius(B, C).value == pytest.approx(euclidean_radius(C, B).value, rel=1e-9)

    @given(st.integers(1, 5), st.integers(0, 2**32 - 1))
    def test_self_adjoint_collapse(self, n, seed):
        rng = np.random.default_rng(seed)
        P, Q = hermitian(rng, n), hermitian(rng, n)
        assert euclidean_radius(P, Q).value == pytest.approx(numerical_radius(P + 1j * Q).value, rel=1e-8)

    @given(matrix_pairs())
    @settings(max_examples=25)
    def test_witness(self, pair):
        B, C = pair
        res = euclidean_radius(B, C)
        x = res.argmax_vector
        val = math.hypot(abs(np.vdot(x, B @ x)), abs(np.vdot(x, C @ x)))
        assert val == pytest.approx(res.value, abs=DEFAULT_CONFIG.ineq_tol)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            euclidean_radius(np.eye(2), np.eye(3))


class TestRealProductInf:
    def test_examples(self, rng):
        assert real_product_inf(DIAG_B, DIAG_C).value == 0.0
        B = gaussian(rng, 3)
        assert real_product_inf(B, np.zeros((3, 3))).value == 0.0
        assert real_product_inf(np.eye(3), np.eye(3)).value == pytest.approx(1, abs=1e-12)
        assert real_product_inf(DIAG_B, DIAG_C).method == "sphere_search"

    def test_attained_upper_estimate(self, rng):
        B, C = gaussian(rng, 4), gaussian(rng, 4)
        res = real_product_inf(B, C)
        x = res.argmax_vector
        assert res.value == pytest.approx(abs(np.real(np.vdot(x, B @ x) * np.conj(np.vdot(x, C @ x)))), abs=1e-15)
        # any sample can only be larger than a global minimum; the estimate should beat random sampling
        X = rng.standard_normal((4, 2000)) + 1j * rng.standard_normal((4, 2000))
        X /= np.linalg.norm(X, axis=0)
        b = np.einsum("ir,ij,jr->r", X.conj(), B, X)
        c = np.einsum("ir,ij,jr->r", X.conj(), C, X)
        assert res.value <= np.min(np.abs(np.real(b * c.conj()))) + 1e-12

    def test_definite_pair(self, rng):
        # Re(b conj c) = b c for real positive forms: inf is lambda_min product when the minimizers align
        assert real_product_inf(np.diag([1.0, 3.0]), np.diag([2.0, 5.0])).value == pytest.approx(2, rel=1e-7)

    def test_seed_reproducible(self, rng):
        B, C = gaussian(rng, 3), gaussian(rng, 3)
        assert real_product_inf(B, C, seed=5).value == real_product_inf(B, C, seed=5).value


class TestSphereOracle:
    def test_examples(self):
        assert sphere_oracle_radius(SHIFT).value == pytest.approx(0.5, abs=1e-6)
        assert sphere_oracle_radius(np.eye(3)).value == pytest.approx(1, abs=1e-12)
        assert sphere_oracle_radius(np.zeros((2, 2))).value == 0.0

    @given(matrices(max_dim=5))
    @settings(max_examples=20)
    def test_agrees_with_sweep(self, A):
        assert sphere_oracle_radius(A).value == pytest.approx(numerical_radius(A).value, rel=1e-4)


class TestRangeBoundary:
    def test_identity(self):
        assert np.allclose(numerical_range_boundary(np.eye(2), 4), 1, atol=1e-15)

    def test_segment(self):
        pts = numerical_range_boundary(np.diag([0.0, 1.0]), 100)
        assert np.all((pts.real >= -1e-15) & (pts.real <= 1 + 1e-15)) and np.allclose(pts.imag, 0, atol=1e-15)
        assert pts.real.min() == pytest.approx(0, abs=1e-15) and pts.real.max() == pytest.approx(1, abs=1e-15)

    def test_shift_circle(self):
        pts = numerical_range_boundary(SHIFT, 360)
        assert np.allclose(np.abs(pts), 0.5, atol=1e-6)
        # point at angle theta is the support point in direction theta
        assert np.allclose(np.angle(pts[1:180]), boundary_angles(360)[1:180], atol=1e-9)

    @given(matrices(max_dim=5))
    @settings(max_examples=20)
    def test_points_are_support_points(self, A):
        k = 24
        pts = numerical_range_boundary(A, k)
        thetas = boundary_angles(k)
        for z, t in zip(pts, thetas):
            # Re(e^{-i t} z) equals the support value of W(A) in direction t
            assert np.real(np.exp(-1j * t) * z) == pytest.approx(
                support_value(A, -t), abs=1e-10 * max(1, operator_norm(A))
            )
        assert np.max(np.abs(pts)) <= numerical_radius(A).value * (1 + 1e-12) + 1e-14

    def test_rejects_small_k(self):
        with pytest.raises(ValueError):
            numerical_range_boundary(np.eye(2), 2)
