"""The rotation/reflection Haar sampler and its Gram-Schmidt oracle."""

import math

import numpy as np
import pytest
from scipy.stats import ks_2samp, kstest

from zonalpoly.haar import (
    AngleSet,
    angle_exponent,
    oracle_sample,
    oracle_sample_batch,
    orthogonality_check,
    realize,
    sample_angle_set,
    sample_orthogonal,
    sample_orthogonal_batch,
)


def rounded_ks(xs, ys):
    """Two-sample KS on a common grid.

    Mixed distributions here carry atoms (the trace of a 2x2 reflection is
    exactly zero); rounding aligns the atoms across samplers and leaves the
    tie-heavy test conservative.
    """
    return ks_2samp(np.round(xs, 12), np.round(ys, 12)).pvalue


class TestAngleSet:
    def test_exponents(self):
        assert [angle_exponent(4, j) for j in (1, 2, 3)] == [2, 1, 0]

    def test_requires_exact_key_set(self):
        with pytest.raises(ValueError):
            AngleSet(3, {(1, 1): 0.0}, (0, 0, 0))

    def test_range_validation(self):
        angles = {(1, 1): 4.0, (1, 2): 0.0, (2, 2): 0.0}
        with pytest.raises(ValueError):
            AngleSet(3, angles, (0, 0, 0))  # sin-weighted angle beyond pi
        angles = {(1, 1): 1.0, (1, 2): 6.9, (2, 2): 0.0}
        with pytest.raises(ValueError):
            AngleSet(3, angles, (0, 0, 0))  # uniform angle beyond 2*pi

    def test_bit_validation(self):
        with pytest.raises(ValueError):
            AngleSet(2, {(1, 1): 0.0}, (0, 2))


class TestRealize:
    def test_two_dimensional_rotation(self):
        theta = 0.7
        q = realize(AngleSet(2, {(1, 1): theta}, (0, 0)))
        expected = np.array(
            [[math.cos(theta), math.sin(theta)], [-math.sin(theta), math.cos(theta)]]
        )
        assert np.allclose(q, expected, atol=1e-15)

    def test_all_reflections_no_rotation(self):
        angles = {(i, j): 0.0 for i in (1, 2) for j in range(i, 3)}
        q = realize(AngleSet(3, angles, (1, 1, 1)))
        assert np.array_equal(q, -np.eye(3))

    def test_rotation_times_inverse(self):
        theta = 1.2
        fwd = realize(AngleSet(2, {(1, 1): theta}, (0, 0)))
        back = realize(AngleSet(2, {(1, 1): 2 * math.pi - theta}, (0, 0)))
        assert np.allclose(fwd @ back, np.eye(2), atol=1e-14)

    @pytest.mark.parametrize("n", (2, 3, 5))
    def test_realized_matrices_are_orthogonal(self, n):
        rng = np.random.default_rng(91)
        for _ in range(10):
            q = realize(sample_angle_set(n, rng))
            assert orthogonality_check(q, 1e-12)
            assert abs(abs(np.linalg.det(q)) - 1.0) < 1e-10


class TestOrthogonalityCheck:
    def test_identity(self):
        assert orthogonality_check(np.eye(4), 1e-300)

    def test_perturbed_identity(self):
        q = np.eye(3)
        q[0, 1] += 1e-6
        assert not orthogonality_check(q, 1e-9)
        assert orthogonality_check(q, 1e-3)

    def test_tolerance_must_be_positive(self):
        with pytest.raises(ValueError):
            orthogonality_check(np.eye(2), 0.0)


class TestDeterminism:
    def test_same_seed_same_angles(self):
        a1 = sample_angle_set(3, np.random.default_rng(5))
        a2 = sample_angle_set(3, np.random.default_rng(5))
        assert a1.angles == a2.angles
        assert a1.reflections == a2.reflections

    def test_same_seed_same_matrix(self):
        q1 = sample_orthogonal(4, np.random.default_rng(5))
        q2 = sample_orthogonal(4, np.random.default_rng(5))
        assert np.array_equal(q1, q2)

    @pytest.mark.parametrize("n", (1, 2, 3, 4))
    def test_single_matches_batch_of_one(self, n):
        single = sample_orthogonal(n, np.random.default_rng(17))
        batch = sample_orthogonal_batch(n, 1, np.random.default_rng(17))
        assert np.array_equal(single, batch[0])

    def test_batch_reproducible(self):
        b1 = sample_orthogonal_batch(3, 50, np.random.default_rng(33))
        b2 = sample_orthogonal_batch(3, 50, np.random.default_rng(33))
        assert np.array_equal(b1, b2)

    def test_integer_seed_accepted(self):
        assert np.array_equal(sample_orthogonal(2, 9), sample_orthogonal(2, 9))


class TestOneDimensional:
    def test_values_are_signs(self):
        qs = sample_orthogonal_batch(1, 500, np.random.default_rng(3))
        values = qs[:, 0, 0]
        assert set(np.unique(values)) == {-1.0, 1.0}
        # both components within a loose binomial window
        assert 0.4 < (values == 1.0).mean() < 0.6


class TestSamplerStatistics:
    SAMPLES = 30_000

    @pytest.mark.parametrize("n", (2, 3, 4))
    def test_squared_entry_moment(self, n):
        qs = sample_orthogonal_batch(n, self.SAMPLES, np.random.default_rng(100 + n))
        for i, j in ((0, 0), (n - 1, 0), (0, n - 1)):
            x = qs[:, i, j] ** 2
            se = x.std(ddof=1) / math.sqrt(x.size)
            assert abs(x.mean() - 1 / n) <= 3 * se

    @pytest.mark.parametrize("n", (2, 3, 4))
    def test_fourth_moment(self, n):
        qs = sample_orthogonal_batch(n, self.SAMPLES, np.random.default_rng(200 + n))
        x = qs[:, 0, 0] ** 4
        se = x.std(ddof=1) / math.sqrt(x.size)
        assert abs(x.mean() - 3 / (n * (n + 2))) <= 3 * se

    @pytest.mark.parametrize("n", (2, 3, 4))
    def test_det_sign_frequency(self, n):
        qs = sample_orthogonal_batch(n, self.SAMPLES, np.random.default_rng(300 + n))
        freq = (np.linalg.det(qs) < 0).mean()
        assert abs(freq - 0.5) <= 3 * math.sqrt(0.25 / self.SAMPLES)

    @pytest.mark.parametrize("n", (2, 3))
    def test_left_invariance_moments(self, n):
        # fixing an orthogonal P must not move the entry moments of P Q
        theta = 0.7
        p = np.eye(n)
        p[:2, :2] = [[math.cos(theta), math.sin(theta)], [-math.sin(theta), math.cos(theta)]]
        qs = p @ sample_orthogonal_batch(n, self.SAMPLES, np.random.default_rng(400 + n))
        x2 = qs[:, 0, 0] ** 2
        se2 = x2.std(ddof=1) / math.sqrt(x2.size)
        assert abs(x2.mean() - 1 / n) <= 3 * se2
        x4 = qs[:, 0, 0] ** 4
        se4 = x4.std(ddof=1) / math.sqrt(x4.size)
        assert abs(x4.mean() - 3 / (n * (n + 2))) <= 3 * se4


class TestOracle:
    def test_orthogonality(self):
        rng = np.random.default_rng(55)
        for n in (1, 2, 4):
            assert orthogonality_check(oracle_sample(n, rng), 1e-12)

    def test_first_column_angle_uniform(self):
        qs = oracle_sample_batch(2, 100_000, np.random.default_rng(60))
        angles = np.arctan2(qs[:, 1, 0], qs[:, 0, 0])
        p = kstest(angles, "uniform", args=(-math.pi, 2 * math.pi)).pvalue
        assert p > 0.01

    def test_squared_entry_moment(self):
        for n in (2, 3):
            qs = oracle_sample_batch(n, 30_000, np.random.default_rng(71 + n))
            x = qs[:, 0, 0] ** 2
            se = x.std(ddof=1) / math.sqrt(x.size)
            assert abs(x.mean() - 1 / n) <= 3 * se

    def test_det_signs_cover_both_components(self):
        qs = oracle_sample_batch(3, 30_000, np.random.default_rng(80))
        freq = (np.linalg.det(qs) < 0).mean()
        assert abs(freq - 0.5) <= 3 * math.sqrt(0.25 / 30_000)


class TestTwoSamplerAgreement:
    """Smaller version of the full distributional battery (see acceptance)."""

    SAMPLES = 30_000

    @pytest.mark.parametrize("n", (2, 3, 4))
    def test_ks_battery(self, n):
        qs = sample_orthogonal_batch(n, self.SAMPLES, np.random.default_rng(500 + n))
        qo = oracle_sample_batch(n, self.SAMPLES, np.random.default_rng(600 + n))
        assert rounded_ks(np.trace(qs, axis1=1, axis2=2), np.trace(qo, axis1=1, axis2=2)) > 0.01
        assert rounded_ks(qs[:, 0, 0], qo[:, 0, 0]) > 0.01
        assert rounded_ks(qs[:, 0, 0] ** 2, qo[:, 0, 0] ** 2) > 0.01
