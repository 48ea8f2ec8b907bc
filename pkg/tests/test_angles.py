import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circxi import (
    CircularSample,
    TiesPolicy,
    cyclic_rank_profile,
    discrepancy_h,
    normalize_angles,
    resolve_ties,
)
from circxi.errors import DomainError, InvalidAngle, SampleTooSmall, TiesPresent
from conftest import random_sample


class TestNormalizeAngles:
    def test_radians(self):
        out = normalize_angles([0.0, math.pi, 3 * math.pi], "radians")
        np.testing.assert_allclose(out, [0.0, 0.5, 0.5], atol=1e-15)

    def test_degrees(self):
        out = normalize_angles([360.0, 90.0], "degrees")
        np.testing.assert_allclose(out, [0.0, 0.25], atol=1e-15)

    def test_negative_turns_wrap_forward(self):
        np.testing.assert_allclose(normalize_angles([-0.25]), [0.75])

    def test_radians_round_trip(self, rng):
        theta = rng.uniform(0, 2 * math.pi, 1000)
        back = normalize_angles(theta, "radians") * 2 * math.pi
        np.testing.assert_allclose(back, theta, atol=1e-12)

    def test_nonfinite_rejected(self):
        with pytest.raises(InvalidAngle):
            normalize_angles([0.1, math.nan])
        with pytest.raises(InvalidAngle):
            normalize_angles([math.inf], "radians")

    def test_output_in_unit_interval(self, rng):
        out = normalize_angles(rng.normal(0, 100, 10000), "radians")
        assert np.all((out >= 0) & (out < 1))


class TestResolveTies:
    def test_no_ties_identity(self, rng):
        s = random_sample(rng, 20)
        assert resolve_ties(s, TiesPolicy()) is s

    def test_reject_reports_indices(self):
        s = CircularSample([0.1, 0.1, 0.5], [0.2, 0.4, 0.6])
        with pytest.raises(TiesPresent) as exc:
            resolve_ties(s, TiesPolicy(mode="reject"))
        assert exc.value.axis == "x"
        assert exc.value.indices == (0, 1)

    def test_jitter_deterministic(self):
        s = CircularSample([0.1, 0.1, 0.5], [0.2, 0.4, 0.6])
        policy = TiesPolicy(mode="jitter", seed=99)
        a = resolve_ties(s, policy)
        b = resolve_ties(s, policy)
        np.testing.assert_array_equal(a.x, b.x)
        np.testing.assert_array_equal(a.y, b.y)

    def test_jitter_removes_ties_and_preserves_others(self):
        s = CircularSample([0.1, 0.1, 0.5], [0.2, 0.2, 0.2])
        out = resolve_ties(s, TiesPolicy(mode="jitter", seed=3))
        assert len(set(out.x)) == 3 and len(set(out.y)) == 3
        assert out.x[2] == 0.5  # untied coordinate untouched

    def test_jitter_scale_must_be_positive(self):
        with pytest.raises(ValueError):
            TiesPolicy(mode="jitter", jitter_scale=0.0)


class TestCyclicRankProfile:
    def test_identical_cyclic_order(self):
        s = CircularSample([0.1, 0.2, 0.3, 0.4], [0.15, 0.35, 0.55, 0.75])
        np.testing.assert_array_equal(cyclic_rank_profile(s).d, [1, 1, 1, 1])

    def test_reversed_cyclic_order(self):
        s = CircularSample([0.1, 0.2, 0.3, 0.4], [0.8, 0.6, 0.4, 0.2])
        np.testing.assert_array_equal(cyclic_rank_profile(s).d, [3, 3, 3, 3])

    def test_hand_evaluated_increments(self):
        # y cyclic ranks (0, 1, 3, 2) in x order: modular differences
        # give d = (1, 2, 3, 2)
        s = CircularSample([0.1, 0.2, 0.3, 0.4], [0.1, 0.3, 0.9, 0.7])
        p = cyclic_rank_profile(s)
        np.testing.assert_array_equal(p.rho[p.order], [0, 1, 3, 2])
        np.testing.assert_array_equal(p.d, [1, 2, 3, 2])

    def test_too_small(self):
        with pytest.raises(SampleTooSmall):
            CircularSample([0.1], [0.2])

    def test_ties_detected(self):
        s = CircularSample([0.1, 0.2, 0.3], [0.5, 0.5, 0.9])
        with pytest.raises(TiesPresent):
            cyclic_rank_profile(s)

    @given(st.integers(min_value=2, max_value=40), st.integers())
    @settings(max_examples=60, deadline=None)
    def test_increments_sum_to_winding_multiple(self, n, seed):
        r = np.random.default_rng(abs(seed) % 2**32)
        s = CircularSample(r.permutation(n) / n, r.permutation(n) / n)
        p = cyclic_rank_profile(s)
        assert sorted(p.rho) == list(range(n))
        assert np.all((p.d >= 1) & (p.d <= n - 1))
        total = int(p.d.sum())
        assert total % n == 0
        assert 1 <= total // n <= n - 1
        assert p.winding_number == total // n

    def test_rotation_leaves_d_multiset(self, rng):
        s = random_sample(rng, 37)
        p = cyclic_rank_profile(s)
        for shift in rng.uniform(0, 1, 5):
            sx = CircularSample(np.mod(s.x + shift, 1), s.y)
            sy = CircularSample(s.x, np.mod(s.y + shift, 1))
            assert sorted(cyclic_rank_profile(sx).d) == sorted(p.d)
            assert sorted(cyclic_rank_profile(sy).d) == sorted(p.d)

    def test_reflection_maps_d_to_complement(self, rng):
        s = random_sample(rng, 25)
        d = cyclic_rank_profile(s).d
        refl = CircularSample(s.x, np.mod(1 - s.y, 1))
        d_refl = cyclic_rank_profile(refl).d
        assert sorted(d_refl) == sorted(s.n - d)


class TestDiscrepancy:
    def test_endpoints_and_peak(self):
        assert discrepancy_h(0.0) == 0.0
        assert discrepancy_h(1.0) == 0.0
        assert discrepancy_h(0.5) == 0.25

    def test_symmetry(self, rng):
        t = rng.uniform(0, 1, 100)
        np.testing.assert_allclose(discrepancy_h(t), discrepancy_h(1 - t))

    def test_mean_over_uniform_is_one_sixth(self):
        # quadrature oracle: midpoint rule on a fine grid
        t = (np.arange(200_000) + 0.5) / 200_000
        assert abs(np.mean(discrepancy_h(t)) - 1 / 6) < 1e-10

    def test_domain_guard(self):
        with pytest.raises(DomainError):
            discrepancy_h(1.5)
