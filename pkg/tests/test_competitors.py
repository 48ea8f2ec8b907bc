import math

import numpy as np
import pytest

from circxi import CircularSample, circular_mean, fl_correlation, js_correlation
from circxi.errors import DegenerateSample
from conftest import random_sample


class TestCircularMean:
    def test_constant_angles(self):
        m = circular_mean(np.full(5, 0.3))
        assert m.direction == pytest.approx(0.3)
        assert m.resultant_length == pytest.approx(1.0)

    def test_antipodal_cancellation(self):
        m = circular_mean(np.array([0.0, 0.5]))
        assert m.direction is None
        assert m.resultant_length < 1e-12

    def test_quarter_turn_pair(self):
        m = circular_mean(np.array([0.0, 0.25]))
        assert m.direction == pytest.approx(0.125)
        assert m.resultant_length == pytest.approx(math.cos(math.pi / 4))

    def test_empty_rejected(self):
        with pytest.raises(DegenerateSample):
            circular_mean(np.array([]))


class TestCorrelations:
    def test_rotation_perfect(self, rng):
        x = rng.uniform(0, 1, 200)
        s = CircularSample(x, np.mod(x + 0.23, 1))
        assert abs(fl_correlation(s)) == pytest.approx(1.0)
        assert abs(js_correlation(s)) == pytest.approx(1.0, abs=1e-6)

    def test_doubling_blindness(self, rng):
        # multi-winding: both first-order coefficients stay near zero
        js_vals, fl_vals = [], []
        for _ in range(100):
            x = rng.uniform(0, 1, 200)
            s = CircularSample(x, np.mod(2 * x, 1))
            js_vals.append(abs(js_correlation(s)))
            fl_vals.append(abs(fl_correlation(s)))
        assert np.mean(js_vals) < 0.1
        assert np.mean(fl_vals) < 0.02

    def test_bounded(self, rng):
        for _ in range(30):
            s = random_sample(rng, 50)
            assert abs(js_correlation(s)) <= 1.0 + 1e-12
            assert abs(fl_correlation(s)) <= 1.0 + 1e-12

    def test_rotation_invariance(self, rng):
        s = random_sample(rng, 80)
        js0, fl0 = js_correlation(s), fl_correlation(s)
        for shift in rng.uniform(0, 1, 5):
            shifted = CircularSample(np.mod(s.x + shift, 1), s.y)
            assert js_correlation(shifted) == pytest.approx(js0, abs=1e-10)
            assert fl_correlation(shifted) == pytest.approx(fl0, abs=1e-10)

    def test_reflection_antisymmetry(self, rng):
        s = random_sample(rng, 60)
        refl = CircularSample(s.x, np.mod(1 - s.y, 1))
        assert js_correlation(refl) == pytest.approx(-js_correlation(s), abs=1e-10)
        assert fl_correlation(refl) == pytest.approx(-fl_correlation(s), abs=1e-10)

    def test_degenerate_mean_rejected(self):
        s = CircularSample([0.0, 0.5], [0.1, 0.2])
        with pytest.raises(DegenerateSample):
            js_correlation(s)
