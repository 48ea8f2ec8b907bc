"""Classical circular-circular correlation baselines.

The centered-sine coefficient (Jammalamadaka-Sarma) and the
pairwise-difference coefficient (Fisher-Lee). Both are first-order
measures: they respond strongly to rotations but are nearly blind to
multi-winding relationships. Sines are evaluated on angles in radians
(2 pi times the stored turns).
"""

import math
from dataclasses import dataclass

import numpy as np

from circxi.errors import DegenerateSample

__all__ = ["CircularMean", "circular_mean", "js_correlation", "fl_correlation"]

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class CircularMean:
    """Mean direction (in turns) and resultant length of a set of angles.

    direction is None when the unit vectors cancel (resultant length
    below 1e-12), in which case the mean direction is undefined.
    """

    direction: float | None
    resultant_length: float


def circular_mean(angles):
    """Vector-sum circular mean of angles given in turns."""
    if len(angles) < 1:
        raise DegenerateSample("need at least one angle")
    theta = _TWO_PI * np.asarray(angles, dtype=float)
    c = float(np.mean(np.cos(theta)))
    s = float(np.mean(np.sin(theta)))
    r = math.hypot(c, s)
    if r < 1e-12:
        return CircularMean(direction=None, resultant_length=r)
    return CircularMean(direction=math.atan2(s, c) / _TWO_PI % 1.0,
                        resultant_length=r)


def js_correlation(sample):
    """Centered-sine circular correlation.

    r = sum sin(x - xbar) sin(y - ybar)
        / sqrt(sum sin^2(x - xbar) * sum sin^2(y - ybar)),

    with xbar, ybar the sample circular mean directions. Signed; callers
    wanting the magnitude take abs().
    """
    mx = circular_mean(sample.x)
    my = circular_mean(sample.y)
    if mx.direction is None or my.direction is None:
        raise DegenerateSample("circular mean direction undefined")
    sx = np.sin(_TWO_PI * (sample.x - mx.direction))
    sy = np.sin(_TWO_PI * (sample.y - my.direction))
    denom = math.sqrt(float(np.sum(sx * sx)) * float(np.sum(sy * sy)))
    if denom == 0.0:
        raise DegenerateSample("zero denominator in centered-sine correlation")
    return float(np.sum(sx * sy)) / denom


def fl_correlation(sample):
    """Pairwise-difference circular correlation.

    r = sum_{i<j} sin(x_i - x_j) sin(y_i - y_j), normalized by the
    root product of the two pairwise sine-square sums. O(n^2).
    """
    x = _TWO_PI * sample.x
    y = _TWO_PI * sample.y
    dx = np.sin(x[:, None] - x[None, :])
    dy = np.sin(y[:, None] - y[None, :])
    iu = np.triu_indices(len(x), k=1)
    sx, sy = dx[iu], dy[iu]
    denom = math.sqrt(float(np.sum(sx * sx)) * float(np.sum(sy * sy)))
    if denom == 0.0:
        raise DegenerateSample("zero denominator in pairwise-difference correlation")
    return float(np.sum(sx * sy)) / denom
