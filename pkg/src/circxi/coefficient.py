"""The cyclic-rank circular correlation coefficient.

The raw statistic penalizes each adjacent predictor edge by d*(n-d),
where d is the cyclic response-rank increment across the edge:

    xi_raw = 1 - 6 / (n^2 (n+1)) * sum_k d_k (n - d_k)

The corrected version divides by a_n = (n-2)(n-3) / (n (n+1)) so that
perfect cyclic agreement or reversal scores exactly 1; it is undefined
(reported as None) for n < 4.
"""

from dataclasses import dataclass

from circxi.angles import cyclic_rank_profile
from circxi.errors import SampleTooSmall

__all__ = [
    "CoefficientReport",
    "max_raw_value",
    "xi_from_weight_sum",
    "xi_circular",
    "xi_circular_directed",
    "xi_circular_symmetric",
]


@dataclass(frozen=True)
class CoefficientReport:
    raw: float
    corrected: float | None
    n: int
    direction: str
    ties_applied: bool = False


def max_raw_value(n):
    """a_n, the attainable maximum of the raw statistic for sample size n."""
    return (n - 2) * (n - 3) / (n * (n + 1))


def xi_from_weight_sum(weight_sum, n):
    """Raw statistic from the integer edge-weight sum and sample size."""
    return (n * n * (n + 1) - 6 * weight_sum) / (n * n * (n + 1))


def _report(weight_sum, n, direction, ties_applied):
    # single integer numerator: agreement / reversal orders give
    # corrected exactly 1.0 with no rounding
    num = n * n * (n + 1) - 6 * weight_sum
    raw = num / (n * n * (n + 1))
    corrected = num / (n * (n - 2) * (n - 3)) if n >= 4 else None
    return CoefficientReport(raw=raw, corrected=corrected, n=n,
                             direction=direction, ties_applied=ties_applied)


def xi_circular(profile, direction="x_to_y", ties_applied=False):
    """Raw and corrected coefficient from a cyclic rank profile."""
    n = profile.n
    if n < 2:
        raise SampleTooSmall(f"need at least 2 observations, got {n}")
    return _report(profile.weight_sum, n, direction, ties_applied)


def xi_circular_directed(sample, direction="x_to_y", ties_applied=False):
    """Directed coefficient of a tie-free sample.

    'x_to_y' measures predictability of y from x; 'y_to_x' swaps roles.
    """
    if direction not in ("x_to_y", "y_to_x"):
        raise ValueError(f"unknown direction {direction!r}")
    s = sample if direction == "x_to_y" else sample.swapped()
    return xi_circular(cyclic_rank_profile(s), direction, ties_applied)


def xi_circular_symmetric(sample, ties_applied=False):
    """Symmetric coefficient: the maximum over the two directions."""
    xy = xi_circular_directed(sample, "x_to_y", ties_applied)
    yx = xi_circular_directed(sample, "y_to_x", ties_applied)
    best = xy if xy.raw >= yx.raw else yx
    return CoefficientReport(raw=best.raw, corrected=best.corrected,
                             n=best.n, direction="symmetric",
                             ties_applied=ties_applied)
