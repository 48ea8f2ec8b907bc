"""Angles on the unit circle, ties handling, and cyclic rank profiles.

Angles are stored internally in *turns*: fractions of a full revolution,
normalized into [0, 1). Radians and degrees are converted at the I/O
boundary only.
"""

from dataclasses import dataclass, field

import numpy as np

from circxi.errors import InvalidAngle, SampleTooSmall, TiesPresent
from circxi.kernels import cycle_weight_sum

__all__ = [
    "normalize_angles",
    "CircularSample",
    "TiesPolicy",
    "resolve_ties",
    "CyclicRankProfile",
    "cyclic_rank_profile",
    "discrepancy_h",
]

_UNIT_SCALE = {"turns": 1.0, "radians": 2.0 * np.pi, "degrees": 360.0}


def normalize_angles(values, unit="turns"):
    """Convert angles to turns and reduce them modulo one into [0, 1).

    Parameters
    ----------
    values : array_like
        Angles, finite reals.
    unit : {'turns', 'radians', 'degrees'}

    Returns
    -------
    np.ndarray of float
        Angles in turns, each in [0, 1).
    """
    if unit not in _UNIT_SCALE:
        raise InvalidAngle(f"unknown unit {unit!r}")
    values = np.asarray(values, dtype=float)
    if not np.all(np.isfinite(values)):
        bad = np.flatnonzero(~np.isfinite(values))
        raise InvalidAngle(f"non-finite angle(s) at indices {bad.tolist()}")
    turns = np.mod(values / _UNIT_SCALE[unit], 1.0)
    # mod can return 1.0 for tiny negative inputs; fold back into [0, 1)
    turns[turns >= 1.0] = 0.0
    return turns


@dataclass(frozen=True)
class CircularSample:
    """Paired angular observations in turns.

    x and y are the predictor and response angles, each in [0, 1).
    """

    x: np.ndarray
    y: np.ndarray

    def __post_init__(self):
        x = np.asarray(self.x, dtype=float)
        y = np.asarray(self.y, dtype=float)
        if x.ndim != 1 or y.ndim != 1 or len(x) != len(y):
            raise SampleTooSmall("x and y must be 1-d arrays of equal length")
        if len(x) < 2:
            raise SampleTooSmall(f"need at least 2 observations, got {len(x)}")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @property
    def n(self):
        return len(self.x)

    @classmethod
    def from_angles(cls, x, y, unit="turns"):
        return cls(normalize_angles(x, unit), normalize_angles(y, unit))

    def swapped(self):
        """The sample with predictor and response roles exchanged."""
        return CircularSample(self.y, self.x)


@dataclass(frozen=True)
class TiesPolicy:
    """How tied coordinates are resolved before ranking.

    mode 'reject' raises TiesPresent; 'jitter' perturbs tied coordinates
    by seeded uniform noise on (-jitter_scale, jitter_scale) turns until
    no ties remain. Resolution is bit-reproducible for a fixed seed.
    """

    mode: str = "reject"
    jitter_scale: float = 1e-9
    seed: int = 0

    def __post_init__(self):
        if self.mode not in ("reject", "jitter"):
            raise ValueError(f"unknown ties mode {self.mode!r}")
        if self.mode == "jitter" and not self.jitter_scale > 0:
            raise ValueError("jitter_scale must be positive")


def _tied_indices(values):
    """Indices participating in any exact duplicate, or empty array."""
    order = np.argsort(values, kind="stable")
    s = values[order]
    dup = np.zeros(len(values), dtype=bool)
    eq = s[1:] == s[:-1]
    dup[1:] |= eq
    dup[:-1] |= eq
    return np.sort(order[dup])


def resolve_ties(sample, policy=TiesPolicy()):
    """Return a tie-free sample according to the ties policy.

    A sample without ties is returned unchanged. Under 'jitter', only the
    tied coordinates are perturbed; the perturb-and-check loop repeats with
    a fresh substream until both axes are duplicate-free.
    """
    x, y = sample.x, sample.y
    tx, ty = _tied_indices(x), _tied_indices(y)
    if len(tx) == 0 and len(ty) == 0:
        return sample
    if policy.mode == "reject":
        axis, idx = ("x", tx) if len(tx) else ("y", ty)
        raise TiesPresent(axis, idx)

    rng = np.random.default_rng(np.random.SeedSequence(policy.seed))
    x, y = x.copy(), y.copy()
    while True:
        for values, tied in ((x, tx), (y, ty)):
            if len(tied):
                noise = rng.uniform(-policy.jitter_scale, policy.jitter_scale, len(tied))
                values[tied] = np.mod(values[tied] + noise, 1.0)
        tx, ty = _tied_indices(x), _tied_indices(y)
        if len(tx) == 0 and len(ty) == 0:
            return CircularSample(x, y)


@dataclass(frozen=True)
class CyclicRankProfile:
    """Cyclic order of x, cyclic ranks of y, and the edge increments.

    order[k] is the index of the k-th observation in ascending x order
    (starting from the minimum-x index). rho[j] is the 0-based cyclic
    rank of y_j. d[k] = (rho[order[k+1]] - rho[order[k]]) mod n with the
    order wrapped cyclically; each d[k] lies in {1, ..., n-1}.
    """

    order: np.ndarray
    rho: np.ndarray
    d: np.ndarray
    weight_sum: int = field(compare=False)

    @property
    def n(self):
        return len(self.order)

    @property
    def winding_number(self):
        return int(self.d.sum()) // self.n


def cyclic_rank_profile(sample):
    """Compute the cyclic rank profile of a tie-free sample in O(n log n).

    Raises
    ------
    SampleTooSmall
        If n < 2.
    TiesPresent
        If either axis contains exact duplicates.
    """
    n = sample.n
    if n < 2:
        raise SampleTooSmall(f"need at least 2 observations, got {n}")
    order = np.argsort(sample.x)
    y_order = np.argsort(sample.y)
    # a value sort is cheaper than gathering through the index arrays
    for axis, values in (("x", sample.x), ("y", sample.y)):
        s = np.sort(values)
        if np.any(s[1:] == s[:-1]):
            raise TiesPresent(axis, _tied_indices(values))
    rho = np.empty(n, dtype=np.int64)
    rho[y_order] = np.arange(n, dtype=np.int64)
    r = np.ascontiguousarray(rho[order])
    d = np.mod(np.roll(r, -1) - r, n)
    return CyclicRankProfile(order=order, rho=rho, d=d, weight_sum=cycle_weight_sum(r))


def discrepancy_h(t):
    """The rank discrepancy t*(1-t) on [0, 1]; symmetric about 1/2."""
    t = np.asarray(t, dtype=float)
    if np.any((t < 0.0) | (t > 1.0)):
        from circxi.errors import DomainError

        raise DomainError("discrepancy_h requires 0 <= t <= 1")
    out = t * (1.0 - t)
    return float(out) if out.ndim == 0 else out
