import numpy as np
import pytest

from circxi import CircularSample


@pytest.fixture
def rng():
    return np.random.default_rng(20230817)


def random_sample(rng, n):
    """A tie-free sample of n uniform pairs (ties have probability ~0)."""
    return CircularSample(rng.uniform(0, 1, n), rng.uniform(0, 1, n))
