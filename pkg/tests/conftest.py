import random

import pytest

from dynhull.kernel import Point


def random_int_points(rng, n, lim=100):
    """n distinct lattice points."""
    pts = set()
    while len(pts) < n:
        pts.add(Point(rng.randint(0, lim), rng.randint(0, lim)))
    out = sorted(pts)
    rng.shuffle(out)
    return out


@pytest.fixture
def rng():
    return random.Random(0xD1CE)
