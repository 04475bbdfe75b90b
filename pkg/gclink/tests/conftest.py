import math

import numpy as np
import pytest

from gclink.gclink_core import GCLink, GreatCircle
from gclink.quat_s3 import I, Quaternion

# distinct modulo pi, so no two fibers coincide
FIBER_ANGLES = (0.0, math.pi / 2, math.pi / 4, 3 * math.pi / 4, math.pi / 8)


def _left_fiber(angle: float) -> GreatCircle:
    x = Quaternion(math.cos(angle), 0.0, math.sin(angle), 0.0)
    return GreatCircle.from_quaternions(x, I * x)


@pytest.fixture
def left_fiber():
    """Left i-fiber through cos(a) + j sin(a)"""
    return _left_fiber


@pytest.fixture
def hopf_link():
    """n left i-fibers; the first three are already in standard position"""

    def build(n: int) -> GCLink:
        return GCLink(tuple(_left_fiber(a) for a in FIBER_ANGLES[:n]))

    return build


@pytest.fixture
def rng():
    return np.random.default_rng(20261019)


@pytest.fixture
def rotation():
    def draw(rng: np.random.Generator) -> np.ndarray:
        q, _ = np.linalg.qr(rng.standard_normal((4, 4)))
        if np.linalg.det(q) < 0:
            q[:, 0] = -q[:, 0]
        return q

    return draw
