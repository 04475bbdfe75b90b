import math

import numpy as np
import pytest

from gclink.enums import Side
from gclink.errors import NotOrthonormal, NotPureUnit
from gclink.quat_s3 import (
    I,
    J,
    K,
    ONE,
    PureUnit,
    Quaternion,
    conj_action,
    fiber_axes,
    fiber_distance,
    fiber_plane,
    hamilton,
    mul,
    solve_axis_transport,
)

ROOT_HALF = math.sqrt(0.5)


def _random_unit(rng) -> Quaternion:
    return Quaternion.from_array(rng.standard_normal(4)).normalized()


def _random_pure(rng) -> PureUnit:
    return PureUnit.from_vector(rng.standard_normal(3))


def test_multiplication_table():
    assert mul(I, J).isclose(K)
    assert mul(J, K).isclose(I)
    assert mul(K, I).isclose(J)
    assert mul(J, I).isclose(-K)
    assert mul(I, I).isclose(-ONE)


def test_product_of_half_turns():
    x = Quaternion(ROOT_HALF, ROOT_HALF, 0.0, 0.0)
    y = Quaternion(ROOT_HALF, 0.0, ROOT_HALF, 0.0)
    assert (x * y).isclose(Quaternion(0.5, 0.5, 0.5, 0.5))


def test_norm_is_multiplicative(rng):
    a = rng.standard_normal((10000, 4))
    b = rng.standard_normal((10000, 4))
    expected = np.linalg.norm(a, axis=-1) * np.linalg.norm(b, axis=-1)
    found = np.linalg.norm(hamilton(a, b), axis=-1)
    assert np.max(np.abs(found - expected) / expected) <= 1e-12


def test_pure_unit_rejects_real_part():
    with pytest.raises(NotPureUnit):
        PureUnit(0.5, 0.5, 0.5, 0.5)
    with pytest.raises(NotPureUnit):
        PureUnit.from_vector([0.0, 0.0, 0.0])


@pytest.mark.parametrize(
    'x, y, left, right',
    [
        (ONE, I, I, I),
        (ONE, J, J, J),
        (I, J, K, -K),
    ],
)
def test_fiber_axes(x, y, left, right):
    axes = fiber_axes(x, y)
    assert axes.left_axis.isclose(left)
    assert axes.right_axis.isclose(right)


def test_fiber_axes_rebuild_the_circle(rng):
    for _ in range(20):
        frame, _ = np.linalg.qr(rng.standard_normal((4, 2)))
        x = Quaternion.from_array(frame[:, 0])
        y = Quaternion.from_array(frame[:, 1])
        axes = fiber_axes(x, y)
        for t in np.linspace(0.0, 2.0 * math.pi, 7):
            point = x.scale(math.cos(t)) + y.scale(math.sin(t))
            turn_left = Quaternion(math.cos(t)) + axes.left_axis.scale(math.sin(t))
            turn_right = Quaternion(math.cos(t)) + axes.right_axis.scale(math.sin(t))
            assert (turn_left * x).isclose(point)
            assert (x * turn_right).isclose(point)


def test_fiber_axes_need_orthonormal_pair():
    with pytest.raises(NotOrthonormal):
        fiber_axes(ONE, Quaternion(ROOT_HALF, ROOT_HALF))


def test_conj_action_known_values():
    assert conj_action(ONE, J).isclose(J)
    assert conj_action(Quaternion(ROOT_HALF, ROOT_HALF), J).isclose(K)
    assert conj_action(I, I).isclose(I)
    assert conj_action(J, I).isclose(-I)


def test_conj_action_is_an_isometry(rng):
    x = _random_unit(rng)
    points = [_random_pure(rng) for _ in range(10)]
    images = [conj_action(x, p) for p in points]
    for a, b, c, d in zip(points, points[1:], images, images[1:]):
        assert abs(a.dot(b) - c.dot(d)) <= 1e-10


def test_solve_axis_transport_known_values():
    assert solve_axis_transport(I, I).isclose(ONE)
    assert solve_axis_transport(J, I).isclose(Quaternion(ROOT_HALF, 0.0, 0.0, ROOT_HALF))
    x = solve_axis_transport(-I, I)
    assert conj_action(x, I).isclose(-I)


def test_solve_axis_transport_random(rng):
    for _ in range(50):
        p, q = _random_pure(rng), _random_pure(rng)
        x = solve_axis_transport(p, q)
        assert x.is_unit(1e-9)
        assert conj_action(x, q).isclose(p)


def test_fiber_distance_known_values():
    assert fiber_distance(I, Side.RIGHT, ONE, ONE) == pytest.approx(0.0, abs=1e-12)
    assert fiber_distance(I, Side.RIGHT, ONE, J) == pytest.approx(math.pi / 2)
    middle = Quaternion(ROOT_HALF, 0.0, ROOT_HALF, 0.0)
    assert fiber_distance(I, Side.RIGHT, ONE, middle) == pytest.approx(math.pi / 4)


def test_fiber_distance_ignores_representatives(rng):
    x1, x2 = _random_unit(rng), _random_unit(rng)
    axis = _random_pure(rng)
    turn = Quaternion(math.cos(0.7)) + axis.scale(math.sin(0.7))
    base = fiber_distance(axis, Side.RIGHT, x1, x2)
    assert fiber_distance(axis, Side.RIGHT, x1 * turn, x2 * turn) == pytest.approx(base, abs=1e-9)
    assert fiber_distance(axis, Side.RIGHT, x2, x1) == pytest.approx(base, abs=1e-9)


def test_fiber_through_antipode_is_the_same_plane(rng):
    x = _random_unit(rng)
    axis = _random_pure(rng)
    u, v = fiber_plane(axis, Side.LEFT, x)
    u2, v2 = fiber_plane(axis, Side.LEFT, -x)
    shadow = np.column_stack([u, v])
    for w in (u2, v2):
        assert np.allclose(shadow @ (shadow.T @ w), w, atol=1e-12)


def test_hamilton_broadcasts(rng):
    a = rng.standard_normal((6, 4))
    b = rng.standard_normal((6, 4))
    products = hamilton(a, b)
    assert products.shape == (6, 4)
    for row, x, y in zip(products, a, b):
        expected = Quaternion.from_array(x) * Quaternion.from_array(y)
        assert np.allclose(row, expected.as_array())
    assert np.allclose(hamilton(a, ONE.as_array()), a)


def test_complex_pair_and_inverse():
    q = Quaternion(1.0, 2.0, 3.0, 4.0)
    assert q.to_complex_pair() == (1 + 2j, 3 + 4j)
    assert Quaternion.from_complex_pair(1 + 2j, 3 + 4j) == q
    assert (q * q.inverse()).isclose(ONE)
    assert (q.inverse() * q).isclose(ONE)
