import math

import numpy as np
import pytest

from gclink.classify import triple_handedness
from gclink.enums import Handedness, PairType
from gclink.errors import NotAFiber, TangentCircles
from gclink.gclink_core import GCLink, GreatCircle, triple_sign
from gclink.hopf_proj import (
    HopfBundle,
    PointImage,
    SphereCircle,
    configuration,
    pair_report,
    pair_type,
    project,
    winding_number,
)
from gclink.quat_s3 import I, J, PureUnit

E = np.eye(4)
ROOT_HALF = math.sqrt(0.5)
RIGHT_I = HopfBundle(I, Handedness.RIGHT)
LEFT_I = HopfBundle(I, Handedness.LEFT)


def _right_fiber_through_middle() -> GreatCircle:
    """Right i-fiber through (1 + j)/sqrt(2); not a left i-fiber"""
    return GreatCircle(
        np.array([ROOT_HALF, 0.0, ROOT_HALF, 0.0]), np.array([0.0, ROOT_HALF, 0.0, -ROOT_HALF])
    )


def test_fiber_projects_to_a_point():
    image = project(GreatCircle(E[0], E[1]), LEFT_I)
    assert isinstance(image, PointImage)
    assert image.point.isclose(I)


def test_left_fibers_are_points_of_the_right_handed_bundle(left_fiber):
    first = project(left_fiber(0.0), RIGHT_I)
    second = project(left_fiber(math.pi / 2), RIGHT_I)
    assert first.point.isclose(I)
    assert second.point.isclose(-I)


def test_generic_circle_projects_to_a_great_circle():
    g = GreatCircle(E[0], E[2])
    image = project(g, RIGHT_I)
    assert isinstance(image, SphereCircle)
    assert image.angular_radius == pytest.approx(math.pi / 2, abs=1e-9)
    assert abs(float(np.dot(image.center.vector, J.vector))) == pytest.approx(1.0)
    assert winding_number(g, image) == 2


def test_projected_points_lie_on_the_fitted_circle(rng):
    for k in range(1000):
        frame, _ = np.linalg.qr(rng.standard_normal((4, 2)))
        g = GreatCircle(frame[:, 0], frame[:, 1])
        handedness = Handedness.RIGHT if k % 2 else Handedness.LEFT
        bundle = HopfBundle(PureUnit.from_vector(rng.standard_normal(3)), handedness)
        image = project(g, bundle)
        assert isinstance(image, SphereCircle)
        assert image.residual <= 1e-9
        points = bundle.project_points(g.sample(50))
        assert np.abs(image.distances(points)).max() <= 1e-9
        assert 0.0 <= image.angular_radius <= math.pi / 2 + 1e-12


def test_lift_is_a_fiber(rng):
    bundle = HopfBundle(PureUnit.from_vector(rng.standard_normal(3)), Handedness.LEFT)
    point = PureUnit.from_vector(rng.standard_normal(3))
    image = project(bundle.lift(point.vector), bundle)
    assert isinstance(image, PointImage)
    assert image.point.isclose(point, 1e-8)


def test_disjoint_circles():
    bundle = RIGHT_I
    tilt = 0.3
    c1 = project(
        GreatCircle(E[0], np.array([0.0, 0.0, math.cos(tilt), math.sin(tilt)])), bundle
    )
    assert isinstance(c1, SphereCircle)
    assert c1.angular_radius == pytest.approx(math.pi / 2, abs=1e-9)
    small = SphereCircle(
        center=PureUnit.from_vector([1.0, 0.0, 0.0]),
        angular_radius=0.2,
        twist=0.0,
        source=c1.source,
        bundle=bundle,
    )
    other = SphereCircle(
        center=PureUnit.from_vector([-1.0, 0.0, 0.0]),
        angular_radius=0.2,
        twist=0.0,
        source=c1.source,
        bundle=bundle,
    )
    assert pair_type(small, other) is PairType.DISJOINT


def test_configuration_of_fibers(hopf_link):
    config = configuration(hopf_link(4), RIGHT_I, {0, 1, 2})
    assert len(config.points) == 4
    assert not config.circles
    assert config.case() == 'all-fibers'
    assert config.triple_sign(0, 1, 3) == 1


def test_configuration_with_one_circle(left_fiber):
    link = GCLink((left_fiber(0.0), left_fiber(math.pi / 2), _right_fiber_through_middle()))
    config = configuration(link, RIGHT_I, {0, 1})
    assert sorted(config.points) == [0, 1]
    assert sorted(config.circles) == [2]
    assert config.case() == 'separating'
    assert config.triple_sign(0, 1, 2) == triple_handedness(link, (0, 1, 2)) == -1


def test_configuration_requires_fibers(left_fiber):
    link = GCLink((left_fiber(0.0), left_fiber(math.pi / 2), _right_fiber_through_middle()))
    with pytest.raises(NotAFiber):
        configuration(link, RIGHT_I, {0, 1, 2})


def test_empty_configuration():
    config = configuration(GCLink(()), RIGHT_I)
    assert not config.points and not config.circles
    assert config.to_dict()['case'] == 'all-fibers'


def test_bundle_serializes():
    assert HopfBundle(I, 'left').to_dict() == {'axis': [1.0, 0.0, 0.0], 'handedness': 'left'}
    assert project(GreatCircle(E[0], E[1]), HopfBundle(I)).to_dict() == {'point': [1.0, 0.0, 0.0]}


def test_bundle_sign():
    assert RIGHT_I.sign == 1
    assert LEFT_I.sign == -1
    assert 'left' in Handedness


def test_crossing_pairs_agree_with_every_outside_fiber(rng):
    crossing = 0
    for k in range(100):
        bundle = RIGHT_I if k % 2 else LEFT_I
        circles = []
        for _ in range(2):
            frame, _ = np.linalg.qr(rng.standard_normal((4, 2)))
            circles.append(GreatCircle(frame[:, 0], frame[:, 1]))
        c1, c2 = (project(g, bundle) for g in circles)
        try:
            report = pair_report(c1, c2)
        except TangentCircles:
            continue
        if report.pair_type is PairType.DISJOINT:
            continue
        crossing += 1
        assert report.probe_sign * bundle.sign == report.factor
        assert len(report.crossings) == 2
        points = rng.standard_normal((50, 3))
        points /= np.linalg.norm(points, axis=1)[:, None]
        margins = np.minimum(c1.distances(points), c2.distances(points))
        for x in points[margins > 0.05]:
            assert triple_sign(c1.source, c2.source, bundle.lift(x)) == report.probe_sign
    assert crossing > 0
