#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Created Date: 10/19/2026
# version ='0.1.0'
# ---------------------------------------------------------------------------
""" Hopf bundles, projections of great circles to S^2 and their configurations """
# ---------------------------------------------------------------------------

# ---------------------------------------------------------------------------
# Imports
# ---------------------------------------------------------------------------
import logging
import math
import typing
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from gclink.constants import GEOMETRY_TOL, PROBE_POINTS, PROJECTION_SAMPLES, TANGENCY_TOL
from gclink.enums import Handedness, PairType
from gclink.errors import NotAFiber, TangentCircles
from gclink.gclink_core import GCLink, GreatCircle, triple_sign
from gclink.quat_s3 import (
    PureUnit,
    Quaternion,
    conjugate,
    fiber_axes,
    fiber_plane,
    hamilton,
    solve_axis_transport,
)
from gclink.utils import angle_between, fibonacci_sphere

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Data Classes
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class HopfBundle:
    """Quotient of S^3 by left (right-handed) or right (left-handed) axis-fibers"""

    axis: PureUnit
    handedness: Handedness = Handedness.RIGHT

    def __post_init__(self):
        object.__setattr__(self, 'axis', PureUnit.coerce(self.axis))
        object.__setattr__(self, 'handedness', Handedness.parse(self.handedness))

    @property
    def sign(self) -> int:
        return self.handedness.sign

    def project_points(self, points: np.ndarray) -> np.ndarray:
        """conj(x) q x (right-handed) or x q conj(x) (left-handed), as 3-vectors"""
        points = np.asarray(points, dtype=float)
        q = self.axis.as_array()
        if self.handedness is Handedness.RIGHT:
            image = hamilton(hamilton(conjugate(points), q), points)
        else:
            image = hamilton(hamilton(points, q), conjugate(points))
        return image[..., 1:]

    def project_point(self, x: Quaternion) -> PureUnit:
        return PureUnit.from_vector(self.project_points(x.as_array()))

    def section(self, point) -> Quaternion:
        """A lift of a point of S^2, smooth away from the antipode of the axis"""
        target = PureUnit.from_vector(point)
        if self.handedness is Handedness.RIGHT:
            return solve_axis_transport(self.axis, target)
        return solve_axis_transport(target, self.axis)

    def lift(self, point) -> GreatCircle:
        """The fiber over a point of S^2"""
        x = self.section(point)
        u, v = fiber_plane(self.axis, self.handedness.fiber_side, x)
        return GreatCircle.from_vectors(u, v)

    def height(self, x: np.ndarray) -> float:
        """Fiber phase of x against the section over its image, in [0, 2 pi)"""
        x = np.asarray(x, dtype=float)
        base, second = fiber_plane(
            self.axis, self.handedness.fiber_side, self.section(self.project_points(x))
        )
        return math.atan2(float(np.dot(x, second)), float(np.dot(x, base))) % (2.0 * math.pi)

    def to_dict(self) -> dict:
        return {'axis': self.axis.vector.tolist(), 'handedness': self.handedness.value}


@dataclass(frozen=True)
class PointImage:
    point: PureUnit
    source: GreatCircle = field(repr=False, compare=False)

    def to_dict(self) -> dict:
        return {'point': self.point.vector.tolist()}


@dataclass(frozen=True)
class SphereCircle:
    """Projected geodesic: all images at angular_radius from center"""

    center: PureUnit
    angular_radius: float
    twist: float
    source: GreatCircle = field(repr=False, compare=False)
    bundle: HopfBundle = field(repr=False, compare=False)
    residual: float = field(default=0.0, compare=False)

    def distance(self, point) -> float:
        """Signed distance from the circle, negative inside the canonical cap"""
        return angle_between(self.center.vector, np.asarray(point, dtype=float)) - (
            self.angular_radius
        )

    def distances(self, points: np.ndarray) -> np.ndarray:
        """Vectorised signed distances for points of shape (n, 3)"""
        c = self.center.vector
        spread = np.linalg.norm(points - c, axis=1)
        total = np.linalg.norm(points + c, axis=1)
        return 2.0 * np.arctan2(spread, total) - self.angular_radius

    def contains(self, point) -> bool:
        return self.distance(point) < 0.0

    def to_dict(self) -> dict:
        return {
            'center': self.center.vector.tolist(),
            'radius': self.angular_radius,
            'twist': self.twist,
            'residual': self.residual,
        }


@dataclass(frozen=True)
class PairReport:
    """Decision and evidence for two projected circles"""

    pair_type: PairType
    crossings: tuple = ()
    probe: typing.Optional[tuple] = None
    probe_sign: typing.Optional[int] = None

    @property
    def factor(self) -> int:
        """+1 for pulled-apart or disjoint caps, -1 for nested pairs"""
        return -1 if self.pair_type is PairType.NESTED else 1

    def to_dict(self) -> dict:
        return {
            'type': self.pair_type.value,
            'crossings': [list(c) for c in self.crossings],
            'probe': None if self.probe is None else list(self.probe),
            'probe_sign': self.probe_sign,
        }


# ---------------------------------------------------------------------------
# Projection
# ---------------------------------------------------------------------------
def _is_fiber(g: GreatCircle, bundle: HopfBundle) -> bool:
    axes = fiber_axes(Quaternion.from_array(g.u), Quaternion.from_array(g.v))
    own = axes.left_axis if bundle.handedness is Handedness.RIGHT else axes.right_axis
    q = bundle.axis.vector
    gap = min(np.linalg.norm(own.vector - q), np.linalg.norm(own.vector + q))
    return float(gap) <= GEOMETRY_TOL


def project(g: GreatCircle, bundle: HopfBundle) -> typing.Union[SphereCircle, PointImage]:
    """
    Image of a great circle under a Hopf projection

    Args:
        g (GreatCircle): Geodesic to project
        bundle (HopfBundle): Bundle to project along

    Returns:
        image (SphereCircle | PointImage): A point for fibers, a circle otherwise
    """
    if _is_fiber(g, bundle):
        return PointImage(point=bundle.project_point(Quaternion.from_array(g.u)), source=g)
    axes = fiber_axes(Quaternion.from_array(g.u), Quaternion.from_array(g.v))
    center = axes.right_axis if bundle.handedness is Handedness.RIGHT else axes.left_axis
    center_vec = center.vector
    images = bundle.project_points(g.sample(PROJECTION_SAMPLES))
    radius = angle_between(center_vec, images[0])
    if radius > math.pi / 2:
        center_vec = -center_vec
        radius = math.pi - radius
    residual = max(abs(angle_between(center_vec, image) - radius) for image in images)
    if residual > GEOMETRY_TOL:
        logger.warning('projected circle fit residual %.3e exceeds tolerance', residual)
    return SphereCircle(
        center=PureUnit.from_vector(center_vec),
        angular_radius=radius,
        twist=bundle.height(g.u),
        source=g,
        bundle=bundle,
        residual=residual,
    )


def winding_number(g: GreatCircle, image: SphereCircle, samples: int = 256) -> int:
    """Turns of the projected parametrization around the fitted center"""
    center = image.center.vector
    helper = np.eye(3)[int(np.argmin(np.abs(center)))]
    e1 = np.cross(center, helper)
    e1 = e1 / np.linalg.norm(e1)
    e2 = np.cross(center, e1)
    points = image.bundle.project_points(g.sample(samples))
    angles = np.unwrap(np.arctan2(points @ e2, points @ e1))
    turns = (angles[-1] - angles[0] + (angles[1] - angles[0])) / (2.0 * math.pi)
    return int(round(turns))


# ---------------------------------------------------------------------------
# Pairs of circles
# ---------------------------------------------------------------------------
def _crossings(c1: SphereCircle, c2: SphereCircle) -> list:
    a, b = c1.center.vector, c2.center.vector
    gram = float(np.dot(a, b))
    rhs = np.array([math.cos(c1.angular_radius), math.cos(c2.angular_radius)])
    coef = np.linalg.solve(np.array([[1.0, gram], [gram, 1.0]]), rhs)
    base = coef[0] * a + coef[1] * b
    normal = np.cross(a, b)
    normal = normal / np.linalg.norm(normal)
    lift = math.sqrt(max(0.0, 1.0 - float(np.dot(base, base))))
    return [base + lift * normal, base - lift * normal]


def _probe(c1: SphereCircle, c2: SphereCircle) -> np.ndarray:
    candidates = fibonacci_sphere(PROBE_POINTS)
    margins = np.minimum(c1.distances(candidates), c2.distances(candidates))
    best = int(np.argmax(margins))
    if margins[best] <= TANGENCY_TOL:
        raise TangentCircles('No probe point outside both caps')
    return candidates[best]


def pair_report(c1: SphereCircle, c2: SphereCircle) -> PairReport:
    """
    Relative position of two projected circles of one bundle

    Intersecting pairs are decided with a probe fiber over a point outside both
    caps: the pair is pulled apart exactly when that triple has the bundle's sign.
    Every fiber outside both caps gives the same answer, so the decision does not
    depend on the probe chosen.

    Raises:
        TangentCircles: When the circles touch or coincide, or no probe fiber is
            transverse to both

    Returns:
        report (PairReport): Type plus the crossings and the probe used
    """
    gap = angle_between(c1.center.vector, c2.center.vector)
    outer = c1.angular_radius + c2.angular_radius
    inner = abs(c1.angular_radius - c2.angular_radius)
    if abs(gap - outer) <= TANGENCY_TOL or abs(gap - inner) <= TANGENCY_TOL:
        raise TangentCircles(f'Circles meet tangentially (gap={gap:.3e})')
    if gap > outer or gap < inner:
        return PairReport(pair_type=PairType.DISJOINT)
    bundle = c1.bundle
    probe = _probe(c1, c2)
    sign = triple_sign(c1.source, c2.source, bundle.lift(probe))
    if sign is None:
        raise TangentCircles('Probe fiber is degenerate against the pair')
    kind = PairType.PULL_APART if sign * bundle.sign > 0 else PairType.NESTED
    return PairReport(
        pair_type=kind,
        crossings=tuple(tuple(x.tolist()) for x in _crossings(c1, c2)),
        probe=tuple(probe.tolist()),
        probe_sign=sign,
    )


def pair_type(c1: SphereCircle, c2: SphereCircle) -> PairType:
    return pair_report(c1, c2).pair_type


def caps_factor(c1: SphereCircle, c2: SphereCircle, report: PairReport) -> int:
    """Sign contributed by a pair: nested pairs and nested caps count -1"""
    if report.pair_type is not PairType.DISJOINT:
        return report.factor
    gap = angle_between(c1.center.vector, c2.center.vector)
    return 1 if gap > c1.angular_radius + c2.angular_radius else -1


# ---------------------------------------------------------------------------
# Configurations
# ---------------------------------------------------------------------------
@dataclass
class Configuration:
    """Combinatorial picture of a link projected along a bundle"""

    bundle: HopfBundle
    points: dict = field(default_factory=dict)
    circles: dict = field(default_factory=dict)
    inside: dict = field(default_factory=dict)
    pairs: dict = field(default_factory=dict)

    def separates(self, index: int) -> bool:
        """True when the circle of component index has points on both sides"""
        sides = {self.inside[(index, p)] for p in self.points}
        return len(sides) == 2

    def regions(self) -> int:
        """Number of distinct regions of the circle arrangement holding points"""
        keys = sorted(self.circles)
        return len({tuple(self.inside[(c, p)] for c in keys) for p in self.points})

    def triple_sign(self, i: int, j: int, k: int) -> typing.Optional[int]:
        """Handedness of a triple predicted from the picture (None for three circles)"""
        triple = (i, j, k)
        rings = [t for t in triple if t in self.circles]
        dots = [t for t in triple if t in self.points]
        s = self.bundle.sign
        if not rings:
            return s
        if len(rings) == 1:
            c = rings[0]
            same = self.inside[(c, dots[0])] == self.inside[(c, dots[1])]
            return s if same else -s
        if len(rings) == 2:
            a, b = sorted(rings)
            x = dots[0]
            flips = int(self.inside[(a, x)]) + int(self.inside[(b, x)])
            factor = caps_factor(self.circles[a], self.circles[b], self.pairs[(a, b)])
            return s * factor * (-1) ** flips
        return None

    def case(self) -> str:
        circles = len(self.circles)
        if circles == 0:
            return 'all-fibers'
        if circles == 1:
            (index,) = self.circles
            return 'separating' if self.separates(index) else 'one-side'
        if circles == 2:
            (key, report), = self.pairs.items()
            return f'{report.pair_type.value}-circles:{self.regions()}-regions'
        return f'{circles}-circles'

    def to_dict(self) -> dict:
        return {
            'bundle': self.bundle.to_dict(),
            'case': self.case(),
            'points': {str(k): v.to_dict() for k, v in sorted(self.points.items())},
            'circles': {str(k): v.to_dict() for k, v in sorted(self.circles.items())},
            'inside': [
                {'circle': c, 'component': p, 'inside': flag}
                for (c, p), flag in sorted(self.inside.items())
            ],
            'pairs': [
                {'circles': [a, b], **report.to_dict()}
                for (a, b), report in sorted(self.pairs.items())
            ],
        }


def configuration(link: GCLink, bundle: HopfBundle, fiber_indices=()) -> Configuration:
    """
    Project every component and record the incidences of the picture

    Args:
        link (GCLink): Link to project
        bundle (HopfBundle): Bundle to project along
        fiber_indices (set): Components required to be fibers of the bundle

    Raises:
        NotAFiber: When a required component projects to a circle
        TangentCircles: When circles touch, or a point lies on a circle

    Returns:
        config (Configuration): Points, circles, incidences and pair types
    """
    config = Configuration(bundle=bundle)
    for index, comp in enumerate(link):
        image = project(comp, bundle)
        if isinstance(image, PointImage):
            config.points[index] = image
        elif index in fiber_indices:
            raise NotAFiber(f'Component {index} is not a fiber of the bundle')
        else:
            config.circles[index] = image
    for c, circle in config.circles.items():
        for p, dot in config.points.items():
            distance = circle.distance(dot.point.vector)
            if abs(distance) <= TANGENCY_TOL:
                raise TangentCircles(f'Point {p} lies on circle {c}')
            config.inside[(c, p)] = distance < 0.0
    for a, b in combinations(sorted(config.circles), 2):
        config.pairs[(a, b)] = pair_report(config.circles[a], config.circles[b])
    return config
