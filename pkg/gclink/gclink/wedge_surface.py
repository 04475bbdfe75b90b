#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Created Date: 10/19/2026
# version ='0.1.0'
# ---------------------------------------------------------------------------
""" z/w-disks, wedges and the surfaces spanning consecutive components of D(p/q) """
# ---------------------------------------------------------------------------

# ---------------------------------------------------------------------------
# Imports
# ---------------------------------------------------------------------------
import logging
import math
import typing
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from gclink.constants import ALGEBRA_TOL, SCHEMA
from gclink.dpq import AxisSchedule, DpqParams, axis_schedule
from gclink.enums import Axis, IntersectionKind, Offset
from gclink.errors import InvalidParams, PremiseFailure, RangeError

logger = logging.getLogger(__name__)

# ---------------------------------------------------------------------------
# Constants
# ---------------------------------------------------------------------------
MEETING_RADIUS_SQ = Fraction(1, 2)

Radius = typing.Union[Fraction, int, float]


# ---------------------------------------------------------------------------
# Angles and intervals
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class AngleMark:
    """
    A multiple of pi/q, or a point just before or after it

    Marks are compared through ticks = 3 * units + offset, so the symbolic
    offsets sit strictly between neighbouring lattice angles.
    """

    units: int
    offset: Offset = Offset.EXACT

    @classmethod
    def before(cls, units: int, modulus: int) -> 'AngleMark':
        return cls(units % modulus, Offset.BEFORE)

    @classmethod
    def after(cls, units: int, modulus: int) -> 'AngleMark':
        return cls(units % modulus, Offset.AFTER)

    @classmethod
    def exact(cls, units: int, modulus: int) -> 'AngleMark':
        return cls(units % modulus, Offset.EXACT)

    @property
    def ticks(self) -> int:
        return 3 * self.units + self.offset.value

    def shifted(self, units: int, modulus: int) -> 'AngleMark':
        return AngleMark((self.units + units) % modulus, self.offset)

    def radians(self, q: int) -> float:
        return math.pi * self.units / q

    def __str__(self) -> str:
        marks = {Offset.BEFORE: '-', Offset.EXACT: '', Offset.AFTER: '+'}
        return f'{self.units}{marks[self.offset]}'


@dataclass(frozen=True)
class Interval:
    """Counterclockwise closed arc from start to stop on a circle of 2q lattice angles"""

    start: AngleMark
    stop: AngleMark
    modulus: int

    @property
    def _span(self) -> int:
        return (self.stop.ticks - self.start.ticks) % (3 * self.modulus)

    def contains(self, mark: typing.Union[AngleMark, int]) -> bool:
        if isinstance(mark, int):
            mark = AngleMark.exact(mark, self.modulus)
        return (mark.ticks - self.start.ticks) % (3 * self.modulus) <= self._span

    def lattice(self) -> list:
        """Lattice angles in the arc, in order"""
        first = self.start.units if self.start.offset is not Offset.AFTER else self.start.units + 1
        points = []
        for step in range(self.modulus):
            units = (first + step) % self.modulus
            if not self.contains(units):
                break
            points.append(units)
        return points

    def inside(self, other: 'Interval') -> bool:
        """True when this arc lies within other"""
        return (
            other.contains(self.start)
            and other.contains(self.stop)
            and (self.start.ticks - other.start.ticks) % (3 * self.modulus) <= other._span - self._span
        )

    def shifted(self, units: int) -> 'Interval':
        return Interval(
            self.start.shifted(units, self.modulus), self.stop.shifted(units, self.modulus), self.modulus
        )

    def to_dict(self) -> dict:
        return {'start': str(self.start), 'stop': str(self.stop)}


def _complements(wedges: list, modulus: int) -> list:
    """Open arcs between consecutive wedges, each starting after a wedge ends"""
    ordered = sorted(wedges, key=lambda wedge: wedge.start.ticks)
    gaps = []
    for i, wedge in enumerate(ordered):
        following = ordered[(i + 1) % len(ordered)]
        gaps.append(
            Interval(
                AngleMark(wedge.stop.units, Offset.AFTER),
                AngleMark(following.start.units, Offset.BEFORE),
                modulus,
            )
        )
    return gaps


# ---------------------------------------------------------------------------
# Disks
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class DiskSpec:
    """
    z-disk: points (r e^{i theta}, w) with r >= 0 and |w| <= radius, theta the center

    w-disks swap the roles of z and w. The squared radius is kept so that the
    meeting radius 1/sqrt(2) stays exact.
    """

    axis: Axis
    center: AngleMark
    radius_sq: Radius = MEETING_RADIUS_SQ

    def __post_init__(self):
        if not 0 < self.radius_sq <= 1:
            raise InvalidParams(f'Disk radius must lie in (0, 1], got squared radius {self.radius_sq}')

    @classmethod
    def with_radius(cls, axis: Axis, center: AngleMark, radius: Radius) -> 'DiskSpec':
        if not 0 < radius <= 1:
            raise InvalidParams(f'Disk radius must lie in (0, 1], got {radius}')
        return cls(Axis.parse(axis), center, radius * radius)

    @property
    def radius(self) -> float:
        return math.sqrt(self.radius_sq)

    @property
    def exact(self) -> bool:
        return isinstance(self.radius_sq, (Fraction, int))

    def to_dict(self) -> dict:
        return {'axis': self.axis.value, 'center': str(self.center), 'radius_sq': str(self.radius_sq)}


@dataclass(frozen=True)
class DiskIntersection:
    kind: IntersectionKind
    point: typing.Optional[np.ndarray] = None


def disk_intersect(d1: DiskSpec, d2: DiskSpec, q: int = 1) -> DiskIntersection:
    """
    How two disks meet

    Args:
        d1 (DiskSpec): First disk
        d2 (DiskSpec): Second disk
        q (int): Denominator of the angle unit, used to place a point of contact

    Returns:
        intersection (DiskIntersection): Kind, with the point in R^4 for a single point
    """
    if d1.axis is d2.axis:
        if d1.center == d2.center:
            return DiskIntersection(IntersectionKind.REGION)
        if d1.radius_sq == 1 and d2.radius_sq == 1:
            return DiskIntersection(IntersectionKind.AXIS)
        return DiskIntersection(IntersectionKind.NO_INTERSECT)
    total = d1.radius_sq + d2.radius_sq
    if d1.exact and d2.exact:
        contact = total == 1
        apart = total < 1
    else:
        contact = abs(float(total) - 1.0) <= ALGEBRA_TOL
        apart = float(total) < 1.0 and not contact
    if apart:
        return DiskIntersection(IntersectionKind.NO_INTERSECT)
    if not contact:
        return DiskIntersection(IntersectionKind.REGION)
    z_disk, w_disk = (d1, d2) if d1.axis is Axis.Z else (d2, d1)
    beta = z_disk.center.radians(q)
    gamma = w_disk.center.radians(q)
    modulus_z, modulus_w = w_disk.radius, z_disk.radius
    point = np.array(
        [
            modulus_z * math.cos(beta),
            modulus_z * math.sin(beta),
            modulus_w * math.cos(gamma),
            modulus_w * math.sin(gamma),
        ]
    )
    return DiskIntersection(IntersectionKind.POINT, point)


# ---------------------------------------------------------------------------
# Surfaces
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class ZWedge:
    interval: Interval
    members: tuple

    def to_dict(self) -> dict:
        return {**self.interval.to_dict(), 'members': list(self.members)}


@dataclass(frozen=True)
class SurfaceSpec:
    """
    The surface bounding the w-wedges over components start .. start + 2p - 1 and
    the z-wedges joining them; components are numbered along the w-axis
    """

    params: DpqParams
    start: int
    w_wedges: tuple
    z_wedges: tuple
    w_disks: tuple
    z_disks: tuple
    inner: tuple
    outer: tuple

    @property
    def genus(self) -> int:
        return 2 * self.params.p - 1

    @property
    def euler_characteristic(self) -> int:
        return 4 - 4 * self.params.p

    def side(self, w_position: int) -> str:
        return "M'" if w_position % self.params.q in self.inner else "M''"

    def to_dict(self) -> dict:
        return {
            'params': self.params.to_dict(),
            'start': self.start,
            'genus': self.genus,
            'euler_characteristic': self.euler_characteristic,
            'w_wedges': [wedge.to_dict() for wedge in self.w_wedges],
            'z_wedges': [wedge.to_dict() for wedge in self.z_wedges],
            'w_disks': [disk.to_dict() for disk in self.w_disks],
            'z_disks': [disk.to_dict() for disk in self.z_disks],
            'inner': list(self.inner),
            'outer': list(self.outer),
        }


def _z_members(interval: Interval, params: DpqParams) -> tuple:
    """w-positions of the components meeting the z-axis inside interval"""
    return tuple((params.p * units) % params.q for units in interval.lattice())


def surface_spec(params: DpqParams, start: int = 0) -> SurfaceSpec:
    """
    Wedges and disks of the surface around components start .. start + 2p - 1

    Args:
        params (DpqParams): Normalized parameters
        start (int): w-position of the first enclosed component

    Raises:
        RangeError: When p/q >= 1/2

    Returns:
        surface (SurfaceSpec): Two w-wedges, 2p z-wedges, 4 w-disks and 4p z-disks
    """
    p, q = params.p, params.q
    if 2 * p >= q:
        raise RangeError(f'Surface needs p/q < 1/2, got {params.fraction}')
    modulus = 2 * q
    start = start % q
    last = start + 2 * p - 1
    w_wedges = tuple(
        Interval(AngleMark.before(start + shift, modulus), AngleMark.after(last + shift, modulus), modulus)
        for shift in (0, q)
    )
    z_wedges = []
    p_inverse = params.p_inverse
    for m in range(start, start + p):
        level = (m * p_inverse) % q
        for shift in (0, q):
            interval = Interval(
                AngleMark.before(level + shift, modulus),
                AngleMark.after(level + 1 + shift, modulus),
                modulus,
            )
            z_wedges.append(ZWedge(interval, _z_members(interval, params)))
    z_wedges.sort(key=lambda wedge: wedge.interval.start.ticks)
    w_disks = tuple(
        DiskSpec(Axis.W, mark) for wedge in w_wedges for mark in (wedge.start, wedge.stop)
    )
    z_disks = tuple(
        DiskSpec(Axis.Z, mark)
        for wedge in z_wedges
        for mark in (wedge.interval.start, wedge.interval.stop)
    )
    inner = tuple(sorted((start + k) % q for k in range(2 * p)))
    return SurfaceSpec(
        params=params,
        start=start,
        w_wedges=w_wedges,
        z_wedges=tuple(z_wedges),
        w_disks=w_disks,
        z_disks=z_disks,
        inner=inner,
        outer=tuple(k for k in range(q) if k not in inner),
    )


# ---------------------------------------------------------------------------
# Census
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class WedgeCensus:
    """Counts behind the incompressibility premises; holds is True when all pass"""

    params: DpqParams
    start: int
    w_complement_points: tuple
    z_wedge_members: tuple
    z_complement_points: tuple
    w_images: tuple
    z_images: tuple

    @property
    def holds(self) -> bool:
        p = self.params.p
        return (
            all(count >= 2 * p for count in self.w_complement_points)
            and all(count == 2 for count in self.z_wedge_members)
            and all(count >= 2 for count in self.z_complement_points)
            and all(count == 1 for count in self.w_images + self.z_images)
        )

    def to_dict(self) -> dict:
        return {
            'holds': self.holds,
            'w_complement_points': list(self.w_complement_points),
            'z_wedge_members': list(self.z_wedge_members),
            'z_complement_points': list(self.z_complement_points),
            'phi_images_per_w_complement': list(self.w_images),
            'phi_images_per_z_complement': list(self.z_images),
        }


def _require_quarter(params: DpqParams) -> None:
    if 4 * params.p >= params.q:
        raise RangeError(f'Needs p/q < 1/4, got {params.fraction}')


def wedge_census(params: DpqParams, start: int = 0) -> WedgeCensus:
    """
    Check the wedge premises of incompressibility in exact angle units

    phi moves the w-axis by 2p units and the z-axis by 2 units, so the image of
    each wedge of M' is compared against the complementary wedges of M''.

    Raises:
        RangeError: When p/q >= 1/4
        PremiseFailure: Naming the first count that does not hold

    Returns:
        census (WedgeCensus): The counts that were checked
    """
    _require_quarter(params)
    p, q = params.p, params.q
    modulus = 2 * q
    surface = surface_spec(params, start)
    w_gaps = _complements(list(surface.w_wedges), modulus)
    z_gaps = _complements([wedge.interval for wedge in surface.z_wedges], modulus)
    phi_w = [wedge.shifted(2 * p) for wedge in surface.w_wedges]
    phi_z = [wedge.interval.shifted(2) for wedge in surface.z_wedges]
    census = WedgeCensus(
        params=params,
        start=surface.start,
        w_complement_points=tuple(len(gap.lattice()) for gap in w_gaps),
        z_wedge_members=tuple(len(wedge.members) for wedge in surface.z_wedges),
        z_complement_points=tuple(len(gap.lattice()) for gap in z_gaps),
        w_images=tuple(sum(1 for image in phi_w if image.inside(gap)) for gap in w_gaps),
        z_images=tuple(sum(1 for image in phi_z if image.inside(gap)) for gap in z_gaps),
    )
    checks = (
        ('complementary w-wedge points >= 2p', census.w_complement_points, lambda c: c >= 2 * p),
        ('z-wedge members == 2', census.z_wedge_members, lambda c: c == 2),
        ('complementary z-wedge points >= 2', census.z_complement_points, lambda c: c >= 2),
        ('phi images per complementary w-wedge == 1', census.w_images, lambda c: c == 1),
        ('phi images per complementary z-wedge == 1', census.z_images, lambda c: c == 1),
    )
    for label, counts, passes in checks:
        if not all(passes(count) for count in counts):
            raise PremiseFailure(f'{label} fails for {params.fraction}: {list(counts)}')
    logger.debug('wedge census of %s holds', params.fraction)
    return census


# ---------------------------------------------------------------------------
# Coannular slopes
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class CoannularEntry:
    """Slope +1 twists right-handedly; label is a w-axis point in units of pi/q"""

    label: int
    component: int
    slope: int


@dataclass(frozen=True)
class CoannularReport:
    entries: tuple

    @property
    def count(self) -> int:
        return len(self.entries)

    def pairs(self) -> list:
        return [(entry.label, entry.slope) for entry in self.entries]

    def to_dict(self) -> dict:
        return {
            'count': self.count,
            'entries': [
                {'label': e.label, 'component': e.component, 'slope': e.slope} for e in self.entries
            ],
        }


def coannular_slopes(params: DpqParams, start: int = 0) -> CoannularReport:
    """
    The four boundary slopes coannular to the surface

    The two enclosed components at the ends of the w-wedge and their two outside
    neighbours; components are given in the orbit numbering of build().

    Raises:
        RangeError: When p/q >= 1/4
    """
    _require_quarter(params)
    p, q = params.p, params.q
    modulus = 2 * q
    schedule: AxisSchedule = axis_schedule(params)
    labels = ((start, -1), (start + 2 * p - 1, 1), (start + 2 * p, -1), (start - 1, 1))
    entries = tuple(
        CoannularEntry(label % modulus, schedule.w_order[label % q], slope) for label, slope in labels
    )
    return CoannularReport(entries)


# ---------------------------------------------------------------------------
# Checkerboard
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class Checkerboard:
    """Trace of the surface on the torus |z| = |w| where the two kinds of disks meet"""

    longitudes: tuple
    meridians: tuple

    @property
    def vertices(self) -> int:
        return len(self.longitudes) * len(self.meridians)

    @property
    def faces(self) -> int:
        return self.vertices

    def to_dict(self) -> dict:
        return {
            'longitudes': [str(mark) for mark in self.longitudes],
            'meridians': [str(mark) for mark in self.meridians],
            'vertices': self.vertices,
            'faces': self.faces,
        }


def checkerboard(surface: SurfaceSpec) -> Checkerboard:
    """Longitudes bound the w-disks, meridians the z-disks; each pair meets once"""
    return Checkerboard(
        longitudes=tuple(disk.center for disk in surface.w_disks),
        meridians=tuple(disk.center for disk in surface.z_disks),
    )


def surface_document(params: DpqParams, start: int = 0) -> dict:
    """Surface, checkerboard and, when p/q < 1/4, census and coannular slopes"""
    surface = surface_spec(params, start)
    document = {'schema': SCHEMA, 'surface': surface.to_dict()}
    document['checkerboard'] = checkerboard(surface).to_dict()
    if 4 * params.p < params.q:
        document['census'] = wedge_census(params, start).to_dict()
        document['coannular'] = coannular_slopes(params, start).to_dict()
    else:
        document['census'] = None
        document['coannular'] = None
    return document
