import math
from fractions import Fraction

import numpy as np
import pytest

from gclink.dpq import DpqParams
from gclink.enums import Axis, IntersectionKind, Offset
from gclink.errors import InvalidParams, RangeError
from gclink.wedge_surface import (
    AngleMark,
    DiskSpec,
    Interval,
    checkerboard,
    coannular_slopes,
    disk_intersect,
    surface_document,
    surface_spec,
    wedge_census,
)


def test_marks_sit_between_lattice_angles():
    assert AngleMark.before(3, 10).ticks < AngleMark.exact(3, 10).ticks < AngleMark.after(3, 10).ticks
    assert AngleMark.after(2, 10).ticks < AngleMark.before(3, 10).ticks
    assert str(AngleMark.before(3, 10)) == '3-'
    assert str(AngleMark(4, Offset.AFTER)) == '4+'


def test_interval_wraps_around():
    wedge = Interval(AngleMark.before(9, 10), AngleMark.after(1, 10), 10)
    assert wedge.lattice() == [9, 0, 1]
    assert wedge.contains(0) and not wedge.contains(2)
    assert Interval(AngleMark.before(0, 10), AngleMark.after(0, 10), 10).inside(wedge)
    assert not wedge.inside(Interval(AngleMark.before(0, 10), AngleMark.after(1, 10), 10))


def test_disk_radius_must_be_positive():
    with pytest.raises(InvalidParams):
        DiskSpec(Axis.Z, AngleMark(0), Fraction(0))
    with pytest.raises(InvalidParams):
        DiskSpec.with_radius(Axis.W, AngleMark(0), 1.5)


def test_disks_too_small_to_meet():
    z = DiskSpec.with_radius(Axis.Z, AngleMark(0), 0.6)
    w = DiskSpec.with_radius(Axis.W, AngleMark(0), 0.7)
    assert disk_intersect(z, w).kind is IntersectionKind.NO_INTERSECT


def test_full_disks_of_one_axis_meet_along_the_axis():
    d1 = DiskSpec(Axis.Z, AngleMark(0), Fraction(1))
    d2 = DiskSpec(Axis.Z, AngleMark(3), Fraction(1))
    assert disk_intersect(d1, d2).kind is IntersectionKind.AXIS
    d3 = DiskSpec(Axis.Z, AngleMark(3))
    assert disk_intersect(d1, d3).kind is IntersectionKind.NO_INTERSECT


def test_complementary_radii_meet_in_a_point():
    z = DiskSpec.with_radius(Axis.Z, AngleMark(2), Fraction(3, 5))
    w = DiskSpec.with_radius(Axis.W, AngleMark(1), Fraction(4, 5))
    meeting = disk_intersect(z, w, q=5)
    assert meeting.kind is IntersectionKind.POINT
    assert np.linalg.norm(meeting.point) == pytest.approx(1.0)
    assert disk_intersect(DiskSpec(Axis.Z, AngleMark(0)), DiskSpec(Axis.W, AngleMark(0))).kind is (
        IntersectionKind.POINT
    )


def test_large_disks_overlap():
    z = DiskSpec.with_radius(Axis.Z, AngleMark(0), 0.9)
    w = DiskSpec.with_radius(Axis.W, AngleMark(0), 0.9)
    assert disk_intersect(z, w).kind is IntersectionKind.REGION


def test_surface_of_two_ninths():
    surface = surface_spec(DpqParams.create(2, 9))
    assert surface.genus == 3
    assert surface.euler_characteristic == 2 - 2 * surface.genus
    assert len(surface.w_wedges) == 2 and len(surface.w_disks) == 4
    assert len(surface.z_wedges) == 4 and len(surface.z_disks) == 8
    for wedge in surface.z_wedges:
        assert sorted(wedge.members) in ([0, 2], [1, 3])
    assert surface.inner == (0, 1, 2, 3)
    assert surface.side(2) == "M'" and surface.side(4) == "M''"


def test_surface_needs_p_below_half_q():
    params = DpqParams(p=2, q=3, original_p=2)
    with pytest.raises(RangeError):
        surface_spec(params)


@pytest.mark.parametrize('p, q', [(1, 5), (1, 7), (2, 9)])
def test_wedge_census_holds(p, q):
    census = wedge_census(DpqParams.create(p, q))
    assert census.holds
    assert all(count == 2 for count in census.z_wedge_members)
    assert all(count >= 2 * p for count in census.w_complement_points)


def test_wedge_census_needs_a_quarter():
    with pytest.raises(RangeError):
        wedge_census(DpqParams.create(2, 7))


@pytest.mark.parametrize(
    'p, q, expected',
    [
        (2, 9, [(0, -1), (3, 1), (4, -1), (17, 1)]),
        (1, 5, [(0, -1), (1, 1), (2, -1), (9, 1)]),
    ],
)
def test_coannular_slopes(p, q, expected):
    report = coannular_slopes(DpqParams.create(p, q))
    assert report.count == 4
    assert report.pairs() == expected


def test_coannular_slopes_need_a_quarter():
    with pytest.raises(RangeError):
        coannular_slopes(DpqParams.create(2, 7))


def test_checkerboard_matches_disk_census():
    surface = surface_spec(DpqParams.create(2, 9))
    board = checkerboard(surface)
    assert board.vertices == 4 * 8


def test_surface_document():
    document = surface_document(DpqParams.create(2, 9))
    assert document['surface']['genus'] == 3
    assert document['census']['holds'] is True
    assert document['coannular']['count'] == 4
    wide = surface_document(DpqParams.create(2, 7))
    assert wide['census'] is None and wide['coannular'] is None


def _quarter_params(top):
    found = {}
    for q in range(5, top + 1, 2):
        for p in range(1, q):
            if math.gcd(p, q) == 1:
                params = DpqParams.create(p, q)
                if 4 * params.p < q:
                    found[(params.p, q)] = params
    return list(found.values())


@pytest.mark.parametrize('params', _quarter_params(99), ids=str)
def test_surface_and_census_below_a_quarter(params):
    p, q = params.p, params.q
    surface = surface_spec(params)
    assert surface.genus == 2 * p - 1
    assert len(surface.w_disks) == 4 and len(surface.z_disks) == 4 * p
    assert all(len(wedge.members) == 2 for wedge in surface.z_wedges)
    assert wedge_census(params).holds
    report = coannular_slopes(params)
    assert report.count == 4
    assert report.pairs() == [(0, -1), (2 * p - 1, 1), (2 * p, -1), (2 * q - 1, 1)]


def test_disk_intersections_match_sampling(rng):
    heights = np.linspace(0.0, 1.0, 10001)
    checked = 0
    while checked < 200:
        c_z, c_w = rng.uniform(0.05, 1.0, size=2)
        if abs(c_z**2 + c_w**2 - 1.0) <= 0.01:
            continue
        z_disk = DiskSpec.with_radius(Axis.Z, AngleMark(0), float(c_z))
        w_disk = DiskSpec.with_radius(Axis.W, AngleMark(0), float(c_w))
        # |w| = height on the z-disk, |z| = sqrt(1 - height^2) on the w-disk
        hits = np.count_nonzero((heights <= c_z) & (np.sqrt(1.0 - heights**2) <= c_w))
        expected = IntersectionKind.REGION if hits else IntersectionKind.NO_INTERSECT
        assert disk_intersect(z_disk, w_disk).kind is expected
        checked += 1
