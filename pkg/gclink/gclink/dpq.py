#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Created Date: 10/19/2026
# version ='0.1.0'
# ---------------------------------------------------------------------------
""" The dihedral cover links D(p/q): construction, axis schedules and diagrams """
# ---------------------------------------------------------------------------

# ---------------------------------------------------------------------------
# Imports
# ---------------------------------------------------------------------------
import logging
import math
import typing
from dataclasses import dataclass

import numpy as np

from gclink.constants import SCHEMA
from gclink.errors import InvalidParams
from gclink.gclink_core import GCLink, GreatCircle
from gclink.svg import SVG
from gclink.utils import parse_ratio

logger = logging.getLogger(__name__)

# ---------------------------------------------------------------------------
# Constants
# ---------------------------------------------------------------------------
GOLDEN = 0.6180339887498949
OUTER_BASE = 1.15
OUTER_STEP = 0.12
OFFSET_SCALE = 0.4
SAMPLE_STEP = 0.03
GAP = 0.08
DEFAULT_SIZE = 512


# ---------------------------------------------------------------------------
# Parameters
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class DpqParams:
    """
    Coprime p, q with q odd, stored as the representative with 2p <= q

    The representative is the least of p, -p, 1/p and -1/p modulo q; the fraction
    the caller asked for is kept in original_p.
    """

    p: int
    q: int
    original_p: int

    @classmethod
    def create(cls, p: int, q: int) -> 'DpqParams':
        """
        Raises:
            InvalidParams: When q is even or below 3, p is not positive, or gcd(p, q) > 1
        """
        if q < 3 or q % 2 == 0:
            raise InvalidParams(f'q must be odd and at least 3, got {q}')
        if p < 1:
            raise InvalidParams(f'p must be positive, got {p}')
        if math.gcd(p, q) != 1:
            raise InvalidParams(f'p and q must be coprime, got {p}/{q}')
        inverse = pow(p, -1, q)
        representative = min(p % q, -p % q, inverse, -inverse % q)
        return cls(p=representative, q=q, original_p=p)

    @classmethod
    def parse(cls, text: str) -> 'DpqParams':
        try:
            p, q = parse_ratio(text)
        except ValueError as err:
            raise InvalidParams(str(err))
        return cls.create(p, q)

    @property
    def fraction(self) -> str:
        return f'{self.p}/{self.q}'

    @property
    def original(self) -> str:
        return f'{self.original_p}/{self.q}'

    @property
    def p_inverse(self) -> int:
        return pow(self.p, -1, self.q)

    def to_dict(self) -> dict:
        return {'p': self.p, 'q': self.q, 'original': self.original}


def _unit(units: int, q: int) -> np.ndarray:
    """Point of the unit circle at units * pi / q"""
    angle = math.pi * (units % (2 * q)) / q
    return np.array([math.cos(angle), math.sin(angle)])


def _polar(radius: float, angle: float) -> np.ndarray:
    return np.array([radius * math.cos(angle), radius * math.sin(angle)])


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------
def build(params: DpqParams) -> GCLink:
    """
    The orbit of the real great circle under phi

    Component n spans (e^{2 pi i n/q}, 0) and (0, e^{2 pi i p n/q}) in C^2.

    Args:
        params (DpqParams): Normalized parameters

    Returns:
        link (GCLink): q pairwise transverse components
    """
    components = []
    for n in range(params.q):
        z = _unit(2 * n, params.q)
        w = _unit(2 * params.p * n, params.q)
        components.append(
            GreatCircle.from_vectors(np.array([z[0], z[1], 0.0, 0.0]), np.array([0.0, 0.0, w[0], w[1]]))
        )
    return GCLink(tuple(components))


def phi_matrix(params: DpqParams, power: int = 1) -> np.ndarray:
    """(z, w) -> (e^{2 pi i/q} z, e^{2 pi i p/q} w) as a rotation of R^4"""
    matrix = np.zeros((4, 4))
    for block, units in ((0, 2 * power), (2, 2 * params.p * power)):
        c, s = _unit(units, params.q)
        matrix[block : block + 2, block : block + 2] = [[c, -s], [s, c]]
    return matrix


def phi(params: DpqParams, link: GCLink) -> GCLink:
    return link.transformed(phi_matrix(params))


# ---------------------------------------------------------------------------
# Axis schedules
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class AxisSchedule:
    """
    Where each component meets the z- and w-axes, in units of pi/q modulo 2q

    z_order[k] is the component whose z-angles are k and k + q; w_order[m] is the
    component whose w-angles are m and m + q.
    """

    p: int
    q: int
    z_pairs: tuple
    w_pairs: tuple
    z_order: tuple
    w_order: tuple

    def z_position(self, n: int) -> int:
        return self.z_pairs[n][0] % self.q

    def w_position(self, n: int) -> int:
        return self.w_pairs[n][0] % self.q

    def to_dict(self) -> dict:
        return {
            'unit': f'pi/{self.q}',
            'z_pairs': [list(pair) for pair in self.z_pairs],
            'w_pairs': [list(pair) for pair in self.w_pairs],
            'z_order': list(self.z_order),
            'w_order': list(self.w_order),
        }


def axis_schedule(params: DpqParams) -> AxisSchedule:
    q, p = params.q, params.p
    half = (q + 1) // 2
    inverse = pow(2 * p, -1, q)
    return AxisSchedule(
        p=p,
        q=q,
        z_pairs=tuple(((2 * n) % (2 * q), (2 * n + q) % (2 * q)) for n in range(q)),
        w_pairs=tuple(((2 * p * n) % (2 * q), (2 * p * n + q) % (2 * q)) for n in range(q)),
        z_order=tuple((k * half) % q for k in range(q)),
        w_order=tuple((m * inverse) % q for m in range(q)),
    )


# ---------------------------------------------------------------------------
# Diagrams
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class Arc:
    """
    Planar curve of one component

    A chord across the unit circle from angle start + offset to start + pi - offset,
    a radial segment out to radius, a counterclockwise arc back round to
    start + offset and a radial segment in. Positions along the curve are
    arclengths from the start of the chord.
    """

    component: int
    level: int
    start: float
    offset: float
    radius: float

    @property
    def chord_start(self) -> float:
        return self.start + self.offset

    @property
    def chord_end(self) -> float:
        return self.start + math.pi - self.offset

    @property
    def span(self) -> float:
        return math.pi + 2.0 * self.offset

    @property
    def breakpoints(self) -> tuple:
        chord = 2.0 * math.cos(self.offset)
        out = chord + self.radius - 1.0
        return (0.0, chord, out, out + self.radius * self.span)

    @property
    def length(self) -> float:
        return self.breakpoints[-1] + self.radius - 1.0

    @property
    def direction(self) -> np.ndarray:
        return _polar(1.0, self.start + math.pi)

    def point_at(self, s: float) -> np.ndarray:
        _, chord, out, back = self.breakpoints
        s = s % self.length
        if s <= chord:
            head = _polar(1.0, self.chord_start)
            return head + (_polar(1.0, self.chord_end) - head) * (s / chord)
        if s <= out:
            return _polar(1.0 + s - chord, self.chord_end)
        if s <= back:
            return _polar(self.radius, self.chord_end + (s - out) / self.radius)
        return _polar(self.radius - (s - back), self.chord_start)

    def chord_position(self, point: np.ndarray) -> float:
        return float(np.dot(point - _polar(1.0, self.chord_start), self.direction))

    def in_span(self, angle: float) -> bool:
        return (angle - self.chord_end) % (2.0 * math.pi) < self.span

    def arc_position(self, angle: float) -> float:
        _, _, out, _ = self.breakpoints
        return out + self.radius * ((angle - self.chord_end) % (2.0 * math.pi))

    def outward_position(self, radius: float) -> float:
        return self.breakpoints[1] + radius - 1.0

    def inward_position(self, radius: float) -> float:
        return self.breakpoints[3] + self.radius - radius


@dataclass(frozen=True)
class Crossing:
    label: int
    over: int
    under: int
    sign: int
    point: tuple
    inner: bool

    def to_dict(self) -> dict:
        return {
            'label': self.label,
            'over': self.over,
            'under': self.under,
            'sign': self.sign,
            'region': 'inner' if self.inner else 'outer',
            'point': list(self.point),
        }


@dataclass(frozen=True)
class LinkDiagram:
    """Standard projection; stations[n] lists (position, token) along component n"""

    params: DpqParams
    arcs: tuple
    crossings: tuple
    stations: tuple

    @property
    def gauss_codes(self) -> tuple:
        return tuple(tuple(token for _, token in stations) for stations in self.stations)

    def arc_of(self, component: int) -> Arc:
        return next(arc for arc in self.arcs if arc.component == component)

    def linking_matrix(self) -> np.ndarray:
        """Half the signed crossing count between each pair of components"""
        q = self.params.q
        twice = np.zeros((q, q), dtype=int)
        for crossing in self.crossings:
            twice[crossing.over, crossing.under] += crossing.sign
            twice[crossing.under, crossing.over] += crossing.sign
        return twice // 2

    def gauss_text(self) -> str:
        return ''.join(','.join(code) + '\n' for code in self.gauss_codes)


def _crossing_sign(over: np.ndarray, under: np.ndarray) -> int:
    return 1 if over[0] * under[1] - over[1] * under[0] > 0.0 else -1


def _chord_intersection(a: Arc, b: Arc) -> np.ndarray:
    head_a = _polar(1.0, a.chord_start)
    head_b = _polar(1.0, b.chord_start)
    system = np.column_stack([a.direction, -b.direction])
    s, _ = np.linalg.solve(system, head_b - head_a)
    return head_a + s * a.direction


def _arcs(params: DpqParams, schedule: AxisSchedule) -> list:
    q, p = params.q, params.p
    scale = OFFSET_SCALE * math.sin(math.pi / (2 * q))
    arcs = []
    for level in range(q):
        n = schedule.z_order[level]
        antipodal = schedule.z_pairs[n][0] != level
        turn = 0 if antipodal and p % 2 == 0 else 1
        arcs.append(
            Arc(
                component=n,
                level=level,
                start=math.pi * ((level * p + turn * q) % (2 * q)) / q,
                offset=scale * ((GOLDEN * level) % 1.0 - 0.5),
                radius=OUTER_BASE + OUTER_STEP * level,
            )
        )
    return arcs


def standard_diagram(params: DpqParams) -> LinkDiagram:
    """
    Planar diagram with the w-axis as the unit circle and the z-axis at its center

    Chord k joins the w-angles kp pi/q and kp pi/q + pi and passes over every chord
    below it; outside the unit circle the later components pass under the
    earlier ones. Every pair of components crosses twice, with equal signs.

    Args:
        params (DpqParams): Normalized parameters

    Returns:
        diagram (LinkDiagram): q(q - 1) crossings and a Gauss code per component
    """
    schedule = axis_schedule(params)
    arcs = _arcs(params, schedule)
    crossings = []
    stations = {arc.component: [] for arc in arcs}

    def record(over: Arc, under: Arc, sign: int, point, inner: bool, over_at, under_at):
        label = len(crossings) + 1
        crossings.append(
            Crossing(label, over.component, under.component, sign, tuple(point.tolist()), inner)
        )
        mark = '+' if sign > 0 else '-'
        stations[over.component].append((over_at, f'O{label}{mark}'))
        stations[under.component].append((under_at, f'U{label}{mark}'))

    for j, lower in enumerate(arcs):
        for upper in arcs[j + 1 :]:
            point = _chord_intersection(lower, upper)
            sign = _crossing_sign(upper.direction, lower.direction)
            record(
                upper, lower, sign, point, True, upper.chord_position(point), lower.chord_position(point)
            )
            if lower.in_span(upper.chord_end):
                angle = upper.chord_end
                under_dir = _polar(1.0, angle)
                under_at = upper.outward_position(lower.radius)
            else:
                angle = upper.chord_start
                under_dir = -_polar(1.0, angle)
                under_at = upper.inward_position(lower.radius)
            sign = _crossing_sign(_polar(1.0, angle + math.pi / 2), under_dir)
            point = _polar(lower.radius, angle)
            record(lower, upper, sign, point, False, lower.arc_position(angle), under_at)
    logger.debug('standard diagram of D(%s): %d crossings', params.fraction, len(crossings))
    return LinkDiagram(
        params=params,
        arcs=tuple(arcs),
        crossings=tuple(crossings),
        stations=tuple(tuple(sorted(stations[n])) for n in range(params.q)),
    )


def diagram_document(diagram: LinkDiagram) -> dict:
    return {
        'schema': SCHEMA,
        'params': diagram.params.to_dict(),
        'components': [
            {
                'component': arc.component,
                'level': arc.level,
                'start': arc.start,
                'offset': arc.offset,
                'radius': arc.radius,
                'gauss': list(diagram.gauss_codes[arc.component]),
            }
            for arc in sorted(diagram.arcs, key=lambda arc: arc.component)
        ],
        'crossings': [crossing.to_dict() for crossing in diagram.crossings],
        'linking': diagram.linking_matrix().tolist(),
    }


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class SvgOptions:
    width: int = DEFAULT_SIZE
    height: int = DEFAULT_SIZE
    stroke_width: float = 2.0
    gap: float = GAP
    step: float = SAMPLE_STEP
    show_axes: bool = True


def _pieces(arc: Arc, stations: tuple, options: SvgOptions) -> list:
    """Sample the curve of arc, leaving a gap at every crossing it passes under"""
    length = arc.length
    positions = [s for s, _ in stations]
    unders = [s for s, token in stations if token.startswith('U')]
    spacing = min(
        (positions[(i + 1) % len(positions)] - positions[i]) % length for i in range(len(positions))
    )
    half = min(options.gap, 0.35 * spacing) / 2.0
    marks = [b + shift for shift in (0.0, length) for b in arc.breakpoints]
    pieces = []
    for i, under in enumerate(unders):
        start = under + half
        stop = unders[(i + 1) % len(unders)] - half
        if stop <= start:
            stop += length
        count = max(2, math.ceil((stop - start) / options.step) + 1)
        grid = set(np.linspace(start, stop, count).tolist())
        grid.update(mark for mark in marks if start < mark < stop)
        pieces.append([arc.point_at(s) for s in sorted(grid)])
    return pieces


def render_svg(diagram: LinkDiagram, options: typing.Optional[SvgOptions] = None) -> str:
    """
    Deterministic SVG of a diagram, one group of polylines per component

    Args:
        diagram (LinkDiagram): Diagram to draw
        options (SvgOptions): Viewport and stroke settings, 512x512 by default

    Returns:
        svg (str): Document text
    """
    options = options or SvgOptions()
    extent = max(arc.radius for arc in diagram.arcs) + 0.1
    scale = min(options.width, options.height) / (2.0 * extent)
    cx, cy = options.width / 2.0, options.height / 2.0

    def screen(point) -> tuple:
        return cx + scale * point[0], cy - scale * point[1]

    svg = SVG()
    svg.header(options.width, options.height)
    if options.show_axes:
        svg.circle(cx, cy, scale, 'class="w-axis" fill="none" stroke="#bbbbbb"')
        svg.circle(cx, cy, 2.0, 'class="z-axis" fill="#888888"')
    q = diagram.params.q
    for n in range(q):
        arc = diagram.arc_of(n)
        svg.group_start(
            {
                'class': 'component',
                'id': f'component-{n}',
                'fill': 'none',
                'stroke': f'hsl({360 * n // q},65%,40%)',
                'stroke-width': f'{options.stroke_width:g}',
                'title': f'component {n}',
            }
        )
        for piece in _pieces(arc, diagram.stations[n], options):
            svg.polyline([screen(point) for point in piece])
        svg.group_end()
    return svg.get_svg()
