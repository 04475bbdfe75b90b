import math
from itertools import combinations

import numpy as np
import pytest

from gclink.dpq import (
    DpqParams,
    SvgOptions,
    axis_schedule,
    build,
    diagram_document,
    phi,
    render_svg,
    standard_diagram,
)
from gclink.errors import InvalidParams
from gclink.gclink_core import gauss_linking_number, transverse

PARAMS = [(1, 3), (2, 5), (1, 5), (2, 7), (3, 7), (2, 9), (4, 11), (5, 13)]


def _coprime_params(top):
    found = {}
    for q in range(3, top + 1, 2):
        for p in range(1, q):
            if math.gcd(p, q) == 1:
                params = DpqParams.create(p, q)
                found[(params.p, q)] = params
    return list(found.values())


@pytest.mark.parametrize(
    'p, q, normal',
    [(1, 3, 1), (2, 3, 1), (2, 5, 2), (3, 5, 2), (3, 7, 2), (5, 13, 5), (8, 13, 5)],
)
def test_params_normalize(p, q, normal):
    params = DpqParams.create(p, q)
    assert params.p == normal
    assert params.original == f'{p}/{q}'
    assert 2 * params.p < params.q


@pytest.mark.parametrize('p, q', [(1, 4), (2, 1), (0, 5), (3, 9), (-1, 5)])
def test_params_reject(p, q):
    with pytest.raises(InvalidParams):
        DpqParams.create(p, q)


def test_params_parse():
    assert DpqParams.parse('3/7').fraction == '2/7'
    with pytest.raises(InvalidParams):
        DpqParams.parse('three/7')


def test_build_one_third():
    link = build(DpqParams.create(1, 3))
    assert len(link) == 3
    angle = 2 * math.pi / 3
    assert np.allclose(link[1].u, [math.cos(angle), math.sin(angle), 0.0, 0.0])
    assert np.allclose(link[1].v, [0.0, 0.0, math.cos(angle), math.sin(angle)])


@pytest.mark.parametrize('p, q', PARAMS)
def test_build_is_transverse(p, q):
    link = build(DpqParams.create(p, q))
    assert all(transverse(link[i], link[j]) for i, j in combinations(range(len(link)), 2))


def test_phi_permutes_components():
    params = DpqParams.create(2, 5)
    link = build(params)
    moved = phi(params, link)
    for n in range(5):
        assert moved[n].same_plane(link[(n + 1) % 5])


def test_schedule_of_two_fifths():
    schedule = axis_schedule(DpqParams.create(2, 5))
    assert schedule.z_pairs == ((0, 5), (2, 7), (4, 9), (6, 1), (8, 3))
    assert schedule.w_pairs == ((0, 5), (4, 9), (8, 3), (2, 7), (6, 1))
    assert schedule.w_order == (0, 4, 3, 2, 1)


@pytest.mark.parametrize('p, q', PARAMS)
def test_schedule_orders(p, q):
    params = DpqParams.create(p, q)
    schedule = axis_schedule(params)
    assert schedule.w_pairs[0] == (0, q)
    for k in range(q):
        assert schedule.z_position(schedule.z_order[k]) == k
        assert schedule.w_position(schedule.w_order[k]) == k
        # z-neighbours sit p apart along the w-axis
        n, m = schedule.z_order[k], schedule.z_order[(k + 1) % q]
        assert (schedule.w_position(m) - schedule.w_position(n)) % q == params.p


def test_diagram_of_one_third():
    diagram = standard_diagram(DpqParams.create(1, 3))
    assert len(diagram.crossings) == 6
    linking = diagram.linking_matrix()
    off = linking[~np.eye(3, dtype=bool)]
    assert len(set(off.tolist())) == 1 and abs(off[0]) == 1


@pytest.mark.parametrize('p, q', PARAMS)
def test_diagram_agrees_with_planes(p, q):
    params = DpqParams.create(p, q)
    diagram = standard_diagram(params)
    assert len(diagram.crossings) == q * (q - 1)
    assert all(len(code) == 2 * (q - 1) for code in diagram.gauss_codes)
    assert (diagram.linking_matrix() == build(params).linking_matrix()).all()


def test_diagram_chords_follow_the_w_axis():
    params = DpqParams.create(2, 5)
    diagram = standard_diagram(params)
    for arc in diagram.arcs:
        units = arc.start * params.q / math.pi
        assert units == pytest.approx(round(units))
        assert (round(units) - arc.level * params.p) % params.q == 0


def test_gauss_text():
    diagram = standard_diagram(DpqParams.create(1, 3))
    lines = diagram.gauss_text().splitlines()
    assert len(lines) == 3
    tokens = [token for line in lines for token in line.split(',')]
    assert len(tokens) == 12
    assert all(token[0] in 'OU' and token[-1] in '+-' for token in tokens)
    assert sorted(int(token[1:-1]) for token in tokens) == sorted(list(range(1, 7)) * 2)


def test_diagram_document():
    document = diagram_document(standard_diagram(DpqParams.create(2, 5)))
    assert document['params'] == {'p': 2, 'q': 5, 'original': '2/5'}
    assert len(document['crossings']) == 20
    assert [c['component'] for c in document['components']] == [0, 1, 2, 3, 4]


def test_render_svg():
    diagram = standard_diagram(DpqParams.create(2, 5))
    svg = render_svg(diagram)
    assert svg.startswith('<?xml')
    assert 'width="512" height="512"' in svg
    assert svg.count('<g class="component"') == 5
    assert svg.count('<polyline') == 20
    assert render_svg(diagram) == svg


def test_render_svg_options():
    diagram = standard_diagram(DpqParams.create(1, 3))
    svg = render_svg(diagram, SvgOptions(width=300, height=200, show_axes=False))
    assert 'width="300" height="200"' in svg
    assert 'w-axis' not in svg
    assert svg.count('<polyline') == 6


@pytest.mark.parametrize('params', _coprime_params(25), ids=str)
def test_every_small_dihedral_link_is_transverse(params):
    link = build(params)
    assert all(transverse(link[i], link[j]) for i, j in combinations(range(len(link)), 2))


@pytest.mark.parametrize('params', _coprime_params(15), ids=str)
def test_diagram_planes_and_integral_agree(params):
    link = build(params)
    matrix = link.linking_matrix()
    assert (standard_diagram(params).linking_matrix() == matrix).all()
    for i, j in combinations(range(len(link)), 2):
        assert gauss_linking_number(link[i], link[j], samples=200) == matrix[i, j]
