#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Created Date: 10/19/2026
# version ='0.1.0'
# ---------------------------------------------------------------------------
""" Great circles as oriented 2-planes in R^4 and links built from them """
# ---------------------------------------------------------------------------

# ---------------------------------------------------------------------------
# Imports
# ---------------------------------------------------------------------------
import logging
import math
from dataclasses import dataclass, field
from itertools import combinations, product

import numpy as np

from gclink.constants import (
    ALGEBRA_TOL,
    GAUSS_SAMPLES,
    GAUSS_TOL,
    GEOMETRY_TOL,
    SCHEMA,
    TORUS_FLOW_MAX_STEPS,
    TORUS_FLOW_RATE,
    TORUS_MARGIN,
    TRANSVERSE_TOL,
)
from gclink.errors import BadLinking, InvalidDocument, NotOrthonormal, NotTransverse
from gclink.quat_s3 import Quaternion
from gclink.schemas import LinkDocument

logger = logging.getLogger(__name__)

# ---------------------------------------------------------------------------
# Constants
# ---------------------------------------------------------------------------
MIRROR = np.diag([1.0, 1.0, 1.0, -1.0])
CLIFFORD_SWAP = [2, 3, 0, 1]
GAUSS_CHUNK = 128


# ---------------------------------------------------------------------------
# Utilities
# ---------------------------------------------------------------------------
def orthonormalize(u, v) -> tuple[np.ndarray, np.ndarray]:
    """
    Gram-Schmidt keeping the orientation u -> v

    The projection is applied twice, so nearly parallel inputs still come out
    orthogonal to working precision.
    """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    nu = float(np.linalg.norm(u))
    if nu < ALGEBRA_TOL:
        raise NotOrthonormal('First basis vector vanishes')
    u = u / nu
    scale = float(np.linalg.norm(v))
    v = v - np.dot(v, u) * u
    nv = float(np.linalg.norm(v))
    if nv < ALGEBRA_TOL * max(scale, 1.0):
        raise NotOrthonormal('Basis vectors are parallel')
    v = v / nv
    v = v - np.dot(v, u) * u
    return u, v / float(np.linalg.norm(v))


def completing_rotation(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Matrix in SO(4) sending u to e3 and v to e4"""
    q, _ = np.linalg.qr(np.column_stack([u, v, np.eye(4)]))
    a1, a2 = q[:, 2].copy(), q[:, 3].copy()
    frame = np.column_stack([a1, a2, u, v])
    if np.linalg.det(frame) < 0:
        frame[:, 0] = -frame[:, 0]
    return frame.T


# ---------------------------------------------------------------------------
# Data Classes
# ---------------------------------------------------------------------------
@dataclass(frozen=True, eq=False)
class GreatCircle:
    """Oriented great circle {cos t u + sin t v}"""

    u: np.ndarray
    v: np.ndarray

    def __post_init__(self):
        u = np.asarray(self.u, dtype=float).reshape(4)
        v = np.asarray(self.v, dtype=float).reshape(4)
        if (
            abs(np.linalg.norm(u) - 1.0) > ALGEBRA_TOL
            or abs(np.linalg.norm(v) - 1.0) > ALGEBRA_TOL
            or abs(np.dot(u, v)) > ALGEBRA_TOL
        ):
            raise NotOrthonormal(f'Basis is not orthonormal: {u.tolist()}, {v.tolist()}')
        object.__setattr__(self, 'u', u)
        object.__setattr__(self, 'v', v)

    @classmethod
    def from_vectors(cls, u, v) -> 'GreatCircle':
        return cls(*orthonormalize(u, v))

    @classmethod
    def from_quaternions(cls, x: Quaternion, y: Quaternion) -> 'GreatCircle':
        return cls.from_vectors(x.as_array(), y.as_array())

    @property
    def matrix(self) -> np.ndarray:
        """4x2 matrix with the basis as columns"""
        return np.column_stack([self.u, self.v])

    def point(self, t: float) -> np.ndarray:
        return math.cos(t) * self.u + math.sin(t) * self.v

    def sample(self, count: int) -> np.ndarray:
        t = 2.0 * math.pi * np.arange(count) / count
        return np.outer(np.cos(t), self.u) + np.outer(np.sin(t), self.v)

    def reversed(self) -> 'GreatCircle':
        return GreatCircle(self.u, -self.v)

    def transformed(self, matrix: np.ndarray) -> 'GreatCircle':
        return GreatCircle.from_vectors(matrix @ self.u, matrix @ self.v)

    def contains(self, x, tol: float = GEOMETRY_TOL) -> bool:
        x = np.asarray(x, dtype=float)
        shadow = np.dot(x, self.u) * self.u + np.dot(x, self.v) * self.v
        return float(np.linalg.norm(x - shadow)) <= tol

    def same_plane(self, other: 'GreatCircle', tol: float = GEOMETRY_TOL) -> bool:
        return self.contains(other.u, tol) and self.contains(other.v, tol)

    def to_dict(self) -> dict:
        return {'basis': [self.u.tolist(), self.v.tolist()]}


@dataclass(frozen=True, eq=False)
class GCLink:
    """Ordered great circles, pairwise transverse"""

    components: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, 'components', tuple(self.components))
        for comp in self.components:
            if not isinstance(comp, GreatCircle):
                raise TypeError(f'Invalid component: {comp!r}')
        self.audit()

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, index: int) -> GreatCircle:
        return self.components[index]

    def audit(self) -> None:
        """
        Check pairwise transversality (linking is then +-1 by construction)

        Raises:
            NotTransverse: Naming the first offending pair
        """
        for i, j in combinations(range(len(self.components)), 2):
            if not transverse(self.components[i], self.components[j]):
                raise NotTransverse(f'Components {i} and {j} are not transverse')

    def linking_matrix(self) -> np.ndarray:
        n = len(self.components)
        matrix = np.zeros((n, n), dtype=int)
        for i, j in combinations(range(n), 2):
            matrix[i, j] = matrix[j, i] = linking_number(self.components[i], self.components[j])
        return matrix

    def transformed(self, matrix: np.ndarray) -> 'GCLink':
        return GCLink(tuple(comp.transformed(matrix) for comp in self.components))

    def mirror(self) -> 'GCLink':
        return self.transformed(MIRROR)

    def reordered(self, order) -> 'GCLink':
        return GCLink(tuple(self.components[i] for i in order))

    def to_document(self) -> dict:
        return {'schema': SCHEMA, 'components': [comp.to_dict() for comp in self.components]}


@dataclass(frozen=True, eq=False)
class RoundCircle:
    """Intersection of S^3 with the affine plane base + span(u, v)"""

    base: np.ndarray
    u: np.ndarray
    v: np.ndarray

    def __post_init__(self):
        u, v = orthonormalize(self.u, self.v)
        base = np.asarray(self.base, dtype=float)
        base = base - np.dot(base, u) * u - np.dot(base, v) * v
        if float(np.linalg.norm(base)) >= 1.0:
            raise BadLinking(f'Plane misses the open unit ball: |base|={np.linalg.norm(base)}')
        object.__setattr__(self, 'u', u)
        object.__setattr__(self, 'v', v)
        object.__setattr__(self, 'base', base)

    @classmethod
    def from_great_circle(cls, circle: GreatCircle, base=None) -> 'RoundCircle':
        return cls(np.zeros(4) if base is None else base, circle.u, circle.v)

    @property
    def radius(self) -> float:
        return math.sqrt(1.0 - float(np.dot(self.base, self.base)))

    def sample(self, count: int) -> np.ndarray:
        t = 2.0 * math.pi * np.arange(count) / count
        ring = np.outer(np.cos(t), self.u) + np.outer(np.sin(t), self.v)
        return self.base + self.radius * ring


# ---------------------------------------------------------------------------
# Linking
# ---------------------------------------------------------------------------
def _stacked_det(c1: GreatCircle, c2: GreatCircle) -> float:
    return float(np.linalg.det(np.column_stack([c1.u, c1.v, c2.u, c2.v])))


def transverse(c1: GreatCircle, c2: GreatCircle) -> bool:
    return abs(_stacked_det(c1, c2)) > TRANSVERSE_TOL


def linking_number(c1: GreatCircle, c2: GreatCircle) -> int:
    """
    Linking number of two transverse great circles

    Args:
        c1 (GreatCircle): First component
        c2 (GreatCircle): Second component

    Raises:
        NotTransverse: When the planes meet outside the origin

    Returns:
        linking (int): sign det[u1 v1 u2 v2]
    """
    det = _stacked_det(c1, c2)
    if abs(det) <= TRANSVERSE_TOL:
        raise NotTransverse(f'Cannot link circles with det={det:.3e}')
    return 1 if det > 0 else -1


def triple_sign(c1: GreatCircle, c2: GreatCircle, c3: GreatCircle):
    """
    Handedness of three great circles, or None when the third is not a graph

    In coordinates where c1, c2 are span(e1, e2), span(e3, e4), c3 is the graph
    {(y, A y)}; the sign combines det A with the orientations of the frames.

    Returns:
        sign (int): +1 for a positive Hopf triple, -1 for a negative one, None if degenerate
    """
    basis = np.column_stack([c1.u, c1.v, c2.u, c2.v])
    det_b = float(np.linalg.det(basis))
    if abs(det_b) <= TRANSVERSE_TOL:
        return None
    coords = np.linalg.solve(basis, c3.matrix)
    det_p = float(np.linalg.det(coords[:2]))
    det_q = float(np.linalg.det(coords[2:]))
    if min(abs(det_p), abs(det_q)) <= TRANSVERSE_TOL:
        return None
    return 1 if det_b * det_p * det_q > 0 else -1


def _pole_candidates() -> np.ndarray:
    axes = np.vstack([np.eye(4), -np.eye(4)])
    corners = np.array(list(product([-0.5, 0.5], repeat=4)))
    return np.vstack([axes, corners])


def stereographic_frame(curves) -> tuple[np.ndarray, np.ndarray]:
    """
    Pick a projection pole far from every curve, with a positive frame of its complement

    Args:
        curves (list): Arrays of shape (n, 4) of points on S^3

    Returns:
        frame (tuple): (pole, F) with det[F pole] > 0, F of shape (4, 3)
    """
    points = np.vstack(curves)
    candidates = _pole_candidates()
    closeness = (points @ candidates.T).max(axis=0)
    pole = candidates[int(np.argmin(closeness))]
    q, _ = np.linalg.qr(np.column_stack([pole, np.eye(4)]))
    frame = q[:, 1:4].copy()
    if np.linalg.det(np.column_stack([frame, pole])) < 0:
        frame[:, 0] = -frame[:, 0]
    return pole, frame


def stereographic(points: np.ndarray, pole: np.ndarray, frame: np.ndarray) -> np.ndarray:
    """Project points of S^3 from pole into R^3 using the frame coordinates"""
    return (points @ frame) / (1.0 - points @ pole)[:, None]


def polygon_linking(curve_a: np.ndarray, curve_b: np.ndarray) -> float:
    """
    Gauss linking integral of two closed polygons in R^3

    Each pair of segments contributes the signed solid angle of the quadrilateral
    swept by the difference vectors, split into two triangles.

    Args:
        curve_a (np.ndarray): Vertices (n, 3), closed implicitly
        curve_b (np.ndarray): Vertices (m, 3), closed implicitly

    Returns:
        linking (float): Close to an integer for disjoint polygons
    """
    k0 = curve_a
    k1 = np.roll(curve_a, -1, axis=0)
    l0 = curve_b[None, :, :]
    l1 = np.roll(curve_b, -1, axis=0)[None, :, :]
    total = 0.0
    for start in range(0, len(curve_a), GAUSS_CHUNK):
        ka = k0[start:start + GAUSS_CHUNK, None, :]
        kb = k1[start:start + GAUSS_CHUNK, None, :]
        a = l0 - ka
        b = l0 - kb
        c = l1 - kb
        d = l1 - ka
        an = np.linalg.norm(a, axis=-1)
        bn = np.linalg.norm(b, axis=-1)
        cn = np.linalg.norm(c, axis=-1)
        dn = np.linalg.norm(d, axis=-1)
        ab = np.einsum('...i,...i', a, b)
        bc = np.einsum('...i,...i', b, c)
        ca = np.einsum('...i,...i', c, a)
        ad = np.einsum('...i,...i', a, d)
        dc = np.einsum('...i,...i', d, c)
        triple = np.einsum('...i,...i', a, np.cross(b, c))
        first = an * bn * cn + ab * cn + bc * an + ca * bn
        second = an * dn * cn + ad * cn + dc * an + ca * dn
        total += float(np.sum(np.arctan2(triple, first) + np.arctan2(triple, second)))
    return total / (2.0 * math.pi)


def gauss_linking(curve_a: np.ndarray, curve_b: np.ndarray) -> float:
    """Gauss linking integral of two closed curves sampled on S^3"""
    pole, frame = stereographic_frame([curve_a, curve_b])
    return polygon_linking(
        stereographic(curve_a, pole, frame), stereographic(curve_b, pole, frame)
    )


def gauss_linking_number(c1, c2, samples: int = GAUSS_SAMPLES) -> int:
    """
    Integer linking number from the Gauss integral, for great or round circles

    Raises:
        BadLinking: When the integral is not within GAUSS_TOL of an integer
    """
    value = gauss_linking(c1.sample(samples), c2.sample(samples))
    nearest = round(value)
    if abs(value - nearest) > GAUSS_TOL:
        raise BadLinking(f'Gauss integral {value:.4f} is not near an integer')
    return int(nearest)


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------
def _min_distance(points_a: np.ndarray, points_b: np.ndarray) -> float:
    best = math.inf
    for start in range(0, len(points_a), GAUSS_CHUNK):
        block = points_a[start:start + GAUSS_CHUNK, None, :] - points_b[None, :, :]
        best = min(best, float(np.linalg.norm(block, axis=-1).min()))
    return best


def straighten(circles, samples: int = GAUSS_SAMPLES) -> GCLink:
    """
    Translate the affine planes of a round-circle link to the origin

    Args:
        circles (list): RoundCircle components, pairwise disjoint and linking once
        samples (int): Quadrature points per circle for the Gauss oracle

    Raises:
        BadLinking: When a pair intersects, links 0 times, or loses its linking sign

    Returns:
        link (GCLink): The great circle link spanned by the directions
    """
    sampled = [circle.sample(samples) for circle in circles]
    expected = {}
    for i, j in combinations(range(len(circles)), 2):
        spacing = 2.0 * math.pi / samples
        if _min_distance(sampled[i], sampled[j]) < spacing:
            raise BadLinking(f'Circles {i} and {j} intersect')
        value = gauss_linking(sampled[i], sampled[j])
        nearest = round(value)
        if abs(value - nearest) > GAUSS_TOL or abs(nearest) != 1:
            raise BadLinking(f'Circles {i} and {j} have Gauss linking {value:.4f}')
        expected[(i, j)] = int(nearest)
    try:
        link = GCLink(tuple(GreatCircle(circle.u, circle.v) for circle in circles))
    except NotTransverse as err:
        raise BadLinking(f'Straightened planes meet: {err.message}')
    for (i, j), value in expected.items():
        if linking_number(link[i], link[j]) != value:
            raise BadLinking(f'Straightening changed the linking of {i} and {j}')
    return link


def _outer_margin(basis: np.ndarray) -> float:
    """min of w^2 + x^2 over the circle with orthonormal basis rows"""
    block = basis[:, :2].T
    return float(np.linalg.svd(block, compute_uv=False)[-1] ** 2)


def _scaled(bases: list, t: float) -> list:
    scale = np.array([1.0, 1.0, t, t])
    return [np.array(orthonormalize(b[0] * scale, b[1] * scale)) for b in bases]


def torus_sum_flow(link: GCLink, index: int) -> list:
    """
    Push every component but one toward the core span(e1, e2)

    The chosen component is rotated onto span(e3, e4); the others have their
    (y, z) coordinates scaled by t, which descends geometrically from 1 until
    every circle stays in w^2 + x^2 >= 1/sqrt(2).

    Args:
        link (GCLink): Input link
        index (int): Component sent to span(e3, e4)

    Returns:
        snapshots (list): (t, bases) pairs along the flow, bases as 2x4 arrays
    """
    if not 0 <= index < len(link):
        raise IndexError(f'Invalid component index: {index}')
    rotation = completing_rotation(link[index].u, link[index].v)
    bases = [
        np.array([rotation @ comp.u, rotation @ comp.v])
        for k, comp in enumerate(link)
        if k != index
    ]
    t = 1.0
    snapshots = [(t, bases)]
    for _ in range(TORUS_FLOW_MAX_STEPS):
        current = snapshots[-1][1]
        if all(_outer_margin(b) >= TORUS_MARGIN for b in current):
            break
        t *= TORUS_FLOW_RATE
        snapshots.append((t, _scaled(bases, t)))
    else:
        raise NotTransverse('Torus flow did not reach the margin')
    logger.debug('torus flow along component %d stopped at t=%.3e', index, t)
    return snapshots


def torus_sum(link1: GCLink, i: int, link2: GCLink, j: int) -> GCLink:
    """
    Torus sum of two links along component i of the first and j of the second

    Args:
        link1 (GCLink): First link
        i (int): Component of link1 to remove
        link2 (GCLink): Second link
        j (int): Component of link2 to remove

    Returns:
        link (GCLink): len(link1) + len(link2) - 2 components, first link's first
    """
    first = torus_sum_flow(link1, i)[-1][1]
    second = torus_sum_flow(link2, j)[-1][1]
    components = [GreatCircle(b[0], b[1]) for b in first]
    components += [GreatCircle(b[0][CLIFFORD_SWAP], b[1][CLIFFORD_SWAP]) for b in second]
    return GCLink(tuple(components))


# ---------------------------------------------------------------------------
# Documents
# ---------------------------------------------------------------------------
def link_from_document(document: dict) -> GCLink:
    """
    Build a link from a JSON link document

    Raises:
        InvalidDocument: When the document fails validation
    """
    try:
        model = LinkDocument.model_validate(document)
    except ValueError as err:
        raise InvalidDocument(f'Invalid link document: {err}')
    try:
        return GCLink(
            tuple(GreatCircle.from_vectors(*comp.basis) for comp in model.components)
        )
    except NotOrthonormal as err:
        raise InvalidDocument(err.message)
