#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Created Date: 10/19/2026
# version ='0.1.0'
# ---------------------------------------------------------------------------
""" Quaternions, pure unit quaternions and the fibers of geodesics in S^3 """
# ---------------------------------------------------------------------------

# ---------------------------------------------------------------------------
# Imports
# ---------------------------------------------------------------------------
import math
from dataclasses import dataclass

import numpy as np

from gclink.constants import ALGEBRA_TOL, GEOMETRY_TOL
from gclink.enums import Side
from gclink.errors import NotOrthonormal, NotPureUnit


# ---------------------------------------------------------------------------
# Utilities
# ---------------------------------------------------------------------------
def hamilton(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """
    Hamilton product on arrays of shape (..., 4), broadcasting like numpy

    Args:
        a (np.ndarray): Left factors, coefficients of (1, i, j, k) last
        b (np.ndarray): Right factors

    Returns:
        product (np.ndarray): a * b
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    a0, a1, a2, a3 = np.moveaxis(a, -1, 0)
    b0, b1, b2, b3 = np.moveaxis(b, -1, 0)
    return np.stack(
        [
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        ],
        axis=-1,
    )


def conjugate(a: np.ndarray) -> np.ndarray:
    return np.asarray(a, dtype=float) * np.array([1.0, -1.0, -1.0, -1.0])


# ---------------------------------------------------------------------------
# Data Classes
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class Quaternion:
    """a + b i + c j + d k"""

    a: float
    b: float = 0.0
    c: float = 0.0
    d: float = 0.0

    @classmethod
    def from_array(cls, values) -> 'Quaternion':
        a, b, c, d = (float(v) for v in values)
        return cls(a, b, c, d)

    @classmethod
    def from_complex_pair(cls, z: complex, w: complex) -> 'Quaternion':
        return cls(z.real, z.imag, w.real, w.imag)

    def as_array(self) -> np.ndarray:
        return np.array([self.a, self.b, self.c, self.d])

    def to_complex_pair(self) -> tuple[complex, complex]:
        return complex(self.a, self.b), complex(self.c, self.d)

    @property
    def real(self) -> float:
        return self.a

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.b, self.c, self.d])

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion.from_array(hamilton(self.as_array(), other.as_array()))
        if isinstance(other, (int, float)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self.scale(other)
        return NotImplemented

    def __add__(self, other: 'Quaternion') -> 'Quaternion':
        return Quaternion.from_array(self.as_array() + other.as_array())

    def __sub__(self, other: 'Quaternion') -> 'Quaternion':
        return Quaternion.from_array(self.as_array() - other.as_array())

    def __neg__(self) -> 'Quaternion':
        return Quaternion(-self.a, -self.b, -self.c, -self.d)

    def scale(self, factor: float) -> 'Quaternion':
        return Quaternion.from_array(self.as_array() * factor)

    def conj(self) -> 'Quaternion':
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    def norm(self) -> float:
        return float(np.linalg.norm(self.as_array()))

    def normalized(self) -> 'Quaternion':
        return self.scale(1.0 / self.norm())

    def inverse(self) -> 'Quaternion':
        return self.conj().scale(1.0 / self.norm() ** 2)

    def dot(self, other: 'Quaternion') -> float:
        return float(np.dot(self.as_array(), other.as_array()))

    def is_unit(self, tol: float = ALGEBRA_TOL) -> bool:
        return abs(self.norm() - 1.0) <= tol

    def isclose(self, other: 'Quaternion', tol: float = GEOMETRY_TOL) -> bool:
        return float(np.linalg.norm(self.as_array() - other.as_array())) <= tol


@dataclass(frozen=True)
class PureUnit(Quaternion):
    """A point of the 2-sphere of pure unit quaternions"""

    def __post_init__(self):
        if abs(self.a) > ALGEBRA_TOL or abs(self.norm() - 1.0) > ALGEBRA_TOL:
            raise NotPureUnit(f'Not a pure unit quaternion: {self.as_array().tolist()}')

    @classmethod
    def from_vector(cls, vector) -> 'PureUnit':
        """Normalize an imaginary 3-vector into a pure unit quaternion"""
        v = np.asarray(vector, dtype=float)
        length = float(np.linalg.norm(v))
        if length == 0.0:
            raise NotPureUnit('Zero vector has no direction')
        v = v / length
        return cls(0.0, float(v[0]), float(v[1]), float(v[2]))

    @classmethod
    def coerce(cls, q: Quaternion) -> 'PureUnit':
        if isinstance(q, PureUnit):
            return q
        return cls(q.a, q.b, q.c, q.d)

    def __neg__(self) -> 'PureUnit':
        return PureUnit(0.0, -self.b, -self.c, -self.d)


I = PureUnit(0.0, 1.0, 0.0, 0.0)
J = PureUnit(0.0, 0.0, 1.0, 0.0)
K = PureUnit(0.0, 0.0, 0.0, 1.0)
ONE = Quaternion(1.0)


@dataclass(frozen=True)
class FiberAxes:
    """Axes p_L, q_R with (cos t + p_L sin t) x = x (cos t + q_R sin t)"""

    left_axis: PureUnit
    right_axis: PureUnit


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------
def mul(q1: Quaternion, q2: Quaternion) -> Quaternion:
    return q1 * q2


def fiber_axes(x: Quaternion, y: Quaternion) -> FiberAxes:
    """
    Left and right axes of the great circle through x and y, oriented x -> y

    Args:
        x (Quaternion): Unit quaternion at t = 0
        y (Quaternion): Unit quaternion at t = pi/2, orthogonal to x

    Raises:
        NotOrthonormal: When x, y are not orthonormal in R^4

    Returns:
        axes (FiberAxes): p_L = y conj(x) and q_R = conj(x) y
    """
    if not (x.is_unit() and y.is_unit()) or abs(x.dot(y)) > 1e-10:
        raise NotOrthonormal(
            f'Cannot take fiber axes of non-orthonormal pair: <x,y>={x.dot(y):.3e}'
        )
    left = y * x.conj()
    right = x.conj() * y
    return FiberAxes(
        left_axis=PureUnit.from_vector(left.vector),
        right_axis=PureUnit.from_vector(right.vector),
    )


def conj_action(x: Quaternion, p: PureUnit) -> PureUnit:
    """x p x^-1"""
    rotated = x * p * x.inverse()
    return PureUnit.from_vector(rotated.vector)


def solve_axis_transport(p: PureUnit, q: PureUnit) -> Quaternion:
    """
    Unit x with x q x^-1 = p, so the left p-fiber and right q-fiber through x agree

    The half-angle rotation carrying q onto p is used; for p = -q the rotation
    is by pi about the basis direction least aligned with q, made orthogonal.

    Args:
        p (PureUnit): Target axis
        q (PureUnit): Source axis

    Returns:
        x (Quaternion): Unit quaternion solving the transport
    """
    pv, qv = p.vector, q.vector
    w = 1.0 + float(np.dot(qv, pv))
    if w > ALGEBRA_TOL:
        return Quaternion.from_array(np.concatenate([[w], np.cross(qv, pv)])).normalized()
    probe = np.zeros(3)
    probe[int(np.argmin(np.abs(qv)))] = 1.0
    axis = probe - np.dot(probe, qv) * qv
    axis = axis / np.linalg.norm(axis)
    return Quaternion(0.0, float(axis[0]), float(axis[1]), float(axis[2]))


def fiber_plane(axis: PureUnit, side: Side, x: Quaternion) -> tuple[np.ndarray, np.ndarray]:
    """Orthonormal basis (x, axis x) or (x, x axis) of the axis-fiber through x"""
    side = Side.parse(side)
    second = axis * x if side is Side.LEFT else x * axis
    return x.as_array(), second.as_array()


def fiber_distance(axis: PureUnit, side: Side, x1: Quaternion, x2: Quaternion) -> float:
    """
    Spherical distance from x1 to the left/right axis-fiber through x2

    Args:
        axis (PureUnit): Fiber axis
        side (Side): LEFT for {(cos t + axis sin t) x}, RIGHT for {x (cos t + axis sin t)}
        x1 (Quaternion): Unit quaternion
        x2 (Quaternion): Unit quaternion on the fiber

    Returns:
        angle (float): Value in [0, pi/2]
    """
    u, v = fiber_plane(axis, side, x2)
    point = x1.as_array()
    shadow = math.hypot(float(np.dot(point, u)), float(np.dot(point, v)))
    residual = float(np.linalg.norm(point - np.dot(point, u) * u - np.dot(point, v) * v))
    return math.atan2(residual, shadow)
