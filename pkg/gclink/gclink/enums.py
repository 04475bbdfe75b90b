#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Created Date: 10/19/2026
# version ='0.1.0'
# ---------------------------------------------------------------------------
""" Module to store the small closed vocabularies shared across modules """
# ---------------------------------------------------------------------------

# ---------------------------------------------------------------------------
# Imports
# ---------------------------------------------------------------------------
from gclink.meta import BaseEnum


# ---------------------------------------------------------------------------
# Enums
# ---------------------------------------------------------------------------
class Side(BaseEnum):
    """Side a unit quaternion multiplies from when sweeping out a fiber"""

    LEFT = 'left'
    RIGHT = 'right'


class Handedness(BaseEnum):
    """Right-handed bundles identify left fibers, left-handed ones right fibers"""

    RIGHT = 'right'
    LEFT = 'left'

    @property
    def sign(self) -> int:
        return 1 if self is Handedness.RIGHT else -1

    @property
    def fiber_side(self) -> Side:
        return Side.LEFT if self is Handedness.RIGHT else Side.RIGHT


class PairType(BaseEnum):
    PULL_APART = 'pull-apart'
    NESTED = 'nested'
    DISJOINT = 'disjoint'


class Axis(BaseEnum):
    Z = 'z'
    W = 'w'


class Offset(BaseEnum):
    """Symbolic offsets strictly between adjacent lattice angles"""

    BEFORE = -1
    EXACT = 0
    AFTER = 1


class IntersectionKind(BaseEnum):
    NO_INTERSECT = 'no-intersect'
    AXIS = 'axis'
    POINT = 'point'
    REGION = 'region'


class OutputFormat(BaseEnum):
    JSON = 'json'
    GAUSS = 'gauss'
    SVG = 'svg'


class NotCertifiedReason(BaseEnum):
    """Which step of the virtually Haken certificate failed"""

    RANGE = 'range'
    ODD = 'odd'
    DISTANCE = 'distance'
    REDUCIBLE = 'reducible'
