#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Created Date: 10/19/2026
# version ='0.1.0'
# ---------------------------------------------------------------------------
""" Domain errors with stable numeric codes """
# ---------------------------------------------------------------------------

# ---------------------------------------------------------------------------
# Imports
# ---------------------------------------------------------------------------
import typing

from gclink.constants import SCHEMA


# ---------------------------------------------------------------------------
# Errors
# ---------------------------------------------------------------------------
class GCLinkError(Exception):
    code: typing.ClassVar[int] = 6000
    name: typing.ClassVar[str] = 'GCLinkError'
    msg: typing.ClassVar[str] = 'great circle link error'

    def __init__(self, message: typing.Optional[str] = None) -> None:
        self.message = message or self.msg
        super().__init__(self.message)

    def to_json(self) -> dict:
        return {
            'schema': SCHEMA,
            'error': self.name,
            'code': self.code,
            'message': self.message,
        }


class NotOrthonormal(GCLinkError):
    code = 6001
    name = 'NotOrthonormal'
    msg = 'basis vectors are not orthonormal'


class NotPureUnit(GCLinkError):
    code = 6002
    name = 'NotPureUnit'
    msg = 'quaternion is not a pure unit quaternion'


class NotTransverse(GCLinkError):
    code = 6003
    name = 'NotTransverse'
    msg = 'great circles are not transverse'


class BadLinking(GCLinkError):
    code = 6004
    name = 'BadLinking'
    msg = 'circles intersect or do not link once'


class TangentCircles(GCLinkError):
    code = 6005
    name = 'TangentCircles'
    msg = 'projected circles meet tangentially'


class NotAFiber(GCLinkError):
    code = 6006
    name = 'NotAFiber'
    msg = 'component is not a fiber of the bundle'


class DegenerateTriple(GCLinkError):
    code = 6007
    name = 'DegenerateTriple'
    msg = 'third plane is not a graph over the first two'


class UnsupportedSize(GCLinkError):
    code = 6008
    name = 'UnsupportedSize'
    msg = 'classification supports 1 to 5 components'


class IndeterminateConfiguration(GCLinkError):
    code = 6009
    name = 'IndeterminateConfiguration'
    msg = 'no triple gives a decidable configuration'


class InvalidParams(GCLinkError):
    code = 6010
    name = 'InvalidParams'
    msg = 'invalid D(p/q) parameters'


class RangeError(GCLinkError):
    code = 6011
    name = 'RangeError'
    msg = 'fraction outside the supported range'


class PremiseFailure(GCLinkError):
    code = 6012
    name = 'PremiseFailure'
    msg = 'surface premise failed'


class OddNumerator(GCLinkError):
    code = 6013
    name = 'OddNumerator'
    msg = 'slope numerator must be even to lift'


class InvalidFraction(GCLinkError):
    code = 6014
    name = 'InvalidFraction'
    msg = 'invalid fraction'


class InvalidSlope(GCLinkError):
    code = 6015
    name = 'InvalidSlope'
    msg = 'invalid slope'


class InvalidDocument(GCLinkError):
    code = 6016
    name = 'InvalidDocument'
    msg = 'invalid link document'


GCLinkErrors = typing.Union[
    NotOrthonormal,
    NotPureUnit,
    NotTransverse,
    BadLinking,
    TangentCircles,
    NotAFiber,
    DegenerateTriple,
    UnsupportedSize,
    IndeterminateConfiguration,
    InvalidParams,
    RangeError,
    PremiseFailure,
    OddNumerator,
    InvalidFraction,
    InvalidSlope,
    InvalidDocument,
]
GCLINK_ERROR_MAP: dict[int, type[GCLinkError]] = {
    cls.code: cls for cls in typing.get_args(GCLinkErrors)
}


def from_code(code: int) -> typing.Optional[type[GCLinkError]]:
    return GCLINK_ERROR_MAP.get(code)
