#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Created Date: 10/19/2026
# version ='0.1.0'
# ---------------------------------------------------------------------------
""" Exact arithmetic for two-bridge knots, their slopes and dihedral covers """
# ---------------------------------------------------------------------------

# ---------------------------------------------------------------------------
# Imports
# ---------------------------------------------------------------------------
import logging
import math
import typing
from dataclasses import dataclass, field
from fractions import Fraction

from gclink.constants import SCHEMA
from gclink.dpq import DpqParams
from gclink.enums import NotCertifiedReason
from gclink.errors import InvalidFraction, InvalidSlope, OddNumerator
from gclink.utils import parse_ratio
from gclink.wedge_surface import coannular_slopes, wedge_census

logger = logging.getLogger(__name__)

# ---------------------------------------------------------------------------
# Constants
# ---------------------------------------------------------------------------
DISTANCE_THRESHOLD = 2
LAMBDA_CAVEAT = (
    'Finitely many multiple slopes in an unidentified exceptional set are not excluded; '
    'the filling is virtually Haken unless its lift lies in that set.'
)


# ---------------------------------------------------------------------------
# Fractions and slopes
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class KnotFraction:
    """p/q naming the two-bridge knot K(p/q); q is odd and positive"""

    p: int
    q: int

    def __post_init__(self):
        if self.q <= 0 or self.q % 2 == 0:
            raise InvalidFraction(f'Denominator must be odd and positive, got {self.p}/{self.q}')
        if math.gcd(self.p, self.q) != 1:
            raise InvalidFraction(f'Fraction must be reduced, got {self.p}/{self.q}')

    @classmethod
    def parse(cls, text: str) -> 'KnotFraction':
        try:
            p, q = parse_ratio(text)
        except ValueError as err:
            raise InvalidFraction(str(err))
        return cls(p, q)

    def as_fraction(self) -> Fraction:
        return Fraction(self.p, self.q)

    def __str__(self) -> str:
        return f'{self.p}/{self.q}'


@dataclass(frozen=True)
class Slope:
    """m/l stored with l > 0, or as 1/0 for the meridian"""

    m: int
    l: int

    def __post_init__(self):
        if self.m == 0 and self.l == 0:
            raise InvalidSlope('0/0 is not a slope')
        if math.gcd(self.m, self.l) != 1:
            raise InvalidSlope(f'Slope must be reduced, got {self.m}/{self.l}')
        if self.l < 0 or (self.l == 0 and self.m < 0):
            object.__setattr__(self, 'm', -self.m)
            object.__setattr__(self, 'l', -self.l)

    @classmethod
    def parse(cls, text: str) -> 'Slope':
        try:
            m, l = parse_ratio(text)
        except ValueError as err:
            raise InvalidSlope(str(err))
        return cls(m, l)

    def __str__(self) -> str:
        return f'{self.m}/{self.l}'


@dataclass(frozen=True)
class MultipleSlope:
    """One slope per boundary torus of the dihedral cover"""

    slopes: tuple

    def __post_init__(self):
        if len(set(self.slopes)) > 1:
            raise InvalidSlope(f'Lifted slopes must agree, got {[str(s) for s in self.slopes]}')

    @property
    def slope(self) -> Slope:
        return self.slopes[0]

    def __len__(self) -> int:
        return len(self.slopes)

    def __str__(self) -> str:
        return '{' + ', '.join(str(s) for s in self.slopes) + '}'


# ---------------------------------------------------------------------------
# Equivalence
# ---------------------------------------------------------------------------
def residues(f: KnotFraction) -> list:
    """p, -p, 1/p and -1/p modulo q, sorted and without repeats"""
    q = f.q
    if q == 1:
        return [0]
    inverse = pow(f.p, -1, q)
    return sorted({f.p % q, -f.p % q, inverse, -inverse % q})


def equivalent(f1: KnotFraction, f2: KnotFraction) -> bool:
    return f1.q == f2.q and f2.p % f2.q in residues(f1)


# ---------------------------------------------------------------------------
# Continued fractions
# ---------------------------------------------------------------------------
@dataclass
class NoExpansion:
    kind: typing.ClassVar = 'NoExpansion'
    value: Fraction = Fraction(0)

    def to_json(self) -> dict:
        return {'kind': self.kind, 'at': f'{self.value.numerator}/{self.value.denominator}'}


def _nearest_even(x: Fraction) -> typing.Optional[int]:
    """Nearest even integer to x, or None when x is an odd integer"""
    half = x / 2
    low = math.floor(half)
    gap = half - low
    if gap == Fraction(1, 2):
        return None
    return 2 * (low + 1) if gap > Fraction(1, 2) else 2 * low


def even_cf(f: KnotFraction) -> typing.Union[list, NoExpansion]:
    """
    Expansion p/q = 1/(a1 + 1/(a2 + ...)) with every a_i even and nonzero

    Each step writes the current value v as 1/(a + r) with a the even integer
    nearest 1/v, so |r| < 1 and the numerator of r drops.

    Args:
        f (KnotFraction): Fraction with 0 < p < q

    Raises:
        InvalidFraction: Outside 0 < p < q

    Returns:
        terms (list): The a_i, or NoExpansion when some 1/v is an odd integer
    """
    if not 0 < f.p < f.q:
        raise InvalidFraction(f'Even expansion needs 0 < p < q, got {f}')
    value = f.as_fraction()
    terms = []
    while value != 0:
        inverse = 1 / value
        a = _nearest_even(inverse)
        if a is None:
            return NoExpansion(value)
        terms.append(a)
        value = inverse - a
    return terms


def evaluate_cf(terms: list) -> Fraction:
    value = Fraction(0)
    for a in reversed(terms):
        value = 1 / (a + value)
    return value


def _two_expansion(value: Fraction, depth: int, seen: set) -> typing.Optional[list]:
    if depth < 0 or value in seen:
        return None
    seen.add(value)
    inverse = 1 / value
    for a in (2, -2):
        rest = inverse - a
        if rest == 0:
            return [a]
        if abs(rest) < 1:
            tail = _two_expansion(rest, depth - 1, seen)
            if tail is not None:
                return [a] + tail
    return None


def two_expansion(f: KnotFraction) -> typing.Optional[tuple]:
    """
    A representative of the class of f with an expansion in terms of +2 and -2

    Returns:
        found (tuple): (representative p, terms), or None
    """
    for p in residues(f):
        if p == 0:
            continue
        terms = _two_expansion(Fraction(p, f.q), p + f.q, set())
        logger.debug('two-expansion of %d/%d: %s', p, f.q, terms)
        if terms is not None:
            return p, terms
    return None


def fibered(f: KnotFraction) -> bool:
    """True when some equivalent p'/q expands with every term +2 or -2"""
    return two_expansion(f) is not None


# ---------------------------------------------------------------------------
# Fillings
# ---------------------------------------------------------------------------
def lift_filling(f: KnotFraction, s: Slope) -> MultipleSlope:
    """
    The multiple slope of the dihedral cover lying over the filling s

    Raises:
        OddNumerator: When the numerator of s is odd
    """
    if s.m % 2 != 0:
        raise OddNumerator(f'Slope {s} has an odd numerator and does not lift')
    return MultipleSlope((Slope(s.m // 2, s.l),) * f.q)


def delta(r: Slope, s: Slope) -> int:
    return abs(r.m * s.l - r.l * s.m)


def reducible_fillings(f: KnotFraction) -> list:
    p = f.p % f.q
    if p == 0:
        return [Slope(0, 1)]
    if p in (1, f.q - 1):
        return [Slope(2 * f.q, 1), Slope(-2 * f.q, 1)]
    return []


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------
class CertifiedModuloLambdaJSON(typing.TypedDict):
    kind: typing.Literal['CertifiedModuloLambda']
    caveat: str


class NotCertifiedJSON(typing.TypedDict):
    kind: typing.Literal['NotCertified']
    reason: str
    detail: str


@dataclass
class CertifiedModuloLambda:
    kind: typing.ClassVar = 'CertifiedModuloLambda'
    caveat: str = LAMBDA_CAVEAT

    def to_json(self) -> CertifiedModuloLambdaJSON:
        return CertifiedModuloLambdaJSON(kind=self.kind, caveat=self.caveat)


@dataclass
class NotCertified:
    kind: typing.ClassVar = 'NotCertified'
    reason: NotCertifiedReason
    detail: str = ''

    def to_json(self) -> NotCertifiedJSON:
        return NotCertifiedJSON(kind=self.kind, reason=self.reason.value, detail=self.detail)


CertificateStatus = typing.Union[CertifiedModuloLambda, NotCertified]


@dataclass
class Certificate:
    fraction: KnotFraction
    slope: Slope
    status: CertificateStatus
    representative: typing.Optional[int] = None
    mirrored: bool = False
    lifted: typing.Optional[Slope] = None
    deltas: dict = field(default_factory=dict)
    reducible: list = field(default_factory=list)
    census: typing.Optional[dict] = None
    coannular: typing.Optional[dict] = None

    @property
    def certified(self) -> bool:
        return isinstance(self.status, CertifiedModuloLambda)

    def to_json(self) -> dict:
        return {
            'schema': SCHEMA,
            'fraction': str(self.fraction),
            'slope': str(self.slope),
            'status': self.status.to_json(),
            'evidence': {
                'representative': (
                    None if self.representative is None else f'{self.representative}/{self.fraction.q}'
                ),
                'mirrored': self.mirrored,
                'lifted': None if self.lifted is None else str(self.lifted),
                'deltas': dict(self.deltas),
                'reducible': [str(s) for s in self.reducible],
                'census': self.census,
                'coannular': self.coannular,
            },
        }


def certify_vhaken(f: KnotFraction, s: Slope) -> Certificate:
    """
    Check every computable premise for the filling K(p/q)(s) to be virtually Haken

    The representative p'/q of the class must satisfy 2 <= p' and 4p' < q (torus
    knots, the class of 1/q, never qualify), s must lift, the lift must be at
    distance at least 2 from both coannular slopes, and s must not be reducible.

    Args:
        f (KnotFraction): The knot
        s (Slope): The filling slope

    Returns:
        certificate (Certificate): Status and the evidence gathered up to the first failure
    """
    certificate = Certificate(f, s, CertifiedModuloLambda())
    candidates = [p for p in residues(f) if p >= 2 and 4 * p < f.q]
    if not candidates:
        certificate.status = NotCertified(
            NotCertifiedReason.RANGE, f'No representative of {f} with 2 <= p and 4p < q'
        )
        return certificate
    representative = candidates[0]
    certificate.representative = representative
    certificate.mirrored = representative not in {f.p % f.q, pow(f.p, -1, f.q)}
    params = DpqParams.create(representative, f.q)
    certificate.census = wedge_census(params).to_dict()
    coannular = coannular_slopes(params)
    certificate.coannular = coannular.to_dict()
    try:
        lifted = lift_filling(f, s).slope
    except OddNumerator as err:
        certificate.status = NotCertified(NotCertifiedReason.ODD, str(err))
        return certificate
    certificate.lifted = lifted
    for sign in sorted({entry.slope for entry in coannular.entries}, reverse=True):
        boundary = Slope(sign, 1)
        certificate.deltas[str(boundary)] = delta(lifted, boundary)
    if min(certificate.deltas.values()) < DISTANCE_THRESHOLD:
        certificate.status = NotCertified(
            NotCertifiedReason.DISTANCE, f'Lifted slope {lifted} is within distance 1 of a coannular slope'
        )
        return certificate
    certificate.reducible = reducible_fillings(f)
    if s in certificate.reducible:
        certificate.status = NotCertified(NotCertifiedReason.REDUCIBLE, f'{s} is a reducible filling of {f}')
    return certificate
