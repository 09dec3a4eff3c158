# Copyright 2026 gaussquot developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from __future__ import annotations
from typing import List, Optional, Set, Tuple, Union
from dataclasses import dataclass
from fractions import Fraction
import math
import re

import mpmath

from gaussquot.errors import AngleParseError, BoundsError, PreconditionError, ZeroInputError

TAU = 2*math.pi
COORD_MAX = 2**31 - 1

# Angular comparisons closer than this fall back to
# evaluating the cross product against the bound's exact value.
ANGLE_GUARD = 1e-12

_EXACT_DPS = 50

Real = Union[int, float, Fraction]

@dataclass(frozen=True)
class GaussianInt:
    ''' Exact lattice point a+bi. '''
    a: int
    b: int

    def __post_init__(self):
        if abs(self.a) > COORD_MAX or abs(self.b) > COORD_MAX:
            raise BoundsError('{} has a coordinate outside of +-{}.'.format(self, COORD_MAX))

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def conj(self) -> GaussianInt:
        return GaussianInt(self.a, -self.b)

    def rotated(self, quarter_turns: int) -> GaussianInt:
        ''' Multiply by i**quarter_turns. '''
        a, b = rotate_coords(self.a, self.b, quarter_turns)
        return GaussianInt(a, b)

    def to_obj(self):
        return {'a': self.a, 'b': self.b}

    def __str__(self):
        return '{}{:+d}i'.format(self.a, self.b)

def rotate_coords(a: int, b: int, quarter_turns: int) -> Tuple[int, int]:
    k = quarter_turns % 4
    if k == 0: return a, b
    if k == 1: return -b, a
    if k == 2: return -a, -b
    return b, -a

def norm(g: GaussianInt) -> int:
    return g.a*g.a + g.b*g.b

def mul(g1: GaussianInt, g2: GaussianInt) -> GaussianInt:
    return GaussianInt(
        g1.a*g2.a - g1.b*g2.b,
        g1.a*g2.b + g2.a*g1.b,
    )

def exact_div(g: GaussianInt, d: GaussianInt) -> Optional[GaussianInt]:
    ''' Return g/d when d divides g in Z[i], otherwise None. '''
    if d.is_zero:
        raise ZeroInputError('Division by the zero Gaussian integer.')

    n = norm(d)
    re_part = g.a*d.a + g.b*d.b
    im_part = g.b*d.a - g.a*d.b
    if re_part % n or im_part % n:
        return None
    return GaussianInt(re_part // n, im_part // n)

def _check_nonzero(g: GaussianInt):
    if g.is_zero:
        raise ZeroInputError('The zero Gaussian integer has no argument.')

def symmetry_orbit(g: GaussianInt) -> Set[GaussianInt]:
    ''' Orbit of g under the units and conjugation. '''
    _check_nonzero(g)
    return {
        point.rotated(k)
        for point in (g, g.conj())
        for k in range(4)
    }

@dataclass(frozen=True)
class Angle:
    ''' Angle in [0, 2*pi).

    `ratio` is kept when the angle was given as a rational
    multiple of pi (ratio*pi, ratio in [0,2)), so comparisons
    near it can use the intended value rather than the float.
    '''
    value: float
    ratio: Optional[Fraction] = None

    @classmethod
    def from_ratio(cls, ratio: Real) -> Angle:
        ratio = Fraction(ratio) % 2
        return cls(float(ratio)*math.pi, ratio)

    @classmethod
    def from_radians(cls, radians: float) -> Angle:
        value = float(radians) % TAU
        if value >= TAU:
            value = 0.0
        if value == 0.0:
            return cls(0.0, Fraction(0))
        return cls(value, None)

    @property
    def is_rational(self) -> bool:
        return self.ratio is not None

    def rotated(self, quarter_turns: int) -> Angle:
        if self.ratio is not None:
            return Angle.from_ratio(self.ratio + Fraction(quarter_turns, 2))
        return Angle.from_radians(self.value + quarter_turns*math.pi/2)

    def __str__(self):
        return format_angle(self)

def format_angle(angle: Angle) -> str:
    if angle.ratio is None:
        return repr(angle.value)

    p, q = angle.ratio.numerator, angle.ratio.denominator
    if p == 0:
        return '0'
    head = 'pi' if p == 1 else '{}pi'.format(p)
    return head if q == 1 else '{}/{}'.format(head, q)

_ANGLE_TOKEN = re.compile(r'''
    (?P<num>(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?)
    |(?P<pi>pi|π)
    |(?P<op>[/+-])
    |(?P<bad>\S)
''', re.VERBOSE)

_INT = re.compile(r'\d+')

def _tokenize_angle(text: str) -> List[Tuple[str, str]]:
    tokens = []
    for match in _ANGLE_TOKEN.finditer(text):
        kind = match.lastgroup
        assert kind is not None
        if kind == 'bad':
            raise AngleParseError(text, match.group())
        tokens.append((kind, match.group()))
    return tokens

def parse_angle(text: str) -> Angle:
    ''' Parse `pi/N`, `Kpi/N`, `Kpi`, `pi`, or decimal radians.

    A pi-multiple may be followed by a signed decimal offset,
    e.g. `pi/4+0.001`; the result is then a plain decimal.
    '''
    tokens = _tokenize_angle(text.strip())
    pos = 0

    def peek(kind: Optional[str] = None) -> Optional[str]:
        if pos >= len(tokens):
            return None
        if kind is not None and tokens[pos][0] != kind:
            return None
        return tokens[pos][1]

    def positive_int() -> int:
        nonlocal pos
        token = peek()
        if token is None:
            raise AngleParseError(text, '<end>')
        if peek('num') is None or not _INT.fullmatch(token) or int(token) == 0:
            raise AngleParseError(text, token)
        pos += 1
        return int(token)

    if not tokens:
        raise AngleParseError(text, '<end>')

    if tokens[0][0] == 'op' and tokens[0][1] in '+-' or (
        tokens[0][0] == 'num' and (len(tokens) == 1 or tokens[1][0] != 'pi')
    ):
        sign = 1.0
        if tokens[0][0] == 'op':
            sign = -1.0 if tokens[0][1] == '-' else 1.0
            pos += 1
        number = peek('num')
        if number is None:
            raise AngleParseError(text, peek() or '<end>')
        pos += 1
        if pos < len(tokens):
            raise AngleParseError(text, tokens[pos][1])
        return Angle.from_radians(sign*float(number))

    k = 1
    if peek('num') is not None:
        k = positive_int()
    if peek('pi') is None:
        raise AngleParseError(text, peek() or '<end>')
    pos += 1

    n = 1
    if peek() == '/':
        pos += 1
        n = positive_int()

    ratio = Fraction(k, n)
    if pos == len(tokens):
        return Angle.from_ratio(ratio)

    op = peek('op')
    if op not in ('+', '-'):
        raise AngleParseError(text, tokens[pos][1])
    pos += 1
    offset = peek('num')
    if offset is None:
        raise AngleParseError(text, peek() or '<end>')
    pos += 1
    if pos < len(tokens):
        raise AngleParseError(text, tokens[pos][1])

    sign = -1.0 if op == '-' else 1.0
    return Angle.from_radians(float(ratio)*math.pi + sign*float(offset))

def arg_of(g: GaussianInt) -> Angle:
    _check_nonzero(g)
    return Angle.from_radians(math.atan2(g.b, g.a))

# (cos, sin) of k*pi/4 up to the common factor sqrt(2)/2 for odd k
_EIGHTH_TURNS = [(1,0), (1,1), (0,1), (-1,1), (-1,0), (-1,-1), (0,-1), (1,-1)]

class Ray:
    ''' The ray from the origin at a given angle, with the
    trigonometric values cached for repeated side tests.
    '''
    def __init__(self, angle: Angle):
        self.angle = angle
        self.cos = math.cos(angle.value)
        self.sin = math.sin(angle.value)

        self._eighth: Optional[Tuple[int, int]] = None
        if angle.ratio is not None and (4*angle.ratio).denominator == 1:
            self._eighth = _EIGHTH_TURNS[int(4*angle.ratio) % 8]

    @property
    def is_axis_or_diagonal(self) -> bool:
        return self._eighth is not None

    def side(self, a: int, b: int) -> int:
        ''' Sign of the cross product b*cos(t) - a*sin(t): positive
        when (a, b) lies counter-clockwise of the ray's line,
        zero only when the point is exactly on it.
        '''
        if self._eighth is not None:
            c, s = self._eighth
            return _sign(b*c - a*s)

        cross = b*self.cos - a*self.sin
        if abs(cross) > ANGLE_GUARD*(abs(a) + abs(b)):
            return _sign(cross)
        return self._exact_side(a, b)

    def _exact_side(self, a: int, b: int) -> int:
        with mpmath.workdps(_EXACT_DPS):
            if self.angle.ratio is not None:
                theta = mpmath.mpf(self.angle.ratio.numerator)/self.angle.ratio.denominator*mpmath.pi
            else:
                theta = mpmath.mpf(self.angle.value)
            cross = b*mpmath.cos(theta) - a*mpmath.sin(theta)
            return _sign(cross)

def _sign(x) -> int:
    return (x > 0) - (x < 0)

def ray_side(a: int, b: int, angle: Angle) -> int:
    return Ray(angle).side(a, b)

@dataclass(frozen=True)
class Sector:
    ''' Angular interval starting at `alpha` and running
    counter-clockwise for `beta_offset` radians.

    `offset_ratio` is the width as a rational multiple of pi
    when both bounds were given that way.
    '''
    alpha: Angle
    beta_offset: float
    inclusive: bool = True
    offset_ratio: Optional[Fraction] = None

    def __post_init__(self):
        if not 0 < self.beta_offset <= TAU:
            raise PreconditionError('Sector width {} is not in (0, 2pi].'.format(self.beta_offset))
        if self.offset_ratio is not None and not 0 < self.offset_ratio <= 2:
            raise PreconditionError('Sector width {}pi is not in (0, 2pi].'.format(self.offset_ratio))

    @classmethod
    def between(cls, alpha: Angle, beta: Angle, inclusive: bool = True) -> Sector:
        ''' Sector from alpha counter-clockwise to beta. Equal
        bounds (e.g. 0 and 2pi) give the full circle.
        '''
        if alpha.ratio is not None and beta.ratio is not None:
            offset = (beta.ratio - alpha.ratio) % 2
            if offset == 0:
                offset = Fraction(2)
            return cls(alpha, float(offset)*math.pi, inclusive, offset)

        width = (beta.value - alpha.value) % TAU
        if width == 0:
            width = TAU
        return cls(alpha, width, inclusive, None)

    @classmethod
    def full(cls, inclusive: bool = True) -> Sector:
        return cls(Angle.from_ratio(0), TAU, inclusive, Fraction(2))

    @property
    def width(self) -> float:
        return self.beta_offset

    @property
    def is_full(self) -> bool:
        return self.beta_offset >= TAU

    @property
    def beta(self) -> Angle:
        if self.alpha.ratio is not None and self.offset_ratio is not None:
            return Angle.from_ratio(self.alpha.ratio + self.offset_ratio)
        return Angle.from_radians(self.alpha.value + self.beta_offset)

    def rotated(self, quarter_turns: int) -> Sector:
        return Sector(self.alpha.rotated(quarter_turns), self.beta_offset, self.inclusive, self.offset_ratio)

    def opened(self) -> Sector:
        return Sector(self.alpha, self.beta_offset, False, self.offset_ratio)

    def to_obj(self):
        return {
            'alpha': format_angle(self.alpha),
            'beta': format_angle(self.beta),
            'width': self.beta_offset,
            'inclusive': self.inclusive,
        }

    def __str__(self):
        left, right = ('[', ']') if self.inclusive else ('(', ')')
        return '{}{}, {}{}'.format(left, format_angle(self.alpha), format_angle(self.beta), right)

def sector_contains(s: Sector, g: GaussianInt) -> bool:
    _check_nonzero(g)

    d = (arg_of(g).value - s.alpha.value) % TAU
    if min(d, TAU - d) <= ANGLE_GUARD:
        side = ray_side(g.a, g.b, s.alpha)
        if side == 0:
            return s.inclusive
        if side < 0:
            # Just clockwise of alpha, only a full turn comes back round
            return s.is_full
        d = 0.0

    if abs(d - s.beta_offset) <= ANGLE_GUARD and not s.is_full:
        side = ray_side(g.a, g.b, s.beta)
        if side == 0:
            return s.inclusive
        return side < 0

    return d < s.beta_offset

@dataclass(frozen=True)
class AnnularRegion:
    ''' {alpha < arg z < beta, r < |z| < R}; the sector is always
    stored with open bounds.
    '''
    sector: Sector
    r: float
    R: float

    def __post_init__(self):
        if not 0 < self.r < self.R:
            raise PreconditionError('Region magnitudes must satisfy 0 < r < R, got r={}, R={}.'.format(self.r, self.R))
        if self.sector.inclusive:
            object.__setattr__(self, 'sector', self.sector.opened())

    @property
    def r_squared(self) -> Fraction:
        return Fraction(self.r)**2

    @property
    def R_squared(self) -> Fraction:
        return Fraction(self.R)**2

    def rotated(self, quarter_turns: int) -> AnnularRegion:
        return AnnularRegion(self.sector.rotated(quarter_turns), self.r, self.R)

    def to_obj(self):
        obj = self.sector.to_obj()
        obj.update({'r': self.r, 'R': self.R})
        return obj

@dataclass(frozen=True)
class RationalComplex:
    ''' The exact value (a/q) + (b/q)i. '''
    numerator: GaussianInt
    denominator: int = 1

    def __post_init__(self):
        if self.denominator < 1:
            raise PreconditionError('Denominator must be a positive integer, got {}.'.format(self.denominator))

    @property
    def real(self) -> Fraction:
        return Fraction(self.numerator.a, self.denominator)

    @property
    def imag(self) -> Fraction:
        return Fraction(self.numerator.b, self.denominator)

    @property
    def abs_squared(self) -> Fraction:
        return Fraction(norm(self.numerator), self.denominator**2)

    def distance_squared(self, re: Real, im: Real) -> Fraction:
        ''' Exact |self - (re + im*i)|**2. '''
        return (self.real - Fraction(re))**2 + (self.imag - Fraction(im))**2

    def to_complex(self) -> complex:
        return complex(self.numerator.a/self.denominator, self.numerator.b/self.denominator)

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero

def region_contains(reg: AnnularRegion, w: RationalComplex) -> bool:
    if w.is_zero:
        raise ZeroInputError('The zero quotient is in no annular region.')

    abs_squared = w.abs_squared
    if not reg.r_squared < abs_squared < reg.R_squared:
        return False
    return sector_contains(reg.sector, w.numerator)
