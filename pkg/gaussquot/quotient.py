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

''' Explicit quotients gamma/q of Gaussian primes inside a given
annular sector.

gamma is a Gaussian prime of large norm inside the sector and q a
rational prime = 3 (mod 4) (itself a Gaussian prime). Dividing by
the positive real q keeps the argument of gamma and scales its
magnitude, so any q in (|gamma|/R, |gamma|/r) lands gamma/q in the
region.
'''

from __future__ import annotations
from typing import NamedTuple, Optional
from dataclasses import dataclass
from fractions import Fraction
import math

from gaussquot.config import DEFAULT_BUDGET, SearchConfig
from gaussquot.errors import (
    GaussQuotError,
    GuardError,
    IterationCapError,
    PreconditionError,
    VerificationError,
    WorkloadBudgetError,
)
from gaussquot.estimate import pi3_estimate
from gaussquot.gaussian import (
    COORD_MAX,
    TAU,
    Angle,
    AnnularRegion,
    GaussianInt,
    RationalComplex,
    Sector,
    norm,
    region_contains,
)
from gaussquot.lattice import column_range, iter_point_batches, split_sector, to_absolute
from gaussquot.number.primality import classify, gaussian_prime_mask, is_prime
from gaussquot.number.sieve import DEFAULT_SEGMENT_SIZE, iter_primes_3mod4
from gaussquot.output import sig10

DEFAULT_SEARCH = SearchConfig()

# Norm windows are scanned in slices of about this many points
_CHUNK_POINTS = 2**15
_MIN_NORM_STEP = 64
_MAX_THRESHOLD_DOUBLINGS = 200
_MAX_NORM = COORD_MAX*COORD_MAX

class SearchTrace(NamedTuple):
    iterations: int
    threshold: float

@dataclass(frozen=True)
class QuotientResult:
    gamma: GaussianInt
    q: int
    value: RationalComplex
    region: AnnularRegion
    trace: SearchTrace

    def to_obj(self):
        value = self.value
        return {
            'gamma_a': self.gamma.a,
            'gamma_b': self.gamma.b,
            'q': self.q,
            're_exact': '{}/{}'.format(self.gamma.a, self.q),
            'im_exact': '{}/{}'.format(self.gamma.b, self.q),
            're_dec': sig10(value.real),
            'im_dec': sig10(value.imag),
            'iterations': self.trace.iterations,
            'threshold': sig10(self.trace.threshold),
            'region': self.region.to_obj(),
        }

def _arg_offset(s: Sector, a: int, b: int) -> float:
    return (math.atan2(b, a) - s.alpha.value) % TAU

def find_prime_in_sector(
    s: Sector,
    min_norm: int,
    max_norm: int,
    budget: int = DEFAULT_BUDGET,
) -> Optional[GaussianInt]:
    ''' The Gaussian prime strictly inside s with
    min_norm <= norm < max_norm of smallest norm, then smallest
    argument (from alpha), then smallest first coordinate.

    The budget is charged with the points actually visited, a
    chunk at a time; a chunk holding a prime is always answered.
    '''
    if not min_norm < max_norm:
        raise PreconditionError('Norm window [{}, {}) is empty.'.format(min_norm, max_norm))
    if max_norm > _MAX_NORM:
        raise GuardError('Norm window reaches {}, beyond the coordinate range.'.format(max_norm))

    s = s.opened()
    pieces = split_sector(s)
    step = max(_MIN_NORM_STEP, math.ceil(2*_CHUNK_POINTS/s.width))

    visited = 0
    lo = max(min_norm, 1)
    while lo < max_norm:
        hi = min(lo + step, max_norm)
        best = None

        for piece in pieces:
            a_start, a_end = column_range(piece, lo, hi)
            for a_rel, b_rel in iter_point_batches(piece, lo, hi, a_start, a_end):
                visited += len(a_rel)
                mask = gaussian_prime_mask(a_rel, b_rel)
                if not mask.any():
                    continue

                a, b = to_absolute(piece.quarter, a_rel[mask], b_rel[mask])
                norms = a*a + b*b
                smallest = norms == norms.min()
                for x, y in zip(a[smallest].tolist(), b[smallest].tolist()):
                    key = (x*x + y*y, _arg_offset(s, x, y), x, y)
                    if best is None or key < best:
                        best = key

        if best is not None:
            return GaussianInt(best[2], best[3])
        if visited > budget:
            raise WorkloadBudgetError(visited, budget)
        lo = hi

    return None

def initial_threshold(reg: AnnularRegion, gap: float = 4.0) -> float:
    ''' Magnitude M from which the interval (M/R, M/r) is
    expected to hold at least `gap` primes = 3 (mod 4).
    '''
    M = 4.0*reg.R
    for _ in range(_MAX_THRESHOLD_DOUBLINGS):
        if pi3_estimate(M/reg.r) - pi3_estimate(M/reg.R) >= gap:
            return M
        M *= 2
    raise GuardError('Region r={}, R={} is too thin to search.'.format(reg.r, reg.R))

def denominator_for(
    gamma: GaussianInt,
    reg: AnnularRegion,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
) -> Optional[int]:
    ''' Smallest prime q = 3 (mod 4) with r*q < |gamma| < R*q. '''
    n = norm(gamma)
    root = math.sqrt(n)
    # Sieve a slightly wider float interval, decide exactly per q
    lo = root/reg.R*(1 - 1e-9)
    hi = root/reg.r*(1 + 1e-9) + 1

    r2, R2 = reg.r_squared, reg.R_squared
    for q in iter_primes_3mod4(lo, hi, segment_size):
        if r2*q*q >= n:
            break
        if n < R2*q*q:
            return q
    return None

def verify_quotient(res: QuotientResult) -> bool:
    ''' Re-check every property of a result from scratch. '''
    try:
        return (
            classify(res.gamma).tag.is_prime
            and is_prime(res.q)
            and res.q % 4 == 3
            and res.value == RationalComplex(res.gamma, res.q)
            and region_contains(res.region, res.value)
        )
    except GaussQuotError:
        return False

def find_quotient(reg: AnnularRegion, config: SearchConfig = DEFAULT_SEARCH) -> QuotientResult:
    M = initial_threshold(reg, config.pi3_gap)

    for iteration in range(1, config.max_iterations + 1):
        min_norm = max(2, math.ceil(M*M))
        max_norm = max(min_norm + 1, math.ceil(config.growth*M*M))

        gamma = find_prime_in_sector(reg.sector, min_norm, max_norm, config.budget)
        q = denominator_for(gamma, reg, config.segment_size) if gamma is not None else None

        if gamma is not None and q is not None:
            result = QuotientResult(gamma, q, RationalComplex(gamma, q), reg, SearchTrace(iteration, M))
            if not verify_quotient(result):
                raise VerificationError('Quotient {}/{} failed verification.'.format(gamma, q))
            return result

        M *= config.growth

    raise IterationCapError(SearchTrace(config.max_iterations, M))

def approximation_region(re: float, im: float, eps: float) -> AnnularRegion:
    ''' An annular sector within distance eps of re + im*i. '''
    if not eps > 0 or not math.isfinite(eps):
        raise PreconditionError('eps must be a positive number, got {}.'.format(eps))
    if not (math.isfinite(re) and math.isfinite(im)):
        raise PreconditionError('Target {}+{}i is not finite.'.format(re, im))

    modulus = math.hypot(re, im)
    if modulus <= eps/2:
        quadrant = Sector.between(Angle.from_ratio(0), Angle.from_ratio(Fraction(1, 2)), inclusive=False)
        return AnnularRegion(quadrant, eps/4, eps/2)

    half_width = eps/(4*(modulus + eps))
    theta = math.atan2(im, re)
    sector = Sector(Angle.from_radians(theta - half_width), 2*half_width, inclusive=False)
    return AnnularRegion(sector, modulus - eps/2, modulus + eps/2)

def approximate(
    re: float,
    im: float,
    eps: float,
    config: SearchConfig = DEFAULT_SEARCH,
) -> QuotientResult:
    ''' A quotient of Gaussian primes within eps of re + im*i. '''
    result = find_quotient(approximation_region(re, im, eps), config)
    if not result.value.distance_squared(re, im) < Fraction(eps)**2:
        raise VerificationError('Quotient {}/{} is not within {} of {}+{}i.'.format(
            result.gamma, result.q, eps, re, im))
    return result

def distance(result: QuotientResult, re: float, im: float) -> float:
    return math.sqrt(result.value.distance_squared(re, im))
