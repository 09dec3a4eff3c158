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
from typing import List, Tuple
from dataclasses import dataclass
from fractions import Fraction
import math

from gaussquot.config import DEFAULT_BUDGET, EstimatorConfig
from gaussquot.errors import PreconditionError, WorkloadBudgetError
from gaussquot.estimate import DEFAULT_ESTIMATOR, LOWER_LIMIT, kubilyus_estimate, round_half_away
from gaussquot.gaussian import Angle, Real, Sector, format_angle
from gaussquot.lattice import (
    SectorPiece,
    column_range,
    estimate_points,
    iter_point_batches,
    split_columns,
    split_sector,
)
from gaussquot.number.primality import gaussian_prime_mask
from gaussquot.number.sieve import DEFAULT_SEGMENT_SIZE, count_primes_by_residue, pi3
from gaussquot.output import sig10
from gaussquot.utils.parallel import map_tasks

# Rough number of lattice points per census strip
STRIP_POINTS = 2**21

CensusTask = Tuple[SectorPiece, int, int, int]

@dataclass(frozen=True)
class CensusResult:
    ''' Gaussian primes with |gamma| < rho in a sector (N),
    next to the main-term estimate at u = rho**2 (K).

    `boundary_hits` are the counted primes lying exactly on
    one of the bounding rays.
    '''
    sector: Sector
    rho: Real
    N: int
    K: float
    K_rounded: int
    boundary_hits: int = 0

    def to_obj(self):
        return {
            'alpha': format_angle(self.sector.alpha),
            'beta': format_angle(self.sector.beta),
            'rho': sig10(self.rho),
            'N': self.N,
            'K': sig10(self.K),
            'K_rounded': self.K_rounded,
            'boundary_hits': self.boundary_hits,
        }

def norm_limit(rho: Real) -> int:
    ''' Smallest integer n such that norm < rho**2 iff norm < n. '''
    return math.ceil(Fraction(rho)**2)

def census_workload(s: Sector, rho: Real) -> int:
    return estimate_points(s, 1, norm_limit(rho))

def _census_strip(task: CensusTask) -> int:
    piece, n_hi, a_start, a_end = task
    count = 0
    for a, b in iter_point_batches(piece, 1, n_hi, a_start, a_end):
        count += int(gaussian_prime_mask(a, b).sum())
    return count

def _strip_tasks(s: Sector, n_hi: int, workers: int) -> List[CensusTask]:
    pieces = split_sector(s)
    parts = max(4*workers, math.ceil(estimate_points(s, 1, n_hi)/STRIP_POINTS))
    return [
        (piece, n_hi, a_start, a_end)
        for piece in pieces
        for a_start, a_end in split_columns(*column_range(piece, 1, n_hi), parts)
    ]

def ray_prime_count(angle: Angle, n_hi: int) -> int:
    ''' Gaussian primes on the ray at `angle` with norm < n_hi.

    Only axis and diagonal rays pass through lattice points.
    '''
    if angle.ratio is None or (4*angle.ratio).denominator != 1:
        return 0
    if int(4*angle.ratio) % 2 == 1:
        # Unit multiples of 1+i
        return 1 if n_hi > 2 else 0
    return pi3(math.isqrt(n_hi - 1)) if n_hi > 1 else 0

def boundary_hits(s: Sector, n_hi: int) -> int:
    if not s.inclusive:
        return 0
    hits = ray_prime_count(s.alpha, n_hi)
    if not s.is_full:
        hits += ray_prime_count(s.beta, n_hi)
    return hits

def sector_census(
    s: Sector,
    rho: Real,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    estimator: EstimatorConfig = DEFAULT_ESTIMATOR,
) -> CensusResult:
    ''' Count Gaussian primes in s with |gamma| < rho by brute force.

    The disk is scanned column by column in quadrant pieces;
    strips of columns are independent and are summed in order.
    '''
    if rho < 1:
        raise PreconditionError('Census radius must be at least 1, got {}.'.format(rho))

    workload = census_workload(s, rho)
    if workload > budget:
        raise WorkloadBudgetError(workload, budget)

    n_hi = norm_limit(rho)
    counts = map_tasks(_census_strip, _strip_tasks(s, n_hi, workers), workers=workers, text='Counting strips')

    u = float(Fraction(rho)**2)
    K = kubilyus_estimate(s, u, estimator) if u >= LOWER_LIMIT else 0.0
    return CensusResult(s, rho, sum(counts), K, round_half_away(K), boundary_hits(s, n_hi))

def total_census_formula(
    rho: Real,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
    workers: int = 1,
) -> int:
    ''' Full-circle count predicted from rational primes:
    4 inert primes per p = 3 (mod 4) below rho, 8 split primes
    per p = 1 (mod 4) below rho**2, and the 4 associates of 1+i.
    '''
    rho = Fraction(rho)
    if rho <= 0:
        raise PreconditionError('Radius must be positive, got {}.'.format(rho))

    inert = pi3(math.ceil(rho) - 1, segment_size, workers) if rho > 1 else 0
    split, _ = count_primes_by_residue(math.ceil(rho*rho) - 1, segment_size, workers)
    ramified = 1 if rho*rho > 2 else 0
    return 4*inert + 8*split + 4*ramified
