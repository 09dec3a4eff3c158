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
from typing import Iterator, List, NamedTuple, Optional, Tuple
import math

import numpy as np

from gaussquot.gaussian import Ray, Sector, rotate_coords

HALF_PI = math.pi/2

Points = Tuple[np.ndarray, np.ndarray]

class Bound(NamedTuple):
    ''' One of a sector's bounding rays as seen from inside
    a single quadrant.
    '''
    ray: Ray
    tan: float
    strict: bool

class SectorPiece(NamedTuple):
    ''' The part of a sector inside one quadrant.

    Points are enumerated in relative coordinates (a > 0, b >= 0)
    and map back to the plane by multiplying with i**quarter.
    A missing bound is the quadrant's own edge.
    '''
    quarter: int
    lower: Optional[Bound]
    upper: Optional[Bound]
    rel_lo: float
    rel_hi: float

def split_sector(s: Sector) -> List[SectorPiece]:
    ''' Cut a sector into quadrant pieces that together cover
    every lattice point of the sector exactly once.
    '''
    if s.alpha.ratio is not None and s.offset_ratio is not None:
        start_ratio = s.alpha.ratio
        end_ratio = s.alpha.ratio + s.offset_ratio
        k0 = math.floor(2*start_ratio)
        k1 = math.floor(2*end_ratio)
        rel_start = float((2*start_ratio - k0)/2)*math.pi
        rel_end = float((2*end_ratio - k1)/2)*math.pi
    else:
        start = s.alpha.value
        end = s.alpha.value + s.beta_offset
        k0 = math.floor(start/HALF_PI)
        k1 = math.floor(end/HALF_PI)
        rel_start = start - k0*HALF_PI
        rel_end = end - k1*HALF_PI

    lower_ray = Ray(s.alpha)
    upper_ray = Ray(s.beta)
    # For a full turn the alpha ray is already covered by the first piece
    upper_strict = not s.inclusive or s.is_full

    pieces = []
    for k in range(k0, k1 + 1):
        lo = rel_start if k == k0 else 0.0
        hi = rel_end if k == k1 else HALF_PI

        if k == k1 and k > k0 and hi <= 0.0 and upper_strict:
            continue

        lower = Bound(lower_ray, math.tan(lo), not s.inclusive) if k == k0 else None
        upper = Bound(upper_ray, math.tan(hi), upper_strict) if k == k1 else None
        pieces.append(SectorPiece(k % 4, lower, upper, lo, hi))

    return pieces

def estimate_points(s: Sector, n_lo: int, n_hi: int) -> int:
    ''' Lattice points expected in the sector with n_lo <= norm < n_hi
    (the area of the annular sector).
    '''
    return math.ceil(s.width*max(0, n_hi - n_lo)/2)

def column_range(piece: SectorPiece, n_lo: int, n_hi: int) -> Tuple[int, int]:
    ''' Conservative [a_start, a_end) of the columns that can
    hold points of the piece with n_lo <= norm < n_hi.
    '''
    if n_hi < 2:
        return 1, 1

    a_max = math.isqrt(n_hi - 1)
    a_start = math.floor(math.sqrt(max(n_lo, 0))*math.cos(piece.rel_hi)) - 2
    a_end = math.ceil(math.sqrt(n_hi)*math.cos(piece.rel_lo)) + 3
    return max(1, a_start), min(a_max + 1, a_end)

def split_columns(a_start: int, a_end: int, parts: int) -> List[Tuple[int, int]]:
    if a_end <= a_start:
        return []
    parts = max(1, min(parts, a_end - a_start))
    step = -(-(a_end - a_start) // parts)
    return [(lo, min(lo + step, a_end)) for lo in range(a_start, a_end, step)]

def _admits(piece: SectorPiece, bound: Bound, a: int, b: int, lower: bool) -> bool:
    side = bound.ray.side(*rotate_coords(a, b, piece.quarter))
    if side == 0:
        return not bound.strict
    return side > 0 if lower else side < 0

def _first_admitted(piece: SectorPiece, a: int, b_min: int, b_max: int) -> int:
    ''' Smallest b in [b_min, b_max] on the inner side of the
    lower bound; b_max + 1 when there is none.
    '''
    bound = piece.lower
    if bound is None:
        return b_min

    guess = min(a*bound.tan, b_max + 1.0)
    b = min(max(math.ceil(guess), b_min), b_max + 1)
    while b > b_min and _admits(piece, bound, a, b - 1, True):
        b -= 1
    while b <= b_max and not _admits(piece, bound, a, b, True):
        b += 1
    return b

def _last_admitted(piece: SectorPiece, a: int, b_min: int, b_max: int) -> int:
    ''' Largest b in [b_min, b_max] on the inner side of the
    upper bound; b_min - 1 when there is none.
    '''
    bound = piece.upper
    if bound is None:
        return b_max

    guess = min(a*bound.tan, b_max + 1.0)
    b = min(max(math.floor(guess), b_min - 1), b_max)
    while b < b_max and _admits(piece, bound, a, b + 1, False):
        b += 1
    while b >= b_min and not _admits(piece, bound, a, b, False):
        b -= 1
    return b

def _ceil_sqrt(m: int) -> int:
    return 0 if m <= 0 else math.isqrt(m - 1) + 1

def iter_column_spans(
    piece: SectorPiece,
    n_lo: int,
    n_hi: int,
    a_start: int,
    a_end: int,
) -> Iterator[Tuple[int, int, int]]:
    ''' (a, b_lo, b_hi) for every non-empty column of the piece:
    all b in [b_lo, b_hi] lie in the piece with n_lo <= a*a + b*b < n_hi.
    '''
    for a in range(max(a_start, 1), a_end):
        a2 = a*a
        if a2 >= n_hi:
            break

        b_max = math.isqrt(n_hi - 1 - a2)
        b_min = _ceil_sqrt(n_lo - a2)
        if b_min > b_max:
            continue

        b_lo = _first_admitted(piece, a, b_min, b_max)
        b_hi = _last_admitted(piece, a, b_lo, b_max)
        if b_lo <= b_hi:
            yield a, b_lo, b_hi

def expand_spans(a: List[int], b_lo: List[int], b_hi: List[int]) -> Points:
    ''' Every lattice point of the given column spans. '''
    a_arr = np.asarray(a, dtype=np.int64)
    lo_arr = np.asarray(b_lo, dtype=np.int64)
    lengths = np.asarray(b_hi, dtype=np.int64) - lo_arr + 1

    offsets = np.cumsum(lengths) - lengths
    total = int(lengths.sum())
    b = np.arange(total, dtype=np.int64) - np.repeat(offsets, lengths) + np.repeat(lo_arr, lengths)
    return np.repeat(a_arr, lengths), b

def iter_point_batches(
    piece: SectorPiece,
    n_lo: int,
    n_hi: int,
    a_start: int,
    a_end: int,
    batch_points: int = 2**20,
) -> Iterator[Points]:
    ''' Points of the piece in relative coordinates, a few
    columns at a time.
    '''
    a_list: List[int] = []
    lo_list: List[int] = []
    hi_list: List[int] = []
    pending = 0

    for a, b_lo, b_hi in iter_column_spans(piece, n_lo, n_hi, a_start, a_end):
        a_list.append(a)
        lo_list.append(b_lo)
        hi_list.append(b_hi)
        pending += b_hi - b_lo + 1

        if pending >= batch_points:
            yield expand_spans(a_list, lo_list, hi_list)
            a_list, lo_list, hi_list, pending = [], [], [], 0

    if a_list:
        yield expand_spans(a_list, lo_list, hi_list)

def to_absolute(quarter: int, a: np.ndarray, b: np.ndarray) -> Points:
    k = quarter % 4
    if k == 0: return a, b
    if k == 1: return -b, a
    if k == 2: return -a, -b
    return b, -a
