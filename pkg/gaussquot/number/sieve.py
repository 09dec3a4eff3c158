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
from typing import Iterator, List, Optional, Sequence, Tuple
from dataclasses import dataclass
from functools import lru_cache, partial
import math

import numpy as np

from gaussquot.errors import GuardError, PreconditionError
from gaussquot.gaussian import Real
from gaussquot.utils.parallel import map_tasks

DEFAULT_SEGMENT_SIZE = 2**26
PI3_GUARD = 10**10

# Interval searches start with small segments and grow towards
# the configured size, so a prime near the left end is cheap.
_FIRST_SEARCH_SEGMENT = 2**12

@lru_cache(maxsize=8)
def simple_sieve(limit: int) -> np.ndarray:
    ''' All primes <= limit. '''
    if limit < 2:
        return np.array([], dtype=np.int64)

    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p*p::p] = False
    return np.flatnonzero(is_prime).astype(np.int64)

@dataclass(frozen=True)
class SieveSegment:
    ''' Primes in [lo, hi).

    `bits[i]` is the primality of the odd integer first_odd + 2*i;
    the only even prime is tracked by `has_two`.
    '''
    lo: int
    hi: int
    bits: np.ndarray
    has_two: bool

    @property
    def first_odd(self) -> int:
        return self.lo | 1

    def primes(self) -> np.ndarray:
        odd = self.first_odd + 2*np.flatnonzero(self.bits).astype(np.int64)
        if self.has_two:
            return np.concatenate([np.array([2], dtype=np.int64), odd])
        return odd

    def count(self) -> int:
        return int(self.bits.sum()) + int(self.has_two)

    def count_residue(self, residue: int) -> int:
        ''' Number of primes = residue (mod 4), residue 1 or 3. '''
        assert residue in (1, 3)
        start = 0 if self.first_odd % 4 == residue else 1
        return int(self.bits[start::2].sum())

    def __contains__(self, n: int) -> bool:
        if not self.lo <= n < self.hi:
            return False
        if n % 2 == 0:
            return n == 2
        return bool(self.bits[(n - self.first_odd) // 2])

def sieve_range(lo: int, hi: int, max_size: int = DEFAULT_SEGMENT_SIZE) -> SieveSegment:
    if lo < 0 or lo >= hi:
        raise PreconditionError('Sieve range [{}, {}) is empty or negative.'.format(lo, hi))
    if hi - lo > max_size:
        raise GuardError('Sieve range [{}, {}) is longer than the segment limit of {}.'.format(lo, hi, max_size))

    first_odd = lo | 1
    bits = np.ones(max(0, (hi - first_odd + 1) // 2), dtype=bool)
    if first_odd == 1 and bits.size:
        bits[0] = False

    for p in simple_sieve(math.isqrt(hi - 1)).tolist()[1:]:
        start = max(p*p, -(-first_odd // p)*p)
        if start % 2 == 0:
            start += p
        if start >= hi:
            continue
        bits[(start - first_odd) // 2::p] = False

    return SieveSegment(lo, hi, bits, lo <= 2 < hi)

def iter_segments(lo: int, hi: int, size: int) -> Iterator[Tuple[int, int]]:
    for seg_lo in range(lo, hi, size):
        yield seg_lo, min(seg_lo + size, hi)

def _count_segment(bounds: Tuple[int, int], residue: Optional[int], size: int) -> int:
    segment = sieve_range(bounds[0], bounds[1], size)
    if residue is None:
        return segment.count()
    return segment.count_residue(residue)

def _count_primes_upto(
    x: int,
    residue: Optional[int],
    segment_size: int,
    workers: int,
) -> int:
    if x < 2:
        return 0
    return sum(map_tasks(
        partial(_count_segment, residue=residue, size=segment_size),
        iter_segments(0, x + 1, segment_size),
        workers=workers,
        text='Sieving segments',
    ))

def _check_guard(x: int):
    if x > PI3_GUARD:
        raise GuardError('{} is above the prime counting limit of {}.'.format(x, PI3_GUARD))

def pi3(x: int, segment_size: int = DEFAULT_SEGMENT_SIZE, workers: int = 1) -> int:
    ''' Number of primes p <= x with p = 3 (mod 4). '''
    _check_guard(x)
    return _count_primes_upto(x, 3, segment_size, workers)

def count_primes_by_residue(
    x: int,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
    workers: int = 1,
) -> Tuple[int, int]:
    ''' (#{p <= x : p = 1 mod 4}, #{p <= x : p = 3 mod 4}). '''
    _check_guard(x)
    return (
        _count_primes_upto(x, 1, segment_size, workers),
        _count_primes_upto(x, 3, segment_size, workers),
    )

def iter_primes_3mod4(
    lo: Real,
    hi: Real,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
) -> Iterator[int]:
    ''' Primes p = 3 (mod 4) with lo < p < hi, ascending.

    Only (lo, hi) is sieved, segment by segment.
    '''
    if not 0 < lo < hi:
        raise PreconditionError('Interval ({}, {}) must satisfy 0 < lo < hi.'.format(lo, hi))

    start = math.floor(lo) + 1
    stop = math.ceil(hi)
    size = min(_FIRST_SEARCH_SEGMENT, segment_size)

    while start < stop:
        seg_hi = min(start + size, stop)
        for p in sieve_range(start, seg_hi, segment_size).primes().tolist():
            if p % 4 == 3:
                yield p
        start = seg_hi
        size = min(2*size, segment_size)

def prime_3mod4_in(
    lo: Real,
    hi: Real,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
) -> Optional[int]:
    ''' Smallest prime p = 3 (mod 4) with lo < p < hi, if any. '''
    return next(iter_primes_3mod4(lo, hi, segment_size), None)

def pi3_interval_counts(
    xs: Sequence[Real],
    a: Real,
    b: Real,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
) -> List[int]:
    ''' pi3(floor(x*b)) - pi3(ceil(x*a)) for each x: the number of
    primes = 3 (mod 4) in (xa, xb], which grows without bound
    for fixed 0 < a < b.
    '''
    if not 0 < a < b:
        raise PreconditionError('Need 0 < a < b, got a={}, b={}.'.format(a, b))
    return [
        pi3(math.floor(x*b), segment_size) - pi3(math.ceil(x*a), segment_size)
        for x in xs
    ]
