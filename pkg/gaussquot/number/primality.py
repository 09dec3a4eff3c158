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
from typing import List, NamedTuple, Optional, Tuple, Union
from enum import Enum, auto
from functools import lru_cache
import math

import numpy as np

from gaussquot.errors import GuardError, PreconditionError
from gaussquot.gaussian import GaussianInt, exact_div, norm

U64_LIMIT = 1 << 64
ORACLE_NORM_MAX = 10**8

_SMALL_PRIMES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
    53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
)
# Anything without a factor in _SMALL_PRIMES and below this is prime
_SMALL_CERTAIN = 101*101

# Deterministic Miller-Rabin base sets: every n below the bound
# is classified correctly by the listed bases.
_MR_BASES = (
    (2047, (2,)),
    (1373653, (2, 3)),
    (25326001, (2, 3, 5)),
    (3215031751, (2, 3, 5, 7)),
    (2152302898747, (2, 3, 5, 7, 11)),
    (3474749660383, (2, 3, 5, 7, 11, 13)),
    (341550071728321, (2, 3, 5, 7, 11, 13, 17)),
    (3825123056546413051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
    (U64_LIMIT, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
)

def _bases_for(n: int) -> Tuple[int, ...]:
    for bound, bases in _MR_BASES:
        if n < bound:
            return bases
    assert False, 'n is out of the 64-bit range'

def _miller_rabin_round(n: int, d: int, s: int, a: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x*x % n
        if x == n - 1:
            return True
    return False

def is_prime(n: int) -> bool:
    ''' Deterministic primality for 0 <= n < 2**64. '''
    if n < 0 or n >= U64_LIMIT:
        raise PreconditionError('{} is outside the unsigned 64-bit range.'.format(n))
    if n < 2:
        return False

    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < _SMALL_CERTAIN:
        return True

    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    return all(_miller_rabin_round(n, d, s, a) for a in _bases_for(n))

class PrimeTag(Enum):
    ZERO = auto()
    UNIT = auto()
    RAMIFIED = auto()
    INERT = auto()
    SPLIT = auto()
    COMPOSITE = auto()

    def __str__(self):
        return self.name.lower()

    @property
    def is_prime(self) -> bool:
        return self in (PrimeTag.RAMIFIED, PrimeTag.INERT, PrimeTag.SPLIT)

Witness = Union[GaussianInt, int, None]

class PrimeClass(NamedTuple):
    ''' Classification of a Gaussian integer.

    The witness is the rational prime behind a prime tag
    (the norm, or |coordinate| for inert points), or a proper
    Gaussian divisor for composites when one was cheap to find.
    '''
    tag: PrimeTag
    witness: Witness = None

    def witness_str(self) -> str:
        if self.witness is None:
            return ''
        if isinstance(self.witness, GaussianInt):
            return '({},{})'.format(self.witness.a, self.witness.b)
        return str(self.witness)

    def to_obj(self):
        return {'class': str(self.tag), 'witness': self.witness_str() or None}

def _two_squares(p: int) -> Tuple[int, int]:
    ''' x, y with x*x + y*y == p, for small p = 1 (mod 4). '''
    for x in range(1, math.isqrt(p) + 1):
        y = math.isqrt(p - x*x)
        if x*x + y*y == p:
            return x, y
    assert False, '{} is not a sum of two squares'.format(p)

_WITNESS_PRIMES = tuple(p for p in range(2, 1000) if all(p % q for q in range(2, math.isqrt(p) + 1)))

def _cheap_divisor(g: GaussianInt) -> Optional[GaussianInt]:
    n = norm(g)
    for p in _WITNESS_PRIMES:
        if p*p > n:
            break
        if n % p:
            continue
        if p == 2:
            return GaussianInt(1, 1)
        if p % 4 == 3:
            return GaussianInt(p, 0)

        x, y = _two_squares(p)
        for d in (GaussianInt(x, y), GaussianInt(x, -y)):
            if exact_div(g, d) is not None:
                return d
    return None

def classify(g: GaussianInt) -> PrimeClass:
    n = norm(g)
    if n == 0:
        return PrimeClass(PrimeTag.ZERO)
    if n == 1:
        return PrimeClass(PrimeTag.UNIT)

    if g.a == 0 or g.b == 0:
        m = abs(g.a) + abs(g.b)
        if m % 4 == 3 and is_prime(m):
            return PrimeClass(PrimeTag.INERT, m)
        return PrimeClass(PrimeTag.COMPOSITE, _cheap_divisor(g))

    if is_prime(n):
        return PrimeClass(PrimeTag.RAMIFIED if n == 2 else PrimeTag.SPLIT, n)
    return PrimeClass(PrimeTag.COMPOSITE, _cheap_divisor(g))

def is_gaussian_prime(g: GaussianInt) -> bool:
    return classify(g).tag.is_prime

@lru_cache(maxsize=1)
def _divisor_candidates() -> List[Tuple[int, int, int]]:
    ''' One associate of every Gaussian integer with norm in
    (1, sqrt(ORACLE_NORM_MAX)], as (norm, c, d) sorted by norm.
    '''
    limit = math.isqrt(ORACLE_NORM_MAX)
    candidates = []
    for c in range(1, math.isqrt(limit) + 1):
        for d in range(0, math.isqrt(limit - c*c) + 1):
            n = c*c + d*d
            if n > 1:
                candidates.append((n, c, d))
    return sorted(candidates)

def trial_divide_zi(g: GaussianInt) -> PrimeClass:
    ''' Classify by searching for a Gaussian divisor directly.

    Shares nothing with classify() beyond the tag rules, so the
    two can be checked against each other.
    '''
    n = norm(g)
    if n > ORACLE_NORM_MAX:
        raise GuardError('Norm {} is above the trial division limit of {}.'.format(n, ORACLE_NORM_MAX))
    if n == 0:
        return PrimeClass(PrimeTag.ZERO)
    if n == 1:
        return PrimeClass(PrimeTag.UNIT)

    a, b = g.a, g.b
    for dn, c, d in _divisor_candidates():
        if dn*dn > n:
            break
        if (a*c + b*d) % dn == 0 and (b*c - a*d) % dn == 0:
            return PrimeClass(PrimeTag.COMPOSITE, GaussianInt(c, d))

    if n == 2:
        return PrimeClass(PrimeTag.RAMIFIED, n)
    if a == 0 or b == 0:
        return PrimeClass(PrimeTag.INERT, abs(a) + abs(b))
    return PrimeClass(PrimeTag.SPLIT, n)

def prime_mask(values: np.ndarray) -> np.ndarray:
    ''' Elementwise is_prime over a non-negative int64 array.

    Small-prime screening is vectorized; only the survivors
    go through Miller-Rabin.
    '''
    values = np.asarray(values, dtype=np.int64)
    mask = values > 1
    for p in _SMALL_PRIMES:
        mask &= (values % p != 0) | (values == p)

    pending = np.flatnonzero(mask & (values >= _SMALL_CERTAIN))
    if pending.size:
        mask[pending] = [is_prime(v) for v in values[pending].tolist()]
    return mask

def gaussian_prime_mask(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    ''' Elementwise is_gaussian_prime over coordinate arrays. '''
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)

    mask = prime_mask(a*a + b*b)

    axis = np.flatnonzero((a == 0) | (b == 0))
    if axis.size:
        m = np.abs(a[axis]) + np.abs(b[axis])
        mask[axis] = (m % 4 == 3) & prime_mask(m)
    return mask

def classify_tags(a: np.ndarray, b: np.ndarray, mask: np.ndarray) -> List[PrimeTag]:
    ''' Tags for the points already known to be Gaussian primes. '''
    tags = []
    for x, y in zip(a[mask].tolist(), b[mask].tolist()):
        if x == 0 or y == 0:
            tags.append(PrimeTag.INERT)
        elif x*x + y*y == 2:
            tags.append(PrimeTag.RAMIFIED)
        else:
            tags.append(PrimeTag.SPLIT)
    return tags
