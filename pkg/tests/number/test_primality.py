import pytest
import random

import numpy as np
import sympy
from hypothesis import given, settings, strategies as st

from gaussquot.errors import GuardError, PreconditionError
from gaussquot.gaussian import GaussianInt, symmetry_orbit
from gaussquot.number.primality import (
    U64_LIMIT,
    PrimeTag, PrimeClass,
    classify, classify_tags, gaussian_prime_mask, is_gaussian_prime,
    is_prime, prime_mask, trial_divide_zi,
)

def test_is_prime_small():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]

@pytest.mark.parametrize('n', [
    561,                    # Carmichael
    2047,                   # strong pseudoprime to base 2
    1373653,                # strong pseudoprime to bases 2, 3
    3215031751,             # strong pseudoprime to bases 2, 3, 5, 7
    3825123056546413051,
    (2**32 + 15)*(2**31 - 1),
])
def test_is_prime_pseudoprimes(n):
    assert not is_prime(n)

@pytest.mark.parametrize('n', [
    2**31 - 1,
    2**61 - 1,
    2**64 - 59,
    1000000007,
])
def test_is_prime_large(n):
    assert is_prime(n)

def test_is_prime_range():
    with pytest.raises(PreconditionError):
        is_prime(-1)
    with pytest.raises(PreconditionError):
        is_prime(U64_LIMIT)

def test_is_prime_matches_sympy_dense():
    assert all(is_prime(n) == sympy.isprime(n) for n in range(20000))

@given(st.integers(min_value=0, max_value=U64_LIMIT - 1))
def test_is_prime_matches_sympy(n):
    assert is_prime(n) == sympy.isprime(n)

@pytest.mark.parametrize('a,b,tag,witness', [
    (0, 0, PrimeTag.ZERO, ''),
    (1, 0, PrimeTag.UNIT, ''),
    (0, -1, PrimeTag.UNIT, ''),
    (1, 1, PrimeTag.RAMIFIED, '2'),
    (3, 0, PrimeTag.INERT, '3'),
    (0, -7, PrimeTag.INERT, '7'),
    (2, 1, PrimeTag.SPLIT, '5'),
    (5, 0, PrimeTag.COMPOSITE, '(1,2)'),
    (2, 0, PrimeTag.COMPOSITE, '(1,1)'),
    (9, 0, PrimeTag.COMPOSITE, '(3,0)'),
    (3, 3, PrimeTag.COMPOSITE, '(1,1)'),
])
def test_classify(a, b, tag, witness):
    result = classify(GaussianInt(a, b))
    assert result.tag == tag
    assert result.witness_str() == witness

def test_prime_tag_str():
    assert str(PrimeTag.INERT) == 'inert'
    assert PrimeTag.SPLIT.is_prime
    assert not PrimeTag.COMPOSITE.is_prime
    assert not PrimeTag.UNIT.is_prime

def test_prime_class_to_obj():
    assert PrimeClass(PrimeTag.SPLIT, 5).to_obj() == {'class': 'split', 'witness': '5'}
    assert PrimeClass(PrimeTag.ZERO).to_obj() == {'class': 'zero', 'witness': None}

def test_composite_witness_divides():
    for a in range(-30, 31):
        for b in range(-30, 31):
            result = classify(GaussianInt(a, b))
            if result.tag != PrimeTag.COMPOSITE or result.witness is None:
                continue
            d = result.witness if isinstance(result.witness, GaussianInt) else GaussianInt(result.witness, 0)
            n = d.a*d.a + d.b*d.b
            assert (a*d.a + b*d.b) % n == 0
            assert (b*d.a - a*d.b) % n == 0

@given(st.integers(min_value=-300, max_value=300), st.integers(min_value=-300, max_value=300))
def test_classify_symmetric(a, b):
    g = GaussianInt(a, b)
    if g.is_zero:
        return
    tag = classify(g).tag
    assert all(classify(h).tag == tag for h in symmetry_orbit(g))

def test_classify_matches_trial_division_exhaustive():
    for a in range(-100, 101):
        for b in range(-100, 101):
            if a*a + b*b > 10**4:
                continue
            g = GaussianInt(a, b)
            assert classify(g).tag == trial_divide_zi(g).tag, g

@pytest.mark.slow
def test_classify_matches_trial_division_random():
    rng = random.Random(20240611)
    checked = 0
    while checked < 10**4:
        a = rng.randint(-10**4, 10**4)
        b = rng.randint(-10**4, 10**4)
        if a*a + b*b > 10**8:
            continue
        g = GaussianInt(a, b)
        assert classify(g).tag == trial_divide_zi(g).tag, g
        checked += 1

def test_trial_division_guard():
    with pytest.raises(GuardError):
        trial_divide_zi(GaussianInt(10**4, 1))

def test_is_gaussian_prime():
    assert is_gaussian_prime(GaussianInt(3, 2))
    assert not is_gaussian_prime(GaussianInt(5, 0))

def test_prime_mask():
    values = np.arange(0, 50000, dtype=np.int64)
    mask = prime_mask(values)
    assert mask.tolist() == [is_prime(n) for n in range(50000)]

def test_prime_mask_large():
    values = np.array([2**61 - 1, 2**61 + 1, 3215031751, 1000000007], dtype=np.int64)
    assert prime_mask(values).tolist() == [True, False, False, True]

def test_gaussian_prime_mask():
    coords = np.arange(-30, 31, dtype=np.int64)
    a, b = np.meshgrid(coords, coords, indexing='ij')
    a, b = a.ravel(), b.ravel()

    mask = gaussian_prime_mask(a, b)
    expected = [is_gaussian_prime(GaussianInt(x, y)) for x, y in zip(a.tolist(), b.tolist())]
    assert mask.tolist() == expected

def test_classify_tags():
    a = np.array([1, 3, 2, 4], dtype=np.int64)
    b = np.array([1, 0, 1, 0], dtype=np.int64)
    mask = gaussian_prime_mask(a, b)
    assert mask.tolist() == [True, True, True, False]
    assert classify_tags(a, b, mask) == [PrimeTag.RAMIFIED, PrimeTag.INERT, PrimeTag.SPLIT]
