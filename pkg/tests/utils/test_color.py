import pytest

from gaussquot.number.primality import PrimeTag
from gaussquot.utils.color import class_color, hex_color

def test_hex_color():
    assert hex_color((  0,  0,  0)) == '#000000'
    assert hex_color((255,  0,  0)) == '#ff0000'
    assert hex_color((  0,  0,255)) == '#0000ff'
    assert hex_color((  0,255,  0)) == '#00ff00'
    assert hex_color((255,255,255)) == '#ffffff'

def test_class_color():
    assert class_color(PrimeTag.INERT) == (204, 51, 51)
    assert class_color(PrimeTag.SPLIT) == (0, 0, 0)
    assert class_color(PrimeTag.RAMIFIED) == (51, 51, 204)

def test_class_color_not_prime():
    with pytest.raises(AssertionError):
        class_color(PrimeTag.COMPOSITE)
