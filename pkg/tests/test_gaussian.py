import pytest
from fractions import Fraction
import math

from hypothesis import given, strategies as st

from gaussquot.errors import AngleParseError, BoundsError, PreconditionError, ZeroInputError
from gaussquot.gaussian import (
    COORD_MAX,
    Angle, AnnularRegion, GaussianInt, RationalComplex, Ray, Sector,
    arg_of, exact_div, format_angle, mul, norm, parse_angle,
    region_contains, sector_contains, symmetry_orbit,
)

small = st.integers(min_value=-1000, max_value=1000)
gaussian = st.builds(GaussianInt, small, small)
nonzero = gaussian.filter(lambda g: not g.is_zero)

def _quadrant(inclusive=True):
    return Sector.between(Angle.from_ratio(0), Angle.from_ratio(Fraction(1,2)), inclusive)

def test_bounds():
    GaussianInt(COORD_MAX, -COORD_MAX)
    with pytest.raises(BoundsError):
        GaussianInt(COORD_MAX + 1, 0)
    with pytest.raises(BoundsError):
        GaussianInt(0, -COORD_MAX - 1)

def test_norm_and_mul():
    assert norm(GaussianInt(3, 2)) == 13
    assert mul(GaussianInt(2, 1), GaussianInt(2, -1)) == GaussianInt(5, 0)
    assert mul(GaussianInt(1, 1), GaussianInt(1, 1)) == GaussianInt(0, 2)

@given(gaussian, gaussian)
def test_norm_multiplicative(g1, g2):
    assert norm(mul(g1, g2)) == norm(g1)*norm(g2)

@given(gaussian, nonzero)
def test_exact_div_inverts_mul(g, d):
    assert exact_div(mul(g, d), d) == g

def test_exact_div():
    assert exact_div(GaussianInt(5, 0), GaussianInt(2, 1)) == GaussianInt(2, -1)
    assert exact_div(GaussianInt(3, 0), GaussianInt(1, 1)) is None
    with pytest.raises(ZeroInputError):
        exact_div(GaussianInt(3, 0), GaussianInt(0, 0))

@given(gaussian, st.integers(min_value=-8, max_value=8))
def test_rotation(g, k):
    assert norm(g.rotated(k)) == norm(g)
    assert g.rotated(k).rotated(-k) == g
    assert g.rotated(4) == g

def test_symmetry_orbit():
    assert len(symmetry_orbit(GaussianInt(2, 1))) == 8
    assert len(symmetry_orbit(GaussianInt(1, 1))) == 4
    assert symmetry_orbit(GaussianInt(3, 0)) == {
        GaussianInt(3, 0), GaussianInt(0, 3), GaussianInt(-3, 0), GaussianInt(0, -3),
    }
    with pytest.raises(ZeroInputError):
        symmetry_orbit(GaussianInt(0, 0))

def test_arg_of():
    assert arg_of(GaussianInt(1, 0)).value == 0.0
    assert arg_of(GaussianInt(0, -1)).value == pytest.approx(3*math.pi/2)
    with pytest.raises(ZeroInputError):
        arg_of(GaussianInt(0, 0))

@pytest.mark.parametrize('text,ratio', [
    ('pi', Fraction(1)),
    ('pi/31415', Fraction(1, 31415)),
    ('2pi/31415', Fraction(2, 31415)),
    ('2pi/47', Fraction(2, 47)),
    ('3pi', Fraction(1)),
    ('2pi', Fraction(0)),
    ('0', Fraction(0)),
    (' pi / 4 ', Fraction(1, 4)),
])
def test_parse_angle_rational(text, ratio):
    angle = parse_angle(text)
    assert angle.ratio == ratio
    assert angle.value == pytest.approx(float(ratio)*math.pi)

def test_parse_angle_decimal():
    assert parse_angle('0.5').ratio is None
    assert parse_angle('0.5').value == 0.5
    assert parse_angle('-0.5').value == pytest.approx(2*math.pi - 0.5)
    assert parse_angle('1e-3').value == pytest.approx(1e-3)

def test_parse_angle_offset():
    angle = parse_angle('pi/4+0.001')
    assert angle.ratio is None
    assert angle.value == pytest.approx(math.pi/4 + 0.001)
    assert parse_angle('pi/4-0.001').value == pytest.approx(math.pi/4 - 0.001)

@pytest.mark.parametrize('text,token', [
    ('', '<end>'),
    ('pi/', '<end>'),
    ('pi/0', '0'),
    ('abc', 'a'),
    ('pi/4x', 'x'),
    ('pi*2', '*'),
    ('pi/2.5', '2.5'),
    ('0.5pi/', '0.5'),
])
def test_parse_angle_errors(text, token):
    with pytest.raises(AngleParseError) as e:
        parse_angle(text)
    assert e.value.token == token
    assert isinstance(e.value, PreconditionError)

def test_format_angle():
    assert format_angle(Angle.from_ratio(0)) == '0'
    assert format_angle(Angle.from_ratio(1)) == 'pi'
    assert format_angle(Angle.from_ratio(Fraction(2, 47))) == '2pi/47'
    assert format_angle(Angle.from_ratio(Fraction(1, 31415))) == 'pi/31415'
    assert format_angle(Angle.from_ratio(Fraction(3, 2))) == '3pi/2'
    assert format_angle(Angle.from_radians(0.5)) == '0.5'

def test_angle_normalized():
    assert Angle.from_ratio(Fraction(5, 2)).ratio == Fraction(1, 2)
    assert Angle.from_ratio(-1).ratio == Fraction(1)
    assert Angle.from_radians(-math.pi/2).value == pytest.approx(3*math.pi/2)

def test_ray_side_exact():
    ray = Ray(Angle.from_ratio(Fraction(1, 4)))
    assert ray.is_axis_or_diagonal
    assert ray.side(1, 1) == 0
    assert ray.side(1000000, 1000000) == 0
    assert ray.side(1, 2) == 1
    assert ray.side(2, 1) == -1

def test_ray_side_near_miss():
    ray = Ray(Angle.from_ratio(Fraction(1, 31415)))
    assert not ray.is_axis_or_diagonal
    # pi/31415 lies between these two slopes
    assert ray.side(31415, 10) == 1
    assert ray.side(31416, 1) == -1

def test_ray_side_decimal_never_zero():
    ray = Ray(Angle.from_radians(math.atan2(1, 3)))
    assert ray.side(3, 1) != 0

def test_sector_between():
    s = Sector.between(Angle.from_ratio(Fraction(1, 31415)), Angle.from_ratio(Fraction(2, 31415)))
    assert s.offset_ratio == Fraction(1, 31415)
    assert s.width == pytest.approx(math.pi/31415)
    assert s.beta.ratio == Fraction(2, 31415)
    assert not s.is_full

def test_sector_full():
    assert Sector.between(parse_angle('0'), parse_angle('2pi')).is_full
    assert Sector.between(parse_angle('pi/4'), parse_angle('pi/4')).is_full
    assert Sector.full().width == pytest.approx(2*math.pi)

def test_sector_wraps():
    s = Sector.between(Angle.from_ratio(Fraction(7, 4)), Angle.from_ratio(Fraction(1, 4)))
    assert s.offset_ratio == Fraction(1, 2)
    assert sector_contains(s, GaussianInt(1, 0))
    assert sector_contains(s, GaussianInt(1, -1))
    assert not sector_contains(s, GaussianInt(0, 1))

def test_sector_invalid_width():
    with pytest.raises(PreconditionError):
        Sector(Angle.from_ratio(0), 0.0)
    with pytest.raises(PreconditionError):
        Sector(Angle.from_ratio(0), 7.0)

def test_sector_contains_bounds():
    closed = _quadrant(inclusive=True)
    opened = _quadrant(inclusive=False)

    for g in (GaussianInt(1, 0), GaussianInt(0, 1), GaussianInt(5, 0)):
        assert sector_contains(closed, g)
        assert not sector_contains(opened, g)

    assert sector_contains(opened, GaussianInt(1, 1))
    assert not sector_contains(closed, GaussianInt(-1, 1))
    assert not sector_contains(closed, GaussianInt(1, -1))

def test_sector_contains_diagonal():
    s = Sector.between(Angle.from_ratio(Fraction(1, 4)), Angle.from_ratio(Fraction(1, 2)), inclusive=False)
    assert not sector_contains(s, GaussianInt(1, 1))
    assert sector_contains(s, GaussianInt(1, 2))
    assert sector_contains(s.rotated(0), GaussianInt(1, 2))

@given(nonzero, st.integers(min_value=0, max_value=3))
def test_sector_contains_rotation(g, k):
    s = Sector.between(Angle.from_ratio(Fraction(1, 7)), Angle.from_ratio(Fraction(3, 5)))
    assert sector_contains(s, g) == sector_contains(s.rotated(k), g.rotated(k))

def test_sector_zero():
    with pytest.raises(ZeroInputError):
        sector_contains(_quadrant(), GaussianInt(0, 0))

def test_annular_region():
    reg = AnnularRegion(_quadrant(), 1, 2)
    assert not reg.sector.inclusive
    assert reg.r_squared == 1
    assert reg.R_squared == 4

    with pytest.raises(PreconditionError):
        AnnularRegion(_quadrant(), 2, 1)
    with pytest.raises(PreconditionError):
        AnnularRegion(_quadrant(), 1, 1)
    with pytest.raises(PreconditionError):
        AnnularRegion(_quadrant(), 0, 1)

def test_rational_complex():
    w = RationalComplex(GaussianInt(7, 2), 7)
    assert w.real == 1
    assert w.imag == Fraction(2, 7)
    assert w.abs_squared == Fraction(53, 49)
    assert w.distance_squared(1, 0) == Fraction(4, 49)
    assert w.to_complex() == pytest.approx(complex(1, 2/7))

    with pytest.raises(PreconditionError):
        RationalComplex(GaussianInt(1, 0), 0)

def test_region_contains():
    reg = AnnularRegion(_quadrant(), 1, 2)
    assert region_contains(reg, RationalComplex(GaussianInt(3, 2), 3))
    # |w| == r exactly
    assert not region_contains(reg, RationalComplex(GaussianInt(3, 0), 3))
    assert not region_contains(reg, RationalComplex(GaussianInt(3, 3), 1))
    assert not region_contains(reg, RationalComplex(GaussianInt(-3, 2), 3))

    with pytest.raises(ZeroInputError):
        region_contains(reg, RationalComplex(GaussianInt(0, 0), 3))

def test_mul_out_of_bounds():
    with pytest.raises(BoundsError):
        mul(GaussianInt(COORD_MAX, 0), GaussianInt(2, 0))
    with pytest.raises(BoundsError):
        mul(GaussianInt(COORD_MAX, 1), GaussianInt(COORD_MAX, 1))

def test_sector_contains_thin_sector():
    s = Sector.between(parse_angle('pi/31415'), parse_angle('2pi/31415'))
    # atan2(1, 10000) = 9.99999997e-5 sits just below pi/31415 = 1.0000295e-4
    assert not sector_contains(s, GaussianInt(10000, 1))
    assert sector_contains(s, GaussianInt(10000, 2))
    assert not sector_contains(s, GaussianInt(10000, 3))

def test_region_contains_below_inner_radius():
    reg = AnnularRegion(Sector.between(parse_angle('pi/6'), parse_angle('pi/5')), 1, 2)
    assert not region_contains(reg, RationalComplex(GaussianInt(1, 1), 3))

@given(nonzero, st.integers(min_value=1, max_value=1000))
def test_region_contains_keeps_argument(g, q):
    reg = AnnularRegion(Sector.between(Angle.from_ratio(Fraction(1, 7)), Angle.from_ratio(Fraction(3, 5))), 0.5, 3)
    if region_contains(reg, RationalComplex(g, q)):
        assert sector_contains(reg.sector, g)
