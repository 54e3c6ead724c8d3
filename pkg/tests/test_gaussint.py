import pytest
from hypothesis import given, strategies as st

from conftest import gaussian_ints
from oracles import associates, gdivides, nu_oracle, sympy_gcd

from gaussline.gaussint import (
    I,
    ONE,
    ZERO,
    GaussianInt,
    GaussLineError,
    canonical_associate,
    divides,
    gdivmod,
    ggcd,
    gxgcd,
    is_canonical,
    is_unit,
    nu,
)

G = GaussianInt


@pytest.mark.parametrize(
    "text, value",
    [("0", G(0, 0)), ("7", G(7)), ("-7", G(-7)), ("i", G(0, 1)), ("-i", G(0, -1)), ("3i", G(0, 3)),
     ("-3i", G(0, -3)), ("2+6i", G(2, 6)), ("1-2i", G(1, -2)), ("-1+i", G(-1, 1)), (" 4-5i ", G(4, -5))],
)
def test_parse(text, value):
    assert G.parse(text) == value


@pytest.mark.parametrize("bad", ["", "i2", "1+", "2+3", "1+2j", "++1", "1;2", "4 - 5i"])
def test_parse_rejects(bad):
    with pytest.raises(GaussLineError):
        G.parse(bad)


@given(gaussian_ints(10**6))
def test_str_round_trip(z):
    assert G.parse(str(z)) == z


def test_str_forms():
    assert [str(z) for z in (G(0), G(0, 1), G(0, -1), G(0, -3), G(2, 6), G(1, -2))] == ["0", "i", "-i", "-3i", "2+6i", "1-2i"]


def test_equality_with_int():
    assert G(5) == 5 and hash(G(5)) == hash(5)
    assert G(5, 1) != 5


@given(gaussian_ints(), gaussian_ints(), gaussian_ints())
def test_ring_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a * b).norm() == a.norm() * b.norm()
    assert a - a == ZERO
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert a.trace() == 2 * a.re


def test_pow_and_units():
    assert G(1, 1) ** 3 == G(-2, 2)
    assert I**4 == ONE
    assert all(is_unit(u) for u in (ONE, -ONE, I, -I))
    assert not is_unit(G(1, 1))


@given(gaussian_ints(10**4), gaussian_ints(300, nonzero=True))
def test_divmod(beta, gamma):
    q, r = gdivmod(beta, gamma)
    assert beta == q * gamma + r
    # rounding to nearest gives N(r) <= N(gamma)/2
    assert 2 * r.norm() <= gamma.norm()


def test_divmod_example():
    assert gdivmod(G(7, 2), G(2, 1)) == (G(3, -1), G(0, 1))


@given(gaussian_ints(200), gaussian_ints(200))
def test_divides_matches_rational_route(a, b):
    if a:
        assert divides(a, b) == gdivides((a.re, a.im), (b.re, b.im))


@given(gaussian_ints(10**5), gaussian_ints(10**5))
def test_gcd_against_sympy(a, b):
    if not a and not b:
        with pytest.raises(GaussLineError):
            ggcd(a, b)
        return
    g = ggcd(a, b)
    assert is_canonical(g)
    assert (g.re, g.im) in associates(sympy_gcd((a.re, a.im), (b.re, b.im)))


@given(gaussian_ints(10**4), gaussian_ints(10**4))
def test_extended_gcd(a, b):
    if not a and not b:
        return
    g, x, y = gxgcd(a, b)
    assert a * x + b * y == g
    assert canonical_associate(g) == ggcd(a, b)


@given(gaussian_ints(10**4, nonzero=True))
def test_canonical_associate(z):
    c = canonical_associate(z)
    assert is_canonical(c) and c.re > 0 and c.im >= 0
    assert (c.re, c.im) in associates((z.re, z.im))


@pytest.mark.parametrize("beta, expected", [("2+6i", 20), ("1+2i", 5), ("1-2i", 5), ("3", 3), ("-3", 3), ("i", 1), ("1+i", 2), ("4+4i", 8)])
def test_nu_values(beta, expected):
    assert nu(G.parse(beta)) == expected


@given(gaussian_ints(25, nonzero=True))
def test_nu_is_least_rational_multiple(beta):
    assert nu(beta) == nu_oracle((beta.re, beta.im))


def test_nu_zero():
    with pytest.raises(GaussLineError):
        nu(ZERO)
