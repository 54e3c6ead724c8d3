import random

import pytest
import sympy
from hypothesis import given, strategies as st

from conftest import gaussian_ints
from oracles import is_gaussian_prime as gp_oracle

from gaussline.gaussint import BudgetExceeded, GaussianInt, GaussLineError, is_canonical
from gaussline.primality import (
    BUDGET_ENV,
    PrimeTag,
    _strong_lucas,
    classify_prime,
    default_budget,
    divisors,
    factor_gaussian,
    factor_integer,
    is_gaussian_prime,
    is_rational_prime,
    primality_regime,
    small_primes,
    split_prime,
    sqrt_minus_one,
)

G = GaussianInt


def test_small_range_matches_sympy():
    assert [n for n in range(-10, 20000) if is_rational_prime(n)] == [
        n for n in range(-10, 20000) if sympy.isprime(abs(n))
    ]


def test_small_primes_sieve():
    assert small_primes(100) == tuple(sympy.primerange(2, 101))


@pytest.mark.parametrize("bits", [40, 64, 70, 128, 256])
def test_random_against_sympy(bits):
    rng = random.Random(bits)
    for _ in range(400):
        n = rng.getrandbits(bits) | 1
        assert is_rational_prime(n) == sympy.isprime(n), n


@pytest.mark.parametrize(
    "n",
    [
        3825123056546413051,  # strong pseudoprime to bases 2..23
        318665857834031151167461,  # strong pseudoprime to the first twelve prime bases
        3317044064679887385961981,  # ... and to the first thirteen
        561, 41041, 825265, 321197185,  # Carmichael numbers
        (2**61 - 1) * (2**31 - 1),
        (2**89 - 1) ** 2,
    ],
)
def test_composites_rejected(n):
    assert not is_rational_prime(n)


@pytest.mark.parametrize("n", [2**61 - 1, 2**89 - 1, 2**107 - 1, 2**127 - 1, 2**521 - 1, 10**18 + 9])
def test_large_primes(n):
    assert is_rational_prime(n)


@pytest.mark.parametrize("n", [5459, 5777, 10877, 16109, 18971, 22499, 24569])
def test_strong_lucas_pseudoprimes(n):
    # composite but pass the strong Lucas test with Selfridge parameters
    assert not sympy.isprime(n)
    assert _strong_lucas(n)


def test_strong_lucas_on_primes():
    assert all(_strong_lucas(p) for p in sympy.primerange(7, 5000))


def test_regime():
    assert primality_regime(2**64 - 1) == "deterministic"
    assert primality_regime(2**64) == "bpsw"


@given(gaussian_ints(300))
def test_gaussian_primality_matches_oracle(z):
    assert is_gaussian_prime(z) == gp_oracle(z.re, z.im)


@pytest.mark.parametrize("p", [5, 13, 17, 29, 10**9 + 9, 10**18 + 9])
def test_sqrt_minus_one(p):
    for seed in range(3):
        x = sqrt_minus_one(p, seed)
        assert x * x % p == p - 1


def test_sqrt_minus_one_rejects():
    with pytest.raises(GaussLineError):
        sqrt_minus_one(7)


def test_split_prime():
    for p in sympy.primerange(5, 3000):
        if p % 4 == 1:
            pi = split_prime(p)
            assert pi.norm() == p and pi.re > pi.im > 0
    assert split_prime(5) == G(2, 1)
    assert split_prime(13) == G(3, 2)


@pytest.mark.parametrize(
    "p, text", [(2, "Ramified 1+i"), (3, "Inert"), (5, "Split 2+i"), (7, "Inert"), (13, "Split 3+2i")]
)
def test_classify(p, text):
    assert str(classify_prime(p)) == text


def test_classify_tags():
    assert classify_prime(11).tag is PrimeTag.INERT
    for bad in (0, 1, 4, -5, 9):
        with pytest.raises(GaussLineError):
            classify_prime(bad)


@given(st.integers(1, 10**15))
def test_factor_integer_against_sympy(n):
    assert factor_integer(n) == sympy.factorint(n)


def test_factor_integer_pollard_path():
    n = 1000003 * 1000033 * 999999000001
    assert factor_integer(n) == sympy.factorint(n)
    assert factor_integer(-12) == {2: 2, 3: 1}
    with pytest.raises(GaussLineError):
        factor_integer(0)


def test_factor_budget():
    p, q = sympy.nextprime(2**70), sympy.nextprime(2**72)
    with pytest.raises(BudgetExceeded):
        factor_integer(p * q, budget=1000)


def test_budget_environment(monkeypatch):
    monkeypatch.setenv(BUDGET_ENV, "77")
    assert default_budget() == 77
    monkeypatch.setenv(BUDGET_ENV, "junk")
    with pytest.raises(GaussLineError):
        default_budget()
    monkeypatch.delenv(BUDGET_ENV)
    assert default_budget(5) == 5


def test_divisors():
    assert divisors(8234) == [1, 2, 23, 46, 179, 358, 4117, 8234]
    assert divisors(-12) == [1, 2, 3, 4, 6, 12]


def test_factor_gaussian_examples():
    f = factor_gaussian(G(2, 6))
    assert str(f) == "-i * (1+i)^3 * (2+i)^1"
    f = factor_gaussian(G(13))
    assert f.unit == G(0, -1) and f.factors == ((G(2, 3), 1), (G(3, 2), 1))
    assert factor_gaussian(G(0, 1)).factors == ()
    with pytest.raises(GaussLineError):
        factor_gaussian(G(0))


@given(gaussian_ints(10**6, nonzero=True))
def test_factor_gaussian_reconstructs(z):
    f = factor_gaussian(z)
    assert f.value() == z
    assert f.unit.norm() == 1
    keys = [(pi.norm(), pi.re, pi.im) for pi, _ in f.factors]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    for pi, e in f.factors:
        assert e > 0 and is_canonical(pi) and gp_oracle(pi.re, pi.im)
