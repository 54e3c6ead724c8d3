"""Rational and Gaussian primality, prime splitting and factorization.

Rational primality is deterministic Miller-Rabin below 2**64 and a
Baillie-PSW test (strong base-2 plus strong Lucas) above, which is
probabilistic in principle though no counterexample is known.
"""
from __future__ import annotations

import os
import random
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import gcd, isqrt

from .gaussint import (
    BudgetExceeded,
    GaussianInt,
    GaussLineError,
    canonical_associate,
    gdivmod,
    ggcd,
)

TRIAL_DIVISION_LIMIT = 10**6
DEFAULT_RHO_BUDGET = 10**6
BUDGET_ENV = "GAUSSLINE_BUDGET"

_MR_BASES_64 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


def default_budget(fallback: int = DEFAULT_RHO_BUDGET) -> int:
    """Budget from ``GAUSSLINE_BUDGET`` if set, else ``fallback``."""
    raw = os.environ.get(BUDGET_ENV)
    if raw is None or raw == "":
        return fallback
    try:
        value = int(raw)
    except ValueError:
        raise GaussLineError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    if value <= 0:
        raise GaussLineError(f"{BUDGET_ENV} must be positive")
    return value


@lru_cache(maxsize=8)
def small_primes(limit: int) -> tuple[int, ...]:
    """All primes ``<= limit``."""
    if limit < 2:
        return ()
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return tuple(i for i, f in enumerate(flags) if f)


def _strong_probable_prime(n: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas(n: int) -> bool:
    # Selfridge method A parameters: first D in 5, -7, 9, -11, ... with (D/n) = -1
    r = isqrt(n)
    if r * r == n:
        return False
    D = 5
    while True:
        j = _jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
    P, Q = 1, (1 - D) // 4
    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # binary Lucas chain for U_d, V_d
    U, V, Qk = 1, P, Q % n
    inv2 = (n + 1) // 2
    for bit in bin(d)[3:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = (P * U + V) * inv2 % n, (D * U + P * V) * inv2 % n
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return True
    return False


def is_rational_prime(n: int) -> bool:
    """True iff ``|n|`` is a rational prime."""
    n = abs(n)
    if n < 2:
        return False
    for p in _SMALL:
        if n % p == 0:
            return n == p
    if n < 97 * 97:
        return True
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < 1 << 64:
        return all(_strong_probable_prime(n, a, d, s) for a in _MR_BASES_64)
    return _strong_probable_prime(n, 2, d, s) and _strong_lucas(n)


def primality_regime(n: int) -> str:
    """``"deterministic"`` below 2**64, ``"bpsw"`` above."""
    return "deterministic" if abs(n) < 1 << 64 else "bpsw"


class PrimeTag(str, Enum):
    RAMIFIED = "Ramified"
    SPLIT = "Split"
    INERT = "Inert"


@dataclass(frozen=True)
class PrimeClass:
    tag: PrimeTag
    witness: GaussianInt | None = None

    def __str__(self) -> str:
        return self.tag.value if self.witness is None else f"{self.tag.value} {self.witness}"


def sqrt_minus_one(p: int, seed: int = 0) -> int:
    """Some ``x`` with ``x*x = -1 (mod p)`` for a prime ``p = 1 (mod 4)``.

    Draws residues ``a`` from a generator seeded by ``seed`` and returns
    ``a**((p-1)/4)`` once that squares to ``-1``.
    """
    if p % 4 != 1:
        raise GaussLineError(f"-1 is not a square modulo {p}")
    rng = random.Random(seed)
    e = (p - 1) // 4
    while True:
        a = rng.randrange(2, p - 1)
        x = pow(a, e, p)
        if x * x % p == p - 1:
            return x


def _orient_split(pi: GaussianInt) -> GaussianInt:
    # of the two canonical primes over p, {x+yi, y+xi}, keep the one with re > im
    pi = canonical_associate(pi)
    return pi if pi.re > pi.im else GaussianInt(pi.im, pi.re)


@lru_cache(maxsize=4096)
def split_prime(p: int) -> GaussianInt:
    """The canonical prime ``x+yi`` (``x > y > 0``) of norm ``p = 1 (mod 4)``."""
    x = sqrt_minus_one(p)
    pi = ggcd(GaussianInt(p, 0), GaussianInt(x, 1))
    if pi.norm() != p:  # pragma: no cover - contradicts p prime
        raise GaussLineError(f"failed to split {p}")
    return _orient_split(pi)


def classify_prime(p: int) -> PrimeClass:
    if p <= 1 or not is_rational_prime(p):
        raise GaussLineError(f"{p} is not a rational prime")
    if p == 2:
        return PrimeClass(PrimeTag.RAMIFIED, GaussianInt(1, 1))
    if p % 4 == 1:
        return PrimeClass(PrimeTag.SPLIT, split_prime(p))
    return PrimeClass(PrimeTag.INERT)


def is_gaussian_prime(beta: GaussianInt) -> bool:
    a, b = beta.re, beta.im
    if a == 0 or b == 0:
        m = abs(a + b)
        return m % 4 == 3 and is_rational_prime(m)
    return is_rational_prime(a * a + b * b)


# --- rational factorization -------------------------------------------------


def _pollard_brent(n: int, rng: random.Random, budget: int) -> int:
    # returns a non-trivial factor of composite odd n, or raises when out of budget
    spent = 0
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g, r, q = 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            spent += r
            if g == 1 and spent > budget:
                raise BudgetExceeded(f"factorization budget of {budget} iterations exhausted on {n}")
            r *= 2
        if g == n:
            while True:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
                if g > 1:
                    break
        if g != n:
            return g


def factor_integer(n: int, budget: int | None = None, seed: int = 0) -> dict[int, int]:
    """Prime factorization of ``|n|`` as ``{p: e}``; trial division then Pollard rho."""
    n = abs(n)
    if n == 0:
        raise GaussLineError("cannot factor 0")
    budget = default_budget() if budget is None else budget
    out: dict[int, int] = {}
    limit = min(TRIAL_DIVISION_LIMIT, isqrt(n))
    for p in small_primes(TRIAL_DIVISION_LIMIT):
        if p > limit:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
            limit = min(limit, isqrt(n))
    if n == 1:
        return out
    rng = random.Random(seed)
    stack = [n]
    while stack:
        m = stack.pop()
        if m < TRIAL_DIVISION_LIMIT**2 or is_rational_prime(m):
            # every factor below 10**6 was already removed, so m is prime
            out[m] = out.get(m, 0) + 1
            continue
        f = _pollard_brent(m, rng, budget)
        stack.extend((f, m // f))
    return dict(sorted(out.items()))


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of ``|n|`` (``n != 0``)."""
    divs = [1]
    for p, e in factor_integer(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


# --- Gaussian factorization -------------------------------------------------


@dataclass(frozen=True)
class GaussianFactorization:
    unit: GaussianInt
    factors: tuple[tuple[GaussianInt, int], ...]

    def value(self) -> GaussianInt:
        out = self.unit
        for pi, e in self.factors:
            out = out * pi**e
        return out

    def __str__(self) -> str:
        parts = [str(self.unit)] + [f"({pi})^{e}" for pi, e in self.factors]
        return " * ".join(parts)


def valuation(pi: GaussianInt, beta: GaussianInt) -> tuple[int, GaussianInt]:
    """``(k, beta / pi**k)`` with ``k`` maximal; ``beta`` must be non-zero."""
    k = 0
    while True:
        q, r = gdivmod(beta, pi)
        if r:
            return k, beta
        beta, k = q, k + 1


def factor_gaussian(beta: GaussianInt, budget: int | None = None) -> GaussianFactorization:
    """Unit times canonical prime powers, sorted by ``(norm, re, im)``."""
    if not beta:
        raise GaussLineError("cannot factor 0")
    rest = beta
    factors: list[tuple[GaussianInt, int]] = []
    for p, e in factor_integer(beta.norm(), budget).items():
        if p == 2:
            k, rest = valuation(GaussianInt(1, 1), rest)
            factors.append((GaussianInt(1, 1), k))
        elif p % 4 == 3:
            factors.append((GaussianInt(p, 0), e // 2))
            rest = rest.exact_div(p ** (e // 2))
        else:
            pi = split_prime(p)
            k, rest = valuation(pi, rest)
            if k:
                factors.append((pi, k))
            if e - k:
                bar = canonical_associate(pi.conjugate())
                rest = rest.exact_div(bar ** (e - k))
                factors.append((bar, e - k))
    if rest.norm() != 1:  # pragma: no cover - contradicts unique factorization
        raise GaussLineError(f"factorization of {beta} left cofactor {rest}")
    factors.sort(key=lambda f: (f[0].norm(), f[0].re, f[0].im))
    return GaussianFactorization(rest, tuple(factors))


__all__ = [
    "BUDGET_ENV",
    "GaussianFactorization",
    "PrimeClass",
    "PrimeTag",
    "classify_prime",
    "default_budget",
    "divisors",
    "factor_gaussian",
    "factor_integer",
    "is_gaussian_prime",
    "is_rational_prime",
    "primality_regime",
    "small_primes",
    "split_prime",
    "sqrt_minus_one",
    "valuation",
]
