"""Exact Gaussian-integer arithmetic.

:class:`GaussianInt` is an immutable value type over Python ints, so every
operation is exact at any size. Euclidean division rounds each coordinate
of the exact quotient to the nearest integer, ties toward negative infinity.
"""
from __future__ import annotations

import re
from math import gcd as _igcd

__all__ = [
    "GaussianInt",
    "GaussLineError",
    "BudgetExceeded",
    "ZERO",
    "ONE",
    "I",
    "UNITS",
    "gdivmod",
    "ggcd",
    "gxgcd",
    "divides",
    "canonical_associate",
    "is_canonical",
    "is_unit",
    "nu",
]


class GaussLineError(ValueError):
    """Base class for domain errors raised by this package."""


class BudgetExceeded(GaussLineError):
    """A bounded search (factorization, prime search, scan) ran out of budget."""


_GI_RE = re.compile(
    r"""^(?:
        (?P<re>[+-]?\d+)(?:(?P<isign>[+-])(?P<im>\d*)i)?   # a, a+bi, a-i
      | (?P<pure>[+-]?\d*)i                                # bi, i, -i
    )$""",
    re.VERBOSE,
)


class GaussianInt:
    __slots__ = ("re", "im")

    re: int
    im: int

    def __init__(self, re: int = 0, im: int = 0) -> None:
        object.__setattr__(self, "re", int(re))
        object.__setattr__(self, "im", int(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianInt is immutable")

    @classmethod
    def coerce(cls, value) -> GaussianInt:
        if isinstance(value, GaussianInt):
            return value
        if isinstance(value, int):
            return cls(value, 0)
        if isinstance(value, str):
            return cls.parse(value)
        raise TypeError(f"cannot convert {type(value).__name__} to GaussianInt")

    @classmethod
    def parse(cls, text: str) -> GaussianInt:
        """Parse ``a+bi``, ``a-bi``, ``a``, ``bi``, ``i`` (no spaces)."""
        m = _GI_RE.match(text.strip())
        if m is None:
            raise GaussLineError(f"not a Gaussian integer: {text!r}")
        if m.group("pure") is not None:
            coeff = m.group("pure")
            if coeff in ("", "+"):
                return cls(0, 1)
            if coeff == "-":
                return cls(0, -1)
            return cls(0, int(coeff))
        real = int(m.group("re"))
        if m.group("isign") is None:
            return cls(real, 0)
        mag = int(m.group("im")) if m.group("im") else 1
        return cls(real, mag if m.group("isign") == "+" else -mag)

    def __str__(self) -> str:
        a, b = self.re, self.im
        if b == 0:
            return str(a)
        mag = "" if abs(b) == 1 else str(abs(b))
        if a == 0:
            return f"{'-' if b < 0 else ''}{mag}i"
        return f"{a}{'-' if b < 0 else '+'}{mag}i"

    def __repr__(self) -> str:
        return f"GaussianInt({self.re}, {self.im})"

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianInt):
            return self.re == other.re and self.im == other.im
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        # agree with int hashing so that GaussianInt(5) and 5 collide in sets
        return hash(self.re) if self.im == 0 else hash((self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def __iter__(self):
        yield self.re
        yield self.im

    # ring operations
    def __add__(self, other):
        if isinstance(other, int):
            return GaussianInt(self.re + other, self.im)
        if isinstance(other, GaussianInt):
            return GaussianInt(self.re + other.re, self.im + other.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> GaussianInt:
        return GaussianInt(-self.re, -self.im)

    def __sub__(self, other):
        if isinstance(other, int):
            return GaussianInt(self.re - other, self.im)
        if isinstance(other, GaussianInt):
            return GaussianInt(self.re - other.re, self.im - other.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return GaussianInt(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return GaussianInt(self.re * other, self.im * other)
        if isinstance(other, GaussianInt):
            a, b, c, d = self.re, self.im, other.re, other.im
            return GaussianInt(a * c - b * d, a * d + b * c)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> GaussianInt:
        if k < 0:
            raise GaussLineError("negative exponent")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        return gdivmod(self, GaussianInt.coerce(other))

    def __floordiv__(self, other):
        return gdivmod(self, GaussianInt.coerce(other))[0]

    def __mod__(self, other):
        return gdivmod(self, GaussianInt.coerce(other))[1]

    def conjugate(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def trace(self) -> int:
        return 2 * self.re

    def exact_div(self, other) -> GaussianInt:
        """Divide, raising if ``other`` does not divide ``self``."""
        q, r = gdivmod(self, GaussianInt.coerce(other))
        if r:
            raise GaussLineError(f"{other} does not divide {self}")
        return q


ZERO = GaussianInt(0, 0)
ONE = GaussianInt(1, 0)
I = GaussianInt(0, 1)
UNITS = (ONE, I, GaussianInt(-1, 0), GaussianInt(0, -1))


def _round_half_down(num: int, den: int) -> int:
    # nearest integer to num/den (den > 0), ties toward -inf
    return -((den - 2 * num) // (2 * den))


def gdivmod(beta: GaussianInt, gamma: GaussianInt) -> tuple[GaussianInt, GaussianInt]:
    """Euclidean division ``beta = q*gamma + r`` with ``N(r) <= N(gamma)/2``."""
    n = gamma.norm()
    if n == 0:
        raise ZeroDivisionError("Gaussian division by zero")
    # beta * conj(gamma)
    x = beta.re * gamma.re + beta.im * gamma.im
    y = beta.im * gamma.re - beta.re * gamma.im
    q = GaussianInt(_round_half_down(x, n), _round_half_down(y, n))
    return q, beta - q * gamma


def divides(gamma: GaussianInt, beta: GaussianInt) -> bool:
    """True iff ``gamma | beta``; ``0 | beta`` only for ``beta = 0``."""
    n = gamma.norm()
    if n == 0:
        return not beta
    x = beta.re * gamma.re + beta.im * gamma.im
    y = beta.im * gamma.re - beta.re * gamma.im
    return x % n == 0 and y % n == 0


def is_unit(beta: GaussianInt) -> bool:
    return beta.norm() == 1


def is_canonical(beta: GaussianInt) -> bool:
    return beta.re > 0 and beta.im >= 0


def canonical_associate(beta: GaussianInt) -> GaussianInt:
    """The associate of ``beta`` with ``re > 0`` and ``im >= 0`` (0 maps to 0)."""
    a, b = beta.re, beta.im
    if a == 0 and b == 0:
        return ZERO
    if a > 0 and b >= 0:
        return beta
    if a <= 0 and b > 0:  # multiply by -i
        return GaussianInt(b, -a)
    if a < 0 and b <= 0:
        return GaussianInt(-a, -b)
    return GaussianInt(-b, a)  # a >= 0, b < 0: multiply by i


def ggcd(beta: GaussianInt, gamma: GaussianInt) -> GaussianInt:
    """Greatest common divisor, normalised to its canonical associate."""
    if not beta and not gamma:
        raise GaussLineError("gcd(0, 0) is undefined")
    while gamma:
        beta, gamma = gamma, gdivmod(beta, gamma)[1]
    return canonical_associate(beta)


def gxgcd(beta: GaussianInt, gamma: GaussianInt) -> tuple[GaussianInt, GaussianInt, GaussianInt]:
    """Extended Euclid: returns ``(g, x, y)`` with ``beta*x + gamma*y = g``.

    ``g`` is not normalised; it is some associate of the gcd.
    """
    x0, x1, y0, y1 = ONE, ZERO, ZERO, ONE
    while gamma:
        q, r = gdivmod(beta, gamma)
        beta, gamma = gamma, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return beta, x0, y0


def nu(beta: GaussianInt) -> int:
    """Smallest positive rational integer divisible by ``beta``: ``N(beta)/gcd(re, im)``."""
    if not beta:
        raise GaussLineError("nu(0) is undefined")
    return beta.norm() // _igcd(beta.re, beta.im)
