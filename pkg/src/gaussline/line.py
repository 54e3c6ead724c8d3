"""Canonical Gaussian lines.

A line is stored as ``(alpha0, delta)``: ``delta = c+di`` with
``gcd(c, d) = 1`` and ``c > 0`` (or ``delta = i`` for vertical lines), and
``alpha0`` the point of least norm, ties going to the larger real part.
The points on the line are ``alpha0 + n*delta`` for rational ``n``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .gaussint import GaussianInt, GaussLineError, ggcd, is_unit


def _normalise_direction(direction: GaussianInt) -> GaussianInt:
    c, d = direction.re, direction.im
    if c == 0 and d == 0:
        raise GaussLineError("direction must be non-zero")
    if c == 0:
        return GaussianInt(0, 1)
    g = gcd(c, d)
    c, d = c // g, d // g
    if c < 0:
        c, d = -c, -d
    return GaussianInt(c, d)


@dataclass(frozen=True)
class GaussianLine:
    alpha0: GaussianInt
    delta: GaussianInt
    Delta: int
    primitive: bool

    @classmethod
    def from_point_direction(cls, point, direction) -> GaussianLine:
        point = GaussianInt.coerce(point)
        delta = _normalise_direction(GaussianInt.coerce(direction))
        a, b, c, d = point.re, point.im, delta.re, delta.im
        A = c * c + d * d
        h = a * c + b * d
        # real vertex of f(n) = A n^2 + 2 h n + N(point) is -h/A
        lo = (-h) // A
        f_lo = A * lo * lo + 2 * h * lo
        f_hi = A * (lo + 1) * (lo + 1) + 2 * h * (lo + 1)
        # on a tie the upper candidate has the larger real part (c > 0)
        n = lo if f_lo < f_hi else lo + 1
        alpha0 = point + delta * n
        return cls(
            alpha0=alpha0,
            delta=delta,
            Delta=alpha0.re * d - alpha0.im * c,
            primitive=is_unit(ggcd(alpha0, delta)),
        )

    @classmethod
    def from_two_points(cls, p, q) -> GaussianLine:
        p, q = GaussianInt.coerce(p), GaussianInt.coerce(q)
        if p == q:
            raise GaussLineError("two distinct points are required")
        return cls.from_point_direction(p, q - p)

    @classmethod
    def parse(cls, text: str) -> GaussianLine:
        """Parse ``"alpha0;delta"``; the pair is re-canonicalised."""
        parts = text.split(";")
        if len(parts) != 2:
            raise GaussLineError(f"line must look like 'alpha0;delta', got {text!r}")
        return cls.from_point_direction(GaussianInt.parse(parts[0]), GaussianInt.parse(parts[1]))

    def __str__(self) -> str:
        return f"{self.alpha0};{self.delta}"

    def point_at(self, n: int) -> GaussianInt:
        return self.alpha0 + self.delta * n

    def norm_poly(self) -> tuple[int, int, int]:
        """Coefficients ``(A, B, C)`` of ``N(alpha_n) = A n^2 + B n + C``."""
        a, b, c, d = self.alpha0.re, self.alpha0.im, self.delta.re, self.delta.im
        return c * c + d * d, 2 * (a * c + b * d), a * a + b * b

    def norm_at(self, n: int) -> int:
        A, B, C = self.norm_poly()
        return (A * n + B) * n + C

    def require_primitive(self) -> None:
        if not self.primitive:
            raise GaussLineError(f"line {self} is not primitive")


def from_point_direction(point, direction) -> GaussianLine:
    return GaussianLine.from_point_direction(point, direction)


def from_two_points(p, q) -> GaussianLine:
    return GaussianLine.from_two_points(p, q)


def point_at(line: GaussianLine, n: int) -> GaussianInt:
    return line.point_at(n)


def norm_at(line: GaussianLine, n: int) -> int:
    return line.norm_at(n)


def norm_poly(line: GaussianLine) -> tuple[int, int, int]:
    return line.norm_poly()
