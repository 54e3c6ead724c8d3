"""Pure-Python scanning kernels.

Reference implementation of the functions in ``_kernels.pyx``. It also
serves as the arbitrary-precision path for blocks whose coordinates do not
fit the compiled kernel's 32-bit bound.
"""
from __future__ import annotations

from .primality import is_rational_prime


def is_prime_u64(n: int) -> bool:
    return is_rational_prime(n)


def sieve_block(lo, hi, qs, rs, elo, ehi):
    """Survivor flags for ``n`` in ``[lo, hi)``: 0 where some ``n = r (mod q)`` strikes.

    Indices in ``[elo, ehi]`` are never struck.
    """
    size = hi - lo
    flags = bytearray(b"\x01") * size
    for q, r in zip(qs, rs):
        start = (r - lo) % q
        if start < size:
            flags[start::q] = bytes(len(range(start, size, q)))
    a, b = max(elo, lo), min(ehi, hi - 1)
    if a <= b:
        flags[a - lo : b - lo + 1] = b"\x01" * (b - a + 1)
    return flags


def scan_block(x0, y0, c, d, lo, hi, qs, rs, elo, ehi):
    """Indices ``n`` in ``[lo, hi)`` whose point ``x0 + (n-lo)c + (y0 + (n-lo)d)i`` is a Gaussian prime."""
    flags = sieve_block(lo, hi, qs, rs, elo, ehi)
    out = []
    for k, alive in enumerate(flags):
        if not alive:
            continue
        x = x0 + k * c
        y = y0 + k * d
        if x == 0 or y == 0:
            m = abs(x + y)
            if m % 4 == 3 and is_rational_prime(m):
                out.append(lo + k)
        elif is_rational_prime(x * x + y * y):
            out.append(lo + k)
    return out
