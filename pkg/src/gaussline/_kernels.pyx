# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled scanning kernels; see ``_pykernels`` for the reference semantics.

Points must satisfy ``|x|, |y| < 2**31`` over the scanned block so that
norms fit in 64 bits; the dispatcher in ``kernels`` enforces this.
"""
from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport malloc, free

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

cdef uint64_t[25] SMALL = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                           47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97]


cdef inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) noexcept nogil:
    return <uint64_t>((<u128>a * b) % m)


cdef inline uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) noexcept nogil:
    cdef uint64_t r = 1
    a %= m
    while e:
        if e & 1:
            r = mulmod(r, a, m)
        a = mulmod(a, a, m)
        e >>= 1
    return r


cdef bint _is_prime(uint64_t n) noexcept nogil:
    cdef int i, j, s = 0
    cdef uint64_t d, x
    if n < 2:
        return False
    for i in range(25):
        if n % SMALL[i] == 0:
            return n == SMALL[i]
    if n < 9409:
        return True
    d = n - 1
    while d % 2 == 0:
        d //= 2
        s += 1
    # first twelve primes are a deterministic base set below 3.3e24
    for i in range(12):
        x = powmod(SMALL[i], d, n)
        if x == 1 or x == n - 1:
            continue
        for j in range(s - 1):
            x = mulmod(x, x, n)
            if x == n - 1:
                break
        else:
            return False
    return True


cdef inline bint _gaussian_prime(int64_t x, int64_t y) noexcept nogil:
    cdef uint64_t m
    if x == 0 or y == 0:
        m = <uint64_t>(x + y if x + y >= 0 else -(x + y))
        return m % 4 == 3 and _is_prime(m)
    return _is_prime(<uint64_t>(x * x) + <uint64_t>(y * y))


def is_prime_u64(n):
    if n < 0 or n >= 2**64:
        raise OverflowError("is_prime_u64 takes 0 <= n < 2**64")
    return bool(_is_prime(n))


cdef void _sieve(unsigned char *flags, int64_t lo, int64_t hi,
                 const int64_t[:] qs, const int64_t[:] rs,
                 int64_t elo, int64_t ehi) noexcept nogil:
    cdef int64_t size = hi - lo, k, q, start, a, b
    cdef Py_ssize_t j
    for k in range(size):
        flags[k] = 1
    for j in range(qs.shape[0]):
        q = qs[j]
        start = (rs[j] - lo) % q
        if start < 0:
            start += q
        k = start
        while k < size:
            flags[k] = 0
            k += q
    a = elo if elo > lo else lo
    b = ehi if ehi < hi - 1 else hi - 1
    k = a
    while k <= b:
        flags[k - lo] = 1
        k += 1


def sieve_block(int64_t lo, int64_t hi, qs, rs, int64_t elo, int64_t ehi):
    cdef const int64_t[:] qv = qs
    cdef const int64_t[:] rv = rs
    out = bytearray(hi - lo)
    cdef unsigned char[:] view = out
    if hi > lo:
        with nogil:
            _sieve(&view[0], lo, hi, qv, rv, elo, ehi)
    return out


def scan_block(int64_t x0, int64_t y0, int64_t c, int64_t d, int64_t lo, int64_t hi,
               qs, rs, int64_t elo, int64_t ehi):
    cdef const int64_t[:] qv = qs
    cdef const int64_t[:] rv = rs
    cdef int64_t size = hi - lo, k, count = 0
    if size <= 0:
        return []
    cdef unsigned char *flags = <unsigned char *>malloc(size)
    cdef int64_t *hits = <int64_t *>malloc(size * sizeof(int64_t))
    if flags == NULL or hits == NULL:
        free(flags)
        free(hits)
        raise MemoryError()
    try:
        with nogil:
            _sieve(flags, lo, hi, qv, rv, elo, ehi)
            for k in range(size):
                if flags[k] and _gaussian_prime(x0 + k * c, y0 + k * d):
                    hits[count] = lo + k
                    count += 1
        return [hits[k] for k in range(count)]
    finally:
        free(flags)
        free(hits)
