"""Verification of the Bertrand-type statements on Gaussian lines.

For ``n > 1`` the weak statement asks for a Gaussian prime at an index in
``(n, n + N(alpha_n)]``, the strong one in ``(n, n + nu(alpha_n)]``.

Weak mode builds a chain of consecutive prime indices ``l_1 < l_2 < ...``
and checks each gap ``l_{i+1} - l_i <= N(alpha_{l_i})``. Because
``N(alpha_n)`` strictly increases for ``n >= 0`` on a canonical line, every
``n`` between two chain members is covered by the later one, so a gap-free
chain past ``n_max`` settles all ``1 < n <= n_max``. Strong mode has no such
monotonicity and checks every index.

Prime indices are found block by block: a small-prime sieve over the norm
polynomial strikes most composites, and survivors get a primality test.
"""
from __future__ import annotations

import json
import os
import time
from array import array
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from functools import lru_cache
from itertools import count
from math import gcd, isqrt
from typing import Iterator

from . import kernels
from .gaussint import GaussLineError
from .line import GaussianLine
from .primality import small_primes, sqrt_minus_one

DEFAULT_PRIME_BOUND = 10**4
DEFAULT_BLOCK = 1 << 15
CHECKPOINT_EVERY = 10**6
CHECKPOINT_SECONDS = 30.0

VERIFIED = "verified"
COUNTEREXAMPLE = "counterexample"
BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass(frozen=True)
class Walk:
    """Points ``(a + n c) + (b + n d) i``; the mirrored walk negates ``(c, d)``."""

    a: int
    b: int
    c: int
    d: int

    @classmethod
    def of(cls, line: GaussianLine, mirror: bool = False) -> Walk:
        s = -1 if mirror else 1
        return cls(line.alpha0.re, line.alpha0.im, s * line.delta.re, s * line.delta.im)

    def coords(self, n: int) -> tuple[int, int]:
        return self.a + n * self.c, self.b + n * self.d

    def norm(self, n: int) -> int:
        x, y = self.coords(n)
        return x * x + y * y

    def nu(self, n: int) -> int:
        x, y = self.coords(n)
        return (x * x + y * y) // gcd(x, y)


@lru_cache(maxsize=None)
def _sqrt_minus_one(q: int) -> int:
    return sqrt_minus_one(q)


def sieve_progressions(walk: Walk, prime_bound: int) -> tuple[array, array]:
    """Residues ``n mod q`` where ``q | N(alpha_n)``, for primes ``q <= prime_bound``.

    ``N(alpha_n) = A n^2 + 2 h n + C`` has discriminant ``-4 Delta^2``, so
    the roots mod odd ``q`` are ``(-h +- Delta*sqrt(-1)) / A``; they exist
    only when ``q | Delta`` or ``q = 1 (mod 4)``.
    """
    a, b, c, d = walk.a, walk.b, walk.c, walk.d
    A, h, C = c * c + d * d, a * c + b * d, a * a + b * b
    Delta = a * d - b * c
    qs, rs = array("q"), array("q")

    def add(q, r):
        qs.append(q)
        rs.append(r % q)

    for q in small_primes(prime_bound):
        if q == 2:
            for n in (0, 1):
                if (A * n * n + 2 * h * n + C) % 2 == 0:
                    add(2, n)
            continue
        if A % q:
            inv = pow(A, -1, q)
            if Delta % q == 0:
                add(q, -h * inv)
            elif q % 4 == 1:
                s = _sqrt_minus_one(q)
                add(q, (-h + Delta * s) * inv)
                add(q, (-h - Delta * s) * inv)
        elif (2 * h) % q:
            add(q, -C * pow(2 * h, -1, q))
        elif C % q == 0:  # pragma: no cover - impossible on primitive lines
            for r in range(q):
                add(q, r)
    return qs, rs


def exempt_range(walk: Walk, prime_bound: int) -> tuple[int, int]:
    """An index interval containing every ``n`` with ``N(alpha_n) <= prime_bound**2``.

    A small prime may itself be the norm, so these indices are never struck.
    """
    A = walk.c * walk.c + walk.d * walk.d
    h = walk.a * walk.c + walk.b * walk.d
    centre = -h // A
    radius = isqrt(prime_bound * prime_bound // A) + 2
    return centre - radius, centre + radius


class _Scanner:
    """Block scanner over one walk; prime indices per block are a pure function of the block."""

    def __init__(self, walk: Walk, prime_bound: int, block: int, threads: int):
        self.walk = walk
        self.block = block
        self.threads = max(1, threads)
        self.qs, self.rs = sieve_progressions(walk, prime_bound)
        self.elo, self.ehi = exempt_range(walk, prime_bound)

    def scan(self, lo: int, hi: int) -> list[int]:
        x0, y0 = self.walk.coords(lo)
        return kernels.scan_block(x0, y0, self.walk.c, self.walk.d, lo, hi, self.qs, self.rs, self.elo, self.ehi)

    def stream(self, start: int) -> Iterator[tuple[int, list[int]]]:
        """Yield ``(hi, primes in [lo, hi))`` for consecutive blocks from ``start``."""
        bounds = ((lo, lo + self.block) for lo in count(start, self.block))
        if self.threads == 1:
            for lo, hi in bounds:
                yield hi, self.scan(lo, hi)
            return
        with ThreadPoolExecutor(self.threads) as pool:
            while True:
                batch = [next(bounds) for _ in range(self.threads)]
                for (lo, hi), primes in zip(batch, pool.map(lambda r: self.scan(*r), batch)):
                    yield hi, primes


def _default_threads() -> int:
    return os.cpu_count() or 1


# --- single queries ---------------------------------------------------------


def sieve_candidates(line: GaussianLine, lo: int, hi: int, prime_bound: int = DEFAULT_PRIME_BOUND) -> bytearray:
    """Survivor flags for ``n`` in ``[lo, hi)``; a struck index is never prime."""
    line.require_primitive()
    walk = Walk.of(line)
    qs, rs = sieve_progressions(walk, prime_bound)
    elo, ehi = exempt_range(walk, prime_bound)
    return kernels.sieve_block(lo, hi, qs, rs, elo, ehi)


def prime_indices(line: GaussianLine, lo: int, hi: int, prime_bound: int = DEFAULT_PRIME_BOUND) -> list[int]:
    """All ``n`` in ``[lo, hi)`` with ``alpha_n`` a Gaussian prime."""
    line.require_primitive()
    if hi <= lo:
        return []
    return _Scanner(Walk.of(line), prime_bound, DEFAULT_BLOCK, 1).scan(lo, hi)


def next_prime_index(line: GaussianLine, start: int, window: int, prime_bound: int = DEFAULT_PRIME_BOUND) -> int | None:
    """Least ``n`` in ``(start, start + window]`` with ``alpha_n`` prime, or None."""
    line.require_primitive()
    if window <= 0:
        raise GaussLineError("window must be positive")
    scanner = _Scanner(Walk.of(line), prime_bound, DEFAULT_BLOCK, 1)
    lo, end = start + 1, start + window + 1
    while lo < end:
        hi = min(lo + DEFAULT_BLOCK, end)
        found = scanner.scan(lo, hi)
        if found:
            return found[0]
        lo = hi
    return None


def prime_ap_search(line: GaussianLine, k: int, n_bound: int, prime_bound: int = DEFAULT_PRIME_BOUND) -> list[int] | None:
    """Lexicographically least ``(start, step)`` giving ``k`` prime indices in ``[0, n_bound]``."""
    line.require_primitive()
    if k < 1:
        raise GaussLineError("k must be positive")
    primes = prime_indices(line, 0, n_bound + 1, prime_bound)
    if k == 1:
        return primes[:1] or None
    prime_set = set(primes)
    for start in primes:
        for step in range(1, (n_bound - start) // (k - 1) + 1):
            if all(start + j * step in prime_set for j in range(1, k)):
                return [start + j * step for j in range(k)]
    return None


# --- reports and checkpoints ------------------------------------------------


@dataclass
class BertrandReport:
    line: str
    mode: str
    n_max: int
    verdict: str
    counterexample_n: int | None
    primes_found: int
    max_window_fill: Fraction
    wall_time: float | None
    chain: list[int] | None = field(default=None, repr=False, compare=False)
    chain_tail: int | None = field(default=None, repr=False, compare=False)
    verified_up_to: int | None = field(default=None, repr=False, compare=False)

    FIELDS = ("line", "mode", "n_max", "verdict", "counterexample_n", "primes_found", "max_window_fill", "wall_time")

    def to_dict(self) -> dict:
        out = {name: getattr(self, name) for name in self.FIELDS}
        out["max_window_fill"] = float(self.max_window_fill)
        return out

    def csv_row(self) -> list:
        return [self.line, self.verdict, self.n_max, self.primes_found, float(self.max_window_fill)]


CSV_HEADER = ["line", "verdict", "n_max", "primes_found", "max_window_fill"]


@dataclass(frozen=True)
class Checkpoint:
    line: str
    verified_up_to: int
    chain_tail: int
    mode: str
    timestamp: str


def append_checkpoint(path: str, cp: Checkpoint) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(json.dumps(asdict(cp), sort_keys=False) + "\n")
        fh.flush()


def load_checkpoint(path: str, line: GaussianLine, mode: str) -> Checkpoint | None:
    """The last record for ``(line, mode)`` in a checkpoint file, if any."""
    if not os.path.exists(path):
        return None
    key = str(line)
    last = None
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            raw = raw.strip()
            if not raw:
                continue
            rec = json.loads(raw)
            if rec.get("line") == key and rec.get("mode") == mode:
                last = Checkpoint(**rec)
    return last


def _now() -> str:
    return datetime.now(timezone.utc).replace(microsecond=0).isoformat()


class _Checkpointer:
    def __init__(self, path: str | None, line: GaussianLine, mode: str, every: int, seconds: float):
        self.path, self.key, self.mode = path, str(line), mode
        self.every, self.seconds = every, seconds
        self.last_index = None
        self.last_time = time.monotonic()

    def maybe(self, verified_up_to: int, tail: int, force: bool = False) -> None:
        if self.path is None:
            return
        if self.last_index is None:
            self.last_index = verified_up_to
        due = verified_up_to - self.last_index >= self.every or time.monotonic() - self.last_time >= self.seconds
        if force or due:
            append_checkpoint(self.path, Checkpoint(self.key, verified_up_to, tail, self.mode, _now()))
            self.last_index = verified_up_to
            self.last_time = time.monotonic()


# --- verifiers --------------------------------------------------------------


def _line_label(line: GaussianLine, mirror: bool) -> str:
    return f"{line.alpha0};{-line.delta}" if mirror else str(line)


def verify_weak(
    line: GaussianLine,
    n_max: int,
    *,
    prime_bound: int = DEFAULT_PRIME_BOUND,
    threads: int | None = 1,
    block: int = DEFAULT_BLOCK,
    mirror: bool = False,
    max_scan: int | None = None,
    checkpoint: str | None = None,
    resume: bool = False,
    checkpoint_every: int = CHECKPOINT_EVERY,
    checkpoint_seconds: float = CHECKPOINT_SECONDS,
) -> BertrandReport:
    """Establish the weak statement for every ``1 < n <= n_max`` by a prime chain.

    The chain starts from the anchor ``n = 2`` (a chain member if
    ``alpha_2`` is prime) and repeatedly takes the next prime index. A gap
    exceeding ``N(alpha_anchor)`` is a counterexample at the anchor.
    ``primes_found`` counts chain members found by this call, so counts
    from a resumed run add up to the one-shot count.
    """
    line.require_primitive()
    if n_max <= 1:
        raise GaussLineError("n_max must exceed 1")
    if mirror and checkpoint:
        raise GaussLineError("checkpointing is only supported for the forward direction")
    started = time.perf_counter()
    walk = Walk.of(line, mirror)
    scanner = _Scanner(walk, prime_bound, block, threads or _default_threads())
    cps = _Checkpointer(checkpoint, line, "weak", checkpoint_every, checkpoint_seconds)

    chain: list[int] = []
    cp = load_checkpoint(checkpoint, line, "weak") if resume and checkpoint else None
    if cp is not None:
        anchor = cp.chain_tail
    else:
        anchor = 2
        if scanner.scan(2, 3):
            chain.append(2)
    anchor_norm = walk.norm(anchor)
    fill = Fraction(0)
    verdict, bad = None, None
    scanned = 0

    def report() -> BertrandReport:
        return BertrandReport(
            _line_label(line, mirror), "weak", n_max, verdict, bad, len(chain), fill,
            None, chain, anchor, anchor - 1,
        )

    if anchor > n_max:
        verdict = VERIFIED
    else:
        for hi, primes in scanner.stream(anchor + 1):
            for p in primes:
                if p - anchor > anchor_norm:
                    verdict, bad = COUNTEREXAMPLE, anchor
                    break
                fill = max(fill, Fraction(p - anchor, anchor_norm))
                chain.append(p)
                anchor, anchor_norm = p, walk.norm(p)
                cps.maybe(anchor - 1, anchor)
                if anchor > n_max:
                    verdict = VERIFIED
                    break
            if verdict is None and hi - 1 - anchor >= anchor_norm:
                verdict, bad = COUNTEREXAMPLE, anchor
            if verdict is not None:
                break
            scanned += block
            if max_scan is not None and scanned >= max_scan:
                verdict = BUDGET_EXHAUSTED
                break
    if chain or cp is not None:
        cps.maybe(anchor - 1, anchor, force=True)
    out = report()
    out.wall_time = time.perf_counter() - started
    return out


def verify_strong(
    line: GaussianLine,
    n_max: int,
    *,
    prime_bound: int = DEFAULT_PRIME_BOUND,
    threads: int | None = 1,
    block: int = DEFAULT_BLOCK,
    mirror: bool = False,
    max_scan: int | None = None,
    checkpoint: str | None = None,
    resume: bool = False,
    checkpoint_every: int = CHECKPOINT_EVERY,
    checkpoint_seconds: float = CHECKPOINT_SECONDS,
) -> BertrandReport:
    """Check every ``1 < n <= n_max`` for a prime index in ``(n, n + nu(alpha_n)]``.

    ``primes_found`` counts prime indices in ``[first n, verified_up_to]``.
    """
    line.require_primitive()
    if n_max <= 1:
        raise GaussLineError("n_max must exceed 1")
    if mirror and checkpoint:
        raise GaussLineError("checkpointing is only supported for the forward direction")
    started = time.perf_counter()
    walk = Walk.of(line, mirror)
    scanner = _Scanner(walk, prime_bound, block, threads or _default_threads())
    cps = _Checkpointer(checkpoint, line, "strong", checkpoint_every, checkpoint_seconds)

    first = 2
    if resume and checkpoint:
        cp = load_checkpoint(checkpoint, line, "strong")
        if cp is not None:
            first = cp.verified_up_to + 1
    stream = scanner.stream(first)
    pending: list[int] = []  # prime indices >= n not yet passed, ascending
    pos = 0
    frontier = first  # every index < frontier has been scanned
    fill = Fraction(0)
    found = 0
    verdict, bad = None, None
    n = first
    scanned = 0
    while n <= n_max:
        window = walk.nu(n)
        while True:
            while pos < len(pending) and pending[pos] <= n:
                if pending[pos] == n:
                    found += 1
                pos += 1
            # enough once n itself is scanned and the window holds a prime or is fully scanned
            if frontier > n and (pos < len(pending) or frontier - 1 >= n + window):
                break
            if max_scan is not None and scanned >= max_scan:
                verdict = BUDGET_EXHAUSTED
                break
            hi, primes = next(stream)
            pending.extend(primes)
            frontier = hi
            scanned += block
        if verdict is not None:
            break
        if pos > 4096:
            del pending[:pos]
            pos = 0
        nxt = pending[pos] if pos < len(pending) else None
        if nxt is None or nxt - n > window:
            verdict, bad = COUNTEREXAMPLE, n
            break
        fill = max(fill, Fraction(nxt - n, window))
        cps.maybe(n, nxt)
        n += 1
    if verdict is None:
        verdict = VERIFIED
    tail = next((p for p in pending[pos:] if p > n - 1), None)
    verified_up_to = n - 1
    if tail is not None:
        cps.maybe(verified_up_to, tail, force=True)
    return BertrandReport(
        _line_label(line, mirror), "strong", n_max, verdict, bad, found, fill,
        time.perf_counter() - started, None, tail, verified_up_to,
    )


def verify(line: GaussianLine, n_max: int, mode: str = "weak", **kwargs) -> BertrandReport:
    if mode == "weak":
        return verify_weak(line, n_max, **kwargs)
    if mode == "strong":
        return verify_strong(line, n_max, **kwargs)
    raise GaussLineError(f"unknown mode {mode!r}")
