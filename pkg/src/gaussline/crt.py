"""Chinese remaindering over Z, Z[i] and along Gaussian lines, plus line synthesis.

:func:`construct_line` builds a primitive line whose ``b_j``-th point is
divisible by ``mu_j`` for each constraint ``(mu_j, b_j)``. The steps:

1. ``gamma_j = gcd(mu_j, b_j)``, ``omega_j = mu_j / gamma_j`` and
   ``alpha0 = lambda * prod(gamma_j)``.
2. ``tau`` solves ``x = 1 (mod beta)`` and
   ``x = -(alpha0/gamma_j) * kappa_j**-1 (mod omega_j)`` where
   ``kappa_j = b_j/gamma_j`` and ``beta`` is the product of the primes of
   ``alpha0`` that do not divide ``prod(omega_j)``.
3. ``delta = c+di`` is chosen congruent to ``tau = r+si`` modulo
   ``beta*prod(omega_j)`` through a prime ``p`` in a residue class mod
   ``M = N(beta*prod(omega_j))``, large enough that ``alpha0`` is the
   strict norm minimiser on the resulting line.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import gcd

from .divisibility import crt_pair, divisor_index, divisor_set_contains
from .gaussint import (
    ONE,
    BudgetExceeded,
    GaussianInt,
    GaussLineError,
    divides,
    gdivmod,
    ggcd,
    gxgcd,
    is_unit,
    nu,
)
from .line import GaussianLine
from .primality import default_budget, factor_gaussian, is_rational_prime

DEFAULT_PRIME_CANDIDATES = 10**6


@dataclass(frozen=True)
class CrtSolution:
    value: GaussianInt | int
    modulus: GaussianInt | int

    def __str__(self) -> str:
        return f"{self.value} mod {self.modulus}"


def crt_integers(congruences) -> CrtSolution:
    """Solve ``x = r_j (mod m_j)`` over Z for pairwise coprime positive moduli."""
    t, modulus = 0, 1
    for j, (r, m) in enumerate(congruences):
        if m <= 0:
            raise GaussLineError(f"modulus {m} must be positive")
        if gcd(m, modulus) != 1:
            raise GaussLineError(f"modulus {m} (congruence {j}) is not coprime to the earlier moduli")
        t, modulus = crt_pair(t, modulus, r, m)
    return CrtSolution(t, modulus)


def crt_gaussian(congruences) -> CrtSolution:
    """Solve ``x = beta_j (mod mu_j)`` over Z[i] for pairwise coprime moduli."""
    pairs = [(GaussianInt.coerce(r), GaussianInt.coerce(m)) for r, m in congruences]
    if not pairs:
        raise GaussLineError("at least one congruence is required")
    for j, (_, m) in enumerate(pairs):
        if not m or is_unit(m):
            raise GaussLineError(f"modulus {m} (congruence {j}) must be neither zero nor a unit")
    for j in range(len(pairs)):
        for k in range(j + 1, len(pairs)):
            if not is_unit(ggcd(pairs[j][1], pairs[k][1])):
                raise GaussLineError(
                    f"moduli {pairs[j][1]} (congruence {j}) and {pairs[k][1]} (congruence {k}) are not coprime"
                )
    x, modulus = gdivmod(pairs[0][0], pairs[0][1])[1], pairs[0][1]
    for r, m in pairs[1:]:
        g, u, _ = gxgcd(modulus, m)
        # modulus*u = g (mod m) with g a unit, so modulus*(u/g) = 1 (mod m)
        inv = u * g.conjugate()
        x = x + modulus * ((r - x) * inv)
        modulus = modulus * m
        x = gdivmod(x, modulus)[1]
    return CrtSolution(x, modulus)


def crt_line(line: GaussianLine, constraints, budget: int | None = None) -> CrtSolution:
    """Least ``t >= 0`` with ``mu_j | alpha_{t+b_j}`` for every ``(mu_j, b_j)``."""
    line.require_primitive()
    pairs = [(GaussianInt.coerce(mu), int(b)) for mu, b in constraints]
    if not pairs:
        raise GaussLineError("at least one constraint is required")
    congruences = []
    for mu, b in pairs:
        if not mu:
            raise GaussLineError("mu must be non-zero")
        if is_unit(mu):
            # divides every point: the trivial class mod 1
            congruences.append((0, 1))
            continue
        wit = divisor_set_contains(line, mu, budget) if line.Delta else divisor_index(line, mu)
        if not wit.member:
            raise GaussLineError(f"{mu} does not divide any point of {line}")
        congruences.append((wit.residue - b, wit.modulus))
    mods = [m for _, m in congruences]
    for j in range(len(mods)):
        for k in range(j + 1, len(mods)):
            if gcd(mods[j], mods[k]) != 1:
                raise GaussLineError(
                    f"nu({pairs[j][0]}) = {mods[j]} and nu({pairs[k][0]}) = {mods[k]} are not coprime"
                )
    return crt_integers(congruences)


# --- line synthesis ---------------------------------------------------------


@dataclass(frozen=True)
class ConstructionPlan:
    gammas: tuple[GaussianInt, ...]
    lam: GaussianInt
    omegas: tuple[GaussianInt, ...]
    beta: GaussianInt
    tau: GaussianInt
    M: int
    prime: int = field(default=0)

    def to_dict(self) -> dict:
        return {
            "gammas": [str(g) for g in self.gammas],
            "lambda": str(self.lam),
            "omegas": [str(w) for w in self.omegas],
            "beta": str(self.beta),
            "tau": str(self.tau),
            "M": self.M,
            "prime": self.prime,
        }


def _strictly_minimal(alpha0: GaussianInt, c: int, d: int) -> bool:
    # -1/2 < (ac+bd)/(c^2+d^2) < 1/2
    return 2 * abs(alpha0.re * c + alpha0.im * d) < c * c + d * d


def _check_pairwise_coprime(mus: list[GaussianInt]) -> None:
    for j, mu in enumerate(mus):
        if not mu or is_unit(mu):
            raise GaussLineError(f"mu_{j} = {mu} must be neither zero nor a unit")
    for j in range(len(mus)):
        for k in range(j + 1, len(mus)):
            if not is_unit(ggcd(mus[j], mus[k])):
                raise GaussLineError(f"mu_{j} = {mus[j]} and mu_{k} = {mus[k]} are not coprime")


def random_lambda(constraints, seed: int, bound: int = 50) -> GaussianInt:
    """A random Gaussian integer coprime to every ``mu_j`` and every non-zero ``b_j``."""
    rng = random.Random(seed)
    avoid = [GaussianInt.coerce(mu) for mu, _ in constraints] + [GaussianInt(b) for _, b in constraints if b]
    while True:
        lam = GaussianInt(rng.randint(-bound, bound), rng.randint(-bound, bound))
        if lam and all(is_unit(ggcd(lam, x)) for x in avoid):
            return lam


def construct_line(
    constraints,
    lam=None,
    *,
    seed: int | None = None,
    candidate_budget: int | None = None,
    factor_budget: int | None = None,
) -> tuple[GaussianLine, ConstructionPlan]:
    """A primitive line with ``mu_j | alpha_{b_j}`` for every constraint ``(mu_j, b_j)``.

    ``lam`` defaults to 1; with ``seed`` a random coprime ``lam`` is drawn
    instead. The prime is the least admissible candidate in increasing
    order, so the output is a function of ``(constraints, lam)``.
    """
    pairs = [(GaussianInt.coerce(mu), int(b)) for mu, b in constraints]
    if not pairs:
        raise GaussLineError("at least one constraint is required")
    mus = [mu for mu, _ in pairs]
    _check_pairwise_coprime(mus)
    if lam is None:
        lam = ONE if seed is None else random_lambda(pairs, seed)
    lam = GaussianInt.coerce(lam)
    if not lam:
        raise GaussLineError("lambda must be non-zero")
    for mu, b in pairs:
        if not is_unit(ggcd(lam, mu)) or (b and not is_unit(ggcd(lam, GaussianInt(b)))):
            raise GaussLineError(f"lambda = {lam} must be coprime to every mu_j and non-zero b_j")
    candidate_budget = default_budget(DEFAULT_PRIME_CANDIDATES) if candidate_budget is None else candidate_budget

    gammas = [ggcd(mu, GaussianInt(b)) for mu, b in pairs]
    omegas = [mu.exact_div(g) for mu, g in zip(mus, gammas)]
    alpha0 = lam
    for g in gammas:
        alpha0 = alpha0 * g

    congruences: list[tuple[GaussianInt, GaussianInt]] = []
    for (mu, b), g, w in zip(pairs, gammas, omegas):
        if is_unit(w):
            # b_j = 0 lands here: gamma_j = mu_j already divides alpha0
            continue
        kappa = GaussianInt(b).exact_div(g)
        unit, kinv, _ = gxgcd(kappa, w)
        kinv = kinv * unit.conjugate()
        congruences.append((-(alpha0.exact_div(g)) * kinv, w))

    omega_prod = ONE
    for w in omegas:
        omega_prod = omega_prod * w
    beta = ONE
    for pi, _ in factor_gaussian(alpha0, factor_budget).factors:
        if not divides(pi, omega_prod):
            beta = beta * pi
    if not is_unit(beta):
        congruences.insert(0, (ONE, beta))

    modulus = beta * omega_prod
    if congruences:
        tau = crt_gaussian(congruences).value
    else:
        tau = ONE
    if is_unit(modulus):
        tau = ONE
    M = modulus.norm()
    r, s = tau.re, tau.im

    if s == 0:
        target, make = r, (lambda p: (p, M))
        floor = M
    elif r == 0:
        target, make = s, (lambda p: (M, p))
        floor = M
    else:
        h = next(h for h in range(1, abs(r) + 1) if r % h == 0 and gcd(r // h, M) == 1)
        target, make = r // h, (lambda p: (p * h, s))
        floor = max(M, abs(s))

    start = floor + 1
    p = start + (target - start) % M
    for _ in range(candidate_budget):
        c, d = make(p)
        if _strictly_minimal(alpha0, c, d) and is_rational_prime(p):
            break
        p += M
    else:
        raise BudgetExceeded(f"no admissible prime among {candidate_budget} candidates = {target} mod {M}")

    delta = GaussianInt(c, d)
    line = GaussianLine.from_point_direction(alpha0, delta)
    plan = ConstructionPlan(tuple(gammas), lam, tuple(omegas), beta, tau, M, p)
    if line.alpha0 != alpha0 or line.delta != delta or not line.primitive:  # pragma: no cover
        raise GaussLineError(f"construction produced non-canonical or non-primitive line {line}")
    for mu, b in pairs:
        if not divides(mu, line.point_at(b)):  # pragma: no cover
            raise GaussLineError(f"construction failed: {mu} does not divide alpha_{b}")
    return line, plan


__all__ = [
    "ConstructionPlan",
    "CrtSolution",
    "construct_line",
    "crt_gaussian",
    "crt_integers",
    "crt_line",
    "random_lambda",
]
