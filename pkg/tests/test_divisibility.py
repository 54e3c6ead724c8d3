import random

import pytest
from hypothesis import assume, given, strategies as st

from conftest import gaussian_ints, primitive_lines
from oracles import divisible_indices, gdivides, valuation

from gaussline.divisibility import (
    InertProfile,
    InfiniteSetError,
    SplitProfile,
    TwoAdicProfile,
    brute_force_divisor_index,
    brute_force_divisor_set_contains,
    crt_pair,
    divisor_index,
    divisor_set_contains,
    elementary_divides,
    exact_power_profile,
    gp_set_contains,
    query,
    rational_set,
    rational_set_contains,
    solve_linear_congruence,
)
from gaussline.gaussint import BudgetExceeded, GaussianInt, GaussLineError, is_unit, nu
from gaussline.line import GaussianLine

G = GaussianInt
L_I = GaussianLine.parse("1;i")
L_12 = GaussianLine.parse("1;1+2i")
L_WORKED = GaussianLine.parse("1;6297+8234i")


def _tuple(line):
    return line.alpha0.re, line.alpha0.im, line.delta.re, line.delta.im


def _scan(line, beta):
    hits = divisible_indices(_tuple(line), (beta.re, beta.im), 0, nu(beta))
    return [int(h) for h in hits]


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(1, 60))
def test_linear_congruence(a, b, m):
    sol = solve_linear_congruence(a, b, m)
    brute = [x for x in range(m) if (a * x - b) % m == 0]
    if sol is None:
        assert brute == []
    else:
        x0, step = sol
        assert brute == list(range(x0 % step, m, step))


@given(st.integers(0, 40), st.integers(1, 40), st.integers(0, 40), st.integers(1, 40))
def test_crt_pair(r1, m1, r2, m2):
    sol = crt_pair(r1, m1, r2, m2)
    brute = [x for x in range(m1 * m2) if x % m1 == r1 % m1 and x % m2 == r2 % m2]
    if sol is None:
        assert brute == []
    else:
        t, m = sol
        assert brute == list(range(t, m1 * m2, m))


@pytest.mark.parametrize(
    "line, beta, expected",
    [(L_I, "1+2i", (2, 5)), (L_I, "1-2i", (3, 5)), (L_I, "5", None), (L_I, "3", None), (L_I, "-3+4i", (7, 25)),
     (L_12, "2", (1, 2)), (L_12, "2+2i", (1, 4))],
)
def test_divisor_index_examples(line, beta, expected):
    for fn in (divisor_index, brute_force_divisor_index):
        w = fn(line, G.parse(beta))
        if expected is None:
            assert not w.member and w.residue is None and w.witness_index is None
        else:
            assert (w.residue, w.modulus, w.witness_index) == (*expected, expected[0])


def test_invalid_queries():
    with pytest.raises(GaussLineError):
        divisor_index(L_I, G(0, 1))
    with pytest.raises(GaussLineError):
        divisor_index(L_I, G(0))
    with pytest.raises(GaussLineError):
        divisor_index(GaussianLine.parse("-1+2i;2+i"), G(3))
    with pytest.raises(GaussLineError):
        divisor_set_contains(L_I, G(-1))
    with pytest.raises(BudgetExceeded):
        brute_force_divisor_index(L_I, G(10**4), budget=100)


@given(primitive_lines(bound=25), gaussian_ints(40, nonzero=True))
def test_divisor_index_matches_scan(line, beta):
    assume(not is_unit(beta))
    hits = _scan(line, beta)
    w = divisor_index(line, beta)
    assert w.member == bool(hits)
    if hits:
        assert hits == [w.residue] and w.modulus == nu(beta)
        assert gdivides((beta.re, beta.im), tuple(line.point_at(w.witness_index)))


@given(primitive_lines(bound=25), gaussian_ints(12, nonzero=True))
def test_periodicity(line, beta):
    assume(not is_unit(beta))
    w = divisor_index(line, beta)
    hits = divisible_indices(_tuple(line), (beta.re, beta.im), 0, 3 * nu(beta))
    if w.member:
        assert list(hits) == [w.residue + k * w.modulus for k in range(3)]
    else:
        assert len(hits) == 0


@given(primitive_lines(bound=25, nonzero_delta=True), gaussian_ints(40, nonzero=True))
def test_divisor_set_matches_scan(line, beta):
    assume(not is_unit(beta))
    w = divisor_set_contains(line, beta)
    assert w == brute_force_divisor_set_contains(line, beta) == divisor_index(line, beta)


@given(primitive_lines(bound=25, nonzero_delta=True), gaussian_ints(15, nonzero=True), gaussian_ints(15, nonzero=True))
def test_closure_under_coprime_nu(line, beta, gamma):
    assume(not is_unit(beta) and not is_unit(gamma))
    from math import gcd

    assume(gcd(nu(beta), nu(gamma)) == 1)
    if divisor_set_contains(line, beta).member and divisor_set_contains(line, gamma).member:
        assert divisor_set_contains(line, beta * gamma).member


def test_divisor_set_examples():
    assert not divisor_set_contains(L_I, G(5)).member
    w = divisor_set_contains(L_I, G(-3, 4))
    assert w.member and w.witness_index == 7
    w = divisor_set_contains(L_12, G(2, 2))
    assert w.member and w.witness_index == 1
    with pytest.raises(GaussLineError):
        divisor_set_contains(GaussianLine.parse("0;1"), G(3))


def test_elementary_and_query():
    real = GaussianLine.parse("0;1")
    assert elementary_divides(real, G(1, 2)).to_dict() == {"member": True, "residue": 0, "modulus": 5, "witness_index": 0}
    assert query(real, G(1, 2)) == divisor_index(real, G(1, 2))
    assert query(GaussianLine.parse("0;i"), G(3)) == divisor_index(GaussianLine.parse("0;i"), G(3))
    with pytest.raises(GaussLineError):
        elementary_divides(L_I, G(3))


def test_rational_set_examples():
    assert rational_set(L_WORKED) == [1, 2, 23, 46, 179, 358, 4117, 8234]
    assert rational_set(L_I) == [1]
    real = GaussianLine.parse("0;1")
    assert all(rational_set_contains(real, r) for r in range(1, 50))
    with pytest.raises(InfiniteSetError):
        rational_set(real)


@given(primitive_lines(bound=15, nonzero_delta=True))
def test_rational_set_matches_scan(line):
    a, b, c, d = _tuple(line)
    brute = [r for r in range(1, abs(line.Delta) + 1) if any((a + n * c) % r == 0 and (b + n * d) % r == 0 for n in range(r))]
    assert rational_set(line) == brute
    assert all(rational_set_contains(line, r) == (r in brute) for r in range(1, abs(line.Delta) + 3))


def test_gp_set_examples():
    assert gp_set_contains(L_I, G(1, 2))
    L = GaussianLine.from_point_direction(G(1), G(2, 1))
    assert not gp_set_contains(L, G(2, 1))
    assert gp_set_contains(L, G(2, -1))
    for bad in (G(3), G(0, 7), G(5), G(4, 2)):
        with pytest.raises(GaussLineError):
            gp_set_contains(L_I, bad)


@given(primitive_lines(bound=20))
def test_gp_set_matches_scan(line):
    for pi in (G(1, 1), G(2, 1), G(1, 2), G(3, 2), G(2, 3), G(4, 1), G(1, 4), G(5, 2)):
        hit = len(_scan(line, pi)) > 0
        assert gp_set_contains(line, pi) == hit == (not gdivides((pi.re, pi.im), tuple(line.delta)))


def test_profile_examples():
    assert exact_power_profile(L_12, 2) == TwoAdicProfile(1, 3, (0, 2, 3))
    prof = exact_power_profile(L_I, 5)
    assert isinstance(prof, SplitProfile) and prof.primes == ((G(1, 2), True), (G(2, 1), True))
    assert exact_power_profile(L_WORKED, 23) == InertProfile(23, 1)
    assert exact_power_profile(GaussianLine.parse("1;1+i"), 2) == TwoAdicProfile(0, 0, (0,))
    assert valuation((1, 2), (1, 7)) == 2
    with pytest.raises(GaussLineError):
        exact_power_profile(GaussianLine.parse("0;1"), 3)
    with pytest.raises(GaussLineError):
        exact_power_profile(L_I, 4)


def _observed(line, pi, p, s):
    a, b, c, d = _tuple(line)
    return {valuation(pi, (a + n * c, b + n * d)) for n in range(4 * p ** (s + 1))}


def test_profiles_against_valuation_scan():
    rng = random.Random(11)
    seen = set()
    for p in (2, 3, 5, 13):
        for target in (0, 1, 2):
            for _ in range(2):
                line = _line_with_valuation(rng, p, target)
                prof = exact_power_profile(line, p)
                if p == 2:
                    seen.add(prof.s)
                    assert set(prof.exact_ts) == _observed(line, (1, 1), 2, prof.s)
                elif p % 4 == 3:
                    assert prof.s == target
                    assert _observed(line, (p, 0), p, target) == set(range(target + 1))
                else:
                    for pi, every in prof.primes:
                        obs = _observed(line, (pi.re, pi.im), p, target)
                        if every:
                            assert set(range(target + 1)) <= obs
                        else:
                            assert obs == {0}


def _line_with_valuation(rng, p, s):
    while True:
        line = GaussianLine.from_point_direction(G(rng.randint(-20, 20), rng.randint(-20, 20)), G(rng.randint(1, 20), rng.randint(-20, 20)))
        if not line.primitive or line.Delta == 0:
            continue
        v, D = 0, line.Delta
        while D % p == 0:
            D //= p
            v += 1
        if v == s:
            return line
