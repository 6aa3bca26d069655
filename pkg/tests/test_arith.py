import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from formslopes.arith import (
    PRIMALITY_LIMIT,
    factorize,
    gcd,
    is_prime,
    legendre,
    mod_pow,
    primes_in_progression,
)
from formslopes.errors import InvalidInput, InvalidModulus, NotCoprime, OutOfRange

from oracles import brute_legendre, sieve, trial_factor, trial_is_prime

ODD_PRIMES_500 = [p for p in sieve(500) if p > 2]


@pytest.mark.parametrize("a, b, expected", [(0, 0, 0), (32, 813, 1), (12, 18, 6), (-12, 18, 6)])
def test_gcd(a, b, expected):
    assert gcd(a, b) == expected


@pytest.mark.parametrize("n, expected", [(7, True), (1, False), (2, True), (1983163, False)])
def test_is_prime_examples(n, expected):
    assert is_prime(n) is expected


def test_is_prime_matches_trial_division():
    assert [n for n in range(1, 20000) if is_prime(n)] == [
        n for n in range(1, 20000) if trial_is_prime(n)
    ]


def test_is_prime_strong_pseudoprimes():
    # strong pseudoprimes to several small bases
    for n in (2047, 1373653, 25326001, 3215031751, 2152302898747, 3474749660383,
              341550071728321, 3825123056546413051, 318665857834031151167461):
        assert not is_prime(n)
    assert is_prime(2**61 - 1)
    assert is_prime(2**64 + 13)


def test_is_prime_range():
    assert 2**89 - 1 > PRIMALITY_LIMIT
    with pytest.raises(OutOfRange):
        is_prime(2**89 - 1)  # a prime beyond the exact range
    with pytest.raises(InvalidInput):
        is_prime(0)


@pytest.mark.parametrize(
    "n, factors",
    [(1983163, ((7, 1), (13, 1), (19, 1), (31, 1), (37, 1))), (1, ()), (28, ((2, 2), (7, 1)))],
)
def test_factorize_examples(n, factors):
    fac = factorize(n)
    assert fac.factors == factors
    assert fac.tau == len(factors)


def test_factorize_example_value_against_oracle():
    assert dict(factorize(1983163).factors) == trial_factor(1983163)
    assert 7_932_652 // 4 == 1983163


def test_factorize_matches_oracle():
    for n in range(1, 5000):
        assert dict(factorize(n).factors) == trial_factor(n)


@pytest.mark.slow
def test_factorize_reconstructs_up_to_1e6():
    for n in range(1, 10**6 + 1):
        fac = factorize(n)
        assert fac.value() == n
        assert all(p < q for (p, _), (q, _) in zip(fac.factors, fac.factors[1:]))


def test_factorize_random_64_bit():
    rng = random.Random(20260101)
    for _ in range(1000):
        n = rng.getrandbits(64) | 1
        fac = factorize(n)
        assert fac.value() == n
        primes = fac.primes
        assert list(primes) == sorted(set(primes))
        assert all(is_prime(p) for p in primes)


def test_factorize_semiprimes_independent_of_seed():
    n = 4294967291 * 4294967279
    assert factorize(n, seed=1) == factorize(n, seed=2) == factorize(n)
    assert factorize(n).factors == ((4294967279, 1), (4294967291, 1))
    assert factorize(1000003**2 * 999983).factors == ((999983, 1), (1000003, 2))


@pytest.mark.parametrize("base, exp, mod, expected", [(2, 3, 5, 3), (3, 6, 13, 1), (17, 0, 9, 1)])
def test_mod_pow(base, exp, mod, expected):
    assert mod_pow(base, exp, mod) == expected


def test_mod_pow_against_repeated_multiplication():
    acc = 1
    for _ in range(6):
        acc = acc * 3 % 13
    assert mod_pow(3, 6, 13) == acc


@pytest.mark.parametrize("a, p, expected", [(14, 7, 0), (3, 13, 1), (3, 5, -1), (-1, 13, 1)])
def test_legendre_examples(a, p, expected):
    assert legendre(a, p) == expected


@pytest.mark.parametrize("p", [2, 9, 1, -7, 0])
def test_legendre_bad_modulus(p):
    with pytest.raises(InvalidModulus):
        legendre(3, p)


def test_legendre_brute_force():
    for p in ODD_PRIMES_500:
        for a in range(-p, p + 1):
            assert legendre(a, p) == brute_legendre(a, p)


def test_legendre_euler_criterion():
    for p in ODD_PRIMES_500[:40]:
        for a in range(1, p):
            euler = mod_pow(a, (p - 1) // 2, p)
            assert legendre(a, p) == (1 if euler == 1 else -1)


def test_legendre_multiplicative():
    for p in [q for q in ODD_PRIMES_500 if q < 200]:
        table = {a: legendre(a, p) for a in range(1, 201)}
        for a in range(1, 201):
            for b in range(1, 201):
                assert legendre(a * b, p) == table[a] * table[b]


def test_quadratic_reciprocity():
    for p in ODD_PRIMES_500:
        for q in ODD_PRIMES_500:
            if p != q:
                sign = (-1) ** ((p - 1) // 2 * (q - 1) // 2)
                assert legendre(p, q) * legendre(q, p) == sign


def test_first_supplement():
    for p in ODD_PRIMES_500:
        assert (legendre(-1, p) == 1) == (p % 4 == 1)


def test_three_is_residue_iff_1_or_11_mod_12():
    for p in sieve(10_000):
        if p > 3:
            assert (legendre(3, p) == 1) == (p % 12 in (1, 11))


@given(st.integers(min_value=-10**30, max_value=10**30), st.sampled_from(ODD_PRIMES_500))
def test_legendre_reduces_mod_p(a, p):
    assert legendre(a, p) == legendre(a % p, p)


@pytest.mark.parametrize(
    "s, t, count, expected", [(7, 12, 3, [7, 19, 31]), (1, 2, 2, [3, 5]), (1, 12, 2, [13, 37])]
)
def test_primes_in_progression(s, t, count, expected):
    assert primes_in_progression(s, t, count) == expected


def test_primes_in_progression_not_coprime():
    with pytest.raises(NotCoprime):
        primes_in_progression(2, 4, 1)


@settings(max_examples=50)
@given(st.integers(1, 60), st.integers(1, 30))
def test_primes_in_progression_properties(t, count):
    s = next(s for s in range(1, t + 1) if gcd(s, t) == 1)
    out = primes_in_progression(s, t, count)
    assert len(out) == count
    assert out == sorted(out)
    assert all(is_prime(p) and p % t == s % t for p in out)
    # nothing skipped
    assert [p for p in sieve(out[-1] + 1) if p % t == s % t] == out
