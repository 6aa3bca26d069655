"""Exact integer primitives: gcd, primality, factorization, Legendre symbol.

Python integers are already arbitrary precision, so every routine here is
exact; nothing ever rounds or wraps.
"""
import functools
import math
import random
from dataclasses import dataclass

from .errors import InvalidInput, InvalidModulus, NotCoprime, OutOfRange

# Miller-Rabin with the first 13 prime bases is exact below this bound
# (Sorenson & Webster, 2015).
PRIMALITY_LIMIT = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

TRIAL_DIVISION_BOUND = 10_000


def _small_primes(limit):
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


_TRIAL_PRIMES = _small_primes(TRIAL_DIVISION_BOUND)


def gcd(a, b):
    """Greatest common divisor, always nonnegative; ``gcd(0, 0) == 0``."""
    return math.gcd(a, b)


def gcd_many(*values):
    return functools.reduce(math.gcd, values, 0)


def mod_pow(base, exp, modulus):
    if modulus < 1:
        raise InvalidInput(f"modulus must be positive, got {modulus}")
    if exp < 0:
        raise InvalidInput(f"exponent must be nonnegative, got {exp}")
    return pow(base, exp, modulus)


def _strong_probable_prime(n, base):
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n):
    """Deterministic primality test.

    Exact for every ``n < PRIMALITY_LIMIT`` (about 3.3e24, well past 2**64);
    larger inputs raise :class:`OutOfRange` instead of guessing.
    """
    if n < 1:
        raise InvalidInput(f"is_prime expects n >= 1, got {n}")
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n < 43 * 43:
        return True
    if n >= PRIMALITY_LIMIT:
        raise OutOfRange(
            f"{n} exceeds the deterministic primality range (< {PRIMALITY_LIMIT})"
        )
    return all(_strong_probable_prime(n, a) for a in _MR_BASES)


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple  # ((prime, exponent), ...) with primes increasing

    @property
    def tau(self):
        """Number of distinct prime divisors."""
        return len(self.factors)

    @property
    def primes(self):
        return tuple(p for p, _ in self.factors)

    def value(self):
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    def to_dict(self):
        return {
            "n": str(self.n),
            "factors": [{"prime": str(p), "exponent": e} for p, e in self.factors],
            "tau": self.tau,
        }

    def __str__(self):
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


def _pollard_brent(n, rng):
    """Return a nontrivial factor of the odd composite ``n``."""
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
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
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n, seed=None):
    """Prime factorization of a positive integer.

    Trial division by primes below ``TRIAL_DIVISION_BOUND``, then Brent's
    variant of Pollard rho on what remains.  ``seed`` only steers the rho
    start points; the result never depends on it.
    """
    if n < 1:
        raise InvalidInput(f"factorize expects n >= 1, got {n}")
    counts = {}
    rest = n
    for p in _TRIAL_PRIMES:
        if p * p > rest:
            break
        while rest % p == 0:
            counts[p] = counts.get(p, 0) + 1
            rest //= p
    rng = None
    stack = [rest] if rest > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        if rng is None:
            rng = random.Random(seed)
        d = _pollard_brent(m, rng)
        stack += [d, m // d]
    return Factorization(n, tuple(sorted(counts.items())))


def legendre(a, p):
    """Legendre symbol (a/p) for an odd prime ``p``.

    Computed by the binary reciprocity descent; ``a`` may be any integer and
    is reduced mod ``p`` first.
    """
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise InvalidModulus(f"Legendre symbol needs an odd prime modulus, got {p}")
    a %= p
    result = 1
    n = p
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


def primes_in_progression(s, t, count):
    """The ``count`` smallest primes congruent to ``s`` mod ``t``."""
    if t < 1:
        raise InvalidInput(f"modulus must be positive, got {t}")
    if count < 1:
        raise InvalidInput(f"count must be positive, got {count}")
    if math.gcd(s, t) != 1:
        raise NotCoprime(f"gcd({s}, {t}) = {math.gcd(s, t)}; no Dirichlet primes exist")
    found = []
    candidate = s % t
    while len(found) < count:
        if candidate > 1 and is_prime(candidate):
            found.append(candidate)
        candidate += t
    return found
