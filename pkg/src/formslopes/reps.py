"""Representations of integers by positive-definite forms.

Two independent routes are provided and meant to be checked against each
other: exhaustive enumeration over the ellipse f(x, y) = m, and the closed
form counts that follow from Gauss's theorem.

Counting convention: signed pairs (x, y) are counted individually, so
(1, 1), (-1, 1), (1, -1) and (-1, -1) are four representations.
"""
import math
from dataclasses import dataclass, field

from .arith import factorize, legendre
from .errors import (
    HypothesisViolated,
    InvalidInput,
    NotPositiveDefinite,
    PreconditionViolated,
)
from .forms import BQF, is_positive_definite

THREE_FOUR = BQF(3, 0, 4)
ONE_TWELVE = BQF(1, 0, 12)


@dataclass(frozen=True)
class RepresentationSet:
    m: int
    form: BQF
    reps: tuple = field(default=())
    proper_only: bool = True

    @property
    def count(self):
        return len(self.reps)

    def to_dict(self, include_reps=True):
        out = {"m": str(self.m), "form": self.form.to_dict(), "count": self.count}
        if include_reps:
            out["reps"] = [[str(x), str(y)] for x, y in self.reps]
        return out


def _solutions(f, m):
    """Yield every integer (x, y) with f(x, y) == m, y ascending."""
    a, b = f.a, f.b
    d = f.discriminant
    # f(x, y) = m  <=>  (2ax + by)^2 = 4am + d*y^2, so |y| <= sqrt(4am / -d)
    y_max = math.isqrt(4 * a * m // -d)
    for y in range(-y_max, y_max + 1):
        rhs = 4 * a * m + d * y * y
        if rhs < 0:
            continue
        s = math.isqrt(rhs)
        if s * s != rhs:
            continue
        for root in {-b * y - s, -b * y + s}:
            if root % (2 * a) == 0:
                yield root // (2 * a), y


def enumerate_representations(f, m, proper_only=True):
    """Every (x, y) with f(x, y) == m, optionally only those with gcd 1."""
    if not is_positive_definite(f):
        raise NotPositiveDefinite(f"form ({f}) is not positive definite")
    if m < 1:
        raise InvalidInput(f"m must be positive, got {m}")
    reps = sorted(
        (x, y)
        for x, y in _solutions(f, m)
        if not proper_only or math.gcd(x, y) == 1
    )
    return RepresentationSet(m, f, tuple(reps), proper_only)


def gauss_count(m, k):
    """Proper representations of odd m, summed over the reduced forms of disc -4k.

    2 * prod(1 + (-k/p)) over the distinct primes p dividing m.
    """
    if k <= 1:
        raise PreconditionViolated(f"k must exceed 1, got {k}")
    if m < 1 or m % 2 == 0:
        raise PreconditionViolated(f"m must be a positive odd integer, got {m}")
    if math.gcd(m, k) != 1:
        raise PreconditionViolated(f"m={m} and k={k} are not relatively prime")
    total = 2
    for p in factorize(m).primes:
        total *= 1 + legendre(-k, p)
    return total


def check_three_four_hypothesis(m):
    """Check m = 7 (mod 12) with every prime divisor 1 or 7 (mod 12).

    Returns the factorization of ``m``; raises :class:`HypothesisViolated`
    naming the failed condition otherwise.
    """
    if m < 1:
        raise HypothesisViolated(f"m must be positive, got {m}")
    fac = factorize(m)
    for p in fac.primes:
        if p % 12 not in (1, 7):
            raise HypothesisViolated(
                f"prime divisor {p} of m = {m} is {p % 12} mod 12, not 1 or 7"
            )
    if m % 12 != 7:
        raise HypothesisViolated(f"m = {m} is {m % 12} mod 12, not 7")
    return fac


def count_by_3_4_form(m):
    """Proper representations of m by 3x^2 + 4y^2, which is 2**(tau(m) + 1)."""
    fac = check_three_four_hypothesis(m)
    return 2 ** (fac.tau + 1)


def check_N_hypothesis(N):
    """Check N = 4m with m satisfying :func:`check_three_four_hypothesis`."""
    if N < 1 or N % 4:
        raise HypothesisViolated(f"N = {N} is not a positive multiple of 4")
    return check_three_four_hypothesis(N // 4)


def count_N_representations(N):
    """Signed representations N = p^2 + 12q^2 with 4 | p, 3 ∤ p: 2**tau(N)."""
    fac = check_N_hypothesis(N)
    # tau(N) = tau(m) + 1, the extra prime being 2
    return 2 ** (fac.tau + 1)


def admissible_representations(N):
    """Brute-force every proper (p, q) with p^2 + 12q^2 = N, 4 | p and 3 ∤ p."""
    found = enumerate_representations(ONE_TWELVE, N, proper_only=True)
    return [(p, q) for p, q in found.reps if p % 4 == 0 and p % 3 != 0]
