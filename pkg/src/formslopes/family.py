"""Slope families sharing one value of p^2 + 12q^2, and their surface invariants.

For a slope p/q with A = p^2 + 12q^2 and k >= 1 the invariants are

    n_k = -3A(2 + 3k) + 9
    D_k = A * n_k^2 + 2 + 3k

Both depend on (p, q) only through A, so every slope in a family yields the
same sequence D_1 < D_2 < ...  The certificate below checks exactly that,
pair by pair, with exact integer arithmetic.
"""
import itertools
from dataclasses import dataclass, field

from .arith import Factorization, factorize, is_prime, primes_in_progression
from .errors import CertificateFailure, HypothesisViolated, InvalidInput
from .reps import admissible_representations, check_N_hypothesis
from .slopes import distance, is_admissible, make_slope

DEFAULT_KMAX = 100


@dataclass(frozen=True)
class SurfaceInvariant:
    k: int
    n_k: int
    D_k: int

    def to_dict(self):
        return {"k": self.k, "n_k": str(self.n_k), "D_k": str(self.D_k)}


@dataclass(frozen=True)
class SlopeFamily:
    """Positive-quadrant admissible slopes p/q with p^2 + 12q^2 = N, sorted by p."""

    N: int
    slopes: tuple
    provenance: Factorization

    @property
    def A(self):
        return self.N

    @property
    def positive_count(self):
        return len(self.slopes)

    @property
    def signed_count(self):
        # (±p, ±q) for each positive pair
        return 4 * len(self.slopes)

    @property
    def slope_count_with_signs(self):
        # p/q and -p/q are different slopes; (-p)/(-q) is the same one
        return 2 * len(self.slopes)

    def to_dict(self):
        return {
            "N": str(self.N),
            "factorization": self.provenance.to_dict(),
            "slopes": [s.to_dict() for s in self.slopes],
            "positive_count": self.positive_count,
            "signed_count": self.signed_count,
            "slope_count_with_signs": self.slope_count_with_signs,
        }


@dataclass(frozen=True)
class Certificate:
    N: int
    k_max: int
    slope_count: int
    invariants: tuple
    checks: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(self.checks.values())

    def to_dict(self):
        return {
            "N": str(self.N),
            "k_max": self.k_max,
            "slope_count": self.slope_count,
            "checks": dict(self.checks),
            "ok": self.ok,
            "invariants": [inv.to_dict() for inv in self.invariants],
        }


def n_k(A, k):
    return -3 * A * (2 + 3 * k) + 9


def D_k(A, k):
    return A * n_k(A, k) ** 2 + 2 + 3 * k


def surface_invariants(A, k_max=DEFAULT_KMAX):
    if A < 1:
        raise InvalidInput(f"A must be positive, got {A}")
    if k_max < 1:
        raise InvalidInput(f"k_max must be positive, got {k_max}")
    return [SurfaceInvariant(k, n_k(A, k), D_k(A, k)) for k in range(1, k_max + 1)]


def invariants_for_slope(p, q, k_max=DEFAULT_KMAX):
    return surface_invariants(p * p + 12 * q * q, k_max)


def required_tau(n):
    """Smallest tau(m) giving at least n positive-quadrant slopes (2**(tau-1) >= n)."""
    if n < 1:
        raise InvalidInput(f"n must be positive, got {n}")
    return (n - 1).bit_length() + 1


def default_prime_menu(n):
    """Exponent map {prime: exponent} for m in the construction of N = 4m.

    Uses the smallest primes = 7 (mod 12) with exponent 1.  When the required
    number of primes is even, their exponent sum would be even, so either one
    of them is replaced by 13 (= 1 mod 12) or the smallest is squared,
    whichever gives the smaller m.
    """
    tau = required_tau(n)
    sevens = primes_in_progression(7, 12, tau)
    if tau % 2:
        return {p: 1 for p in sevens}
    with_thirteen = {p: 1 for p in sevens[:-1]}
    with_thirteen[13] = 1
    squared = {p: 1 for p in sevens}
    squared[sevens[0]] = 2
    return min(with_thirteen, squared, key=_menu_value)


def _menu_value(menu):
    out = 1
    for p, e in menu.items():
        out *= p**e
    return out


def construct_N(n=None, primes=None):
    """Build N = 4m with m = 7 (mod 12) and all prime divisors 1 or 7 (mod 12).

    With ``primes`` (a mapping or a sequence of primes or (prime, exponent)
    pairs) that exact menu is used and validated; otherwise the default menu
    for ``n`` is chosen so that N has at least ``n`` positive-quadrant
    admissible slopes.
    """
    if primes is None:
        if n is None:
            raise InvalidInput("give either n or an explicit prime list")
        menu = default_prime_menu(n)
    else:
        menu = _normalize_menu(primes)
    m = _menu_value(menu)
    fac = check_N_hypothesis(4 * m)
    if n is not None and 2 ** (fac.tau - 1) < n:
        raise HypothesisViolated(
            f"m = {m} has tau = {fac.tau}, giving {2 ** (fac.tau - 1)} slopes, fewer than {n}"
        )
    return 4 * m


def _normalize_menu(primes):
    items = primes.items() if isinstance(primes, dict) else primes
    menu = {}
    for item in items:
        p, e = item if isinstance(item, tuple) else (item, 1)
        if p < 2 or not is_prime(p):
            raise InvalidInput(f"{p} is not prime")
        if e < 1:
            raise InvalidInput(f"exponent of {p} must be positive, got {e}")
        if p in menu:
            raise InvalidInput(f"prime {p} listed twice")
        menu[p] = e
    if not menu:
        raise InvalidInput("empty prime list")
    return menu


def find_family(N):
    """All positive-quadrant admissible slopes p/q with p^2 + 12q^2 = N."""
    check_N_hypothesis(N)
    pairs = sorted((p, q) for p, q in admissible_representations(N) if p > 0 and q > 0)
    slopes = tuple(make_slope(p, q) for p, q in pairs)
    return SlopeFamily(N, slopes, factorize(N))


def certify_family(fam, k_max=DEFAULT_KMAX):
    """Check the family's invariants for k = 1..k_max.

    (i)   D_k computed from each pair separately equals D_k computed from N;
    (ii)  n_k = 0 and D_k = 2 (mod 3);
    (iii) D_k strictly increasing in k;
    (iv)  every slope admissible, and slopes pairwise distinct.

    Raises :class:`CertificateFailure` on the first violated clause.
    """
    if k_max < 1:
        raise InvalidInput(f"k_max must be positive, got {k_max}")
    reference = surface_invariants(fam.N, k_max)

    for i, s in enumerate(fam.slopes):
        own = invariants_for_slope(s.p, s.q, k_max)
        for ref, got in zip(reference, own):
            if got != ref:
                raise CertificateFailure(
                    "i",
                    f"slope {s} gives D_{ref.k} = {got.D_k}, expected {ref.D_k}",
                    {"index": i, "slope": str(s), "k": ref.k,
                     "D_k": str(got.D_k), "expected": str(ref.D_k)},
                )

    for inv in reference:
        if inv.n_k % 3 or inv.D_k % 3 != 2:
            raise CertificateFailure(
                "ii", f"D_{inv.k} = {inv.D_k} is not 2 mod 3", {"k": inv.k}
            )

    for prev, nxt in zip(reference, reference[1:]):
        if not nxt.D_k > prev.D_k:
            raise CertificateFailure(
                "iii", f"D_{nxt.k} does not exceed D_{prev.k}", {"k": nxt.k}
            )

    if not fam.slopes:
        raise CertificateFailure("iv", f"family for N = {fam.N} is empty")
    for s in fam.slopes:
        if s.q == 0 or not is_admissible(s) or make_slope(s.p, s.q) != s:
            raise CertificateFailure(
                "iv", f"slope {s} is not an admissible reduced slope", {"slope": str(s)}
            )
    for s, t in itertools.combinations(fam.slopes, 2):
        if distance(s, t) < 1:
            raise CertificateFailure(
                "iv", f"slopes {s} and {t} coincide", {"slopes": [str(s), str(t)]}
            )

    checks = {"i": True, "ii": True, "iii": True, "iv": True}
    return Certificate(fam.N, k_max, len(fam.slopes), tuple(reference), checks)


# N = 4 * 7 * 13 * 19 * 31 * 37 and its sixteen positive-quadrant slopes,
# as published alongside the construction.
WORKED_EXAMPLE_N = 7_932_652
WORKED_EXAMPLE_PRIMES = (7, 13, 19, 31, 37)
WORKED_EXAMPLE_PAIRS = (
    (32, 813), (200, 811), (680, 789), (1112, 747),
    (1328, 717), (1528, 683), (1640, 661), (1912, 597),
    (2032, 563), (2320, 461), (2560, 339), (2608, 307),
    (2648, 277), (2720, 211), (2752, 173), (2792, 107),
)
