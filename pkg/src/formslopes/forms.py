"""Positive-definite binary quadratic forms and their reduction."""
import math
from dataclasses import dataclass

from .arith import gcd_many
from .errors import (
    BadDeterminant,
    InvalidDiscriminant,
    InvalidInput,
    NotPositiveDefinite,
    NotPrimitive,
)


@dataclass(frozen=True, order=True)
class BQF:
    """The form a*x**2 + b*x*y + c*y**2."""

    a: int
    b: int
    c: int

    @property
    def discriminant(self):
        return self.b * self.b - 4 * self.a * self.c

    def __call__(self, x, y):
        return self.a * x * x + self.b * x * y + self.c * y * y

    def __str__(self):
        return f"{self.a},{self.b},{self.c}"

    @classmethod
    def parse(cls, text):
        """Parse the ``"a,b,c"`` triple used on the command line."""
        parts = text.replace(" ", "").split(",")
        if len(parts) != 3:
            raise InvalidInput(f"expected a form as 'a,b,c', got {text!r}")
        try:
            return cls(*(int(part) for part in parts))
        except ValueError:
            raise InvalidInput(f"non-integer coefficient in {text!r}") from None

    def to_dict(self):
        return {"a": str(self.a), "b": str(self.b), "c": str(self.c)}


@dataclass(frozen=True)
class UnimodularChange:
    """Substitution x -> p*x + q*y, y -> r*x + s*y with p*s - r*q == 1."""

    p: int
    q: int
    r: int
    s: int

    def __post_init__(self):
        det = self.p * self.s - self.r * self.q
        if det != 1:
            raise BadDeterminant(f"change of variables has determinant {det}, not 1")

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    def then(self, other):
        """The change equivalent to applying ``self`` first, then ``other``."""
        return UnimodularChange(
            self.p * other.p + self.q * other.r,
            self.p * other.q + self.q * other.s,
            self.r * other.p + self.s * other.r,
            self.r * other.q + self.s * other.s,
        )

    def to_dict(self):
        return {k: str(getattr(self, k)) for k in "pqrs"}


def discriminant(f):
    return f.discriminant


def is_primitive(f):
    return gcd_many(f.a, f.b, f.c) == 1


def is_positive_definite(f):
    return f.a > 0 and f.discriminant < 0


def _require_positive_definite(f):
    if not is_positive_definite(f):
        raise NotPositiveDefinite(f"form ({f}) is not positive definite")


def is_reduced(f):
    _require_positive_definite(f)
    a, b, c = f.a, f.b, f.c
    if not abs(b) <= a <= c:
        return False
    if abs(b) == a or a == c:
        return b >= 0
    return True


def apply_change(f, u):
    """Return g with g(x, y) = f(p*x + q*y, r*x + s*y)."""
    if not isinstance(u, UnimodularChange):
        u = UnimodularChange(*u)
    a, b, c = f.a, f.b, f.c
    p, q, r, s = u.p, u.q, u.r, u.s
    return BQF(
        f(p, r),
        2 * a * p * q + b * (p * s + q * r) + 2 * c * r * s,
        f(q, s),
    )


_SWAP = UnimodularChange(0, -1, 1, 0)  # (x, y) -> (-y, x)


def reduce(f):
    """Reduce a primitive positive-definite form.

    Returns ``(g, u)`` where ``g`` is the unique reduced form properly
    equivalent to ``f`` and ``apply_change(f, u) == g``.
    """
    _require_positive_definite(f)
    if not is_primitive(f):
        raise NotPrimitive(f"form ({f}) is not primitive")
    g, u = f, UnimodularChange.identity()
    while True:
        a, b = g.a, g.b
        if not -a < b <= a:
            t = (a - b) // (2 * a)
            step = UnimodularChange(1, t, 0, 1)
            g, u = apply_change(g, step), u.then(step)
        if g.a > g.c or (g.a == g.c and g.b < 0):
            g, u = apply_change(g, _SWAP), u.then(_SWAP)
            continue
        return g, u


def properly_equivalent(f, g):
    return reduce(f)[0] == reduce(g)[0]


def enumerate_reduced(disc):
    """All primitive positive-definite reduced forms of discriminant ``disc``.

    Sorted by (a, b, c); the length of the list is the class number.
    """
    if disc >= 0 or disc % 4 not in (0, 1):
        raise InvalidDiscriminant(
            f"discriminant must be negative and congruent to 0 or 1 mod 4, got {disc}"
        )
    # 3a^2 <= -disc
    a_max = math.isqrt(-disc // 3)
    forms = []
    for a in range(1, a_max + 1):
        for b in range(-a, a + 1):
            if (b - disc) % 2:
                continue
            num = b * b - disc
            if num % (4 * a):
                continue
            c = num // (4 * a)
            f = BQF(a, b, c)
            if c >= a and is_reduced(f) and is_primitive(f):
                forms.append(f)
    return sorted(forms)


def class_number(disc):
    return len(enumerate_reduced(disc))
