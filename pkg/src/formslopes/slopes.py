"""Boundary slopes p/q on a torus and the distance between them."""
import math
from dataclasses import dataclass

from .errors import InvalidInput, ZeroPair


@dataclass(frozen=True, order=True)
class Slope:
    """A slope in lowest terms, oriented so that q > 0 (infinity is 1/0).

    Build instances with :func:`make_slope`; the constructor itself does not
    canonicalize.
    """

    p: int
    q: int

    def __str__(self):
        return f"{self.p}/{self.q}"

    def to_dict(self):
        return {"p": str(self.p), "q": str(self.q)}

    @classmethod
    def parse(cls, text):
        num, sep, den = text.partition("/")
        try:
            return make_slope(int(num), int(den) if sep else 1)
        except ValueError:
            raise InvalidInput(f"expected a slope as 'p/q', got {text!r}") from None


def make_slope(p, q):
    if p == 0 and q == 0:
        raise ZeroPair("0/0 is not a slope")
    g = math.gcd(p, q)
    p, q = p // g, q // g
    if q < 0 or (q == 0 and p < 0):
        p, q = -p, -q
    return Slope(p, q)


def distance(alpha, sigma):
    """|p*s - q*r| for alpha = p/q and sigma = r/s."""
    return abs(alpha.p * sigma.q - alpha.q * sigma.p)


def is_admissible(alpha):
    return alpha.p % 4 == 0 and alpha.p % 3 != 0
