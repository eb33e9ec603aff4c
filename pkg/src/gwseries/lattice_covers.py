"""Etale covers of an elliptic fiber as finite-index sublattices of Z^2.

A connected degree-``d`` cover of a torus corresponds to an index-``d``
subgroup of its fundamental group Z^2.  Every such subgroup is normal, so each
cover has ``d`` deck transformations and enters with weight ``1/d``.  The sign
of a cover is ``(-1)^{h0(f*N)}``; a degree-zero bundle on a torus has ``h0 = 1``
when trivial and 0 otherwise.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import CapacityError, DomainError
from .exact_arith import divisors, sigma, sigma_at_half

MAX_CENSUS_DEGREE = 10**4


@dataclass(frozen=True, order=True)
class HnfSublattice:
    """The lattice spanned by ``(a, 0)`` and ``(b, c)`` with ``0 <= b < a``."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a < 1 or self.c < 1 or not 0 <= self.b < self.a:
            raise DomainError(f"not in Hermite normal form: {self}")

    @property
    def index(self):
        return self.a * self.c

    @property
    def generators(self):
        return (self.a, 0), (self.b, self.c)

    def contains(self, x, y):
        if y % self.c:
            return False
        return (x - (y // self.c) * self.b) % self.a == 0


@dataclass(frozen=True)
class TorsionCharacter:
    """A character of Z^2 of exact order ``m``: ``(x, y) -> v . (x, y) mod m``.

    It models the flat normal bundle of a fiber of multiplicity ``m``.
    """

    m: int
    v: tuple = (0, 0)

    def __post_init__(self):
        v = (self.v[0] % self.m, self.v[1] % self.m) if self.m >= 1 else self.v
        object.__setattr__(self, "v", v)
        if self.m < 1:
            raise DomainError("character order must be positive")
        if self.m == 1:
            return
        if self.m // gcd(self.m, v[0], v[1]) != self.m:
            raise DomainError(f"{v} does not have order {self.m} in (Z/{self.m})^2")

    def __call__(self, x, y):
        return (self.v[0] * x + self.v[1] * y) % self.m


TRIVIAL = TorsionCharacter(1)


def characters_of_order(m):
    """All characters of exact order ``m``."""
    return [
        TorsionCharacter(m, (x, y))
        for x in range(m)
        for y in range(m)
        if (m == 1 or gcd(m, x, y) == 1)
    ]


def enumerate_sublattices(d):
    if d < 1:
        raise DomainError("index must be positive")
    return [HnfSublattice(a, b, d // a) for a in divisors(d) for b in range(a)]


def pullback_is_trivial(lattice, nu):
    return all(nu(*g) == 0 for g in lattice.generators)


def _check_capacity(d):
    if d < 1:
        raise DomainError("degree must be positive")
    if d > MAX_CENSUS_DEGREE:
        raise CapacityError(f"census supported for d <= {MAX_CENSUS_DEGREE}")


def cover_census(d, nu=TRIVIAL):
    """(number of covers, number with trivial pullback, signed weighted sum)."""
    _check_capacity(d)
    covers = enumerate_sublattices(d)
    trivial = sum(1 for L in covers if pullback_is_trivial(L, nu))
    # trivial pullback: h0 = 1, sign -1; otherwise h0 = 0, sign +1
    signed = Fraction(len(covers) - 2 * trivial, d)
    return len(covers), trivial, signed


def signed_torus_cover_sum(d, nu=TRIVIAL):
    return cover_census(d, nu)[2]


def regular_fiber_coefficient(d):
    """Genus-one degree-``d`` contribution of a fiber with trivial normal bundle."""
    return Fraction(-sigma(d), d)


def f2_fiber_coefficient(d):
    """Genus-one degree-``d`` contribution of a fiber of multiplicity 2."""
    return Fraction(sigma(d) - 2 * sigma_at_half(d), d)


def census_table(m, v, degrees):
    nu = TorsionCharacter(m, tuple(v))
    return [(d, *cover_census(d, nu)) for d in degrees]
