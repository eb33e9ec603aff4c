"""Exact rational arithmetic and the divisor functions used by the fiber series.

Rationals are :class:`fractions.Fraction`; they are always normalized
(coprime, positive denominator, zero is ``0/1``).
"""

from fractions import Fraction

from .errors import DomainError

Rational = Fraction

__all__ = [
    "Rational",
    "as_rational",
    "format_rational",
    "parse_rational",
    "divisors",
    "sigma",
    "sigma_at_half",
    "lambert_sigma_coefficients",
]


def as_rational(x):
    """Coerce an int or Fraction to a Fraction; floats are refused."""
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"exact integer or Fraction required, got {type(x).__name__}")


def format_rational(x):
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text):
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        if sep:
            if int(den) <= 0:
                raise ValueError
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except ValueError:
        raise DomainError(f"not an exact rational: {text!r}") from None


def _check_positive(d):
    if isinstance(d, bool) or not isinstance(d, int):
        raise TypeError(f"integer required, got {type(d).__name__}")
    if d < 1:
        raise DomainError(f"positive integer required, got {d}")


def divisors(d):
    """Ascending list of the positive divisors of ``d`` by trial division."""
    _check_positive(d)
    small, large = [], []
    k = 1
    while k * k <= d:
        if d % k == 0:
            small.append(k)
            if k * k != d:
                large.append(d // k)
        k += 1
    return small + large[::-1]


def sigma(d):
    """Sum of the positive divisors of ``d``.

    Computed multiplicatively from the prime factorization, so it does not
    share a code path with :func:`divisors`.
    """
    _check_positive(d)
    total = 1
    n = d
    p = 2
    while p * p <= n:
        if n % p == 0:
            pk, part = 1, 1
            while n % p == 0:
                n //= p
                pk *= p
                part += pk
            total *= part
        p += 1 if p == 2 else 2
    if n > 1:
        total *= n + 1
    return total


def sigma_at_half(d):
    """``sigma(d // 2)`` for even ``d``; 0 for odd ``d``."""
    _check_positive(d)
    return sigma(d // 2) if d % 2 == 0 else 0


def lambert_sigma_coefficients(n):
    """Coefficients ``[c_0, ..., c_n]`` of sum_{k>0} k t^k / (1 - t^k).

    Each summand is expanded as the geometric series k (t^k + t^2k + ...).
    The result satisfies ``c_d == sigma(d)`` for d >= 1 and ``c_0 == 0``.
    """
    if n < 0:
        raise DomainError("truncation order must be nonnegative")
    coeffs = [0] * (n + 1)
    for k in range(1, n + 1):
        for e in range(k, n + 1, k):
            coeffs[e] += k
    return coeffs
