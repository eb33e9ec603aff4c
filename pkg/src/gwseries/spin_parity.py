"""Theta characteristics modeled as quadratic refinements over F_2.

Vectors of F_2^{2h} are Python ints: bit ``2i`` is the coordinate on ``a_{i+1}``
and bit ``2i+1`` the coordinate on ``b_{i+1}``.  A refinement ``q`` satisfies
``q(x + y) = q(x) + q(y) + <x, y>`` and is fixed by its values on the basis.
The twist of a theta characteristic ``N`` by a 2-torsion bundle ``L`` has
parity ``arf(q) + q(L)``.
"""

import enum
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import CapacityError, DomainError, GwError

MAX_EXHAUSTIVE_GENUS = 7


class Parity(enum.IntEnum):
    EVEN = 0
    ODD = 1

    @classmethod
    def of(cls, value):
        if isinstance(value, str):
            return cls[value.upper()]
        return cls(int(value) % 2)


@dataclass(frozen=True)
class ThetaClass:
    h: int
    parity: Parity

    def __post_init__(self):
        if self.h < 1:
            raise DomainError("genus must be >= 1")


@dataclass(frozen=True)
class SymplecticF2Space:
    h: int

    def __post_init__(self):
        if self.h < 1:
            raise DomainError("genus must be >= 1")

    @property
    def dimension(self):
        return 2 * self.h

    @property
    def size(self):
        return 1 << (2 * self.h)

    @property
    def a_mask(self):
        return int("01" * self.h, 2)

    def pairing(self, x, y):
        am = self.a_mask
        xa, xb = x & am, (x >> 1) & am
        ya, yb = y & am, (y >> 1) & am
        return ((xa & yb).bit_count() + (xb & ya).bit_count()) & 1

    def basis(self):
        return [1 << i for i in range(self.dimension)]


def _as_bits(x, n):
    if isinstance(x, int):
        if not 0 <= x < (1 << n):
            raise DomainError(f"vector {x} does not fit in {n} bits")
        return x
    bits = list(x)
    if len(bits) != n:
        raise DomainError(f"vector length {len(bits)} != {n}")
    return sum((int(b) & 1) << i for i, b in enumerate(bits))


@dataclass(frozen=True)
class QuadraticRefinement:
    space: SymplecticF2Space
    basis_values: tuple

    def __post_init__(self):
        vals = tuple(int(v) & 1 for v in self.basis_values)
        if len(vals) != self.space.dimension:
            raise DomainError("need one basis value per basis vector")
        object.__setattr__(self, "basis_values", vals)

    @classmethod
    def from_code(cls, h, code):
        """Refinement whose basis values are the bits of ``code``."""
        space = SymplecticF2Space(h)
        return cls(space, tuple((code >> i) & 1 for i in range(space.dimension)))

    @property
    def code(self):
        return sum(v << i for i, v in enumerate(self.basis_values))

    def value_table(self):
        """q on all 2^{2h} vectors, built by repeated use of the refinement rule."""
        sp = self.space
        table = np.zeros(1, dtype=np.uint8)
        for i, e in enumerate(sp.basis()):
            # q(x + e) = q(x) + q(e) + <x, e> for x supported on earlier basis vectors
            xs = np.arange(table.size, dtype=np.int64)
            pair = _pairing_with_basis_vector(sp, xs, i)
            table = np.concatenate([table, table ^ self.basis_values[i] ^ pair])
        return table


def _pairing_with_basis_vector(space, xs, i):
    # <x, a_k> = x_{b_k}, <x, b_k> = x_{a_k}
    partner = i + 1 if i % 2 == 0 else i - 1
    return ((xs >> partner) & 1).astype(np.uint8)


def eval_q(q, x):
    x = _as_bits(x, q.space.dimension)
    acc_vec, acc = 0, 0
    for i in range(q.space.dimension):
        if (x >> i) & 1:
            e = 1 << i
            acc ^= q.basis_values[i] ^ q.space.pairing(acc_vec, e)
            acc_vec |= e
    return acc


def arf(q):
    """Arf invariant by the majority rule: 0 iff q vanishes on most vectors."""
    table = q.value_table()
    zeros = table.size - int(table.sum())
    return 0 if 2 * zeros > table.size else 1


def arf_product_formula(q):
    """sum_i q(a_i) q(b_i) mod 2 in the standard symplectic basis."""
    v = q.basis_values
    return sum(v[2 * i] & v[2 * i + 1] for i in range(q.space.h)) & 1


def _check_capacity(h):
    if h < 1:
        raise DomainError("genus must be >= 1")
    if h > MAX_EXHAUSTIVE_GENUS:
        raise CapacityError(f"exhaustive enumeration supported for h <= {MAX_EXHAUSTIVE_GENUS}")


def count_parities(h):
    """(even, odd) counts over all 2^{2h} refinements, Arf computed by majority."""
    _check_capacity(h)
    n = 1 << (2 * h)
    q0 = QuadraticRefinement.from_code(h, 0).value_table().astype(np.int64)
    xs = np.arange(n, dtype=np.int64)
    # q_v - q_0 is the linear functional x -> sum_i x_i v_i
    even = 0
    chunk = max(1, (1 << 22) // n)
    for start in range(0, n, chunk):
        codes = np.arange(start, min(n, start + chunk), dtype=np.int64)
        linear = np.bitwise_count(codes[:, None] & xs[None, :]) & 1
        ones = ((linear ^ q0[None, :]) & 1).sum(axis=1)
        even += int(np.count_nonzero(2 * (n - ones) > n))
    return even, n - even


def closed_form_parity_counts(h):
    return 2 ** (h - 1) * (2**h + 1), 2 ** (h - 1) * (2**h - 1)


def standard_refinement(h, parity):
    """A refinement with the requested Arf invariant (value on a_1, b_1 only)."""
    p = int(Parity.of(parity))
    vals = [0] * (2 * h)
    vals[0] = vals[1] = p
    return QuadraticRefinement(SymplecticF2Space(h), tuple(vals))


def signed_double_cover_sum(h, parity, q=None):
    """Automorphism-weighted signed count of connected etale double covers.

    The cover attached to a nonzero 2-torsion class ``L`` carries the sign
    ``(-1)^{h0(f*N)}`` with ``h0(f*N) = h0(N) + h0(N L^{-1})``; the second
    parity is that of the twisted theta characteristic, ``arf(q) + q(L)``.
    Each cover has automorphism group Z/2.
    """
    _check_capacity(h)
    p = int(Parity.of(parity))
    if q is None:
        q = standard_refinement(h, p)
    if q.space.h != h:
        raise DomainError("refinement lives on a different genus")
    if arf(q) != p:
        raise GwError("refinement does not have the requested Arf invariant")
    table = q.value_table()[1:].astype(np.int64)  # L = 0 is the disconnected cover
    h0 = (p + (p + table)) & 1
    total = int(np.sum(1 - 2 * h0))
    return Fraction(total, 2)


def closed_form_double_cover(h, parity):
    if h < 1:
        raise DomainError("genus must be >= 1")
    sign = -1 if int(Parity.of(parity)) else 1
    return Fraction(sign * 2**h - 1, 2)


def spin_census(h_values):
    """Rows (h, even, odd, signed_sum_even, signed_sum_odd)."""
    rows = []
    for h in h_values:
        even, odd = count_parities(h)
        rows.append(
            (h, even, odd, signed_double_cover_sum(h, Parity.EVEN), signed_double_cover_sum(h, Parity.ODD))
        )
    return rows
