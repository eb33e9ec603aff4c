"""Homology bookkeeping: component bases, class monomials, and the genus/degree
formulas that locate zero-dimensional moduli spaces.

Fiber classes are measured in units of ``[F]/L`` where ``L`` is the lcm of the
multiple-fiber multiplicities, so a degree-``d`` multiple of ``[F_k]`` (with
``m_k F_k = F``) has integer FiberUnit exponent ``d * L // m_k``.  The
MultipleFiber entries of a basis are legend entries; their exponent slot is
always 0 because their classes are folded into the FiberUnit axis.
"""

from dataclasses import dataclass, field
from math import lcm

from .errors import DomainError, ParseError, StructuralError

EXCEPTIONAL = "exceptional"
FIBER_UNIT = "fiber_unit"
MULTIPLE_FIBER = "multiple_fiber"
GENERAL_DIVISOR = "general_divisor"

MIN_LAMBDA = -2


@dataclass(frozen=True)
class Component:
    """One basis label.  ``index`` numbers exceptional curves and multiple
    fibers from 1; ``m`` is a multiplicity, ``h`` a genus."""

    kind: str
    index: int = 0
    m: int = 0
    h: int = 0

    @classmethod
    def exceptional(cls, index):
        return cls(EXCEPTIONAL, index=index)

    @classmethod
    def fiber_unit(cls):
        return cls(FIBER_UNIT)

    @classmethod
    def multiple_fiber(cls, index, m):
        return cls(MULTIPLE_FIBER, index=index, m=m)

    @classmethod
    def general_divisor(cls, h):
        return cls(GENERAL_DIVISOR, h=h)

    @property
    def label(self):
        if self.kind == EXCEPTIONAL:
            return f"E{self.index}"
        if self.kind == FIBER_UNIT:
            return "F/L"
        if self.kind == MULTIPLE_FIBER:
            return f"F{self.index}(m={self.m})"
        return f"D(h={self.h})"

    @property
    def has_axis(self):
        return self.kind != MULTIPLE_FIBER

    def to_json(self):
        out = {"kind": self.kind}
        if self.kind in (EXCEPTIONAL, MULTIPLE_FIBER):
            out["index"] = self.index
        if self.kind == MULTIPLE_FIBER:
            out["m"] = self.m
        if self.kind == GENERAL_DIVISOR:
            out["h"] = self.h
        return out

    @classmethod
    def from_json(cls, obj):
        try:
            kind = obj["kind"]
            if kind == EXCEPTIONAL:
                return cls.exceptional(int(obj["index"]))
            if kind == FIBER_UNIT:
                return cls.fiber_unit()
            if kind == MULTIPLE_FIBER:
                return cls.multiple_fiber(int(obj["index"]), int(obj["m"]))
            if kind == GENERAL_DIVISOR:
                return cls.general_divisor(int(obj["h"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad basis entry {obj!r}") from exc
        raise ParseError(f"unknown component kind {kind!r}")


@dataclass(frozen=True)
class ComponentBasis:
    entries: tuple = ()
    fiber_lcm: int = field(init=False)

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        kinds = [e.kind for e in entries]
        if kinds.count(FIBER_UNIT) > 1:
            raise StructuralError("at most one FiberUnit entry")
        if kinds.count(GENERAL_DIVISOR) > 1:
            raise StructuralError("at most one GeneralDivisor entry")
        mults = [e.m for e in entries if e.kind == MULTIPLE_FIBER]
        if any(m < 2 for m in mults):
            raise StructuralError("multiple-fiber multiplicities must be >= 2")
        if mults and FIBER_UNIT not in kinds:
            raise StructuralError("MultipleFiber entries require a FiberUnit entry")
        if any(e.kind == GENERAL_DIVISOR and e.h < 0 for e in entries):
            raise StructuralError("divisor genus must be nonnegative")
        object.__setattr__(self, "fiber_lcm", lcm(1, *mults))

    def __len__(self):
        return len(self.entries)

    def position(self, kind, index=0):
        for i, e in enumerate(self.entries):
            if e.kind == kind and (index == 0 or e.index == index):
                return i
        raise KeyError(f"no {kind} entry (index {index}) in basis")

    def zero(self):
        return (0,) * len(self.entries)

    def unit(self, i, d=1):
        """Exponent vector with ``d`` in slot ``i`` and 0 elsewhere."""
        v = [0] * len(self.entries)
        v[i] = d
        return tuple(v)

    def fiber_exponent(self, m, d):
        """FiberUnit exponent of ``d`` times a fiber of multiplicity ``m``."""
        if self.fiber_lcm % m:
            raise DomainError(f"multiplicity {m} does not divide L={self.fiber_lcm}")
        return d * (self.fiber_lcm // m)

    def prepend(self, other_entries):
        return ComponentBasis(tuple(other_entries) + self.entries)

    def to_json(self):
        return {"entries": [e.to_json() for e in self.entries], "fiber_lcm": self.fiber_lcm}

    @classmethod
    def from_json(cls, obj):
        try:
            basis = cls(tuple(Component.from_json(e) for e in obj["entries"]))
        except (KeyError, TypeError) as exc:
            raise ParseError("bad basis legend") from exc
        if "fiber_lcm" in obj and obj["fiber_lcm"] != basis.fiber_lcm:
            raise ParseError("fiber_lcm disagrees with the listed multiplicities")
        return basis


@dataclass(frozen=True, order=True)
class ClassMonomial:
    """``t_A lambda^(2g-2)``.  Ordering is (lambda exponent, exponent vector)."""

    lambda_exponent: int
    exponents: tuple

    def __init__(self, exponents, lambda_exponent=0):
        exponents = tuple(int(e) for e in exponents)
        if any(e < 0 for e in exponents):
            raise DomainError(f"negative class exponent in {exponents}")
        if lambda_exponent < MIN_LAMBDA or lambda_exponent % 2:
            raise DomainError(f"lambda exponent must be even and >= -2, got {lambda_exponent}")
        object.__setattr__(self, "exponents", exponents)
        object.__setattr__(self, "lambda_exponent", int(lambda_exponent))

    @property
    def genus(self):
        return self.lambda_exponent // 2 + 1

    @property
    def is_zero_class(self):
        return not any(self.exponents)

    def __mul__(self, other):
        # group-ring law t_A t_B = t_{A+B}; lambda powers add
        if len(self.exponents) != len(other.exponents):
            raise StructuralError("monomials over different bases")
        return ClassMonomial(
            tuple(a + b for a, b in zip(self.exponents, other.exponents)),
            self.lambda_exponent + other.lambda_exponent,
        )

    def to_json(self):
        return {"exponents": list(self.exponents), "lambda": self.lambda_exponent}

    @classmethod
    def from_json(cls, obj):
        try:
            return cls(obj["exponents"], obj["lambda"])
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad monomial {obj!r}") from exc


def beta(d, h, g):
    """Index quantity d(1-h) + g - 1 for degree-d maps from genus g onto genus h."""
    if d < 1:
        raise DomainError("degree must be positive")
    return d * (1 - h) + g - 1


def zero_dim_genus(h, d):
    """The genus g with beta(d, h, g) == 0."""
    if d < 1:
        raise DomainError("degree must be positive")
    g = d * (h - 1) + 1
    if g < 0:
        raise DomainError(f"no zero-dimensional stratum for h={h}, d={d}")
    return g


def moduli_dimensions(g, h, d):
    """(real dim of maps into the curve, real dim of maps into the surface)."""
    b = beta(d, h, g)
    return 4 * b, 2 * b


def branch_point_count(g, h, d):
    """Number of branch points, with multiplicity (Riemann-Hurwitz)."""
    b = beta(d, h, g)
    if b < 0:
        raise DomainError(f"no degree-{d} cover of genus {h} by genus {g}")
    return 2 * b


def chi_from_betti(b1, bplus):
    """Holomorphic Euler characteristic (1 - b1 + b+)/2."""
    if b1 < 0 or bplus < 0:
        raise DomainError("Betti numbers are nonnegative")
    n = 1 - b1 + bplus
    if n % 2:
        raise DomainError("1 - b1 + b+ must be even")
    return n // 2


def lambda_exponent_for_genus(g):
    if g < 0:
        raise DomainError("genus must be nonnegative")
    return 2 * g - 2


def lambda_window(max_lambda):
    """Admissible lambda exponents -2, 0, ..., max_lambda."""
    if max_lambda % 2 or max_lambda < MIN_LAMBDA:
        raise DomainError("max lambda exponent must be even and >= -2")
    return range(MIN_LAMBDA, max_lambda + 1, 2)
