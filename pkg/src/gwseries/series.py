"""Truncated formal series over the H_2 group ring with a lambda grading.

Coefficients are either exact rationals (:class:`Known`) or provenance-tagged
placeholders (:class:`Unknown`) for slots that are defined but not computed.
Absent monomials inside the window mean ``Known(0)``; monomials outside the
window are an error, never zero.
"""

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType

from .errors import DomainError, ParseError, StructuralError, WindowError
from .exact_arith import as_rational, format_rational, parse_rational
from .grading import ClassMonomial, ComponentBasis, lambda_window

# atomic tag heads; composites are built by sum(...) and scale(...)
TAG_VOCABULARY = ("GW0", "L0", "L1", "L2", "L3")
_ATOMIC_TAG = re.compile(r"^(GW0|L[0-3])(:[A-Za-z0-9=+\-]+)*$")


def is_registered_tag(tag):
    if not isinstance(tag, str) or not tag:
        return False
    if tag.startswith(("sum(", "scale(")) and tag.endswith(")"):
        return True
    return bool(_ATOMIC_TAG.match(tag))


@dataclass(frozen=True)
class Known:
    value: Fraction
    note: str = None

    def __post_init__(self):
        object.__setattr__(self, "value", as_rational(self.value))

    @property
    def is_zero(self):
        return self.value == 0

    def __str__(self):
        return format_rational(self.value)


@dataclass(frozen=True)
class Unknown:
    tag: str

    def __post_init__(self):
        if not is_registered_tag(self.tag):
            raise DomainError(f"unregistered unknown tag {self.tag!r}")

    is_zero = False

    def __str__(self):
        return f"[{self.tag}]"


ZERO = Known(Fraction(0))


def _sum_parts(tag):
    if tag.startswith("sum(") and tag.endswith(")"):
        return [tag[4:-1]]
    return [tag]


def _merge_notes(a, b):
    notes = [n for n in (a, b) if n]
    if not notes:
        return None
    return ";".join(dict.fromkeys(";".join(notes).split(";")))


def add_coefficients(a, b):
    if isinstance(a, Known) and isinstance(b, Known):
        return Known(a.value + b.value, _merge_notes(a.note, b.note))
    if isinstance(a, Known) and a.is_zero:
        return b
    if isinstance(b, Known) and b.is_zero:
        return a
    parts = []
    for c in (a, b):
        parts += _sum_parts(c.tag) if isinstance(c, Unknown) else [format_rational(c.value)]
    return Unknown("sum(" + ",".join(parts) + ")")


def scale_coefficient(s, c):
    s = as_rational(s)
    if isinstance(c, Known):
        return Known(s * c.value, c.note)
    if s == 1:
        return c
    return Unknown(f"scale({format_rational(s)},{c.tag})")


@dataclass(frozen=True)
class Truncation:
    """Per-entry maximal exponents and the maximal lambda exponent."""

    max_exponents: tuple
    max_lambda: int

    def __post_init__(self):
        object.__setattr__(self, "max_exponents", tuple(int(e) for e in self.max_exponents))
        lambda_window(self.max_lambda)  # validates parity and lower bound

    def contains(self, mon):
        return (
            len(mon.exponents) == len(self.max_exponents)
            and mon.lambda_exponent <= self.max_lambda
            and all(e <= m for e, m in zip(mon.exponents, self.max_exponents))
        )

    def meet(self, other):
        if len(self.max_exponents) != len(other.max_exponents):
            raise StructuralError("truncations over different bases")
        return Truncation(
            tuple(map(min, self.max_exponents, other.max_exponents)),
            min(self.max_lambda, other.max_lambda),
        )

    def to_json(self):
        return {"max_exponents": list(self.max_exponents), "max_lambda": self.max_lambda}


class GwSeries:
    """Immutable truncated series ``sum c(A, g) t_A lambda^(2g-2)``."""

    __slots__ = ("basis", "truncation", "_terms")

    def __init__(self, basis, truncation, terms=None):
        if len(truncation.max_exponents) != len(basis):
            raise StructuralError("truncation does not match basis dimension")
        for e, m in zip(basis.entries, truncation.max_exponents):
            if not e.has_axis and m != 0:
                raise StructuralError(f"{e.label} has no exponent axis; its bound must be 0")
        clean = {}
        for mon, coeff in (terms or {}).items():
            if not isinstance(mon, ClassMonomial):
                raise TypeError("series keys must be ClassMonomial")
            if not truncation.contains(mon):
                raise WindowError(f"{mon} lies outside the truncation window")
            if not isinstance(coeff, (Known, Unknown)):
                coeff = Known(coeff)
            if not coeff.is_zero:
                clean[mon] = coeff
        self.basis = basis
        self.truncation = truncation
        self._terms = MappingProxyType(clean)

    @property
    def terms(self):
        return self._terms

    def __eq__(self, other):
        if not isinstance(other, GwSeries):
            return NotImplemented
        return (
            self.basis == other.basis
            and self.truncation == other.truncation
            and dict(self._terms) == dict(other._terms)
        )

    def __repr__(self):
        return f"GwSeries({len(self._terms)} terms over {[e.label for e in self.basis.entries]})"

    def monomial(self, exponents, lambda_exponent=0):
        return ClassMonomial(exponents, lambda_exponent)

    def unknowns(self):
        return {m: c for m, c in self._terms.items() if isinstance(c, Unknown)}

    def window_monomials(self):
        """Every monomial in the window (can be large; used by tests and renderers)."""
        from itertools import product

        axes = [range(m + 1) for m in self.truncation.max_exponents]
        for lam in lambda_window(self.truncation.max_lambda):
            for exps in product(*axes):
                yield ClassMonomial(exps, lam)


def zero_series(basis, truncation):
    return GwSeries(basis, truncation)


def coefficient_at(a, mon):
    if not a.truncation.contains(mon):
        raise WindowError(f"{mon} lies outside the truncation window")
    return a.terms.get(mon, ZERO)


def series_add(a, b):
    if a.basis != b.basis:
        raise StructuralError("cannot add series over different bases")
    trunc = a.truncation.meet(b.truncation)
    out = {}
    for src in (a, b):
        for mon, c in src.terms.items():
            if trunc.contains(mon):
                out[mon] = add_coefficients(out[mon], c) if mon in out else c
    return GwSeries(a.basis, trunc, out)


def series_scale(s, a):
    s = as_rational(s)
    if s == 0:
        return zero_series(a.basis, a.truncation)
    return GwSeries(a.basis, a.truncation, {m: scale_coefficient(s, c) for m, c in a.terms.items()})


def substitute_power(terms, m, max_exponent=None):
    """Map ``{e: c}`` to ``{m*e: c}``, dropping exponents past ``max_exponent``."""
    if m < 1:
        raise DomainError("substitution power must be positive")
    return {
        m * e: c for e, c in terms.items() if max_exponent is None or m * e <= max_exponent
    }


def embed_axis(basis, truncation, axis, terms_by_lambda):
    """Build a series from single-variable data along one basis axis.

    ``terms_by_lambda`` maps lambda exponent -> {exponent: coefficient}.
    Entries outside the window are dropped.
    """
    out = {}
    for lam, terms in terms_by_lambda.items():
        if lam > truncation.max_lambda:
            continue
        for e, c in terms.items():
            if e <= truncation.max_exponents[axis]:
                out[ClassMonomial(basis.unit(axis, e), lam)] = c
    return GwSeries(basis, truncation, out)


# ---------- serialization


def coefficient_to_json(c):
    if isinstance(c, Unknown):
        return {"unknown": c.tag}
    if c.note:
        return {"value": format_rational(c.value), "note": c.note}
    return format_rational(c.value)


def coefficient_from_json(obj):
    if isinstance(obj, str):
        return Known(parse_rational(obj))
    if isinstance(obj, dict) and set(obj) == {"unknown"}:
        return Unknown(obj["unknown"])
    if isinstance(obj, dict) and set(obj) <= {"value", "note"} and "value" in obj:
        return Known(parse_rational(obj["value"]), obj.get("note"))
    raise ParseError(f"bad coefficient {obj!r}")


def series_to_json(a):
    return {
        "basis": a.basis.to_json(),
        "truncation": a.truncation.to_json(),
        "terms": [
            {"monomial": mon.to_json(), "coeff": coefficient_to_json(a.terms[mon])}
            for mon in sorted(a.terms)
        ],
    }


def series_from_json(obj):
    try:
        basis = ComponentBasis.from_json(obj["basis"])
        t = obj["truncation"]
        trunc = Truncation(tuple(t["max_exponents"]), int(t["max_lambda"]))
        terms = {}
        for item in obj["terms"]:
            mon = ClassMonomial.from_json(item["monomial"])
            if mon in terms:
                raise ParseError(f"monomial stored twice: {mon}")
            terms[mon] = coefficient_from_json(item["coeff"])
    except (KeyError, TypeError) as exc:
        raise ParseError("malformed serialized series") from exc
    return GwSeries(basis, trunc, terms)


def dumps(a):
    return json.dumps(series_to_json(a), indent=1, sort_keys=True)


def loads(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return series_from_json(obj)


def render_text(a):
    """Human table: one row per stored term, then the implicit-zero statement."""
    labels = [e.label for e in a.basis.entries]
    lines = [
        "basis: " + (", ".join(labels) if labels else "(empty)"),
        f"fiber unit: [F]/{a.basis.fiber_lcm}",
        "window: exponents <= "
        + str(list(a.truncation.max_exponents))
        + f", lambda <= {a.truncation.max_lambda}",
        f"{'genus':>5}  {'lambda':>6}  {'class':<24} coefficient",
    ]
    for mon in sorted(a.terms):
        c = a.terms[mon]
        cls = " + ".join(
            f"{e}*{lab}" for e, lab in zip(mon.exponents, labels) if e
        ) or "0"
        extra = f"  ({c.note})" if isinstance(c, Known) and c.note else ""
        lines.append(f"{mon.genus:>5}  {mon.lambda_exponent:>6}  {cls:<24} {c}{extra}")
    lines.append("every other monomial in the window has coefficient 0")
    return "\n".join(lines)
