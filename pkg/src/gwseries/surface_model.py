"""Surface descriptors and assembly of their GW series.

The assembled series is a sum of local contributions: an opaque ``GW0`` slot at
the zero class, the universal exceptional-curve series ``L0`` at multiples of
each exceptional curve, and the contributions of the canonical-divisor
components of the minimal model.  Only the zero-dimensional (etale) slots that
have closed forms are numeric; everything else is a tagged :class:`Unknown`.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParseError, StructuralError, ValidationError
from .grading import (
    EXCEPTIONAL,
    ClassMonomial,
    Component,
    ComponentBasis,
    chi_from_betti,
    lambda_exponent_for_genus,
    lambda_window,
)
from .lattice_covers import (
    TorsionCharacter,
    f2_fiber_coefficient,
    regular_fiber_coefficient,
    signed_torus_cover_sum,
)
from .series import (
    GwSeries,
    Known,
    Truncation,
    Unknown,
    embed_axis,
    series_add,
    series_scale,
    substitute_power,
)
from .spin_parity import Parity, closed_form_double_cover

CONJECTURAL_SUFFIX = ":conjectural-etale"

GENERAL_TYPE_ASSUMPTION = (
    "general type: a smooth canonical divisor of multiplicity 1 is assumed, not checked"
)


# ---------- descriptors


@dataclass(frozen=True)
class K3:
    chi_O = 2


@dataclass(frozen=True)
class Abelian:
    chi_O = 0


@dataclass(frozen=True)
class ProperlyElliptic:
    base_genus: int
    chi_O: int
    multiple_fibers: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "multiple_fibers", tuple(self.multiple_fibers))

    @property
    def k_pi(self):
        return self.chi_O - 2 * (1 - self.base_genus)


@dataclass(frozen=True)
class GeneralType:
    K2: int
    chi_O: int

    @property
    def h(self):
        return self.K2 + 1


@dataclass(frozen=True)
class SurfaceDescriptor:
    minimal_model: object
    blowup_count: int = 0
    betti: tuple = None

    @property
    def chi_O(self):
        return self.minimal_model.chi_O


def elliptic_surface(n, blowup_count=0):
    """The simply connected elliptic surface E(n) (chi = n, base P^1)."""
    return SurfaceDescriptor(ProperlyElliptic(0, n), blowup_count)


@dataclass(frozen=True)
class CanonicalComponentSpec:
    kind: str
    k_pi: int = 0
    m: int = 0
    h: int = 0
    parity: Parity = None


def validate_descriptor(s):
    """List of violated modeling rules; empty means valid."""
    out = []
    mm = s.minimal_model
    if not isinstance(s.blowup_count, int) or s.blowup_count < 0:
        out.append("blowups: the number of blow-ups must be a nonnegative integer")
    if isinstance(mm, ProperlyElliptic):
        if mm.base_genus < 0:
            out.append("elliptic.base_genus: base genus must be nonnegative")
        bad = [m for m in mm.multiple_fibers if not isinstance(m, int) or m < 2]
        if bad:
            out.append(f"elliptic.multiple_fibers: multiplicities must be integers >= 2, got {bad}")
        if mm.k_pi < 0:
            out.append(
                f"elliptic.k_pi: k_pi = chi_O - 2(1 - base_genus) = {mm.k_pi} < 0 is outside "
                "the effective canonical-divisor normal form"
            )
    elif isinstance(mm, GeneralType):
        if mm.K2 < 1:
            out.append(
                f"general_type.K2: h = K²+1 ≥ 2 required (canonical divisor genus), got K2={mm.K2}"
            )
    elif not isinstance(mm, (K3, Abelian)):
        out.append(f"minimal_model: unsupported type {type(mm).__name__}")
    if s.betti is not None:
        b1, bplus = s.betti
        if b1 < 0 or bplus < 0:
            out.append("betti: Betti numbers must be nonnegative")
        elif (1 - b1 + bplus) % 2:
            out.append("betti: 1−b¹+b⁺ must be even")
        elif hasattr(mm, "chi_O") and chi_from_betti(b1, bplus) != mm.chi_O:
            out.append(
                f"betti: chi_O from Betti numbers is {chi_from_betti(b1, bplus)}, "
                f"descriptor says {mm.chi_O}"
            )
    return out


def _require_valid(s):
    violations = validate_descriptor(s)
    if violations:
        raise ValidationError(violations)


def canonical_components(s):
    _require_valid(s)
    comps = [CanonicalComponentSpec(EXCEPTIONAL) for _ in range(s.blowup_count)]
    mm = s.minimal_model
    if isinstance(mm, ProperlyElliptic):
        comps.append(CanonicalComponentSpec("regular_fiber_aggregate", k_pi=mm.k_pi))
        comps += [CanonicalComponentSpec("multiple_fiber", m=m) for m in mm.multiple_fibers]
    elif isinstance(mm, GeneralType):
        comps.append(
            CanonicalComponentSpec("general_divisor", h=mm.h, parity=Parity.of(mm.chi_O))
        )
    return comps


def assumptions(s, conjectural_etale=False):
    notes = []
    if isinstance(s.minimal_model, GeneralType):
        notes.append(GENERAL_TYPE_ASSUMPTION)
    if conjectural_etale and isinstance(s.minimal_model, ProperlyElliptic):
        if any(m > 2 for m in s.minimal_model.multiple_fibers):
            notes.append(
                "multiplicity > 2 fibers: slots marked conjectural-etale hold the signed etale "
                "census, not a proven invariant"
            )
    return notes


# ---------- assembly


def _minimal_basis(mm):
    if isinstance(mm, ProperlyElliptic):
        return ComponentBasis(
            (Component.fiber_unit(),)
            + tuple(Component.multiple_fiber(k, m) for k, m in enumerate(mm.multiple_fibers, 1))
        )
    if isinstance(mm, GeneralType):
        return ComponentBasis((Component.general_divisor(mm.h),))
    return ComponentBasis(())


def _minimal_truncation(basis, max_degree, max_lambda):
    bounds = []
    for e in basis.entries:
        if e.kind == "fiber_unit":
            bounds.append(max_degree * basis.fiber_lcm)
        elif e.has_axis:
            bounds.append(max_degree)
        else:
            bounds.append(0)
    return Truncation(tuple(bounds), max_lambda)


def _gw0_series(basis, trunc):
    zero = basis.zero()
    return GwSeries(
        basis, trunc, {ClassMonomial(zero, lam): Unknown("GW0") for lam in lambda_window(trunc.max_lambda)}
    )


def fiber_series_L1(max_degree, max_lambda):
    """Universal regular-fiber series by lambda exponent, in powers of t_F."""
    out = {}
    for lam in lambda_window(max_lambda):
        g = lam // 2 + 1
        if g == 1:
            out[lam] = {d: Known(regular_fiber_coefficient(d)) for d in range(1, max_degree + 1)}
        else:
            out[lam] = {d: Unknown(f"L1:g={g}:d={d}") for d in range(1, max_degree + 1)}
    return out


def multiple_fiber_series(m, max_degree, max_lambda, conjectural_etale=False):
    """Local series of a multiplicity-``m`` fiber, in powers of t_{F_m}."""
    nu = TorsionCharacter(m, (1, 0))
    out = {}
    for lam in lambda_window(max_lambda):
        g = lam // 2 + 1
        row = {}
        for d in range(1, max_degree + 1):
            if g != 1:
                row[d] = Unknown(f"L2:m={m}:g={g}:d={d}")
            elif m == 2:
                row[d] = Known(f2_fiber_coefficient(d))
            elif d == 2:
                row[d] = Known(Fraction(3, 2))
            elif conjectural_etale:
                row[d] = Known(
                    signed_torus_cover_sum(d, nu), note=f"L2:m={m}:d={d}{CONJECTURAL_SUFFIX}"
                )
            else:
                row[d] = Unknown(f"L2:m={m}:d={d}")
        out[lam] = row
    return out


def _elliptic_series(mm, basis, trunc, max_degree, conjectural_etale):
    L = basis.fiber_lcm
    axis = basis.position("fiber_unit")
    cap = trunc.max_exponents[axis]
    l1 = fiber_series_L1(max_degree, trunc.max_lambda)
    regular = embed_axis(
        basis, trunc, axis, {lam: substitute_power(row, L, cap) for lam, row in l1.items()}
    )
    total = series_scale(mm.k_pi, regular)
    for m in mm.multiple_fibers:
        local = multiple_fiber_series(m, max_degree * m, trunc.max_lambda, conjectural_etale)
        total = series_add(
            total,
            embed_axis(
                basis,
                trunc,
                axis,
                {lam: substitute_power(row, L // m, cap) for lam, row in local.items()},
            ),
        )
    return total


def _general_type_series(mm, basis, trunc, max_degree):
    h = mm.h
    parity = Parity.of(mm.chi_O)
    pname = parity.name.lower()
    rows = {}
    for lam in lambda_window(trunc.max_lambda):
        g = lam // 2 + 1
        row = {}
        for d in range(1, max_degree + 1):
            zero_dim = lam == lambda_exponent_for_genus(d * (h - 1) + 1)
            if zero_dim and d == 1:
                row[d] = Known(1 if mm.chi_O % 2 == 0 else -1)
            elif zero_dim and d == 2:
                row[d] = Known(closed_form_double_cover(h, parity))
            elif zero_dim:
                row[d] = Unknown(f"L3:h={h}:{pname}:d={d}")
            else:
                row[d] = Unknown(f"L3:h={h}:{pname}:g={g}:d={d}")
        rows[lam] = row
    return embed_axis(basis, trunc, basis.position("general_divisor"), rows)


def assemble_minimal_series(s, max_degree, max_lambda, conjectural_etale=False):
    _require_valid(s)
    if max_degree < 1:
        raise StructuralError("max degree must be >= 1")
    mm = s.minimal_model
    basis = _minimal_basis(mm)
    trunc = _minimal_truncation(basis, max_degree, max_lambda)
    total = _gw0_series(basis, trunc)
    if isinstance(mm, ProperlyElliptic):
        total = series_add(total, _elliptic_series(mm, basis, trunc, max_degree, conjectural_etale))
    elif isinstance(mm, GeneralType):
        total = series_add(total, _general_type_series(mm, basis, trunc, max_degree))
    return total


def blowup_transform(minimal_series, blowup_count, max_degree=None):
    """Extend a minimal-model series by ``blowup_count`` exceptional curves.

    Classes orthogonal to every exceptional curve keep their coefficients,
    pure multiples ``d E_i`` get the universal ``L0`` slot, and mixed classes
    vanish (they are simply absent).
    """
    if blowup_count < 0:
        raise StructuralError("blowup count must be nonnegative")
    if any(e.kind == EXCEPTIONAL for e in minimal_series.basis.entries):
        raise StructuralError("series already contains exceptional classes")
    if blowup_count == 0:
        return minimal_series
    if max_degree is None:
        max_degree = max(
            [m for e, m in zip(minimal_series.basis.entries, minimal_series.truncation.max_exponents)
             if e.kind != "fiber_unit" and e.has_axis]
            + [m // minimal_series.basis.fiber_lcm for e, m in
               zip(minimal_series.basis.entries, minimal_series.truncation.max_exponents)
               if e.kind == "fiber_unit"]
            + [1]
        )
    basis = minimal_series.basis.prepend(Component.exceptional(i) for i in range(1, blowup_count + 1))
    old = minimal_series.truncation
    trunc = Truncation((max_degree,) * blowup_count + old.max_exponents, old.max_lambda)
    pad = (0,) * blowup_count
    terms = {
        ClassMonomial(pad + mon.exponents, mon.lambda_exponent): c
        for mon, c in minimal_series.terms.items()
    }
    for i in range(blowup_count):
        for lam in lambda_window(old.max_lambda):
            for d in range(1, max_degree + 1):
                terms[ClassMonomial(basis.unit(i, d), lam)] = Unknown(f"L0:E{i + 1}:d={d}")
    return GwSeries(basis, trunc, terms)


def assemble_gw_series(s, max_degree=5, max_lambda=8, conjectural_etale=False):
    minimal = assemble_minimal_series(s, max_degree, max_lambda, conjectural_etale)
    return blowup_transform(minimal, s.blowup_count, max_degree)


# ---------- descriptor files

_MODEL_KEYS = {
    "k3": {"type"},
    "abelian": {"type"},
    "elliptic": {"type", "base_genus", "chi_O", "multiple_fibers"},
    "general_type": {"type", "K2", "chi_O"},
}
_REQUIRED = {
    "elliptic": {"type", "base_genus", "chi_O"},
    "general_type": {"type", "K2", "chi_O"},
}


def _int(obj, key, where):
    v = obj[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise ParseError(f"{where}.{key}: integer expected, got {v!r}")
    return v


def descriptor_from_json(obj):
    if not isinstance(obj, dict):
        raise ParseError("descriptor must be a JSON object")
    extra = set(obj) - {"minimal_model", "blowups", "betti"}
    if extra:
        raise ParseError(f"unknown key(s): {sorted(extra)}")
    if "minimal_model" not in obj:
        raise ParseError("missing key: minimal_model")
    mm = obj["minimal_model"]
    if not isinstance(mm, dict) or "type" not in mm:
        raise ParseError("minimal_model must be an object with a 'type'")
    kind = mm["type"]
    if kind not in _MODEL_KEYS:
        raise ParseError(f"minimal_model.type: unknown type {kind!r}")
    extra = set(mm) - _MODEL_KEYS[kind]
    if extra:
        raise ParseError(f"minimal_model: unknown key(s) {sorted(extra)}")
    missing = _REQUIRED.get(kind, {"type"}) - set(mm)
    if missing:
        raise ParseError(f"minimal_model: missing key(s) {sorted(missing)}")
    if kind == "k3":
        model = K3()
    elif kind == "abelian":
        model = Abelian()
    elif kind == "elliptic":
        fibers = mm.get("multiple_fibers", [])
        if not isinstance(fibers, list) or any(
            isinstance(m, bool) or not isinstance(m, int) for m in fibers
        ):
            raise ParseError("minimal_model.multiple_fibers: list of integers expected")
        model = ProperlyElliptic(
            _int(mm, "base_genus", "minimal_model"), _int(mm, "chi_O", "minimal_model"), tuple(fibers)
        )
    else:
        model = GeneralType(_int(mm, "K2", "minimal_model"), _int(mm, "chi_O", "minimal_model"))
    blowups = _int(obj, "blowups", "descriptor") if "blowups" in obj else 0
    betti = None
    if "betti" in obj:
        b = obj["betti"]
        if not isinstance(b, dict) or set(b) != {"b1", "b_plus"}:
            raise ParseError("betti: object with exactly the keys b1, b_plus expected")
        betti = (_int(b, "b1", "betti"), _int(b, "b_plus", "betti"))
    return SurfaceDescriptor(model, blowups, betti)


def descriptor_to_json(s):
    mm = s.minimal_model
    if isinstance(mm, K3):
        model = {"type": "k3"}
    elif isinstance(mm, Abelian):
        model = {"type": "abelian"}
    elif isinstance(mm, ProperlyElliptic):
        model = {
            "type": "elliptic",
            "base_genus": mm.base_genus,
            "chi_O": mm.chi_O,
            "multiple_fibers": list(mm.multiple_fibers),
        }
    else:
        model = {"type": "general_type", "K2": mm.K2, "chi_O": mm.chi_O}
    out = {"minimal_model": model, "blowups": s.blowup_count}
    if s.betti is not None:
        out["betti"] = {"b1": s.betti[0], "b_plus": s.betti[1]}
    return out


def load_descriptor(path):
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno}: {exc.msg}") from exc
    return descriptor_from_json(obj)
