"""Exact Gromov-Witten generating series of Kähler surfaces with p_g > 0."""

from .errors import (
    CapacityError,
    DomainError,
    GwError,
    ParseError,
    StructuralError,
    ValidationError,
    WindowError,
)
from .exact_arith import divisors, sigma, sigma_at_half
from .grading import (
    ClassMonomial,
    Component,
    ComponentBasis,
    beta,
    branch_point_count,
    chi_from_betti,
    moduli_dimensions,
    zero_dim_genus,
)
from .lattice_covers import (
    HnfSublattice,
    TorsionCharacter,
    enumerate_sublattices,
    f2_fiber_coefficient,
    pullback_is_trivial,
    regular_fiber_coefficient,
    signed_torus_cover_sum,
)
from .series import (
    GwSeries,
    Known,
    Truncation,
    Unknown,
    coefficient_at,
    series_add,
    series_scale,
    substitute_power,
)
from .spin_parity import (
    Parity,
    QuadraticRefinement,
    SymplecticF2Space,
    arf,
    closed_form_double_cover,
    count_parities,
    eval_q,
    signed_double_cover_sum,
)
from .surface_model import (
    K3,
    Abelian,
    GeneralType,
    ProperlyElliptic,
    SurfaceDescriptor,
    assemble_gw_series,
    blowup_transform,
    canonical_components,
    elliptic_surface,
    validate_descriptor,
)

__version__ = "0.1.0"
