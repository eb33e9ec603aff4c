import pytest
from hypothesis import given, strategies as st

from gwseries.errors import DomainError, StructuralError
from gwseries.grading import (
    ClassMonomial,
    Component,
    ComponentBasis,
    beta,
    branch_point_count,
    chi_from_betti,
    lambda_exponent_for_genus,
    moduli_dimensions,
    zero_dim_genus,
)


@pytest.mark.parametrize("d, h, g, expected", [(1, 2, 2, 0), (2, 2, 3, 0), (2, 0, 0, 1)])
def test_beta(d, h, g, expected):
    assert beta(d, h, g) == expected


@pytest.mark.parametrize("h, d, expected", [(1, 5, 1), (2, 2, 3), (3, 2, 5)])
def test_zero_dim_genus(h, d, expected):
    assert zero_dim_genus(h, d) == expected
    assert beta(d, h, expected) == 0


def test_zero_dim_genus_undefined_for_rational_curves():
    with pytest.raises(DomainError):
        zero_dim_genus(0, 2)


def test_zero_dim_genus_solves_beta():
    for d in range(1, 51):
        for h in range(0, 21):
            try:
                g = zero_dim_genus(h, d)
            except DomainError:
                assert d * (h - 1) + 1 < 0
                continue
            assert beta(d, h, g) == 0
            lam = lambda_exponent_for_genus(g)
            assert lam == 2 * d * (h - 1) and lam % 2 == 0


@pytest.mark.parametrize(
    "g, h, d, expected", [(1, 1, 3, (0, 0)), (3, 2, 2, (0, 0)), (2, 1, 2, (4, 2))]
)
def test_moduli_dimensions(g, h, d, expected):
    assert moduli_dimensions(g, h, d) == expected


@given(st.integers(0, 30), st.integers(0, 30), st.integers(1, 30))
def test_moduli_dimensions_ratio(g, h, d):
    a, b = moduli_dimensions(g, h, d)
    assert a == 2 * b


@pytest.mark.parametrize("g, h, d, expected", [(1, 1, 7, 0), (3, 2, 2, 0), (2, 1, 2, 2)])
def test_branch_point_count(g, h, d, expected):
    assert branch_point_count(g, h, d) == expected


def test_branch_point_count_rejects_negative_beta():
    with pytest.raises(DomainError):
        branch_point_count(0, 1, 1)


@pytest.mark.parametrize("b1, bplus, expected", [(0, 3, 2), (0, 1, 1), (4, 5, 1)])
def test_chi_from_betti(b1, bplus, expected):
    assert chi_from_betti(b1, bplus) == expected


def test_chi_from_betti_parity():
    with pytest.raises(DomainError):
        chi_from_betti(1, 1)


def test_basis_invariants():
    b = ComponentBasis((Component.fiber_unit(), Component.multiple_fiber(1, 2), Component.multiple_fiber(2, 3)))
    assert b.fiber_lcm == 6
    assert b.fiber_exponent(3, 2) == 4
    with pytest.raises(StructuralError):
        ComponentBasis((Component.multiple_fiber(1, 2),))
    with pytest.raises(StructuralError):
        ComponentBasis((Component.fiber_unit(), Component.fiber_unit()))
    with pytest.raises(StructuralError):
        ComponentBasis((Component.fiber_unit(), Component.multiple_fiber(1, 1)))


def test_basis_json_round_trip():
    b = ComponentBasis(
        (Component.exceptional(1), Component.fiber_unit(), Component.multiple_fiber(1, 4))
    )
    assert ComponentBasis.from_json(b.to_json()) == b


def test_monomial_invariants():
    with pytest.raises(DomainError):
        ClassMonomial((1, -1), 0)
    with pytest.raises(DomainError):
        ClassMonomial((1,), 1)
    with pytest.raises(DomainError):
        ClassMonomial((1,), -4)
    assert ClassMonomial((0,), -2).genus == 0


vec = st.lists(st.integers(0, 50), min_size=3, max_size=3)
lam = st.integers(0, 10).map(lambda k: 2 * k)


@given(vec, lam, vec, lam, vec, lam)
def test_group_ring_law(e1, l1, e2, l2, e3, l3):
    a, b, c = ClassMonomial(e1, l1), ClassMonomial(e2, l2), ClassMonomial(e3, l3)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert (a * b).exponents == tuple(x + y for x, y in zip(e1, e2))
