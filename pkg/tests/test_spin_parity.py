from fractions import Fraction
from itertools import product

import pytest

from gwseries.errors import CapacityError, DomainError, GwError
from gwseries.spin_parity import (
    Parity,
    QuadraticRefinement,
    SymplecticF2Space,
    arf,
    arf_product_formula,
    closed_form_double_cover,
    closed_form_parity_counts,
    count_parities,
    eval_q,
    signed_double_cover_sum,
    spin_census,
    standard_refinement,
)


def brute_q(basis_values, x_bits):
    """q(x) = sum_i x_i q(e_i) + sum_k x_{a_k} x_{b_k}, written out coordinatewise."""
    h = len(basis_values) // 2
    lin = sum(v * x for v, x in zip(basis_values, x_bits))
    quad = sum(x_bits[2 * k] * x_bits[2 * k + 1] for k in range(h))
    return (lin + quad) % 2


def brute_arf(basis_values):
    h = len(basis_values) // 2
    zeros = sum(1 - brute_q(basis_values, x) for x in product((0, 1), repeat=2 * h))
    return 0 if 2 * zeros > 4**h else 1


def test_pairing_nondegenerate_alternating():
    sp = SymplecticF2Space(3)
    for x in range(sp.size):
        assert sp.pairing(x, x) == 0
        if x:
            assert any(sp.pairing(x, y) for y in range(sp.size))
    assert sp.dimension == 6


def test_eval_q_examples():
    q0 = QuadraticRefinement.from_code(1, 0)
    assert eval_q(q0, [0, 0]) == 0
    assert eval_q(q0, [1, 1]) == 1
    qa = QuadraticRefinement(SymplecticF2Space(1), (1, 0))
    assert eval_q(qa, [1, 0]) == 1
    with pytest.raises(DomainError):
        eval_q(q0, [1, 0, 0])


@pytest.mark.parametrize("h", [1, 2, 3])
def test_eval_q_and_value_table_match_brute_force(h):
    for code in range(4**h):
        q = QuadraticRefinement.from_code(h, code)
        table = q.value_table()
        for x in range(4**h):
            bits = [(x >> i) & 1 for i in range(2 * h)]
            expected = brute_q(q.basis_values, bits)
            assert eval_q(q, x) == expected == table[x]


def test_refinement_rule():
    q = QuadraticRefinement.from_code(2, 0b1011)
    sp = q.space
    for x in range(sp.size):
        for y in range(sp.size):
            assert eval_q(q, x ^ y) == eval_q(q, x) ^ eval_q(q, y) ^ sp.pairing(x, y)


@pytest.mark.parametrize(
    "h, values, expected", [(1, (0, 0), 0), (1, (1, 1), 1), (2, (1, 1, 1, 1), 0)]
)
def test_arf_examples(h, values, expected):
    q = QuadraticRefinement(SymplecticF2Space(h), values)
    assert arf(q) == expected == brute_arf(values)


def test_arf_rules_agree():
    for h in range(1, 5):
        for code in range(4**h):
            q = QuadraticRefinement.from_code(h, code)
            assert arf(q) == arf_product_formula(q)


@pytest.mark.parametrize("h, expected", [(1, (3, 1)), (2, (10, 6)), (3, (36, 28))])
def test_count_parities_examples(h, expected):
    assert count_parities(h) == expected


@pytest.mark.parametrize("h", [1, 2, 3])
def test_count_parities_matches_per_form_enumeration(h):
    arfs = [brute_arf(QuadraticRefinement.from_code(h, c).basis_values) for c in range(4**h)]
    assert count_parities(h) == (arfs.count(0), arfs.count(1))


def test_count_parities_formula_and_character_sum():
    for h in range(1, 7):
        even, odd = count_parities(h)
        assert (even, odd) == closed_form_parity_counts(h)
        assert even - odd == 2**h


def test_count_parities_capacity():
    with pytest.raises(CapacityError):
        count_parities(9)
    with pytest.raises(DomainError):
        count_parities(0)


@pytest.mark.parametrize(
    "h, parity, expected",
    [(1, Parity.ODD, Fraction(-3, 2)), (1, Parity.EVEN, Fraction(1, 2)), (2, Parity.EVEN, Fraction(3, 2))],
)
def test_signed_double_cover_examples(h, parity, expected):
    assert signed_double_cover_sum(h, parity) == expected


@pytest.mark.parametrize(
    "h, parity, expected",
    [(2, Parity.EVEN, Fraction(3, 2)), (2, Parity.ODD, Fraction(-5, 2)), (3, Parity.EVEN, Fraction(7, 2))],
)
def test_closed_form_examples(h, parity, expected):
    assert closed_form_double_cover(h, parity) == expected


def brute_signed_sum(h, basis_values):
    """Sum over nonzero L of 1/2 (-1)^{h0(N) + h0(N L)}, parities from the twisted forms."""
    p = brute_arf(basis_values)
    total = Fraction(0)
    for L in product((0, 1), repeat=2 * h):
        if not any(L):
            continue
        # twisted refinement q + <L, .> has basis values q(e_i) + <L, e_i>
        twisted = list(basis_values)
        for k in range(h):
            twisted[2 * k] ^= L[2 * k + 1]
            twisted[2 * k + 1] ^= L[2 * k]
        total += Fraction((-1) ** ((p + brute_arf(twisted)) % 2), 2)
    return total


@pytest.mark.parametrize("h", [1, 2, 3])
def test_signed_sum_against_twisted_arf_oracle(h):
    for code in range(4**h):
        q = QuadraticRefinement.from_code(h, code)
        p = arf(q)
        assert signed_double_cover_sum(h, p, q) == brute_signed_sum(h, q.basis_values)


def test_signed_sum_equals_closed_form():
    for h in range(1, 7):
        for p in Parity:
            assert signed_double_cover_sum(h, p) == closed_form_double_cover(h, p)


def test_signed_sum_rejects_wrong_representative():
    with pytest.raises(GwError):
        signed_double_cover_sum(1, Parity.EVEN, standard_refinement(1, Parity.ODD))


def test_spin_census_rows():
    rows = spin_census([1, 2])
    assert rows == [
        (1, 3, 1, Fraction(1, 2), Fraction(-3, 2)),
        (2, 10, 6, Fraction(3, 2), Fraction(-5, 2)),
    ]
