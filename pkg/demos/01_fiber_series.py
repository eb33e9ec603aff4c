"""
Elliptic fibers: closed-form genus-one series versus a sublattice census.

Connected degree-d covers of a torus are index-d sublattices of Z^2.  Each
carries the sign (-1)^{h0(f*N)} and weight 1/d.  Summing them reproduces the
closed forms -sigma(d)/d (trivial normal bundle) and
(sigma(d) - 2 sigma(d/2))/d (multiplicity-2 fiber).
"""

from gwseries.exact_arith import format_rational
from gwseries.lattice_covers import (
    TorsionCharacter,
    census_table,
    f2_fiber_coefficient,
    regular_fiber_coefficient,
)

#%% Regular fiber
print(f"{'d':>3} {'covers':>7} {'census':>8} {'closed form':>12}")
for d, n, trivial, signed in census_table(1, (0, 0), range(1, 11)):
    print(f"{d:>3} {n:>7} {format_rational(signed):>8} {format_rational(regular_fiber_coefficient(d)):>12}")

#%% Multiplicity-2 fiber: the normal bundle is a 2-torsion character
print()
for d, n, trivial, signed in census_table(2, (1, 1), range(1, 11)):
    print(f"{d:>3} {n:>7} {trivial:>3} {format_rational(signed):>8} {format_rational(f2_fiber_coefficient(d)):>12}")

#%% Multiplicity m > 2: every double cover has h0 = 0, so the degree-2 count is 3/2
for m in (3, 4, 5):
    _, _, _, signed = census_table(m, (1, 0), [2])[0]
    print(f"m={m}: degree 2 -> {format_rational(signed)}")
