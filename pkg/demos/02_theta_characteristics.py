"""
Theta characteristics as quadratic refinements over F_2.

A genus-h curve has 2^{2h} theta characteristics; Arf-even ones number
2^{h-1}(2^h + 1).  The signed double-cover sum over the 2-torsion points
collapses to (1/2)[(-1)^{h0(N)} 2^h - 1].
"""

from gwseries.exact_arith import format_rational
from gwseries.spin_parity import (
    Parity,
    QuadraticRefinement,
    arf,
    closed_form_double_cover,
    eval_q,
    spin_census,
)

#%% One refinement on a genus-1 curve
q = QuadraticRefinement.from_code(1, 0b11)
print("values on 0, a, b, a+b:", [eval_q(q, x) for x in range(4)], "arf =", arf(q))

#%% Census
print(f"{'h':>2} {'even':>6} {'odd':>6} {'sum even':>9} {'sum odd':>9} {'formula':>9}")
for h, even, odd, se, so in spin_census(range(1, 6)):
    formula = f"{format_rational(closed_form_double_cover(h, Parity.EVEN))}, {format_rational(closed_form_double_cover(h, Parity.ODD))}"
    print(f"{h:>2} {even:>6} {odd:>6} {format_rational(se):>9} {format_rational(so):>9}   {formula}")
