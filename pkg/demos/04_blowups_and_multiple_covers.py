"""
Two structural identities checked directly on assembled series:
the fiber series of E(m+2) is m times that of E(3), and blowing up leaves
every coefficient of the minimal model in place.
"""

from gwseries.grading import ClassMonomial
from gwseries.series import coefficient_at
from gwseries.surface_model import assemble_minimal_series, blowup_transform, elliptic_surface

base = assemble_minimal_series(elliptic_surface(3), 8, 0)
for m in range(1, 5):
    s = assemble_minimal_series(elliptic_surface(m + 2), 8, 0)
    ratios = {coefficient_at(s, ClassMonomial((d,), 0)).value / coefficient_at(base, ClassMonomial((d,), 0)).value for d in range(1, 9)}
    print(f"E({m + 2}) / E(3) ratios:", ", ".join(str(r) for r in sorted(ratios)))

blown = blowup_transform(base, 1)
print("t_F      :", coefficient_at(blown, ClassMonomial((0, 1), 0)))
print("t_F t_E  :", coefficient_at(blown, ClassMonomial((1, 1), 0)))
print("t_E^2    :", coefficient_at(blown, ClassMonomial((2, 0), 0)))
