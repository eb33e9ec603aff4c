"""
Assembling generating series for several surfaces.

Numeric slots are exact; slots the theory leaves undetermined print as
bracketed tags, never as 0.
"""

from gwseries.series import render_text
from gwseries.surface_model import (
    GeneralType,
    K3,
    ProperlyElliptic,
    SurfaceDescriptor,
    assemble_gw_series,
    elliptic_surface,
)

#%% K3: only the constant-map slot survives
print(render_text(assemble_gw_series(SurfaceDescriptor(K3()), 3, 2)))

#%% E(4) blown up once, genus one only
print()
print(render_text(assemble_gw_series(elliptic_surface(4, blowup_count=1), 3, 0)))

#%% An elliptic surface with multiple fibers of multiplicity 2 and 3
print()
s = SurfaceDescriptor(ProperlyElliptic(0, 3, (2, 3)))
print(render_text(assemble_gw_series(s, 2, 0)))

#%% Same surface, filling multiplicity-3 slots from the etale census (conjectural)
print()
print(render_text(assemble_gw_series(s, 2, 0, conjectural_etale=True)))

#%% General type, K^2 = 1, chi = 2: canonical class and its double covers
print()
print(render_text(assemble_gw_series(SurfaceDescriptor(GeneralType(1, 2)), 2, 4)))
