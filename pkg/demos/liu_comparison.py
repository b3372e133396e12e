"""
An alternative Dirichlet coefficient that fails
===============================================

A published closed form for the Dirichlet coefficient agrees with the
correct one only in the limit ``alpha -> 1``.  The disk spectrum tells the
two apart once the material is far from that limit.
"""

# %%
import math

import numpy as np

from elastoweyl import compute_coefficients, disk_spectrum, liu_b_dir, material_from_alpha, new_material

for alpha in (0.05, 0.25, 0.5, 0.75, 0.99):
    m = material_from_alpha(alpha, 1.0, 2)
    print(f"alpha={alpha:.2f}  ratio={liu_b_dir(m) / compute_coefficients(m).b_dir:.6f}")

# %%
# With ``lambda = 20`` the two predictions differ by 40%.
m = new_material(20.0, 1.0, 2)
c = compute_coefficients(m)
lmax = 2000.0
cf = disk_spectrum(m, "dir", lmax)
L = np.linspace(lmax / 2, lmax, 1001)
resid = cf(L) - c.a * math.pi * L
ours = np.abs(resid - 2 * math.pi * c.b_dir * np.sqrt(L)).mean()
liu = np.abs(resid - 2 * math.pi * liu_b_dir(m) * np.sqrt(L)).mean()
print(f"mean |deviation| from measured residual: ours {ours:.3f}, alternative {liu:.3f}")
