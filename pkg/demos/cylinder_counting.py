"""
Counting eigenvalues of a flat cylinder
=======================================

On ``T^2 x [0, h]`` horizontal Fourier modes separate the problem.  Each
wavenumber ``K = k1^2 + k2^2`` carries shear-horizontal modes in closed
form plus symmetric and antisymmetric Lamb modes, all with multiplicity
``Sigma_2(K)``.
"""

# %%
import math

import numpy as np

from elastoweyl import compute_coefficients, cylinder_spectrum, new_material, sum_two_squares

print("Sigma_2:", [sum_two_squares(K) for K in range(11)])

# %%
m = new_material(2.0, 1.0, 3)
c = compute_coefficients(m)
h = math.pi
lmax = 400.0
vol, area = (2 * math.pi) ** 2 * h, 8 * math.pi ** 2

# %%
# Branch labels record where each root came from.
cf = cylinder_spectrum(m, "free", h, lmax)
for v, mult, branch in cf.records[:8]:
    print(f"{v:10.6f} x{mult:<3d} {branch}")

# %%
# The residual ``N - a Vol Lambda^{3/2}`` divided by ``Lambda`` settles near
# ``b Vol(boundary)``.
L = np.linspace(lmax / 2, lmax, 1001)
for bc, b in (("dir", c.b_dir), ("free", c.b_free)):
    spectrum = cf if bc == "free" else cylinder_spectrum(m, bc, h, lmax)
    resid = (spectrum(L) - c.a * vol * L ** 1.5) / L
    print(f"{bc}: mean {resid.mean():+.4f}  predicted {b * area:+.4f}")
