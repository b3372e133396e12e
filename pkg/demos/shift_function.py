"""
Spectral shift function of the half-space
=========================================

Freezing the boundary covector ``xi`` turns the boundary problem into an
ODE on the half line.  Its spectral shift function is a step-and-arctan
profile in ``Lambda`` whose integral over the boundary phase space gives
the second Weyl coefficient.
"""

# %%
import numpy as np

from elastoweyl import b_from_shift, compute_coefficients, new_material, shift_profile

m = new_material(2.0, 1.0, 3)
free = shift_profile(m, "free")
print("free breakpoints:", free.breakpoints)

# %%
# Below the Rayleigh eigenvalue nothing happens.  Between it and the
# shear threshold the shift equals one: the surface wave is a bound state.
for L in (0.5, 0.9, 0.99, 1.0, 2.0, 3.5, 4.0, 6.0):
    value, at_break = free.evaluate(L)
    print(f"Lambda={L:4.2f}  shift={value:+.6f}" + ("  (breakpoint)" if at_break else ""))

# %%
# The Dirichlet profile has no bound state and is never positive.
dirichlet = shift_profile(m, "dir")
grid = np.linspace(0.1, 6.0, 60)
print("dir range:", dirichlet.sample(grid).min(), dirichlet.sample(grid).max())

# %%
# Integrating the shift function reproduces ``b`` from the direct formula.
c = compute_coefficients(m)
for bc, b in (("dir", c.b_dir), ("free", c.b_free)):
    print(f"{bc}: from shift {b_from_shift(m, bc):.12f}  direct {b:.12f}")
