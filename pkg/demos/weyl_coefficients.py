"""
Second Weyl coefficients across materials
=========================================

The counting function of an elastic body grows like
``a Vol(Omega) Lambda^{d/2} + b Vol(boundary) Lambda^{(d-1)/2}``.
Here we tabulate ``a``, ``b_dir`` and ``b_free`` and compare the two ways of
evaluating ``b`` in odd dimensions.
"""

# %%
# A material is fixed by the Lamé pair and the dimension.  Everything
# depends on the ratio ``alpha = mu / (lambda + 2 mu)`` apart from a power
# of ``mu``.
from elastoweyl import compute_coefficients, material_from_alpha, new_material

m = new_material(2.0, 1.0, 3)
c = compute_coefficients(m)
print(f"alpha = {m.alpha}")
print(f"a = {c.a:.10f}  b_dir = {c.b_dir:.10f}  b_free = {c.b_free:.10f}")

# %%
# In odd dimensions ``b`` also has a closed form: a rational function of
# ``alpha`` built from a few Taylor coefficients.  Both routes agree to
# quadrature accuracy.
odd = compute_coefficients(m, method="closed_form_odd")
print(f"closed form: b_dir = {odd.b_dir:.12f}  b_free = {odd.b_free:.12f}")
print(f"difference:  {abs(odd.b_dir - c.b_dir):.1e}  {abs(odd.b_free - c.b_free):.1e}")

# %%
# Sweeping ``alpha`` at ``mu = 1`` shows the Dirichlet coefficient staying
# negative and the free one positive, with the free coefficient blowing up
# as ``alpha -> 1`` where the Rayleigh speed goes to zero.
print(f"{'alpha':>6} " + " ".join(f"{'d=' + str(d):>22}" for d in (2, 3, 4, 5)))
for alpha in (0.05, 0.25, 0.5, 0.75, 0.95):
    cells = []
    for d in (2, 3, 4, 5):
        cc = compute_coefficients(material_from_alpha(alpha, 1.0, d))
        cells.append(f"{cc.b_dir:+.4e}/{cc.b_free:+.4e}")
    print(f"{alpha:6.2f} " + " ".join(f"{s:>22}" for s in cells))

# %%
# The heat trace ``sum exp(-t Lambda_n)`` carries the same information with
# Gamma function factors.
print(f"heat: a = {c.a_heat:.8f}  b_dir = {c.b_dir_heat:.8f}  b_free = {c.b_free_heat:.8f}")
