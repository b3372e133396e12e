"""
The Rayleigh surface wave
=========================

A traction-free half-space supports a surface wave travelling at
``sqrt(mu) gamma_R``.  ``gamma_R^2`` is the only root in ``(0, 1)`` of the
Rayleigh cubic ``w^3 - 8 w^2 + 8(3 - 2 alpha) w + 16(alpha - 1)``.
"""

# %%
from elastoweyl import critical_alpha, rayleigh_roots

for alpha in (0.01, 0.25, 1 / 3, 0.5, 0.9, 0.99):
    r = rayleigh_roots(alpha)
    print(f"alpha={alpha:.4f}  gamma_R={r.gamma_r:.10f}  other roots: {r.case_tag}")

# %%
# The two other roots are real above a critical ratio and complex
# conjugate below it.
print(f"critical alpha = {critical_alpha():.15f}")

# %%
# Limits: ``gamma_R`` tends to about 0.9553 for an incompressible medium
# (``alpha -> 0``) and to zero as ``alpha -> 1``.
for alpha in (1e-8, 1 - 1e-8):
    print(alpha, rayleigh_roots(alpha).gamma_r)
