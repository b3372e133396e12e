"""Two-term Weyl asymptotics for linear elasticity."""

from .material import Material, MaterialError, material_from_alpha, new_material, wave_speeds
from .rayleigh import (
    RayleighRoots, critical_alpha, gamma_r, rayleigh_cubic, rayleigh_roots, rayleigh_w1,
)
from .shift import (
    ShiftProfile, b_from_shift, rayleigh_eigenvalue, scattering_phase, shift,
    shift_components, shift_dir, shift_free, shift_profile,
)
from .spectra import (
    CountingFunction, cylinder_spectrum, disk_secular, disk_spectrum, sum_two_squares,
)
from .weyl import (
    WeylCoefficients, b_dir_odd, b_dir_quadrature, b_free_odd, b_free_quadrature,
    compute_coefficients, heat_coefficients, liu_b_dir, oddform_identity_check, weyl_a,
)

__version__ = "0.1.0"
