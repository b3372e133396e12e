import math

import numpy as np
import pytest

from elastoweyl.material import material_from_alpha, new_material
from elastoweyl.rayleigh import rayleigh_w1
from elastoweyl.shift import (
    b_from_shift, bound_state_count, gauge_constants, phase_shift, rayleigh_eigenvalue,
    scattering_data, scattering_phase, shift, shift_components, shift_dir, shift_free,
    shift_from_scattering, shift_profile,
)
from elastoweyl.weyl import b_dir_quadrature, b_free_quadrature

M = new_material(2, 1, 3)
LAMBDA_R = 0.869604565232721207124943973505938367803


def test_dirichlet_values():
    assert shift_dir(M, 1, 5) == -0.75
    assert shift_dir(M, 1, 0.5) == 0.0
    expected = -0.5 - math.atan(1 / math.sqrt(2)) / math.pi
    assert shift_dir(M, 1, 2) == pytest.approx(expected, abs=1e-15)
    assert shift_dir(M, 1, 2) == pytest.approx(-0.695913276015, abs=1e-12)


def test_free_values():
    assert shift_free(M, 1, 0.9) == 1.0
    assert shift_free(M, 1, 5) == 0.75
    assert shift_free(M, 1, 0.5) == 0.0
    # the arctan numerator vanishes at Lambda = 2 mu
    assert shift_free(M, 1, 2) == pytest.approx(0.5, abs=1e-15)


def test_breakpoints_are_right_continuous_and_flagged():
    assert shift_dir(M, 1, 1.0, return_flag=True) == (-0.5, True)
    assert shift_dir(M, 1, 4.0, return_flag=True) == (-0.75, True)
    assert shift_free(M, 1, rayleigh_eigenvalue(M), return_flag=True) == (1.0, True)
    v, flag = shift_free(M, 1, 1.0, return_flag=True)
    assert flag and v == pytest.approx(0.5 + 0.5)
    assert shift_dir(M, 1, 2.0, return_flag=True)[1] is False


def test_xi_must_be_positive():
    with pytest.raises(ValueError):
        shift_dir(M, 0.0, 1.0)
    with pytest.raises(ValueError):
        shift(M, "neumann", 1.0, 1.0)


def test_profile():
    p = shift_profile(M, "free", 2.0)
    assert p.breakpoints == pytest.approx((4 * LAMBDA_R, 4.0, 16.0))
    assert p(4 * 0.9) == 1.0
    assert len(shift_profile(M, "dir").breakpoints) == 2
    assert np.allclose(p.sample([1.0, 20.0]), [0.0, 0.75])


def test_components():
    m4 = new_material(2, 1, 4)
    assert shift_components(m4, "dir", 2.0)[0] == -0.5
    assert shift_components(m4, "free", 2.0)[0] == 0.5
    for d in (2, 3, 6):
        assert shift_components(new_material(2, 1, d), "dir", 7.0)[1] == -0.5


GRID = np.linspace(0.01, 12.0, 601)


@pytest.mark.parametrize("lam", [2.0, 0.0, 7.5, -0.4])
@pytest.mark.parametrize("d", [2, 3, 4, 5])
@pytest.mark.parametrize("bc", ["dir", "free"])
def test_additivity_and_scattering_reconstruction(lam, d, bc):
    m = new_material(lam, 1.3, d)
    for L in GRID * 1.3:
        s = shift(m, bc, 1.0, L)
        perp, plane = shift_components(m, bc, L)
        assert abs(perp + plane - s) < 1e-14
        rebuilt = shift_from_scattering(m, bc, L, "plane") + shift_from_scattering(m, bc, L, "perp")
        assert abs(rebuilt - s) < 1e-14


@pytest.mark.parametrize("bc", ["dir", "free"])
def test_homogeneity(bc):
    m = new_material(3.0, 0.8, 3)
    for L in np.linspace(0.05, 5.0, 97):
        if any(abs(L - b) < 1e-6 for b in shift_profile(m, bc).breakpoints):
            continue
        base = shift(m, bc, 1.0, L)
        for s in (0.1, 1.0, 7.0):
            assert abs(shift(m, bc, s, s * s * L) - base) < 1e-14


def test_signs():
    for alpha in (0.05, 0.3, 0.7, 0.95):
        m = material_from_alpha(alpha, 1.0, 3)
        for L in np.linspace(0.01, 30, 300):
            assert shift_dir(m, 1, L) <= 0
            assert shift_free(m, 1, L) >= 0


def test_scattering_phase():
    assert scattering_phase(M, "dir", 5.0) == 0.0
    assert scattering_phase(M, "free", 2.0) == pytest.approx(0.0, abs=1e-15)
    assert scattering_phase(M, "dir", 2.0) == pytest.approx(-2 * math.atan(1 / math.sqrt(2)), abs=1e-14)
    assert scattering_phase(M, "dir", 2.0) == pytest.approx(-1.23095941734, abs=1e-10)
    with pytest.raises(ValueError):
        scattering_phase(M, "dir", 0.5)
    assert scattering_phase(new_material(2, 1, 3), "dir", 2.0, "perp") == math.pi
    assert scattering_phase(new_material(2, 1, 4), "dir", 2.0, "perp") == 0.0
    assert scattering_phase(new_material(2, 1, 3), "free", 2.0, "perp") == 0.0


def test_threshold_classification():
    assert scattering_data(M, "dir").kinds == ("rigid", "rigid")
    assert scattering_data(M, "free").kinds == ("rigid", "rigid")
    assert scattering_data(new_material(0, 1, 3), "free").kinds == ("rigid", "soft")
    assert scattering_data(new_material(2, 1, 5), "dir", "perp").kinds == ("rigid",)
    assert scattering_data(new_material(2, 1, 5), "free", "perp").kinds == ("soft",)


@pytest.mark.parametrize("lam,expected,rule", [(2.0, -1.0, -0.5), (0.0, 0.0, 0.5)])
def test_free_upper_threshold_jump_compensates(lam, expected, rule):
    m = new_material(lam, 1.0, 3)
    top = m.p_modulus
    eps = 1e-9
    # jump of arg det S itself
    below = scattering_phase(m, "free", top * (1 - eps))
    above = scattering_phase(m, "free", top * (1 + eps))
    assert (above - below) / math.pi == pytest.approx(expected, abs=1e-3)
    # rigid threshold jumps by -pi/2, soft by +pi/2
    d_phi = phase_shift(m, "free", top * (1 + eps)) - phase_shift(m, "free", top * (1 - eps))
    assert d_phi / math.pi == pytest.approx(rule, abs=1e-3)
    # both land on phi = -pi above the threshold, so the shift formula is shared
    assert phase_shift(m, "free", 2 * top) == pytest.approx(-math.pi)
    assert gauge_constants(m, "free") == pytest.approx((-1.5 * math.pi, -math.pi))


def test_rayleigh_eigenvalue():
    assert rayleigh_eigenvalue(M) == pytest.approx(LAMBDA_R, abs=1e-14)
    assert rayleigh_eigenvalue(M.scaled(4.0)) == pytest.approx(4 * LAMBDA_R, rel=1e-14)
    for alpha in np.round(np.arange(0.05, 0.96, 0.05), 2):
        m = material_from_alpha(alpha, 1.0, 3)
        assert rayleigh_eigenvalue(m) < m.mu
    assert bound_state_count(M, "free", 0.9) == 1
    assert bound_state_count(M, "free", 0.8) == 0
    assert bound_state_count(M, "dir", 3.0) == 0


def test_free_shift_has_compact_support_in_r():
    # at Lambda = 1 the free shift vanishes for r > 1/(gamma_R sqrt(mu))
    rmax = 1.0 / math.sqrt(rayleigh_w1(M.alpha))
    assert shift_free(M, rmax * 1.0001, 1.0) == 0.0
    assert shift_free(M, rmax * 0.9999, 1.0) == 1.0


def test_b_from_shift_examples():
    assert abs(b_from_shift(M, "dir") + 0.0537154) < 1e-6
    assert abs(b_from_shift(M, "free") - 0.0629989) < 1e-6


@pytest.mark.parametrize("d", [2, 3, 4, 5])
@pytest.mark.parametrize("alpha", [0.1, 0.25, 0.4, 0.6])
def test_b_from_shift_matches_quadrature(d, alpha):
    m = material_from_alpha(alpha, 1.0, d)
    assert b_from_shift(m, "dir") == pytest.approx(b_dir_quadrature(m), rel=1e-6)
    assert b_from_shift(m, "free") == pytest.approx(b_free_quadrature(m), rel=1e-6)
