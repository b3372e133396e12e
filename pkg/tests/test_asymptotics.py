"""Leading-order Weyl behaviour of the model spectra.

The ratio ``N / (a Vol Lambda^{d/2})`` approaches one at the rate of the
boundary term, about ``2 b / (a sqrt(Lambda))`` on the disk.  With
``lambda = 2``, ``mu = 1`` that term is still near 3% at ``Lambda = 2000``,
so the scans below run far enough for the ratio averaged over the top
decade to settle inside 3%.
"""

import math

import numpy as np
import pytest

from elastoweyl.material import new_material
from elastoweyl.spectra.cylinder import cylinder_spectrum
from elastoweyl.spectra.disk import disk_spectrum
from elastoweyl.weyl import b_dir_quadrature, b_free_quadrature, weyl_a

DISK = new_material(2.0, 1.0, 2)
CYL = new_material(2.0, 1.0, 3)


def top_decade_ratio(cf, m, vol, lambda_max):
    L = np.linspace(0.9 * lambda_max, lambda_max, 1001)
    return cf(L) / (weyl_a(m) * vol * L ** (m.dim / 2.0))


@pytest.mark.parametrize("bc,lambda_max", [("dir", 10000.0), ("free", 14000.0)])
def test_disk_leading_order(bc, lambda_max):
    ratio = top_decade_ratio(disk_spectrum(DISK, bc, lambda_max), DISK, math.pi, lambda_max)
    assert abs(ratio.mean() - 1) < 0.03
    # the remaining gap has the sign of b
    b = b_dir_quadrature(DISK) if bc == "dir" else b_free_quadrature(DISK)
    assert np.sign(ratio.mean() - 1) == np.sign(b)


@pytest.mark.parametrize("bc,lambda_max", [("dir", 1200.0), ("free", 1600.0)])
def test_cylinder_leading_order(bc, lambda_max):
    cf = cylinder_spectrum(CYL, bc, math.pi, lambda_max)
    ratio = top_decade_ratio(cf, CYL, 4 * math.pi ** 3, lambda_max)
    assert abs(ratio.mean() - 1) < 0.03
    b = b_dir_quadrature(CYL) if bc == "dir" else b_free_quadrature(CYL)
    assert np.sign(ratio.mean() - 1) == np.sign(b)


def test_two_term_law_closes_the_gap():
    # subtracting the boundary term leaves a much smaller relative error
    lmax = 2000.0
    L = np.linspace(0.9 * lmax, lmax, 1001)
    for bc, b in (("dir", b_dir_quadrature(DISK)), ("free", b_free_quadrature(DISK))):
        n = disk_spectrum(DISK, bc, lmax)(L)
        one = weyl_a(DISK) * math.pi * L
        two = one + 2 * math.pi * b * np.sqrt(L)
        assert abs(np.mean(n / two) - 1) < 0.2 * abs(np.mean(n / one) - 1)
