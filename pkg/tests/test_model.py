import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from softiga.model import (DiffusionCoeffs, PotentialShape, ProblemSpec,
                           default_shift, gamma_field, gamma_hat_field,
                           kappa_from_mass_ratio, potential_value)


def test_potential_values():
    assert potential_value(PotentialShape.LORENTZIAN_CUBE, 5.0, 0.0) == pytest.approx(5.0)
    assert potential_value(PotentialShape.LORENTZIAN_CUBE, 1.0, 1.0) == pytest.approx(1 / 8)
    assert potential_value(PotentialShape.GAUSSIAN, 1.0, 0.0) == pytest.approx(1.0)


@given(st.sampled_from(list(PotentialShape)),
       st.floats(min_value=1e-3, max_value=10.0),
       st.floats(min_value=-25.0, max_value=25.0))
def test_potential_even_and_positive(shape, beta, xi):
    # the Gaussian underflows to exactly 0.0 past |xi| ~ 27; inside the
    # working domain the value is strictly positive
    v = potential_value(shape, beta, xi)
    assert v > 0
    assert v == pytest.approx(potential_value(shape, beta, -xi), rel=1e-14)


def test_short_range_decay():
    for shape in PotentialShape:
        xi = np.array([10.0, 100.0, 1000.0])
        assert np.all(xi ** 2 * potential_value(shape, 1.0, xi) < [1e-1, 1e-5, 1e-9])


def test_kappa_paper_values():
    assert kappa_from_mass_ratio(20.0) == DiffusionCoeffs(41 / 84, 1 / 21)
    assert kappa_from_mass_ratio(1.0) == DiffusionCoeffs(3 / 8, 1 / 2)
    assert kappa_from_mass_ratio(100.0) == DiffusionCoeffs(201 / 404, 1 / 101)
    with pytest.raises(ValueError):
        kappa_from_mass_ratio(0.0)


def test_kappa_limits_and_crossing():
    big = kappa_from_mass_ratio(1e9)
    assert big.kx == pytest.approx(0.5, abs=1e-8)
    assert big.ky == pytest.approx(0.0, abs=1e-8)
    # kx = ky exactly at R = 3/2
    cross = kappa_from_mass_ratio(1.5)
    assert cross.kx == pytest.approx(cross.ky, abs=1e-15)


def test_default_shift():
    one_d = ProblemSpec(1, 20.0, PotentialShape.LORENTZIAN_CUBE, beta=5.0)
    assert default_shift(one_d) == pytest.approx(6.0)
    assert one_d.shift == pytest.approx(6.0)
    two_d = ProblemSpec(2, 20.0, PotentialShape.GAUSSIAN, beta=1.0)
    assert default_shift(two_d) == pytest.approx(3.0)
    small = ProblemSpec(1, 20.0, PotentialShape.GAUSSIAN, beta=0.1)
    assert default_shift(small) == pytest.approx(1.1)
    # the run with gamma0 = sup(gamma) is admissible
    assert ProblemSpec(1, 20.0, PotentialShape.LORENTZIAN_CUBE, beta=5.0,
                       gamma0=5.0).shift == pytest.approx(5.0)


def test_spec_validation():
    with pytest.raises(ValueError):
        ProblemSpec(3, 20.0, PotentialShape.GAUSSIAN, beta=1.0)
    with pytest.raises(ValueError):
        ProblemSpec(1, -1.0, PotentialShape.GAUSSIAN, beta=1.0)
    with pytest.raises(ValueError):
        ProblemSpec(1, 20.0, PotentialShape.GAUSSIAN, beta=0.0)
    with pytest.raises(ValueError):
        # shift below sup(gamma) flips the sign of gamma_hat
        ProblemSpec(1, 20.0, PotentialShape.GAUSSIAN, beta=2.0, gamma0=1.0)


def test_gamma_field_1d_and_2d():
    spec1 = ProblemSpec(1, 20.0, PotentialShape.LORENTZIAN_CUBE, beta=5.0)
    assert gamma_field(spec1, 0.0) == pytest.approx(5.0)
    spec2 = ProblemSpec(2, 20.0, PotentialShape.GAUSSIAN, beta=1.0)
    assert gamma_field(spec2, 0.0, 0.0) == pytest.approx(2.0)
    with pytest.raises(ValueError):
        gamma_field(spec1, 0.0, 1.0)
    with pytest.raises(ValueError):
        gamma_field(spec2, 0.0)


@given(st.floats(min_value=-10, max_value=10), st.floats(min_value=-10, max_value=10))
def test_gamma_field_symmetry_in_y(x, y):
    spec = ProblemSpec(2, 20.0, PotentialShape.GAUSSIAN, beta=1.0, mass_ratio=20.0)
    assert gamma_field(spec, x, y) == pytest.approx(gamma_field(spec, x, -y), rel=1e-14)


def test_gamma_hat_positive_everywhere(rng):
    spec1 = ProblemSpec(1, 20.0, PotentialShape.LORENTZIAN_CUBE, beta=5.0)
    xs = rng.uniform(-20, 20, size=10_000)
    assert np.all(gamma_hat_field(spec1, xs) > 0)
    spec2 = ProblemSpec(2, 20.0, PotentialShape.GAUSSIAN, beta=1.0, mass_ratio=20.0)
    pts = rng.uniform(-20, 20, size=(10_000, 2))
    assert np.all(gamma_hat_field(spec2, pts[:, 0], pts[:, 1]) > 0)
