import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.integrate import quad

from graetzkit import (
    Exchange,
    FluidProperties,
    Geometry,
    ProblemSpec,
    UniformWall,
    dimensionless,
    make_spec,
    velocity,
)
from graetzkit.core import dissipation_temperature, polyval, solve_small


def test_mean_velocity_tube():
    assert dimensionless(make_spec(1, u0=2.0)).ubar == 1.0


def test_mean_velocity_plates():
    assert dimensionless(make_spec(0, u0=3.0)).ubar == 2.0


def test_insulated_exchange_groups():
    g = dimensionless(make_spec(0, h=0.0))
    assert g.lam == 0.0
    assert g.alpha == 1.0


def test_no_viscosity_no_dissipation():
    assert dimensionless(make_spec(0, u0=5.0, mu=0.0)).A == 0.0


def test_exchange_groups_absent_for_uniform_wall():
    g = dimensionless(make_spec(1))
    assert g.lam is None and g.alpha is None


def test_peclet_and_dissipation_values():
    spec = make_spec(1, a=0.01, u0=0.2, k=0.6, rho=1000.0, cp=4000.0, mu=1e-3)
    g = dimensionless(spec)
    D = 0.6 / 4e6
    assert g.pe == pytest.approx(0.2 * 0.01 / D, rel=1e-14)
    assert g.A == pytest.approx(4e-3 * 0.04 / (4e6 * 1e-4), rel=1e-14)
    assert dissipation_temperature(spec) == pytest.approx(g.A * 1e-4 / D, rel=1e-14)


def test_with_peclet_round_trip():
    spec = make_spec(0, pe=37.5, k=2.0, rho=3.0, cp=5.0, a=0.2)
    assert spec.peclet == pytest.approx(37.5, rel=1e-14)


@pytest.mark.parametrize("d", [0, 1])
def test_velocity_profile(d):
    spec = make_spec(d, u0=1.7, a=0.5)
    assert velocity(spec, 0.0) == 1.7
    assert velocity(spec, 0.5) == 0.0
    assert velocity(spec, 0.25) == pytest.approx(0.75 * 1.7, rel=1e-15)


def test_velocity_rejects_outside():
    spec = make_spec(0)
    with pytest.raises(ValueError):
        velocity(spec, 1.0001)
    with pytest.raises(ValueError):
        velocity(spec, -1e-9)


@pytest.mark.parametrize("d", [0, 1])
def test_velocity_integrates_to_mean(d):
    spec = make_spec(d, u0=2.3, a=0.7)
    a = spec.a
    weight = (lambda r: 1.0 / a) if d == 0 else (lambda r: 2.0 * r / a**2)
    mean, _ = quad(lambda r: velocity(spec, r) * weight(r), 0.0, a, epsabs=1e-15, epsrel=1e-13)
    assert mean == pytest.approx(dimensionless(spec).ubar, rel=1e-12)


@given(st.floats(0.0, 1e4), st.floats(0.0, 1e4))
def test_alpha_decreasing_in_lambda(h1, h2):
    a1 = dimensionless(make_spec(0, h=h1)).alpha
    a2 = dimensionless(make_spec(0, h=h2)).alpha
    assert 0.0 < a1 <= 1.0
    if h1 < h2:
        assert a1 >= a2
    if 1e-6 < h1 < h2 * (1 - 1e-9):
        assert a1 > a2


def test_alpha_vanishes_for_strong_exchange():
    assert dimensionless(make_spec(1, h=1e12)).alpha < 1e-11


@pytest.mark.parametrize(
    "kwargs",
    [
        {"a": 0.0},
        {"u0": -1.0},
        {"T_i": math.nan},
        {"k": 0.0},
        {"mu": -1.0},
        {"h": -0.1},
        {"T_w": math.inf},
    ],
)
def test_invalid_inputs_rejected(kwargs):
    with pytest.raises(ValueError):
        make_spec(0, **kwargs)


def test_geometry_flag_validated():
    with pytest.raises(ValueError):
        ProblemSpec(Geometry(2), 1.0, 1.0, FluidProperties(1, 1, 1), 1.0, UniformWall(0.0))


def test_temperature_scale_fallback():
    spec = make_spec(0, T_i=300.0, T_w=300.0)
    assert spec.temperature_scale == 1.0
    spec = ProblemSpec(Geometry.TUBE, 1.0, 1.0, FluidProperties(1, 1, 1), 280.0, Exchange(2.0, 300.0))
    assert spec.temperature_scale == -20.0
    assert spec.T_ref == 300.0


def test_polyval_and_solve_small():
    assert polyval([1.0, -3.0, 2.0], 2.0) == 0.0
    m = np.array([[2.0, 1.0], [1.0, 3.0]])
    rhs = np.array([[3.0, 4.0], [1.0, 2.0]])
    sol = solve_small(m, rhs)
    np.testing.assert_allclose(sol @ m.T, rhs, rtol=1e-14)
