import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from graetzkit import (
    DecayConstants,
    Limit,
    RootStructureError,
    asymptote,
    beta1_exchange,
    beta1_wall_order4,
    solve_quartic_wall_order6,
)
from graetzkit.charpoly import quartic_coefficients

pe_st = st.one_of(st.just(0.0), st.floats(1e-6, 1e6))
alpha_st = st.floats(1e-6, 1.0)
d_st = st.sampled_from([0, 1])


def test_order4_no_flow():
    assert beta1_wall_order4(0.0, 0) == pytest.approx(2 * math.sqrt(3 / 5), rel=1e-15)
    assert beta1_wall_order4(0.0, 1) == pytest.approx(2 * math.sqrt(8 / 6), rel=1e-15)
    assert beta1_wall_order4(0.0, 0) == pytest.approx(1.549193, abs=5e-7)
    assert beta1_wall_order4(0.0, 1) == pytest.approx(2.309401, abs=5e-7)


def test_order4_fast_flow():
    beta = beta1_wall_order4(100.0, 0)
    assert beta == pytest.approx(0.023994, abs=5e-7)
    assert beta == pytest.approx(2.4 / 100.0, rel=1e-3)


@pytest.mark.parametrize("d, expected", [(0, (1.5695, 6.0446)), (1, (2.3935, 7.0902))])
def test_quartic_no_flow(d, expected):
    roots = solve_quartic_wall_order6(0.0, d)
    assert roots.beta1 == pytest.approx(expected[0], abs=5e-4)
    assert roots.beta2 == pytest.approx(expected[1], abs=5e-4)


@pytest.mark.parametrize("d", [0, 1])
def test_quartic_fast_flow_beta2(d):
    roots = solve_quartic_wall_order6(1e6, d)
    assert roots.beta2 == pytest.approx(math.sqrt(11 * (d + 3)), abs=1e-3)


def test_quartic_fast_flow_value():
    assert solve_quartic_wall_order6(1e6, 0).beta2 == pytest.approx(5.744563, abs=1e-5)


def test_exchange_examples():
    assert beta1_exchange(10.0, 1.0, 0) == 0.0
    assert beta1_exchange(0.0, 0.5, 0) == pytest.approx(math.sqrt(1.5), rel=1e-15)
    assert beta1_exchange(1e-12, 0.5, 0) == pytest.approx(1.224745, abs=5e-7)
    assert beta1_exchange(0.0, 1e-15, 1) == pytest.approx(math.sqrt(8), rel=1e-12)
    assert beta1_exchange(5.0, 1e-15, 1) == pytest.approx(2.828427, abs=5e-6)


def test_asymptote_examples():
    assert asymptote(Limit.EXCHANGE_ADVECTION, pe=1000, alpha=0.9, d=0) == pytest.approx(5.0e-4, rel=1e-12)
    assert asymptote(Limit.EXCHANGE_CONDUCTION, alpha=0.0, d=0) == pytest.approx(math.sqrt(3), rel=1e-15)
    assert asymptote(Limit.WALL_ORDER4_ADVECTION, pe=10, d=1) == pytest.approx(0.4 * 8 / 6, rel=1e-15)
    assert asymptote("wall-order6-fast-advection", d=1) == pytest.approx(math.sqrt(44), rel=1e-15)


def test_asymptote_rejects_unknown_kind():
    with pytest.raises(ValueError):
        asymptote("bogus")


@given(pe_st, d_st)
def test_order4_quadratic_identity(pe, d):
    b = beta1_wall_order4(pe, d)
    c = 4 * (d + 1) * (d + 3) / (d + 5)
    assert abs(b * b + pe * b - c) <= 1e-12 * max(b * b, pe * b, c)


@given(pe_st, alpha_st, d_st)
def test_exchange_quadratic_identity(pe, alpha, d):
    b = beta1_exchange(pe, alpha, d)
    lin = 2 * alpha * pe / (3 + d)
    c = (1 - alpha) * (d + 1) * (d + 3)
    assert abs(b * b + lin * b - c) <= 1e-12 * max(b * b, lin * b, c, 1e-300)


@given(pe_st, d_st)
def test_quartic_residual(pe, d):
    coeffs = quartic_coefficients(pe, d)
    roots = solve_quartic_wall_order6(pe, d)
    scale = np.abs(coeffs).max()
    for beta in (roots.beta1, roots.beta2):
        assert abs(np.polyval(coeffs, -beta)) <= 1e-9 * scale
    assert 0 < roots.beta1 < roots.beta2


@given(st.floats(0.0, 1e5), st.floats(0.0, 1e5), d_st)
def test_beta1_nonincreasing_in_pe(p1, p2, d):
    lo, hi = sorted((p1, p2))
    assert beta1_wall_order4(hi, d) <= beta1_wall_order4(lo, d)
    assert solve_quartic_wall_order6(hi, d).beta1 <= solve_quartic_wall_order6(lo, d).beta1 * (1 + 1e-12)


@pytest.mark.parametrize("d", [0, 1])
def test_beta2_approaches_fast_flow_limit(d):
    target = math.sqrt(11 * (d + 3))
    gaps = [abs(solve_quartic_wall_order6(pe, d).beta2 - target) for pe in (10, 100, 1e3, 1e4, 1e5)]
    assert all(g2 < g1 for g1, g2 in zip(gaps, gaps[1:]))


@pytest.mark.parametrize("d", [0, 1])
def test_order4_asymptote_error_decreasing(d):
    errs = [
        abs(beta1_wall_order4(pe, d) / asymptote(Limit.WALL_ORDER4_ADVECTION, pe=pe, d=d) - 1)
        for pe in (1e3, 1e4, 1e5)
    ]
    assert errs[0] > errs[1] > errs[2]
    assert errs[2] < 1e-8


@pytest.mark.parametrize("d", [0, 1])
def test_order6_beta1_scales_as_inverse_pe(d):
    products = [solve_quartic_wall_order6(pe, d).beta1 * pe for pe in (1e3, 1e4, 1e5)]
    assert abs(products[2] - products[1]) < abs(products[1] - products[0])
    # the quartic's small-root balance, not the form missing 11(3+d)
    limit = asymptote(Limit.WALL_ORDER6_SLOW_ADVECTION, pe=1.0, d=d)
    assert products[2] == pytest.approx(limit, rel=1e-3)
    assert products[2] != pytest.approx(18 * (d + 1) * (5 + 3 * d), rel=0.5)


@pytest.mark.parametrize("d", [0, 1])
def test_exchange_limits(d):
    adv = beta1_exchange(1000.0, 0.99, d)
    assert adv == pytest.approx(asymptote(Limit.EXCHANGE_ADVECTION, pe=1000.0, alpha=0.99, d=d), rel=1e-2)
    cond = beta1_exchange(0.01, 0.01, d)
    assert cond == pytest.approx(asymptote(Limit.EXCHANGE_CONDUCTION, alpha=0.01, d=d), rel=1e-2)


@given(st.floats(0.0, 1e4), d_st)
def test_exchange_decreasing_in_alpha(pe, d):
    values = [beta1_exchange(pe, a, d) for a in (0.01, 0.2, 0.5, 0.8, 0.99, 1.0)]
    assert all(v2 < v1 for v1, v2 in zip(values, values[1:]))


@pytest.mark.parametrize(
    "call",
    [
        lambda: beta1_wall_order4(-1.0, 0),
        lambda: beta1_wall_order4(1.0, 2),
        lambda: beta1_wall_order4(math.nan, 0),
        lambda: solve_quartic_wall_order6(-1.0, 1),
        lambda: beta1_exchange(1.0, 0.0, 0),
        lambda: beta1_exchange(1.0, 1.5, 0),
    ],
)
def test_bad_arguments(call):
    with pytest.raises(ValueError):
        call()


def test_decay_constants_validated():
    with pytest.raises(ValueError):
        DecayConstants(0.0)
    with pytest.raises(ValueError):
        DecayConstants(2.0, 1.0)


def test_root_structure_error_on_wrong_root_count(monkeypatch):
    import graetzkit.charpoly as cp

    monkeypatch.setattr(cp, "quartic_coefficients", lambda pe, d: np.array([1.0, 0.0, 1.0, 0.0, 1.0]))
    with pytest.raises(RootStructureError):
        cp.solve_quartic_wall_order6(1.0, 0)
