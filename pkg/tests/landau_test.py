"""란다우 모형 동역학 테스트."""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from rsl.errors import RegimeError, StabilityError
from rsl.physics.landau import (
    LandauParams,
    LandauState,
    conserved_energy,
    cyclotron_init,
    estimate_cyclotron_frequency,
    estimate_growth_rate,
    guiding_center_init,
    integrate_landau,
    landau_normal_modes,
    lll_energy,
    lll_projection,
    rk4_propagator,
    rk4_step,
)


@pytest.fixture
def adiabatic_params() -> LandauParams:
    """omega_c / |omega_h| 가 약 100 인 파라미터.

    Returns:
        LandauParams.
    """
    return LandauParams(field=1.0, coupling=0.01)


def _period(params: LandauParams) -> float:
    return 2.0 * math.pi / params.omega_c


def test_params_reject_nonpositive() -> None:
    """양수가 아닌 파라미터를 거부하는지 테스트합니다."""
    with pytest.raises(ValidationError):
        LandauParams(field=0.0, coupling=0.1)
    with pytest.raises(ValidationError):
        LandauParams(field=1.0, coupling=-0.1)
    with pytest.raises(ValidationError):
        LandauParams(field=1.0, coupling=0.1, mass=0.0)


def test_normal_modes_solve_characteristic_equation() -> None:
    """두 진동수가 s^4 + omega_B^2 s^2 - kappa^2 = 0 을 만족하는지 테스트합니다."""
    params = LandauParams(
        mass=2.0, charge=1.5, field=3.0, light_speed=2.0, coupling=0.7
    )
    modes = landau_normal_modes(params)
    wb2 = params.omega_b**2
    k2 = params.kappa**2
    wc, wh = modes.omega_c, modes.omega_h_abs
    assert wc**4 - wb2 * wc**2 - k2 == pytest.approx(0.0, abs=1e-12)
    assert wh**4 + wb2 * wh**2 - k2 == pytest.approx(0.0, abs=1e-12)
    assert modes.ratio == pytest.approx(wc / wh)
    assert params.weak_coupling
    assert not LandauParams(field=1.0, coupling=1.0).weak_coupling


def test_weak_coupling_limits() -> None:
    """lambda -> 0 에서 두 진동수의 극한값을 테스트합니다."""
    params = LandauParams(field=2.0, light_speed=1.5, coupling=1e-4)
    modes = landau_normal_modes(params)
    cyclotron = params.charge * params.field / (params.mass * params.light_speed)
    hyperbolic = params.coupling * params.light_speed / params.field
    assert modes.ratio >= 1e4
    assert modes.omega_c == pytest.approx(cyclotron, rel=1e-6)
    assert modes.omega_h_abs == pytest.approx(hyperbolic, rel=1e-4)


def test_rk4_propagator_matches_steps() -> None:
    """선형계에서 전파 행렬이 rk4_step 과 같은지 테스트합니다."""
    matrix = np.array([[0.0, 1.0], [-4.0, -0.1]])
    state = np.array([1.0, 0.5])
    stepped = rk4_step(lambda _t, u: matrix @ u, 0.0, state, 0.01)
    propagated = rk4_propagator(matrix, 0.01) @ state
    np.testing.assert_allclose(propagated, stepped, atol=1e-14)


def test_integrate_rejects_large_step(adiabatic_params: LandauParams) -> None:
    """dt 가 주기/50 보다 크면 StabilityError 를 테스트합니다.

    Args:
        adiabatic_params: 파라미터.
    """
    init = LandauState(x=1.0, y=1.0, vx=0.0, vy=0.0)
    with pytest.raises(StabilityError):
        integrate_landau(
            adiabatic_params, init, _period(adiabatic_params) / 40.0, 1.0
        )
    with pytest.raises(ValueError):
        integrate_landau(adiabatic_params, init, 0.0, 1.0)
    with pytest.raises(ValueError):
        integrate_landau(adiabatic_params, init, 0.01, 1.0, every=0)


def test_integrate_records_endpoints(adiabatic_params: LandauParams) -> None:
    """기록 간격과 무관하게 처음과 마지막 상태가 기록되는지 테스트합니다.

    Args:
        adiabatic_params: 파라미터.
    """
    init = LandauState(x=1.0, y=0.5, vx=0.1, vy=0.0)
    dt = _period(adiabatic_params) / 100.0
    full = integrate_landau(adiabatic_params, init, dt, 1.0)
    sparse = integrate_landau(adiabatic_params, init, dt, 1.0, every=7)
    assert full.t[0] == 0.0
    assert full.t[-1] == pytest.approx(1.0)
    assert sparse.t[-1] == full.t[-1]
    assert sparse.state(-1) == full.state(-1)
    assert full.state(0) == init
    still = integrate_landau(adiabatic_params, init, dt, 0.0)
    assert len(still.t) == 1


def test_energy_conserved(adiabatic_params: LandauParams) -> None:
    """보존 에너지의 상대 변화가 1e-6 이하인지 테스트합니다.

    Args:
        adiabatic_params: 파라미터.
    """
    init = guiding_center_init(adiabatic_params, 1.0, 1.0)
    T = 5.0 / adiabatic_params.omega_h
    traj = integrate_landau(
        adiabatic_params, init, _period(adiabatic_params) / 400.0, T, every=50
    )
    energy = traj.energy
    assert float(np.max(np.abs(energy / energy[0] - 1.0))) <= 1e-6


def test_cyclotron_orbit() -> None:
    """lambda 가 매우 작을 때 반지름 일정한 원운동과 주기를 테스트합니다."""
    params = LandauParams(field=2.0, coupling=1e-9)
    init = cyclotron_init(params, 1.0)
    period = _period(params)
    traj = integrate_landau(params, init, period / 200.0, 20.0 * period)
    np.testing.assert_allclose(np.hypot(traj.x, traj.y), 1.0, atol=1e-6)
    estimate = estimate_cyclotron_frequency(traj)
    assert estimate == pytest.approx(params.omega_c, rel=1e-2)


def test_hyperbolic_growth_rate(adiabatic_params: LandauParams) -> None:
    """안내 중심 궤도의 성장률이 |omega_h| 와 1% 이내인지 테스트합니다.

    Args:
        adiabatic_params: 파라미터.
    """
    init = guiding_center_init(adiabatic_params, 1.0, 1.0)
    T = 5.0 / adiabatic_params.omega_h
    traj = integrate_landau(
        adiabatic_params, init, _period(adiabatic_params) / 100.0, T, every=20
    )
    rate = estimate_growth_rate(traj)
    assert rate == pytest.approx(adiabatic_params.omega_h, rel=1e-2)


def test_time_reversal() -> None:
    """앞으로 적분한 뒤 거꾸로 적분하면 초기 상태로 돌아오는지 테스트합니다."""
    params = LandauParams(field=1.0, coupling=1e-9)
    init = LandauState(x=1.0, y=0.5, vx=0.2, vy=-0.1)
    dt = _period(params) / 400.0
    T = 5.0 * _period(params)
    forward = integrate_landau(params, init, dt, T)
    back = integrate_landau(params, forward.state(-1), dt, -T)
    np.testing.assert_allclose(
        back.state(-1).as_array(), init.as_array(), atol=1e-8
    )


def test_adiabatic_guiding_center_tracks_hyperbola() -> None:
    """큰 B 에서 x y 가 한 쌍곡 시간 동안 1% 이내로 유지되는지 테스트합니다."""
    params = LandauParams(field=1.0, coupling=1e-4)
    init = guiding_center_init(params, 1.0, 1.0)
    T = 1.0 / params.omega_h
    traj = integrate_landau(params, init, _period(params) / 100.0, T, every=100)

    product = traj.x * traj.y
    assert float(np.max(np.abs(product / product[0] - 1.0))) <= 1e-2
    assert traj.x[-1] == pytest.approx(math.e, rel=1e-2)

    ell = params.magnetic_length
    np.testing.assert_allclose(
        lll_energy(params, traj.x, traj.y), product / ell**2, rtol=1e-2
    )
    energy = conserved_energy(params, traj.x, traj.y, traj.vx, traj.vy)
    assert float(np.max(np.abs(energy / energy[0] - 1.0))) <= 1e-6


def test_lll_projection() -> None:
    """자기 길이, 운동량 척도, 단열 조건을 테스트합니다."""
    params = LandauParams(field=1.0, coupling=1e-3)
    projection = lll_projection(params)
    assert projection.ell == pytest.approx(1.0)
    assert projection.momentum_scale == pytest.approx(1.0)
    assert projection.energy_unit == pytest.approx(params.omega_h)

    doubled = lll_projection(LandauParams(field=2.0, coupling=1e-3))
    assert doubled.ell**2 == pytest.approx(projection.ell**2 / 2.0, rel=1e-15)

    with pytest.raises(RegimeError):
        lll_projection(LandauParams(field=1.0, coupling=0.1))
