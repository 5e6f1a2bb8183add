"""xp 해밀토니안과 계수 함수 테스트."""

import math

import numpy as np
import pytest

from rsl.errors import DomainError
from rsl.numtheory.zeros import ZeroTable
from rsl.physics.xp import (
    MASLOV_SHIFT,
    count_bk,
    count_connes,
    count_landau,
    xp_flow,
)

TWO_PI = 2.0 * math.pi


def test_xp_flow() -> None:
    """xp 흐름의 닫힌 형태와 에너지 보존을 테스트합니다."""
    start = xp_flow(1.5, -0.4, 0.0)
    assert (start.x, start.p) == (1.5, -0.4)

    doubled = xp_flow(1.0, 1.0, math.log(2.0))
    assert doubled.x == pytest.approx(2.0, rel=1e-15)
    assert doubled.p == pytest.approx(0.5, rel=1e-15)

    for t in (-3.0, 0.5, 7.0):
        assert xp_flow(2.0, 3.0, t).energy == pytest.approx(6.0, rel=1e-12)


def test_count_bk_values() -> None:
    """E = 2pi, 2pi e 에서의 값과 마슬로프 보정을 테스트합니다."""
    assert count_bk(TWO_PI) == pytest.approx(0.0, abs=1e-15)
    assert count_bk(TWO_PI * math.e) == pytest.approx(1.0, abs=1e-15)
    assert count_bk(TWO_PI, maslov=True) == pytest.approx(-MASLOV_SHIFT, abs=1e-15)
    with pytest.raises(DomainError):
        count_bk(0.0)
    with pytest.raises(DomainError):
        count_bk(np.array([1.0, -1.0]))


def test_count_bk_derivative() -> None:
    """dN/dE = log(E/2pi)/2pi 를 중앙 차분으로 테스트합니다."""
    E = np.array([10.0, 50.0, 200.0, 1000.0])
    step = 1e-4
    finite = (count_bk(E + step) - count_bk(E - step)) / (2.0 * step)
    np.testing.assert_allclose(finite, np.log(E / TWO_PI) / TWO_PI, atol=1e-6)


def test_count_connes_values() -> None:
    """Lambda^2 = 2pi 인 경우, E = 2pi 인 경우, 로그 발산을 테스트합니다."""
    E = np.array([3.0, 30.0, 300.0])
    np.testing.assert_allclose(
        count_connes(E, math.sqrt(TWO_PI)), 1.0 - count_bk(E), atol=1e-12
    )
    expected = math.log(100.0 / TWO_PI) + 1.0
    assert count_connes(TWO_PI, 10.0) == pytest.approx(expected)

    values = [count_connes(50.0, cutoff) for cutoff in (10.0, 100.0, 1000.0)]
    assert values[0] < values[1] < values[2]
    with pytest.raises(DomainError):
        count_connes(50.0, 0.0)


def test_count_landau_values() -> None:
    """E_max = L^2/ell^2 에서의 값과 대입 예제를 테스트합니다."""
    L, ell = 30.0, 1.5
    e_max = (L / ell) ** 2
    assert count_landau(e_max, L, ell) == pytest.approx(e_max / TWO_PI, rel=1e-12)

    L_e = math.sqrt(TWO_PI * math.e)
    assert count_landau(TWO_PI, L_e, 1.0) == pytest.approx(2.0, rel=1e-12)


def test_count_landau_equals_connes() -> None:
    """Lambda = L/ell 에서 두 계수가 비트 단위로 같은지 테스트합니다."""
    rng = np.random.default_rng(42)
    E = rng.uniform(0.1, 500.0, 100)
    L = 40.0
    ell = 0.7
    np.testing.assert_array_equal(count_landau(E, L, ell), count_connes(E, L / ell))


@pytest.mark.parametrize(("L", "ell"), [(1.0, 1.0), (1.0, 2.0), (1.0, 0.0)])
def test_count_landau_domain(L: float, ell: float) -> None:
    """0 < ell < L 이 아니면 거부하는지 테스트합니다.

    Args:
        L: 상자 크기.
        ell: 자기 길이.
    """
    with pytest.raises(DomainError):
        count_landau(10.0, L, ell)


@pytest.mark.slow
def test_count_bk_tracks_zero_midpoints(zeros_2600: ZeroTable) -> None:
    """100 <= n <= 2000 에서 count_bk(gamma_n) - 1/8 - (n - 1/2) 의 평균을 테스트합니다.

    Args:
        zeros_2600: 높이 2600 까지의 영점 테이블.
    """
    gammas = zeros_2600.as_array()
    assert gammas.size >= 2000
    n = np.arange(1, gammas.size + 1)
    window = (n >= 100) & (n <= 2000)
    deviation = count_bk(gammas[window]) - MASLOV_SHIFT - (n[window] - 0.5)
    assert abs(float(deviation.mean())) <= 0.1
