"""적응형 심프슨 구적법 테스트."""

import math

import numpy as np
import pytest
from scipy.integrate import quad

from rsl.analysis.quadrature import adaptive_simpson
from rsl.errors import QuadratureAccuracyError


def test_polynomial_exact() -> None:
    """3 차 다항식은 정확히 적분되는지 테스트합니다."""
    result = adaptive_simpson(lambda x: x**3 - 2.0 * x + 1.0, 0.0, 2.0, 1e-12)
    assert result.value == pytest.approx(2.0, abs=1e-13)
    assert result.intervals >= 16


def test_gaussian_against_scipy() -> None:
    """가우시안 적분을 scipy quad 와 비교합니다."""
    result = adaptive_simpson(lambda x: np.exp(-0.5 * x * x), -8.0, 8.0, 1e-10)
    reference, _ = quad(lambda x: math.exp(-0.5 * x * x), -8.0, 8.0)
    assert result.value == pytest.approx(reference, abs=1e-9)
    assert result.value == pytest.approx(math.sqrt(2.0 * math.pi), abs=1e-9)
    assert result.error_estimate < 1e-9


def test_oscillatory() -> None:
    """진동하는 피적분 함수를 테스트합니다."""
    result = adaptive_simpson(np.sin, 0.0, 10.0 * math.pi, 1e-10)
    assert result.value == pytest.approx(0.0, abs=1e-9)


def test_empty_interval() -> None:
    """a == b 이면 0 을 돌려주는지 테스트합니다."""
    result = adaptive_simpson(np.exp, 1.0, 1.0, 1e-8)
    assert (result.value, result.intervals) == (0.0, 0)


def test_deterministic() -> None:
    """같은 입력에서 같은 결과가 나오는지 테스트합니다."""
    first = adaptive_simpson(np.cos, 0.0, 3.0, 1e-11)
    second = adaptive_simpson(np.cos, 0.0, 3.0, 1e-11)
    assert first == second


def test_rejects_nonpositive_tolerance() -> None:
    """tol <= 0 을 거부하는지 테스트합니다."""
    with pytest.raises(ValueError):
        adaptive_simpson(np.sin, 0.0, 1.0, 0.0)


def test_singular_integrand_fails() -> None:
    """수렴하지 않는 경우 추정값과 함께 오류를 내는지 테스트합니다."""
    with pytest.raises(QuadratureAccuracyError) as excinfo:
        adaptive_simpson(
            lambda x: 1.0 / np.sqrt(np.abs(x) + 1e-300), 0.0, 1.0, 1e-14, max_depth=12
        )
    assert excinfo.value.estimate > 0.0
    assert excinfo.value.error_estimate > 0.0
