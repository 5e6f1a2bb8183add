"""특수 함수 모듈.

복소 로그감마, 디감마, 리만-지겔 세타 함수를 제공합니다.

두 함수 모두 점화식 log Gamma(z) = log Gamma(z + K) - sum log(z + k) 로 인수를
Stirling 급수가 정확한 영역(Re z >= SHIFT_TARGET)까지 옮긴 뒤 급수를 더합니다.
각 log(z + k) 는 주 분지이므로 우반평면에서 허수부가 연속입니다.
스칼라와 numpy 배열을 모두 받습니다.
"""

import math

import numpy as np
from numpy.typing import ArrayLike

from rsl.errors import DomainError

SHIFT_TARGET = 12.0
HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)
EULER_GAMMA = 0.57721566490153286061

# B_{2k}, k = 1..8
_BERNOULLI = np.array(
    [
        1.0 / 6.0,
        -1.0 / 30.0,
        1.0 / 42.0,
        -1.0 / 30.0,
        5.0 / 66.0,
        -691.0 / 2730.0,
        7.0 / 6.0,
        -3617.0 / 510.0,
    ]
)
_K = np.arange(1, _BERNOULLI.size + 1)
_STIRLING = _BERNOULLI / (2 * _K * (2 * _K - 1))
_PSI_SERIES = _BERNOULLI / (2 * _K)


def _as_complex(z: ArrayLike) -> np.ndarray:
    arr = np.asarray(z, dtype=np.complex128)
    if not np.all(np.isfinite(arr)):
        raise DomainError("argument must be finite")
    poles = (arr.imag == 0.0) & (arr.real <= 0.0) & (arr.real == np.round(arr.real))
    if np.any(poles):
        raise DomainError(f"Gamma has a pole at {arr[poles].ravel()[0].real:g}")
    return arr


def _shift_count(arr: np.ndarray) -> int:
    if arr.size == 0:
        return 0
    return max(0, math.ceil(SHIFT_TARGET - float(arr.real.min())))


def _unwrap(result: np.ndarray) -> complex | np.ndarray:
    if not np.all(np.isfinite(result)):
        raise DomainError("special function overflowed")
    return result[()] if result.ndim == 0 else result


def log_gamma(z: ArrayLike) -> complex | np.ndarray:
    """주 분지의 log Gamma(z) 를 계산합니다.

    Args:
        z: 복소수 또는 복소 배열 (0 이하의 정수 제외).

    Returns:
        log Gamma(z). 입력이 스칼라면 complex.

    Raises:
        DomainError: z 가 0 이하의 정수(극점)이거나 유한하지 않은 경우.
    """
    arr = _as_complex(z)
    shift = _shift_count(arr)

    correction = np.zeros_like(arr)
    w = arr.copy()
    for _ in range(shift):
        correction += np.log(w)
        w = w + 1.0

    inv_w = 1.0 / w
    inv_w2 = inv_w * inv_w
    series = np.zeros_like(arr)
    power = inv_w.copy()
    for coefficient in _STIRLING:
        series += coefficient * power
        power = power * inv_w2

    stirling = (w - 0.5) * np.log(w) - w + HALF_LOG_TWO_PI + series
    return _unwrap(stirling - correction)


def digamma(z: ArrayLike) -> complex | np.ndarray:
    """디감마 함수 psi(z) = Gamma'(z)/Gamma(z) 를 계산합니다.

    Args:
        z: 복소수 또는 복소 배열 (0 이하의 정수 제외).

    Returns:
        psi(z).

    Raises:
        DomainError: 극점인 경우.
    """
    arr = _as_complex(z)
    shift = _shift_count(arr)

    correction = np.zeros_like(arr)
    w = arr.copy()
    for _ in range(shift):
        correction += 1.0 / w
        w = w + 1.0

    inv_w2 = 1.0 / (w * w)
    series = np.zeros_like(arr)
    power = inv_w2.copy()
    for coefficient in _PSI_SERIES:
        series += coefficient * power
        power = power * inv_w2

    asymptotic = np.log(w) - 0.5 / w - series
    return _unwrap(asymptotic - correction)


def rs_theta(t: ArrayLike) -> float | np.ndarray:
    """리만-지겔 세타 함수 theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi.

    작은 t 에서도 정확하도록 점근 급수가 아닌 log_gamma 로부터 직접 계산합니다.

    Args:
        t: 실수 또는 실수 배열.

    Returns:
        theta(t). 홀함수입니다.
    """
    t_arr = np.asarray(t, dtype=np.float64)
    value = np.imag(log_gamma(0.25 + 0.5j * t_arr)) - 0.5 * t_arr * math.log(math.pi)
    return value[()] if np.ndim(value) == 0 else value


def rs_theta_asymptotic(t: ArrayLike) -> float | np.ndarray:
    """theta(t) 의 점근 전개 (t/2)log(t/2pi) - t/2 - pi/8 + 1/(48t) + 7/(5760 t^3).

    Args:
        t: 양의 실수 또는 배열.

    Returns:
        점근 근사값.
    """
    t_arr = np.asarray(t, dtype=np.float64)
    value = (
        0.5 * t_arr * np.log(t_arr / (2.0 * math.pi))
        - 0.5 * t_arr
        - math.pi / 8.0
        + 1.0 / (48.0 * t_arr)
        + 7.0 / (5760.0 * t_arr**3)
    )
    return value[()] if np.ndim(value) == 0 else value
