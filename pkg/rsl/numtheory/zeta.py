"""제타 함수 평가 모듈.

임계선 근처에서 zeta(s), 부분 오일러 곱, 하디 Z 함수, xi 함수를 계산합니다.

- zeta_eta: 교대 디리클레 에타 급수 + Borwein 가속 (오라클 평가기)
- riemann_siegel_z: 리만-지겔 주합 + C0, C1, C2 나머지 항
- hardy_z: 낮은 높이는 에타 경로, RS_THRESHOLD 이상은 리만-지겔 경로
"""

import logging
import math
from functools import lru_cache
from typing import Literal

import numpy as np
from numpy.polynomial import Polynomial
from numpy.typing import ArrayLike

from rsl.analysis.special_fn import log_gamma, rs_theta
from rsl.errors import DivergenceDomainError, DomainError
from rsl.numtheory.primes import PrimeTable

logger = logging.getLogger(__name__)

MIN_ETA_TERMS = 10
DEFAULT_ETA_TERMS = 30
RS_THRESHOLD = 300.0
_LOG_BORWEIN_RATE = math.log(3.0 + math.sqrt(8.0))

# Taylor coefficients of C0 in z = 2p - 1 (even powers z^0 .. z^42).
_C0_EVEN = [
    0.38268343236508977173,
    0.43724046807752044936,
    0.13237657548034352332,
    -0.01360502604767418865,
    -0.01356762197010358089,
    -0.00162372532314446528,
    0.00029705353733379691,
    0.00007943300879521470,
    0.00000046556124614505,
    -0.00000143272516309551,
    -0.00000010354847112313,
    0.00000001235792708386,
    0.00000000178810838580,
    -0.00000000003391414390,
    -0.00000000001632663390,
    -0.00000000000037851093,
    0.00000000000009327423,
    0.00000000000000522184,
    -0.00000000000000033507,
    -0.00000000000000003412,
    0.00000000000000000058,
    0.00000000000000000015,
]


def _c0_polynomial() -> Polynomial:
    coefficients = np.zeros(2 * len(_C0_EVEN) - 1)
    coefficients[::2] = _C0_EVEN
    return Polynomial(coefficients)


RS_C0 = _c0_polynomial()
# C1 = -Psi'''(p) / (96 pi^2), C2 = Psi^(6)(p) / (18432 pi^4) + Psi''(p) / (64 pi^2),
# with d/dp = 2 d/dz.
RS_C1 = -RS_C0.deriv(3) / (12.0 * math.pi**2)
RS_C2 = RS_C0.deriv(6) / (288.0 * math.pi**4) + RS_C0.deriv(2) / (16.0 * math.pi**2)


def rs_c0_closed_form(z: ArrayLike) -> np.ndarray:
    """C0 의 닫힌 형태 -cos(pi z^2/2 - 5pi/8) / cos(pi z) (z = +-1/2 제외).

    Args:
        z: 2p - 1 값.

    Returns:
        C0 값.
    """
    z_arr = np.asarray(z, dtype=np.float64)
    return -np.cos(0.5 * math.pi * z_arr**2 - 0.625 * math.pi) / np.cos(math.pi * z_arr)


@lru_cache(maxsize=64)
def borwein_weights(n: int) -> np.ndarray:
    """Borwein 가속 가중치 1 - d_k/d_n (k = 0..n-1) 를 계산합니다.

    d_k 는 매우 커지므로 로그 공간에서 정규화합니다.

    Args:
        n: 항 수.

    Returns:
        길이 n 의 읽기 전용 배열.
    """
    i = np.arange(1, n + 1, dtype=np.float64)
    log_ratio = (
        math.log(4.0)
        + np.log(n + i - 1.0)
        + np.log(n - i + 1.0)
        - np.log(2.0 * i)
        - np.log(2.0 * i - 1.0)
    )
    log_a = np.concatenate(([0.0], np.cumsum(log_ratio)))
    a = np.exp(log_a - log_a.max())
    tail = np.cumsum(a[::-1])[::-1]
    weights = tail[1:] / tail[0]
    weights.setflags(write=False)
    return weights


def eta_terms_for(t_abs: float) -> int:
    """높이 |t| 에서 double 정밀도에 필요한 Borwein 항 수."""
    needed = math.ceil((0.5 * math.pi * t_abs + 40.0) / _LOG_BORWEIN_RATE)
    return max(DEFAULT_ETA_TERMS, needed)


def zeta_eta(s: ArrayLike, terms: int | None = None) -> complex | np.ndarray:
    """에타 급수로 zeta(s) = eta(s) / (1 - 2^(1-s)) 를 계산합니다.

    Args:
        s: Re s > 0 인 복소수 또는 배열 (s != 1).
        terms: Borwein 항 수 (10 이상). None 이면 |Im s| 에 맞춰 자동 선택.

    Returns:
        zeta(s).

    Raises:
        DomainError: s = 1 이거나 Re s <= 0 인 경우.
        ValueError: terms < 10 인 경우.
    """
    s_arr = np.asarray(s, dtype=np.complex128)
    if np.any(s_arr == 1.0):
        raise DomainError("zeta has a pole at s = 1")
    if np.any(s_arr.real <= 0.0):
        raise DomainError("eta series requires Re s > 0")

    if terms is None:
        t_abs = float(np.abs(s_arr.imag).max()) if s_arr.size else 0.0
        terms = eta_terms_for(t_abs)
    elif terms < MIN_ETA_TERMS:
        raise ValueError(f"terms must be >= {MIN_ETA_TERMS}, got {terms}")

    weights = borwein_weights(terms)
    total = np.zeros_like(s_arr)
    for k in range(terms):
        term = weights[k] * np.exp(-s_arr * math.log(k + 1.0))
        if k % 2:
            total -= term
        else:
            total += term

    result = total / (1.0 - np.exp((1.0 - s_arr) * math.log(2.0)))
    return result[()] if result.ndim == 0 else result


def euler_product_partial(s: complex, table: PrimeTable) -> complex:
    """부분 오일러 곱 prod_{p <= limit} (1 - p^-s)^-1 을 계산합니다.

    Args:
        s: Re s > 1 인 복소수.
        table: 소수 테이블.

    Returns:
        부분 곱.

    Raises:
        DivergenceDomainError: Re s <= 1 인 경우.
    """
    s = complex(s)
    if s.real <= 1.0:
        raise DivergenceDomainError(f"Euler product diverges for Re s = {s.real:g}")

    powers = np.exp(-s * np.log(table.as_array()))
    return complex(np.prod(1.0 / (1.0 - powers)))


def riemann_siegel_z(t: ArrayLike) -> float | np.ndarray:
    """리만-지겔 공식으로 Z(t) 를 계산합니다 (|t| >= 2).

    Z(t) = 2 sum_{n<=N} n^-1/2 cos(theta - t log n)
           + (-1)^(N-1) (t/2pi)^-1/4 [C0 + C1 a^-1 + C2 a^-2],  a = sqrt(t/2pi)

    Args:
        t: |t| >= 2 인 실수 또는 배열.

    Returns:
        Z(t) 근사값.

    Raises:
        DomainError: |t| < 2 인 경우.
    """
    t_arr = np.abs(np.asarray(t, dtype=np.float64))
    if np.any(t_arr < 2.0):
        raise DomainError("Riemann-Siegel path requires |t| >= 2")

    a = np.sqrt(t_arr / (2.0 * math.pi))
    n_terms = np.floor(a)
    z = 2.0 * (a - n_terms) - 1.0
    theta = rs_theta(t_arr)

    main = np.zeros_like(t_arr)
    n_max = int(n_terms.max()) if t_arr.size else 0
    for n in range(1, n_max + 1):
        active = n_terms >= n
        main += np.where(
            active, np.cos(theta - t_arr * math.log(n)) / math.sqrt(n), 0.0
        )

    sign = np.where(n_terms % 2 == 1, 1.0, -1.0)
    inv_a = 1.0 / a
    remainder = RS_C0(z) + RS_C1(z) * inv_a + RS_C2(z) * inv_a * inv_a
    value = 2.0 * main + sign * np.sqrt(inv_a) * remainder
    return value[()] if value.ndim == 0 else value


def _hardy_z_eta(t_abs: np.ndarray) -> np.ndarray:
    # A fixed term count below the switchover keeps each value independent of
    # which other heights share the batch.
    terms = eta_terms_for(max(RS_THRESHOLD, float(t_abs.max())))
    theta = rs_theta(t_abs)
    zeta = zeta_eta(0.5 + 1j * t_abs, terms=terms)
    return np.real(np.exp(1j * theta) * zeta)


def hardy_z(
    t: ArrayLike,
    method: Literal["auto", "eta", "riemann-siegel"] = "auto",
) -> float | np.ndarray:
    """하디 Z 함수 Z(t) = e^{i theta(t)} zeta(1/2 + it) 를 계산합니다.

    Z 는 실수 값의 짝함수이며 그 영점이 임계선 위 영점의 허수부와 같습니다.

    Args:
        t: 실수 또는 배열.
        method: "auto" 는 |t| < RS_THRESHOLD 에서 에타 경로,
            그 이상에서 리만-지겔 경로를 사용합니다.

    Returns:
        Z(t).
    """
    t_arr = np.abs(np.asarray(t, dtype=np.float64))
    scalar = t_arr.ndim == 0
    t_flat = np.atleast_1d(t_arr)

    if method == "eta":
        use_rs = np.zeros(t_flat.shape, dtype=bool)
    elif method == "riemann-siegel":
        use_rs = np.ones(t_flat.shape, dtype=bool)
    else:
        use_rs = t_flat >= RS_THRESHOLD

    value = np.empty_like(t_flat)
    if np.any(use_rs):
        value[use_rs] = riemann_siegel_z(t_flat[use_rs])
    if np.any(~use_rs):
        value[~use_rs] = _hardy_z_eta(t_flat[~use_rs])

    return float(value[0]) if scalar else value


def xi(s: ArrayLike) -> complex | np.ndarray:
    """완비 제타 함수 xi(s) = s(s-1)/2 pi^(-s/2) Gamma(s/2) zeta(s) 를 복소수로 조립합니다.

    Args:
        s: Re s > 0 인 복소수 또는 배열 (s != 1).

    Returns:
        xi(s).
    """
    s_arr = np.asarray(s, dtype=np.complex128)
    value = (
        0.5
        * s_arr
        * (s_arr - 1.0)
        * np.exp(-0.5 * s_arr * math.log(math.pi) + log_gamma(0.5 * s_arr))
        * zeta_eta(s_arr)
    )
    return value[()] if np.ndim(value) == 0 else value


def xi_critical(E: ArrayLike) -> float | np.ndarray:
    """임계선 위의 실수 값 xi(1/2 + iE) 를 계산합니다.

    xi(1/2 + iE) = -(E^2 + 1/4)/2 * pi^(-1/4) * |Gamma(1/4 + iE/2)| * Z(E)

    |Gamma| 가 exp(-pi E/4) 로 감쇠하므로 E 가 약 900 을 넘으면 0 으로 언더플로합니다.

    Args:
        E: 실수 또는 배열.

    Returns:
        xi(1/2 + iE) (짝함수, 영점에서 부호가 바뀝니다).
    """
    E_arr = np.asarray(E, dtype=np.float64)
    modulus = np.exp(np.real(log_gamma(0.25 + 0.5j * E_arr)))
    value = (
        -0.5
        * (E_arr**2 + 0.25)
        * math.pi**-0.25
        * modulus
        * np.asarray(hardy_z(E_arr), dtype=np.float64)
    )
    return value[()] if np.ndim(value) == 0 else value
