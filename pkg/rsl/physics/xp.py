"""xp 해밀토니안 모듈.

H = x p 의 닫힌 형태 흐름과 세 가지 준고전 계수 함수(Berry-Keating, Connes,
란다우 모형의 자속 계수)를 제공합니다.

Berry-Keating 계수는 ell_x ell_p = 2 pi hbar 인 경계 상수를 이미 흡수한 형태이므로
경계 상수는 인자로 받지 않습니다.
"""

import math

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, FiniteFloat

from rsl.errors import DomainError

MASLOV_SHIFT = 0.125


class PhasePoint(BaseModel):
    """xp 위상 공간의 한 점."""

    model_config = ConfigDict(frozen=True)

    x: FiniteFloat
    p: FiniteFloat

    @property
    def energy(self) -> float:
        return self.x * self.p


def xp_flow(x0: float, p0: float, t: float) -> PhasePoint:
    """H = xp 의 시간 t 흐름 (x0 e^t, p0 e^-t).

    Args:
        x0: 초기 위치.
        p0: 초기 운동량.
        t: 시간.

    Returns:
        PhasePoint.
    """
    return PhasePoint(x=x0 * math.exp(t), p=p0 * math.exp(-t))


def _positive(E: ArrayLike, name: str = "E") -> np.ndarray:
    arr = np.asarray(E, dtype=np.float64)
    if np.any(arr <= 0.0):
        raise DomainError(f"{name} must be positive")
    return arr


def _cutoff_count(E: np.ndarray, cutoff_sq: float) -> np.ndarray:
    x = E / (2.0 * math.pi)
    return x * math.log(cutoff_sq / (2.0 * math.pi)) - x * (np.log(x) - 1.0)


def _unwrap(value: np.ndarray) -> float | np.ndarray:
    return value[()] if value.ndim == 0 else value


def count_bk(E: ArrayLike, maslov: bool = False) -> float | np.ndarray:
    """Berry-Keating 계수 (E/2pi)(log(E/2pi) - 1) + 1.

    Args:
        E: 양의 에너지.
        maslov: True 면 마슬로프 위상 -1/8 을 더합니다.

    Returns:
        반고전 상태 수.
    """
    x = _positive(E) / (2.0 * math.pi)
    value = x * (np.log(x) - 1.0) + 1.0
    if maslov:
        value = value - MASLOV_SHIFT
    return _unwrap(value)


def count_connes(E: ArrayLike, Lambda: float) -> float | np.ndarray:
    """Connes 계수 (E/2pi) log(Lambda^2/2pi) - (E/2pi)(log(E/2pi) - 1).

    Lambda 가 커지면 첫 항이 로그로 발산합니다.
    """
    if Lambda <= 0.0:
        raise DomainError("Lambda must be positive")
    return _unwrap(_cutoff_count(_positive(E), Lambda * Lambda))


def count_landau(E: ArrayLike, L: float, ell: float) -> float | np.ndarray:
    """란다우 모형 첫 사분면의 자속 계수.

    (E/2pi) log(L^2 / (2 pi ell^2)) - (E/2pi)(log(E/2pi) - 1)

    Lambda = L/ell 에서 count_connes 와 항별로 같습니다.

    Args:
        E: 양의 에너지 (hbar |omega_h| 단위).
        L: 상자 크기.
        ell: 자기 길이 (0 < ell < L).

    Returns:
        상태 수.
    """
    if not 0.0 < ell < L:
        raise DomainError(f"need 0 < ell < L, got ell={ell:g}, L={L:g}")
    ratio = L / ell
    return _unwrap(_cutoff_count(_positive(E), ratio * ratio))
