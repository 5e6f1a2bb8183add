"""란다우 모형 동역학 모듈.

평면 위의 대전 입자가 수직 자기장 B 와 안장형 퍼텐셜 e lambda x y 를 받는 계:

    L = (mu/2)(vx^2 + vy^2) + (e B / c) y vx - e lambda x y

오일러-라그랑주 방정식은

    x'' = -omega_B y' - kappa y,   y'' = omega_B x' - kappa x

(omega_B = eB/(mu c), kappa = e lambda / mu) 이고, 특성방정식
s^4 + omega_B^2 s^2 - kappa^2 = 0 은 사이클로트론 모드 s = +-i omega_c 와
쌍곡 모드 s = +-omega_h 를 줍니다. 가장 낮은 란다우 준위로 사영하면
p = hbar y / ell^2 가 x 의 켤레 운동량이 되어 H = |omega_h| x p 가 됩니다.
"""

import logging
import math
from collections.abc import Callable

import numpy as np
from pydantic import BaseModel, ConfigDict, FiniteFloat, PositiveFloat

from rsl.errors import RegimeError, StabilityError

logger = logging.getLogger(__name__)

STEPS_PER_PERIOD_MIN = 50
ADIABATIC_RATIO = 100.0


class LandauParams(BaseModel):
    """란다우 모형의 물리 파라미터 (모두 양수).

    Attributes:
        mass: 질량 mu.
        charge: 전하 e.
        field: 자기장 B.
        light_speed: 광속 c.
        coupling: 안장 퍼텐셜 결합 lambda.
        hbar: 플랑크 상수.
    """

    model_config = ConfigDict(frozen=True)

    mass: PositiveFloat = 1.0
    charge: PositiveFloat = 1.0
    field: PositiveFloat
    light_speed: PositiveFloat = 1.0
    coupling: PositiveFloat
    hbar: PositiveFloat = 1.0

    @property
    def omega_b(self) -> float:
        """eB/(mu c)."""
        return self.charge * self.field / (self.mass * self.light_speed)

    @property
    def kappa(self) -> float:
        """e lambda / mu."""
        return self.charge * self.coupling / self.mass

    @property
    def magnetic_length(self) -> float:
        """ell = (hbar c / (e B))^(1/2)."""
        return math.sqrt(self.hbar * self.light_speed / (self.charge * self.field))

    @property
    def omega_c(self) -> float:
        half = 0.5 * self.omega_b**2
        return math.sqrt(half + math.hypot(half, self.kappa))

    @property
    def omega_h(self) -> float:
        # omega_c^2 omega_h^2 = kappa^2
        return self.kappa / self.omega_c

    @property
    def frequency_ratio(self) -> float:
        return self.omega_c / self.omega_h

    @property
    def weak_coupling(self) -> bool:
        """(eB/c)^2 > 2 mu e lambda."""
        return (self.charge * self.field / self.light_speed) ** 2 > (
            2.0 * self.mass * self.charge * self.coupling
        )


class NormalModes(BaseModel):
    model_config = ConfigDict(frozen=True)

    omega_c: float
    omega_h_abs: float
    ratio: float


class LandauState(BaseModel):
    """2 차원 위상 공간의 한 점 (위치와 속도)."""

    model_config = ConfigDict(frozen=True)

    x: FiniteFloat
    y: FiniteFloat
    vx: FiniteFloat
    vy: FiniteFloat

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.vx, self.vy], dtype=np.float64)


class Trajectory(BaseModel):
    """적분 결과. 각 배열은 같은 길이입니다."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    params: LandauParams
    t: np.ndarray
    x: np.ndarray
    y: np.ndarray
    vx: np.ndarray
    vy: np.ndarray

    @property
    def energy(self) -> np.ndarray:
        return conserved_energy(self.params, self.x, self.y, self.vx, self.vy)

    def state(self, index: int) -> LandauState:
        return LandauState(
            x=float(self.x[index]),
            y=float(self.y[index]),
            vx=float(self.vx[index]),
            vy=float(self.vy[index]),
        )


class LLLProjection(BaseModel):
    """가장 낮은 란다우 준위 사영의 척도.

    Attributes:
        ell: 자기 길이.
        omega_h_abs: 쌍곡 모드 진동수.
        momentum_scale: hbar / ell^2 (p = momentum_scale * y).
        energy_unit: hbar |omega_h|.
    """

    model_config = ConfigDict(frozen=True)

    ell: float
    omega_h_abs: float
    momentum_scale: float
    energy_unit: float


def landau_normal_modes(params: LandauParams) -> NormalModes:
    """특성방정식 s^4 + omega_B^2 s^2 - kappa^2 = 0 의 두 모드 진동수.

    omega_c^2 = omega_B^2/2 + sqrt(omega_B^4/4 + kappa^2),  omega_h = kappa / omega_c

    lambda -> 0 에서 omega_c -> eB/(mu c), omega_h -> lambda c / B 입니다.

    Args:
        params: 파라미터. 양수가 아니면 pydantic 검증에서 이미 거부됩니다.

    Returns:
        NormalModes.
    """
    return NormalModes(
        omega_c=params.omega_c,
        omega_h_abs=params.omega_h,
        ratio=params.frequency_ratio,
    )


def conserved_energy(
    params: LandauParams,
    x: np.ndarray | float,
    y: np.ndarray | float,
    vx: np.ndarray | float,
    vy: np.ndarray | float,
) -> np.ndarray | float:
    """보존량 mu (vx^2 + vy^2)/2 + e lambda x y."""
    return 0.5 * params.mass * (np.square(vx) + np.square(vy)) + (
        params.charge * params.coupling * np.multiply(x, y)
    )


def lll_energy(
    params: LandauParams, x: np.ndarray | float, y: np.ndarray | float
) -> np.ndarray | float:
    """사영된 xp 에너지 e lambda x y 를 hbar |omega_h| 단위로 표현합니다."""
    unit = params.hbar * params.omega_h
    return params.charge * params.coupling * np.multiply(x, y) / unit


def _system_matrix(params: LandauParams) -> np.ndarray:
    wb = params.omega_b
    k = params.kappa
    return np.array(
        [
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
            [0.0, -k, 0.0, -wb],
            [-k, 0.0, wb, 0.0],
        ]
    )


def rk4_step(
    f: Callable[[float, np.ndarray], np.ndarray],
    t: float,
    state: np.ndarray,
    h: float,
) -> np.ndarray:
    """고전적 4 차 룽게-쿠타 한 단계."""
    half = 0.5 * h
    k1 = f(t, state)
    k2 = f(t + half, state + half * k1)
    k3 = f(t + half, state + half * k2)
    k4 = f(t + h, state + h * k3)
    return state + (h / 6.0) * (k1 + 2.0 * (k2 + k3) + k4)


def rk4_propagator(matrix: np.ndarray, h: float) -> np.ndarray:
    """선형계 u' = A u 에 대한 RK4 한 단계 행렬.

    단위 행렬의 각 열에 rk4_step 을 적용한 것과 같습니다.
    """
    identity = np.eye(matrix.shape[0])
    return rk4_step(lambda _t, u: matrix @ u, 0.0, identity, h)


def integrate_landau(
    params: LandauParams,
    init: LandauState,
    dt: float,
    T: float,
    every: int = 1,
) -> Trajectory:
    """고정 간격 RK4 로 운동방정식을 적분합니다.

    T 가 음수면 시간을 거꾸로 적분합니다. 실제 간격은 |T| 를 나누어 떨어지도록
    dt 이하로 줄어듭니다.

    Args:
        params: 파라미터.
        init: 초기 상태.
        dt: 최대 시간 간격 (양수).
        T: 총 적분 시간.
        every: 기록 간격 (단계 수).

    Returns:
        Trajectory (t = 0 과 마지막 단계 포함).

    Raises:
        StabilityError: dt 가 사이클로트론 주기의 1/50 보다 큰 경우.
        ValueError: dt <= 0 또는 every < 1 인 경우.
    """
    if dt <= 0.0:
        raise ValueError(f"dt must be positive, got {dt}")
    if every < 1:
        raise ValueError(f"every must be >= 1, got {every}")
    period = 2.0 * math.pi / params.omega_c
    if dt > period / STEPS_PER_PERIOD_MIN:
        raise StabilityError(
            f"dt={dt:g} exceeds cyclotron period/{STEPS_PER_PERIOD_MIN} "
            f"= {period / STEPS_PER_PERIOD_MIN:g}"
        )

    n_steps = max(1, math.ceil(abs(T) / dt)) if T != 0.0 else 0
    h = T / n_steps if n_steps else 0.0
    propagator = rk4_propagator(_system_matrix(params), h)
    logger.debug("integrating %d RK4 steps of h=%g", n_steps, h)

    recorded = list(range(0, n_steps + 1, every))
    if recorded[-1] != n_steps:
        recorded.append(n_steps)
    states = np.empty((len(recorded), 4))
    state = init.as_array()
    slot = 0
    for step in range(n_steps + 1):
        if step == recorded[slot]:
            states[slot] = state
            slot += 1
            if slot == len(recorded):
                break
        state = propagator @ state

    return Trajectory(
        params=params,
        t=np.asarray(recorded, dtype=np.float64) * h,
        x=states[:, 0],
        y=states[:, 1],
        vx=states[:, 2],
        vy=states[:, 3],
    )


def guiding_center_init(params: LandauParams, x0: float, y0: float) -> LandauState:
    """쌍곡 모드만 들뜬 초기 상태 (사이클로트론 운동 없음).

    성장 모드 (1, -r) 와 감쇠 모드 (-r, 1), r = omega_h^2 / (omega_B omega_h + kappa)
    의 조합으로 (x0, y0) 를 표현하고 각 모드의 속도를 부여합니다.
    """
    wh = params.omega_h
    r = wh * wh / (params.omega_b * wh + params.kappa)
    det = 1.0 - r * r
    a = (x0 + r * y0) / det
    b = (y0 + r * x0) / det
    return LandauState(
        x=x0,
        y=y0,
        vx=wh * (a + r * b),
        vy=wh * (-r * a - b),
    )


def cyclotron_init(params: LandauParams, amplitude: float = 1.0) -> LandauState:
    """순수 사이클로트론 모드 x = A cos(omega_c t) 초기 상태."""
    wc = params.omega_c
    ratio = wc * wc / complex(params.kappa, params.omega_b * wc)
    return LandauState(
        x=amplitude,
        y=amplitude * ratio.real,
        vx=0.0,
        vy=-amplitude * wc * ratio.imag,
    )


def estimate_cyclotron_frequency(traj: Trajectory) -> float:
    """x(t) 의 Hann 창 FFT 최대 봉우리로 각진동수를 추정합니다.

    봉우리 주변 세 점의 로그 크기에 포물선을 맞춰 구간 사이를 보간합니다.

    Raises:
        ValueError: 표본이 16 개 미만인 경우.
    """
    x = np.asarray(traj.x, dtype=np.float64)
    if x.size < 16:
        raise ValueError("need at least 16 samples for a spectral estimate")
    dt = float(traj.t[1] - traj.t[0])
    signal = (x - x.mean()) * np.hanning(x.size)
    spectrum = np.abs(np.fft.rfft(signal))
    freqs = np.fft.rfftfreq(x.size, d=abs(dt))

    peak = int(np.argmax(spectrum[1:-1])) + 1
    a, b, c = np.log(spectrum[peak - 1 : peak + 2] + 1e-300)
    denom = a - 2.0 * b + c
    shift = 0.5 * (a - c) / denom if denom != 0.0 else 0.0
    bin_width = freqs[1] - freqs[0]
    return float(2.0 * math.pi * (freqs[peak] + shift * bin_width))


def estimate_growth_rate(traj: Trajectory, start_fraction: float = 0.5) -> float:
    """후반부 log|x| 의 최소제곱 기울기로 쌍곡 성장률을 추정합니다."""
    start = int(len(traj.t) * start_fraction)
    t = np.asarray(traj.t[start:])
    x = np.abs(np.asarray(traj.x[start:]))
    keep = x > 0.0
    slope, _ = np.polyfit(t[keep], np.log(x[keep]), 1)
    return float(slope)


def lll_projection(
    params: LandauParams, threshold: float = ADIABATIC_RATIO
) -> LLLProjection:
    """가장 낮은 란다우 준위 사영의 척도를 계산합니다.

    Args:
        params: 파라미터.
        threshold: 요구되는 omega_c / |omega_h| 최소값.

    Returns:
        LLLProjection.

    Raises:
        RegimeError: omega_c / |omega_h| < threshold 인 경우.
    """
    ratio = params.frequency_ratio
    if ratio < threshold:
        raise RegimeError(
            f"LLL projection needs omega_c/|omega_h| >= {threshold:g}, got {ratio:.6g}"
        )
    ell = params.magnetic_length
    return LLLProjection(
        ell=ell,
        omega_h_abs=params.omega_h,
        momentum_scale=params.hbar / (ell * ell),
        energy_unit=params.hbar * params.omega_h,
    )
