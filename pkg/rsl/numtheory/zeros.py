"""영점 탐색 및 계수 함수 모듈.

하디 Z 함수의 부호 변화로 임계선 위 영점을 찾고, 영점 계수 함수의
매끄러운 부분과 소수 합으로 표현되는 요동 부분을 계산합니다.
"""

import logging
import math
import warnings

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, field_validator
from scipy.special import ndtr

from rsl.analysis.special_fn import rs_theta
from rsl.errors import DomainError, InsufficientDataError, MissedZeroWarning
from rsl.numtheory.primes import PrimeTable
from rsl.numtheory.zeta import hardy_z
from rsl.parallel import ordered_map, split_evenly

logger = logging.getLogger(__name__)

SCAN_FLOOR = 10.0
MIN_T_MAX = 15.0
DEFAULT_GRID_FACTOR = 8.0
DEFAULT_REFINE_TOL = 1e-10
MAX_GRID_STEP = 1.0
CHECKPOINT_SPACING = 50.0
COUNT_TOLERANCE = 2
DIP_SUBDIVISIONS = 32
DEFAULT_SMOOTHING_WIDTH = 0.2
CHUNK_POINTS = 4096
VERIFY_LIMIT = 300.0


class ZeroTable(BaseModel):
    """임계선 위 영점의 허수부 테이블.

    Attributes:
        zeros: 오름차순 양의 영점 높이 gamma_n.
        t_max: 탐색한 높이 상한.
        refine_tol: 이분법 허용 오차.
    """

    model_config = ConfigDict(frozen=True)

    zeros: tuple[float, ...]
    t_max: float
    refine_tol: float

    @field_validator("zeros")
    @classmethod
    def _ascending_positive(cls, value: tuple[float, ...]) -> tuple[float, ...]:
        arr = np.asarray(value, dtype=np.float64)
        if arr.size and arr[0] <= 0.0:
            raise ValueError("zero ordinates must be positive")
        if arr.size > 1 and not bool(np.all(np.diff(arr) > 0.0)):
            raise ValueError("zero ordinates must be strictly ascending")
        return value

    def __len__(self) -> int:
        return len(self.zeros)

    def as_array(self) -> np.ndarray:
        """영점을 float64 배열로 반환합니다."""
        return np.asarray(self.zeros, dtype=np.float64)

    def below(self, height: float) -> "ZeroTable":
        """height 이하의 영점만 남긴 테이블을 반환합니다.

        Args:
            height: 새 높이 상한.

        Returns:
            잘린 ZeroTable (t_max = min(t_max, height)).
        """
        cut = int(np.searchsorted(self.as_array(), height, side="right"))
        return ZeroTable.model_construct(
            zeros=self.zeros[:cut],
            t_max=min(self.t_max, height),
            refine_tol=self.refine_tol,
        )

    def first(self, count: int) -> "ZeroTable":
        """가장 낮은 count 개 영점만 남긴 테이블을 반환합니다."""
        if count >= len(self.zeros):
            return self
        return ZeroTable.model_construct(
            zeros=self.zeros[:count],
            t_max=self.zeros[count - 1] if count > 0 else 0.0,
            refine_tol=self.refine_tol,
        )


def mean_spacing(t: ArrayLike) -> float | np.ndarray:
    """높이 t 에서의 평균 영점 간격 2pi / log(t/2pi)."""
    t_arr = np.asarray(t, dtype=np.float64)
    value = 2.0 * math.pi / np.log(t_arr / (2.0 * math.pi))
    return value[()] if np.ndim(value) == 0 else value


def scan_grid(t_max: float, grid_factor: float = DEFAULT_GRID_FACTOR) -> np.ndarray:
    """SCAN_FLOOR 부터 t_max 까지의 전역 탐색 격자를 만듭니다.

    간격은 min(1, 평균 간격 / grid_factor) 이며 마지막 점은 정확히 t_max 입니다.

    Args:
        t_max: 상한.
        grid_factor: 평균 간격 대비 격자 세분 비율.

    Returns:
        오름차순 격자 배열.
    """
    points = [SCAN_FLOOR]
    t = SCAN_FLOOR
    while True:
        spacing = 2.0 * math.pi / math.log(t / (2.0 * math.pi))
        step = min(MAX_GRID_STEP, spacing / grid_factor)
        t += step
        if t >= t_max:
            break
        points.append(t)
    points.append(t_max)
    return np.asarray(points, dtype=np.float64)


def _evaluate_z(grid: np.ndarray) -> np.ndarray:
    return np.asarray(hardy_z(grid), dtype=np.float64)


def _bisect_brackets(task: tuple[np.ndarray, np.ndarray, float]) -> np.ndarray:
    """부호가 바뀌는 구간 [lo, hi] 들을 동시에 이분합니다.

    각 구간은 자기 폭이 tol 이하가 되면 멈추므로 결과는 함께 처리된
    다른 구간과 무관합니다.
    """
    lo, hi, tol = task
    lo = lo.copy()
    hi = hi.copy()
    if lo.size == 0:
        return lo

    z_lo = _evaluate_z(lo)
    active = (hi - lo) > tol
    while np.any(active):
        idx = np.flatnonzero(active)
        mid = 0.5 * (lo[idx] + hi[idx])
        z_mid = _evaluate_z(mid)

        exact = z_mid == 0.0
        same_side = (np.sign(z_mid) == np.sign(z_lo[idx])) & ~exact
        lo[idx[same_side]] = mid[same_side]
        z_lo[idx[same_side]] = z_mid[same_side]
        other = ~same_side & ~exact
        hi[idx[other]] = mid[other]
        lo[idx[exact]] = mid[exact]
        hi[idx[exact]] = mid[exact]

        active = (hi - lo) > tol

    return 0.5 * (lo + hi)


def _find_dips(grid: np.ndarray, values: np.ndarray) -> list[tuple[float, float]]:
    """부호 변화 없이 |Z| 가 국소 최소인 곳을 세분해 숨은 영점 쌍을 찾습니다."""
    brackets: list[tuple[float, float]] = []
    magnitude = np.abs(values)
    sign = np.sign(values)
    for i in range(1, values.size - 1):
        if not (sign[i - 1] == sign[i] == sign[i + 1]):
            continue
        if not (magnitude[i] < magnitude[i - 1] and magnitude[i] < magnitude[i + 1]):
            continue
        fine = np.linspace(grid[i - 1], grid[i + 1], DIP_SUBDIVISIONS + 1)
        fine_values = _evaluate_z(fine)
        changes = np.flatnonzero(np.sign(fine_values[:-1]) != np.sign(fine_values[1:]))
        if changes.size:
            logger.debug(
                "resolved %d hidden sign changes near t=%.6f", changes.size, grid[i]
            )
        brackets.extend((float(fine[k]), float(fine[k + 1])) for k in changes)
    return brackets


def zero_count_checkpoints(
    zeros: np.ndarray, t_max: float
) -> list[tuple[float, int, int]]:
    """CHECKPOINT_SPACING 간격과 t_max 에서 영점 개수를 기대값과 비교합니다.

    Args:
        zeros: 오름차순 영점 배열.
        t_max: 탐색 상한.

    Returns:
        (T, 찾은 개수, round(theta(T)/pi + 1)) 리스트.
    """
    heights = list(np.arange(CHECKPOINT_SPACING, t_max, CHECKPOINT_SPACING))
    if not heights or heights[-1] != t_max:
        heights.append(t_max)

    checks: list[tuple[float, int, int]] = []
    for T in heights:
        found = int(np.searchsorted(zeros, T, side="right"))
        expected = int(round(float(rs_theta(T)) / math.pi + 1.0))
        checks.append((float(T), found, expected))
    return checks


def find_zeros(
    t_max: float,
    grid_factor: float = DEFAULT_GRID_FACTOR,
    refine_tol: float = DEFAULT_REFINE_TOL,
    workers: int | None = None,
) -> ZeroTable:
    """[SCAN_FLOOR, t_max] 에서 Z(t) 의 부호 변화 영점을 모두 찾습니다.

    전역 격자를 조각으로 나눠 Z 를 평가하고, 부호 변화 구간과 |Z| 의 국소 최소
    세분으로 얻은 구간을 이분법으로 refine_tol 까지 좁힙니다. 격자와 구간 분할이
    워커 수와 무관하므로 결과는 워커 수에 상관없이 동일합니다.

    Args:
        t_max: 탐색 상한 (15 이상).
        grid_factor: 평균 간격 대비 격자 세분 비율 (양수).
        refine_tol: 이분법 종료 폭 (양수).
        workers: 워커 수. None 이면 RSL_THREADS 설정.

    Returns:
        ZeroTable.

    Raises:
        DomainError: t_max < 15 인 경우.
        ValueError: grid_factor 또는 refine_tol 이 양수가 아닌 경우.

    Warns:
        MissedZeroWarning: 검사 높이에서 개수가 기대값과 2 이상 어긋난 경우.
    """
    if t_max < MIN_T_MAX:
        raise DomainError(f"t_max must be >= {MIN_T_MAX:g}, got {t_max:g}")
    if grid_factor <= 0.0 or refine_tol <= 0.0:
        raise ValueError("grid_factor and refine_tol must be positive")

    grid = scan_grid(t_max, grid_factor)
    logger.info("scanning Z(t) on %d grid points up to t=%g", grid.size, t_max)

    n_chunks = -(-grid.size // CHUNK_POINTS)
    grid_chunks = [grid[a:b] for a, b in split_evenly(grid.size, n_chunks)]
    values = np.concatenate(ordered_map(_evaluate_z, grid_chunks, workers))

    changes = np.flatnonzero(np.sign(values[:-1]) != np.sign(values[1:]))
    brackets = [(float(grid[k]), float(grid[k + 1])) for k in changes]
    brackets.extend(_find_dips(grid, values))
    brackets.sort()

    lo = np.asarray([b[0] for b in brackets], dtype=np.float64)
    hi = np.asarray([b[1] for b in brackets], dtype=np.float64)
    n_parts = max(1, -(-lo.size // 512))
    tasks = [(lo[a:b], hi[a:b], refine_tol) for a, b in split_evenly(lo.size, n_parts)]
    refined = ordered_map(_bisect_brackets, tasks, workers) if tasks else []
    zeros = np.unique(np.concatenate(refined)) if refined else np.empty(0)
    logger.info("found %d zeros below t=%g", zeros.size, t_max)

    previous = SCAN_FLOOR
    for T, found, expected in zero_count_checkpoints(zeros, t_max):
        if abs(found - expected) > COUNT_TOLERANCE:
            warnings.warn(
                MissedZeroWarning((previous, T), found, expected), stacklevel=2
            )
        previous = T

    return ZeroTable(
        zeros=tuple(zeros.tolist()), t_max=float(t_max), refine_tol=refine_tol
    )


def verify_zeros(table: ZeroTable, t_limit: float = VERIFY_LIMIT) -> np.ndarray:
    """t_limit 이하 영점에서 에타 급수 경로로 |Z(gamma)| 를 다시 계산합니다.

    Args:
        table: 영점 테이블.
        t_limit: 검증 높이 상한.

    Returns:
        각 영점의 |Z(gamma)| 배열.
    """
    zeros = table.below(t_limit).as_array()
    if zeros.size == 0:
        return zeros
    return np.abs(np.asarray(hardy_z(zeros, method="eta"), dtype=np.float64))


def smooth_count(E: ArrayLike) -> float | np.ndarray:
    """매끄러운 계수 함수 N_smooth(E) = theta(E)/pi + 1.

    Args:
        E: 0 이상의 실수 또는 배열.

    Returns:
        N_smooth(E).

    Raises:
        DomainError: E < 0 인 경우.
    """
    E_arr = np.asarray(E, dtype=np.float64)
    if np.any(E_arr < 0.0):
        raise DomainError("smooth count requires E >= 0")
    value = np.asarray(rs_theta(E_arr)) / math.pi + 1.0
    return value[()] if value.ndim == 0 else value


def smooth_count_asymptotic(E: ArrayLike) -> float | np.ndarray:
    """점근형 (E/2pi)(log(E/2pi) - 1) + 7/8.

    Raises:
        DomainError: E <= 0 인 경우.
    """
    E_arr = np.asarray(E, dtype=np.float64)
    if np.any(E_arr <= 0.0):
        raise DomainError("asymptotic smooth count requires E > 0")
    x = E_arr / (2.0 * math.pi)
    value = x * (np.log(x) - 1.0) + 0.875
    return value[()] if value.ndim == 0 else value


def staircase(E: ArrayLike, zeros: ZeroTable | np.ndarray) -> int | np.ndarray:
    """영점 계단 함수 N(E) = #{gamma_n <= E} (오른쪽 연속)."""
    arr = zeros.as_array() if isinstance(zeros, ZeroTable) else np.asarray(zeros)
    value = np.searchsorted(arr, E, side="right")
    return int(value) if np.ndim(value) == 0 else value


def _prime_sum(
    E: np.ndarray, table: PrimeTable, m_max: int, width: float | None
) -> np.ndarray:
    if m_max < 1:
        raise ValueError(f"m_max must be >= 1, got {m_max}")
    log_p = np.log(table.as_array())
    total = np.zeros_like(E)
    for m in range(1, m_max + 1):
        amplitude = np.exp(-0.5 * m * log_p) / m
        if width is not None:
            amplitude = amplitude * np.exp(-0.5 * (m * width * log_p) ** 2)
        for start in range(0, E.size, 256):
            block = E[start : start + 256]
            total[start : start + 256] += np.sin(m * np.outer(block, log_p)) @ amplitude
    return -total / math.pi


def fluct_sum(E: ArrayLike, table: PrimeTable, m_max: int) -> float | np.ndarray:
    """소수 합으로 쓴 계수 함수의 요동 부분.

    -(1/pi) sum_{p <= limit} sum_{m=1}^{m_max} sin(m E log p) / (m p^{m/2})

    Args:
        E: 0 이상의 실수 또는 배열.
        table: 소수 테이블.
        m_max: 거듭제곱 상한 (1 이상).

    Returns:
        요동 합.
    """
    E_arr = np.atleast_1d(np.asarray(E, dtype=np.float64))
    if np.any(E_arr < 0.0):
        raise DomainError("fluctuation sum requires E >= 0")
    value = _prime_sum(E_arr, table, m_max, None)
    return float(value[0]) if np.ndim(E) == 0 else value


def smoothed_fluct_sum(
    E: ArrayLike,
    table: PrimeTable,
    m_max: int,
    width: float = DEFAULT_SMOOTHING_WIDTH,
) -> float | np.ndarray:
    """폭 width 의 가우시안으로 평활화한 요동 합.

    각 항에 exp(-(m width log p)^2 / 2) 감쇠가 곱해집니다.
    """
    if width <= 0.0:
        raise ValueError(f"width must be positive, got {width}")
    E_arr = np.atleast_1d(np.asarray(E, dtype=np.float64))
    value = _prime_sum(E_arr, table, m_max, width)
    return float(value[0]) if np.ndim(E) == 0 else value


def smoothed_staircase_fluct(
    E: ArrayLike,
    zeros: ZeroTable,
    width: float = DEFAULT_SMOOTHING_WIDTH,
) -> float | np.ndarray:
    """가우시안으로 평활화한 계단 요동 sum Phi((E - gamma_n)/w) - N_smooth(E).

    Args:
        E: 실수 또는 배열.
        zeros: 영점 테이블.
        width: 평활화 폭.

    Returns:
        평활화한 N(E) - N_smooth(E).
    """
    if width <= 0.0:
        raise ValueError(f"width must be positive, got {width}")
    E_arr = np.atleast_1d(np.asarray(E, dtype=np.float64))
    gammas = zeros.as_array()
    smeared = np.empty_like(E_arr)
    for start in range(0, E_arr.size, 256):
        block = E_arr[start : start + 256]
        smeared[start : start + 256] = ndtr(
            (block[:, None] - gammas[None, :]) / width
        ).sum(axis=1)
    value = smeared - np.asarray(smooth_count(E_arr))
    return float(value[0]) if np.ndim(E) == 0 else value


def fluct_correlation(
    E: ArrayLike,
    zeros: ZeroTable,
    table: PrimeTable,
    m_max: int,
    width: float = DEFAULT_SMOOTHING_WIDTH,
) -> float:
    """평활화한 소수 요동 합과 평활화한 계단 요동의 피어슨 상관계수.

    Args:
        E: 비교할 높이 격자.
        zeros: 영점 테이블 (격자 상한 + 8 width 이상까지 탐색되어 있어야 함).
        table: 소수 테이블.
        m_max: 거듭제곱 상한.
        width: 평활화 폭.

    Returns:
        상관계수.

    Raises:
        InsufficientDataError: 격자 점이 3 개 미만이거나 영점 테이블이 격자를 덮지 못하는 경우.
    """
    E_arr = np.asarray(E, dtype=np.float64)
    if E_arr.size < 3:
        raise InsufficientDataError("correlation needs at least 3 grid points")
    if zeros.t_max < float(E_arr.max()) + 8.0 * width:
        raise InsufficientDataError(
            f"zero table reaches t={zeros.t_max:g}, grid needs "
            f"{float(E_arr.max()) + 8.0 * width:g}"
        )

    formula = np.asarray(smoothed_fluct_sum(E_arr, table, m_max, width))
    observed = np.asarray(smoothed_staircase_fluct(E_arr, zeros, width))
    correlation = float(np.corrcoef(formula, observed)[0, 1])
    logger.info("fluctuation correlation %.6f on %d points", correlation, E_arr.size)
    return correlation
