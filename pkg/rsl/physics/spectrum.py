"""경계 양자화 스펙트럼 모듈.

경계에서 파동함수를 동일시하는 조건

    Gamma(1/4 + iE/2) / Gamma(1/4 - iE/2) * rho^(-iE) = 1,  rho = L^2 / (2 ell^2)

은 실수 E 에 대해 위상 방정식 Phi(E) = 2 Im log Gamma(1/4 + iE/2) - E log rho
= 2 pi k 와 같습니다. 위상을 격자로 괄호 친 뒤 이분법으로 풉니다.
에너지 단위는 hbar |omega_h| 입니다.
"""

import logging
import math

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, model_validator

from rsl.analysis.special_fn import digamma, log_gamma
from rsl.errors import NoSpectrumRegimeError
from rsl.parallel import ordered_map, split_evenly

logger = logging.getLogger(__name__)

PHASE_TOL = 1e-10
MAX_GRID_STEP = 0.5
BISECTION_LIMIT = 200
BRACKETS_PER_TASK = 256
ENERGY_UNIT = "hbar*|omega_h|"


class SpectrumTable(BaseModel):
    """위상 조건의 해 E_n 과 그 부호 있는 지수 n = -Phi(E_n) / 2pi.

    Attributes:
        rho: 경계 비율 L^2 / (2 ell^2).
        e_max: 탐색 상한.
        energies: 오름차순 해.
        indices: 각 해의 지수.
        residuals: |Phi(E_n) + 2 pi n|.
        turning_energy: Phi'(E*) = 0 인 E*. 그 아래에서 지수는 오름차순입니다.
        energy_unit: 에너지 단위.
    """

    model_config = ConfigDict(frozen=True)

    rho: float
    e_max: float
    energies: tuple[float, ...]
    indices: tuple[int, ...]
    residuals: tuple[float, ...]
    turning_energy: float
    energy_unit: str = ENERGY_UNIT

    @model_validator(mode="after")
    def _consistent(self) -> "SpectrumTable":
        if not len(self.energies) == len(self.indices) == len(self.residuals):
            raise ValueError("energies, indices and residuals must have equal length")
        energies = np.asarray(self.energies)
        if energies.size > 1 and not bool(np.all(np.diff(energies) > 0.0)):
            raise ValueError("energies must be strictly ascending")
        below = np.asarray(self.indices)[energies < self.turning_energy]
        if below.size > 1 and not bool(np.all(np.diff(below) > 0)):
            raise ValueError("indices must ascend below the turning energy")
        return self

    def count_below(self, E: float) -> int:
        """E 이하의 해 개수."""
        return int(np.searchsorted(np.asarray(self.energies), E, side="right"))


def _check_rho(rho: float) -> None:
    if rho <= 1.0:
        raise NoSpectrumRegimeError(f"boundary ratio rho must exceed 1, got {rho:g}")


def phase_function(E: ArrayLike, rho: float) -> float | np.ndarray:
    """Phi(E) = 2 Im log Gamma(1/4 + iE/2) - E log rho."""
    E_arr = np.asarray(E, dtype=np.float64)
    value = 2.0 * np.imag(log_gamma(0.25 + 0.5j * E_arr)) - E_arr * math.log(rho)
    return value[()] if np.ndim(value) == 0 else value


def phase_derivative(E: ArrayLike, rho: float) -> float | np.ndarray:
    """Phi'(E) = Re psi(1/4 + iE/2) - log rho."""
    E_arr = np.asarray(E, dtype=np.float64)
    value = np.real(digamma(0.25 + 0.5j * E_arr)) - math.log(rho)
    return value[()] if np.ndim(value) == 0 else value


def offset_asymptotic(E: ArrayLike) -> float | np.ndarray:
    """지수와 자속 계수의 차 n - count_landau(E) 의 점근형.

    1/8 - 1/(48 pi E) - 7/(5760 pi E^3)
    """
    E_arr = np.asarray(E, dtype=np.float64)
    value = 0.125 - 1.0 / (48.0 * math.pi * E_arr) - 7.0 / (5760.0 * math.pi * E_arr**3)
    return value[()] if np.ndim(value) == 0 else value


def turning_energy(rho: float) -> float:
    """Phi'(E*) = 0 인 E* (대략 2 rho) 를 이분법으로 구합니다."""
    _check_rho(rho)
    lo, hi = 0.0, 2.0 * rho + 10.0
    while float(phase_derivative(hi, rho)) < 0.0:
        lo, hi = hi, 2.0 * hi
    for _ in range(BISECTION_LIMIT):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if float(phase_derivative(mid, rho)) < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _bracket_grid(rho: float, e_max: float, turning: float) -> np.ndarray:
    """Phi 가 각 구간에서 단조가 되도록 E* 를 경계에 넣은 괄호 격자."""
    points = [0.0]
    E = 0.0
    while E < e_max:
        slope = abs(float(phase_derivative(E, rho)))
        step = MAX_GRID_STEP
        if slope > 0.0:
            step = min(MAX_GRID_STEP, math.pi / (2.0 * slope))
        E = min(E + step, e_max)
        points.append(E)
    grid = np.asarray(points, dtype=np.float64)
    if 0.0 < turning < e_max:
        grid = np.union1d(grid, [turning])
    return grid


def _brackets(grid: np.ndarray, rho: float) -> list[tuple[float, float, int]]:
    """각 격자 구간 (a, b] 안에서 u = -Phi/2pi 가 지나는 정수 k 를 찾습니다."""
    u = -np.asarray(phase_function(grid, rho)) / (2.0 * math.pi)
    found: list[tuple[float, float, int]] = []
    pending = [(grid[i], grid[i + 1], u[i], u[i + 1]) for i in range(grid.size - 1)]
    while pending:
        a, b, ua, ub = pending.pop(0)
        ks = range(math.floor(min(ua, ub)) + 1, math.floor(max(ua, ub)) + 1)
        if len(ks) > 1:
            # At most one multiple of 2pi per bracket.
            mid = 0.5 * (a + b)
            um = -float(phase_function(mid, rho)) / (2.0 * math.pi)
            pending[:0] = [(a, mid, ua, um), (mid, b, um, ub)]
            continue
        found.extend((float(a), float(b), k) for k in ks if k != 0 or a > 0.0)
    return found


def _solve_brackets(
    task: tuple[np.ndarray, np.ndarray, np.ndarray, float],
) -> np.ndarray:
    lo, hi, k, rho = task
    lo = lo.copy()
    hi = hi.copy()
    target = -2.0 * math.pi * k
    f_lo = np.asarray(phase_function(lo, rho)) - target
    best = 0.5 * (lo + hi)

    for _ in range(BISECTION_LIMIT):
        mid = 0.5 * (lo + hi)
        f_mid = np.asarray(phase_function(mid, rho)) - target
        best = mid
        converged = (np.abs(f_mid) <= 0.1 * PHASE_TOL) | (mid == lo) | (mid == hi)
        if np.all(converged):
            break
        move_lo = (np.sign(f_mid) == np.sign(f_lo)) & ~converged
        move_hi = ~move_lo & ~converged
        lo = np.where(move_lo, mid, lo)
        f_lo = np.where(move_lo, f_mid, f_lo)
        hi = np.where(move_hi, mid, hi)
        lo = np.where(converged, mid, lo)
        hi = np.where(converged, mid, hi)
    return best


def landau_spectrum(
    rho: float, e_max: float, workers: int | None = None
) -> SpectrumTable:
    """(0, e_max] 안에서 위상 조건 Phi(E) = -2 pi n 의 모든 해를 구합니다.

    격자 간격은 min(0.5, pi / (2 |Phi'(E)|)) 이고 E* 가 격자점이므로 각 구간에서 Phi 는
    단조이며 한 구간에 해가 하나 이하입니다. E* 양쪽의 같은 지수 해도 따로 잡히고,
    각 해는 |Phi(E_n) + 2 pi n| <= PHASE_TOL 까지 이분법으로 좁혀집니다.

    Args:
        rho: 경계 비율 L^2/(2 ell^2) (> 1).
        e_max: 에너지 상한 (> 0).
        workers: 워커 수.

    Returns:
        SpectrumTable.

    Raises:
        NoSpectrumRegimeError: rho <= 1 인 경우.
        ValueError: e_max <= 0 인 경우.
    """
    _check_rho(rho)
    if e_max <= 0.0:
        raise ValueError(f"e_max must be positive, got {e_max}")

    turning = turning_energy(rho)
    grid = _bracket_grid(rho, e_max, turning)
    brackets = _brackets(grid, rho)
    logger.info(
        "bracketed %d spectrum levels below E=%g (rho=%g)", len(brackets), e_max, rho
    )

    lo = np.asarray([b[0] for b in brackets], dtype=np.float64)
    hi = np.asarray([b[1] for b in brackets], dtype=np.float64)
    k = np.asarray([b[2] for b in brackets], dtype=np.int64)
    n_parts = max(1, -(-lo.size // BRACKETS_PER_TASK))
    tasks = [
        (lo[a:b], hi[a:b], k[a:b].astype(np.float64), rho)
        for a, b in split_evenly(lo.size, n_parts)
    ]
    solved = ordered_map(_solve_brackets, tasks, workers) if lo.size else []
    energies = np.concatenate(solved) if solved else np.empty(0)

    residuals = np.abs(np.asarray(phase_function(energies, rho)) + 2.0 * math.pi * k)
    worst = float(residuals.max()) if residuals.size else 0.0
    if worst > PHASE_TOL:
        logger.warning("largest phase residual %.3g exceeds %.1g", worst, PHASE_TOL)

    return SpectrumTable(
        rho=rho,
        e_max=e_max,
        energies=tuple(energies.tolist()),
        indices=tuple(int(v) for v in k),
        residuals=tuple(residuals.tolist()),
        turning_energy=turning,
    )
