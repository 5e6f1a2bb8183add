"""적응형 심프슨 구적법 모듈."""

import logging
import math
from collections.abc import Callable

import numpy as np
from pydantic import BaseModel, ConfigDict

from rsl.errors import QuadratureAccuracyError

logger = logging.getLogger(__name__)

DEFAULT_MIN_DEPTH = 4
DEFAULT_MAX_DEPTH = 48
DEFAULT_MAX_INTERVALS = 200_000


class QuadratureResult(BaseModel):
    """구적 결과.

    Attributes:
        value: 적분 추정값.
        error_estimate: 수용된 구간들의 |S2 - S1|/15 합.
        intervals: 수용된 구간 수.
    """

    model_config = ConfigDict(frozen=True)

    value: float
    error_estimate: float
    intervals: int


def _simpson(fa: float, fm: float, fb: float, width: float) -> float:
    return width * (fa + 4.0 * fm + fb) / 6.0


def adaptive_simpson(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    tol: float,
    max_depth: int = DEFAULT_MAX_DEPTH,
    max_intervals: int = DEFAULT_MAX_INTERVALS,
) -> QuadratureResult:
    """[a, b] 에서 f 를 적응형 심프슨 규칙으로 적분합니다.

    재귀 대신 명시적 스택을 쓰며, 왼쪽 구간부터 처리하고 수용된 조각을
    math.fsum 으로 더하므로 결과는 항상 같은 순서로 합산됩니다.
    구간은 깊이 DEFAULT_MIN_DEPTH 이상에서 |S_left + S_right - S| <= 15 eps 일 때
    수용됩니다.

    Args:
        f: numpy 배열을 받아 같은 모양의 실수 배열을 돌려주는 피적분 함수.
        a: 하한.
        b: 상한.
        tol: 전체 절대 허용 오차.
        max_depth: 최대 이분 깊이.
        max_intervals: 수용 구간 수 상한.

    Returns:
        QuadratureResult.

    Raises:
        ValueError: tol <= 0 인 경우.
        QuadratureAccuracyError: 깊이 또는 구간 수 한도 안에서 수렴하지 못한 경우.
    """
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    if a == b:
        return QuadratureResult(value=0.0, error_estimate=0.0, intervals=0)

    fa, fm, fb = (float(v) for v in f(np.array([a, 0.5 * (a + b), b])))
    whole = _simpson(fa, fm, fb, b - a)

    pieces: list[float] = []
    errors: list[float] = []
    stack = [(a, b, fa, fm, fb, whole, tol, 0)]

    while stack:
        lo, hi, f_lo, f_mid, f_hi, estimate, eps, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        f_lm, f_rm = (
            float(v) for v in f(np.array([0.5 * (lo + mid), 0.5 * (mid + hi)]))
        )
        left = _simpson(f_lo, f_lm, f_mid, mid - lo)
        right = _simpson(f_mid, f_rm, f_hi, hi - mid)
        delta = left + right - estimate

        if depth >= DEFAULT_MIN_DEPTH and abs(delta) <= 15.0 * eps:
            pieces.append(left + right + delta / 15.0)
            errors.append(abs(delta) / 15.0)
            continue

        if depth >= max_depth or len(pieces) + len(stack) >= max_intervals:
            partial = math.fsum(pieces) + math.fsum(s[5] for s in stack) + left + right
            error = math.fsum(errors) + abs(delta) / 15.0
            raise QuadratureAccuracyError(
                f"adaptive Simpson failed to reach tol={tol:g} on [{a:g}, {b:g}] "
                f"(stalled at [{lo:.6g}, {hi:.6g}], depth {depth})",
                estimate=partial,
                error_estimate=error,
            )

        stack.append((mid, hi, f_mid, f_rm, f_hi, right, 0.5 * eps, depth + 1))
        stack.append((lo, mid, f_lo, f_lm, f_mid, left, 0.5 * eps, depth + 1))

    logger.debug("accepted %d Simpson intervals on [%g, %g]", len(pieces), a, b)
    return QuadratureResult(
        value=math.fsum(pieces),
        error_estimate=math.fsum(errors),
        intervals=len(pieces),
    )
