"""스펙트럼 통계 모듈.

영점을 펼쳐(unfold) 평균 간격을 1 로 맞춘 뒤, 최근접 간격 분포를 GUE Wigner
surmise 와, 쌍 상관을 1 - (sin pi x / pi x)^2 와 비교합니다.
"""

import logging
import math

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, field_validator
from scipy.special import erf
from scipy.stats import kstest

from rsl.errors import InsufficientDataError
from rsl.numtheory.zeros import ZeroTable, smooth_count

logger = logging.getLogger(__name__)

MIN_SPACINGS = 100
MIN_PAIR_ENTRIES = 1000
DEFAULT_DROP_LOWEST = 50
DEFAULT_BINS = 40
DEFAULT_PAIR_X_MAX = 2.0
DEFAULT_PAIR_BIN_WIDTH = 0.25


class UnfoldedSequence(BaseModel):
    """펼친 영점 x_n = N_smooth(gamma_n).

    Attributes:
        values: 오름차순 값.
    """

    model_config = ConfigDict(frozen=True)

    values: tuple[float, ...]

    @field_validator("values")
    @classmethod
    def _strictly_ascending(cls, value: tuple[float, ...]) -> tuple[float, ...]:
        if len(value) > 1 and not bool(np.all(np.diff(np.asarray(value)) > 0.0)):
            raise ValueError("unfolded values must be strictly ascending")
        return value

    def __len__(self) -> int:
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=np.float64)

    def spacings(self) -> np.ndarray:
        """최근접 간격 x_{n+1} - x_n."""
        return np.diff(self.as_array())


class Histogram(BaseModel):
    """밀도 정규화 히스토그램과 구간 중점의 기준값.

    Attributes:
        bin_edges: 오름차순 구간 경계.
        counts: 구간별 밀도.
        n_samples: 히스토그램에 들어간 표본 수.
        reference: 구간 중점에서의 이론 기준값.
    """

    model_config = ConfigDict(frozen=True)

    bin_edges: tuple[float, ...]
    counts: tuple[float, ...]
    n_samples: int
    reference: tuple[float, ...]

    def widths(self) -> np.ndarray:
        return np.diff(np.asarray(self.bin_edges))

    def midpoints(self) -> np.ndarray:
        edges = np.asarray(self.bin_edges)
        return 0.5 * (edges[:-1] + edges[1:])

    def mass(self) -> float:
        """밀도 x 폭의 합."""
        return math.fsum((np.asarray(self.counts) * self.widths()).tolist())


class SpacingReport(BaseModel):
    """간격 분포 결과.

    Attributes:
        histogram: 간격 밀도 히스토그램 (기준값은 Wigner surmise).
        ks_statistic: surmise CDF 에 대한 콜모고로프-스미르노프 통계량.
        p_value: KS 검정 p 값.
        mean_spacing: 평균 간격.
    """

    model_config = ConfigDict(frozen=True)

    histogram: Histogram
    ks_statistic: float
    p_value: float
    mean_spacing: float


def wigner_surmise_pdf(s: ArrayLike) -> np.ndarray:
    """GUE Wigner surmise p(s) = (32/pi^2) s^2 exp(-4 s^2/pi)."""
    s_arr = np.asarray(s, dtype=np.float64)
    return (32.0 / math.pi**2) * s_arr**2 * np.exp(-4.0 * s_arr**2 / math.pi)


def wigner_surmise_cdf(s: ArrayLike) -> np.ndarray:
    """surmise 의 누적분포 erf(2s/sqrt(pi)) - (4s/pi) exp(-4 s^2/pi)."""
    s_arr = np.maximum(np.asarray(s, dtype=np.float64), 0.0)
    return erf(2.0 * s_arr / math.sqrt(math.pi)) - (4.0 * s_arr / math.pi) * np.exp(
        -4.0 * s_arr**2 / math.pi
    )


def pair_correlation_gue(x: ArrayLike) -> np.ndarray:
    """몽고메리 쌍 상관 R2(x) = 1 - (sin pi x / pi x)^2."""
    return 1.0 - np.sinc(np.asarray(x, dtype=np.float64)) ** 2


def unfold(
    zeros: ZeroTable | ArrayLike, drop_lowest: int = 0
) -> UnfoldedSequence:
    """영점을 매끄러운 계수 함수로 펼칩니다.

    Args:
        zeros: 영점 테이블 또는 오름차순 배열.
        drop_lowest: 통계에서 제외할 가장 낮은 영점 수.

    Returns:
        UnfoldedSequence.

    Raises:
        InsufficientDataError: 제외 후 영점이 2 개 미만인 경우.
    """
    gammas = zeros.as_array() if isinstance(zeros, ZeroTable) else np.asarray(zeros)
    gammas = np.asarray(gammas, dtype=np.float64)[drop_lowest:]
    if gammas.size < 2:
        raise InsufficientDataError(
            f"unfolding needs at least 2 zeros, got {gammas.size}"
        )
    values = np.asarray(smooth_count(gammas), dtype=np.float64)
    return UnfoldedSequence(values=tuple(values.tolist()))


def ks_statistic(spacings: ArrayLike) -> float:
    """간격 표본의 경험적 분포와 surmise CDF 사이의 최대 거리."""
    sample = np.asarray(spacings, dtype=np.float64)
    return float(kstest(sample, wigner_surmise_cdf).statistic)


def spacing_distribution(
    seq: UnfoldedSequence,
    bins: int = DEFAULT_BINS,
    s_max: float | None = None,
) -> SpacingReport:
    """최근접 간격 분포를 Wigner surmise 와 비교합니다.

    Args:
        seq: 펼친 영점.
        bins: 구간 수.
        s_max: 히스토그램 상한. None 이면 최대 간격 (밀도가 1 로 적분됨).

    Returns:
        SpacingReport.

    Raises:
        InsufficientDataError: 간격이 MIN_SPACINGS 개 미만인 경우.
        ValueError: bins < 1 인 경우.
    """
    if bins < 1:
        raise ValueError(f"bins must be >= 1, got {bins}")
    spacings = seq.spacings()
    if spacings.size < MIN_SPACINGS:
        raise InsufficientDataError(
            f"spacing statistics need {MIN_SPACINGS} spacings, got {spacings.size}"
        )

    upper = float(spacings.max()) if s_max is None else s_max
    density, edges = np.histogram(spacings, bins=bins, range=(0.0, upper), density=True)
    midpoints = 0.5 * (edges[:-1] + edges[1:])
    histogram = Histogram(
        bin_edges=tuple(edges.tolist()),
        counts=tuple(density.tolist()),
        n_samples=int(np.count_nonzero(spacings <= upper)),
        reference=tuple(wigner_surmise_pdf(midpoints).tolist()),
    )

    result = kstest(spacings, wigner_surmise_cdf)
    logger.info("KS statistic %.6f over %d spacings", result.statistic, spacings.size)
    return SpacingReport(
        histogram=histogram,
        ks_statistic=float(result.statistic),
        p_value=float(result.pvalue),
        mean_spacing=float(spacings.mean()),
    )


def pair_correlation(
    seq: UnfoldedSequence,
    x_max: float = DEFAULT_PAIR_X_MAX,
    bin_width: float = DEFAULT_PAIR_BIN_WIDTH,
) -> Histogram:
    """쌍 차이 x_m - x_n 의 (0, x_max] 밀도를 구합니다.

    양의 차이를 갖는 순서쌍만 세고, x_n <= x_N - x_max 인 기준 영점 하나당,
    단위 길이당으로 정규화합니다. 따라서 밀도의 적분은 x_max 안의 평균 이웃 수이며
    R2 와 같은 척도입니다. 구간 수는 round(x_max / bin_width) 입니다.

    Args:
        seq: 펼친 영점.
        x_max: 차이 상한.
        bin_width: 구간 폭 (0 < bin_width <= x_max).

    Returns:
        Histogram (기준값은 R2 중점값).

    Raises:
        InsufficientDataError: 값이 MIN_PAIR_ENTRIES 개 미만인 경우.
        ValueError: bin_width 가 범위를 벗어난 경우.
    """
    if not 0.0 < bin_width <= x_max:
        raise ValueError(f"bin_width must lie in (0, x_max], got {bin_width}")
    x = seq.as_array()
    if x.size < MIN_PAIR_ENTRIES:
        raise InsufficientDataError(
            f"pair correlation needs {MIN_PAIR_ENTRIES} entries, got {x.size}"
        )

    n_ref = int(np.searchsorted(x, x[-1] - x_max, side="right"))
    if n_ref < 1:
        raise InsufficientDataError("sequence is shorter than x_max")

    n_bins = max(1, round(x_max / bin_width))
    edges = np.linspace(0.0, x_max, n_bins + 1)
    counts = np.zeros(n_bins, dtype=np.int64)

    offset = 1
    while offset < x.size:
        diffs = x[offset : offset + n_ref] - x[:n_ref][: x.size - offset]
        if diffs.size == 0 or float(diffs.min()) > x_max:
            break
        counts += np.histogram(diffs[diffs <= x_max], bins=edges)[0]
        offset += 1

    density = counts / (n_ref * np.diff(edges))
    midpoints = 0.5 * (edges[:-1] + edges[1:])
    return Histogram(
        bin_edges=tuple(edges.tolist()),
        counts=tuple(density.tolist()),
        n_samples=int(counts.sum()),
        reference=tuple(pair_correlation_gue(midpoints).tolist()),
    )
