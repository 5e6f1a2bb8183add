"""대각합 공식 모듈.

리만-바일 명시 공식의 양변, 주기 궤도 요동 합, 유한 셀베르그 제타 곱,
sinh 항과 거듭제곱 항의 비교표를 계산합니다.

푸리에 규약은 g(u) = (1/2pi) int h(k) e^{-iku} dk 입니다.
"""

import logging
import math
import os
from collections.abc import Sequence
from typing import Literal

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, PositiveFloat, field_validator

from rsl.analysis.quadrature import adaptive_simpson
from rsl.analysis.special_fn import digamma
from rsl.errors import DivergenceDomainError, DomainError
from rsl.numtheory.primes import PrimePower, PrimeTable
from rsl.numtheory.zeros import ZeroTable

logger = logging.getLogger(__name__)

DEFAULT_QUAD_TOL = 1e-9
QUAD_BOUND_MARGIN = 1e-2


class TestFunction(BaseModel):
    """짝함수 시험 함수 h 와 그 푸리에 짝 g (가우시안 족).

    h(k) = exp(-k^2 / (2 sigma^2)),  g(u) = sigma / sqrt(2 pi) * exp(-sigma^2 u^2 / 2)

    Attributes:
        kind: 함수 족. 현재 "gaussian" 만 지원합니다.
        sigma: 폭.
    """

    model_config = ConfigDict(frozen=True)

    kind: Literal["gaussian"] = "gaussian"
    sigma: PositiveFloat

    def h(self, k: ArrayLike) -> np.ndarray:
        k_arr = np.asarray(k, dtype=np.float64)
        return np.exp(-0.5 * (k_arr / self.sigma) ** 2)

    def g(self, u: ArrayLike) -> np.ndarray:
        u_arr = np.asarray(u, dtype=np.float64)
        scale = self.sigma / math.sqrt(2.0 * math.pi)
        return scale * np.exp(-0.5 * (self.sigma * u_arr) ** 2)

    @property
    def h_imag_half(self) -> float:
        """h(i/2) = exp(1 / (8 sigma^2)). h(-i/2) 도 같은 값입니다."""
        return math.exp(1.0 / (8.0 * self.sigma**2))

    def quad_bound(self, quad_tol: float) -> float:
        """h(K) = quad_tol * 10^-2 가 되는 K."""
        margin = quad_tol * QUAD_BOUND_MARGIN
        return self.sigma * math.sqrt(2.0 * math.log(1.0 / margin))


TestMixture = Sequence[tuple[float, TestFunction]]


class OrbitData(BaseModel):
    """주기 궤도의 주기 T 와 리아푸노프 지수 lambda."""

    model_config = ConfigDict(frozen=True)

    period: PositiveFloat
    lyapunov: PositiveFloat


class LengthSpectrum(BaseModel):
    """원시 측지선 길이 스펙트럼 (중복 포함, 오름차순)."""

    model_config = ConfigDict(frozen=True)

    lengths: tuple[float, ...]

    @field_validator("lengths")
    @classmethod
    def _positive_ascending(cls, value: tuple[float, ...]) -> tuple[float, ...]:
        arr = np.asarray(value, dtype=np.float64)
        if arr.size and arr[0] <= 0.0:
            raise ValueError("lengths must be positive")
        if arr.size > 1 and not bool(np.all(np.diff(arr) >= 0.0)):
            raise ValueError("lengths must be ascending")
        return value


class ExplicitFormulaReport(BaseModel):
    """명시 공식 양변과 항별 분해.

    rhs = digamma_integral + imaginary_half_terms - log_pi_term - prime_sum
    """

    model_config = ConfigDict(frozen=True)

    sigma: float
    lhs: float
    rhs: float
    residual: float
    zero_sum: float
    digamma_integral: float
    imaginary_half_terms: float
    log_pi_term: float
    prime_sum: float
    quad_bound: float
    quad_error: float
    zero_count: int
    power_count: int


class SelbergReport(BaseModel):
    """유한 셀베르그 곱과 생략된 m > m_max 인수의 |log| 상한."""

    model_config = ConfigDict(frozen=True)

    value: complex
    truncation_bound: float
    length_count: int
    m_max: int


class AnalogyRow(BaseModel):
    """한 (p, n) 에 대한 1/(2 sinh(n log p / 2)) 와 p^(-n/2) 비교."""

    model_config = ConfigDict(frozen=True)

    p: int
    n: int
    sinh_term: float
    power_term: float
    rel_dev: float


def _components(h: TestFunction | TestMixture) -> list[tuple[float, TestFunction]]:
    if isinstance(h, TestFunction):
        return [(1.0, h)]
    return [(float(weight), component) for weight, component in h]


def weil_lhs(h: TestFunction | TestMixture, zeros: ZeroTable) -> float:
    """영점 쪽 합 sum_gamma h(gamma) = 2 sum_{gamma_n > 0} h(gamma_n).

    Args:
        h: 시험 함수 또는 (가중치, 시험 함수) 선형 결합.
        zeros: 양의 영점 테이블.

    Returns:
        영점 합.
    """
    gammas = zeros.as_array()
    parts = [
        weight * 2.0 * math.fsum(component.h(gammas).tolist())
        for weight, component in _components(h)
    ]
    return math.fsum(parts)


def _digamma_integral(
    h: TestFunction, quad_bound: float, quad_tol: float
) -> tuple[float, float]:
    def integrand(k: np.ndarray) -> np.ndarray:
        return h.h(k) * np.real(digamma(0.25 + 0.5j * k))

    # Even integrand: (1/2pi) int_{-K}^{K} = (1/pi) int_0^K.
    result = adaptive_simpson(integrand, 0.0, quad_bound, quad_tol)
    return result.value / math.pi, result.error_estimate / math.pi


def _prime_sum(h: TestFunction, powers: Sequence[PrimePower]) -> float:
    terms = [
        pp.log_p * math.exp(-0.5 * pp.log_term) * float(h.g(pp.log_term))
        for pp in powers
    ]
    return 2.0 * math.fsum(terms)


def _rhs_terms(
    h: TestFunction,
    powers: Sequence[PrimePower],
    quad_bound: float | None,
    quad_tol: float,
) -> dict[str, float]:
    bound = h.quad_bound(quad_tol) if quad_bound is None else quad_bound
    if float(h.h(bound)) >= quad_tol:
        raise ValueError(
            f"quad_bound {bound:g} too small: "
            f"h(K)={float(h.h(bound)):.3g} >= {quad_tol:g}"
        )
    integral, error = _digamma_integral(h, bound, quad_tol)
    return {
        "digamma_integral": integral,
        "imaginary_half_terms": 2.0 * h.h_imag_half,
        "log_pi_term": float(h.g(0.0)) * math.log(math.pi),
        "prime_sum": _prime_sum(h, powers),
        "quad_bound": bound,
        "quad_error": error,
    }


def _assemble_rhs(terms: dict[str, float]) -> float:
    return math.fsum(
        [
            terms["digamma_integral"],
            terms["imaginary_half_terms"],
            -terms["log_pi_term"],
            -terms["prime_sum"],
        ]
    )


def weil_rhs(
    h: TestFunction | TestMixture,
    powers: Sequence[PrimePower],
    quad_bound: float | None = None,
    quad_tol: float = DEFAULT_QUAD_TOL,
) -> float:
    """명시 공식의 소수 쪽.

    (1/2pi) int h(k) Re psi(1/4 + ik/2) dk + h(i/2) + h(-i/2) - g(0) log pi
    - 2 sum_{(p,n)} log p * p^(-n/2) * g(n log p)

    Args:
        h: 시험 함수 또는 선형 결합.
        powers: 소수 거듭제곱 목록.
        quad_bound: 적분 구간 [-K, K] 의 K. None 이면 h(K) = quad_tol * 10^-2.
        quad_tol: 적응형 구적 허용 오차.

    Returns:
        우변 값.

    Raises:
        ValueError: h(quad_bound) >= quad_tol 인 경우.
        QuadratureAccuracyError: 구적이 수렴하지 못한 경우.
    """
    parts = [
        weight * _assemble_rhs(_rhs_terms(component, powers, quad_bound, quad_tol))
        for weight, component in _components(h)
    ]
    return math.fsum(parts)


def explicit_formula_residual(
    h: TestFunction,
    zeros: ZeroTable,
    powers: Sequence[PrimePower],
    quad_bound: float | None = None,
    quad_tol: float = DEFAULT_QUAD_TOL,
) -> ExplicitFormulaReport:
    """명시 공식 양변을 계산하고 잔차와 항별 분해를 보고합니다.

    Args:
        h: 시험 함수.
        zeros: 영점 테이블.
        powers: 소수 거듭제곱 목록.
        quad_bound: 적분 상한 K.
        quad_tol: 구적 허용 오차.

    Returns:
        ExplicitFormulaReport.
    """
    lhs = weil_lhs(h, zeros)
    terms = _rhs_terms(h, powers, quad_bound, quad_tol)
    rhs = _assemble_rhs(terms)
    logger.info("explicit formula sigma=%g: lhs=%.12g rhs=%.12g", h.sigma, lhs, rhs)
    return ExplicitFormulaReport(
        sigma=h.sigma,
        lhs=lhs,
        rhs=rhs,
        residual=lhs - rhs,
        zero_sum=lhs,
        zero_count=len(zeros),
        power_count=len(powers),
        **terms,
    )


def gutzwiller_fluct(
    orbits: Sequence[OrbitData], E: ArrayLike, m_max: int
) -> float | np.ndarray:
    """주기 궤도 요동 합 (1/pi) sum_gamma sum_m sin(m E T) / (2m sinh(m lambda / 2)).

    Args:
        orbits: 주기 궤도 목록.
        E: 에너지 (실수 또는 배열).
        m_max: 반복 횟수 상한 (1 이상).

    Returns:
        요동 합.

    Raises:
        ValueError: m_max < 1 인 경우.
    """
    if m_max < 1:
        raise ValueError(f"m_max must be >= 1, got {m_max}")
    E_arr = np.atleast_1d(np.asarray(E, dtype=np.float64))
    periods = np.asarray([o.period for o in orbits], dtype=np.float64)
    lyapunov = np.asarray([o.lyapunov for o in orbits], dtype=np.float64)

    total = np.zeros_like(E_arr)
    for m in range(1, m_max + 1):
        amplitude = 1.0 / (2.0 * m * np.sinh(0.5 * m * lyapunov))
        total += np.sin(m * np.outer(E_arr, periods)) @ amplitude
    value = total / math.pi
    return float(value[0]) if np.ndim(E) == 0 else value


def primes_as_orbits(table: PrimeTable) -> list[OrbitData]:
    """소수를 T = lambda = log p 인 주기 궤도로 봅니다."""
    return [OrbitData(period=math.log(p), lyapunov=math.log(p)) for p in table.primes]


def discrepancy_bound(table: PrimeTable, m_max: int) -> float:
    """|gutzwiller_fluct + fluct_sum| 의 항별 상한.

    sum_p sum_{m <= m_max} p^(-3m/2) / (m pi (1 - p^-m))
    """
    if m_max < 1:
        raise ValueError(f"m_max must be >= 1, got {m_max}")
    log_p = np.log(table.as_array())
    terms: list[float] = []
    for m in range(1, m_max + 1):
        x = m * log_p
        terms.extend((np.exp(-0.5 * x) / (m * math.pi * np.expm1(x))).tolist())
    return math.fsum(terms)


def selberg_zeta_partial(
    spectrum: LengthSpectrum, s: complex, m_max: int
) -> SelbergReport:
    """유한 셀베르그 곱 prod_l prod_{m=0}^{m_max} (1 - e^{-l(s+m)}).

    Args:
        spectrum: 길이 스펙트럼.
        s: Re s > 1 인 복소수.
        m_max: m 상한 (0 이상).

    Returns:
        곱의 값과 생략된 인수의 기하급수 상한.

    Raises:
        DivergenceDomainError: Re s <= 1 인 경우.
        ValueError: m_max < 0 인 경우.
    """
    s = complex(s)
    if s.real <= 1.0:
        raise DivergenceDomainError(f"Selberg product diverges for Re s = {s.real:g}")
    if m_max < 0:
        raise ValueError(f"m_max must be >= 0, got {m_max}")

    lengths = np.asarray(spectrum.lengths, dtype=np.float64)
    if lengths.size == 0:
        return SelbergReport(
            value=1.0 + 0.0j, truncation_bound=0.0, length_count=0, m_max=m_max
        )

    m = np.arange(m_max + 1, dtype=np.float64)
    factors = 1.0 - np.exp(-np.outer(lengths, s + m))
    value = complex(np.prod(factors))

    x_next = np.exp(-lengths * (s.real + m_max + 1.0))
    bound = math.fsum((x_next / ((1.0 - x_next) * -np.expm1(-lengths))).tolist())
    return SelbergReport(
        value=value, truncation_bound=bound, length_count=lengths.size, m_max=m_max
    )


def load_length_spectrum(path: str) -> LengthSpectrum:
    """길이 스펙트럼 파일을 읽습니다.

    한 줄에 양의 길이 하나, '#' 이후는 주석입니다. 값은 오름차순으로 정렬됩니다.

    Args:
        path: 파일 경로.

    Returns:
        LengthSpectrum.

    Raises:
        OSError: 파일을 읽을 수 없는 경우.
        DomainError: 숫자가 아니거나 양수가 아닌 값이 있는 경우.
    """
    if not os.path.isfile(path):
        raise FileNotFoundError(f"length spectrum file not found: {path}")

    lengths: list[float] = []
    with open(path, encoding="utf-8") as f:
        for lineno, raw in enumerate(f, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                value = float(line)
            except ValueError as e:
                raise DomainError(f"{path}:{lineno}: not a number: {line!r}") from e
            if not value > 0.0 or not math.isfinite(value):
                raise DomainError(
                    f"{path}:{lineno}: length must be positive, got {line}"
                )
            lengths.append(value)

    return LengthSpectrum(lengths=tuple(sorted(lengths)))


def analogy_report(table: PrimeTable, n_max: int) -> list[AnalogyRow]:
    """1/(2 sinh(n log p / 2)) 와 p^(-n/2) 의 상대 편차표를 만듭니다.

    rel_dev = sinh_term / power_term - 1 = p^-n / (1 - p^-n) 이며,
    작은 값에서도 정확하도록 1/expm1(n log p) 로 계산합니다.

    Args:
        table: 소수 테이블.
        n_max: 지수 상한 (1 이상).

    Returns:
        (p, n) 순서의 AnalogyRow 리스트.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    rows: list[AnalogyRow] = []
    for p in table.primes:
        for n in range(1, n_max + 1):
            x = n * math.log(p)
            rows.append(
                AnalogyRow(
                    p=p,
                    n=n,
                    sinh_term=1.0 / (2.0 * math.sinh(0.5 * x)),
                    power_term=math.exp(-0.5 * x),
                    rel_dev=1.0 / math.expm1(x),
                )
            )
    return rows
