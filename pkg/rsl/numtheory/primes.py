"""소수 모듈.

에라토스테네스 체로 소수 테이블을 만들고, 명시 공식용 소수 거듭제곱을 나열합니다.
"""

import logging
import math

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from rsl.errors import EmptyDomainError

logger = logging.getLogger(__name__)

SEGMENTED_THRESHOLD = 10_000_000
SEGMENT_SPAN = 2_000_000


class PrimeTable(BaseModel):
    """limit 이하 소수의 오름차순 테이블.

    Attributes:
        limit: 체의 상한.
        primes: limit 이하의 모든 소수 (오름차순).
    """

    model_config = ConfigDict(frozen=True)

    limit: int
    primes: tuple[int, ...]

    @field_validator("primes")
    @classmethod
    def _strictly_ascending(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if len(value) > 1 and not bool(np.all(np.diff(np.asarray(value)) > 0)):
            raise ValueError("primes must be strictly ascending")
        return value

    @model_validator(mode="after")
    def _within_limit(self) -> "PrimeTable":
        if self.primes and (self.primes[0] < 2 or self.primes[-1] > self.limit):
            raise ValueError("primes must lie in [2, limit]")
        return self

    def as_array(self) -> np.ndarray:
        """소수를 float64 배열로 반환합니다."""
        return np.asarray(self.primes, dtype=np.float64)

    def below(self, bound: float) -> "PrimeTable":
        """bound 이하 소수만 남긴 테이블을 반환합니다.

        Args:
            bound: 새 상한.

        Returns:
            잘린 PrimeTable.
        """
        cut = int(np.searchsorted(np.asarray(self.primes), bound, side="right"))
        return PrimeTable.model_construct(
            limit=min(self.limit, int(bound)), primes=self.primes[:cut]
        )


class PrimePower(BaseModel):
    """소수 거듭제곱 p^n 과 그 로그.

    Attributes:
        p: 소수.
        n: 지수 (1 이상).
        log_term: n * log p.
    """

    model_config = ConfigDict(frozen=True)

    p: int
    n: int
    log_term: float

    @model_validator(mode="after")
    def _log_consistent(self) -> "PrimePower":
        if self.n < 1:
            raise ValueError("exponent must be positive")
        expected = self.n * math.log(self.p)
        if not math.isclose(self.log_term, expected, rel_tol=4e-16, abs_tol=0.0):
            raise ValueError("log_term must equal n * log(p)")
        return self

    @property
    def log_p(self) -> float:
        return math.log(self.p)


def _simple_sieve(limit: int) -> np.ndarray:
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p : limit + 1 : p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


def _segmented_sieve(limit: int, span: int = SEGMENT_SPAN) -> np.ndarray:
    base = _simple_sieve(math.isqrt(limit) + 1)
    pieces = [base[base <= limit]]
    low = int(base[-1]) + 1 if base.size else 2

    while low <= limit:
        high = min(low + span, limit + 1)
        mask = np.ones(high - low, dtype=bool)
        for p in base:
            p = int(p)
            if p * p >= high:
                break
            start = max(p * p, ((low + p - 1) // p) * p)
            mask[start - low :: p] = False
        pieces.append(np.flatnonzero(mask).astype(np.int64) + low)
        low = high

    return np.concatenate(pieces)


def sieve(limit: int) -> PrimeTable:
    """limit 이하의 모든 소수를 구합니다.

    10^7 이하는 단일 비트 체, 그 위는 구간 체를 사용합니다.

    Args:
        limit: 상한 (2 이상).

    Returns:
        PrimeTable.

    Raises:
        EmptyDomainError: limit < 2 인 경우.
    """
    if limit < 2:
        raise EmptyDomainError(f"sieve limit must be >= 2, got {limit}")

    if limit <= SEGMENTED_THRESHOLD:
        primes = _simple_sieve(limit)
    else:
        logger.info("segmented sieve up to %d", limit)
        primes = _segmented_sieve(limit)

    return PrimeTable(limit=limit, primes=tuple(primes.tolist()))


def prime_powers(table: PrimeTable, u_max: float) -> list[PrimePower]:
    """n log p <= u_max 인 모든 (p, n) 을 log_term 오름차순으로 나열합니다.

    각 소수마다 지수를 늘려가며 컷오프에서 멈춥니다.

    Args:
        table: 소수 테이블.
        u_max: 로그 컷오프 (양수).

    Returns:
        PrimePower 리스트.

    Raises:
        ValueError: u_max <= 0 인 경우.
    """
    if u_max <= 0:
        raise ValueError(f"u_max must be positive, got {u_max}")

    if table.limit < math.exp(u_max):
        logger.warning(
            "prime table limit %d is below exp(u_max)=%.6g; prime powers truncated",
            table.limit,
            math.exp(u_max),
        )

    powers: list[PrimePower] = []
    for p in table.primes:
        log_p = math.log(p)
        if log_p > u_max:
            break
        n = 1
        while n * log_p <= u_max:
            powers.append(PrimePower(p=p, n=n, log_term=n * log_p))
            n += 1

    powers.sort(key=lambda pp: (pp.log_term, pp.p))
    return powers
