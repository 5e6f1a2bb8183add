"""공용 테스트 픽스처."""

import pytest

from rsl.numtheory.primes import PrimeTable, sieve
from rsl.numtheory.zeros import ZeroTable, find_zeros


@pytest.fixture(scope="session")
def zeros_100() -> ZeroTable:
    """높이 100 이하의 영점 테이블 (29 개).

    Returns:
        ZeroTable.
    """
    return find_zeros(100.0, workers=1)


@pytest.fixture(scope="session")
def zeros_1000() -> ZeroTable:
    """높이 1000 이하의 영점 테이블 (649 개). 느린 테스트 전용입니다.

    Returns:
        ZeroTable.
    """
    return find_zeros(1000.0, workers=1)


@pytest.fixture(scope="session")
def zeros_2600() -> ZeroTable:
    """높이 2600 이하의 영점 테이블 (2000 개 이상). 느린 테스트 전용입니다.

    Returns:
        ZeroTable.
    """
    return find_zeros(2600.0)


@pytest.fixture(scope="session")
def primes_10k() -> PrimeTable:
    """10^4 이하의 소수 테이블.

    Returns:
        PrimeTable.
    """
    return sieve(10_000)
