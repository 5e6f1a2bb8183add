"""병렬 실행 모듈.

서로 겹치지 않는 작업 조각을 프로세스 풀에서 실행하고 제출 순서대로 결과를 모읍니다.
"""

import logging
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from typing import TypeVar

from rsl.config import worker_count

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def split_evenly(n_items: int, n_parts: int) -> list[tuple[int, int]]:
    """[0, n_items) 를 연속 구간으로 나눕니다.

    Args:
        n_items: 전체 항목 수.
        n_parts: 나눌 조각 수.

    Returns:
        (시작, 끝) 반개구간 리스트. 빈 구간은 포함하지 않습니다.
    """
    n_parts = max(1, min(n_parts, n_items))
    base, remainder = divmod(n_items, n_parts)
    bounds: list[tuple[int, int]] = []
    start = 0
    for rank in range(n_parts):
        stop = start + base + (1 if rank < remainder else 0)
        if stop > start:
            bounds.append((start, stop))
        start = stop
    return bounds


def ordered_map(
    fn: Callable[[T], R],
    chunks: Sequence[T],
    workers: int | None = None,
) -> list[R]:
    """chunks 각각에 fn 을 적용합니다.

    workers 가 1 이거나 조각이 하나뿐이면 현재 프로세스에서 실행합니다.
    fn 은 피클 가능한 최상위 함수여야 합니다.

    Args:
        fn: 각 조각에 적용할 함수.
        chunks: 작업 조각 시퀀스.
        workers: 워커 수. None 이면 RSL_THREADS 설정을 따릅니다.

    Returns:
        chunks 순서와 같은 순서의 결과 리스트.
    """
    if workers is None:
        workers = worker_count()

    if workers <= 1 or len(chunks) <= 1:
        return [fn(chunk) for chunk in chunks]

    logger.debug("dispatching %d chunks to %d workers", len(chunks), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, chunks))
