"""영점 테이블 캐시 모듈.

캐시 파일은 평문이며 다음 형식을 따릅니다::

    # t_max=1000.0
    # refine_tol=1e-10
    # count=649
    14.134725141735
    ...

헤더가 올바르고, count 가 일치하고, 캐시의 t_max 가 요청 이상이며 refine_tol 이
요청 이하일 때만 재사용합니다.
"""

import logging
import os

from pydantic import ValidationError

from rsl.errors import CacheFormatError
from rsl.numtheory.zeros import (
    DEFAULT_GRID_FACTOR,
    DEFAULT_REFINE_TOL,
    ZeroTable,
    find_zeros,
)

logger = logging.getLogger(__name__)

HEADER_KEYS = ("t_max", "refine_tol", "count")


def format_zero(value: float) -> str:
    """영점 하나를 소수점 아래 12 자리 문자열로 만듭니다."""
    # Reparsed once so the written text reads back to a value that prints the same.
    return f"{float(f'{value:.12f}'):.12f}"


def format_zero_table(table: ZeroTable) -> str:
    """영점 테이블을 캐시 파일 형식의 문자열로 만듭니다."""
    lines = [
        f"# t_max={table.t_max!r}",
        f"# refine_tol={table.refine_tol!r}",
        f"# count={len(table.zeros)}",
    ]
    lines.extend(format_zero(z) for z in table.zeros)
    return "\n".join(lines) + "\n"


def write_zero_table(table: ZeroTable, path: str) -> None:
    """영점 테이블을 캐시 파일로 저장합니다.

    Args:
        table: 저장할 테이블.
        path: 파일 경로. 상위 디렉토리가 없으면 만듭니다.
    """
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)

    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(format_zero_table(table))
    logger.info("wrote %d zeros to %s", len(table.zeros), path)


def _parse_header(line: str, key: str) -> str:
    prefix = f"# {key}="
    if not line.startswith(prefix):
        raise CacheFormatError(f"expected header '{prefix}<value>', got {line!r}")
    return line[len(prefix) :]


def read_zero_table(path: str) -> ZeroTable:
    """캐시 파일에서 영점 테이블을 읽습니다.

    Args:
        path: 파일 경로.

    Returns:
        ZeroTable.

    Raises:
        OSError: 파일을 읽을 수 없는 경우.
        CacheFormatError: 헤더, 개수, 값 형식 중 하나라도 잘못된 경우.
    """
    with open(path, encoding="utf-8") as f:
        lines = f.read().splitlines()

    if len(lines) < len(HEADER_KEYS):
        raise CacheFormatError(f"{path}: truncated header")

    try:
        t_max = float(_parse_header(lines[0], "t_max"))
        refine_tol = float(_parse_header(lines[1], "refine_tol"))
        count = int(_parse_header(lines[2], "count"))
        zeros = tuple(float(line) for line in lines[3:] if line.strip())
    except ValueError as e:
        raise CacheFormatError(f"{path}: {e}") from e

    if len(zeros) != count:
        raise CacheFormatError(f"{path}: header count {count} but {len(zeros)} zeros")

    try:
        return ZeroTable(zeros=zeros, t_max=t_max, refine_tol=refine_tol)
    except ValidationError as e:
        raise CacheFormatError(f"{path}: {e.errors()[0]['msg']}") from e


def load_or_compute(
    path: str | None,
    t_max: float,
    grid_factor: float = DEFAULT_GRID_FACTOR,
    refine_tol: float = DEFAULT_REFINE_TOL,
    workers: int | None = None,
) -> ZeroTable:
    """캐시를 재사용하거나 영점을 새로 계산해 저장합니다.

    Args:
        path: 캐시 경로. None 이면 캐시를 쓰지 않습니다.
        t_max: 요청 높이.
        grid_factor: 탐색 격자 비율.
        refine_tol: 요청 정밀도.
        workers: 워커 수.

    Returns:
        t_max 이하로 잘린 ZeroTable.
    """
    if path is not None and os.path.exists(path):
        try:
            cached = read_zero_table(path)
        except CacheFormatError as e:
            logger.warning("ignoring zero cache: %s", e)
        else:
            if cached.t_max >= t_max and cached.refine_tol <= refine_tol:
                logger.info("reusing %d cached zeros from %s", len(cached), path)
                return cached.below(t_max)
            logger.info(
                "zero cache %s covers t_max=%g tol=%g; recomputing",
                path,
                cached.t_max,
                cached.refine_tol,
            )

    table = find_zeros(t_max, grid_factor, refine_tol, workers)
    if path is not None:
        write_zero_table(table, path)
    return table
