"""설정 모듈.

.env 및 환경 변수에서 실행 설정을 읽고 로거를 구성합니다.
"""

import logging
import os
import sys

import psutil
from dotenv import load_dotenv

load_dotenv()

THREADS_ENV = "RSL_THREADS"
LOG_LEVEL_ENV = "RSL_LOG_LEVEL"
LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"
HANDLER_NAME = "rsl"


def worker_count() -> int:
    """워커 프로세스 수를 결정합니다.

    RSL_THREADS 가 0 이거나 없으면 물리 코어 수를 사용합니다.

    Returns:
        1 이상의 워커 수.

    Raises:
        ValueError: RSL_THREADS 가 음수이거나 정수가 아닌 경우.
    """
    raw = os.getenv(THREADS_ENV, "0").strip() or "0"
    try:
        requested = int(raw)
    except ValueError as e:
        raise ValueError(f"{THREADS_ENV} must be an integer, got {raw!r}") from e
    if requested < 0:
        raise ValueError(f"{THREADS_ENV} must be >= 0, got {requested}")
    if requested > 0:
        return requested

    cores = psutil.cpu_count(logical=False) or os.cpu_count() or 1
    return max(1, cores)


def setup_logger(level: int | str | None = None) -> logging.Logger:
    """rsl 로거에 stderr 핸들러를 설치합니다.

    여러 번 호출해도 핸들러는 하나만 유지되고 레벨만 갱신됩니다.

    Args:
        level: 로깅 레벨. None 이면 RSL_LOG_LEVEL (기본 WARNING).

    Returns:
        구성된 "rsl" 로거.
    """
    if level is None:
        level = os.getenv(LOG_LEVEL_ENV, "WARNING").upper()

    logger = logging.getLogger("rsl")
    logger.setLevel(level)

    if not any(h.get_name() == HANDLER_NAME for h in logger.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=LOG_DATE_FORMAT))
        handler.set_name(HANDLER_NAME)
        logger.addHandler(handler)

    for handler in logger.handlers:
        handler.setLevel(level)
    return logger
