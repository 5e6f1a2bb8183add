"""출력 형식 모듈.

모든 수치는 유효숫자 12 자리로 기록하므로 같은 입력은 항상 같은 바이트를 만듭니다.
"""

import csv
import json
from collections.abc import Iterable, Sequence
from typing import Any, TextIO

from pydantic import BaseModel, ConfigDict

SIGNIFICANT_DIGITS = 12


class TableOutput(BaseModel):
    """CSV 또는 JSON 으로 내보낼 표.

    Attributes:
        columns: 열 이름.
        rows: 행 목록.
        comments: 머리말 주석 (물리량, 단위, 관계식).
    """

    model_config = ConfigDict(frozen=True)

    columns: tuple[str, ...]
    rows: tuple[tuple[Any, ...], ...]
    comments: tuple[str, ...] = ()


def format_number(value: Any) -> str:
    """float 은 유효숫자 12 자리, 그 외는 str 로 변환합니다."""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return f"{value:.{SIGNIFICANT_DIGITS}g}"
    if isinstance(value, complex):
        digits = SIGNIFICANT_DIGITS
        return f"{value.real:.{digits}g}{value.imag:+.{digits}g}j"
    return str(value)


def _round_floats(value: Any) -> Any:
    if isinstance(value, bool):
        return value
    if isinstance(value, float):
        return float(f"{value:.{SIGNIFICANT_DIGITS}g}")
    if isinstance(value, complex):
        return {"re": _round_floats(value.real), "im": _round_floats(value.imag)}
    if isinstance(value, dict):
        return {str(k): _round_floats(v) for k, v in value.items()}
    if isinstance(value, list | tuple):
        return [_round_floats(v) for v in value]
    return value


def write_csv(
    rows: Iterable[Sequence[Any]],
    columns: Sequence[str],
    comments: Sequence[str],
    out: TextIO,
) -> None:
    """주석 줄, 열 머리, 행 순서로 CSV 를 씁니다.

    Args:
        rows: 행 목록.
        columns: 열 이름.
        comments: '# ' 를 붙여 먼저 쓸 주석 줄.
        out: 출력 스트림.
    """
    for comment in comments:
        out.write(f"# {comment}\n")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_number(v) for v in row])


def write_json(payload: Any, out: TextIO) -> None:
    """float 을 유효숫자 12 자리로 반올림하고 키를 정렬해 JSON 을 씁니다."""
    json.dump(_round_floats(payload), out, sort_keys=True, indent=2)
    out.write("\n")


def write_table(table: TableOutput, fmt: str, out: TextIO) -> None:
    """fmt ("csv" 또는 "json") 에 따라 표를 씁니다."""
    if fmt == "json":
        write_json(
            {
                "comments": list(table.comments),
                "columns": list(table.columns),
                "rows": [
                    dict(zip(table.columns, row, strict=True)) for row in table.rows
                ],
            },
            out,
        )
    else:
        write_csv(table.rows, table.columns, table.comments, out)
