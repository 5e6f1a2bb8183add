"""출력 형식 테스트."""

import io
import json

import pytest

from rsl.report import TableOutput, format_number, write_csv, write_json, write_table


@pytest.mark.parametrize(
    ("value", "expected"),
    [
        (1.0, "1"),
        (0.1 + 0.2, "0.3"),
        (1.0 / 3.0, "0.333333333333"),
        (14.134725141734693, "14.1347251417"),
        (1e-20, "1e-20"),
        (3, "3"),
        (True, "true"),
        (complex(1.5, -2.0), "1.5-2j"),
        ("xp", "xp"),
    ],
)
def test_format_number(value: object, expected: str) -> None:
    """유효숫자 12 자리 형식을 테스트합니다.

    Args:
        value: 입력 값.
        expected: 기대 문자열.
    """
    assert format_number(value) == expected


def test_write_csv() -> None:
    """주석, 열 머리, 행 순서로 쓰는지 테스트합니다."""
    out = io.StringIO()
    write_csv([(1.0, 2), (0.5, 3)], ["E", "n"], ["energy unit: hbar"], out)
    assert out.getvalue() == "# energy unit: hbar\nE,n\n1,2\n0.5,3\n"


def test_write_json_sorted_and_rounded() -> None:
    """키 정렬과 12 자리 반올림, 복소수 표현을 테스트합니다."""
    out = io.StringIO()
    write_json({"b": 1.0 / 3.0, "a": [0.1 + 0.2, 2.5j], "c": True}, out)
    text = out.getvalue()
    assert text.index('"a"') < text.index('"b"') < text.index('"c"')
    payload = json.loads(text)
    assert payload["b"] == 0.333333333333
    assert payload["a"] == [0.3, {"im": 2.5, "re": 0.0}]
    assert payload["c"] is True


def test_write_table_formats() -> None:
    """같은 표를 CSV 와 JSON 으로 쓰고 반복해도 같은 결과인지 테스트합니다."""
    table = TableOutput(
        columns=("p", "rel_dev"), rows=((2, 1.0), (3, 0.5)), comments=("n = 1",)
    )
    first = io.StringIO()
    write_table(table, "json", first)
    second = io.StringIO()
    write_table(table, "json", second)
    assert first.getvalue() == second.getvalue()
    assert json.loads(first.getvalue())["rows"] == [
        {"p": 2, "rel_dev": 1.0},
        {"p": 3, "rel_dev": 0.5},
    ]

    csv_out = io.StringIO()
    write_table(table, "csv", csv_out)
    assert csv_out.getvalue().splitlines() == ["# n = 1", "p,rel_dev", "2,1", "3,0.5"]
