"""대각합 공식 테스트."""

import math
import os
from typing import Any

import numpy as np
import pytest
from scipy.integrate import quad
from scipy.special import psi

from rsl.analysis.trace_formulas import (
    LengthSpectrum,
    OrbitData,
    TestFunction as GaussianTestFunction,
    analogy_report,
    discrepancy_bound,
    explicit_formula_residual,
    gutzwiller_fluct,
    load_length_spectrum,
    primes_as_orbits,
    selberg_zeta_partial,
    weil_lhs,
    weil_rhs,
)
from rsl.errors import DivergenceDomainError, DomainError
from rsl.numtheory.primes import PrimeTable, prime_powers, sieve
from rsl.numtheory.zeros import ZeroTable, fluct_sum


@pytest.fixture(scope="module")
def powers_u3() -> list[Any]:
    """n log p <= 3 인 소수 거듭제곱.

    Returns:
        PrimePower 리스트.
    """
    return prime_powers(sieve(30), 3.0)


def test_gaussian_pair() -> None:
    """g 가 h 의 푸리에 짝이고 h(i/2) 가 닫힌 형태인지 테스트합니다."""
    h = GaussianTestFunction(sigma=2.0)
    u = 0.7
    value, _ = quad(
        lambda k: math.exp(-0.5 * (k / 2.0) ** 2) * math.cos(k * u),
        -40.0,
        40.0,
        epsabs=1e-13,
        epsrel=1e-13,
        limit=200,
    )
    assert float(h.g(u)) == pytest.approx(value / (2.0 * math.pi), rel=1e-10)
    assert h.h_imag_half == pytest.approx(math.exp(1.0 / 32.0))
    assert float(h.h(h.quad_bound(1e-9))) == pytest.approx(1e-11, rel=1e-9)


def test_explicit_formula_balances(
    zeros_100: ZeroTable, powers_u3: list[Any]
) -> None:
    """sigma = 5, 영점 <= 60, n log p <= 3 에서 잔차가 1e-5 이하인지 테스트합니다.

    Args:
        zeros_100: 높이 100 까지의 영점 테이블.
        powers_u3: 소수 거듭제곱 목록.
    """
    h = GaussianTestFunction(sigma=5.0)
    report = explicit_formula_residual(
        h, zeros_100.below(60.0), powers_u3, quad_tol=1e-9
    )
    assert abs(report.residual) <= 1e-5
    assert report.lhs == pytest.approx(0.03708, abs=2e-5)
    assert report.zero_count == 13
    assert report.power_count == len(powers_u3)
    recombined = (
        report.digamma_integral
        + report.imaginary_half_terms
        - report.log_pi_term
        - report.prime_sum
    )
    assert recombined == pytest.approx(report.rhs, abs=1e-14)


def test_explicit_formula_converges_with_zero_cutoff(
    zeros_100: ZeroTable, powers_u3: list[Any]
) -> None:
    """영점 상한이 30, 40, 60 으로 커질수록 잔차가 줄어드는지 테스트합니다.

    Args:
        zeros_100: 높이 100 까지의 영점 테이블.
        powers_u3: 소수 거듭제곱 목록.
    """
    h = GaussianTestFunction(sigma=5.0)
    rhs = weil_rhs(h, powers_u3)
    residuals = [abs(weil_lhs(h, zeros_100.below(c)) - rhs) for c in (30, 40, 60)]
    assert residuals[0] > residuals[1]
    assert residuals[2] <= residuals[1] + 1e-12


def test_digamma_integral_against_scipy(powers_u3: list[Any]) -> None:
    """디감마 적분항을 scipy quad 로 독립 계산한 값과 비교합니다.

    Args:
        powers_u3: 소수 거듭제곱 목록.
    """
    h = GaussianTestFunction(sigma=5.0)
    empty = ZeroTable(zeros=(), t_max=0.0, refine_tol=1e-10)
    report = explicit_formula_residual(h, empty, powers_u3)
    value, _ = quad(
        lambda k: math.exp(-0.5 * (k / 5.0) ** 2) * psi(0.25 + 0.5j * k).real,
        0.0,
        60.0,
        epsabs=1e-12,
        limit=200,
    )
    assert report.digamma_integral == pytest.approx(value / math.pi, abs=1e-8)


def test_weil_mixture_is_linear(zeros_100: ZeroTable, powers_u3: list[Any]) -> None:
    """시험 함수의 선형 결합에 대해 양변이 선형인지 테스트합니다.

    Args:
        zeros_100: 높이 100 까지의 영점 테이블.
        powers_u3: 소수 거듭제곱 목록.
    """
    a, b = GaussianTestFunction(sigma=3.0), GaussianTestFunction(sigma=5.0)
    mixture = [(2.0, a), (-0.5, b)]
    lhs = weil_lhs(mixture, zeros_100)
    assert lhs == pytest.approx(
        2.0 * weil_lhs(a, zeros_100) - 0.5 * weil_lhs(b, zeros_100), abs=1e-14
    )
    rhs = weil_rhs(mixture, powers_u3)
    assert rhs == pytest.approx(
        2.0 * weil_rhs(a, powers_u3) - 0.5 * weil_rhs(b, powers_u3), abs=1e-12
    )


def test_weil_rhs_rejects_short_bound(powers_u3: list[Any]) -> None:
    """h(K) >= quad_tol 인 적분 상한을 거부하는지 테스트합니다.

    Args:
        powers_u3: 소수 거듭제곱 목록.
    """
    with pytest.raises(ValueError):
        weil_rhs(GaussianTestFunction(sigma=5.0), powers_u3, quad_bound=5.0)


def test_primes_as_orbits_match_fluct_sum() -> None:
    """소수 궤도의 요동 합이 -fluct_sum 과 항별 편차 이내로 같은지 테스트합니다."""
    table = sieve(1000)
    orbits = primes_as_orbits(table)
    assert orbits[0] == OrbitData(period=math.log(2), lyapunov=math.log(2))

    E = np.linspace(10.0, 50.0, 41)
    total = np.asarray(gutzwiller_fluct(orbits, E, 3)) + np.asarray(
        fluct_sum(E, table, 3)
    )
    assert float(np.max(np.abs(total))) <= discrepancy_bound(table, 3)
    assert float(np.max(np.abs(total))) > 0.0


def test_gutzwiller_scalar_and_domain() -> None:
    """단일 궤도 합과 m_max 조건을 테스트합니다."""
    orbit = OrbitData(period=1.0, lyapunov=2.0)
    expected = math.sin(3.0) / (2.0 * math.sinh(1.0)) / math.pi
    assert gutzwiller_fluct([orbit], 3.0, 1) == pytest.approx(expected, rel=1e-12)
    with pytest.raises(ValueError):
        gutzwiller_fluct([orbit], 3.0, 0)
    with pytest.raises(ValueError):
        discrepancy_bound(sieve(10), 0)


def test_analogy_rows() -> None:
    """n = 1 에서 rel_dev = 1/(p - 1) 인지 테스트합니다."""
    rows = analogy_report(sieve(10), 1)
    assert [row.p for row in rows] == [2, 3, 5, 7]
    for row in rows:
        assert row.rel_dev == pytest.approx(1.0 / (row.p - 1), rel=1e-12)
        assert row.sinh_term / row.power_term - 1.0 == pytest.approx(
            row.rel_dev, rel=1e-9
        )
    assert len(analogy_report(sieve(10), 3)) == 12
    with pytest.raises(ValueError):
        analogy_report(sieve(10), 0)


def test_selberg_partial_product() -> None:
    """단일 길이 곱의 값, 꼬리 상한, 정의역을 테스트합니다."""
    spectrum = LengthSpectrum(lengths=(1.0,))
    report = selberg_zeta_partial(spectrum, 2.0, 2)
    expected = (1 - math.exp(-2.0)) * (1 - math.exp(-3.0)) * (1 - math.exp(-4.0))
    assert report.value == pytest.approx(complex(expected, 0.0))
    assert report.length_count == 1

    deeper = selberg_zeta_partial(spectrum, 2.0, 40)
    assert abs(math.log(abs(report.value)) - math.log(abs(deeper.value))) <= (
        report.truncation_bound
    )
    with pytest.raises(DivergenceDomainError):
        selberg_zeta_partial(spectrum, 1.0 + 3.0j, 2)
    with pytest.raises(ValueError):
        selberg_zeta_partial(spectrum, 2.0, -1)
    empty = selberg_zeta_partial(LengthSpectrum(lengths=()), 2.0, 3)
    assert empty.value == 1.0


def test_load_length_spectrum(tmp_path: Any) -> None:
    """주석을 건너뛰고 정렬해 읽는지 테스트합니다.

    Args:
        tmp_path: 임시 디렉토리.
    """
    path = os.path.join(tmp_path, "lengths.txt")
    with open(path, "w", encoding="utf-8") as f:
        f.write("# lengths\n3.5\n\n1.25  # shortest\n2.0\n")
    assert load_length_spectrum(path).lengths == (1.25, 2.0, 3.5)


@pytest.mark.parametrize("content", ["1.0\nabc\n", "1.0\n-2.0\n", "0\n", "nan\n"])
def test_load_length_spectrum_rejects(tmp_path: Any, content: str) -> None:
    """숫자가 아니거나 양수가 아닌 길이를 거부하는지 테스트합니다.

    Args:
        tmp_path: 임시 디렉토리.
        content: 파일 내용.
    """
    path = os.path.join(tmp_path, "lengths.txt")
    with open(path, "w", encoding="utf-8") as f:
        f.write(content)
    with pytest.raises(DomainError):
        load_length_spectrum(path)


def test_load_length_spectrum_missing(tmp_path: Any) -> None:
    """없는 파일이면 FileNotFoundError 를 내는지 테스트합니다.

    Args:
        tmp_path: 임시 디렉토리.
    """
    with pytest.raises(FileNotFoundError):
        load_length_spectrum(os.path.join(tmp_path, "missing.txt"))


def test_prime_table_orbits_empty() -> None:
    """빈 궤도 목록의 요동 합이 0 인지 테스트합니다."""
    assert primes_as_orbits(PrimeTable(limit=1, primes=())) == []
    assert gutzwiller_fluct([], 5.0, 2) == 0.0
