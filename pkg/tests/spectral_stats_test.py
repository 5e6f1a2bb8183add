"""스펙트럼 통계 테스트."""

import math

import numpy as np
import pytest
from scipy.stats import maxwell

from rsl.analysis.spectral_stats import (
    UnfoldedSequence,
    ks_statistic,
    pair_correlation,
    pair_correlation_gue,
    spacing_distribution,
    unfold,
    wigner_surmise_cdf,
    wigner_surmise_pdf,
)
from rsl.errors import InsufficientDataError
from rsl.numtheory.zeros import ZeroTable, find_zeros

SURMISE_SCALE = math.sqrt(math.pi / 8.0)


def _sequence(spacings: np.ndarray) -> UnfoldedSequence:
    """간격 배열로 펼친 수열을 만듭니다.

    Args:
        spacings: 양의 간격.

    Returns:
        UnfoldedSequence.
    """
    return UnfoldedSequence(values=tuple(np.cumsum(spacings).tolist()))


@pytest.fixture(scope="module")
def surmise_sequence() -> UnfoldedSequence:
    """간격이 GUE surmise 를 따르는 수열 (surmise 는 척도 sqrt(pi/8) 인 맥스웰 분포).

    Returns:
        UnfoldedSequence.
    """
    rng = np.random.default_rng(2024)
    return _sequence(maxwell.rvs(scale=SURMISE_SCALE, size=5000, random_state=rng))


@pytest.fixture(scope="module")
def zeros_10k() -> ZeroTable:
    """약 10^4 개의 영점. 느린 테스트 전용입니다.

    Returns:
        ZeroTable.
    """
    return find_zeros(9900.0)


def test_surmise_closed_forms() -> None:
    """surmise 밀도와 누적분포가 맥스웰 분포와 같은지 테스트합니다."""
    s = np.linspace(0.0, 4.0, 81)
    dist = maxwell(scale=SURMISE_SCALE)
    np.testing.assert_allclose(wigner_surmise_pdf(s), dist.pdf(s), atol=1e-12)
    np.testing.assert_allclose(wigner_surmise_cdf(s), dist.cdf(s), atol=1e-12)
    assert wigner_surmise_pdf(0.0) == 0.0


def test_pair_correlation_gue_values() -> None:
    """R2(0) = 0, R2(1) = 1 을 테스트합니다."""
    np.testing.assert_allclose(pair_correlation_gue([0.0, 1.0, 2.0]), [0.0, 1.0, 1.0])


def test_unfold_ascending(zeros_100: ZeroTable) -> None:
    """펼친 영점이 오름차순이고 제외 개수를 반영하는지 테스트합니다.

    Args:
        zeros_100: 높이 100 까지의 영점 테이블.
    """
    seq = unfold(zeros_100)
    assert len(seq) == 29
    assert bool(np.all(seq.spacings() > 0.0))
    assert len(unfold(zeros_100, drop_lowest=10)) == 19
    with pytest.raises(InsufficientDataError):
        unfold(zeros_100, drop_lowest=28)


def test_spacing_distribution_matches_surmise(
    surmise_sequence: UnfoldedSequence,
) -> None:
    """surmise 표본의 KS 통계량, 밀도 적분, 평균 간격을 테스트합니다.

    Args:
        surmise_sequence: surmise 간격 수열.
    """
    report = spacing_distribution(surmise_sequence, bins=40)
    assert report.ks_statistic <= 0.05
    assert report.histogram.mass() == pytest.approx(1.0, abs=1e-9)
    assert report.histogram.n_samples == 4999
    assert 0.95 <= report.mean_spacing <= 1.05
    assert report.histogram.counts[0] < 0.1
    spacings = surmise_sequence.spacings()
    assert ks_statistic(spacings) == pytest.approx(report.ks_statistic)


def test_spacing_distribution_rejects_poisson() -> None:
    """지수 분포 간격은 surmise 와 멀리 떨어지는지 테스트합니다."""
    rng = np.random.default_rng(17)
    report = spacing_distribution(_sequence(rng.exponential(1.0, 3000)))
    assert report.ks_statistic > 0.1


def test_spacing_distribution_preconditions(
    surmise_sequence: UnfoldedSequence,
) -> None:
    """간격이 부족하거나 bins 가 잘못되면 거부하는지 테스트합니다.

    Args:
        surmise_sequence: surmise 간격 수열.
    """
    short = UnfoldedSequence(values=surmise_sequence.values[:50])
    with pytest.raises(InsufficientDataError):
        spacing_distribution(short)
    with pytest.raises(ValueError):
        spacing_distribution(surmise_sequence, bins=0)


def test_pair_correlation_lattice() -> None:
    """정수 격자의 쌍 차이가 1 과 2 에만 몰리는지 테스트합니다."""
    seq = UnfoldedSequence(values=tuple(float(n) for n in range(2000)))
    histogram = pair_correlation(seq, x_max=2.0, bin_width=0.25)
    assert len(histogram.counts) == 8
    expected = np.zeros(8)
    expected[4] = 4.0
    expected[7] = 4.0
    np.testing.assert_allclose(histogram.counts, expected)
    assert histogram.n_samples == 2 * 1998


def test_pair_correlation_poisson_is_flat() -> None:
    """독립 점의 쌍 상관 밀도가 1 근처인지 테스트합니다."""
    rng = np.random.default_rng(23)
    histogram = pair_correlation(_sequence(rng.exponential(1.0, 20_000)), 2.0, 0.25)
    assert float(np.max(np.abs(np.asarray(histogram.counts) - 1.0))) <= 0.1


def test_pair_correlation_preconditions(
    surmise_sequence: UnfoldedSequence,
) -> None:
    """구간 폭과 표본 수 조건을 테스트합니다.

    Args:
        surmise_sequence: surmise 간격 수열.
    """
    with pytest.raises(ValueError):
        pair_correlation(surmise_sequence, x_max=2.0, bin_width=3.0)
    with pytest.raises(ValueError):
        pair_correlation(surmise_sequence, x_max=2.0, bin_width=0.0)
    short = UnfoldedSequence(values=surmise_sequence.values[:500])
    with pytest.raises(InsufficientDataError):
        pair_correlation(short)


@pytest.mark.slow
def test_unfolded_zeros_mean_spacing(zeros_2600: ZeroTable) -> None:
    """10^3 개 이상 펼친 영점의 평균 간격이 1 근처인지 테스트합니다.

    Args:
        zeros_2600: 높이 2600 까지의 영점 테이블.
    """
    seq = unfold(zeros_2600, drop_lowest=50)
    assert len(seq) >= 1000
    spacings = seq.spacings()
    assert 0.95 <= float(spacings.mean()) <= 1.05


@pytest.mark.slow
@pytest.mark.order(-1)
def test_gue_acceptance(zeros_10k: ZeroTable) -> None:
    """10^4 개 영점의 간격 KS 통계량과 쌍 상관 편차를 테스트합니다.

    Args:
        zeros_10k: 약 10^4 개의 영점.
    """
    assert len(zeros_10k) >= 10_000
    seq = unfold(zeros_10k.first(10_000), drop_lowest=50)
    assert spacing_distribution(seq).ks_statistic <= 0.05

    histogram = pair_correlation(seq, x_max=2.0, bin_width=0.25)
    deviation = np.abs(np.asarray(histogram.counts) - np.asarray(histogram.reference))
    assert float(deviation.max()) <= 0.1
