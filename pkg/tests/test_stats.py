"""카이제곱 검정과 불완전 감마 함수 테스트."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import special
from scipy import stats as scipy_stats

from pythresh.exceptions import ConvergenceError
from pythresh.stats import (
    chi2_cdf,
    chi2_sf,
    chi_square_statistic,
    gammainc_lower,
    gammainc_upper,
    merged_chi_square,
    p_value,
)


@pytest.mark.parametrize("a", [0.5, 1.0, 2.5, 7.0, 31.5, 127.5])
@pytest.mark.parametrize("x", [0.01, 0.5, 1.0, 3.0, 10.0, 40.0, 150.0])
def test_gammainc_matches_scipy(a, x):
    """정규화 불완전 감마는 scipy와 1e-10 이내로 같아야 합니다."""
    assert gammainc_lower(a, x) == pytest.approx(special.gammainc(a, x), abs=1e-10)
    assert gammainc_upper(a, x) == pytest.approx(special.gammaincc(a, x), abs=1e-10)


def test_gammainc_edges():
    """x = 0과 무한대에서 경계값을 돌려주어야 합니다."""
    assert gammainc_lower(2.0, 0.0) == 0.0
    assert gammainc_upper(2.0, 0.0) == 1.0
    assert gammainc_lower(2.0, math.inf) == 1.0
    assert gammainc_upper(2.0, math.inf) == 0.0


def test_gammainc_invalid_arguments():
    """a <= 0 또는 x < 0은 ValueError를 발생시켜야 합니다."""
    with pytest.raises(ValueError):
        gammainc_lower(0.0, 1.0)
    with pytest.raises(ValueError):
        gammainc_upper(1.0, -1.0)


def test_gammainc_convergence_failure(monkeypatch):
    """반복 한도 안에 수렴하지 않으면 ConvergenceError를 발생시켜야 합니다."""
    monkeypatch.setattr("pythresh.stats._MAX_ITER", 2)

    with pytest.raises(ConvergenceError):
        gammainc_lower(50.0, 10.0)


@pytest.mark.parametrize("df", range(1, 51))
def test_chi2_cdf_at_mean(df):
    """CDF(df, df)는 (0.5, 0.7) 안에 있어야 합니다."""
    assert 0.5 < chi2_cdf(df, df) < 0.7


@pytest.mark.parametrize("df", [1, 2, 15, 31, 63, 255])
def test_chi2_sf_matches_scipy(df):
    """위쪽 꼬리 확률은 scipy.stats.chi2.sf와 같아야 합니다."""
    for x in (0.1 * df, df, 1.5 * df, 3.0 * df):
        assert chi2_sf(x, df) == pytest.approx(scipy_stats.chi2.sf(x, df), abs=1e-10)


@given(
    st.integers(min_value=1, max_value=300),
    st.floats(min_value=0.0, max_value=1000.0),
    st.floats(min_value=0.0, max_value=1000.0),
)
def test_chi2_cdf_monotone(df, x, y):
    """CDF는 x에 대해 단조 증가해야 합니다."""
    low, high = sorted((x, y))
    assert chi2_cdf(low, df) <= chi2_cdf(high, df) + 1e-12


@given(st.integers(min_value=1, max_value=300), st.floats(min_value=0.0, max_value=2000.0))
def test_p_value_in_unit_interval(df, x):
    """p-value는 [0, 1] 안에 있어야 합니다."""
    assert 0.0 <= p_value(x, df) <= 1.0


def test_p_value_edges():
    """무한 통계량은 0, 자유도 0은 1이어야 합니다."""
    assert p_value(math.inf, 3) == 0.0
    assert p_value(5.0, 0) == 1.0
    assert chi2_sf(0.0, 4) == 1.0


def test_chi_square_statistic():
    """카이제곱 통계량은 Σ (O - E)² / E여야 합니다."""
    assert chi_square_statistic([300, 700], [500, 500]) == pytest.approx(160.0)


def test_merged_chi_square_no_merging():
    """모든 셀이 충분하면 그대로 계산해야 합니다."""
    statistic, df, cells = merged_chi_square({0: 12, 1: 8}, {0: 10, 1: 10})

    assert statistic == pytest.approx(0.8)
    assert (df, cells) == (1, 2)


def test_merged_chi_square_remainder_cell():
    """기대 빈도가 작은 셀들은 나머지 셀 하나로 합쳐야 합니다."""
    observed = {0: 50, 1: 40, 2: 3, 3: 4}
    expected = {0: 50, 1: 40, 2: 3, 3: 4}

    statistic, df, cells = merged_chi_square(observed, expected)

    assert statistic == pytest.approx(0.0)
    assert (df, cells) == (2, 3)


def test_merged_chi_square_small_remainder_is_folded():
    """나머지 셀도 작으면 가장 작은 정규 셀에 합쳐야 합니다."""
    statistic, df, cells = merged_chi_square({0: 100, 1: 20, 2: 2}, {0: 100, 1: 20, 2: 2})

    assert (df, cells) == (1, 2)
    assert statistic == pytest.approx(0.0)


def test_merged_chi_square_disjoint_support():
    """기대 빈도 0인 셀에 관측이 있으면 통계량이 무한대여야 합니다."""
    statistic, _, _ = merged_chi_square({5: 10}, {0: 10})

    assert math.isinf(statistic)
