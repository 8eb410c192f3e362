"""ExactDistribution / EmpiricalDistribution 모델 테스트."""

from fractions import Fraction

import pytest

from pythresh.models.distribution import (
    EmpiricalDistribution,
    ExactDistribution,
    UniformityTestResult,
    format_probability,
)


def _matching_4():
    return ExactDistribution(order=4, counts={0: 1, 1: 4, 2: 3}, invariant="matching")


def test_denominator_and_normalization():
    """분모는 2^(n-1)이고 합이 분모와 같으면 정규화되어야 합니다."""
    dist = _matching_4()

    assert dist.denominator == 8
    assert dist.total == 8
    assert dist.is_normalized()
    assert not ExactDistribution(order=4, counts={0: 7}).is_normalized()


def test_probability_is_exact():
    """확률은 Fraction이어야 합니다."""
    dist = _matching_4()

    assert dist.probability(2) == Fraction(3, 8)
    assert dist.probability(5) == 0


def test_zero_counts_are_dropped():
    """개수가 0인 값은 저장하지 않아야 합니다."""
    dist = ExactDistribution(order=2, counts={1: 2, 0: 0})

    assert dist.support() == [1]
    assert dist.count(0) == 0


def test_negative_count_rejected():
    """음수 개수는 ValueError를 발생시켜야 합니다."""
    with pytest.raises(ValueError):
        ExactDistribution(order=2, counts={0: -1})


def test_order_must_be_positive():
    """위수 0은 거부해야 합니다."""
    with pytest.raises(ValueError):
        ExactDistribution(order=0)


def test_to_csv():
    """CSV는 헤더와 값별 한 행을 가져야 합니다."""
    assert _matching_4().to_csv().splitlines() == [
        "n,value,count,denominator,probability",
        "4,0,1,8,0.125",
        "4,1,4,8,0.5",
        "4,2,3,8,0.375",
    ]


def test_to_csv_with_k_column():
    """k가 있는 분포는 k 열을 포함해야 합니다."""
    dist = ExactDistribution(order=4, counts={0: 4, 3: 2, 4: 2}, invariant="kcore", k=2)

    lines = dist.to_csv().splitlines()

    assert lines[0] == "n,k,value,count,denominator,probability"
    assert lines[1] == "4,2,0,4,8,0.5"


def test_csv_roundtrip():
    """CSV를 다시 읽으면 같은 분포여야 합니다."""
    dist = ExactDistribution(order=4, counts={0: 4, 3: 2, 4: 2}, invariant="kcore", k=2)

    assert ExactDistribution.from_csv(dist.to_csv(), invariant="kcore") == dist


def test_from_csv_without_rows():
    """행이 없는 CSV는 ValueError를 발생시켜야 합니다."""
    with pytest.raises(ValueError):
        ExactDistribution.from_csv("n,value,count,denominator,probability\n")


def test_to_dict_roundtrip():
    """JSON 형식 딕셔너리는 CSV와 같은 필드를 가져야 합니다."""
    data = _matching_4().to_dict()

    assert data["n"] == 4
    assert data["denominator"] == 8
    assert "k" not in data
    assert data["cells"][1] == {"value": 1, "count": 4, "probability": "0.5"}
    assert ExactDistribution.from_dict(data) == _matching_4()


def test_format_probability_significant_digits():
    """확률 표시는 유효숫자 12자리여야 합니다."""
    assert format_probability(Fraction(1, 3)) == "0.333333333333"


def test_empirical_distribution():
    """경험 분포는 총 표본 수와 빈도를 제공해야 합니다."""
    empirical = EmpiricalDistribution(order=2, counts={0: 30, 1: 70}, invariant="h")

    assert empirical.total == 100
    assert empirical.frequency(1) == pytest.approx(0.7)
    assert empirical.to_dict()["samples"] == 100


def test_empirical_from_exact():
    """정확 분포의 개수를 그대로 옮길 수 있어야 합니다."""
    empirical = EmpiricalDistribution.from_exact(_matching_4())

    assert empirical.counts == {0: 1, 1: 4, 2: 3}
    assert empirical.total == 8


def test_uniformity_result_accepted():
    """decision이 accept이면 accepted여야 합니다."""
    result = UniformityTestResult(
        n=2, samples=200, cells=2, statistic=0.0, df=1, p_value=1.0, alpha=0.001, decision="accept"
    )

    assert result.accepted
    assert result.observed == []
