"""UniformityEngine 테스트."""

import math
from functools import partial

import pytest

from pythresh.config import Settings
from pythresh.distributions import dist_h, dist_matching
from pythresh.engines.sampling import digit_sampler
from pythresh.exceptions import InsufficientSamples, OrderMismatch, OrderOutOfRange, UsageError
from pythresh.lab import ThresholdLab
from pythresh.models.distribution import EmpiricalDistribution, ExactDistribution

CI_SEED = 20240611


def _engine(workers=1):
    return ThresholdLab(Settings(workers=workers)).uniformity


def test_uniformity_accepts_weights_model():
    """n = 7, 640,000개 표본에서 가중치 모델은 균일성을 기각하지 않아야 합니다."""
    result = _engine(workers=2).uniformity_test(7, 640000, seed=CI_SEED, alpha=0.001)

    assert result.cells == 64
    assert result.df == 63
    assert sum(result.observed) == 640000
    assert result.decision == "accept"
    assert result.accepted


def test_uniformity_rejects_biased_sampler():
    """1의 확률이 0.7인 표본 추출기는 기각되어야 합니다."""
    biased = partial(digit_sampler, p_one=0.7)

    result = _engine().uniformity_test(2, 1000, seed=CI_SEED, alpha=0.001, model=biased)

    assert result.decision == "reject"
    assert result.p_value < 0.001


def test_uniformity_degrees_of_freedom():
    """n = 5의 자유도는 15여야 합니다."""
    result = _engine().uniformity_test(5, 1600, seed=1)

    assert result.df == 15
    assert 0.0 <= result.p_value <= 1.0
    assert result.alpha == 0.001
    assert result.model == "weights"
    assert result.seed == 1


def test_uniformity_reproducible():
    """같은 시드는 같은 통계량을 내야 합니다."""
    engine = _engine()

    assert engine.uniformity_test(4, 800, seed=3) == engine.uniformity_test(4, 800, seed=3)


@pytest.mark.parametrize("n", [1, 10])
def test_uniformity_order_out_of_range(n):
    """2 <= n <= 9를 벗어나면 OrderOutOfRange여야 합니다."""
    with pytest.raises(OrderOutOfRange):
        _engine().uniformity_test(n, 10 ** 6, seed=1)


def test_uniformity_insufficient_samples():
    """셀당 기대 빈도가 100 미만이면 InsufficientSamples여야 합니다."""
    with pytest.raises(InsufficientSamples):
        _engine().uniformity_test(6, 100, seed=1)
    with pytest.raises(InsufficientSamples):
        _engine().uniformity_test(6, 3199, seed=1)


@pytest.mark.parametrize("alpha", [0.0, 1.0, 5.0, -0.1])
def test_uniformity_rejects_alpha_outside_unit_interval(alpha):
    """유의수준이 (0, 1) 밖이면 UsageError여야 합니다."""
    with pytest.raises(UsageError, match="alpha"):
        _engine().uniformity_test(3, 1000, seed=1, alpha=alpha)


def test_compare_identical_distributions():
    """정확 분포를 개수로 옮겨 비교하면 TV = 0이어야 합니다."""
    exact = dist_matching(8)

    report = _engine().compare_distributions(exact, EmpiricalDistribution.from_exact(exact))

    assert report.tv_distance == 0.0
    assert report.statistic == pytest.approx(0.0)
    assert report.p_value == pytest.approx(1.0)


def test_compare_disjoint_supports():
    """지지 집합이 겹치지 않으면 TV = 1이어야 합니다."""
    exact = ExactDistribution(order=3, counts={0: 4})
    empirical = EmpiricalDistribution(order=3, counts={2: 50})

    report = _engine().compare_distributions(exact, empirical)

    assert report.tv_distance == 1.0
    assert math.isinf(report.statistic)
    assert report.p_value == 0.0


def test_compare_order_mismatch():
    """위수가 다르면 OrderMismatch여야 합니다."""
    with pytest.raises(OrderMismatch):
        _engine().compare_distributions(dist_h(4), EmpiricalDistribution(order=5, counts={0: 1}))


def test_compare_requires_samples():
    """표본이 없으면 ValueError여야 합니다."""
    with pytest.raises(ValueError):
        _engine().compare_distributions(dist_h(4), EmpiricalDistribution(order=4))
