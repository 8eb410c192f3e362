"""균일성 검정과 분포 비교 엔진."""

import logging
import time
from fractions import Fraction
from typing import Optional, Union

import numpy as np

from pythresh.engines.base import BaseEngine, elapsed_ms
from pythresh.engines.sampling import Sampler
from pythresh.exceptions import InsufficientSamples, OrderMismatch, OrderOutOfRange, UsageError
from pythresh.models.distribution import (
    ComparisonReport,
    EmpiricalDistribution,
    ExactDistribution,
    UniformityTestResult,
)
from pythresh.stats import chi_square_statistic, merged_chi_square, p_value

_logger = logging.getLogger(__name__)


class UniformityEngine(BaseEngine):
    """가중치 모델이 모든 임계 그래프에 2^(1-n)의 확률을 주는지 검정합니다."""

    def __init__(self, lab):
        """UniformityEngine을 초기화합니다.

        Args:
            lab: ThresholdLab 인스턴스
        """
        super().__init__(lab)
        self.name = "uniformity"

    def uniformity_test(
        self,
        n: int,
        samples: int,
        seed: int,
        alpha: Optional[float] = None,
        model: Union[str, Sampler] = "weights",
    ) -> UniformityTestResult:
        """수열별 적중 횟수를 균등 귀무가설에 대해 카이제곱 검정합니다.

        Args:
            n: 정점 수
            samples: 표본 수 (셀당 기대 빈도가 설정된 최소값 이상이어야 함)
            seed: 마스터 시드
            alpha: 유의수준 (기본값: 설정의 alpha)
            model: 표본 추출기 이름 또는 함수

        Returns:
            UniformityTestResult: 검정 결과

        Raises:
            OrderOutOfRange: n이 허용 범위를 벗어난 경우
            InsufficientSamples: 셀당 기대 빈도가 부족한 경우
            UsageError: alpha가 (0, 1) 밖인 경우
        """
        low, high = self.settings.uniformity_order_range
        if not low <= n <= high:
            raise OrderOutOfRange(f"uniformity test supports {low} <= n <= {high}, got {n}")
        cells = 1 << (n - 1)
        needed = self.settings.min_cell_expectation * cells
        if samples < needed:
            raise InsufficientSamples(
                f"need at least {needed} samples for {cells} cells "
                f"({self.settings.min_cell_expectation} expected per cell), got {samples}"
            )
        alpha = self.settings.alpha if alpha is None else alpha
        if not 0.0 < alpha < 1.0:
            raise UsageError(f"alpha must lie in (0, 1), got {alpha}")

        started = time.perf_counter()
        codes = self.lab.sampling.sample_codes(n, samples, seed, model)
        observed = np.bincount(codes, minlength=cells)
        expected = np.full(cells, samples / cells)
        statistic = chi_square_statistic(observed, expected)
        df = cells - 1
        p = p_value(statistic, df)
        decision = "reject" if p < alpha else "accept"

        _logger.info(
            "uniformity n=%d samples=%d seed=%d: chi2=%.3f df=%d p=%.4g -> %s (%.1f ms)",
            n, samples, seed, statistic, df, p, decision, elapsed_ms(started),
        )
        return UniformityTestResult(
            n=n,
            samples=samples,
            cells=cells,
            statistic=statistic,
            df=df,
            p_value=p,
            alpha=alpha,
            decision=decision,
            seed=seed,
            model=model if isinstance(model, str) else getattr(model, "__name__", "custom"),
            observed=observed.tolist(),
        )

    def compare_distributions(
        self, exact: ExactDistribution, empirical: EmpiricalDistribution
    ) -> ComparisonReport:
        """전체 변동 거리와 (희소 셀을 합친) 카이제곱 p-value.

        Raises:
            OrderMismatch: 두 분포의 위수가 다른 경우
        """
        if exact.order != empirical.order:
            raise OrderMismatch(
                f"cannot compare order {exact.order} with order {empirical.order}"
            )
        total = empirical.total
        if total < 1:
            raise ValueError("empirical distribution has no samples")

        values = set(exact.counts) | set(empirical.counts)
        tv = sum(
            abs(exact.probability(v) - Fraction(empirical.count(v), total)) for v in values
        ) / 2

        expected = {v: total * c / exact.denominator for v, c in exact.counts.items()}
        statistic, df, cells = merged_chi_square(
            empirical.counts, expected, self.settings.merge_threshold
        )
        return ComparisonReport(
            tv_distance=float(tv),
            statistic=statistic,
            df=df,
            p_value=p_value(statistic, df),
            cells=cells,
        )
