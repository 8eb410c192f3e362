"""전수 열거 엔진."""

import logging
import time
from collections import Counter
from typing import Dict, Optional, Tuple, Union

from pythresh.engines.base import BaseEngine, elapsed_ms
from pythresh.exceptions import OrderCapExceeded, OrderTooSmall, UsageError
from pythresh.invariants import Invariant, evaluate
from pythresh.models.distribution import ExactDistribution
from pythresh.models.sequence import CreationSequence, enumerate_sequences

_logger = logging.getLogger(__name__)

# (invariant value, sequence length, k, start code, stop code)
TallyTask = Tuple[str, int, Optional[int], int, int]


def _tally_range(task: TallyTask) -> Dict[int, int]:
    name, length, k, start, stop = task
    invariant = Invariant(name)
    tally: Counter = Counter()
    for s in enumerate_sequences(length, start, stop, max_length=length):
        tally[evaluate(invariant, s, k)] += 1
    return dict(tally)


class ExhaustiveEngine(BaseEngine):
    """길이 n-1인 모든 생성 수열을 열거해 불변량의 정확한 개수를 셉니다."""

    def __init__(self, lab):
        """ExhaustiveEngine을 초기화합니다.

        Args:
            lab: ThresholdLab 인스턴스
        """
        super().__init__(lab)
        self.name = "exhaustive"

    def _check_order(self, n: int) -> None:
        if n < 1:
            raise OrderTooSmall(f"order must be >= 1, got {n}")
        if n > self.settings.max_exhaustive_order:
            raise OrderCapExceeded(
                f"exhaustive enumeration supports n <= {self.settings.max_exhaustive_order}, got {n}"
            )

    def exhaustive_distribution(
        self,
        n: int,
        invariant: Union[Invariant, str],
        k: Optional[int] = None,
    ) -> ExactDistribution:
        """2^(n-1)개 수열 전부에서 불변량을 계산해 정확한 개수를 셉니다.

        작업자별로 code 값의 연속 구간을 나눠 세고 값별 덧셈으로 합칩니다.

        Args:
            n: 정점 수
            invariant: 불변량 선택자
            k: kcore 선택자의 k

        Returns:
            ExactDistribution: 열거로 얻은 분포

        Raises:
            OrderCapExceeded: n이 상한을 넘는 경우
        """
        invariant = Invariant.parse(invariant) if isinstance(invariant, str) else invariant
        if invariant.requires_k and k is None:
            raise UsageError("invariant 'kcore' requires k")
        self._check_order(n)

        started = time.perf_counter()
        length = n - 1
        total = 1 << length
        tasks = [
            (invariant.value, length, k, start, stop)
            for start, stop in self._partitions(total, self.settings.workers)
        ]
        merged: Counter = Counter()
        for partial in self._map(_tally_range, tasks):
            merged.update(partial)

        _logger.info(
            "exhaustive %s n=%d k=%s: %d sequences in %.1f ms",
            invariant.value, n, k, total, elapsed_ms(started),
        )
        return ExactDistribution(
            order=n,
            counts=dict(merged),
            invariant=invariant.value,
            k=k if invariant.requires_k else None,
        )

    def find_witness(
        self,
        n: int,
        invariant: Union[Invariant, str],
        value: int,
        k: Optional[int] = None,
    ) -> Optional[CreationSequence]:
        """불변량 값이 ``value``인 첫 번째 수열 (사전 순), 없으면 None."""
        invariant = Invariant.parse(invariant) if isinstance(invariant, str) else invariant
        self._check_order(n)
        for s in enumerate_sequences(n - 1, max_length=self.settings.max_enumeration_length):
            if evaluate(invariant, s, k) == value:
                return s
        return None
