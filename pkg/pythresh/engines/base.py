"""모든 실험 엔진의 기본 클래스."""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from concurrent.futures.process import BrokenProcessPool
from typing import TYPE_CHECKING, Callable, List, Sequence, Tuple, TypeVar

from pythresh.config import Settings
from pythresh.exceptions import ThresholdError

if TYPE_CHECKING:
    from pythresh.lab import ThresholdLab

_logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class BaseEngine:
    """모든 실험 엔진의 기본 클래스."""

    def __init__(self, lab: "ThresholdLab"):
        """실험실(lab)과 함께 엔진을 초기화합니다.

        Args:
            lab: ThresholdLab 인스턴스
        """
        self.lab = lab
        self.name = ""  # Subclasses should override

    @property
    def settings(self) -> Settings:
        return self.lab.settings

    @staticmethod
    def _partitions(total: int, parts: int) -> List[Tuple[int, int]]:
        """[0, total)을 연속된 반열린 구간 ``parts``개 이하로 나눕니다."""
        parts = max(1, min(parts, total))
        size, extra = divmod(total, parts)
        ranges = []
        start = 0
        for i in range(parts):
            stop = start + size + (1 if i < extra else 0)
            if stop > start:
                ranges.append((start, stop))
            start = stop
        return ranges

    def _map(self, func: Callable[[T], R], tasks: Sequence[T]) -> List[R]:
        """작업 목록을 작업자들에게 나눠 실행하고 입력 순서대로 결과를 돌려줍니다.

        작업자가 하나이거나 작업이 하나면 현재 프로세스에서 실행합니다.

        Args:
            func: 모듈 수준 함수 (프로세스 간 전달 가능해야 함)
            tasks: 작업 인자 목록

        Returns:
            List: 작업별 결과

        Raises:
            ThresholdError: 작업자 풀이 비정상 종료된 경우
        """
        workers = min(self.settings.workers, len(tasks))
        started = time.perf_counter()
        _logger.debug("%s: %d task(s) on %d worker(s)", self.name, len(tasks), max(workers, 1))

        if workers <= 1:
            results = [func(task) for task in tasks]
        else:
            try:
                with ProcessPoolExecutor(max_workers=workers) as pool:
                    results = list(pool.map(func, tasks))
            except BrokenProcessPool as exc:
                raise ThresholdError(f"{self.name}: worker pool terminated abnormally") from exc

        _logger.debug("%s: tasks finished in %.1f ms", self.name, (time.perf_counter() - started) * 1000)
        return results


def elapsed_ms(started: float) -> float:
    """``time.perf_counter()`` 기준 경과 시간 (ms, 소수 둘째 자리)."""
    return round((time.perf_counter() - started) * 1000, 2)
