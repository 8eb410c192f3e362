"""몬테카를로 표본 추출 엔진 (가중치 모델 / 균등 수열 모델)."""

import logging
import time
from collections import Counter
from typing import Callable, Dict, List, Optional, Tuple, Union

import numpy as np

from pythresh.engines.base import BaseEngine, elapsed_ms
from pythresh.exceptions import NotThreshold, RecognitionDefect, UsageError
from pythresh.invariants import Invariant, evaluate
from pythresh.models.distribution import EmpiricalDistribution
from pythresh.models.graph import pack_codes, recognize_batch, weight_adjacency
from pythresh.models.sequence import CreationSequence
from pythresh.rng import make_generator, resolve_seed, spawn_streams

_logger = logging.getLogger(__name__)

# (rng, n, size) -> sequence codes (int64, or Python ints past 62 digits)
Sampler = Callable[[np.random.Generator, int, int], np.ndarray]

_ADJACENCY_CELLS = 1 << 24


def weight_sampler(rng: np.random.Generator, n: int, size: int) -> np.ndarray:
    """가중치 n개를 균등하게 뽑고 그래프를 인식해 수열 code를 돌려줍니다."""
    weights = rng.random((size, n))
    # bounds each (rows, n, n) adjacency block
    rows = max(1, _ADJACENCY_CELLS // (n * n))
    try:
        return np.concatenate(
            [recognize_batch(weight_adjacency(weights[i : i + rows])) for i in range(0, size, rows)]
        )
    except NotThreshold as exc:
        raise RecognitionDefect(f"weight-induced graph failed recognition: {exc}") from exc


def digit_sampler(rng: np.random.Generator, n: int, size: int, p_one: float = 0.5) -> np.ndarray:
    """n-1개의 숫자를 독립적으로 뽑습니다 (1일 확률 ``p_one``)."""
    m = n - 1
    if m <= 0:
        return np.zeros(size, dtype=np.int64)
    return pack_codes((rng.random((size, m)) < p_one).astype(np.int8))


SAMPLERS: Dict[str, Sampler] = {
    "weights": weight_sampler,
    "uniform": digit_sampler,
}


def _sample_chunk(task: Tuple[Sampler, int, int, np.random.SeedSequence]) -> np.ndarray:
    sampler, n, size, seed_seq = task
    return sampler(make_generator(seed_seq), n, size)


def _edge_chunk(task: Tuple[int, int, np.random.SeedSequence]) -> int:
    n, size, seed_seq = task
    weights = make_generator(seed_seq).random((size, n))
    return int(np.count_nonzero(weights[:, 0] + weights[:, 1] > 1.0))


class SamplingEngine(BaseEngine):
    """무작위 임계 그래프를 뽑는 엔진."""

    def __init__(self, lab):
        """SamplingEngine을 초기화합니다.

        Args:
            lab: ThresholdLab 인스턴스
        """
        super().__init__(lab)
        self.name = "sampling"

    def resolve_sampler(self, model: Union[str, Sampler]) -> Sampler:
        if callable(model):
            return model
        try:
            return SAMPLERS[model]
        except KeyError:
            raise UsageError(f"unknown model {model!r} (choose from {', '.join(SAMPLERS)})")

    def _chunks(self, samples: int, seed: int) -> List[Tuple[int, np.random.SeedSequence]]:
        """표본을 고정 크기 청크로 나누고 청크마다 고정된 자식 스트림을 배정합니다."""
        chunk = self.settings.chunk_size
        count = -(-samples // chunk)
        streams = spawn_streams(seed, count)
        return [(min(chunk, samples - i * chunk), streams[i]) for i in range(count)]

    def sample_codes(
        self,
        n: int,
        samples: int,
        seed: int,
        model: Union[str, Sampler] = "weights",
    ) -> np.ndarray:
        """표본 ``samples``개의 수열 code 배열.

        결과는 (seed, samples, chunk_size)에만 의존하고 작업자 수와 무관합니다.

        Raises:
            UsageError: n < 1 또는 samples < 1
        """
        if n < 1:
            raise UsageError(f"n must be >= 1, got {n}")
        if samples < 1:
            raise UsageError(f"samples must be >= 1, got {samples}")
        sampler = self.resolve_sampler(model)
        tasks = [(sampler, n, size, stream) for size, stream in self._chunks(samples, seed)]
        return np.concatenate(self._map(_sample_chunk, tasks))

    def generate(
        self,
        n: int,
        count: int,
        seed: Optional[int] = None,
        model: str = "weights",
    ) -> List[CreationSequence]:
        """무작위 생성 수열 ``count``개."""
        seed = resolve_seed(seed, self.settings.ci_deterministic)
        codes = self.sample_codes(n, count, seed, model)
        return [CreationSequence(code=int(code), length=n - 1) for code in codes]

    def monte_carlo(
        self,
        n: int,
        samples: int,
        seed: int,
        invariant: Union[Invariant, str],
        k: Optional[int] = None,
        model: Union[str, Sampler] = "weights",
    ) -> EmpiricalDistribution:
        """표본 그래프들의 불변량 빈도.

        같은 수열은 한 번만 평가하고 빈도를 곱해 더합니다.
        """
        invariant = Invariant.parse(invariant) if isinstance(invariant, str) else invariant
        if invariant.requires_k and k is None:
            raise UsageError("invariant 'kcore' requires k")

        started = time.perf_counter()
        codes = self.sample_codes(n, samples, seed, model)
        distinct, hits = np.unique(codes, return_counts=True)

        tally: Counter = Counter()
        for code, hit in zip(distinct.tolist(), hits.tolist()):
            s = CreationSequence(code=code, length=n - 1)
            tally[evaluate(invariant, s, k)] += hit

        _logger.info(
            "monte carlo %s n=%d samples=%d seed=%d: %d distinct graphs in %.1f ms",
            invariant.value, n, samples, seed, len(distinct), elapsed_ms(started),
        )
        return EmpiricalDistribution(
            order=n,
            counts=dict(tally),
            invariant=invariant.value,
            k=k if invariant.requires_k else None,
        )

    def edge_frequency(self, n: int, samples: int, seed: int) -> float:
        """가중치 모델에서 정점 0과 1이 인접한 비율 (기대값 1/2)."""
        if n < 2:
            raise UsageError(f"edge frequency needs n >= 2, got {n}")
        tasks = [(n, size, stream) for size, stream in self._chunks(samples, seed)]
        return sum(self._map(_edge_chunk, tasks)) / samples
