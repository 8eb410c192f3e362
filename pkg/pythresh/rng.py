"""재현 가능한 난수 스트림 (numpy PCG64)."""

from typing import List, Optional, Union

import numpy as np

from pythresh.exceptions import UsageError

RNG_ALGORITHM = "PCG64"

SeedLike = Union[int, np.random.SeedSequence]


def make_generator(seed: SeedLike) -> np.random.Generator:
    """시드 또는 SeedSequence로 PCG64 생성기를 만듭니다."""
    if not isinstance(seed, np.random.SeedSequence):
        seed = np.random.SeedSequence(seed)
    return np.random.Generator(np.random.PCG64(seed))


def spawn_streams(seed: int, count: int) -> List[np.random.SeedSequence]:
    """마스터 시드에서 서로 독립인 ``count``개의 자식 스트림을 파생합니다.

    i번째 자식은 count와 무관하게 항상 같은 스트림입니다.
    """
    return np.random.SeedSequence(seed).spawn(count)


def resolve_seed(seed: Optional[int], ci_deterministic: bool = False) -> int:
    """명시적 시드를 그대로 쓰거나, 없으면 새 엔트로피를 뽑습니다.

    Raises:
        UsageError: CI 결정성 모드에서 시드가 없는 경우
    """
    if seed is not None:
        if seed < 0:
            raise UsageError(f"seed must be non-negative, got {seed}")
        return seed
    if ci_deterministic:
        raise UsageError("--seed is required when CI_DETERMINISTIC=1")
    return int(np.random.SeedSequence().entropy)
