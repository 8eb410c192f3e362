"""실행 설정 (상한, 기본값, 환경 변수)."""

import os
from dataclasses import dataclass, field, replace
from typing import Mapping, Optional, Tuple

from pythresh.exceptions import UsageError


def _default_workers() -> int:
    return os.cpu_count() or 1


@dataclass(frozen=True)
class Settings:
    """라이브러리 전역 상한과 기본값.

    모든 상한은 이름 있는 필드로 두고 코드 안에 상수로 흩어 놓지 않습니다.
    """

    max_enumeration_length: int = 30
    max_exhaustive_order: int = 21

    # brute-force oracle order caps
    matching_oracle_cap: int = 12
    cycle_oracle_cap: int = 12
    clique_oracle_cap: int = 14
    planar_oracle_cap: int = 10
    induced_oracle_cap: int = 7

    max_verify_order: int = 12
    max_oracle_verify_order: int = 10

    uniformity_order_range: Tuple[int, int] = (2, 9)
    min_cell_expectation: int = 100
    merge_threshold: float = 5.0
    alpha: float = 0.001

    workers: int = field(default_factory=_default_workers)
    chunk_size: int = 20000
    ci_deterministic: bool = False

    def __post_init__(self):
        if self.workers < 1:
            raise UsageError(f"workers must be >= 1, got {self.workers}")
        if self.chunk_size < 1:
            raise UsageError(f"chunk_size must be >= 1, got {self.chunk_size}")
        if not 0.0 < self.alpha < 1.0:
            raise UsageError(f"alpha must lie in (0, 1), got {self.alpha}")

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None, **overrides) -> "Settings":
        """환경 변수에서 설정을 읽습니다.

        Args:
            environ: 환경 변수 매핑 (기본값: os.environ)
            **overrides: 환경 변수보다 우선하는 필드 값

        Returns:
            Settings: 설정 객체
        """
        env = os.environ if environ is None else environ
        values = {"ci_deterministic": env.get("CI_DETERMINISTIC", "") == "1"}

        workers = env.get("PYTHRESH_WORKERS")
        if workers:
            try:
                values["workers"] = int(workers)
            except ValueError:
                raise UsageError(f"PYTHRESH_WORKERS must be an integer, got {workers!r}")

        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)

    def with_overrides(self, **overrides) -> "Settings":
        """일부 필드를 바꾼 새 설정을 반환합니다 (None 값은 무시)."""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


DEFAULT_SETTINGS = Settings(workers=1)
