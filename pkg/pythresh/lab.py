"""ThresholdLab 실험실."""

from typing import Optional

from pythresh.config import Settings


class ThresholdLab:
    """무작위 임계 그래프 실험을 위한 메인 진입점."""

    def __init__(self, settings: Optional[Settings] = None):
        """실험실을 초기화합니다.

        Args:
            settings: 상한과 기본값 (기본값: 환경 변수에서 읽은 설정)
        """
        self._settings = settings if settings is not None else Settings.from_env()

    @property
    def settings(self) -> Settings:
        """설정을 반환합니다 (읽기 전용)."""
        return self._settings

    @property
    def exhaustive(self):
        """전수 열거 엔진에 접근합니다."""
        if not hasattr(self, "_exhaustive"):
            from pythresh.engines.exhaustive import ExhaustiveEngine

            self._exhaustive = ExhaustiveEngine(self)
        return self._exhaustive

    @property
    def sampling(self):
        """표본 추출 엔진에 접근합니다."""
        if not hasattr(self, "_sampling"):
            from pythresh.engines.sampling import SamplingEngine

            self._sampling = SamplingEngine(self)
        return self._sampling

    @property
    def uniformity(self):
        """균일성 검정 엔진에 접근합니다."""
        if not hasattr(self, "_uniformity"):
            from pythresh.engines.uniformity import UniformityEngine

            self._uniformity = UniformityEngine(self)
        return self._uniformity

    @property
    def verification(self):
        """교차 검증 엔진에 접근합니다."""
        if not hasattr(self, "_verification"):
            from pythresh.engines.verification import VerificationEngine

            self._verification = VerificationEngine(self)
        return self._verification
