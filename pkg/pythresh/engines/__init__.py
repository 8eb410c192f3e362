"""
pythresh 실험 엔진.

열거, 표본 추출, 균일성 검정, 교차 검증 엔진 클래스들을 제공합니다.
"""

from .base import BaseEngine
from .exhaustive import ExhaustiveEngine
from .sampling import SamplingEngine
from .uniformity import UniformityEngine
from .verification import VerificationEngine

__all__ = [
    "BaseEngine",
    "ExhaustiveEngine",
    "SamplingEngine",
    "UniformityEngine",
    "VerificationEngine",
]
