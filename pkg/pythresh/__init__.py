"""
pythresh: 생성 수열로 다루는 무작위 임계 그래프 라이브러리.

이 패키지는 생성 수열에서 바로 계산하는 그래프 불변량, 정확한 확률 분포,
전수 탐색 오라클, 몬테카를로 실험을 위한 인터페이스를 제공합니다.
"""

from .config import Settings
from .exceptions import (
    InvalidCharacter,
    InvalidK,
    NotThreshold,
    OrderCapExceeded,
    OrderTooSmall,
    RecognitionDefect,
    ThresholdError,
    UsageError,
)
from .invariants import Invariant
from .lab import ThresholdLab
from .models.graph import build_graph, recognize
from .models.sequence import CreationSequence, parse_sequence

__all__ = [
    "ThresholdLab",
    "Settings",
    "Invariant",
    "CreationSequence",
    "parse_sequence",
    "build_graph",
    "recognize",
    "ThresholdError",
    "UsageError",
    "InvalidCharacter",
    "InvalidK",
    "NotThreshold",
    "OrderCapExceeded",
    "OrderTooSmall",
    "RecognitionDefect",
]
