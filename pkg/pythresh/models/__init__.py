"""
pythresh 데이터 모델.

생성 수열, 그래프, 분포와 보고서를 표현하는 데이터 클래스들을 제공합니다.
"""

from .base import BaseModel
from .sequence import CreationSequence, TailCounts
from .graph import EdgeListGraph, ThresholdGraph, VertexRole, WeightAssignment
from .distribution import (
    ComparisonReport,
    EmpiricalDistribution,
    ExactDistribution,
    UniformityTestResult,
)
from .report import CheckResult, InvariantReport, RunReport, VerificationReport

__all__ = [
    "BaseModel",
    "CreationSequence",
    "TailCounts",
    "EdgeListGraph",
    "ThresholdGraph",
    "VertexRole",
    "WeightAssignment",
    "ExactDistribution",
    "EmpiricalDistribution",
    "ComparisonReport",
    "UniformityTestResult",
    "InvariantReport",
    "RunReport",
    "CheckResult",
    "VerificationReport",
]
