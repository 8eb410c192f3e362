"""정확 분포, 경험 분포, 비교/검정 결과 모델."""

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from pythresh.models.base import BaseModel

CSV_FIELDS = ["n", "k", "value", "count", "denominator", "probability"]


def format_probability(value: Fraction) -> str:
    """표시용 확률 문자열 (유효숫자 12자리)."""
    return f"{float(value):.12g}"


def _clean_counts(counts: Dict[int, int]) -> Dict[int, int]:
    cleaned = {}
    for value, count in sorted(counts.items()):
        count = int(count)
        if count < 0:
            raise ValueError(f"negative count {count} for value {value}")
        if count:
            cleaned[int(value)] = count
    return cleaned


@dataclass(frozen=True)
class ExactDistribution(BaseModel):
    """값 -> 정수 개수, 공통 분모 2^(n-1).

    개수가 0인 값은 저장하지 않습니다. 부울 불변량은 0/1로 셉니다.
    """

    order: int
    counts: Dict[int, int] = field(default_factory=dict)
    invariant: str = ""
    k: Optional[int] = None

    def __post_init__(self):
        if self.order < 1:
            raise ValueError(f"order must be >= 1, got {self.order}")
        object.__setattr__(self, "counts", _clean_counts(self.counts))

    @property
    def denominator(self) -> int:
        return 1 << (self.order - 1)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def is_normalized(self) -> bool:
        """개수 합이 정확히 2^(n-1)인지 (정수 비교)."""
        return self.total == self.denominator

    def count(self, value: int) -> int:
        return self.counts.get(int(value), 0)

    def probability(self, value: int) -> Fraction:
        return Fraction(self.count(value), self.denominator)

    def support(self) -> List[int]:
        return list(self.counts)

    def rows(self) -> List[Dict[str, object]]:
        """CSV/JSON 행 목록."""
        result = []
        for value, count in self.counts.items():
            row = {"n": self.order}
            if self.k is not None:
                row["k"] = self.k
            row.update(
                value=value,
                count=count,
                denominator=self.denominator,
                probability=format_probability(Fraction(count, self.denominator)),
            )
            result.append(row)
        return result

    def to_csv(self) -> str:
        fieldnames = [f for f in CSV_FIELDS if f != "k" or self.k is not None]
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=fieldnames, lineterminator="\n")
        writer.writeheader()
        writer.writerows(self.rows())
        return buffer.getvalue()

    @classmethod
    def from_csv(cls, text: str, invariant: str = "") -> "ExactDistribution":
        """to_csv 출력을 다시 읽습니다."""
        reader = csv.DictReader(io.StringIO(text))
        order = None
        k = None
        counts = {}
        for row in reader:
            order = int(row["n"])
            if row.get("k") not in (None, ""):
                k = int(row["k"])
            counts[int(row["value"])] = int(row["count"])
        if order is None:
            raise ValueError("distribution CSV has no rows")
        return cls(order=order, counts=counts, invariant=invariant, k=k)

    def to_dict(self):
        data = {"n": self.order, "invariant": self.invariant}
        if self.k is not None:
            data["k"] = self.k
        data["denominator"] = self.denominator
        data["cells"] = [
            {"value": row["value"], "count": row["count"], "probability": row["probability"]}
            for row in self.rows()
        ]
        return data

    @classmethod
    def from_dict(cls, data) -> "ExactDistribution":
        return cls(
            order=data["n"],
            counts={cell["value"]: cell["count"] for cell in data.get("cells", [])},
            invariant=data.get("invariant", ""),
            k=data.get("k"),
        )


@dataclass(frozen=True)
class EmpiricalDistribution(BaseModel):
    """몬테카를로 표본의 값 -> 빈도."""

    order: int
    counts: Dict[int, int] = field(default_factory=dict)
    invariant: str = ""
    k: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "counts", _clean_counts(self.counts))

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def count(self, value: int) -> int:
        return self.counts.get(int(value), 0)

    def frequency(self, value: int) -> float:
        total = self.total
        return self.count(value) / total if total else 0.0

    @classmethod
    def from_exact(cls, exact: ExactDistribution) -> "EmpiricalDistribution":
        """정확 분포의 개수를 그대로 표본 빈도로 옮깁니다."""
        return cls(order=exact.order, counts=dict(exact.counts), invariant=exact.invariant, k=exact.k)

    def to_dict(self):
        data = {"n": self.order, "invariant": self.invariant}
        if self.k is not None:
            data["k"] = self.k
        data["samples"] = self.total
        data["cells"] = [
            {"value": value, "count": count} for value, count in self.counts.items()
        ]
        return data


@dataclass(frozen=True)
class ComparisonReport(BaseModel):
    """정확 분포와 경험 분포의 비교 결과."""

    tv_distance: float
    statistic: float
    df: int
    p_value: float
    cells: int


@dataclass(frozen=True)
class UniformityTestResult(BaseModel):
    """가중치 모델의 균일성 카이제곱 검정 결과."""

    n: int
    samples: int
    cells: int
    statistic: float
    df: int
    p_value: float
    alpha: float
    decision: str
    seed: Optional[int] = None
    model: str = "weights"
    observed: List[int] = field(default_factory=list)

    @property
    def accepted(self) -> bool:
        return self.decision == "accept"
