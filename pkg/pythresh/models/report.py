"""불변량 보고서와 실행/검증 보고서 모델."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from pythresh.models.base import BaseModel


@dataclass(frozen=True)
class InvariantReport(BaseModel):
    """그래프 하나의 닫힌 형식 불변량 묶음."""

    sequence: str
    n: int
    ones: int
    h: int
    r: int
    clique: int
    planar: bool
    nu: int
    hamiltonian: bool
    psi: int
    degeneracy: int
    kcore: Dict[int, int] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        """고정 키 이름을 가진 평면 레코드 (k-core는 ``kcore_<k>``)."""
        data = {
            "sequence": self.sequence,
            "n": self.n,
            "ones": self.ones,
            "h": self.h,
            "r": self.r,
            "clique": self.clique,
            "planar": self.planar,
            "nu": self.nu,
            "hamiltonian": self.hamiltonian,
            "psi": self.psi,
            "degeneracy": self.degeneracy,
        }
        for k, size in sorted(self.kcore.items()):
            data[f"kcore_{k}"] = size
        return data


@dataclass
class RunReport(BaseModel):
    """CLI 실행 보고서. 값이 None인 선택 필드는 직렬화하지 않습니다."""

    command: str
    n: int
    denominator: Optional[int] = None
    cells: List[Dict[str, Any]] = field(default_factory=list)
    k: Optional[int] = None
    samples: Optional[int] = None
    seed: Optional[int] = None
    statistic: Optional[float] = None
    df: Optional[int] = None
    p_value: Optional[float] = None
    decision: Optional[str] = None
    rng: Optional[str] = None
    elapsed_ms: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        order = [
            "command", "n", "k", "samples", "seed", "denominator", "cells",
            "statistic", "df", "p_value", "decision", "rng", "elapsed_ms",
        ]
        data = {}
        for name in order:
            value = getattr(self, name)
            if value is None:
                continue
            data[name] = value
        return data


@dataclass(frozen=True)
class CheckResult(BaseModel):
    """검증 항목 하나의 결과."""

    name: str
    n: int
    ok: bool
    k: Optional[int] = None
    detail: str = ""
    witness: Optional[str] = None


@dataclass
class VerificationReport(BaseModel):
    """닫힌 형식 / 전수 열거 / 오라클 비교 결과 모음."""

    n_max: int
    k_max: int
    checks: List[CheckResult] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return all(check.ok for check in self.checks)

    @property
    def mismatches(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.ok]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "command": "verify",
            "n_max": self.n_max,
            "k_max": self.k_max,
            "passed": self.passed,
            "checks": len(self.checks),
            "mismatches": [check.to_dict() for check in self.mismatches],
            "elapsed_ms": self.elapsed_ms,
        }
