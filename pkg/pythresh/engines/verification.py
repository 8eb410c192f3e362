"""닫힌 형식 · 전수 열거 · 오라클 교차 검증 엔진."""

import logging
import time
from typing import Callable, Dict, List, Optional, Tuple

from pythresh import distributions
from pythresh import invariants as inv
from pythresh import oracles
from pythresh.engines.base import BaseEngine, elapsed_ms
from pythresh.exceptions import UsageError
from pythresh.invariants import Invariant
from pythresh.models.distribution import ExactDistribution
from pythresh.models.graph import build_graph
from pythresh.models.report import CheckResult, VerificationReport
from pythresh.models.sequence import CreationSequence, enumerate_sequences

_logger = logging.getLogger(__name__)

ClosedForm = Callable[[Invariant, int, Optional[int]], ExactDistribution]

ORACLE_CHECKS = ("matching", "cycle", "clique", "degeneracy", "planar", "hamiltonian")

# (sequence length, start code, stop code, k values)
OracleTask = Tuple[int, int, int, Tuple[int, ...]]


def _oracle_mismatches(s: CreationSequence, ks: Tuple[int, ...]) -> List[str]:
    g = build_graph(s).to_edge_list()
    observed = {
        "matching": (inv.matching_number(s), oracles.oracle_max_matching(g)),
        "cycle": (inv.longest_cycle(s), oracles.oracle_longest_cycle(g)),
        "clique": (inv.clique_number(s), oracles.oracle_clique_number(g)),
        "degeneracy": (inv.degeneracy(s), oracles.oracle_degeneracy(g)),
        "planar": (inv.is_planar(s), oracles.oracle_is_planar(g)),
        "hamiltonian": (inv.is_hamiltonian(s), oracles.oracle_is_hamiltonian(g)),
    }
    for k in ks:
        observed[f"kcore_{k}"] = (inv.k_core_members(s, k), oracles.oracle_k_core(g, k))
    return [name for name, (closed, oracle) in observed.items() if closed != oracle]


def _oracle_range(task: OracleTask) -> Dict[str, int]:
    """구간 안에서 검사별로 처음 어긋난 수열의 code."""
    length, start, stop, ks = task
    first: Dict[str, int] = {}
    for s in enumerate_sequences(length, start, stop, max_length=length):
        for name in _oracle_mismatches(s, ks):
            first.setdefault(name, s.code)
    return first


class VerificationEngine(BaseEngine):
    """닫힌 형식이 열거 및 오라클과 일치하는지 한 번에 확인합니다."""

    def __init__(self, lab):
        """VerificationEngine을 초기화합니다.

        Args:
            lab: ThresholdLab 인스턴스
        """
        super().__init__(lab)
        self.name = "verification"

    def _distribution_checks(
        self, n: int, k_max: int, closed_form: ClosedForm
    ) -> List[CheckResult]:
        exhaustive = self.lab.exhaustive
        results = []
        for invariant in Invariant:
            if invariant is Invariant.CYCLE and n < 3:
                continue
            ks = range(1, min(k_max, n - 1) + 1) if invariant.requires_k else [None]
            for k in ks:
                expected = closed_form(invariant, n, k)
                actual = exhaustive.exhaustive_distribution(n, invariant, k)
                name = f"dist_{invariant.value}"
                if expected.counts == actual.counts and expected.is_normalized():
                    results.append(CheckResult(name=name, n=n, k=k, ok=True))
                    continue

                values = sorted(set(expected.counts) | set(actual.counts))
                value = next(
                    (v for v in values if expected.count(v) != actual.count(v)),
                    values[0],
                )
                witness = exhaustive.find_witness(n, invariant, value, k)
                results.append(
                    CheckResult(
                        name=name,
                        n=n,
                        k=k,
                        ok=False,
                        detail=(
                            f"value {value}: closed form {expected.count(value)}, "
                            f"enumeration {actual.count(value)}, "
                            f"closed-form total {expected.total} of {expected.denominator}"
                        ),
                        witness=None if witness is None else str(witness),
                    )
                )
        return results

    def _oracle_checks(self, n: int, k_max: int) -> List[CheckResult]:
        ks = tuple(range(1, k_max + 1))
        length = n - 1
        tasks = [
            (length, start, stop, ks)
            for start, stop in self._partitions(1 << length, self.settings.workers)
        ]
        first: Dict[str, int] = {}
        for partial in self._map(_oracle_range, tasks):
            for name, code in partial.items():
                first[name] = min(code, first.get(name, code))

        results = []
        for name in ORACLE_CHECKS + tuple(f"kcore_{k}" for k in ks):
            code = first.get(name)
            witness = None if code is None else str(CreationSequence(code=code, length=length))
            results.append(
                CheckResult(
                    name=f"oracle_{name}",
                    n=n,
                    ok=code is None,
                    detail="" if code is None else "closed form disagrees with brute force",
                    witness=witness,
                )
            )
        return results

    def verify(
        self,
        n_max: int,
        k_max: int = 3,
        closed_form: Optional[ClosedForm] = None,
    ) -> VerificationReport:
        """2 <= n <= n_max에서 닫힌 형식과 전수 열거를, 오라클 상한 이하에서 오라클을 비교합니다.

        Args:
            n_max: 최대 정점 수 (설정의 max_verify_order 이하)
            k_max: k-core를 확인할 최대 k
            closed_form: 닫힌 형식 분포 함수 (기본값: distributions.closed_form)

        Returns:
            VerificationReport: 모든 검사 결과

        Raises:
            UsageError: 상한을 넘는 n_max 또는 k_max < 1
        """
        if not 2 <= n_max <= self.settings.max_verify_order:
            raise UsageError(
                f"--n-max must lie in 2..{self.settings.max_verify_order}, got {n_max}"
            )
        if k_max < 1:
            raise UsageError(f"--k-max must be >= 1, got {k_max}")
        closed_form = closed_form or distributions.closed_form

        started = time.perf_counter()
        report = VerificationReport(n_max=n_max, k_max=k_max)
        for n in range(2, n_max + 1):
            report.checks.extend(self._distribution_checks(n, k_max, closed_form))
        oracle_max = min(n_max, self.settings.max_oracle_verify_order)
        for n in range(1, oracle_max + 1):
            report.checks.extend(self._oracle_checks(n, k_max))
        report.elapsed_ms = elapsed_ms(started)

        for check in report.mismatches:
            _logger.warning(
                "mismatch %s n=%d k=%s witness=%r %s",
                check.name, check.n, check.k, check.witness, check.detail,
            )
        _logger.info(
            "verify n_max=%d: %d checks, %d mismatches in %.1f ms",
            n_max, len(report.checks), len(report.mismatches), report.elapsed_ms,
        )
        return report
