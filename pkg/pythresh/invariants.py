"""생성 수열에서 바로 계산하는 닫힌 형식 그래프 불변량."""

from enum import Enum
from typing import Callable, Dict, FrozenSet, Iterable, Optional

from pythresh.exceptions import InvalidK, UsageError
from pythresh.models.graph import build_graph
from pythresh.models.report import InvariantReport
from pythresh.models.sequence import CreationSequence, h, parse_sequence, r


class Invariant(str, Enum):
    """분포를 셀 수 있는 불변량 선택자."""

    H = "h"
    MATCHING = "matching"
    CYCLE = "cycle"
    DEGENERACY = "degeneracy"
    KCORE = "kcore"
    PLANAR = "planar"
    HAMILTONIAN = "hamiltonian"
    CLIQUE = "clique"

    @property
    def requires_k(self) -> bool:
        return self is Invariant.KCORE

    @classmethod
    def parse(cls, name: str) -> "Invariant":
        """이름 또는 별칭(nu, psi, omega, degen)을 선택자로 바꿉니다."""
        key = name.strip().lower()
        key = _ALIASES.get(key, key)
        try:
            return cls(key)
        except ValueError:
            choices = ", ".join(member.value for member in cls)
            raise UsageError(f"unknown invariant {name!r} (choose from {choices})")


_ALIASES = {
    "nu": "matching",
    "psi": "cycle",
    "omega": "clique",
    "degen": "degeneracy",
    "k-core": "kcore",
}


def clique_number(s: CreationSequence) -> int:
    """최대 클리크 크기 = 1-정점 수 + 1."""
    return s.ones + 1


def first_one(s: CreationSequence) -> int:
    """가장 왼쪽 1의 위치 (없으면 0)."""
    if s.code == 0:
        return 0
    return s.length - s.code.bit_length() + 1


def is_planar(s: CreationSequence) -> bool:
    """1이 두 개 이하이거나, 정확히 세 개이고 첫 1의 위치가 2 이하이면 평면 그래프입니다.

    첫 1 앞은 모두 0이므로 1111 / 00111 부분수열이 없다는 조건과 같습니다.
    """
    ones = s.ones
    return ones <= 2 or (ones == 3 and first_one(s) <= 2)


_FORBIDDEN_PATTERNS = (parse_sequence("1111"), parse_sequence("00111"))


def contains_forbidden_pattern(s: CreationSequence) -> bool:
    """1111 또는 00111을 부분수열로 직접 찾습니다."""
    return any(pattern.is_subsequence_of(s) for pattern in _FORBIDDEN_PATTERNS)


def matching_number(s: CreationSequence) -> int:
    """ν(G) = ⌊(n - h(s)) / 2⌋."""
    return (s.order - h(s)) // 2


def has_perfect_matching(s: CreationSequence) -> bool:
    """위수가 짝수이고 h(s) = 0이면 완전 매칭이 있습니다."""
    return s.order % 2 == 0 and h(s) == 0


def has_near_perfect_matching(s: CreationSequence) -> bool:
    """위수가 홀수이고 정점 하나만 빼고 모두 짝지을 수 있는지."""
    return s.order % 2 == 1 and matching_number(s) == (s.order - 1) // 2


def is_hamiltonian(s: CreationSequence) -> bool:
    """n >= 3이고 마지막 숫자가 1이며 나머지 앞부분의 h가 0이면 해밀턴 그래프입니다."""
    if s.order < 3:
        return False
    return s.digit(s.length) == 1 and h(s.prefix(s.length - 1)) == 0


def longest_cycle(s: CreationSequence) -> int:
    """ψ(G) = r(s) + 1 - h(s_1 ... s_{r(s)-1}); 1이 두 개 미만이면 사이클이 없어 0."""
    if s.ones < 2:
        return 0
    last = r(s)
    return last + 1 - h(s.prefix(last - 1))


def degeneracy(s: CreationSequence) -> int:
    """퇴화수 = 1의 개수."""
    return s.ones


def k_core_members(s: CreationSequence, k: int) -> FrozenSet[int]:
    """k-core의 정점 집합.

    1이 k개 이상이면 차수가 k 이상인 정점이 정확히 k-core이고 (가지치기 한 번),
    그렇지 않으면 k-core는 비어 있습니다. k = 0이면 모든 정점입니다.
    """
    if k < 0:
        raise InvalidK(f"k must be >= 0, got {k}")
    graph = build_graph(s)
    if k == 0:
        return frozenset(graph.vertices())
    if s.ones < k:
        return frozenset()
    return frozenset(v for v, deg in enumerate(graph.degrees()) if deg >= k)


def k_core_size(s: CreationSequence, k: int) -> int:
    return len(k_core_members(s, k))


_EVALUATORS: Dict[Invariant, Callable[[CreationSequence], int]] = {
    Invariant.H: h,
    Invariant.MATCHING: matching_number,
    Invariant.CYCLE: longest_cycle,
    Invariant.DEGENERACY: degeneracy,
    Invariant.PLANAR: lambda s: int(is_planar(s)),
    Invariant.HAMILTONIAN: lambda s: int(is_hamiltonian(s)),
    Invariant.CLIQUE: clique_number,
}


def evaluate(invariant: Invariant, s: CreationSequence, k: Optional[int] = None) -> int:
    """선택한 불변량의 값을 정수로 계산합니다 (부울은 0/1).

    Raises:
        UsageError: kcore에 k가 없는 경우
    """
    if invariant is Invariant.KCORE:
        if k is None:
            raise UsageError("invariant 'kcore' requires k")
        return k_core_size(s, k)
    return _EVALUATORS[invariant](s)


def invariant_report(s: CreationSequence, ks: Iterable[int] = ()) -> InvariantReport:
    """모든 닫힌 형식 불변량을 보고서 하나로 묶습니다."""
    return InvariantReport(
        sequence=str(s),
        n=s.order,
        ones=s.ones,
        h=h(s),
        r=r(s),
        clique=clique_number(s),
        planar=is_planar(s),
        nu=matching_number(s),
        hamiltonian=is_hamiltonian(s),
        psi=longest_cycle(s),
        degeneracy=degeneracy(s),
        kcore={k: k_core_size(s, k) for k in ks},
    )
