"""무작위 임계 그래프 불변량의 정확 분포.

n개 정점의 임계 그래프는 길이 n-1인 생성 수열과 일대일로 대응하고
모두 같은 확률 2^(1-n)을 가지므로, 확률은 공통 분모 2^(n-1) 위의
정수 개수로 나타냅니다.
"""

from fractions import Fraction
from math import comb
from typing import Callable, Dict, Optional

from pythresh.exceptions import InvalidK, OrderTooSmall, UsageError
from pythresh.invariants import Invariant
from pythresh.models.distribution import ExactDistribution


def binom(a: int, b: int) -> int:
    """이항계수. b < 0 또는 b > a이면 0, C(a, 0) = 1 (a = 0 포함)."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def _check_order(n: int) -> None:
    if n < 1:
        raise OrderTooSmall(f"order must be >= 1, got {n}")


def _denominator(n: int) -> int:
    return 1 << (n - 1)


# h


def h_count(n: int, k: int) -> int:
    """h(s) = k인 길이 n-1 수열의 개수, C(n-1, ⌊(n+k)/2⌋)."""
    return binom(n - 1, (n + k) // 2)


def h_count_by_walks(n: int, k: int) -> int:
    """직선 y = x + k에 닿되 넘지 않는 계단 경로 수로 센 같은 값."""
    return binom(n - 1, n - 1 + k - (n + k - 1) // 2)


def dist_h(n: int) -> ExactDistribution:
    _check_order(n)
    counts = {k: h_count(n, k) for k in range(n)}
    return ExactDistribution(order=n, counts=counts, invariant=Invariant.H.value)


# planarity


def planar_count(n: int) -> int:
    """평면 그래프가 되는 수열의 개수 (n <= 4이면 전부)."""
    _check_order(n)
    if n < 4:
        return _denominator(n)
    return planar_count_formula(n)


def planar_count_formula(n: int) -> int:
    """(3n² - 13n + 20) / 2, n >= 4에서 유효합니다 (항상 정수)."""
    return (3 * n * n - 13 * n + 20) // 2


def planar_count_by_cases(n: int) -> int:
    """1이 두 개 이하인 경우 + 1이 세 개이고 s_1 = 1 또는 (s_1, s_2) = (0, 1)인 경우."""
    _check_order(n)
    at_most_two = binom(n - 1, 0) + binom(n - 1, 1) + binom(n - 1, 2)
    three_early = binom(n - 2, 2) + binom(n - 3, 2)
    return at_most_two + three_early


def prob_planar(n: int) -> Fraction:
    return Fraction(planar_count(n), _denominator(n))


def dist_planar(n: int) -> ExactDistribution:
    count = planar_count(n)
    return ExactDistribution(
        order=n,
        counts={1: count, 0: _denominator(n) - count},
        invariant=Invariant.PLANAR.value,
    )


# matching


def matching_count(n: int, k: int) -> int:
    """ν = k인 수열의 개수."""
    if k < 0 or 2 * k > n:
        return 0
    if 2 * k < n:
        return binom(n, k)
    return binom(n - 1, (n - 1) // 2)


def matching_top_count_by_h(n: int) -> int:
    """짝수 n에서 P(ν = n/2) = P(h = 0)으로 얻은 C(n-1, ⌊n/2⌋)."""
    return binom(n - 1, n // 2)


def dist_matching(n: int) -> ExactDistribution:
    _check_order(n)
    counts = {k: matching_count(n, k) for k in range(n // 2 + 1)}
    return ExactDistribution(order=n, counts=counts, invariant=Invariant.MATCHING.value)


def perfect_matching_count(n: int) -> int:
    _check_order(n)
    if n % 2:
        return 0
    return h_count(n, 0)


def prob_perfect_matching(n: int) -> Fraction:
    return Fraction(perfect_matching_count(n), _denominator(n))


# longest cycle


def cycle_count(n: int, k: int) -> int:
    """ψ = k (3 <= k <= n)인 수열의 개수, C(n-1, ⌊k/2⌋) - C(k-2, ⌊k/2⌋)."""
    if k < 3 or k > n:
        return 0
    return binom(n - 1, k // 2) - binom(k - 2, k // 2)


def cycle_count_by_rightmost_one(n: int, k: int) -> int:
    """가장 오른쪽 1의 위치 j로 나누어 더한 같은 값, Σ C(j-1, j-⌊k/2⌋)."""
    if k < 3 or k > n:
        return 0
    return sum(binom(j - 1, j - k // 2) for j in range(k - 1, n))


def dist_longest_cycle(n: int) -> ExactDistribution:
    """ψ의 분포. 사이클이 없는 수열(1이 한 개 이하) n개는 값 0에 둡니다.

    Raises:
        OrderTooSmall: n < 3
    """
    if n < 3:
        raise OrderTooSmall(f"longest-cycle distribution needs n >= 3, got {n}")
    counts = {0: n}
    counts.update({k: cycle_count(n, k) for k in range(3, n + 1)})
    return ExactDistribution(order=n, counts=counts, invariant=Invariant.CYCLE.value)


def hamiltonian_count(n: int) -> int:
    """마지막 숫자가 1이고 나머지 앞부분의 h가 0인 수열의 개수."""
    _check_order(n)
    if n < 3:
        return 0
    return binom(n - 2, (n - 1) // 2)


def prob_hamiltonian(n: int) -> Fraction:
    return Fraction(hamiltonian_count(n), _denominator(n))


def dist_hamiltonian(n: int) -> ExactDistribution:
    count = hamiltonian_count(n)
    return ExactDistribution(
        order=n,
        counts={1: count, 0: _denominator(n) - count},
        invariant=Invariant.HAMILTONIAN.value,
    )


# degeneracy, clique, k-core


def dist_degeneracy(n: int) -> ExactDistribution:
    _check_order(n)
    counts = {d: binom(n - 1, d) for d in range(n)}
    return ExactDistribution(order=n, counts=counts, invariant=Invariant.DEGENERACY.value)


def dist_clique(n: int) -> ExactDistribution:
    _check_order(n)
    counts = {omega: binom(n - 1, omega - 1) for omega in range(1, n + 1)}
    return ExactDistribution(order=n, counts=counts, invariant=Invariant.CLIQUE.value)


def k_core_count(n: int, k: int, j: int) -> int:
    """|k-core| = j인 수열의 개수."""
    if j == 0:
        return sum(binom(n - 1, i) for i in range(k))
    if j <= k or j > n:
        return 0
    return (1 << (j - k - 1)) * binom(n + k - j - 1, k - 1)


def dist_k_core_size(n: int, k: int) -> ExactDistribution:
    """k-core 크기의 분포. 크기 1 ... k에는 질량이 없습니다.

    Raises:
        InvalidK: k가 1 <= k <= n-1을 벗어난 경우
    """
    _check_order(n)
    if not 1 <= k <= n - 1:
        raise InvalidK(f"k must satisfy 1 <= k <= n-1 = {n - 1}, got {k}")
    counts = {j: k_core_count(n, k, j) for j in [0, *range(k + 1, n + 1)]}
    return ExactDistribution(order=n, counts=counts, invariant=Invariant.KCORE.value, k=k)


_CLOSED_FORMS: Dict[Invariant, Callable[[int], ExactDistribution]] = {
    Invariant.H: dist_h,
    Invariant.MATCHING: dist_matching,
    Invariant.CYCLE: dist_longest_cycle,
    Invariant.DEGENERACY: dist_degeneracy,
    Invariant.PLANAR: dist_planar,
    Invariant.HAMILTONIAN: dist_hamiltonian,
    Invariant.CLIQUE: dist_clique,
}


def closed_form(invariant: Invariant, n: int, k: Optional[int] = None) -> ExactDistribution:
    """선택한 불변량의 닫힌 형식 분포."""
    if invariant is Invariant.KCORE:
        if k is None:
            raise UsageError("invariant 'kcore' requires k")
        return dist_k_core_size(n, k)
    return _CLOSED_FORMS[invariant](n)
