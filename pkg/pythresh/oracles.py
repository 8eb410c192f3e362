"""정의 수준의 전수 탐색 오라클.

닫힌 형식 불변량을 작은 그래프에서 독립적으로 검증하기 위한 것으로,
임의의 EdgeListGraph에서 동작하며 속도보다 명백함을 우선합니다.
"""

from itertools import combinations, permutations
from typing import Dict, FrozenSet, Iterator, List, Sequence, Tuple

from pythresh.config import DEFAULT_SETTINGS
from pythresh.exceptions import OrderCapExceeded
from pythresh.models.graph import EdgeListGraph


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_cap(g: EdgeListGraph, cap: int, name: str) -> None:
    if g.order > cap:
        raise OrderCapExceeded(f"{name} oracle supports order <= {cap}, got {g.order}")


def oracle_max_matching(g: EdgeListGraph, cap: int = DEFAULT_SETTINGS.matching_oracle_cap) -> int:
    """서로 끝점을 공유하지 않는 간선 집합의 최대 크기 (되추적)."""
    _check_cap(g, cap, "matching")
    masks = g.adjacency_masks()
    memo: Dict[int, int] = {}

    def best(free: int) -> int:
        if free in memo:
            return memo[free]
        # lowest free vertex that still has a free neighbour
        for v in _bits(free):
            if masks[v] & free:
                break
        else:
            memo[free] = 0
            return 0
        rest = free & ~(1 << v)
        result = best(rest)
        for u in _bits(masks[v] & rest):
            result = max(result, 1 + best(rest & ~(1 << u)))
        memo[free] = result
        return result

    return best((1 << g.order) - 1)


def oracle_k_core(g: EdgeListGraph, k: int) -> FrozenSet[int]:
    """차수가 k 미만인 정점을 더 지울 것이 없을 때까지 반복해서 지웁니다."""
    masks = g.adjacency_masks()
    alive = (1 << g.order) - 1
    changed = True
    while changed:
        changed = False
        for v in list(_bits(alive)):
            if _popcount(masks[v] & alive) < k:
                alive &= ~(1 << v)
                changed = True
    return frozenset(_bits(alive))


def oracle_longest_cycle(g: EdgeListGraph, cap: int = DEFAULT_SETTINGS.cycle_oracle_cap) -> int:
    """가장 긴 단순 사이클의 길이 (없으면 0).

    사이클의 가장 작은 정점을 시작점으로 고정하고, 더 큰 정점들만 지나는
    경로를 깊이 우선으로 모두 펼칩니다. 같은 (방문 집합, 끝 정점) 상태는
    한 번만 펼칩니다. 사이클은 2-core 안에만 있으므로 그 밖은 보지 않습니다.
    """
    _check_cap(g, cap, "longest-cycle")
    masks = g.adjacency_masks()
    core = 0
    for v in oracle_k_core(g, 2):
        core |= 1 << v
    best = 0

    for start in _bits(core):
        allowed = core & ~((1 << (start + 1)) - 1)
        if _popcount(allowed) + 1 <= best:
            break
        seen = set()
        stack: List[Tuple[int, int]] = [(start, 1 << start)]
        while stack:
            v, visited = stack.pop()
            length = _popcount(visited)
            if length >= 3 and masks[v] >> start & 1 and length > best:
                best = length
                if best == _popcount(core):
                    return best
            for u in _bits(masks[v] & allowed & ~visited):
                state = (visited | 1 << u, u)
                if state not in seen:
                    seen.add(state)
                    stack.append((u, visited | 1 << u))
    return best


def oracle_is_hamiltonian(g: EdgeListGraph, cap: int = DEFAULT_SETTINGS.cycle_oracle_cap) -> bool:
    """모든 정점을 지나는 단순 사이클이 있는지 (n < 3이면 False)."""
    return g.order >= 3 and oracle_longest_cycle(g, cap) == g.order


def oracle_clique_number(g: EdgeListGraph, cap: int = DEFAULT_SETTINGS.clique_oracle_cap) -> int:
    """서로 모두 인접한 정점 집합의 최대 크기 (분기 한정)."""
    _check_cap(g, cap, "clique")
    masks = g.adjacency_masks()
    best = 0

    def expand(candidates: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while candidates:
            if size + _popcount(candidates) <= best:
                return
            low = candidates & -candidates
            v = low.bit_length() - 1
            expand(candidates & masks[v], size + 1)
            candidates ^= low

    expand((1 << g.order) - 1, 0)
    return best


def _paths(masks: Sequence[int], a: int, b: int, avoid: int) -> List[int]:
    """a에서 b까지 ``avoid``를 지나지 않는 단순 경로들의 내부 정점 집합 (짧은 것부터)."""
    found = set()
    stack = [(a, 0)]
    while stack:
        v, inner = stack.pop()
        if masks[v] >> b & 1:
            found.add(inner)
        for u in _bits(masks[v] & ~avoid & ~inner & ~(1 << a) & ~(1 << b)):
            stack.append((u, inner | 1 << u))
    return sorted(found, key=lambda mask: (_popcount(mask), mask))


def _connect(masks: Sequence[int], pairs: Sequence[Tuple[int, int]], branch: int, used: int) -> bool:
    if not pairs:
        return True
    a, b = pairs[0]
    for inner in _paths(masks, a, b, branch | used):
        if _connect(masks, pairs[1:], branch, used | inner):
            return True
    return False


def _has_k5_subdivision(masks: Sequence[int], ranked: Sequence[int], degrees: Sequence[int]) -> bool:
    candidates = [v for v in ranked if degrees[v] >= 4]
    for branch in combinations(candidates, 5):
        mask = sum(1 << v for v in branch)
        if _connect(masks, list(combinations(branch, 2)), mask, 0):
            return True
    return False


def _has_k33_subdivision(masks: Sequence[int], ranked: Sequence[int], degrees: Sequence[int]) -> bool:
    candidates = [v for v in ranked if degrees[v] >= 3]
    for left in combinations(candidates, 3):
        others = [v for v in candidates if v not in left]
        for right in combinations(others, 3):
            # each split is tried once
            if min(right) < min(left):
                continue
            mask = sum(1 << v for v in left + right)
            pairs = [(a, b) for a in left for b in right]
            if _connect(masks, pairs, mask, 0):
                return True
    return False


def oracle_is_planar(g: EdgeListGraph, cap: int = DEFAULT_SETTINGS.planar_oracle_cap) -> bool:
    """K5 또는 K3,3의 세분(subdivision)을 부분그래프로 직접 찾습니다.

    간선이 8개 이하이면 두 세분 모두 불가능하므로 (K3,3은 9개, K5는 10개) 바로 참입니다.
    """
    _check_cap(g, cap, "planarity")
    if len(g.edges) <= 8:
        return True
    masks = g.adjacency_masks()
    degrees = g.degrees()
    ranked = sorted(range(g.order), key=lambda v: (-degrees[v], v))
    if _has_k5_subdivision(masks, ranked, degrees):
        return False
    return not _has_k33_subdivision(masks, ranked, degrees)


def oracle_degeneracy(g: EdgeListGraph) -> int:
    """최소 차수 정점을 차례로 지우며 지울 때 차수의 최대값을 추적합니다."""
    masks = g.adjacency_masks()
    alive = (1 << g.order) - 1
    result = 0
    while alive:
        v = min(_bits(alive), key=lambda u: (_popcount(masks[u] & alive), u))
        result = max(result, _popcount(masks[v] & alive))
        alive &= ~(1 << v)
    return result


def oracle_degeneracy_by_subsets(
    g: EdgeListGraph, cap: int = DEFAULT_SETTINGS.induced_oracle_cap
) -> int:
    """모든 유도 부분그래프에 대한 최소 차수의 최대값 (정의 그대로)."""
    _check_cap(g, cap, "subset degeneracy")
    masks = g.adjacency_masks()
    result = 0
    for subset in range(1, 1 << g.order):
        low = min(_popcount(masks[v] & subset) for v in _bits(subset))
        result = max(result, low)
    return result


def _signature(g: EdgeListGraph) -> Tuple[int, Tuple[int, ...]]:
    return len(g.edges), tuple(sorted(g.degrees()))


def _isomorphic(a: EdgeListGraph, b: EdgeListGraph) -> bool:
    if a.order != b.order or _signature(a) != _signature(b):
        return False
    for perm in permutations(range(a.order)):
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in b.edges for u, v in a.edges):
            return True
    return False


def oracle_is_induced_subgraph(
    small: EdgeListGraph,
    big: EdgeListGraph,
    cap: int = DEFAULT_SETTINGS.induced_oracle_cap,
) -> bool:
    """``big``의 어떤 정점 부분집합이 ``small``과 동형인 그래프를 유도하는지 (비표지 의미)."""
    _check_cap(small, cap, "induced-subgraph")
    _check_cap(big, cap, "induced-subgraph")
    if small.order > big.order:
        return False
    for subset in combinations(range(big.order), small.order):
        if _isomorphic(small, big.induced(subset)):
            return True
    return False
