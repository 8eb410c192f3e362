"""임계 그래프, 간선 목록 그래프, 가중치 모델."""

from dataclasses import dataclass, field
from enum import Enum
from typing import FrozenSet, Iterable, Iterator, List, Sequence, Tuple

import numpy as np

from pythresh.exceptions import (
    EdgeListFormatError,
    NotThreshold,
    RecognitionDefect,
    SameVertex,
    VertexOutOfRange,
)
from pythresh.models.base import BaseModel
from pythresh.models.sequence import CreationSequence, is_subsequence

Edge = Tuple[int, int]

THRESHOLD = 1.0

# longest digit row packed into an int64 code
INT64_DIGITS = 62


class VertexRole(str, Enum):
    """생성 수열에서 정점의 분류."""

    BASE = "base"
    ZERO = "zero"
    ONE = "one"


@dataclass(frozen=True)
class EdgeListGraph(BaseModel):
    """정점 0 ... order-1 위의 단순 무향 그래프.

    간선은 (u, v), u < v 형태로 정규화해서 보관합니다.
    """

    order: int
    edges: FrozenSet[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.order < 0:
            raise EdgeListFormatError(f"order must be >= 0, got {self.order}")
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise EdgeListFormatError(f"self-loop at vertex {u}")
            if not (0 <= u < self.order and 0 <= v < self.order):
                raise EdgeListFormatError(f"edge ({u}, {v}) outside 0..{self.order - 1}")
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Edge]) -> "EdgeListGraph":
        """간선 목록으로 그래프를 만듭니다. 중복 간선은 오류입니다."""
        seen = set()
        for u, v in edges:
            key = (min(u, v), max(u, v))
            if key in seen:
                raise EdgeListFormatError(f"duplicate edge {key}")
            seen.add(key)
        return cls(order=order, edges=frozenset(seen))

    @classmethod
    def complete(cls, order: int) -> "EdgeListGraph":
        return cls(
            order=order,
            edges=frozenset((u, v) for u in range(order) for v in range(u + 1, order)),
        )

    @classmethod
    def cycle(cls, order: int) -> "EdgeListGraph":
        return cls(order=order, edges=frozenset((i, (i + 1) % order) for i in range(order)))

    @classmethod
    def path(cls, order: int) -> "EdgeListGraph":
        return cls(order=order, edges=frozenset((i, i + 1) for i in range(order - 1)))

    @classmethod
    def from_text(cls, text: str) -> "EdgeListGraph":
        """간선 목록 텍스트를 읽습니다.

        첫 줄은 정점 수 n, 이후 한 줄에 간선 하나("u v", 0부터 시작)입니다.

        Raises:
            EdgeListFormatError: 형식이 잘못된 경우
        """
        lines = [line.strip() for line in text.splitlines()]
        lines = [line for line in lines if line]
        if not lines:
            raise EdgeListFormatError("empty edge list: expected the vertex count on the first line")
        try:
            order = int(lines[0])
        except ValueError:
            raise EdgeListFormatError(f"invalid vertex count {lines[0]!r}")

        edges = []
        for number, line in enumerate(lines[1:], start=2):
            parts = line.split()
            if len(parts) != 2:
                raise EdgeListFormatError(f"line {number}: expected 'u v', got {line!r}")
            try:
                edges.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise EdgeListFormatError(f"line {number}: vertex ids must be integers")
        return cls.from_edges(order, edges)

    def to_text(self) -> str:
        """간선을 사전 순으로 정렬해 텍스트로 씁니다."""
        lines = [str(self.order)]
        lines.extend(f"{u} {v}" for u, v in sorted(self.edges))
        return "\n".join(lines) + "\n"

    def to_dict(self):
        return {"order": self.order, "edges": [list(e) for e in sorted(self.edges)]}

    @classmethod
    def from_dict(cls, data) -> "EdgeListGraph":
        return cls.from_edges(data["order"], (tuple(e) for e in data.get("edges", [])))

    def adjacency_masks(self) -> List[int]:
        """정점별 이웃 비트마스크."""
        masks = [0] * self.order
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return masks

    def degrees(self) -> List[int]:
        result = [0] * self.order
        for u, v in self.edges:
            result[u] += 1
            result[v] += 1
        return result

    def induced(self, vertices: Sequence[int]) -> "EdgeListGraph":
        """주어진 정점들이 유도하는 부분그래프 (정점은 주어진 순서대로 다시 번호를 붙입니다)."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = frozenset(
            (min(index[u], index[v]), max(index[u], index[v]))
            for u, v in self.edges
            if u in index and v in index
        )
        return EdgeListGraph(order=len(vertices), edges=edges)


@dataclass(frozen=True)
class ThresholdGraph(BaseModel):
    """생성 수열 s를 실현한 그래프 γ(s).

    정점 번호는 생성 순서입니다 (0 = 기준 정점). u < v일 때 두 정점은
    s_v = 1인 경우에만 인접합니다.
    """

    sequence: CreationSequence

    @property
    def order(self) -> int:
        return self.sequence.order

    def vertices(self) -> range:
        return range(self.order)

    def _check(self, v: int) -> None:
        if not 0 <= v < self.order:
            raise VertexOutOfRange(f"vertex {v} outside 0..{self.order - 1}")

    def role(self, v: int) -> VertexRole:
        self._check(v)
        if v == 0:
            return VertexRole.BASE
        return VertexRole.ONE if self.sequence.digit(v) else VertexRole.ZERO

    def adjacent(self, u: int, v: int) -> bool:
        return adjacent(self, u, v)

    def degree(self, v: int) -> int:
        return degree(self, v)

    def degrees(self) -> List[int]:
        return [degree(self, v) for v in self.vertices()]

    def neighbors(self, v: int) -> List[int]:
        self._check(v)
        return [u for u in self.vertices() if u != v and self.adjacent(u, v)]

    def edges(self) -> Iterator[Edge]:
        """모든 간선 (u, v), u < v를 명시적으로 나열합니다."""
        for v in range(1, self.order):
            if self.sequence.digit(v):
                for u in range(v):
                    yield (u, v)

    def edge_count(self) -> int:
        return edge_count(self.sequence)

    def to_edge_list(self) -> EdgeListGraph:
        return EdgeListGraph(order=self.order, edges=frozenset(self.edges()))

    def to_dict(self):
        return {"sequence": str(self.sequence), "order": self.order}


@dataclass(frozen=True)
class WeightAssignment(BaseModel):
    """정점 가중치 w(v) ∈ [0, 1]과 임계값 t = 1."""

    weights: Tuple[float, ...]
    threshold: float = THRESHOLD

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(float(w) for w in self.weights))
        if self.threshold != THRESHOLD:
            raise ValueError(f"only the threshold t = {THRESHOLD} is supported, got {self.threshold}")
        if any(not 0.0 <= w <= 1.0 for w in self.weights):
            raise ValueError("weights must lie in [0, 1]")

    @property
    def order(self) -> int:
        return len(self.weights)

    def to_edge_list(self) -> EdgeListGraph:
        """w(u) + w(v) > t 인 쌍을 간선으로 하는 그래프 (같으면 간선 아님)."""
        w = self.weights
        edges = frozenset(
            (u, v)
            for u in range(len(w))
            for v in range(u + 1, len(w))
            if w[u] + w[v] > self.threshold
        )
        return EdgeListGraph(order=len(w), edges=edges)


def build_graph(s: CreationSequence) -> ThresholdGraph:
    """생성 수열을 그래프로 실현합니다 (γ)."""
    return ThresholdGraph(sequence=s)


def adjacent(g: ThresholdGraph, u: int, v: int) -> bool:
    """번호가 큰 쪽 정점이 1-정점이면 인접합니다.

    Raises:
        SameVertex: u == v인 경우
        VertexOutOfRange: 범위 밖 정점
    """
    g._check(u)
    g._check(v)
    if u == v:
        raise SameVertex(f"adjacency of vertex {u} with itself is undefined")
    return g.sequence.digit(max(u, v)) == 1


def degree(g: ThresholdGraph, v: int) -> int:
    """정점 차수.

    기준 정점은 1의 총 개수, i번 0-정점은 i 뒤쪽 1의 개수,
    i번 1-정점은 i + (i 뒤쪽 1의 개수)입니다.
    """
    g._check(v)
    s = g.sequence
    later_ones = s.tail_counts(s.length - v).ones
    if v == 0:
        return later_ones
    return later_ones + (v if s.digit(v) else 0)


def edge_count(s: CreationSequence) -> int:
    """간선 수: 각 1-정점 i가 앞의 i개 정점 모두와 인접합니다."""
    return sum(i for i in range(1, s.length + 1) if s.digit(i))


def recognize(g: EdgeListGraph) -> CreationSequence:
    """지배/고립 정점을 차례로 떼어 내 생성 수열을 복원합니다.

    같은 단계에 둘 다 있으면 지배 정점을, 그중에서는 번호가 가장 작은
    정점을 뗍니다. 기록한 숫자를 뒤집으면 seq(G)입니다.

    Raises:
        NotThreshold: 고립 정점도 지배 정점도 없는 단계가 있는 경우
    """
    if g.order < 1:
        raise EdgeListFormatError("cannot recognize a graph with no vertices")

    masks = g.adjacency_masks()
    remaining = (1 << g.order) - 1
    left = g.order
    peeled = []

    while left > 1:
        choice = None
        digit = None
        isolated = None
        for v in range(g.order):
            if not remaining >> v & 1:
                continue
            deg = bin(masks[v] & remaining).count("1")
            if deg == left - 1:
                choice, digit = v, 1
                break
            if deg == 0 and isolated is None:
                isolated = v
        if choice is None and isolated is not None:
            choice, digit = isolated, 0
        if choice is None:
            raise NotThreshold(
                f"no isolated or dominating vertex among {left} remaining vertices"
            )
        peeled.append(digit)
        remaining &= ~(1 << choice)
        left -= 1

    return CreationSequence.from_digits(reversed(peeled))


def recognize_batch(adjacency: np.ndarray) -> np.ndarray:
    """여러 그래프의 인접 행렬 (B, n, n)을 한 번에 떼어 내 수열 code 배열을 돌려줍니다.

    ``recognize``와 같은 규칙(지배 정점 우선, 가장 작은 번호)을 씁니다.

    Raises:
        NotThreshold: 어느 한 그래프라도 떼어 낼 수 없는 경우
    """
    batch, n, _ = adjacency.shape
    m = n - 1
    if m <= 0:
        return np.zeros(batch, dtype=np.int64)

    digits = np.zeros((batch, m), dtype=np.int8)
    remaining = np.ones((batch, n), dtype=bool)
    rows = np.arange(batch)
    for step in range(m):
        left = n - step
        deg = (adjacency & remaining[:, None, :]).sum(axis=2)
        dominating = remaining & (deg == left - 1)
        isolated = remaining & (deg == 0)
        has_dom = dominating.any(axis=1)
        has_iso = isolated.any(axis=1)
        stuck = ~(has_dom | has_iso)
        if stuck.any():
            raise NotThreshold(
                f"{int(stuck.sum())} graph(s) have no isolated or dominating vertex"
            )
        choice = np.where(has_dom, dominating.argmax(axis=1), isolated.argmax(axis=1))
        remaining[rows, choice] = False
        # the first vertex peeled carries the last digit
        digits[:, m - 1 - step] = has_dom
    return pack_codes(digits)


def pack_codes(digits: np.ndarray) -> np.ndarray:
    """숫자 행렬 (B, m)의 각 행을 수열 code로 묶습니다 (첫 열이 최상위 비트).

    m이 ``INT64_DIGITS`` 이하면 int64 배열, 그보다 길면 Python 정수를 담은
    object 배열을 돌려줍니다.
    """
    batch, m = digits.shape
    if m == 0:
        return np.zeros(batch, dtype=np.int64)
    if m <= INT64_DIGITS:
        place = np.int64(1) << np.arange(m - 1, -1, -1, dtype=np.int64)
        return digits.astype(np.int64) @ place
    place = np.array([1 << (m - 1 - i) for i in range(m)], dtype=object)
    return digits.astype(object).dot(place)


def sample_weights(n: int, rng: np.random.Generator) -> WeightAssignment:
    """n개의 가중치를 [0, 1]에서 독립·균등하게 뽑습니다."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return WeightAssignment(weights=tuple(rng.random(n).tolist()))


def weight_adjacency(weights: np.ndarray) -> np.ndarray:
    """가중치 배열 (B, n)에서 인접 행렬 (B, n, n)을 만듭니다 (합이 1을 넘으면 간선)."""
    adjacency = (weights[:, :, None] + weights[:, None, :]) > THRESHOLD
    n = weights.shape[1]
    adjacency[:, np.arange(n), np.arange(n)] = False
    return adjacency


def weights_to_graph(w: WeightAssignment) -> ThresholdGraph:
    """가중치가 유도하는 그래프를 인식해 임계 그래프로 돌려줍니다.

    Raises:
        RecognitionDefect: 인식에 실패한 경우 (가중치 그래프에서는 불가능)
    """
    try:
        s = recognize(w.to_edge_list())
    except NotThreshold as exc:
        raise RecognitionDefect(f"weight-induced graph failed recognition: {exc}") from exc
    return build_graph(s)


def is_induced_subgraph(g: ThresholdGraph, h: ThresholdGraph) -> bool:
    """seq(G)가 seq(H)의 부분수열이면 G는 H의 유도 부분그래프입니다."""
    return is_subsequence(g.sequence, h.sequence)
