"""생성 수열(creation sequence) 모델과 꼬리 통계."""

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Tuple

from pythresh.exceptions import InvalidCharacter, LengthCapExceeded, TailTooLong
from pythresh.models.base import BaseModel


def _popcount(value: int) -> int:
    return bin(value).count("1")


@dataclass(frozen=True)
class TailCounts(BaseModel):
    """k번째 꼬리(마지막 k개 숫자)의 0과 1 개수."""

    zeros: int
    ones: int
    k: int


@dataclass(frozen=True)
class CreationSequence(BaseModel):
    """이진 생성 수열 s_1 ... s_m.

    숫자는 ``code`` 정수의 비트로 저장합니다. s_1이 최상위 비트이므로
    같은 길이의 수열은 사전 순서와 정수 순서가 일치합니다. 길이를 따로
    두어 빈 수열과 앞쪽 0을 구분합니다. 이 수열이 나타내는 그래프의
    위수는 ``length + 1`` 입니다.
    """

    code: int
    length: int

    def __post_init__(self):
        if self.length < 0:
            raise ValueError(f"length must be >= 0, got {self.length}")
        if not 0 <= self.code < (1 << self.length):
            raise ValueError(f"code {self.code} does not fit in {self.length} digits")

    @classmethod
    def from_digits(cls, digits: Iterable[int]) -> "CreationSequence":
        """0/1 숫자 목록에서 수열을 만듭니다."""
        code = 0
        length = 0
        for digit in digits:
            if digit not in (0, 1):
                raise ValueError(f"digit must be 0 or 1, got {digit!r}")
            code = (code << 1) | digit
            length += 1
        return cls(code=code, length=length)

    @property
    def order(self) -> int:
        """이 수열이 나타내는 그래프의 정점 수 n = m + 1."""
        return self.length + 1

    @property
    def digits(self) -> Tuple[int, ...]:
        """왼쪽에서 오른쪽 순서의 숫자 튜플."""
        return tuple(self.digit(i) for i in range(1, self.length + 1))

    @property
    def ones(self) -> int:
        return _popcount(self.code)

    @property
    def zeros(self) -> int:
        return self.length - self.ones

    def digit(self, index: int) -> int:
        """1부터 시작하는 위치 ``index``의 숫자 s_index."""
        if not 1 <= index <= self.length:
            raise IndexError(f"digit index {index} outside 1..{self.length}")
        return (self.code >> (self.length - index)) & 1

    def prefix(self, size: int) -> "CreationSequence":
        """앞쪽 ``size``개 숫자 s_1 ... s_size."""
        size = max(0, min(size, self.length))
        return CreationSequence(code=self.code >> (self.length - size), length=size)

    def append(self, digit: int) -> "CreationSequence":
        return CreationSequence(code=(self.code << 1) | digit, length=self.length + 1)

    def tail_counts(self, k: int) -> TailCounts:
        return tail_counts(self, k)

    def h(self) -> int:
        return h(self)

    def r(self) -> int:
        return r(self)

    def is_subsequence_of(self, other: "CreationSequence") -> bool:
        return is_subsequence(self, other)

    def to_dict(self):
        return {"sequence": str(self), "n": self.order}

    @classmethod
    def from_dict(cls, data) -> "CreationSequence":
        return parse_sequence(data.get("sequence", ""))

    def __len__(self) -> int:
        return self.length

    def __iter__(self) -> Iterator[int]:
        return iter(self.digits)

    def __str__(self) -> str:
        if self.length == 0:
            return ""
        return format(self.code, f"0{self.length}b")


EMPTY = CreationSequence(code=0, length=0)


def parse_sequence(text: str) -> CreationSequence:
    """0/1 문자열을 생성 수열로 변환합니다.

    Args:
        text: '0'과 '1'로만 이루어진 문자열 (빈 문자열 허용)

    Returns:
        CreationSequence: i번째 문자가 s_i인 수열

    Raises:
        InvalidCharacter: 그 밖의 문자가 있는 경우
    """
    for position, char in enumerate(text):
        if char not in "01":
            raise InvalidCharacter(text, position)
    if not text:
        return EMPTY
    return CreationSequence(code=int(text, 2), length=len(text))


def tail_counts(s: CreationSequence, k: int) -> TailCounts:
    """마지막 k개 숫자의 0/1 개수 (z_k, u_k).

    Raises:
        TailTooLong: k가 수열 길이보다 긴 경우
    """
    if k < 0 or k > s.length:
        raise TailTooLong(f"tail length {k} outside 0..{s.length} for {str(s)!r}")
    ones = _popcount(s.code & ((1 << k) - 1))
    return TailCounts(zeros=k - ones, ones=ones, k=k)


def h(s: CreationSequence) -> int:
    """모든 꼬리에서 0의 개수가 1의 개수를 넘는 최대치.

    오른쪽에서 왼쪽으로 한 번 훑으며 z - u의 누적값 최대를 추적합니다.
    """
    running = 0
    best = 0
    code = s.code
    for _ in range(s.length):
        running += -1 if code & 1 else 1
        if running > best:
            best = running
        code >>= 1
    return best


def h_by_definition(s: CreationSequence) -> int:
    """정의대로 0 <= k <= |s|의 모든 꼬리에 대해 z_k - u_k의 최대를 구합니다."""
    return max(c.zeros - c.ones for c in (tail_counts(s, k) for k in range(s.length + 1)))


def r(s: CreationSequence) -> int:
    """가장 오른쪽 1의 위치 (1이 없으면 0)."""
    if s.code == 0:
        return 0
    lowest = (s.code & -s.code).bit_length() - 1
    return s.length - lowest


def is_subsequence(a: CreationSequence, b: CreationSequence) -> bool:
    """``a``가 ``b``의 부분수열인지 (왼쪽부터 탐욕적으로 맞춥니다)."""
    if a.length > b.length:
        return False
    i = 1
    for j in range(1, b.length + 1):
        if i > a.length:
            break
        if a.digit(i) == b.digit(j):
            i += 1
    return i > a.length


def enumerate_sequences(
    m: int,
    start: int = 0,
    stop: Optional[int] = None,
    max_length: int = 30,
) -> Iterator[CreationSequence]:
    """길이 m인 모든 수열을 사전 순으로 생성합니다.

    ``start``/``stop``은 code 값의 반열린 구간으로, 작업자별 분할에 씁니다.

    Raises:
        LengthCapExceeded: m이 max_length를 넘는 경우
    """
    if m < 0:
        raise ValueError(f"length must be >= 0, got {m}")
    if m > max_length:
        raise LengthCapExceeded(f"sequence length {m} exceeds cap {max_length}")
    total = 1 << m
    stop = total if stop is None else min(stop, total)
    for code in range(max(0, start), stop):
        yield CreationSequence(code=code, length=m)
