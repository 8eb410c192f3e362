"""pythresh 라이브러리를 위한 사용자 정의 예외."""


class ThresholdError(Exception):
    """pythresh 라이브러리의 기본 예외 클래스."""

    pass


class UsageError(ThresholdError, ValueError):
    """잘못된 인자 또는 설정 조합 (CLI 종료 코드 1)."""

    pass


class InvalidCharacter(ThresholdError, ValueError):
    """생성 수열 텍스트에 0/1 이외의 문자가 포함된 경우."""

    def __init__(self, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(
            f"invalid character {text[position]!r} at position {position + 1} in {text!r}"
        )


class TailTooLong(ThresholdError, ValueError):
    """꼬리 길이 k가 수열 길이보다 긴 경우."""

    pass


class LengthCapExceeded(ThresholdError, ValueError):
    """열거할 수열 길이가 설정된 상한을 넘는 경우."""

    pass


class SameVertex(ThresholdError, ValueError):
    """인접성 질의에 같은 정점이 두 번 주어진 경우."""

    pass


class VertexOutOfRange(ThresholdError, IndexError):
    """정점 번호가 그래프 위수 범위를 벗어난 경우."""

    pass


class EdgeListFormatError(ThresholdError, ValueError):
    """간선 목록 텍스트 형식 오류."""

    pass


class NotThreshold(ThresholdError):
    """고립 정점도 지배 정점도 없는 단계가 있어 임계 그래프가 아닌 경우 (종료 코드 2)."""

    pass


class RecognitionDefect(ThresholdError, RuntimeError):
    """가중치로 만든 그래프의 인식 실패. 발생하면 안 되는 내부 결함입니다."""

    pass


class OrderTooSmall(ThresholdError, ValueError):
    """분포가 정의되지 않는 작은 위수 (예: 최장 사이클의 n < 3)."""

    pass


class InvalidK(ThresholdError, ValueError):
    """k-core 분포의 k가 1 <= k <= n-1 범위를 벗어난 경우."""

    pass


class OrderCapExceeded(ThresholdError, ValueError):
    """전수 탐색 또는 오라클의 위수 상한 초과."""

    pass


class OrderOutOfRange(ThresholdError, ValueError):
    """균일성 검정이 허용하는 위수 범위를 벗어난 경우."""

    pass


class InsufficientSamples(ThresholdError, ValueError):
    """셀당 기대 빈도가 최소값에 못 미치는 표본 수."""

    pass


class OrderMismatch(ThresholdError, ValueError):
    """서로 다른 위수의 분포를 비교하려는 경우."""

    pass


class ConvergenceError(ThresholdError, ArithmeticError):
    """특수 함수의 급수/연분수가 반복 한도 안에 수렴하지 않은 경우."""

    pass
