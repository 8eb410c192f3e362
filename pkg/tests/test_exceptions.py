"""사용자 정의 예외 테스트."""

import pytest
from pythresh.exceptions import (
    ConvergenceError,
    EdgeListFormatError,
    InsufficientSamples,
    InvalidCharacter,
    InvalidK,
    LengthCapExceeded,
    NotThreshold,
    OrderCapExceeded,
    OrderMismatch,
    OrderOutOfRange,
    OrderTooSmall,
    RecognitionDefect,
    SameVertex,
    TailTooLong,
    ThresholdError,
    UsageError,
    VertexOutOfRange,
)

ALL_ERRORS = [
    UsageError,
    InvalidCharacter,
    TailTooLong,
    LengthCapExceeded,
    SameVertex,
    VertexOutOfRange,
    EdgeListFormatError,
    NotThreshold,
    RecognitionDefect,
    OrderTooSmall,
    InvalidK,
    OrderCapExceeded,
    OrderOutOfRange,
    InsufficientSamples,
    OrderMismatch,
    ConvergenceError,
]


def test_threshold_error_is_exception():
    """ThresholdError는 Exception을 상속해야 합니다."""
    assert issubclass(ThresholdError, Exception)


@pytest.mark.parametrize("error", ALL_ERRORS)
def test_errors_inherit_base(error):
    """모든 사용자 정의 예외는 ThresholdError를 상속해야 합니다."""
    assert issubclass(error, ThresholdError)


def test_builtin_compatibility():
    """검증 오류는 ValueError로, 범위 오류는 IndexError로도 잡을 수 있어야 합니다."""
    assert issubclass(UsageError, ValueError)
    assert issubclass(InvalidK, ValueError)
    assert issubclass(VertexOutOfRange, IndexError)
    assert issubclass(RecognitionDefect, RuntimeError)
    assert not issubclass(NotThreshold, ValueError)


def test_invalid_character_message():
    """InvalidCharacter는 문자와 1부터 센 위치를 알려야 합니다."""
    exc = InvalidCharacter("102", 2)

    assert exc.position == 2
    assert str(exc) == "invalid character '2' at position 3 in '102'"


def test_exceptions_can_be_raised():
    """예외는 메시지와 함께 발생시킬 수 있어야 합니다."""
    with pytest.raises(ThresholdError, match="stuck"):
        raise NotThreshold("stuck")
