"""ExhaustiveEngine 테스트."""

import pytest

from pythresh.config import Settings
from pythresh.distributions import closed_form
from pythresh.exceptions import OrderCapExceeded, OrderTooSmall, UsageError
from pythresh.invariants import Invariant
from pythresh.lab import ThresholdLab


def _engine(workers=1):
    return ThresholdLab(Settings(workers=workers)).exhaustive


def test_exhaustive_h():
    """n = 3의 h 분포는 직접 열거와 같아야 합니다."""
    dist = _engine().exhaustive_distribution(3, Invariant.H)

    assert dist.counts == {0: 2, 1: 1, 2: 1}
    assert dist.invariant == "h"


def test_exhaustive_accepts_names():
    """불변량 이름 문자열(별칭 포함)을 받아야 합니다."""
    assert _engine().exhaustive_distribution(4, "nu").counts == {0: 1, 1: 4, 2: 3}


@pytest.mark.parametrize("invariant", list(Invariant))
def test_exhaustive_single_vertex(invariant):
    """n = 1이면 분모 1 위의 값 하나여야 합니다."""
    k = 1 if invariant.requires_k else None

    dist = _engine().exhaustive_distribution(1, invariant, k)

    assert dist.denominator == 1
    assert dist.total == 1
    assert len(dist.counts) == 1


def test_exhaustive_order_cap():
    """상한을 넘는 n은 OrderCapExceeded를 발생시켜야 합니다."""
    with pytest.raises(OrderCapExceeded):
        _engine().exhaustive_distribution(22, Invariant.H)


def test_exhaustive_order_too_small():
    """n < 1은 OrderTooSmall을 발생시켜야 합니다."""
    with pytest.raises(OrderTooSmall):
        _engine().exhaustive_distribution(0, Invariant.H)


def test_exhaustive_kcore_requires_k():
    """kcore에 k가 없으면 UsageError를 발생시켜야 합니다."""
    with pytest.raises(UsageError):
        _engine().exhaustive_distribution(4, Invariant.KCORE)


@pytest.mark.parametrize("n", range(2, 13))
def test_closed_forms_reproduced_by_enumeration(n):
    """2 <= n <= 12에서 모든 닫힌 형식이 전수 열거와 정확히 같아야 합니다."""
    engine = _engine()
    for invariant in Invariant:
        if invariant is Invariant.CYCLE and n < 3:
            continue
        ks = [k for k in (1, 2, 3) if k <= n - 1] if invariant.requires_k else [None]
        for k in ks:
            assert engine.exhaustive_distribution(n, invariant, k) == closed_form(invariant, n, k)


def test_parallel_matches_serial():
    """병렬 실행과 직렬 실행의 집계가 같아야 합니다."""
    serial = _engine(workers=1).exhaustive_distribution(11, Invariant.CYCLE)
    parallel = _engine(workers=3).exhaustive_distribution(11, Invariant.CYCLE)

    assert serial == parallel


def test_find_witness():
    """find_witness는 값을 갖는 사전 순 첫 수열을 돌려주어야 합니다."""
    engine = _engine()

    assert str(engine.find_witness(4, Invariant.MATCHING, 1)) == "001"
    assert engine.find_witness(4, Invariant.MATCHING, 3) is None
