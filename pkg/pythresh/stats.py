"""카이제곱 적합도 검정과 정규화 불완전 감마 함수."""

import math
from typing import Dict, Mapping, Tuple

import numpy as np

from pythresh.exceptions import ConvergenceError

_EPS = 1e-15
_FPMIN = 1e-300
_MAX_ITER = 10000


def _log_prefactor(a: float, x: float) -> float:
    return -x + a * math.log(x) - math.lgamma(a)


def _lower_series(a: float, x: float) -> float:
    # P(a, x) by power series, for x < a + 1
    ap = a
    term = total = 1.0 / a
    for _ in range(_MAX_ITER):
        ap += 1.0
        term *= x / ap
        total += term
        if abs(term) < abs(total) * _EPS:
            return total * math.exp(_log_prefactor(a, x))
    raise ConvergenceError(f"incomplete gamma series did not converge (a={a}, x={x})")


def _upper_fraction(a: float, x: float) -> float:
    # Q(a, x) by modified Lentz continued fraction, for x >= a + 1
    b = x + 1.0 - a
    c = 1.0 / _FPMIN
    d = 1.0 / b
    result = d
    for i in range(1, _MAX_ITER):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = b + an / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        delta = d * c
        result *= delta
        if abs(delta - 1.0) < _EPS:
            return math.exp(_log_prefactor(a, x)) * result
    raise ConvergenceError(f"incomplete gamma fraction did not converge (a={a}, x={x})")


def gammainc_lower(a: float, x: float) -> float:
    """정규화 하부 불완전 감마 P(a, x)."""
    if a <= 0 or x < 0:
        raise ValueError(f"gammainc requires a > 0 and x >= 0, got a={a}, x={x}")
    if x == 0:
        return 0.0
    if math.isinf(x):
        return 1.0
    if x < a + 1.0:
        return min(1.0, _lower_series(a, x))
    return max(0.0, 1.0 - _upper_fraction(a, x))


def gammainc_upper(a: float, x: float) -> float:
    """정규화 상부 불완전 감마 Q(a, x) = 1 - P(a, x)."""
    if a <= 0 or x < 0:
        raise ValueError(f"gammaincc requires a > 0 and x >= 0, got a={a}, x={x}")
    if x == 0:
        return 1.0
    if math.isinf(x):
        return 0.0
    if x < a + 1.0:
        return max(0.0, 1.0 - _lower_series(a, x))
    return min(1.0, _upper_fraction(a, x))


def chi2_cdf(x: float, df: int) -> float:
    if x <= 0:
        return 0.0
    return gammainc_lower(df / 2.0, x / 2.0)


def chi2_sf(x: float, df: int) -> float:
    """카이제곱 분포의 위쪽 꼬리 확률 (p-value)."""
    if x <= 0:
        return 1.0
    return gammainc_upper(df / 2.0, x / 2.0)


def chi_square_statistic(observed: np.ndarray, expected: np.ndarray) -> float:
    observed = np.asarray(observed, dtype=float)
    expected = np.asarray(expected, dtype=float)
    return float(np.sum((observed - expected) ** 2 / expected))


def merged_chi_square(
    observed: Mapping[int, float],
    expected: Mapping[int, float],
    threshold: float = 5.0,
) -> Tuple[float, int, int]:
    """기대 빈도가 ``threshold`` 미만인 셀을 나머지 셀 하나로 합쳐 카이제곱을 계산합니다.

    나머지 셀도 ``threshold`` 미만이면 기대 빈도가 가장 작은 정규 셀에
    합칩니다. 기대 빈도 0인 셀에 관측이 있으면 통계량은 무한대입니다.

    Returns:
        Tuple[float, int, int]: (통계량, 자유도, 셀 수)
    """
    keys = sorted(set(observed) | set(expected))
    cells: Dict[int, Tuple[float, float]] = {}
    rest_obs = rest_exp = 0.0
    for key in keys:
        obs = float(observed.get(key, 0))
        exp = float(expected.get(key, 0))
        if exp >= threshold:
            cells[key] = (obs, exp)
        else:
            rest_obs += obs
            rest_exp += exp

    pairs = list(cells.values())
    if rest_obs or rest_exp:
        if rest_exp >= threshold or rest_exp == 0 or not pairs:
            pairs.append((rest_obs, rest_exp))
        else:
            smallest = min(range(len(pairs)), key=lambda i: pairs[i][1])
            obs, exp = pairs[smallest]
            pairs[smallest] = (obs + rest_obs, exp + rest_exp)

    if any(exp == 0 and obs > 0 for obs, exp in pairs):
        return math.inf, max(len(pairs) - 1, 0), len(pairs)
    pairs = [(obs, exp) for obs, exp in pairs if exp > 0]
    if not pairs:
        return 0.0, 0, 0
    obs_arr = np.array([p[0] for p in pairs])
    exp_arr = np.array([p[1] for p in pairs])
    return chi_square_statistic(obs_arr, exp_arr), len(pairs) - 1, len(pairs)


def p_value(statistic: float, df: int) -> float:
    if math.isinf(statistic):
        return 0.0
    if df < 1:
        return 1.0
    return chi2_sf(statistic, df)
