# services/specfun/gamma.py
"""Γ 函数相关的标量函数.

- log_gamma: x > 0 时的 ln Γ(x)
- log_abs_gamma: 任意非极点实数的 (ln|Γ(x)|, sign Γ(x))
- rgamma: 1/Γ(x)，极点处为 0
- pochhammer_ratio: (b/c)_k / (1+b/c)_k = b/(b+ck)
"""

import math
from functools import lru_cache
from typing import Tuple

from services.core.errors import DomainError

#: Stirling 级数系数 B_{2j}/(2j(2j−1))
_STIRLING = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
)
_STIRLING_MIN = 15.0
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
_EULER_GAMMA = 0.57721566490153286061
_TAYLOR_TERMS = 60


@lru_cache(maxsize=1)
def _taylor_coefficients() -> Tuple[float, ...]:
    """ln Γ(1+z) 在 z=0 处的 Taylor 系数 (−1)^k ζ(k)/k，k ≥ 2."""
    from services.specfun.zeta import hurwitz_zeta

    coeffs = []
    for k in range(2, _TAYLOR_TERMS + 2):
        zeta_k = hurwitz_zeta(float(k), 1.0).real
        coeffs.append((-1.0) ** k * zeta_k / k)
    return tuple(coeffs)


def _log_gamma_1p(z: float) -> float:
    """ln Γ(1+z)，|z| ≤ 0.5."""
    coeffs = _taylor_coefficients()
    total = 0.0
    power = z
    for c in coeffs:
        power *= z
        term = c * power
        total += term
        if abs(term) < 1e-18 * abs(total):
            break
    return total - _EULER_GAMMA * z


def _log_gamma_stirling(x: float) -> float:
    inv = 1.0 / x
    inv2 = inv * inv
    correction = 0.0
    power = inv
    for c in _STIRLING:
        correction += c * power
        power *= inv2
    return (x - 0.5) * math.log(x) - x + _HALF_LOG_2PI + correction


def log_gamma(x: float) -> float:
    """计算 ln Γ(x)，x > 0.

    非正自变量被拒绝，而不是用反射公式延拓。

    :param x: 自变量
    :type x: float
    :return: ln Γ(x)
    :rtype: float
    :raises DomainError: x ≤ 0 或非有限
    """
    if not (x > 0.0) or not math.isfinite(x):
        raise DomainError(f"log_gamma 要求 x > 0，收到 {x}")
    if x == 1.0 or x == 2.0:
        return 0.0
    if x < 0.5:
        # Γ(x) = Γ(x+1)/x
        return _log_gamma_1p(x) - math.log(x)
    if x <= 1.5:
        return _log_gamma_1p(x - 1.0)
    if x <= 2.5:
        z = x - 2.0
        return math.log1p(z) + _log_gamma_1p(z)
    if x >= _STIRLING_MIN:
        return _log_gamma_stirling(x)
    shift = int(math.ceil(_STIRLING_MIN - x))
    log_product = math.fsum(math.log(x + i) for i in range(shift))
    return _log_gamma_stirling(x + shift) - log_product


def is_gamma_pole(x: float) -> bool:
    """x 是否为非正整数."""
    return x <= 0.0 and x == math.floor(x)


def log_abs_gamma(x: float) -> Tuple[float, int]:
    """计算 (ln|Γ(x)|, sign Γ(x))，负数自变量用反射公式.

    :param x: 非极点实数
    :type x: float
    :return: 对数模与符号
    :rtype: Tuple[float, int]
    :raises DomainError: x 为非正整数
    """
    if x > 0.0:
        return log_gamma(x), 1
    if is_gamma_pole(x):
        raise DomainError(f"Γ 在非正整数 {x} 处有极点")
    # Γ(x)Γ(1−x) = π / sin(πx)
    n = round(x)
    s = math.sin(math.pi * (x - n))
    if n % 2:
        s = -s
    lg = math.log(math.pi) - math.log(abs(s)) - log_gamma(1.0 - x)
    return lg, (1 if s > 0 else -1)


def gamma_fn(x: float) -> float:
    """Γ(x)，可能溢出为 ±inf."""
    lg, sign = log_abs_gamma(x)
    if lg > 709.0:
        return sign * math.inf
    return sign * math.exp(lg)


def rgamma(x: float) -> float:
    """1/Γ(x)，在非正整数处取 0."""
    if is_gamma_pole(x):
        return 0.0
    lg, sign = log_abs_gamma(x)
    return sign * math.exp(-lg)


def pochhammer_ratio(b: float, c: float, k: int) -> float:
    """计算 (b/c)_k / (1 + b/c)_k.

    乘积逐项相消后只剩 (b/c)/(b/c + k) = b/(b + ck)，一次舍入即得。

    :param b: 正实数
    :type b: float
    :param c: 正实数
    :type c: float
    :param k: 非负整数
    :type k: int
    :return: 比值
    :rtype: float
    :raises DomainError: b ≤ 0、c ≤ 0 或 k < 0
    """
    if not (b > 0.0 and c > 0.0):
        raise DomainError(f"pochhammer_ratio 要求 b, c > 0，收到 b={b}, c={c}")
    if k < 0:
        raise DomainError(f"pochhammer_ratio 要求 k >= 0，收到 {k}")
    return b / (b + c * k)


__all__ = [
    "log_gamma",
    "log_abs_gamma",
    "is_gamma_pole",
    "gamma_fn",
    "rgamma",
    "pochhammer_ratio",
]
