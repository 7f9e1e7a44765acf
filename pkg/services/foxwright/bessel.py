# services/foxwright/bessel.py
"""第一类 Bessel 函数 J_ν.

- bessel_j: 标量版本，x ≤ 20，经 Wright 广义 Bessel 级数求值
- bessel_j_array: 数组版本，供求积节点使用（幂级数 / Miller 反向递推 / Hankel 渐近展开）
"""

import math
from typing import Optional

import numpy as np

from models.eval_result import EvalMethod, EvalResult
from models.options import SeriesOptions
from services.core.errors import DomainError, OutOfRange
from services.specfun.gamma import gamma_fn, log_gamma, rgamma

_EPS = 2.220446049250313e-16
_SCALAR_MAX_X = 20.0
_SERIES_MAX_X = 8.0
_MILLER_MAX_X = 25.0
_MILLER_EXTRA = 40
_RESCALE = 1e200
_HANKEL_TERMS = 24
_SQRT_2_OVER_PI = math.sqrt(2.0 / math.pi)


def _is_half(nu: float) -> bool:
    return nu == 0.5 or nu == -0.5


def bessel_j(nu: float, x: float, options: Optional[SeriesOptions] = None) -> EvalResult:
    """计算 J_ν(x)，ν > −1，0 ≤ x ≤ 20.

    ν = ±1/2 时直接使用初等形式 √(2/(πx))·{sin x, cos x}；其余情况
    J_ν(x) = (x/2)^ν · J_ν^1(x²/4)，后者为 Wright 广义 Bessel 级数。

    :param nu: 阶数，ν > −1
    :type nu: float
    :param x: 自变量，0 ≤ x ≤ 20
    :type x: float
    :param options: 级数选项
    :type options: Optional[SeriesOptions]
    :return: 求值结果
    :rtype: EvalResult
    :raises DomainError: ν ≤ −1、x < 0，或 ν < 0 时 x = 0
    :raises OutOfRange: x > 20
    """
    from services.foxwright.reductions import wright_bessel

    if not nu > -1.0:
        raise DomainError(f"bessel_j 要求 ν > −1，收到 {nu}")
    if not x >= 0.0:
        raise DomainError(f"bessel_j 要求 x ≥ 0，收到 {x}")
    if x > _SCALAR_MAX_X:
        raise OutOfRange(f"bessel_j 只支持 x ≤ {_SCALAR_MAX_X:g}，收到 {x}")

    if x == 0.0:
        if nu == 0.0:
            return EvalResult(1.0, 0.0, 1, EvalMethod.DIRECT_SERIES)
        if nu > 0.0:
            return EvalResult(0.0, 0.0, 1, EvalMethod.DIRECT_SERIES)
        raise DomainError(f"J_{nu:g}(x) 在 x = 0 处发散")

    if _is_half(nu):
        trig = math.sin(x) if nu > 0 else math.cos(x)
        value = math.sqrt(2.0 / (math.pi * x)) * trig
        return EvalResult(value, 4.0 * _EPS * max(abs(value), math.sqrt(1.0 / x)), 1, EvalMethod.ELEMENTARY)

    inner = wright_bessel(1.0, nu, 0.25 * x * x, options)
    scale = math.exp(nu * math.log(0.5 * x))
    value = scale * inner.value
    abs_err = scale * inner.abs_err_est + 2.0 * _EPS * abs(value)
    return EvalResult(value, abs_err, inner.work, inner.method)


# ==================== 数组版本 ====================
def _series_reduced(nu: float, x: np.ndarray) -> np.ndarray:
    """幂级数 Σ (−x²/4)^k / (k! Γ(ν+k+1))，即 J_ν(x)/(x/2)^ν，x ≤ 8."""
    q = -0.25 * x * x
    term = np.full_like(x, rgamma(nu + 1.0))
    total = term.copy()
    for k in range(1, 80):
        term = term * q / (k * (nu + k))
        total += term
        if np.all(np.abs(term) <= 1e-17 * np.abs(total)):
            break
    return total


def _series(nu: float, x: np.ndarray) -> np.ndarray:
    return np.exp(nu * np.log(0.5 * x)) * _series_reduced(nu, x)


def _miller(nu: float, x: np.ndarray) -> np.ndarray:
    """Miller 反向递推，用 (x/2)^ν = Σ_k (ν+2k)Γ(ν+k)/k!·J_{ν+2k}(x) 归一化."""
    top = int(math.ceil(float(np.max(x)))) + _MILLER_EXTRA
    # 偶数阶权重 w_k = (ν+2k)Γ(ν+k)/k!，w_0 = Γ(ν+1)
    weights = np.empty(top // 2 + 1)
    weights[0] = gamma_fn(nu + 1.0)
    for k in range(1, weights.size):
        weights[k] = (nu + 2.0 * k) * math.exp(log_gamma(nu + k) - log_gamma(k + 1.0))

    f_next = np.zeros_like(x)           # f_{n+1}
    f_cur = np.full_like(x, 1e-300)     # f_n
    norm = np.zeros_like(x)
    if top % 2 == 0:
        norm += weights[top // 2] * f_cur
    for n in range(top, 0, -1):
        f_prev = 2.0 * (nu + n) / x * f_cur - f_next
        f_next, f_cur = f_cur, f_prev
        if (n - 1) % 2 == 0:
            norm += weights[(n - 1) // 2] * f_cur
        big = np.abs(f_cur) > _RESCALE
        if np.any(big):
            f_cur = np.where(big, f_cur / _RESCALE, f_cur)
            f_next = np.where(big, f_next / _RESCALE, f_next)
            norm = np.where(big, norm / _RESCALE, norm)
    return f_cur * np.exp(nu * np.log(0.5 * x)) / norm


def _hankel_sqrt(nu: float, x: np.ndarray) -> np.ndarray:
    """Hankel 渐近展开的 √x·J_ν(x)，x > 25."""
    four_nu2 = 4.0 * nu * nu
    p = np.ones_like(x)
    q = np.zeros_like(x)
    coeff = 1.0
    inv = 1.0 / x
    power = np.ones_like(x)
    for k in range(1, _HANKEL_TERMS + 1):
        coeff *= (four_nu2 - (2 * k - 1) ** 2) / (k * 8.0)
        power = power * inv
        term = coeff * power
        # a_k/x^k 交替地进入 P 与 Q
        if k % 2:
            q += (-1.0) ** ((k - 1) // 2) * term
        else:
            p += (-1.0) ** (k // 2) * term
        if coeff == 0.0:
            break
    chi = x - (0.5 * nu + 0.25) * math.pi
    return _SQRT_2_OVER_PI * (p * np.cos(chi) - q * np.sin(chi))


def bessel_j_array(nu: float, x: np.ndarray) -> np.ndarray:
    """在数组 x > 0 上计算 J_ν(x).

    x ≤ 8 用幂级数，8 < x ≤ 25 用 Miller 反向递推，x > 25 用 Hankel 渐近展开；
    ν = ±1/2 使用初等形式。

    :param nu: 阶数，ν > −1
    :type nu: float
    :param x: 正自变量数组
    :type x: np.ndarray
    :return: J_ν(x)
    :rtype: np.ndarray
    """
    return sqrt_bessel_j(nu, x) / np.sqrt(np.asarray(x, dtype=float))


def sqrt_bessel_j(nu: float, x: np.ndarray) -> np.ndarray:
    """在数组 x > 0 上计算 √x·J_ν(x)（求积被积函数中的振荡因子）.

    :param nu: 阶数，ν > −1
    :type nu: float
    :param x: 正自变量数组
    :type x: np.ndarray
    :return: √x·J_ν(x)
    :rtype: np.ndarray
    :raises DomainError: ν ≤ −1 或 x 含非正值
    """
    if not nu > -1.0:
        raise DomainError(f"sqrt_bessel_j 要求 ν > −1，收到 {nu}")
    x = np.asarray(x, dtype=float)
    if x.size and not np.all(x > 0.0):
        raise DomainError("sqrt_bessel_j 要求 x > 0")
    if nu == 0.5:
        return _SQRT_2_OVER_PI * np.sin(x)
    if nu == -0.5:
        return _SQRT_2_OVER_PI * np.cos(x)

    out = np.empty_like(x)
    small = x <= _SERIES_MAX_X
    large = x > _MILLER_MAX_X
    middle = ~small & ~large
    if np.any(small):
        out[small] = np.sqrt(x[small]) * _series(nu, x[small])
    if np.any(middle):
        out[middle] = np.sqrt(x[middle]) * _miller(nu, x[middle])
    if np.any(large):
        out[large] = _hankel_sqrt(nu, x[large])
    return out


def bessel_j_reduced(nu: float, x: np.ndarray) -> np.ndarray:
    """在数组 x > 0 上计算 J_ν(x)/(x/2)^ν.

    x → 0 时趋于 1/Γ(ν+1)；求积时把 (x/2)^ν 并入对数包络，避免小 x 处溢出。
    """
    x = np.asarray(x, dtype=float)
    out = np.empty_like(x)
    small = x <= _SERIES_MAX_X
    if np.any(small):
        out[small] = _series_reduced(nu, x[small])
    if np.any(~small):
        xl = x[~small]
        out[~small] = sqrt_bessel_j(nu, xl) / (np.sqrt(xl) * np.exp(nu * np.log(0.5 * xl)))
    return out


__all__ = ["bessel_j", "bessel_j_array", "bessel_j_reduced", "sqrt_bessel_j"]
