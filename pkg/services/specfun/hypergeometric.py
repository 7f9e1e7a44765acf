# services/specfun/hypergeometric.py
"""实自变量的超几何级数.

- hypergeometric_series: pFq 级数的直接求和（带尾部估计）
- gauss_2f1 / gauss_2f1_eval: x < 1 的 Gauss 2F1；x < 0 先做 Pfaff 变换
- gauss_2f1_array: 数组自变量 w ∈ [−1, 1) 的 2F1，供求积节点使用
"""

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from models.eval_result import EvalMethod, EvalResult
from services.core.errors import ConvergenceError, DomainError
from services.specfun.gamma import is_gamma_pole, log_abs_gamma, rgamma

_EPS = 2.220446049250313e-16
_DEFAULT_MAX_TERMS = 200_000


@dataclass(frozen=True)
class SeriesSum:
    """级数求和结果；abs_total 用于衡量抵消程度."""

    value: float
    abs_err: float
    terms: int
    abs_total: float

    @property
    def cancellation(self) -> float:
        """Σ|t_k| / |Σ t_k|."""
        if self.value == 0.0:
            return float("inf") if self.abs_total > 0.0 else 1.0
        return self.abs_total / abs(self.value)


def hypergeometric_series(upper: Sequence[float], lower: Sequence[float], x: float,
                          max_terms: int = _DEFAULT_MAX_TERMS,
                          rel_tol: float = 1e-16) -> SeriesSum:
    """直接求和 Σ Π(a_i)_k / Π(b_j)_k · x^k / k!.

    调用者负责保证级数收敛（p ≤ q，或 p = q+1 且 |x| < 1）。

    :param upper: 上参数
    :type upper: Sequence[float]
    :param lower: 下参数（不含非正整数）
    :type lower: Sequence[float]
    :param x: 自变量
    :type x: float
    :param max_terms: 项数上限
    :type max_terms: int
    :param rel_tol: 尾部估计相对于部分和的停止阈值
    :type rel_tol: float
    :return: 和、绝对误差估计、项数与各项绝对值之和
    :rtype: SeriesSum
    :raises ConvergenceError: 项数上限内未达到容差
    """
    for b in lower:
        if is_gamma_pole(b):
            raise DomainError(f"下参数不能为非正整数: {b}")
    if x == 0.0:
        return SeriesSum(1.0, 0.0, 1, 1.0)

    limit_ratio = abs(x) if len(upper) == len(lower) + 1 else 0.0
    term = 1.0
    total = 1.0
    abs_total = 1.0
    decreasing = 0
    for k in range(max_terms):
        ratio_num = x / (k + 1.0)
        for a in upper:
            ratio_num *= a + k
        for b in lower:
            ratio_num /= b + k
        next_term = term * ratio_num
        if next_term == 0.0:
            # 多项式，精确终止
            return SeriesSum(total, 2.0 * _EPS * abs_total, k + 1, abs_total)
        r = abs(next_term / term)
        decreasing = decreasing + 1 if r < 1.0 else 0
        bound_ratio = max(r, limit_ratio)
        if decreasing >= 3 and bound_ratio < 1.0:
            tail = abs(next_term) / (1.0 - bound_ratio)
            if tail <= rel_tol * abs(total):
                return SeriesSum(total + next_term, tail + 2.0 * _EPS * abs_total, k + 2,
                                 abs_total + abs(next_term))
        total += next_term
        abs_total += abs(next_term)
        term = next_term
    raise ConvergenceError(f"超几何级数在 {max_terms} 项内未收敛 (x={x})")


def _pfaff_plan(a: float, b: float, c: float) -> Tuple[float, float]:
    """选择 Pfaff 变换的形式，返回 (前因子指数 e, 第二个上参数 b′).

    F(a,b;c;x) = (1−x)^{−e} F(e, b′; c; x/(x−1))，e ∈ {a, b}。
    优先选择截断（多项式）的一侧，否则取较小的 e。
    """
    a_terminates = is_gamma_pole(a) or is_gamma_pole(c - b)
    b_terminates = is_gamma_pole(b) or is_gamma_pole(c - a)
    if a_terminates:
        return a, c - b
    if b_terminates:
        return b, c - a
    if a <= b:
        return a, c - b
    return b, c - a


def gauss_2f1_eval(a: float, b: float, c: float, x: float,
                   max_terms: int = _DEFAULT_MAX_TERMS) -> EvalResult:
    """计算 2F1(a, b; c; x)，x < 1，返回带误差估计的结果.

    0 ≤ x < 1 直接求和；x < 0 先用 Pfaff 变换映射到 x/(x−1) ∈ (0, 1)。

    :param a: 上参数
    :type a: float
    :param b: 上参数
    :type b: float
    :param c: 下参数，不能为非正整数
    :type c: float
    :param x: 自变量，x < 1
    :type x: float
    :param max_terms: 项数上限
    :type max_terms: int
    :return: 求值结果
    :rtype: EvalResult
    :raises DomainError: c 为非正整数或 x ≥ 1
    :raises ConvergenceError: 变换后的级数未收敛
    """
    if is_gamma_pole(c):
        raise DomainError(f"2F1 的下参数 c 不能为非正整数: {c}")
    if not x < 1.0:
        raise DomainError(f"2F1 只支持 x < 1，收到 {x}")
    if x == 0.0 or a == 0.0 or b == 0.0:
        return EvalResult(1.0, 0.0, 1, EvalMethod.DIRECT_SERIES)
    if x > 0.0:
        s = hypergeometric_series((a, b), (c,), x, max_terms)
        return EvalResult(s.value, s.abs_err, s.terms, EvalMethod.DIRECT_SERIES)

    e, b_prime = _pfaff_plan(a, b, c)
    w = x / (x - 1.0)
    s = hypergeometric_series((e, b_prime), (c,), w, max_terms)
    prefactor = math.exp(-e * math.log1p(-x))
    value = prefactor * s.value
    abs_err = prefactor * s.abs_err + 4.0 * _EPS * abs(value)
    return EvalResult(value, abs_err, s.terms, EvalMethod.DIRECT_SERIES)


def gauss_2f1(a: float, b: float, c: float, x: float) -> float:
    """计算 2F1(a, b; c; x)，x < 1.

    >>> round(gauss_2f1(1.0, 1.0, 2.0, 0.5), 10)
    1.3862943611
    """
    return gauss_2f1_eval(a, b, c, x).value


# ==================== 数组版本 ====================
def _series_coefficients(upper: Sequence[float], lower: Sequence[float], x_max: float,
                         max_terms: int) -> np.ndarray:
    """生成在 |x| ≤ x_max 上截断误差可忽略的级数系数."""
    coeffs = [1.0]
    term = 1.0
    total = 1.0
    decreasing = 0
    limit_ratio = x_max if len(upper) == len(lower) + 1 else 0.0
    for k in range(max_terms):
        ratio = 1.0 / (k + 1.0)
        for a in upper:
            ratio *= a + k
        for b in lower:
            ratio /= b + k
        coeff = coeffs[-1] * ratio
        if coeff == 0.0:
            return np.asarray(coeffs)
        coeffs.append(coeff)
        next_term = coeff * x_max ** (k + 1)
        r = abs(next_term / term) if term != 0.0 else 0.0
        decreasing = decreasing + 1 if r < 1.0 else 0
        bound_ratio = max(r, limit_ratio)
        if decreasing >= 3 and bound_ratio < 1.0:
            if abs(next_term) / (1.0 - bound_ratio) <= 1e-17 * abs(total):
                return np.asarray(coeffs)
        total += abs(next_term)
        term = next_term
    raise ConvergenceError(f"数组级数在 {max_terms} 项内未收敛 (|x| ≤ {x_max})")


def _polyval(coeffs: np.ndarray, x: np.ndarray) -> np.ndarray:
    return np.polynomial.polynomial.polyval(x, coeffs)


def gauss_2f1_array(a: float, b: float, c: float, w: np.ndarray,
                    w_complement: Optional[np.ndarray] = None,
                    max_terms: int = 20_000) -> np.ndarray:
    """在数组 w ∈ [−1, 1) 上计算 2F1(a, b; c; w).

    w ≤ 1/2 直接求和（负值先做 Pfaff 变换）；w > 1/2 用 1−w 的连接公式，
    要求 c−a−b 不是整数，否则退回直接求和（w 接近 1 时可能不收敛）。

    :param w: 自变量数组
    :type w: np.ndarray
    :param w_complement: 可选的 1−w（精确计算时传入）
    :type w_complement: Optional[np.ndarray]
    :return: 函数值数组
    :rtype: np.ndarray
    :raises ConvergenceError: 整数 c−a−b 且 w 过于接近 1
    """
    if is_gamma_pole(c):
        raise DomainError(f"2F1 的下参数 c 不能为非正整数: {c}")
    w = np.asarray(w, dtype=float)
    u = (1.0 - w) if w_complement is None else np.asarray(w_complement, dtype=float)
    if np.any(u <= 0.0) or np.any(w < -1.0) or np.any(w > 1.0):
        raise DomainError("gauss_2f1_array 只支持 w ∈ [−1, 1)")
    out = np.empty_like(w)

    negative = w < 0.0
    if np.any(negative):
        e, b_prime = _pfaff_plan(a, b, c)
        wn = w[negative]
        t = wn / (wn - 1.0)
        coeffs = _series_coefficients((e, b_prime), (c,), float(t.max()), max_terms)
        out[negative] = np.exp(-e * np.log1p(-wn)) * _polyval(coeffs, t)

    s = c - a - b
    near_one = (w > 0.5) & (s != math.floor(s))
    direct = ~negative & ~near_one
    if np.any(direct):
        wd = w[direct]
        coeffs = _series_coefficients((a, b), (c,), float(wd.max()), max_terms)
        out[direct] = _polyval(coeffs, wd)

    if np.any(near_one):
        un = u[near_one]
        lg_c, sg_c = log_abs_gamma(c)
        lg_s, sg_s = log_abs_gamma(s)
        lg_ms, sg_ms = log_abs_gamma(-s)
        gamma_c = sg_c * math.exp(lg_c)
        a1 = gamma_c * sg_s * math.exp(lg_s) * rgamma(c - a) * rgamma(c - b)
        a2 = gamma_c * sg_ms * math.exp(lg_ms) * rgamma(a) * rgamma(b)
        u_max = float(un.max())
        part = np.zeros_like(un)
        if a1 != 0.0:
            coeffs = _series_coefficients((a, b), (1.0 - s,), u_max, max_terms)
            part += a1 * _polyval(coeffs, un)
        if a2 != 0.0:
            coeffs = _series_coefficients((c - a, c - b), (1.0 + s,), u_max, max_terms)
            part += a2 * np.power(un, s) * _polyval(coeffs, un)
        out[near_one] = part
    return out


def hypergeometric_array(upper: Sequence[float], lower: Sequence[float], w: np.ndarray,
                         w_complement: Optional[np.ndarray] = None,
                         max_terms: int = 20_000) -> np.ndarray:
    """在数组 w 上计算 pFq(a; b; w)，|w| ≤ 1.

    2F1 交给 gauss_2f1_array（w 接近 1 时用连接公式）；其余情况预先生成覆盖
    max|w| 的系数后做多项式求值，p = q+1 且 |w| 触及 1 时级数不再几何收敛，
    报告 ConvergenceError。

    :param upper: 上参数
    :type upper: Sequence[float]
    :param lower: 下参数
    :type lower: Sequence[float]
    :param w: 自变量数组
    :type w: np.ndarray
    :param w_complement: 可选的 1−w，仅 2F1 使用
    :type w_complement: Optional[np.ndarray]
    :return: 函数值数组
    :rtype: np.ndarray
    :raises ConvergenceError: 系数在项数上限内未收敛
    """
    for b in lower:
        if is_gamma_pole(b):
            raise DomainError(f"下参数不能为非正整数: {b}")
    w = np.asarray(w, dtype=float)
    if len(upper) == 2 and len(lower) == 1:
        return gauss_2f1_array(upper[0], upper[1], lower[0], w, w_complement, max_terms)
    w_max = float(np.max(np.abs(w))) if w.size else 0.0
    coeffs = _series_coefficients(upper, lower, w_max, max_terms)
    return _polyval(coeffs, w)


__all__ = [
    "SeriesSum",
    "hypergeometric_series",
    "gauss_2f1",
    "gauss_2f1_eval",
    "gauss_2f1_array",
    "hypergeometric_array",
]
