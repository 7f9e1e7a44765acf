# services/quad/rules.py
"""求积规则与辅助界.

- gauss_legendre: [-1, 1] 上的 Gauss–Legendre 节点与权重（numpy）
- de_error_estimate: 双指数加密序列的误差估计
- euler_average: 部分和的 Euler 重复平均
- oscillation_zeros: 振荡因子的零点（Bessel 用 McMahon 展开）
- upper_gamma_log_bound: ln Γ(s, X) 的上界
"""

import math
from functools import lru_cache
from typing import Sequence, Tuple

import numpy as np

from models.integrand_data import Oscillation, OscillationKind
from services.specfun.gamma import log_gamma

_EPS = 2.220446049250313e-16


@lru_cache(maxsize=8)
def gauss_legendre(order: int) -> Tuple[np.ndarray, np.ndarray]:
    """Gauss–Legendre 节点与权重.

    :param order: 节点数
    :type order: int
    :return: (节点, 权重)
    :rtype: Tuple[np.ndarray, np.ndarray]
    """
    nodes, weights = np.polynomial.legendre.leggauss(order)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def de_error_estimate(estimates: Sequence[float], scale: float) -> float:
    """由逐层加密的梯形和估计误差.

    相邻两层差 d1、隔层差 d2（相对 scale），误差取 10^{D1²/D2}，并以
    2·D1 与机器精度为下限、以 1 为上限。

    :param estimates: 各层的积分值
    :type estimates: Sequence[float]
    :param scale: 归一化尺度（通常为 |I| 或 Σ|f|w）
    :type scale: float
    :return: 绝对误差估计
    :rtype: float
    """
    if len(estimates) < 3:
        return math.inf
    if scale <= 0.0:
        return 0.0
    d1 = abs(estimates[-1] - estimates[-2]) / scale
    d2 = abs(estimates[-1] - estimates[-3]) / scale
    if d1 == 0.0:
        return 0.0
    log_d1 = math.log10(d1)
    log_d2 = math.log10(d2) if d2 > 0.0 else log_d1
    if log_d2 >= 0.0 or log_d1 >= 0.0:
        return scale * max(d1, d2)
    exponent = min(0.0, max(log_d1 * log_d1 / log_d2, 2.0 * log_d1, math.log10(_EPS)))
    return scale * 10.0 ** exponent


def euler_average(partial_sums: Sequence[float]) -> Tuple[float, float]:
    """对交错级数的部分和做 Euler 重复平均.

    :param partial_sums: 连续的部分和（至少 3 个）
    :type partial_sums: Sequence[float]
    :return: (外推值, 最后两层之差)
    :rtype: Tuple[float, float]
    """
    row = np.asarray(partial_sums, dtype=float)
    previous = row[-1]
    while row.size > 1:
        previous = row[-1]
        row = 0.5 * (row[:-1] + row[1:])
    return float(row[0]), abs(float(row[0]) - float(previous))


def _mcmahon(nu: float, m: np.ndarray) -> np.ndarray:
    """J_ν 第 m 个正零点的 McMahon 展开."""
    mu = 4.0 * nu * nu
    beta = (m + 0.5 * nu - 0.25) * math.pi
    eight_beta = 8.0 * beta
    return (beta - (mu - 1.0) / eight_beta
            - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * eight_beta ** 3))


def oscillation_zeros(osc: Oscillation, start: int, count: int) -> np.ndarray:
    """第 start .. start+count−1 个正零点（按 1 起编号）.

    :param osc: 振荡因子（必须是振荡型）
    :type osc: Oscillation
    :param start: 起始编号，≥ 1
    :type start: int
    :param count: 个数
    :type count: int
    :return: 零点数组
    :rtype: np.ndarray
    """
    m = np.arange(start, start + count, dtype=float)
    if osc.kind is OscillationKind.COS:
        return (m - 0.5) * math.pi / osc.y
    if osc.kind is OscillationKind.SIN:
        return m * math.pi / osc.y
    if osc.kind is OscillationKind.BESSEL_SQRT:
        if osc.nu == 0.5:
            return m * math.pi / osc.y
        if osc.nu == -0.5:
            return (m - 0.5) * math.pi / osc.y
        return _mcmahon(osc.nu, m) / osc.y
    raise ValueError(f"非振荡因子没有零点: {osc.kind}")


def upper_gamma_log_bound(s: float, x: float) -> float:
    """ln Γ(s, x) 的上界，x > 0.

    s ≤ 1 时 Γ(s,x) ≤ x^{s−1}e^{−x}；x > 2(s−1) 时
    Γ(s,x) ≤ x^{s−1}e^{−x}/(1−(s−1)/x)；否则退回 Γ(s)。
    """
    if x <= 0.0:
        return math.inf if s <= 0.0 else log_gamma(s)
    base = (s - 1.0) * math.log(x) - x
    if s <= 1.0:
        return base
    if x > 2.0 * (s - 1.0):
        return base - math.log1p(-(s - 1.0) / x)
    return log_gamma(s)


__all__ = [
    "gauss_legendre",
    "de_error_estimate",
    "euler_average",
    "oscillation_zeros",
    "upper_gamma_log_bound",
]
