# services/identities/ksum.py
"""关于 k 的无穷级数求和.

每一项由 term(k) 给出（EvalResult 或 None 表示零项），bound(k) 是 |term(k)|
的廉价上界。尾部 Σ_{k≥K} 由 bound(K)、bound(K+1) 估计：按局部幂律指数
p = ln(b_K/b_{K+1}) / ln((K+1)/K) 取 b_K·(1 + K/(p−1))，并不小于几何估计
b_K/(1−r)。
"""

import math
from typing import Callable, Dict, Optional

from models.eval_result import EvalMethod, EvalResult
from services.core.errors import SlowTail

TermFn = Callable[[int], Optional[EvalResult]]
BoundFn = Callable[[int], float]


def tail_estimate(k: int, b_k: float, b_next: float, b_after: float) -> float:
    """Σ_{j≥k} |term(j)| 的估计，k ≥ 1.

    :param k: 尾部起点
    :type k: int
    :param b_k: bound(k)
    :type b_k: float
    :param b_next: bound(k+1)
    :type b_next: float
    :param b_after: bound(k+2)
    :type b_after: float
    :return: 尾部估计；无法估计时为 inf
    :rtype: float
    """
    if b_k <= 0.0:
        if b_next <= 0.0 and b_after <= 0.0:
            return 0.0
        b_k, b_next, k = b_next, b_after, k + 1
        if b_k <= 0.0:
            return math.inf
    if not b_next < b_k:
        return math.inf
    ratio = b_next / b_k
    geometric = b_k / (1.0 - ratio)
    if b_next <= 0.0:
        return b_k
    p = math.log(b_k / b_next) / math.log1p(1.0 / k)
    if p <= 1.0:
        return math.inf
    return max(geometric, b_k * (1.0 + k / (p - 1.0)))


def sum_over_k(term: TermFn, bound: BoundFn, rel: float, max_k: int, label: str,
               method: Optional[EvalMethod] = None) -> EvalResult:
    """求和 Σ_{k≥0} term(k)，尾部估计不超过 rel 倍部分和时停止.

    :param term: 第 k 项
    :type term: Callable[[int], Optional[EvalResult]]
    :param bound: 第 k 项模的上界
    :type bound: Callable[[int], float]
    :param rel: 相对截断阈值
    :type rel: float
    :param max_k: 项数上限
    :type max_k: int
    :param label: 日志与异常中的名称
    :type label: str
    :param method: 结果的 method 标签，None 时沿用首个非零项的标签
    :type method: Optional[EvalMethod]
    :return: 和，误差含各项误差与尾部估计
    :rtype: EvalResult
    :raises SlowTail: 项数上限内尾部估计未达到阈值
    """
    total = 0.0
    abs_err = 0.0
    work = 0
    bounds: Dict[int, float] = {}

    def cached(j: int) -> float:
        if j not in bounds:
            bounds[j] = bound(j)
        return bounds[j]

    for k in range(max_k):
        if cached(k) > 0.0:
            result = term(k)
            if result is not None:
                total += result.value
                abs_err += result.abs_err_est
                work += result.work
                method = method or result.method
        bounds.pop(k, None)
        tail = tail_estimate(k + 1, cached(k + 1), cached(k + 2), cached(k + 3))
        if tail <= rel * abs(total) or tail == 0.0:
            return EvalResult(total, abs_err + tail, max(1, work), method or EvalMethod.DIRECT_SERIES)
    raise SlowTail(f"{label} 的 k 求和在 {max_k} 项内尾部仍未达到 {rel:g}")


__all__ = ["tail_estimate", "sum_over_k"]
