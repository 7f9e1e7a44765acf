# services/identities/inner.py
"""内层函数模块.

F₃/F₄ 及其特例在被积函数中带有内层函数 f(±e^{−cx^ξ})：

- rΨs[(α_j,A_j); (β_j,B_j) | w]
- rFs(α_j; β_j; w)，r ≤ s+1

InnerFunction 同时提供两种用法：
    - coefficient(k): 级数系数 c_k = Θ(k)/k!，供右侧与逐项积分路径使用
    - extra_factor(c, ξ): 求积节点上的附加因子，供直接求积路径使用
"""

import math
from typing import Callable, List, Optional, Sequence

import numpy as np
from loguru import logger

from models.fox_wright_data import FoxWrightSpec
from models.integrand_data import ExtraFactor
from services.core.errors import HypothesisViolation, NumericError
from services.foxwright.series import fox_wright_coefficient, fox_wright_coefficients
from services.specfun.gamma import is_gamma_pole
from services.specfun.hypergeometric import hypergeometric_array

#: 采样附加因子上界时 1−w 的取值
_SAMPLE_COMPLEMENT = np.logspace(-14.0, 0.0, 257)


class InnerFunction:
    """内层函数 f(sign·w)，w = e^{−cx^ξ} ∈ (0, 1).

    :param label: 名称
    :type label: str
    :param coefficient: k -> c_k（已含 sign^k）
    :type coefficient: Callable[[int], float]
    :param evaluate: (w, 1−w) -> f(sign·w)
    :type evaluate: Callable[[np.ndarray, np.ndarray], np.ndarray]
    """

    def __init__(self, label: str, coefficient: Callable[[int], float],
                 evaluate: Callable[[np.ndarray, np.ndarray], np.ndarray]):
        self.label = label
        self._coefficient = coefficient
        self._evaluate = evaluate
        self._cache: List[float] = []
        self._bound: Optional[float] = None

    def coefficient(self, k: int) -> float:
        """c_k = Θ(k)/k!."""
        while len(self._cache) <= k:
            self._cache.append(self._coefficient(len(self._cache)))
        return self._cache[k]

    def bound(self) -> float:
        """在 w ∈ (0, 1) 上采样得到的 |f| 最大值."""
        if self._bound is None:
            w = 1.0 - _SAMPLE_COMPLEMENT
            values = self._evaluate(w, _SAMPLE_COMPLEMENT)
            if not np.all(np.isfinite(values)):
                raise HypothesisViolation(f"内层函数 {self.label} 在 (0, 1) 上无界")
            self._bound = float(np.max(np.abs(values)))
        return self._bound

    def extra_factor(self, c: float, xi: float) -> ExtraFactor:
        """求积用的附加因子 x ↦ f(sign·e^{−cx^ξ}).

        :param c: 指数系数，c > 0
        :type c: float
        :param xi: 伸缩幂
        :type xi: float
        :return: 附加因子（上界为采样最大值）
        :rtype: ExtraFactor
        """

        def func(x: np.ndarray) -> np.ndarray:
            # w = 1 处 2F1 的连接公式要求 1−w > 0
            t = np.maximum(c * np.power(x, xi), 1e-300)
            return self._evaluate(np.exp(-t), -np.expm1(-t))

        return ExtraFactor(func=func, bound=self.bound(), label=self.label)


# ==================== 构造 ====================
def psi_inner(spec: FoxWrightSpec, sign: float = 1.0) -> InnerFunction:
    """rΨs 内层函数；系数在 |w| ≤ 1 上预先生成.

    :param spec: rΨs 参数
    :type spec: FoxWrightSpec
    :param sign: 自变量符号（−1 对应 (3.5) 的 −e^{−cx^ξ}）
    :type sign: float
    :return: 内层函数
    :rtype: InnerFunction
    :raises HypothesisViolation: 级数在 |w| = 1 上不收敛
    """
    holder: List[np.ndarray] = []

    def coefficients() -> np.ndarray:
        if not holder:
            try:
                holder.append(fox_wright_coefficients(spec, 1.0))
            except NumericError as e:
                raise HypothesisViolation(f"内层 {spec.label()} 在 |w| = 1 上不收敛: {e}") from e
            logger.trace(f"内层 {spec.label()} 使用 {holder[0].size} 个系数")
        return holder[0]

    def coefficient(k: int) -> float:
        return fox_wright_coefficient(spec, k) * (sign ** k)

    def evaluate(w: np.ndarray, _complement: np.ndarray) -> np.ndarray:
        return np.polynomial.polynomial.polyval(sign * w, coefficients())

    label = spec.label() if sign > 0 else f"{spec.label()}(−w)"
    return InnerFunction(label, coefficient, evaluate)


def pfq_inner(upper: Sequence[float], lower: Sequence[float]) -> InnerFunction:
    """rFs 内层函数.

    :param upper: 上参数 α_j
    :type upper: Sequence[float]
    :param lower: 下参数 β_j
    :type lower: Sequence[float]
    :return: 内层函数
    :rtype: InnerFunction
    :raises HypothesisViolation: r > s+1 的非截断级数、下参数为非正整数，或 r = s+1 时 ω ≤ 0
    """
    upper = tuple(float(a) for a in upper)
    lower = tuple(float(b) for b in lower)
    label = f"{len(upper)}F{len(lower)}({','.join(f'{a:g}' for a in upper)};{','.join(f'{b:g}' for b in lower)})"
    for b in lower:
        if is_gamma_pole(b):
            raise HypothesisViolation(f"{label} 的下参数不能为非正整数")
    terminating = any(is_gamma_pole(a) for a in upper)
    if not terminating:
        if len(upper) > len(lower) + 1:
            raise HypothesisViolation(f"{label} 要求 r ≤ s+1")
        if len(upper) == len(lower) + 1 and not math.fsum(lower) - math.fsum(upper) > 0.0:
            raise HypothesisViolation(f"{label} 在 w → 1 时无界（ω ≤ 0）")

    def evaluate(w: np.ndarray, complement: np.ndarray) -> np.ndarray:
        return hypergeometric_array(upper, lower, w, complement)

    return InnerFunction(label, _recurrence(upper, lower), evaluate)


def _recurrence(upper: Sequence[float], lower: Sequence[float]) -> Callable[[int], float]:
    """c_{k+1} = c_k · Π(α+k)/Π(β+k)/(k+1)；InnerFunction 按 k 递增的顺序请求."""
    state = {"k": 0, "value": 1.0}

    def next_coefficient(k: int) -> float:
        while state["k"] < k:
            j = state["k"]
            ratio = 1.0 / (j + 1.0)
            for a in upper:
                ratio *= a + j
            for b in lower:
                ratio /= b + j
            state["value"] *= ratio
            state["k"] = j + 1
        return state["value"]

    return next_coefficient


__all__ = ["InnerFunction", "psi_inner", "pfq_inner"]
