# services/quad/bose.py
"""Bose 因子矩积分模块.

φ(m, n) = ∫_0^∞ x^m/(e^{2πx}−1)·{cos, sin}(πnx) dx。

把 1/(e^{2πx}−1) 展开为 Σ_{k=1}^{K} e^{−2πkx} 加上精确余项
e^{−2πKx}/(e^{2πx}−1)，每一项与余项都交给 integrate。
"""

import math
from typing import Optional

from loguru import logger

from models.eval_result import QuadResult
from models.integrand_data import Envelope, IntegrandSpec, Oscillation, OscillationKind
from models.options import QuadOptions
from services.core.errors import DomainError
from services.quad.integrator import integrate

_TWO_PI = 2.0 * math.pi
_EXPANSION_TERMS = 8


def _remainder_spec(m: float, oscillation: Oscillation, terms: int) -> IntegrandSpec:
    return IntegrandSpec(
        mu=m,
        xi=1.0,
        decay=_TWO_PI * terms,
        oscillation=oscillation,
        envelope=Envelope.BOSE_FACTOR,
        bose_scale=_TWO_PI,
    )


def integrate_bose_moment(m: float, oscillation: Oscillation, direct: bool = False,
                          options: Optional[QuadOptions] = None,
                          terms: int = _EXPANSION_TERMS) -> QuadResult:
    """计算 ∫_0^∞ x^m/(e^{2πx}−1)·osc(x) dx.

    :param m: 幂次，m ≥ 1
    :type m: float
    :param oscillation: Cos(πn) 或 Sin(πn)
    :type oscillation: Oscillation
    :param direct: True 时不展开，直接对 Bose 被积函数分段求积
    :type direct: bool
    :param options: 求积选项
    :type options: Optional[QuadOptions]
    :param terms: 展开项数 K
    :type terms: int
    :return: 求积结果；nodes/segments 为各项之和
    :rtype: QuadResult
    :raises DomainError: m < 1 或振荡类型不是 cos/sin
    """
    if not m >= 1.0:
        raise DomainError(f"Bose 矩积分要求 m ≥ 1，收到 {m}")
    if oscillation.kind not in (OscillationKind.COS, OscillationKind.SIN):
        raise DomainError(f"Bose 矩积分只支持 cos/sin 振荡，收到 {oscillation.kind.value}")
    if terms < 0:
        raise DomainError(f"展开项数不能为负: {terms}")

    if direct:
        return integrate(_remainder_spec(m, oscillation, 0), options=options)

    value = 0.0
    abs_err = 0.0
    nodes = 0
    segments = 0
    for k in range(1, terms + 1):
        part = integrate(IntegrandSpec(mu=m, xi=1.0, decay=_TWO_PI * k, oscillation=oscillation),
                         options=options)
        value += part.value
        abs_err += part.abs_err_est
        nodes += part.nodes
        segments += part.segments
    remainder = integrate(_remainder_spec(m, oscillation, terms), options=options)
    logger.trace(f"Bose 展开 K={terms}，余项 {remainder.value:.3e}")
    return QuadResult(
        value=value + remainder.value,
        abs_err_est=abs_err + remainder.abs_err_est,
        nodes=nodes + remainder.nodes,
        segments=segments + remainder.segments,
    )


__all__ = ["integrate_bose_moment"]
