# services/identities/theorems.py
"""定理 1、定理 2 与推论的两侧求值模块.

F₁(μ,ξ,a,ν,y) = ∫_0^∞ x^μ e^{−ax^ξ} √(xy) J_ν(xy) dx
             = y^{ν+1/2}/(2^ν ξ a^σ) · 1Ψ1[(σ,2/ξ);(ν+1,1) | −y²/(4a^{2/ξ})]

F₂ = Σ_k Θ(k)/k! · F₁(μ,ξ,b+ck,ν,y)；推论把 Θ(k)/k! 换成内层 rΨs / rFs 的系数，
左侧同时可以对带内层因子的被积函数直接求积。
"""

import math
from enum import Enum
from typing import Callable, Optional

from loguru import logger

from models.eval_result import EvalMethod, EvalResult
from models.fox_wright_data import FoxWrightSpec
from models.identity_data import GrowthClass, ParamPoint, RoutePair
from models.integrand_data import Envelope, ExtraFactor, IntegrandSpec, Oscillation
from models.options import OptionBundle
from services.core.errors import HypothesisViolation, NumericError, TruncationUncertain
from services.foxwright.reductions import one_psi_one_theorem1, theorem1_spec
from services.foxwright.series import fox_wright_eval
from services.identities.hurwitz_sum import shifted_psi_sum
from services.identities.hypotheses import check_bessel_point, require, require_positive
from services.identities.inner import InnerFunction, pfq_inner, psi_inner
from services.identities.ksum import sum_over_k
from services.identities.sequences import get_sequence
from services.quad import integrate
from services.specfun.gamma import log_gamma, pochhammer_ratio

Coefficient = Callable[[int], float]

#: 逐项求积路径的项数上限
MAX_QUAD_TERMS = 2000

FACTORIAL_NOTE = "Θ(k)=k! 超出有界序列假设；由 e^{−ckx} 的几何衰减逐项控制求和与积分的交换"


class SpecialCase(str, Enum):
    """推论 1 的特例 (3.4)–(3.6)."""

    WRIGHT_3_4 = "Wright_3_4"
    WRIGHT_BESSEL_3_5 = "WrightBessel_3_5"
    MITTAG_LEFFLER_3_6 = "MittagLeffler_3_6"


# ==================== F₁ ====================
def _log_prefactor(point: ParamPoint, a: float) -> float:
    """ln[y^{ν+1/2}/(2^ν ξ a^σ)]."""
    return ((point.nu + 0.5) * math.log(point.y) - point.nu * math.log(2.0)
            - math.log(point.xi) - point.sigma * math.log(a))


def _psi_argument(point: ParamPoint, a: float) -> float:
    """−y²/(4a^{2/ξ})，在对数空间计算."""
    return -math.exp(2.0 * math.log(point.y) - math.log(4.0) - (2.0 / point.xi) * math.log(a))


def f1_integrand(point: ParamPoint, a: float) -> IntegrandSpec:
    return IntegrandSpec(
        mu=point.mu,
        xi=point.xi,
        decay=a,
        oscillation=Oscillation.bessel_sqrt(point.nu, point.y),
    )


def f1_bound(point: ParamPoint, a: float, options: OptionBundle) -> float:
    """|F₁(a)| 的上界，关于 a 单调递减.

    ν ≥ −1/2 时用 |J_ν(t)| ≤ (t/2)^ν/Γ(ν+1)；否则用各项取正的 1Ψ1 级数。

    :raises TruncationUncertain: 无法给出上界
    """
    if point.nu >= -0.5:
        return math.exp(_log_prefactor(point, a) + log_gamma(point.sigma) - log_gamma(point.nu + 1.0))
    z = -_psi_argument(point, a)
    if point.xi == 1.0 and not z < 0.25:
        raise TruncationUncertain(f"ν = {point.nu:g} < −1/2 且 ξ = 1 时无法在 a = {a:g} 处给出 F₁ 的上界")
    try:
        majorant = fox_wright_eval(theorem1_spec(point.sigma, 2.0 / point.xi, point.nu), z, options.series)
    except NumericError as e:
        raise TruncationUncertain(f"F₁ 的上界无法计算: {e}") from e
    return math.exp(_log_prefactor(point, a)) * abs(majorant.value)


def _f1_value(point: ParamPoint, a: float, options: OptionBundle) -> EvalResult:
    psi = one_psi_one_theorem1(point.sigma, 2.0 / point.xi, point.nu, _psi_argument(point, a), options.series)
    return psi.scaled(math.exp(_log_prefactor(point, a)))


def f1_lhs(point: ParamPoint, options: OptionBundle) -> EvalResult:
    """F₁ 的左侧：对 IntegrandSpec 直接求积.

    :param point: 需要 μ, ξ, a, ν, y
    :type point: ParamPoint
    :param options: 数值选项
    :type options: OptionBundle
    :return: 求积结果
    :rtype: EvalResult
    :raises HypothesisViolation: 参数点不满足定理 1 的假设
    """
    logger.trace("")
    check_bessel_point(point, ("a",))
    return integrate(f1_integrand(point, point.a), options=options.quad).as_eval()


def f1_rhs(point: ParamPoint, options: OptionBundle) -> EvalResult:
    """F₁ 的右侧：前因子乘 1Ψ1[(σ,2/ξ);(ν+1,1) | −y²/(4a^{2/ξ})].

    :param point: 需要 μ, ξ, a, ν, y
    :type point: ParamPoint
    :param options: 数值选项
    :type options: OptionBundle
    :return: 级数或约化结果
    :rtype: EvalResult
    :raises HypothesisViolation: 参数点不满足定理 1 的假设
    """
    logger.trace("")
    check_bessel_point(point, ("a",))
    return _f1_value(point, point.a, options)


# ==================== F₂ ====================
def _term_by_term_lhs(point: ParamPoint, coefficient: Coefficient, options: OptionBundle,
                      label: str) -> EvalResult:
    """Σ_k c_k · ∫ F₁(b+ck)，每项单独求积."""
    b, c = point.b, point.c

    def term(k: int) -> Optional[EvalResult]:
        ck = coefficient(k)
        if ck == 0.0:
            return None
        return integrate(f1_integrand(point, b + c * k), options=options.quad).as_eval().scaled(ck)

    def bound(k: int) -> float:
        return abs(coefficient(k)) * f1_bound(point, b + c * k, options)

    max_k = min(options.identity.max_k, MAX_QUAD_TERMS)
    return sum_over_k(term, bound, options.identity.truncation_rel, max_k, label, EvalMethod.QUADRATURE)


def _series_rhs(point: ParamPoint, coefficient: Coefficient, options: OptionBundle,
                label: str) -> EvalResult:
    """Σ_k c_k · ((b/c)_k/(1+b/c)_k)^σ · b^{−σ}·y^{ν+1/2}/(2^ν ξ) · 1Ψ1(−y²/(4(b+ck)^{2/ξ}))."""
    b, c = point.b, point.c
    sigma = point.sigma
    scale = math.exp(_log_prefactor(point, b))

    def term(k: int) -> Optional[EvalResult]:
        ck = coefficient(k)
        if ck == 0.0:
            return None
        psi = one_psi_one_theorem1(sigma, 2.0 / point.xi, point.nu, _psi_argument(point, b + c * k),
                                   options.series)
        return psi.scaled(ck * pochhammer_ratio(b, c, k) ** sigma * scale)

    def bound(k: int) -> float:
        return abs(coefficient(k)) * f1_bound(point, b + c * k, options)

    return sum_over_k(term, bound, options.identity.truncation_rel, options.identity.max_k, label)


def _factorial_rhs(point: ParamPoint, options: OptionBundle) -> EvalResult:
    if point.xi != 1.0:
        raise TruncationUncertain(f"Θ(k)=k! 只在 ξ = 1 时可被支配，收到 ξ = {point.xi}")
    total = shifted_psi_sum(point.sigma, point.nu, point.y, point.b, point.c, options.series)
    log_scale = (point.nu + 0.5) * math.log(point.y) - point.nu * math.log(2.0)
    return total.scaled(math.exp(log_scale))


def _factorial_lhs(point: ParamPoint, options: OptionBundle) -> EvalResult:
    """Σ_k e^{−(b+ck)x} = e^{−(b−c)x}/(e^{cx}−1)，合并成一个 Bose 型被积函数."""
    if point.xi != 1.0 or point.b < point.c:
        raise TruncationUncertain(f"Θ(k)=k! 的左侧要求 ξ = 1 且 b ≥ c，收到 ξ = {point.xi}, b = {point.b}, c = {point.c}")
    spec = IntegrandSpec(
        mu=point.mu,
        xi=1.0,
        decay=point.b - point.c,
        oscillation=Oscillation.bessel_sqrt(point.nu, point.y),
        envelope=Envelope.BOSE_FACTOR,
        bose_scale=point.c,
    )
    return integrate(spec, options=options.quad).as_eval()


def _theta_sequence(point: ParamPoint):
    require(point, ("theta",))
    sequence = get_sequence(point.theta)
    if sequence.growth is GrowthClass.UNKNOWN:
        raise TruncationUncertain(f"Θ 序列 {sequence.name} 的增长类别未知，无法截断")
    return sequence


def f2_lhs(point: ParamPoint, options: OptionBundle) -> EvalResult:
    """F₂ 的左侧：Σ_k Θ(k)/k!·F₁(b+ck)，每项求积.

    :param point: 需要 μ, ξ, b, c, ν, y, theta
    :type point: ParamPoint
    :param options: 数值选项
    :type options: OptionBundle
    :return: 求和结果
    :rtype: EvalResult
    :raises TruncationUncertain: 无界 Θ 无法被支配
    :raises SlowTail: 项数上限内未达到截断阈值
    """
    logger.trace("")
    check_bessel_point(point, ("b", "c"))
    sequence = _theta_sequence(point)
    if sequence.growth is GrowthClass.FACTORIAL:
        return _factorial_lhs(point, options)
    return _term_by_term_lhs(point, sequence.over_factorial, options, f"F₂ 左侧 (Θ={sequence.name})")


def f2_rhs(point: ParamPoint, options: OptionBundle) -> EvalResult:
    """F₂ 的右侧：(3.1) 的级数，Pochhammer 比值用 pochhammer_ratio 计算.

    :param point: 需要 μ, ξ, b, c, ν, y, theta
    :type point: ParamPoint
    :param options: 数值选项
    :type options: OptionBundle
    :return: 求和结果
    :rtype: EvalResult
    :raises TruncationUncertain: 无界 Θ 无法被支配
    """
    logger.trace("")
    check_bessel_point(point, ("b", "c"))
    sequence = _theta_sequence(point)
    if sequence.growth is GrowthClass.FACTORIAL:
        return _factorial_rhs(point, options)
    return _series_rhs(point, sequence.over_factorial, options, f"F₂ 右侧 (Θ={sequence.name})")


def f2_pair(point: ParamPoint, options: OptionBundle) -> RoutePair:
    pair = RoutePair(f2_lhs(point, options), f2_rhs(point, options))
    if get_sequence(point.theta).growth is GrowthClass.FACTORIAL:
        return pair.with_note(FACTORIAL_NOTE)
    return pair


# ==================== 推论 ====================
def corollary_pair(point: ParamPoint, inner: InnerFunction, options: OptionBundle,
                   note: str = "") -> RoutePair:
    """带内层函数的 F₂：直接求积、级数右侧，以及可选的逐项求积.

    :param point: 需要 μ, ξ, b, c, ν, y
    :type point: ParamPoint
    :param inner: 内层函数
    :type inner: InnerFunction
    :param options: 数值选项
    :type options: OptionBundle
    :param note: 报告注释
    :type note: str
    :return: 左侧（直接求积）、右侧与逐项路径
    :rtype: RoutePair
    """
    check_bessel_point(point, ("b", "c"))
    logger.debug(f"推论路径，内层 {inner.label}")
    extra: ExtraFactor = inner.extra_factor(point.c, point.xi)
    lhs = integrate(f1_integrand(point, point.b), extra_factor=extra, options=options.quad).as_eval()
    rhs = _series_rhs(point, inner.coefficient, options, f"{inner.label} 右侧")
    pair = RoutePair(lhs, rhs, note=note)
    if options.identity.dual_route:
        alt = _term_by_term_lhs(point, inner.coefficient, options, f"{inner.label} 逐项")
        pair = RoutePair(lhs, rhs, alt, "term_by_term", note)
    return pair


def f3_pair(point: ParamPoint, options: OptionBundle) -> RoutePair:
    """推论 1：内层为 rΨs(e^{−cx^ξ})."""
    logger.trace("")
    require(point, ("psi_spec",))
    return corollary_pair(point, psi_inner(point.psi_spec), options)


def f4_pair(point: ParamPoint, options: OptionBundle) -> RoutePair:
    """推论 2：内层为 rFs(e^{−cx^ξ})，r ≤ s+1."""
    logger.trace("")
    require(point, ("pfq_upper", "pfq_lower"))
    return corollary_pair(point, pfq_inner(point.pfq_upper, point.pfq_lower), options)


def special_case_pair(which: SpecialCase, point: ParamPoint, options: OptionBundle) -> RoutePair:
    """特例 (3.4)–(3.6).

    - Wright_3_4: 内层 0Ψ1[(β₁,B₁)]，即 Wright 函数 φ(B₁, β₁; w)
    - WrightBessel_3_5: 内层 0Ψ1[(γ+1, μ_in)] 取 −w，右侧带 (−1)^k
    - MittagLeffler_3_6: 内层 1Ψ1[(1,1);(β₁,B₁)] = E_{B₁,β₁}(w)

    :param which: 特例编号
    :type which: SpecialCase
    :param point: 参数点
    :type point: ParamPoint
    :param options: 数值选项
    :type options: OptionBundle
    :return: 两侧与逐项路径
    :rtype: RoutePair
    :raises HypothesisViolation: 缺少或不合法的内层参数
    """
    logger.trace(f"{which.value}")
    if which is SpecialCase.WRIGHT_BESSEL_3_5:
        require(point, ("gamma", "inner_mu"))
        require_positive(point, ("inner_mu",))
        spec = FoxWrightSpec.of(lower=[(point.gamma + 1.0, point.inner_mu)])
        return corollary_pair(point, psi_inner(spec, sign=-1.0), options,
                              note="内层自变量取 −e^{−cx^ξ}，右侧级数带 (−1)^k")

    require(point, ("beta1", "big_b1"))
    require_positive(point, ("big_b1",))
    if which is SpecialCase.WRIGHT_3_4:
        spec = FoxWrightSpec.of(lower=[(point.beta1, point.big_b1)])
        return corollary_pair(point, psi_inner(spec), options)
    if which is SpecialCase.MITTAG_LEFFLER_3_6:
        spec = FoxWrightSpec.of(upper=[(1.0, 1.0)], lower=[(point.beta1, point.big_b1)])
        return corollary_pair(point, psi_inner(spec), options,
                              note="E 的级数系数已含 Γ(1+k)/k! = 1，印刷的额外 1/k! 不采用")
    raise HypothesisViolation(f"未知特例: {which}")


__all__ = [
    "SpecialCase",
    "MAX_QUAD_TERMS",
    "FACTORIAL_NOTE",
    "f1_integrand",
    "f1_bound",
    "f1_lhs",
    "f1_rhs",
    "f2_lhs",
    "f2_rhs",
    "f2_pair",
    "corollary_pair",
    "f3_pair",
    "f4_pair",
    "special_case_pair",
]
