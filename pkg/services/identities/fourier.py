# services/identities/fourier.py
"""Fourier 余弦/正弦变换表示模块.

取 μ = η−1、ξ = 1，ν = −1/2 与 ν = 1/2 时 √(xy)J_ν(xy) 分别化为 √(2/π)cos(xy)
与 √(2/π)sin(xy)，于是 (4.1)–(4.6) 都是 F₂ / 推论的特例：

- 余弦族：√(2/π)∫x^{η−1}e^{−(b+ck)x}cos(xy)dx = √2 (b+ck)^{−η} 1Ψ1[(η,2);(1/2,1) | z_k]
- 正弦族：√(2/π)∫x^{η−1}e^{−(b+ck)x}sin(xy)dx = (y/√2)(b+ck)^{−η−1} 1Ψ1[(η+1,2);(3/2,1) | z_k]

其中 z_k = −y²/(4(b+ck)²)。另含 §2 的初等形式 ∫x^{η−1}e^{−ax}{cos,sin}(xy)dx。
"""

import math
from enum import Enum
from typing import Callable, Optional

from loguru import logger

from models.eval_result import EvalMethod, EvalResult
from models.identity_data import GrowthClass, ParamPoint, RoutePair
from models.integrand_data import Envelope, IntegrandSpec, Oscillation
from models.options import OptionBundle
from services.core.errors import HypothesisViolation, TruncationUncertain
from services.foxwright.reductions import one_psi_one_theorem1
from services.identities.hurwitz_sum import shifted_psi_sum
from services.identities.hypotheses import require, require_positive
from services.identities.inner import InnerFunction, pfq_inner, psi_inner
from services.identities.ksum import sum_over_k
from services.identities.sequences import get_sequence
from services.identities.theorems import FACTORIAL_NOTE, MAX_QUAD_TERMS
from services.quad import integrate
from services.specfun.gamma import log_abs_gamma, log_gamma
from services.specfun.hypergeometric import gauss_2f1_eval

Coefficient = Callable[[int], float]

_EPS = 2.220446049250313e-16
_SQRT_2_OVER_PI = math.sqrt(2.0 / math.pi)

SINE_PREFACTOR_NOTE = "正弦族前因子按 y/√2 实现（印刷为 y/√π，与 ν=1/2 的定理 2 不一致）"


class FourierFamily(str, Enum):
    COS = "cos"
    SIN = "sin"


class FourierCase(str, Enum):
    """(4.1)–(4.6)."""

    F4_1 = "4_1"
    F4_2 = "4_2"
    F4_3 = "4_3"
    F4_4 = "4_4"
    F4_5 = "4_5"
    F4_6 = "4_6"


#: 编号 -> (族, 系数来源)
_CASES = {
    FourierCase.F4_1: (FourierFamily.COS, "theta"),
    FourierCase.F4_2: (FourierFamily.SIN, "theta"),
    FourierCase.F4_3: (FourierFamily.COS, "psi"),
    FourierCase.F4_4: (FourierFamily.SIN, "psi"),
    FourierCase.F4_5: (FourierFamily.COS, "pfq"),
    FourierCase.F4_6: (FourierFamily.SIN, "pfq"),
}


def case_family(which: FourierCase) -> FourierFamily:
    return _CASES[which][0]


# ==================== 单项 ====================
def _oscillation(family: FourierFamily, y: float) -> Oscillation:
    return Oscillation.cos(y) if family is FourierFamily.COS else Oscillation.sin(y)


def fourier_integrand(family: FourierFamily, eta: float, a: float, y: float) -> IntegrandSpec:
    """x^{η−1} e^{−ax} {cos, sin}(xy)."""
    return IntegrandSpec(mu=eta - 1.0, xi=1.0, decay=a, oscillation=_oscillation(family, y))


def fourier_bound(family: FourierFamily, eta: float, a: float, y: float) -> float:
    """|∫x^{η−1}e^{−ax}{cos,sin}(xy)dx| 的上界，关于 a 递减."""
    log_bound = log_gamma(eta) - eta * math.log(a)
    if family is FourierFamily.SIN:
        # |sin t| ≤ t
        log_bound = min(log_bound, math.log(y) + log_gamma(eta + 1.0) - (eta + 1.0) * math.log(a))
    return math.exp(log_bound)


def _psi_parameters(family: FourierFamily, eta: float):
    """返回 (σ, ν)."""
    if family is FourierFamily.COS:
        return eta, -0.5
    return eta + 1.0, 0.5


def _rhs_prefactor(family: FourierFamily, y: float) -> float:
    if family is FourierFamily.COS:
        return math.sqrt(2.0)
    return y / math.sqrt(2.0)


# ==================== 两侧 ====================
def fourier_terms_lhs(family: FourierFamily, eta: float, b: float, c: float, y: float,
                      coefficient: Coefficient, options: OptionBundle, label: str) -> EvalResult:
    """√(2/π)·Σ_k c_k ∫x^{η−1}e^{−(b+ck)x}{cos,sin}(xy)dx，逐项求积."""

    def term(k: int) -> Optional[EvalResult]:
        ck = coefficient(k)
        if ck == 0.0:
            return None
        part = integrate(fourier_integrand(family, eta, b + c * k, y), options=options.quad)
        return part.as_eval().scaled(ck * _SQRT_2_OVER_PI)

    def bound(k: int) -> float:
        return abs(coefficient(k)) * _SQRT_2_OVER_PI * fourier_bound(family, eta, b + c * k, y)

    max_k = min(options.identity.max_k, MAX_QUAD_TERMS)
    return sum_over_k(term, bound, options.identity.truncation_rel, max_k, label, EvalMethod.QUADRATURE)


def fourier_direct_lhs(family: FourierFamily, eta: float, b: float, c: float, y: float,
                       inner: InnerFunction, options: OptionBundle) -> EvalResult:
    """√(2/π)·∫x^{η−1}e^{−bx}f(e^{−cx}){cos,sin}(xy)dx，内层因子在节点上计算."""
    part = integrate(fourier_integrand(family, eta, b, y), extra_factor=inner.extra_factor(c, 1.0),
                     options=options.quad)
    return part.as_eval().scaled(_SQRT_2_OVER_PI)


def fourier_factorial_lhs(family: FourierFamily, eta: float, b: float, c: float, y: float,
                          options: OptionBundle) -> EvalResult:
    """Θ(k)=k!：Σ_k e^{−(b+ck)x} = e^{−(b−c)x}/(e^{cx}−1)."""
    if b < c:
        raise TruncationUncertain(f"Θ(k)=k! 的左侧要求 b ≥ c，收到 b = {b}, c = {c}")
    spec = IntegrandSpec(mu=eta - 1.0, xi=1.0, decay=b - c, oscillation=_oscillation(family, y),
                         envelope=Envelope.BOSE_FACTOR, bose_scale=c)
    return integrate(spec, options=options.quad).as_eval().scaled(_SQRT_2_OVER_PI)


def fourier_rhs(family: FourierFamily, eta: float, b: float, c: float, y: float,
                coefficient: Coefficient, options: OptionBundle, label: str) -> EvalResult:
    """Σ_k c_k·prefactor·(b+ck)^{−σ}·1Ψ1[(σ,2);(ν+1,1) | −y²/(4(b+ck)²)]."""
    sigma, nu = _psi_parameters(family, eta)
    prefactor = _rhs_prefactor(family, y)

    def term(k: int) -> Optional[EvalResult]:
        ck = coefficient(k)
        if ck == 0.0:
            return None
        a_k = b + c * k
        psi = one_psi_one_theorem1(sigma, 2.0, nu, -(y * y) / (4.0 * a_k * a_k), options.series)
        return psi.scaled(ck * prefactor * math.exp(-sigma * math.log(a_k)))

    def bound(k: int) -> float:
        return abs(coefficient(k)) * _SQRT_2_OVER_PI * fourier_bound(family, eta, b + c * k, y)

    return sum_over_k(term, bound, options.identity.truncation_rel, options.identity.max_k, label)


def fourier_factorial_rhs(family: FourierFamily, eta: float, b: float, c: float, y: float,
                          options: OptionBundle) -> EvalResult:
    sigma, nu = _psi_parameters(family, eta)
    return shifted_psi_sum(sigma, nu, y, b, c, options.series).scaled(_rhs_prefactor(family, y))


def _inner_for(kind: str, point: ParamPoint) -> InnerFunction:
    if kind == "psi":
        require(point, ("psi_spec",))
        return psi_inner(point.psi_spec)
    require(point, ("pfq_upper", "pfq_lower"))
    return pfq_inner(point.pfq_upper, point.pfq_lower)


def inner_fourier_pair(family: FourierFamily, eta: float, b: float, c: float, y: float,
                       inner: InnerFunction, options: OptionBundle) -> RoutePair:
    """带内层函数的 Fourier 表示：直接求积、级数右侧与可选的逐项求积."""
    lhs = fourier_direct_lhs(family, eta, b, c, y, inner, options)
    rhs = fourier_rhs(family, eta, b, c, y, inner.coefficient, options, f"{inner.label} 右侧")
    if not options.identity.dual_route:
        return RoutePair(lhs, rhs)
    alt = fourier_terms_lhs(family, eta, b, c, y, inner.coefficient, options, f"{inner.label} 逐项")
    return RoutePair(lhs, rhs, alt, "term_by_term")


def fourier_pair(which: FourierCase, point: ParamPoint, options: OptionBundle) -> RoutePair:
    """(4.1)–(4.6) 的两侧.

    :param which: 编号
    :type which: FourierCase
    :param point: 需要 η, b, c, y 及 theta / psi_spec / pfq 参数
    :type point: ParamPoint
    :param options: 数值选项
    :type options: OptionBundle
    :return: 两侧（推论型还含逐项路径）
    :rtype: RoutePair
    :raises HypothesisViolation: 参数不满足 y, η, b, c > 0
    :raises TruncationUncertain: 无界 Θ 无法被支配
    """
    logger.trace(f"{which.value}")
    require(point, ("eta", "b", "c", "y"))
    require_positive(point, ("eta", "b", "c", "y"))
    family, kind = _CASES[which]
    eta, b, c, y = point.eta, point.b, point.c, point.y

    if kind == "theta":
        require(point, ("theta",))
        sequence = get_sequence(point.theta)
        if sequence.growth is GrowthClass.UNKNOWN:
            raise TruncationUncertain(f"Θ 序列 {sequence.name} 的增长类别未知，无法截断")
        if sequence.growth is GrowthClass.FACTORIAL:
            pair = RoutePair(fourier_factorial_lhs(family, eta, b, c, y, options),
                             fourier_factorial_rhs(family, eta, b, c, y, options), note=FACTORIAL_NOTE)
        else:
            label = f"({which.value}) Θ={sequence.name}"
            pair = RoutePair(
                fourier_terms_lhs(family, eta, b, c, y, sequence.over_factorial, options, label),
                fourier_rhs(family, eta, b, c, y, sequence.over_factorial, options, label),
            )
    else:
        pair = inner_fourier_pair(family, eta, b, c, y, _inner_for(kind, point), options)

    if family is FourierFamily.SIN:
        pair = pair.with_note(SINE_PREFACTOR_NOTE)
    return pair


# ==================== §2 初等形式 ====================
def elementary_closed_form(family: FourierFamily, eta: float, a: float, y: float) -> EvalResult:
    """Γ(η)(a²+y²)^{−η/2}{cos,sin}(η·arctan(y/a)).

    正弦族允许 −1 < η ≤ 0：η = 0 时取极限 arctan(y/a)。

    :raises HypothesisViolation: 余弦族 η ≤ 0 或正弦族 η ≤ −1
    """
    theta = math.atan2(y, a)
    if family is FourierFamily.COS:
        if not eta > 0.0:
            raise HypothesisViolation(f"余弦形式要求 η > 0，收到 {eta}")
        log_mag = log_gamma(eta) - 0.5 * eta * math.log(a * a + y * y)
        value = math.exp(log_mag) * math.cos(eta * theta)
        return EvalResult(value, 16.0 * _EPS * math.exp(log_mag), 1, EvalMethod.ELEMENTARY)

    if not eta > -1.0:
        raise HypothesisViolation(f"正弦形式要求 η > −1，收到 {eta}")
    if eta == 0.0:
        return EvalResult(theta, 4.0 * _EPS * abs(theta), 1, EvalMethod.ELEMENTARY)
    lg, sign = log_abs_gamma(eta)
    log_mag = lg - 0.5 * eta * math.log(a * a + y * y)
    value = sign * math.exp(log_mag) * math.sin(eta * theta)
    return EvalResult(value, 16.0 * _EPS * math.exp(log_mag), 1, EvalMethod.ELEMENTARY)


def elementary_hypergeometric(family: FourierFamily, eta: float, a: float, y: float) -> EvalResult:
    """同一积分的 2F1 形式.

    - 余弦：Γ(η)/a^η · 2F1(η/2, η/2+1/2; 1/2; −y²/a²)
    - 正弦：yΓ(η+1)/a^{η+1} · 2F1(η/2+1/2, η/2+1; 3/2; −y²/a²)
    """
    x = -(y * y) / (a * a)
    if family is FourierFamily.COS:
        log_scale = log_gamma(eta) - eta * math.log(a)
        inner = gauss_2f1_eval(0.5 * eta, 0.5 * eta + 0.5, 0.5, x)
        scale = math.exp(log_scale)
    else:
        log_scale = math.log(y) + log_gamma(eta + 1.0) - (eta + 1.0) * math.log(a)
        inner = gauss_2f1_eval(0.5 * eta + 0.5, 0.5 * eta + 1.0, 1.5, x)
        scale = math.exp(log_scale)
    value = scale * inner.value
    return EvalResult(value, scale * inner.abs_err_est + 4.0 * _EPS * abs(value), inner.work,
                      EvalMethod.REDUCED_2F1)


def elementary_pair(family: FourierFamily, point: ParamPoint, options: OptionBundle) -> RoutePair:
    """§2：求积左侧、arctan 闭式右侧、2F1 形式作为第三条路径.

    :param family: cos / sin
    :type family: FourierFamily
    :param point: 需要 η, a, y
    :type point: ParamPoint
    :param options: 数值选项
    :type options: OptionBundle
    :return: 三条路径
    :rtype: RoutePair
    """
    logger.trace(f"{family.value}")
    require(point, ("eta", "a", "y"))
    require_positive(point, ("a", "y"))
    eta, a, y = point.eta, point.a, point.y
    rhs = elementary_closed_form(family, eta, a, y)
    lhs = integrate(fourier_integrand(family, eta, a, y), options=options.quad).as_eval()
    return RoutePair(lhs, rhs, elementary_hypergeometric(family, eta, a, y), "gauss_2f1")


__all__ = [
    "FourierFamily",
    "FourierCase",
    "SINE_PREFACTOR_NOTE",
    "case_family",
    "fourier_integrand",
    "fourier_bound",
    "fourier_terms_lhs",
    "fourier_direct_lhs",
    "fourier_factorial_lhs",
    "fourier_rhs",
    "fourier_factorial_rhs",
    "inner_fourier_pair",
    "fourier_pair",
    "elementary_closed_form",
    "elementary_hypergeometric",
    "elementary_pair",
]
