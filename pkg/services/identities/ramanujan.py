# services/identities/ramanujan.py
"""Ramanujan 积分、Mellin 形式与闭式求和模块.

φ_c(m, n) = ∫_0^∞ x^m cos(πnx)/(e^{2πx}−1) dx
φ_s(m, n) = ∫_0^∞ x^m sin(πnx)/(e^{2πx}−1) dx

取 Θ(k) = k! 后左侧的 Bose 因子展开为 Σ_k e^{−2π(1+k)x}，右侧化为带幂权的
1Ψ1 求和（见 hurwitz_sum）；m = 1 时又可与 Hurwitz ζ 的 Mellin 形式和初等闭式比较。
"""

import math
from enum import Enum

from loguru import logger

from models.eval_result import EvalMethod, EvalResult
from models.identity_data import ParamPoint, RoutePair
from models.integrand_data import Envelope, IntegrandSpec, Oscillation
from models.options import OptionBundle
from services.core.errors import ConvergenceError, HypothesisViolation
from services.identities.fourier import (
    SINE_PREFACTOR_NOTE,
    FourierFamily,
    fourier_direct_lhs,
    fourier_rhs,
    fourier_terms_lhs,
)
from services.identities.hurwitz_sum import shifted_psi_sum
from services.identities.hypotheses import check_moment_point, require, require_positive
from services.identities.inner import InnerFunction, pfq_inner, psi_inner
from services.identities.theorems import FACTORIAL_NOTE
from services.quad import integrate, integrate_bose_moment
from services.specfun.gamma import log_gamma
from services.specfun.zeta import hurwitz_zeta, trigamma

_EPS = 2.220446049250313e-16
_TWO_PI = 2.0 * math.pi
_SQRT_PI = math.sqrt(math.pi)
_IMAG_RESIDUE = 1e-12

INNER_COEFFICIENT_NOTE = "印刷的 k 求和缺少 1/k!，按内层级数系数实现"
POCHHAMMER_NOTE = "“Γ(α_j)_k” 按 Pochhammer 符号 (α_j)_k 实现"


class RamanujanCase(str, Enum):
    """(5.1)–(5.6)."""

    R5_1 = "5_1"
    R5_2 = "5_2"
    R5_3 = "5_3"
    R5_4 = "5_4"
    R5_5 = "5_5"
    R5_6 = "5_6"


class MellinFamily(str, Enum):
    COS = "cos"
    SIN = "sin"


_FAMILIES = {
    RamanujanCase.R5_1: FourierFamily.COS,
    RamanujanCase.R5_2: FourierFamily.SIN,
    RamanujanCase.R5_3: FourierFamily.COS,
    RamanujanCase.R5_4: FourierFamily.SIN,
    RamanujanCase.R5_5: FourierFamily.COS,
    RamanujanCase.R5_6: FourierFamily.SIN,
}


# ==================== 闭式 ====================
def inverse_square_minus_csch_square(u: float) -> float:
    """1/u² − csch²u，u > 0；小 u 用级数，大 u 避免 sinh 溢出.

    >>> round(inverse_square_minus_csch_square(1e-3), 12)
    0.333333266667
    """
    if u < 0.05:
        u2 = u * u
        return 1.0 / 3.0 - u2 / 15.0 + 2.0 * u2 * u2 / 189.0 - u2 ** 3 / 675.0 + 2.0 * u2 ** 4 / 10395.0
    if u > 350.0:
        return 1.0 / (u * u) - 4.0 * math.exp(-2.0 * u)
    s = math.sinh(u)
    return 1.0 / (u * u) - 1.0 / (s * s)


def _closed(value: float, scale_err: float = 0.0) -> EvalResult:
    return EvalResult(value, 16.0 * _EPS * abs(value) + scale_err, 1, EvalMethod.ELEMENTARY)


def cosine_moment_closed_form(n: float) -> EvalResult:
    """φ_c(1, n) = 1/(2π²n²) + 1/(4(1−cosh πn)) = (1/u² − csch²u)/8，u = πn/2."""
    return _closed(0.125 * inverse_square_minus_csch_square(0.5 * math.pi * n))


def sine_moment_closed_form(n: float) -> EvalResult:
    """φ_s(1, n) = −Im ψ′(1+in/2)/(4π²)."""
    value = -trigamma(complex(1.0, 0.5 * n)).imag / (4.0 * math.pi ** 2)
    return _closed(value, 1e-12 / (4.0 * math.pi ** 2))


def sum_5_7_closed_form(n: float) -> EvalResult:
    """√π(2/(πn²) + π/(1−cosh πn)) = √π·(π/2)·(1/u² − csch²u)."""
    return _closed(_SQRT_PI * 0.5 * math.pi * inverse_square_minus_csch_square(0.5 * math.pi * n))


def sum_5_8_closed_form(n: float) -> EvalResult:
    """2i/(√π n)·{ψ′(1+in/2) − ψ′(1−in/2)} = −4 Im ψ′(1+in/2)/(√π n)."""
    scale = 4.0 / (_SQRT_PI * n)
    value = -scale * trigamma(complex(1.0, 0.5 * n)).imag
    return _closed(value, scale * 1e-12)


# ==================== Mellin ====================
def mellin_rhs(family: MellinFamily, mu: float, a: float, b: float) -> EvalResult:
    """Γ(μ)/(2a^μ)·{ζ(μ,1+ib/a) ± ζ(μ,1−ib/a)}，正弦取 i/2 倍差.

    :raises ConvergenceError: 组合后的虚部残差超过 1e-12
    """
    scale = math.exp(log_gamma(mu) - mu * math.log(a))
    plus = hurwitz_zeta(mu, complex(1.0, b / a))
    minus = hurwitz_zeta(mu, complex(1.0, -b / a))
    if family is MellinFamily.COS:
        combined = 0.5 * scale * (plus + minus)
    else:
        combined = 0.5j * scale * (plus - minus)
    if abs(combined.imag) > _IMAG_RESIDUE * max(1.0, abs(combined.real)):
        raise ConvergenceError(f"Mellin {family.value} 形式的虚部残差 {combined.imag:.3e} 超过 1e-12")
    value = combined.real
    return EvalResult(value, 1e-12 * scale + 4.0 * _EPS * abs(value), 2, EvalMethod.ELEMENTARY)


def mellin_lhs(family: MellinFamily, mu: float, a: float, b: float, options: OptionBundle) -> EvalResult:
    """∫x^{μ−1}{cos,sin}(bx)/(e^{ax}−1)dx."""
    oscillation = Oscillation.cos(b) if family is MellinFamily.COS else Oscillation.sin(b)
    spec = IntegrandSpec(mu=mu - 1.0, xi=1.0, decay=0.0, oscillation=oscillation,
                         envelope=Envelope.BOSE_FACTOR, bose_scale=a)
    return integrate(spec, options=options.quad).as_eval()


def mellin_pair(family: MellinFamily, point: ParamPoint, options: OptionBundle) -> RoutePair:
    """Mellin 形式：求积左侧与 Hurwitz ζ 右侧.

    :param family: cos / sin
    :type family: MellinFamily
    :param point: 需要 μ > 1, a > 0, b > 0
    :type point: ParamPoint
    :param options: 数值选项
    :type options: OptionBundle
    :return: 两侧
    :rtype: RoutePair
    :raises HypothesisViolation: μ ≤ 1 或 a, b 非正
    """
    logger.trace(f"{family.value}")
    require(point, ("mu", "a", "b"))
    if not point.mu > 1.0:
        raise HypothesisViolation(f"Mellin 形式要求 μ > 1，收到 {point.mu}")
    require_positive(point, ("a", "b"))
    return RoutePair(mellin_lhs(family, point.mu, point.a, point.b, options),
                     mellin_rhs(family, point.mu, point.a, point.b))


def moment_pair(family: MellinFamily, point: ParamPoint, options: OptionBundle) -> RoutePair:
    """(1.7a)/(1.7b)：m = 1 的 Bose 矩积分与初等 / 三伽马闭式，Mellin 形式作第三条路径."""
    logger.trace(f"{family.value}")
    require(point, ("n",))
    require_positive(point, ("n",))
    n = point.n
    if family is MellinFamily.COS:
        lhs = integrate_bose_moment(1.0, Oscillation.cos(math.pi * n), options=options.quad)
        rhs = cosine_moment_closed_form(n)
    else:
        lhs = integrate_bose_moment(1.0, Oscillation.sin(math.pi * n), options=options.quad)
        rhs = sine_moment_closed_form(n)
    alt = mellin_rhs(family, 2.0, _TWO_PI, math.pi * n)
    return RoutePair(lhs.as_eval(), rhs, alt, "hurwitz_mellin")


# ==================== (5.1)–(5.8) ====================
def _log_moment_prefactor(family: FourierFamily, m: int, n: float) -> float:
    """ln[√π/(2π)^{m+1}]，正弦再乘 n/4."""
    log_pref = 0.5 * math.log(math.pi) - (m + 1.0) * math.log(_TWO_PI)
    if family is FourierFamily.SIN:
        log_pref += math.log(n) - math.log(4.0)
    return log_pref


def moment_series(family: FourierFamily, m: int, n: float, options: OptionBundle) -> EvalResult:
    """(5.1)/(5.2) 右侧.

    - 余弦：√π/(2π)^{m+1}·Σ(1+k)^{−m−1}·1Ψ1[(m+1,2);(1/2,1) | −n²/(16(1+k)²)]
    - 正弦：√π n/(4(2π)^{m+1})·Σ(1+k)^{−m−2}·1Ψ1[(m+2,2);(3/2,1) | −n²/(16(1+k)²)]
    """
    if family is FourierFamily.COS:
        total = shifted_psi_sum(m + 1.0, -0.5, 0.5 * n, 1.0, 1.0, options.series)
    else:
        total = shifted_psi_sum(m + 2.0, 0.5, 0.5 * n, 1.0, 1.0, options.series)
    return total.scaled(math.exp(_log_moment_prefactor(family, m, n)))


def _inner_for(which: RamanujanCase, point: ParamPoint) -> InnerFunction:
    if which in (RamanujanCase.R5_3, RamanujanCase.R5_4):
        require(point, ("psi_spec",))
        return psi_inner(point.psi_spec)
    require(point, ("pfq_upper", "pfq_lower"))
    return pfq_inner(point.pfq_upper, point.pfq_lower)


def ramanujan_pair(which: RamanujanCase, point: ParamPoint, options: OptionBundle) -> RoutePair:
    """(5.1)–(5.6) 的两侧.

    (5.3)–(5.6) 按 (4.3)–(4.6) 在 b = c = 2π、η = m+1、y = πn 处计算，再乘 √(π/2)。

    :param which: 编号
    :type which: RamanujanCase
    :param point: 需要整数 m ≥ 1、n > 0，(5.3)–(5.6) 还需要内层参数
    :type point: ParamPoint
    :param options: 数值选项
    :type options: OptionBundle
    :return: 两侧（内层型还含逐项路径）
    :rtype: RoutePair
    """
    logger.trace(f"{which.value}")
    check_moment_point(point)
    family = _FAMILIES[which]
    m, n = int(point.m), point.n

    if which in (RamanujanCase.R5_1, RamanujanCase.R5_2):
        oscillation = Oscillation.cos(math.pi * n) if family is FourierFamily.COS else Oscillation.sin(math.pi * n)
        lhs = integrate_bose_moment(float(m), oscillation, options=options.quad).as_eval()
        return RoutePair(lhs, moment_series(family, m, n, options), note=FACTORIAL_NOTE)

    inner = _inner_for(which, point)
    eta, y = m + 1.0, math.pi * n
    back = math.sqrt(0.5 * math.pi)
    lhs = fourier_direct_lhs(family, eta, _TWO_PI, _TWO_PI, y, inner, options).scaled(back)
    rhs = fourier_rhs(family, eta, _TWO_PI, _TWO_PI, y, inner.coefficient, options,
                      f"({which.value}) 右侧").scaled(back)
    notes = [INNER_COEFFICIENT_NOTE]
    if which in (RamanujanCase.R5_5, RamanujanCase.R5_6):
        notes.append(POCHHAMMER_NOTE)
    if family is FourierFamily.SIN:
        notes.append(SINE_PREFACTOR_NOTE)
    pair = RoutePair(lhs, rhs, note="; ".join(notes))
    if options.identity.dual_route:
        alt = fourier_terms_lhs(family, eta, _TWO_PI, _TWO_PI, y, inner.coefficient, options,
                                f"({which.value}) 逐项").scaled(back)
        pair = RoutePair(lhs, rhs, alt, "term_by_term", pair.note)
    return pair


def sum_5_7(point: ParamPoint, options: OptionBundle) -> RoutePair:
    """Σ(1+k)^{−2}·1Ψ1[(2,2);(1/2,1) | −n²/(16(1+k)²)] 与其闭式."""
    logger.trace("")
    require(point, ("n",))
    require_positive(point, ("n",))
    lhs = shifted_psi_sum(2.0, -0.5, 0.5 * point.n, 1.0, 1.0, options.series)
    return RoutePair(lhs, sum_5_7_closed_form(point.n), note=FACTORIAL_NOTE)


def sum_5_8(point: ParamPoint, options: OptionBundle) -> RoutePair:
    """Σ(1+k)^{−3}·1Ψ1[(3,2);(3/2,1) | −n²/(16(1+k)²)] 与其三伽马闭式."""
    logger.trace("")
    require(point, ("n",))
    require_positive(point, ("n",))
    lhs = shifted_psi_sum(3.0, 0.5, 0.5 * point.n, 1.0, 1.0, options.series)
    return RoutePair(lhs, sum_5_8_closed_form(point.n), note=FACTORIAL_NOTE)


__all__ = [
    "RamanujanCase",
    "MellinFamily",
    "INNER_COEFFICIENT_NOTE",
    "POCHHAMMER_NOTE",
    "inverse_square_minus_csch_square",
    "cosine_moment_closed_form",
    "sine_moment_closed_form",
    "sum_5_7_closed_form",
    "sum_5_8_closed_form",
    "mellin_rhs",
    "mellin_lhs",
    "mellin_pair",
    "moment_pair",
    "moment_series",
    "ramanujan_pair",
    "sum_5_7",
    "sum_5_8",
]
