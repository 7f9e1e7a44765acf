# services/foxwright/reductions.py
"""pΨq 的具名特例与约化.

- wright_phi: Φ(α, β, z) = 0Ψ1[; (β, α) | z]
- wright_bessel: J_γ^μ(−z) 记号下的 Φ(μ, γ+1, −z)
- mittag_leffler: E_{α,β}(z) = 1Ψ1[(1,1); (β, α) | z]
- p_f_q: 广义超几何函数 pFq
- one_psi_one_theorem1: 1Ψ1[(σ, 2/ξ); (ν+1, 1) | z]，ξ = 1 时经 2F1 约化，ξ = 2 时经 Kummer 变换
"""

import math
from typing import Optional, Sequence

import mpmath
from loguru import logger

from models.eval_result import EvalMethod, EvalResult
from models.fox_wright_data import FoxWrightSpec
from models.options import SeriesOptions
from services.core.errors import DivergentSeries, DomainError, DomainRejected
from services.foxwright.series import fox_wright_eval
from services.specfun.gamma import gamma_fn, is_gamma_pole, log_abs_gamma, rgamma
from services.specfun.hypergeometric import gauss_2f1_eval, hypergeometric_series

_EPS = 2.220446049250313e-16
_GUARD_DIGITS = 20


def wright_phi(alpha: float, beta: float, z: float,
               options: Optional[SeriesOptions] = None) -> EvalResult:
    """Wright 函数 Φ(α, β, z) = Σ z^k / (k! Γ(β + αk)).

    :param alpha: α > 0
    :type alpha: float
    :param beta: β
    :type beta: float
    :param z: 自变量
    :type z: float
    :return: 求值结果
    :rtype: EvalResult
    :raises DomainError: α ≤ 0
    """
    if not alpha > 0.0:
        raise DomainError(f"wright_phi 要求 α > 0，收到 {alpha}")
    return fox_wright_eval(FoxWrightSpec.of(lower=[(beta, alpha)]), z, options)


def wright_bessel(mu: float, gamma_ord: float, z: float,
                  options: Optional[SeriesOptions] = None) -> EvalResult:
    """Wright 广义 Bessel 函数 J_γ^μ(−z) = Φ(μ, γ+1, −z).

    :param mu: μ > 0
    :type mu: float
    :param gamma_ord: γ
    :type gamma_ord: float
    :param z: 自变量，z ≥ 0
    :type z: float
    :return: 求值结果
    :rtype: EvalResult
    :raises DomainError: μ ≤ 0 或 z < 0
    """
    if not mu > 0.0:
        raise DomainError(f"wright_bessel 要求 μ > 0，收到 {mu}")
    if not z >= 0.0:
        raise DomainError(f"wright_bessel 要求 z ≥ 0，收到 {z}")
    return wright_phi(mu, gamma_ord + 1.0, -z, options)


def mittag_leffler(alpha: float, beta: float, z: float,
                   options: Optional[SeriesOptions] = None) -> EvalResult:
    """Mittag-Leffler 函数 E_{α,β}(z) = Σ z^k / Γ(β + αk).

    >>> round(mittag_leffler(1.0, 1.0, 1.0).value, 10)
    2.7182818285
    """
    if not alpha > 0.0:
        raise DomainError(f"mittag_leffler 要求 α > 0，收到 {alpha}")
    return fox_wright_eval(FoxWrightSpec.of(upper=[(1.0, 1.0)], lower=[(beta, alpha)]), z, options)


# ==================== pFq ====================
def _gauss_sum_at_one(a: float, b: float, c: float) -> EvalResult:
    """2F1(a, b; c; 1) = Γ(c)Γ(c−a−b) / (Γ(c−a)Γ(c−b))，c−a−b > 0."""
    lg_c, s_c = log_abs_gamma(c)
    lg_s, s_s = log_abs_gamma(c - a - b)
    value = s_c * s_s * math.exp(lg_c + lg_s) * rgamma(c - a) * rgamma(c - b)
    return EvalResult(value, 16.0 * _EPS * abs(value), 1, EvalMethod.ELEMENTARY)


def _mp_hyper(upper: Sequence[float], lower: Sequence[float], z: float, digits: int) -> EvalResult:
    with mpmath.workdps(digits):
        value = float(mpmath.hyper(list(upper), list(lower), z))
    return EvalResult(value, 4.0 * _EPS * abs(value), 1, EvalMethod.EXTENDED_SERIES)


def p_f_q(upper: Sequence[float], lower: Sequence[float], z: float,
          options: Optional[SeriesOptions] = None) -> EvalResult:
    """广义超几何函数 pFq(a; b; z) = Σ Π(a_j)_k / Π(b_j)_k · z^k/k!.

    收敛条件：p ≤ q 处处收敛；p = q+1 时 |z| < 1，或 |z| = 1 且参数余量
    ω = Σb_j − Σa_j > 0；p > q+1 只允许截断（某个 a_j 为非正整数）的多项式。

    :param upper: 上参数 a_j
    :type upper: Sequence[float]
    :param lower: 下参数 b_j，不能为非正整数
    :type lower: Sequence[float]
    :param z: 自变量
    :type z: float
    :param options: 级数选项
    :type options: Optional[SeriesOptions]
    :return: 求值结果
    :rtype: EvalResult
    :raises DomainError: 下参数为非正整数
    :raises DomainRejected: z 不满足收敛条件
    """
    options = options or SeriesOptions()
    upper = [float(a) for a in upper]
    lower = [float(b) for b in lower]
    for b in lower:
        if is_gamma_pole(b):
            raise DomainError(f"pFq 的下参数不能为非正整数: {b}")
    p, q = len(upper), len(lower)
    terminating = any(is_gamma_pole(a) for a in upper)

    if not terminating:
        if p > q + 1:
            raise DivergentSeries(f"{p}F{q} 在 p > q+1 时只在 z = 0 处收敛")
        if p == q + 1:
            omega = math.fsum(lower) - math.fsum(upper)
            if abs(z) > 1.0:
                raise DomainRejected(f"{p}F{q} 要求 |z| ≤ 1，收到 {z}")
            if abs(z) == 1.0:
                if not omega > 0.0:
                    raise DomainRejected(f"{p}F{q} 在 |z| = 1 处要求 ω > 0，收到 ω = {omega:g}")
                if p == 2 and z == 1.0:
                    return _gauss_sum_at_one(upper[0], upper[1], lower[0])
                if not (p == 2 and z == -1.0):
                    return _mp_hyper(upper, lower, z, _GUARD_DIGITS + 10)

    if p == 2 and q == 1 and z < 1.0:
        return gauss_2f1_eval(upper[0], upper[1], lower[0], z, options.max_terms)

    s = hypergeometric_series(upper, lower, z, options.max_terms, options.rel_stop)
    cancellation = s.cancellation
    if options.extended_enabled and cancellation > options.extended_trigger:
        logger.debug(f"{p}F{q} 在 z={z:g} 处抵消因子 {cancellation:.3g}，改用扩展精度")
        digits = _GUARD_DIGITS + int(math.ceil(math.log10(cancellation))) \
            if math.isfinite(cancellation) else options.extended_max_dps
        return _mp_hyper(upper, lower, z, min(digits, options.extended_max_dps))
    abs_err = s.abs_err
    if cancellation > options.cancellation_limit:
        abs_err *= min(cancellation, 1.0 / _EPS)
    return EvalResult(s.value, abs_err, s.terms, EvalMethod.DIRECT_SERIES)


# ==================== 定理 1 的 1Ψ1 ====================
def theorem1_spec(sigma: float, two_over_xi: float, nu: float) -> FoxWrightSpec:
    """1Ψ1[(σ, 2/ξ); (ν+1, 1)]."""
    return FoxWrightSpec.of(upper=[(sigma, two_over_xi)], lower=[(nu + 1.0, 1.0)])


def one_psi_one_theorem1(sigma: float, two_over_xi: float, nu: float, z: float,
                         options: Optional[SeriesOptions] = None) -> EvalResult:
    """计算 1Ψ1[(σ, 2/ξ); (ν+1, 1) | z]，z ≤ 0.

    - 2/ξ = 2（ξ = 1）：Γ(σ+2k) = 4^k (σ/2)_k ((σ+1)/2)_k Γ(σ)，得到
      Γ(σ)/Γ(ν+1)·2F1(σ/2, (σ+1)/2; ν+1; 4z)，对全部 z ≤ 0 有效
    - 2/ξ = 1（ξ = 2）且 z < 0：Kummer 变换
      Γ(σ)/Γ(ν+1)·e^z·1F1(ν+1−σ; ν+1; −z)，避免交错求和
    - 其余：直接级数（Δ = 1 − 2/ξ > −1 时处处收敛）

    :param sigma: σ > 0
    :type sigma: float
    :param two_over_xi: 2/ξ
    :type two_over_xi: float
    :param nu: ν > −1
    :type nu: float
    :param z: 自变量，z ≤ 0
    :type z: float
    :param options: 级数选项
    :type options: Optional[SeriesOptions]
    :return: 求值结果，method 标明实际路径
    :rtype: EvalResult
    :raises DomainError: σ ≤ 0、ν ≤ −1 或 z > 0
    :raises DivergentSeries: 2/ξ > 2（ξ < 1，Δ < −1）
    """
    options = options or SeriesOptions()
    if not sigma > 0.0:
        raise DomainError(f"σ 必须为正，收到 {sigma}")
    if not nu > -1.0:
        raise DomainError(f"ν 必须大于 −1，收到 {nu}")
    if z > 0.0:
        raise DomainError(f"one_psi_one_theorem1 只支持 z ≤ 0，收到 {z}")
    if two_over_xi > 2.0:
        raise DivergentSeries(
            f"2/ξ = {two_over_xi:g} > 2 时 Δ < −1，级数发散；右侧只对 ξ ≥ 1 有定义"
        )

    prefactor = gamma_fn(sigma) * rgamma(nu + 1.0)
    if z == 0.0:
        return EvalResult(prefactor, 4.0 * _EPS * abs(prefactor), 1, EvalMethod.DIRECT_SERIES)

    if two_over_xi == 2.0:
        inner = gauss_2f1_eval(0.5 * sigma, 0.5 * (sigma + 1.0), nu + 1.0, 4.0 * z, options.max_terms)
        value = prefactor * inner.value
        abs_err = abs(prefactor) * inner.abs_err_est + 4.0 * _EPS * abs(value)
        return EvalResult(value, abs_err, inner.work, EvalMethod.REDUCED_2F1)

    if two_over_xi == 1.0:
        s = hypergeometric_series((nu + 1.0 - sigma,), (nu + 1.0,), -z, options.max_terms, options.rel_stop)
        scale = prefactor * math.exp(z)
        value = scale * s.value
        abs_err = abs(scale) * s.abs_err + 4.0 * _EPS * abs(value)
        return EvalResult(value, abs_err, s.terms, EvalMethod.REDUCED_KUMMER)

    return fox_wright_eval(theorem1_spec(sigma, two_over_xi, nu), z, options)


__all__ = [
    "wright_phi",
    "wright_bessel",
    "mittag_leffler",
    "p_f_q",
    "theorem1_spec",
    "one_psi_one_theorem1",
]
