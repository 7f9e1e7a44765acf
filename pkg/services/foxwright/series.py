# services/foxwright/series.py
"""pΨq 级数求值.

- fox_wright_eval: 标量 z，对数空间逐项求和并跟踪符号；抵消严重时用 mpmath 扩展精度重求和
- fox_wright_coefficients / fox_wright_array: 数组自变量，供求积节点上的内层函数使用
"""

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import mpmath
import numpy as np
from loguru import logger

from models.eval_result import EvalMethod, EvalResult
from models.fox_wright_data import FoxWrightSpec
from models.options import SeriesOptions
from services.core.errors import ConvergenceError, GammaPole
from services.foxwright.classifier import check_admissible, classify, on_boundary, ratio_limit
from services.specfun.gamma import is_gamma_pole, log_abs_gamma, log_gamma

_EPS = 2.220446049250313e-16
_LOG_OVERFLOW = 700.0
_GUARD_DIGITS = 20
_BOUNDARY_HEAD = 32
_BOUNDARY_DPS = 30


class _TermOverflow(Exception):
    """某一项超出 binary64 范围."""


@dataclass(frozen=True)
class _PartialSum:
    total: float
    abs_total: float
    round_err: float
    trunc_err: float
    terms: int

    @property
    def cancellation(self) -> float:
        if self.total == 0.0:
            return math.inf if self.abs_total > 0.0 else 1.0
        return self.abs_total / abs(self.total)


def _first_safe_index(spec: FoxWrightSpec) -> int:
    """此下标之后所有 Γ 参数都为正，不会再遇到极点或零项."""
    k_safe = 0
    for pp in spec.upper + spec.lower:
        if pp.stretch > 0.0 and pp.shift <= 0.0:
            k_safe = max(k_safe, int(math.floor(-pp.shift / pp.stretch)) + 1)
    return k_safe


def _log_coefficient(spec: FoxWrightSpec, k: int) -> Tuple[float, int]:
    """ln|ΠΓ(α_j+kA_j)/ΠΓ(β_j+kB_j)/k!| 与符号；下参数极点处符号为 0."""
    lg = -log_gamma(k + 1.0)
    sign = 1
    for pp in spec.upper:
        arg = pp.argument(k)
        if is_gamma_pole(arg):
            raise GammaPole(f"上参数 Γ({arg:g}) 在第 {k} 项处为极点")
        part, s = log_abs_gamma(arg)
        lg += part
        sign *= s
    for pp in spec.lower:
        arg = pp.argument(k)
        if is_gamma_pole(arg):
            return -math.inf, 0
        part, s = log_abs_gamma(arg)
        lg -= part
        sign *= s
    return lg, sign


def _log_term(spec: FoxWrightSpec, k: int, log_abs_z: float, negative: bool) -> Tuple[float, int]:
    lg, sign = _log_coefficient(spec, k)
    if sign == 0:
        return lg, 0
    if negative and k % 2:
        sign = -sign
    return lg + k * log_abs_z, sign


def _direct_sum(spec: FoxWrightSpec, z: float, limit: float, options: SeriesOptions) -> _PartialSum:
    log_abs_z = math.log(abs(z))
    negative = z < 0.0
    k_safe = _first_safe_index(spec)

    total = 0.0
    abs_total = 0.0
    round_err = 0.0
    prev_mag: Optional[float] = None
    decreasing = 0
    for k in range(options.max_terms):
        lg, sign = _log_term(spec, k, log_abs_z, negative)
        mag = 0.0
        if sign != 0:
            if lg > _LOG_OVERFLOW:
                raise _TermOverflow(k)
            mag = math.exp(lg)
            total += sign * mag
            abs_total += mag
            round_err += mag * (4.0 + abs(lg))
        if prev_mag is not None:
            decreasing = decreasing + 1 if mag < prev_mag or mag == 0.0 else 0
        prev_mag = mag

        if (k >= k_safe and decreasing >= options.decreasing_run
                and mag <= options.rel_stop * abs(total)):
            next_lg, next_sign = _log_term(spec, k + 1, log_abs_z, negative)
            next_mag = math.exp(next_lg) if next_sign else 0.0
            ratio = next_mag / mag if mag > 0.0 else 0.0
            bound = max(ratio, limit)
            if bound < 1.0:
                trunc = next_mag / (1.0 - bound)
            else:
                trunc = next_mag * (k + 2)
            return _PartialSum(total, abs_total, _EPS * round_err, trunc, k + 1)
    raise ConvergenceError(f"pΨq 级数在 {options.max_terms} 项内未收敛 (z={z})")


def _mp_sum(spec: FoxWrightSpec, z: float, limit: float, options: SeriesOptions):
    """在当前 mpmath 精度下求和，返回 (和, 各项绝对值之和, 截断误差, 项数)."""
    zz = mpmath.mpf(z)
    k_safe = _first_safe_index(spec)
    stop_rel = mpmath.mpf(options.rel_stop) / 10
    total = mpmath.mpf(0)
    abs_total = mpmath.mpf(0)
    power = mpmath.mpf(1)
    factorial = mpmath.mpf(1)
    prev_mag = None
    decreasing = 0
    for k in range(options.max_terms):
        if k > 0:
            power *= zz
            factorial *= k
        term = power / factorial
        for pp in spec.upper:
            arg = pp.argument(k)
            if is_gamma_pole(arg):
                raise GammaPole(f"上参数 Γ({arg:g}) 在第 {k} 项处为极点")
            term *= mpmath.gamma(arg)
        for pp in spec.lower:
            term *= mpmath.rgamma(pp.argument(k))
        mag = abs(term)
        total += term
        abs_total += mag
        ratio = mag / prev_mag if prev_mag else mpmath.mpf(0)
        if prev_mag is not None:
            decreasing = decreasing + 1 if mag < prev_mag or mag == 0.0 else 0
        prev_mag = mag
        if k >= k_safe and decreasing >= options.decreasing_run and mag <= stop_rel * abs(total):
            # 剩余项按当前比值几何估计
            bound = max(float(ratio), limit)
            trunc = float(mag) * bound / (1.0 - bound) if bound < 1.0 else float(mag) * (k + 2)
            return total, abs_total, trunc, k + 1
    raise ConvergenceError(f"扩展精度 pΨq 级数在 {options.max_terms} 项内未收敛 (z={z})")


def _extended_sum(spec: FoxWrightSpec, z: float, limit: float, options: SeriesOptions,
                  cancellation: float) -> EvalResult:
    """在足以覆盖抵消的 mpmath 精度下重新求和."""
    if math.isfinite(cancellation) and cancellation > 1.0:
        digits = _GUARD_DIGITS + int(math.ceil(math.log10(cancellation)))
    else:
        digits = 2 * _GUARD_DIGITS
    digits = min(digits, options.extended_max_dps)

    while True:
        with mpmath.workdps(digits):
            total, abs_total, trunc, terms = _mp_sum(spec, z, limit, options)
            if total == 0:
                needed = options.extended_max_dps + 1
            else:
                needed = _GUARD_DIGITS + max(0, int(mpmath.ceil(mpmath.log10(abs_total / abs(total)))))
            value = float(total)
            noise = float(abs_total) * 10.0 ** (-digits)
        if needed <= digits:
            break
        if digits >= options.extended_max_dps:
            raise ConvergenceError(
                f"扩展精度 {digits} 位仍不足以覆盖抵消 (z={z})"
            )
        digits = min(needed, options.extended_max_dps)
        logger.debug(f"扩展精度不足，提高到 {digits} 位")

    abs_err = trunc + noise + 2.0 * _EPS * abs(value)
    return EvalResult(value, abs_err, terms, EvalMethod.EXTENDED_SERIES)


def _boundary_sum(spec: FoxWrightSpec, z: float) -> EvalResult:
    """|z| = δ 处的求和，各项只按 k^{−(μ*+1/2)} 代数衰减.

    前 _BOUNDARY_HEAD 项直接相加；其余部分把通项延拓到实数 k 后用
    Euler-Maclaurin 公式（mpmath.sumem）求和。z < 0 时先把相邻两项配对，
    配对后的级数同号且光滑。
    """
    head_end = max(_first_safe_index(spec), _BOUNDARY_HEAD)
    with mpmath.workdps(_BOUNDARY_DPS):
        size = mpmath.mpf(abs(z))

        def term_at(x):
            value = size ** x * mpmath.rgamma(x + 1)
            for pp in spec.upper:
                value *= mpmath.gamma(pp.shift + x * pp.stretch)
            for pp in spec.lower:
                value *= mpmath.rgamma(pp.shift + x * pp.stretch)
            return value

        head = mpmath.mpf(0)
        for k in range(head_end):
            for pp in spec.upper:
                if is_gamma_pole(pp.argument(k)):
                    raise GammaPole(f"上参数 Γ({pp.argument(k):g}) 在第 {k} 项处为极点")
            term = term_at(k)
            head += -term if z < 0.0 and k % 2 else term

        if z > 0.0:
            tail, err = mpmath.sumem(term_at, [head_end, mpmath.inf], error=True)
        else:
            tail, err = mpmath.sumem(lambda j: term_at(head_end + 2 * j) - term_at(head_end + 2 * j + 1),
                                     [0, mpmath.inf], error=True)
            if head_end % 2:
                tail = -tail
        value = float(head + tail)
        tail_err = float(err)

    if not math.isfinite(value) or not math.isfinite(tail_err):
        raise ConvergenceError(f"{spec.label()} 在边界 z={z} 处的尾部求和失败")
    return EvalResult(value, tail_err + 4.0 * _EPS * abs(value), head_end, EvalMethod.BOUNDARY_SERIES)


def fox_wright_eval(spec: FoxWrightSpec, z: float,
                    options: Optional[SeriesOptions] = None) -> EvalResult:
    """计算 pΨq(z) = Σ_k ΠΓ(α_j+kA_j)/ΠΓ(β_j+kB_j) · z^k/k!.

    各项在对数空间计算并跟踪符号；连续 decreasing_run 项递减且当前项小于
    rel_stop 倍部分和时停止，截断误差用首个舍去项乘几何因子估计。

    各项绝对值之和与结果之比（抵消因子）超过 extended_trigger 时，改用
    mpmath 扩展精度重求和；禁用扩展精度时，超过 cancellation_limit 的抵消
    因子按比例放大误差估计。

    Δ = −1 且 |z| = δ（仅 μ* > 1/2 时可接受）时各项代数衰减，改由
    Euler-Maclaurin 求尾部，method 为 BoundarySeries。

    :param spec: pΨq 参数
    :type spec: FoxWrightSpec
    :param z: 实自变量
    :type z: float
    :param options: 级数选项，None 使用默认值
    :type options: Optional[SeriesOptions]
    :return: 求值结果
    :rtype: EvalResult
    :raises DomainRejected: z 不在可接受区域内
    :raises DivergentSeries: Δ < −1
    :raises GammaPole: 上参数 Γ 在某项处为极点
    :raises ConvergenceError: 项数上限内未收敛
    """
    options = options or SeriesOptions()
    report = classify(spec)
    check_admissible(report, z)

    for pp in spec.upper:
        if pp.stretch == 0.0 and is_gamma_pole(pp.shift):
            raise GammaPole(f"上参数 Γ({pp.shift:g}) 为极点")
    for pp in spec.lower:
        if pp.stretch == 0.0 and is_gamma_pole(pp.shift):
            # 每一项都含 1/Γ(极点) = 0
            return EvalResult(0.0, 0.0, 1, EvalMethod.DIRECT_SERIES)

    if z == 0.0:
        lg, sign = _log_coefficient(spec, 0)
        value = sign * math.exp(lg) if sign else 0.0
        return EvalResult(value, _EPS * abs(value) * (4.0 + abs(lg)), 1, EvalMethod.DIRECT_SERIES)

    if on_boundary(report, z):
        logger.debug(f"{spec.label()} 在收敛圆边界 z={z:g} 上，改用 Euler-Maclaurin 尾部")
        return _boundary_sum(spec, z)

    limit = ratio_limit(report, z)
    try:
        part = _direct_sum(spec, z, limit, options)
    except _TermOverflow:
        if not options.extended_enabled:
            raise ConvergenceError(f"{spec.label()} 的项在 binary64 中溢出 (z={z})")
        logger.debug(f"{spec.label()} 在 z={z:g} 处项溢出，改用扩展精度")
        return _extended_sum(spec, z, limit, options, math.inf)

    cancellation = part.cancellation
    if options.extended_enabled and cancellation > options.extended_trigger:
        logger.debug(f"{spec.label()} 在 z={z:g} 处抵消因子 {cancellation:.3g}，改用扩展精度")
        return _extended_sum(spec, z, limit, options, cancellation)

    abs_err = part.round_err + part.trunc_err
    if cancellation > options.cancellation_limit:
        abs_err *= min(cancellation, 1.0 / _EPS)
    return EvalResult(part.total, abs_err, part.terms, EvalMethod.DIRECT_SERIES)


def fox_wright_coefficient(spec: FoxWrightSpec, k: int) -> float:
    """第 k 个系数 ΠΓ(α_j+kA_j)/ΠΓ(β_j+kB_j)/k!（下参数极点处为 0）."""
    lg, sign = _log_coefficient(spec, k)
    if sign == 0 or lg < -745.0:
        return 0.0
    if lg > _LOG_OVERFLOW:
        raise ConvergenceError(f"{spec.label()} 的第 {k} 个系数溢出")
    return sign * math.exp(lg)


# ==================== 数组版本 ====================
def fox_wright_coefficients(spec: FoxWrightSpec, w_max: float, max_terms: int = 20_000,
                            rel_tol: float = 1e-17) -> np.ndarray:
    """生成 pΨq 的幂级数系数 c_k，使 |w| ≤ w_max 上截断误差可忽略.

    :param spec: pΨq 参数
    :type spec: FoxWrightSpec
    :param w_max: 自变量模的上界
    :type w_max: float
    :param max_terms: 项数上限
    :type max_terms: int
    :param rel_tol: 尾部相对于 Σ|c_k| w_max^k 的阈值
    :type rel_tol: float
    :return: 系数数组
    :rtype: np.ndarray
    :raises DomainRejected: w_max 超出收敛域
    :raises ConvergenceError: 系数溢出或未收敛
    """
    report = classify(spec)
    check_admissible(report, w_max)
    limit = ratio_limit(report, w_max)
    k_safe = _first_safe_index(spec)
    log_w = math.log(w_max) if w_max > 0.0 else -math.inf

    coeffs = []
    abs_total = 0.0
    prev_mag: Optional[float] = None
    decreasing = 0
    for k in range(max_terms):
        lg, sign = _log_coefficient(spec, k)
        if sign == 0:
            coeffs.append(0.0)
            mag = 0.0
        else:
            if lg > _LOG_OVERFLOW:
                raise ConvergenceError(f"{spec.label()} 的系数在第 {k} 项溢出")
            coeffs.append(sign * math.exp(lg))
            mag = math.exp(lg + k * log_w) if k else math.exp(lg)
        abs_total += mag
        if w_max == 0.0:
            return np.asarray(coeffs)
        ratio = mag / prev_mag if prev_mag else 0.0
        if prev_mag is not None:
            decreasing = decreasing + 1 if mag < prev_mag or mag == 0.0 else 0
        prev_mag = mag
        bound = max(ratio, limit)
        if k >= k_safe and decreasing >= 3 and bound < 1.0:
            if mag * bound / (1.0 - bound) <= rel_tol * abs_total:
                return np.asarray(coeffs)
    raise ConvergenceError(f"{spec.label()} 的系数在 {max_terms} 项内未收敛 (|w| ≤ {w_max})")


def fox_wright_array(spec: FoxWrightSpec, w: np.ndarray,
                     coeffs: Optional[np.ndarray] = None) -> np.ndarray:
    """在数组 w 上计算 pΨq(w).

    :param spec: pΨq 参数
    :type spec: FoxWrightSpec
    :param w: 自变量数组
    :type w: np.ndarray
    :param coeffs: 预先计算的系数（需覆盖 max|w|）
    :type coeffs: Optional[np.ndarray]
    :return: 函数值数组
    :rtype: np.ndarray
    """
    w = np.asarray(w, dtype=float)
    if coeffs is None:
        coeffs = fox_wright_coefficients(spec, float(np.max(np.abs(w))) if w.size else 0.0)
    return np.polynomial.polynomial.polyval(w, coeffs)


__all__ = [
    "fox_wright_eval",
    "fox_wright_coefficient",
    "fox_wright_coefficients",
    "fox_wright_array",
]
