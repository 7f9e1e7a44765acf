# services/quad/integrator.py
"""半无限区间上的积分.

被积函数 x^μ · e^{−a x^ξ} · W(x) · osc(x) · extra(x)，见 IntegrandSpec。

- 非振荡：exp-sinh 双指数变换 x = s·exp(π/2·sinh t)，逐层加密
- 振荡：在振荡因子零点处分段；[0, x₁] 用 tanh-sinh，其余各段用
  Gauss–Legendre 向量化计算；包络尾部界足够小时截断，必要时用 Euler 平均外推
"""

import math
from typing import Callable, List, Optional, Tuple

import numpy as np
from loguru import logger

from models.eval_result import QuadResult
from models.integrand_data import Envelope, ExtraFactor, IntegrandSpec, OscillationKind
from models.options import QuadOptions
from services.core.errors import NonIntegrable, SlowConvergence
from services.foxwright.bessel import bessel_j_reduced
from services.quad.rules import (
    de_error_estimate,
    euler_average,
    gauss_legendre,
    oscillation_zeros,
    upper_gamma_log_bound,
)
from services.specfun.gamma import log_gamma

_EPS = 2.220446049250313e-16
_ROUNDING = 64.0 * _EPS
_HALF_PI = 0.5 * math.pi
_DE_H0 = 0.5
_MAX_LOG_SPAN = 690.0
_ENDPOINT_LOG = 45.0
_TS_T_MAX = 3.5
_DE_SWITCH = 1e-20

Mapping = Callable[[np.ndarray], Tuple[np.ndarray, np.ndarray, np.ndarray]]


def _log_expm1(u: np.ndarray) -> np.ndarray:
    """ln(e^u − 1)，u > 0."""
    u = np.asarray(u, dtype=float)
    out = np.empty_like(u)
    big = u > 30.0
    out[big] = u[big] + np.log1p(-np.exp(-u[big]))
    out[~big] = np.log(np.expm1(u[~big]))
    return out


class _Integrand:
    """在对数空间求值被积函数；振荡因子的 x→0 幂次并入对数部分."""

    def __init__(self, spec: IntegrandSpec, extra: Optional[ExtraFactor]):
        self.spec = spec
        self.extra = extra
        osc = spec.oscillation
        if osc.kind is OscillationKind.BESSEL_SQRT:
            self.osc_bound = 1.0 + 0.1 * max(0.0, osc.nu)
        else:
            self.osc_bound = 1.0
        self.extra_bound = extra.bound if extra is not None else 1.0

    def values(self, x: np.ndarray, log_x: np.ndarray, log_jac) -> np.ndarray:
        """f(x)·dx/dt；log_jac 为 ln(dx/dt)（可为 0）."""
        spec = self.spec
        osc = spec.oscillation
        with np.errstate(over="ignore", under="ignore"):
            log_f = spec.mu * log_x + log_jac
            if spec.decay > 0.0:
                log_f = log_f - spec.decay * np.exp(spec.xi * log_x)
            if spec.envelope is Envelope.BOSE_FACTOR:
                log_f = log_f - _log_expm1(spec.bose_scale * x)

            if osc.kind is OscillationKind.SIN:
                # sin(yx) = yx · sinc
                log_f = log_f + math.log(osc.y) + log_x
                factor = np.sinc(osc.y * x / math.pi)
            elif osc.kind is OscillationKind.COS:
                factor = np.cos(osc.y * x)
            elif osc.kind is OscillationKind.BESSEL_SQRT:
                # √t·J_ν(t) = t^{ν+1/2} 2^{−ν} · J_ν(t)/(t/2)^ν
                log_t = math.log(osc.y) + log_x
                log_f = log_f + (osc.nu + 0.5) * log_t - osc.nu * math.log(2.0)
                factor = bessel_j_reduced(osc.nu, osc.y * x)
            else:
                factor = 1.0

            f = np.exp(log_f) * factor
            if self.extra is not None:
                f = f * self.extra.func(x)
        return f

    # ── 尾部界 ──
    def _envelope_params(self, start: float) -> Tuple[float, float, float]:
        """(a, ξ, ln 附加因子)，使 ∫_T^∞ |包络| ≤ 附加因子·∫_T^∞ x^μ e^{−a x^ξ}."""
        spec = self.spec
        if spec.envelope is Envelope.PURE_EXP:
            return spec.decay, spec.xi, 0.0
        b = spec.bose_scale
        # x ≥ T 时 1/(e^{bx}−1) ≤ e^{−bx}/(1−e^{−bT})
        log_extra = -math.log1p(-math.exp(-b * start)) if start > 0.0 else math.inf
        if spec.xi == 1.0:
            return spec.decay + b, 1.0, log_extra
        return b, 1.0, log_extra

    def log_tail(self, start: float) -> float:
        """ln 上界：∫_start^∞ |f(x)| dx."""
        if self.extra_bound == 0.0:
            return -math.inf
        a, xi, log_extra = self._envelope_params(start)
        s = (self.spec.mu + 1.0) / xi
        x = a * start ** xi
        return (upper_gamma_log_bound(s, x) - math.log(xi) - s * math.log(a) + log_extra
                + math.log(self.osc_bound * self.extra_bound))

    def log_mass_lower(self) -> Optional[float]:
        """ln 下界：∫_0^∞ x^μ e^{−a x^ξ}·W(x) dx（μ ≤ −1 时为 None）."""
        spec = self.spec
        if spec.mu <= -1.0:
            return None
        if spec.envelope is Envelope.PURE_EXP:
            s = (spec.mu + 1.0) / spec.xi
            return log_gamma(s) - s * math.log(spec.decay) - math.log(spec.xi)
        if spec.xi != 1.0:
            return None
        return log_gamma(spec.mu + 1.0) - (spec.mu + 1.0) * math.log(spec.decay + spec.bose_scale)

    def scale(self) -> float:
        """包络的特征长度."""
        a, xi, _ = self._envelope_params(1.0)
        return a ** (-1.0 / xi)


# ==================== 双指数变换 ====================
def _grid(t_min: float, t_max: float, h: float, odd_only: bool) -> np.ndarray:
    j_lo = int(math.ceil(t_min / h))
    j_hi = int(math.floor(t_max / h))
    j = np.arange(j_lo, j_hi + 1)
    if odd_only:
        j = j[j % 2 != 0]
    return j * h


def _double_exponential(integrand: _Integrand, mapping: Mapping, t_min: float, t_max: float,
                        origin_power: float, options: QuadOptions) -> Tuple[float, float, int, float]:
    """逐层加密的梯形和，返回 (值, 误差, 节点数, Σ|f|w)."""

    def evaluate(t: np.ndarray) -> np.ndarray:
        x, log_x, log_jac = mapping(t)
        return integrand.values(x, log_x, log_jac)

    h = _DE_H0
    t = _grid(t_min, t_max, h, odd_only=False)
    f = evaluate(t)
    total = h * float(np.sum(f))
    l1 = h * float(np.sum(np.abs(f)))
    nodes = t.size
    estimates: List[float] = [total]
    err = math.inf
    for _ in range(options.de_max_level):
        h *= 0.5
        t = _grid(t_min, t_max, h, odd_only=True)
        f = evaluate(t)
        total = 0.5 * total + h * float(np.sum(f))
        l1 = 0.5 * l1 + h * float(np.sum(np.abs(f)))
        nodes += t.size
        estimates.append(total)
        rounding = _ROUNDING * l1
        err = de_error_estimate(estimates, max(abs(total), rounding))
        if err <= max(options.tol * abs(total), rounding):
            break
    else:
        logger.warning(f"双指数求积在 {options.de_max_level} 层内未达到容差，误差估计 {err:.3g}")
        err = max(err, abs(estimates[-1] - estimates[-2]))

    # [0, x_min] 上按 f ~ C·x^p 补上端点贡献
    x_min, log_x_min, _ = mapping(np.array([t_min]))
    f_min = float(integrand.values(x_min, log_x_min, 0.0)[0])
    endpoint = f_min * float(x_min[0]) / (origin_power + 1.0)
    return total + endpoint, err + _ROUNDING * l1 + abs(endpoint) * 1e-3, nodes + 1, l1


def _endpoint_span(origin_power: float) -> float:
    """原点侧截断的对数跨度：x_min/x_scale = e^{−L}."""
    return min(_MAX_LOG_SPAN, max(_ENDPOINT_LOG, _ENDPOINT_LOG / (origin_power + 1.0)))


def _exp_sinh(integrand: _Integrand, origin_power: float, options: QuadOptions):
    scale = integrand.scale()
    log_scale = math.log(scale)
    span = _endpoint_span(origin_power)
    t_min = -math.asinh(span / _HALF_PI)
    u_max = math.log(1000.0 + 50.0 * max(0.0, integrand.spec.mu)) / min(1.0, integrand.spec.xi) + 1.0
    t_max = math.asinh(u_max / _HALF_PI)

    def mapping(t: np.ndarray):
        u = _HALF_PI * np.sinh(t)
        log_x = log_scale + u
        x = np.exp(log_x)
        log_jac = log_x + np.log(_HALF_PI * np.cosh(t))
        return x, log_x, log_jac

    return _double_exponential(integrand, mapping, t_min, t_max, origin_power, options)


def _tanh_sinh(integrand: _Integrand, upper: float, origin_power: float, options: QuadOptions):
    """(0, upper) 上的 tanh-sinh（logistic 形式）."""
    log_upper = math.log(upper)
    span = _endpoint_span(origin_power)
    t_min = -math.asinh(span / math.pi)

    def mapping(t: np.ndarray):
        u = math.pi * np.sinh(t)
        log_sigma = -np.logaddexp(0.0, -u)
        log_one_minus = -np.logaddexp(0.0, u)
        log_x = log_upper + log_sigma
        x = np.exp(log_x)
        log_jac = log_upper + log_sigma + log_one_minus + np.log(math.pi * np.cosh(t))
        return x, log_x, log_jac

    return _double_exponential(integrand, mapping, t_min, _TS_T_MAX, origin_power, options)


# ==================== 振荡分段 ====================
def _segments(integrand: _Integrand, first_zero: float, origin_power: float,
              options: QuadOptions, order: int) -> QuadResult:
    osc = integrand.spec.oscillation
    acc, err, nodes, l1 = _tanh_sinh(integrand, first_zero, origin_power, options)
    partial_sums = [acc]
    segments = 1

    x_n, w_n = gauss_legendre(order)
    x_h, w_h = gauss_legendre(max(2, order // 2))
    euler_window = options.euler_depth + 1
    previous_euler: Optional[float] = None
    next_index = 1
    while segments < options.max_segments:
        count = min(options.chunk, options.max_segments - segments)
        ends = oscillation_zeros(osc, next_index, count + 1)
        lo, hi = ends[:-1], ends[1:]
        half = 0.5 * (hi - lo)
        mid = 0.5 * (hi + lo)

        xs = mid[:, None] + half[:, None] * x_n[None, :]
        f = integrand.values(xs, np.log(xs), 0.0)
        seg = half * (f @ w_n)
        xs_h = mid[:, None] + half[:, None] * x_h[None, :]
        seg_h = half * (integrand.values(xs_h, np.log(xs_h), 0.0) @ w_h)
        seg_err = np.abs(seg - seg_h)
        l1 += float(np.sum(half * (np.abs(f) @ w_n)))
        nodes += count * (x_n.size + x_h.size)

        for j in range(count):
            acc += float(seg[j])
            err += float(seg_err[j])
            partial_sums.append(acc)
            segments += 1
            tail = math.exp(integrand.log_tail(float(hi[j])))
            if tail <= max(options.tail_rel * abs(acc), _EPS * l1):
                return QuadResult(acc, err + tail + _ROUNDING * l1, nodes, segments)
        next_index += count

        if len(partial_sums) >= euler_window:
            value, diff = euler_average(partial_sums[-euler_window:])
            # 相邻两批的外推值也须一致
            if previous_euler is not None:
                drift = abs(value - previous_euler)
                if max(diff, drift) <= options.tol * abs(value):
                    logger.debug(f"振荡积分在 {segments} 段后以 Euler 平均外推结束，差值 {max(diff, drift):.3g}")
                    return QuadResult(value, err + diff + drift + _ROUNDING * l1, nodes, segments)
            previous_euler = value
    raise SlowConvergence(f"振荡积分在 {options.max_segments} 段内未收敛")


def integrate(spec: IntegrandSpec, extra_factor: Optional[ExtraFactor] = None,
              options: Optional[QuadOptions] = None,
              gauss_order: Optional[int] = None) -> QuadResult:
    """计算 ∫_0^∞ x^μ e^{−a x^ξ} W(x) osc(x) extra(x) dx.

    非振荡被积函数用 exp-sinh 双指数变换逐层加密；振荡被积函数在振荡因子
    零点处分段（Bessel 零点用 McMahon 展开近似），首段用 tanh-sinh，其余
    每段用 gauss_order 阶 Gauss–Legendre，包络尾部界低于 tail_rel 倍累计值
    时截断。部分和凑满 euler_depth+1 个后，每批都对最近的部分和做 Euler
    重复平均，相邻两批外推值与最后两层之差都低于 tol 时提前结束，慢衰减
    包络因此无需走到尾部界。包络在首个零点之前已衰减到可忽略时，整体改用
    exp-sinh。

    :param spec: 被积函数规格
    :type spec: IntegrandSpec
    :param extra_factor: 附加的有界因子（声明上界用于尾部估计）
    :type extra_factor: Optional[ExtraFactor]
    :param options: 求积选项
    :type options: Optional[QuadOptions]
    :param gauss_order: 覆盖每段 Gauss–Legendre 阶数
    :type gauss_order: Optional[int]
    :return: 求积结果
    :rtype: QuadResult
    :raises NonIntegrable: x→0 处幂次 ≤ −1
    :raises SlowConvergence: 分段数达到上限仍未收敛
    """
    options = options or QuadOptions()
    order = gauss_order or options.gauss_order
    origin_power = spec.origin_power
    if not origin_power > -1.0:
        raise NonIntegrable(f"被积函数在 x→0 处的幂次 {origin_power:g} ≤ −1，不可积")

    integrand = _Integrand(spec, extra_factor)
    osc = spec.oscillation
    if osc.is_oscillatory:
        first_zero = float(oscillation_zeros(osc, 1, 1)[0])
        log_mass = integrand.log_mass_lower()
        decayed = (log_mass is not None
                   and integrand.log_tail(first_zero) <= math.log(_DE_SWITCH) + log_mass)
        if not decayed:
            return _segments(integrand, first_zero, origin_power, options, order)

    value, err, nodes, _ = _exp_sinh(integrand, origin_power, options)
    return QuadResult(value, err, nodes, 1)


__all__ = ["integrate"]
