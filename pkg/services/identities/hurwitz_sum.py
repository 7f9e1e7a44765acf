# services/identities/hurwitz_sum.py
"""Θ(k) = k! 时的 k 求和.

S = Σ_{k≥0} (b+ck)^{−σ} · 1Ψ1[(σ,2);(ν+1,1) | −y²/(4(b+ck)²)]

前 K 项逐项用 ξ=1 的 2F1 约化计算；k ≥ K 的尾部按 1Ψ1 系数展开并交换求和，
得到 Σ_l ψ_l (−y²/4)^l c^{−(σ+2l)} ζ(σ+2l, b/c+K)，只剩按几何比收敛的 l 级数。
K 取得足够大使 y²/(b+cK)² ≤ 1/16。
"""

import math

from models.eval_result import EvalMethod, EvalResult
from models.options import SeriesOptions
from services.core.errors import SlowTail, TruncationUncertain
from services.foxwright.reductions import one_psi_one_theorem1
from services.specfun.gamma import log_gamma
from services.specfun.zeta import hurwitz_zeta

_EPS = 2.220446049250313e-16
_MIN_DIRECT = 8
_MAX_L = 400
_L_STOP = 1e-17


def shifted_psi_sum(sigma: float, nu: float, y: float, b: float, c: float,
                    options: SeriesOptions) -> EvalResult:
    """计算 Σ_{k≥0} (b+ck)^{−σ}·1Ψ1[(σ,2);(ν+1,1) | −y²/(4(b+ck)²)].

    :param sigma: 幂次兼 1Ψ1 上参数，σ > 1
    :type sigma: float
    :param nu: 1Ψ1 下参数为 ν+1，ν > −1
    :type nu: float
    :param y: 频率，y ≥ 0
    :type y: float
    :param b: 平移，b > 0
    :type b: float
    :param c: 步长，c > 0
    :type c: float
    :param options: 级数选项
    :type options: SeriesOptions
    :return: 和（method=Reduced2F1）
    :rtype: EvalResult
    :raises TruncationUncertain: σ ≤ 1，k 求和发散
    :raises SlowTail: l 级数未在上限内收敛
    """
    if not sigma > 1.0:
        raise TruncationUncertain(f"σ = {sigma:g} ≤ 1 时 Σ(b+ck)^(−σ) 发散")

    direct = max(_MIN_DIRECT, int(math.ceil(4.0 * y / c)))
    total = 0.0
    abs_err = 0.0
    work = 0
    for k in range(direct):
        a_k = b + c * k
        z = -(y * y) / (4.0 * a_k * a_k)
        psi = one_psi_one_theorem1(sigma, 2.0, nu, z, options)
        weight = math.exp(-sigma * math.log(a_k))
        total += weight * psi.value
        abs_err += weight * psi.abs_err_est
        work += psi.work

    q = b / c + direct
    log_x = 2.0 * math.log(y) - math.log(4.0) if y > 0.0 else -math.inf
    log_c = math.log(c)
    magnitude = 0.0
    for l in range(_MAX_L):
        s = sigma + 2.0 * l
        if l > 0 and log_x == -math.inf:
            break
        zeta = hurwitz_zeta(s, q).real
        log_a = log_gamma(s) - log_gamma(nu + 1.0 + l) - log_gamma(l + 1.0) + l * log_x - s * log_c
        term = math.exp(log_a + math.log(zeta)) if zeta > 0.0 else 0.0
        if l % 2:
            term = -term
        total += term
        magnitude += abs(term)
        work += 1
        if l > 0 and abs(term) <= _L_STOP * abs(total):
            return EvalResult(total, abs_err + 8.0 * _EPS * magnitude + abs(term), work,
                              EvalMethod.REDUCED_2F1)
    if log_x == -math.inf:
        return EvalResult(total, abs_err + 8.0 * _EPS * magnitude, work, EvalMethod.REDUCED_2F1)
    raise SlowTail(f"Hurwitz 尾部展开在 {_MAX_L} 项内未收敛 (σ={sigma:g}, y={y:g})")


__all__ = ["shifted_psi_sum"]
