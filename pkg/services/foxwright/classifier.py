# services/foxwright/classifier.py
"""pΨq 收敛域分类.

Δ > −1 时级数在整个平面收敛；Δ = −1 时在 |z| < δ 收敛，μ* > 1/2 时边界
|z| = δ 也收敛；Δ < −1 时级数处处发散（z = 0 除外）。
"""

import math

from models.fox_wright_data import ConvergenceDomain, ConvergenceReport, FoxWrightSpec
from services.core.errors import DivergentSeries, DomainRejected

#: Δ = −1 与 |z| = δ 的判等容差（相对）
_BOUNDARY_RTOL = 1e-12


def _stretch_power(stretch: float) -> float:
    """ln(A^A)，约定 0^0 = 1."""
    if stretch == 0.0:
        return 0.0
    return stretch * math.log(stretch)


def classify(spec: FoxWrightSpec) -> ConvergenceReport:
    """计算 Δ、δ、μ* 并按三分法给出收敛域.

    :param spec: pΨq 参数
    :type spec: FoxWrightSpec
    :return: 收敛报告
    :rtype: ConvergenceReport
    """
    sum_upper_stretch = math.fsum(pp.stretch for pp in spec.upper)
    sum_lower_stretch = math.fsum(pp.stretch for pp in spec.lower)
    delta_cap = sum_lower_stretch - sum_upper_stretch

    log_radius = (math.fsum(_stretch_power(pp.stretch) for pp in spec.lower)
                  - math.fsum(_stretch_power(pp.stretch) for pp in spec.upper))
    radius = math.exp(log_radius)

    mu_star = (math.fsum(pp.shift for pp in spec.lower)
               - math.fsum(pp.shift for pp in spec.upper)
               + 0.5 * (spec.p - spec.q))

    if is_boundary_delta(delta_cap):
        domain = ConvergenceDomain.DISC_WITH_BOUNDARY if mu_star > 0.5 else ConvergenceDomain.OPEN_DISC
    elif delta_cap > -1.0:
        domain = ConvergenceDomain.ENTIRE_PLANE
    else:
        domain = ConvergenceDomain.DIVERGENT_SERIES
    return ConvergenceReport(delta_cap=delta_cap, radius=radius, mu_star=mu_star, domain=domain)


def is_boundary_delta(delta_cap: float) -> bool:
    """Δ 是否（在舍入意义下）等于 −1."""
    return abs(delta_cap + 1.0) <= _BOUNDARY_RTOL


def on_boundary(report: ConvergenceReport, z: float) -> bool:
    """Δ = −1 且 |z| 在舍入意义下等于 δ."""
    if report.domain not in (ConvergenceDomain.OPEN_DISC, ConvergenceDomain.DISC_WITH_BOUNDARY):
        return False
    return abs(abs(z) - report.radius) <= _BOUNDARY_RTOL * report.radius


def check_admissible(report: ConvergenceReport, z: float) -> None:
    """检查 z 是否落在可接受区域内.

    :param report: classify 的结果
    :type report: ConvergenceReport
    :param z: 实自变量
    :type z: float
    :raises DivergentSeries: Δ < −1 且 z ≠ 0
    :raises DomainRejected: Δ = −1 时 |z| 超出 δ，或落在不收敛的边界上
    """
    if z == 0.0 or report.domain is ConvergenceDomain.ENTIRE_PLANE:
        return
    if report.domain is ConvergenceDomain.DIVERGENT_SERIES:
        raise DivergentSeries(f"Δ = {report.delta_cap:g} < −1，级数发散")

    size = abs(z)
    if on_boundary(report, z):
        if report.domain is ConvergenceDomain.DISC_WITH_BOUNDARY:
            return
        raise DomainRejected(
            f"|z| = δ = {report.radius:g} 且 μ* = {report.mu_star:g} ≤ 1/2，边界上不收敛"
        )
    if size > report.radius:
        raise DomainRejected(f"|z| = {size:g} 超出收敛半径 δ = {report.radius:g}")


def ratio_limit(report: ConvergenceReport, z: float) -> float:
    """相邻项比值的极限 |z|/δ（仅 Δ = −1 时非零）."""
    if report.domain in (ConvergenceDomain.OPEN_DISC, ConvergenceDomain.DISC_WITH_BOUNDARY):
        return abs(z) / report.radius
    return 0.0


__all__ = ["classify", "check_admissible", "is_boundary_delta", "on_boundary", "ratio_limit"]
