# services/identities/hypotheses.py
"""参数点假设检查模块.

所有检查失败都抛出 HypothesisViolation，由 IdentityService 转成带注释的失败报告。
"""

from typing import Iterable

from models.identity_data import ParamPoint
from services.core.errors import HypothesisViolation


def require(point: ParamPoint, names: Iterable[str]) -> None:
    """检查必需字段均已设置.

    :param point: 参数点
    :type point: ParamPoint
    :param names: 字段名
    :type names: Iterable[str]
    :raises HypothesisViolation: 缺少字段
    """
    missing = [name for name in names if not point.is_set(name)]
    if missing:
        raise HypothesisViolation(f"参数点缺少字段: {', '.join(missing)}")


def require_positive(point: ParamPoint, names: Iterable[str]) -> None:
    for name in names:
        value = getattr(point, name)
        if not value > 0.0:
            raise HypothesisViolation(f"{name} 必须为正，收到 {value}")


def check_bessel_point(point: ParamPoint, decays: Iterable[str]) -> None:
    """定理 1/2 及其推论的公共假设.

    ξ ≥ 1、衰减系数与 y 为正、ν > −1、μ+ν > −1/2。

    :param point: 参数点
    :type point: ParamPoint
    :param decays: 衰减系数字段（"a" 或 "b", "c"）
    :type decays: Iterable[str]
    :raises HypothesisViolation: 任一假设不成立
    """
    decays = tuple(decays)
    require(point, ("mu", "xi", "nu", "y") + decays)
    if not point.xi >= 1.0:
        raise HypothesisViolation(f"右侧级数要求 ξ ≥ 1，收到 ξ = {point.xi}")
    require_positive(point, decays + ("y",))
    if not point.nu > -1.0:
        raise HypothesisViolation(f"ν 必须大于 −1，收到 {point.nu}")
    if not point.mu + point.nu > -0.5:
        raise HypothesisViolation(f"要求 μ+ν > −1/2，收到 μ+ν = {point.mu + point.nu:g}")


def check_moment_point(point: ParamPoint) -> None:
    """§5 的 m（整数 ≥ 1）与 n > 0."""
    require(point, ("m", "n"))
    if point.m != int(point.m) or point.m < 1:
        raise HypothesisViolation(f"m 必须为不小于 1 的整数，收到 {point.m}")
    require_positive(point, ("n",))


__all__ = ["require", "require_positive", "check_bessel_point", "check_moment_point"]
