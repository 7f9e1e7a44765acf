# services/core/errors.py
"""数值异常层次.

所有数值例程只抛出这里定义的异常（以及配置层的 ValidationError）。
视图模型层据此决定退出码或生成带注释的失败报告。
"""


class NumericError(Exception):
    """数值异常基类."""


class DomainError(NumericError, ValueError):
    """前置条件不满足."""


class ConvergenceError(NumericError):
    """未能在给定预算内达到容差."""


class DomainRejected(DomainError):
    """自变量不在级数的可接受区域内."""


class GammaPole(DomainError):
    """上参数的 Γ 自变量落在非正整数上."""


class DivergentSeries(DomainRejected):
    """Δ < −1，级数处处发散."""


class OutOfRange(DomainError):
    """自变量超出实现的精度范围."""


class NonIntegrable(DomainError):
    """被积函数在 x→0 处不可积."""


class SlowConvergence(ConvergenceError):
    """振荡分段在段数上限内未收敛."""


class TruncationUncertain(ConvergenceError):
    """无界 Θ(k) 无法被解析地支配."""


class SlowTail(ConvergenceError):
    """k 求和的尾部界无法在上限内达到容差."""


class HypothesisViolation(DomainError):
    """参数点不满足恒等式的假设，或缺少必需字段."""


class GridSpecError(ValueError):
    """网格规格不合法（空轴、未知参数名、点数超限）；命令行按用法错误处理."""


__all__ = [
    "NumericError",
    "DomainError",
    "ConvergenceError",
    "DomainRejected",
    "GammaPole",
    "DivergentSeries",
    "OutOfRange",
    "NonIntegrable",
    "SlowConvergence",
    "TruncationUncertain",
    "SlowTail",
    "HypothesisViolation",
    "GridSpecError",
]
