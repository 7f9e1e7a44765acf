# models/eval_result.py
"""数值结果数据模型.

定义所有数值例程共用的返回值：级数/闭式求值结果与求积结果。
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict


class EvalMethod(str, Enum):
    """求值路径标签.

    报告中以枚举值（字符串）输出。
    """

    DIRECT_SERIES = "DirectSeries"
    REDUCED_2F1 = "Reduced2F1"
    REDUCED_KUMMER = "ReducedKummer"
    ELEMENTARY = "ElementaryClosedForm"
    QUADRATURE = "Quadrature"
    EXTENDED_SERIES = "ExtendedSeries"
    BOUNDARY_SERIES = "BoundarySeries"


@dataclass(frozen=True)
class EvalResult:
    """数值求值结果.

    属性：
        - value: 数值
        - abs_err_est: 绝对误差估计（非负、有限）
        - work: 累加的项数或使用的节点数（至少为 1）
        - method: 实际运行的求值路径
    """

    value: float
    abs_err_est: float
    work: int
    method: EvalMethod

    def __post_init__(self):
        if not self.abs_err_est >= 0.0 or self.abs_err_est == float("inf"):
            raise ValueError(f"误差估计必须为非负有限数: {self.abs_err_est}")
        if self.work < 1:
            raise ValueError(f"work 必须 >= 1: {self.work}")

    def scaled(self, factor: float) -> "EvalResult":
        """返回乘以常数因子后的结果（误差同比缩放）.

        :param factor: 常数因子
        :type factor: float
        :return: 新的结果对象
        :rtype: EvalResult
        """
        return EvalResult(
            value=self.value * factor,
            abs_err_est=self.abs_err_est * abs(factor),
            work=self.work,
            method=self.method,
        )

    def to_dict(self) -> Dict[str, Any]:
        """转换为可序列化字典."""
        return {
            "value": self.value,
            "abs_err_est": self.abs_err_est,
            "work": self.work,
            "method": self.method.value,
        }


@dataclass(frozen=True)
class QuadResult:
    """求积结果.

    属性：
        - value: 积分值
        - abs_err_est: 绝对误差估计
        - nodes: 被积函数求值次数
        - segments: 振荡分段数（非振荡积分为 1）
    """

    value: float
    abs_err_est: float
    nodes: int
    segments: int

    def __post_init__(self):
        if not self.abs_err_est >= 0.0 or self.abs_err_est == float("inf"):
            raise ValueError(f"误差估计必须为非负有限数: {self.abs_err_est}")

    def as_eval(self) -> EvalResult:
        """转换为 EvalResult（method=Quadrature）."""
        return EvalResult(
            value=self.value,
            abs_err_est=self.abs_err_est,
            work=max(1, self.nodes),
            method=EvalMethod.QUADRATURE,
        )
