# models/run_report.py
"""网格运行数据模型."""

import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional

from models.identity_data import IdentityId, IdentityReport, ParamPoint


@dataclass(frozen=True)
class GridSpec:
    """参数网格.

    属性：
        - identity: 恒等式编号
        - axes: 参数名 -> 取值列表（按插入顺序做笛卡尔积）
        - tol: 容差，None 表示使用配置默认值
        - base: 各点共享的固定参数（内层规格、Θ 名称等）
    """

    identity: IdentityId
    axes: Dict[str, List[float]]
    tol: Optional[float] = None
    base: ParamPoint = field(default_factory=ParamPoint)

    @property
    def size(self) -> int:
        total = 1
        for values in self.axes.values():
            total *= len(values)
        return total if self.axes else 0

    def points(self) -> Iterator[ParamPoint]:
        """按确定顺序生成参数点."""
        names = list(self.axes.keys())
        for combo in itertools.product(*(self.axes[name] for name in names)):
            yield self.base.with_values(**dict(zip(names, combo)))


@dataclass
class RunReport:
    """网格运行汇总.

    不变式：total = passed + failed = len(reports)。
    """

    tool_version: str
    identity: IdentityId
    reports: List[IdentityReport]
    wall_time_s: float

    @property
    def total(self) -> int:
        return len(self.reports)

    @property
    def passed(self) -> int:
        return sum(1 for r in self.reports if r.passed)

    @property
    def failed(self) -> int:
        return self.total - self.passed
