# models/options.py
"""数值选项数据模型.

由 ConfigService 从配置构造，显式传入各数值函数；数值模块不读取全局状态。
"""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class SeriesOptions:
    """级数求和选项.

    属性：
        - rel_stop: 项相对于部分和的停止阈值
        - decreasing_run: 停止前要求连续递减的项数
        - max_terms: 项数上限
        - cancellation_limit: 超过此抵消因子时放大误差估计
        - extended_enabled: 是否启用扩展精度重求和
        - extended_trigger: 触发扩展精度的抵消因子
        - extended_max_dps: 扩展精度的最大十进制位数
    """

    rel_stop: float = 1e-16
    decreasing_run: int = 3
    max_terms: int = 200_000
    cancellation_limit: float = 1e4
    extended_enabled: bool = True
    extended_trigger: float = 1e2
    extended_max_dps: int = 400


@dataclass(frozen=True)
class QuadOptions:
    """求积选项.

    属性：
        - gauss_order: 每段 Gauss–Legendre 阶数
        - tol: 目标相对精度
        - tail_rel: 尾部截断的相对阈值
        - max_segments: 振荡分段上限
        - euler_depth: Euler 变换最大层数
        - de_max_level: 双指数变换的最大加密层数
        - chunk: 每批向量化计算的段数
    """

    gauss_order: int = 32
    tol: float = 1e-11
    tail_rel: float = 1e-14
    max_segments: int = 10_000
    euler_depth: int = 40
    de_max_level: int = 9
    chunk: int = 16


@dataclass(frozen=True)
class IdentityOptions:
    """恒等式验证选项.

    属性：
        - default_tol: 含求积的验证默认容差
        - series_tol: 级数对级数验证的默认容差
        - truncation_rel: k 求和截断的相对阈值
        - dual_route: 是否计算第三条路径
        - max_k: k 求和的项数上限
    """

    default_tol: float = 1e-8
    series_tol: float = 1e-10
    truncation_rel: float = 1e-13
    dual_route: bool = True
    max_k: int = 1_000_000


@dataclass(frozen=True)
class OptionBundle:
    """一次验证所需的全部数值选项（可跨进程传递）."""

    series: SeriesOptions = field(default_factory=SeriesOptions)
    quad: QuadOptions = field(default_factory=QuadOptions)
    identity: IdentityOptions = field(default_factory=IdentityOptions)
