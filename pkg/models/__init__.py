# models/__init__.py
"""数据模型层 - Models.

本包定义了应用程序中所有数据模型，包括：

    - 配置数据模型
    - Fox-Wright 参数与收敛域报告
    - 求积被积函数描述
    - 求值 / 验证 / 网格运行结果

模块导出所有主要的数据类和枚举类型，供其他模块使用。
"""

from .config_data import ConfigData, strip_comments
from .eval_result import EvalMethod, EvalResult, QuadResult
from .fox_wright_data import ConvergenceDomain, ConvergenceReport, FoxWrightSpec, ParamPair
from .integrand_data import Envelope, ExtraFactor, IntegrandSpec, Oscillation, OscillationKind
from .options import IdentityOptions, OptionBundle, QuadOptions, SeriesOptions
from .identity_data import (
    BoundedSequence,
    GrowthClass,
    IdentityCatalogEntry,
    IdentityId,
    IdentityReport,
    ParamPoint,
    RoutePair,
)
from .run_report import GridSpec, RunReport

__all__ = [
    # 配置
    'ConfigData',
    'strip_comments',
    # 求值结果
    'EvalMethod',          # 求值路径标签
    'EvalResult',
    'QuadResult',
    # Fox-Wright
    'ParamPair',
    'FoxWrightSpec',
    'ConvergenceDomain',
    'ConvergenceReport',
    # 求积
    'OscillationKind',
    'Oscillation',
    'Envelope',
    'IntegrandSpec',
    'ExtraFactor',         # 内层级数因子
    # 选项
    'SeriesOptions',
    'QuadOptions',
    'IdentityOptions',
    'OptionBundle',
    # 恒等式
    'IdentityId',
    'GrowthClass',
    'BoundedSequence',
    'ParamPoint',
    'RoutePair',
    'IdentityReport',
    'IdentityCatalogEntry',
    # 网格
    'GridSpec',
    'RunReport',
]
