# services/core/__init__.py
"""核心服务模块.

本模块提供核心服务，包括：
    - ConfigService: 配置服务，处理配置的加载和验证
    - DEFAULT_CONFIG: 默认配置常量
    - ConfigValidator: 配置验证器
    - ValidationError: 配置验证异常
    - 数值异常层次（errors）

.. note:: 对外只暴露必要的接口，隐藏内部实现细节
"""

from .config import ConfigService, DEFAULT_CONFIG, ConfigValidator, ValidationError
from .errors import (
    NumericError,
    DomainError,
    ConvergenceError,
    DomainRejected,
    GammaPole,
    DivergentSeries,
    OutOfRange,
    NonIntegrable,
    SlowConvergence,
    TruncationUncertain,
    SlowTail,
    HypothesisViolation,
    GridSpecError,
)

__all__ = [
    "ConfigService",      # 对外的主要服务接口
    "DEFAULT_CONFIG",     # 配置常量
    "ConfigValidator",    # 验证工具（供高级用户使用）
    "ValidationError",    # 异常类型
    "NumericError",       # 数值异常基类
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
    "GridSpecError",      # 命令行用法错误
]
