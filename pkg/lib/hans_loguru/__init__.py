"""hans_loguru 日志记录包.

提供支持多进程的日志记录功能。
"""

from .hans_loguru import ConsoleConfig, HansLoguru, LogFileConfig

__all__ = [
    'HansLoguru',       # 多进程日志汇总
    'LogFileConfig',    # 日志文件配置
    'ConsoleConfig',    # 控制台配置
]
