# viewmodels/base_viewmodel.py
"""ViewModel 基类模块.

此模块定义了所有 ViewModel 的基类，提供通用功能。
"""

from enum import IntEnum
from typing import TYPE_CHECKING, Callable, List

from loguru import logger

if TYPE_CHECKING:
    from services.container import ServiceContainer


class ExitCode(IntEnum):
    """命令行退出码."""

    OK = 0          # 通过
    FAILED = 1      # 验证未通过或求值失败
    USAGE = 2       # 用法错误


class UsageError(ValueError):
    """用法错误：未知函数名、缺少参数、网格规格不合法等."""


class BaseViewModel:
    """ViewModel 基类.

    提供所有 ViewModel 的通用功能：
        - 错误通知（View 通过 connect_error 订阅，输出一行诊断）
        - 服务容器访问
        - 清理资源
    """

    def __init__(self, container: "ServiceContainer"):
        """初始化基类.

        :param container: 服务容器
        :type container: ServiceContainer
        """
        logger.trace("")
        self._container = container
        self._error_handlers: List[Callable[[str], None]] = []
        logger.trace(f"初始化{self.__class__.__name__}")

    @property
    def container(self) -> "ServiceContainer":
        return self._container

    def connect_error(self, handler: Callable[[str], None]) -> None:
        """订阅错误通知.

        :param handler: 接收一行错误消息的回调
        :type handler: Callable[[str], None]
        """
        self._error_handlers.append(handler)

    def emit_error(self, error_message: str) -> None:
        """记录错误并通知所有订阅者.

        :param error_message: 错误消息
        :type error_message: str
        """
        logger.trace("")
        logger.debug(f"{self.__class__.__name__}: {error_message}")
        for handler in self._error_handlers:
            handler(error_message)

    def cleanup(self) -> None:
        """清理资源."""
        logger.trace("")
        logger.debug(f"清理{self.__class__.__name__}资源")
        self._error_handlers.clear()
