# services/container/service_container.py
"""服务容器主类模块.

本模块提供 ServiceContainer 类，专注于服务的创建和依赖注入。

组合模式：
    - ServiceFactory: 服务创建
"""

import multiprocessing
from typing import TYPE_CHECKING, Optional

from loguru import logger

from models.options import OptionBundle
from services.container.factory import ServiceFactory

if TYPE_CHECKING:
    from services.core import ConfigService
    from services.identities import GridRunner, IdentityService


class ServiceContainer:
    """服务容器 - 专注于服务的创建和依赖注入.

    职责：
        - 创建服务实例（懒加载）
        - 依赖注入
        - 清理服务引用

    使用示例::

        config_service = ConfigService("./configs/config.json")
        container = ServiceContainer(config=config_service, tol=1e-9)

        report = container.identity.verify(IdentityId.SUM_5_7, ParamPoint(n=1.0))

        container.cleanup()
    """

    def __init__(self, config: "ConfigService", tol: Optional[float] = None,
                 jobs: Optional[int] = None, log_queue: Optional[multiprocessing.Queue] = None):
        """初始化服务容器.

        :param config: 配置服务实例
        :type config: ConfigService
        :param tol: 命令行容差覆盖
        :type tol: Optional[float]
        :param jobs: 命令行并发数覆盖
        :type jobs: Optional[int]
        :param log_queue: 网格工作进程接入的日志队列
        :type log_queue: Optional[multiprocessing.Queue]
        """
        logger.trace("")
        self._config = config
        self._factory = ServiceFactory(config=config, tol=tol, jobs=jobs, log_queue=log_queue)
        logger.debug("ServiceContainer 已创建")

    # ==================== 属性 ====================
    @property
    def config(self) -> "ConfigService":
        """获取配置服务."""
        return self._config

    @property
    def options(self) -> OptionBundle:
        """获取数值选项."""
        return self._factory.options

    # ==================== 恒等式服务 ====================
    @property
    def identity(self) -> "IdentityService":
        """获取恒等式验证服务."""
        return self._factory.identity

    @property
    def grid(self) -> "GridRunner":
        """获取网格运行器."""
        return self._factory.grid

    # ==================== 生命周期管理 ====================
    def cleanup(self) -> None:
        """清理服务容器（只清理服务引用）."""
        self._factory.clear_all()
        logger.debug("服务容器清理完成")
