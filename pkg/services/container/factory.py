# services/container/factory.py
"""服务创建工厂模块.

职责：
    - 所有服务的创建方法
    - 懒加载单例管理
    - 依赖注入（OptionBundle 来自 ConfigService）
"""

import multiprocessing
from typing import TYPE_CHECKING, Optional

from loguru import logger

from models.options import OptionBundle

if TYPE_CHECKING:
    from services.core import ConfigService
    from services.identities import GridRunner, IdentityService


class ServiceFactory:
    """服务创建工厂.

    服务分层：
        - Level 0: ConfigService（构造时注入）
        - Level 1: IdentityService（依赖 OptionBundle）
        - Level 2: GridRunner（依赖 IdentityService 与日志队列）
    """

    def __init__(self, config: "ConfigService", tol: Optional[float] = None,
                 jobs: Optional[int] = None, log_queue: Optional[multiprocessing.Queue] = None):
        """初始化服务工厂.

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
        self._tol = tol
        self._jobs = jobs
        self._log_queue = log_queue

        # 懒加载单例缓存
        self._options: Optional[OptionBundle] = None
        self._identity_service: Optional["IdentityService"] = None
        self._grid_runner: Optional["GridRunner"] = None

    # ==================== 属性 ====================
    @property
    def config(self) -> "ConfigService":
        """获取配置服务."""
        return self._config

    @property
    def options(self) -> OptionBundle:
        """数值选项（懒加载）."""
        if self._options is None:
            self._options = self._config.option_bundle(self._tol)
        return self._options

    # ==================== Level 1: 验证服务 ====================
    @property
    def identity(self) -> "IdentityService":
        """获取恒等式验证服务（懒加载）."""
        if self._identity_service is None:
            from services.identities import IdentityService
            self._identity_service = IdentityService(self.options)
        return self._identity_service

    # ==================== Level 2: 网格 ====================
    @property
    def grid(self) -> "GridRunner":
        """获取网格运行器（懒加载）."""
        if self._grid_runner is None:
            from services.identities import GridRunner
            jobs = self._jobs if self._jobs is not None else self._config.grid_jobs
            self._grid_runner = GridRunner(
                self.identity,
                jobs=jobs,
                max_points=self._config.grid_max_points,
                log_queue=self._log_queue,
            )
        return self._grid_runner

    # ==================== 清理 ====================
    def clear_all(self) -> None:
        """清理所有服务引用."""
        self._options = None
        self._identity_service = None
        self._grid_runner = None
