# services/identities/grid.py
"""参数网格运行模块.

各参数点相互独立，用进程池并发验证；工作进程通过初始化函数接入
HansLoguru 的日志队列。结果按 (id, 参数) 排序，与并发度无关。
"""

import multiprocessing
import os
import time
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Tuple

from loguru import logger

from models.identity_data import IdentityId, IdentityReport, ParamPoint
from models.options import OptionBundle
from models.run_report import GridSpec, RunReport
from services.core.errors import GridSpecError
from services.identities.verifier import IdentityService
from version import __version__

_Task = Tuple[IdentityId, ParamPoint, Optional[float]]

# 工作进程内的服务实例
_worker_service: Optional[IdentityService] = None


def _init_worker(options: OptionBundle, log_queue: Optional[multiprocessing.Queue]) -> None:
    global _worker_service
    if log_queue is not None:
        from lib.hans_loguru import HansLoguru
        HansLoguru.add(log_queue)
    _worker_service = IdentityService(options)


def _verify_task(task: _Task) -> IdentityReport:
    identity, point, tol = task
    return _worker_service.verify(identity, point, tol)


class GridRunner:
    """网格运行器.

    :param service: 验证服务（提供选项，jobs=1 时直接使用）
    :type service: IdentityService
    :param jobs: 并发进程数，0 表示可用 CPU 数
    :type jobs: int
    :param max_points: 网格点数上限
    :type max_points: int
    :param log_queue: 工作进程接入的日志队列
    :type log_queue: Optional[multiprocessing.Queue]
    """

    def __init__(self, service: IdentityService, jobs: int = 0, max_points: int = 100_000,
                 log_queue: Optional[multiprocessing.Queue] = None):
        logger.trace("")
        self._service = service
        self._jobs = jobs
        self._max_points = max_points
        self._log_queue = log_queue

    @property
    def jobs(self) -> int:
        """实际并发数."""
        if self._jobs and self._jobs > 0:
            return self._jobs
        return os.cpu_count() or 1

    def check(self, spec: GridSpec) -> None:
        """检查网格规格.

        :raises GridSpecError: 空轴、未知参数名或点数超限
        """
        if not spec.axes:
            raise GridSpecError("网格没有任何参数轴")
        for name, values in spec.axes.items():
            if name not in ParamPoint.SCALAR_FIELDS:
                raise GridSpecError(f"未知的网格参数 '{name}'，可选: {', '.join(ParamPoint.SCALAR_FIELDS)}")
            if not values:
                raise GridSpecError(f"参数轴 '{name}' 为空")
            if name == "m" and not all(float(v).is_integer() for v in values):
                raise GridSpecError(f"参数轴 m 只能取整数，收到 {values}")
        if spec.size > self._max_points:
            raise GridSpecError(f"网格共 {spec.size} 个点，超过上限 {self._max_points}")

    def run(self, spec: GridSpec) -> RunReport:
        """运行整个网格.

        :param spec: 网格规格
        :type spec: GridSpec
        :return: 排序后的汇总报告
        :rtype: RunReport
        :raises GridSpecError: 网格规格不合法
        """
        self.check(spec)
        tasks: List[_Task] = [(spec.identity, point, spec.tol) for point in spec.points()]
        jobs = min(self.jobs, len(tasks))
        logger.info(f"{spec.identity.value} 网格 {len(tasks)} 点，并发 {jobs}")

        start = time.perf_counter()
        if jobs <= 1:
            reports = [self._service.verify(identity, point, tol) for identity, point, tol in tasks]
        else:
            chunksize = max(1, len(tasks) // (4 * jobs))
            with ProcessPoolExecutor(max_workers=jobs, initializer=_init_worker,
                                     initargs=(self._service.options, self._log_queue)) as pool:
                reports = list(pool.map(_verify_task, tasks, chunksize=chunksize))
        reports.sort(key=IdentityReport.sort_key)
        wall = time.perf_counter() - start

        run = RunReport(tool_version=__version__, identity=spec.identity, reports=reports, wall_time_s=wall)
        logger.info(f"{spec.identity.value} 网格完成: {run.passed}/{run.total} 通过，用时 {wall:.2f} s")
        return run


__all__ = ["GridRunner"]
