"""HansLoguru - 支持多进程的日志记录工具.

主要功能：
    - 网格工作进程的日志经队列汇总到一个监听进程
    - 支持配置多个日志文件，每个文件可设置不同的日志级别
    - 支持独立设置终端输出的日志级别
    - 终端输出固定写到 stderr，stdout 留给计算结果

使用示例::

    from lib.hans_loguru import HansLoguru, LogFileConfig, ConsoleConfig
    from loguru import logger

    log_files = [LogFileConfig("./output/logs/all.log", level="TRACE", rotation="10 MB")]
    console_config = ConsoleConfig(enabled=True, level="WARNING")

    queue = HansLoguru.listener_process_start(log_files=log_files, console_config=console_config)
    HansLoguru.add(queue)

    logger.warning("回退到求积路径")

    HansLoguru.listener_process_stop()
"""

import multiprocessing
import os
import sys
import threading
import traceback
from typing import List, Optional

from loguru import logger

_DEFAULT_WORKER_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> | "
    "<level>{level: <8}</level> | "
    "<cyan>P{extra[process]}</cyan>/<magenta>T{extra[thread]}</magenta> | "
    "<cyan>{extra[name]}</cyan>:<cyan>{extra[function]}</cyan>:<cyan>{extra[line]}</cyan> - "
    "<level>{message}</level>"
)


class ConsoleConfig:
    """控制台日志配置类."""

    def __init__(self, enabled: bool = True, level: str = "WARNING",
                 format: Optional[str] = None, colorize: bool = True):
        """初始化控制台日志配置.

        :param enabled: 是否启用控制台输出
        :type enabled: bool
        :param level: 日志级别 (TRACE, DEBUG, INFO, SUCCESS, WARNING, ERROR, CRITICAL)
        :type level: str
        :param format: 日志格式字符串，如 None 则使用默认格式
        :type format: Optional[str]
        :param colorize: 是否使用颜色
        :type colorize: bool
        """
        self.enabled = enabled
        self.level = level.upper() if level else "WARNING"
        self.format = format
        self.colorize = colorize


class LogFileConfig:
    """日志文件配置类."""

    def __init__(self, file_path: str, level: str = "TRACE", rotation: Optional[str] = None,
                 retention: Optional[str] = None, compression: Optional[str] = None,
                 format: Optional[str] = None):
        """初始化日志文件配置.

        :param file_path: 日志文件路径
        :type file_path: str
        :param level: 日志级别
        :type level: str
        :param rotation: 日志轮转规则，如 "10 MB"
        :type rotation: Optional[str]
        :param retention: 日志保留规则，如 "7 days"
        :type retention: Optional[str]
        :param compression: 压缩格式，如 "zip"
        :type compression: Optional[str]
        :param format: 日志格式字符串，如 None 则使用默认格式
        :type format: Optional[str]
        """
        self.file_path = file_path
        self.level = level.upper()
        self.rotation = rotation
        self.retention = retention
        self.compression = compression
        self.format = format


class HansLoguru:
    """多进程日志记录核心类.

    主进程与网格工作进程都通过 :meth:`add` 把记录送入同一个队列，
    监听进程负责落到终端和文件。
    """

    # 日志队列，首次启动监听时创建
    hans_loguru_queue: Optional[multiprocessing.Queue] = None
    # 监听进程
    listener: Optional[multiprocessing.Process] = None

    @classmethod
    def add(cls, processing_queue: multiprocessing.Queue, level: str = "TRACE") -> None:
        """进程初始化 logger，把记录转发到队列.

        :param processing_queue: 传送消息的队列
        :type processing_queue: multiprocessing.Queue
        :param level: 日志消息传送到队列的最低级别
        :type level: str
        """
        logger.remove()

        def queue_sink(msg):
            record = msg.record
            exception_str = None
            if record["exception"] is not None:
                exc_type, exc_value, exc_tb = record["exception"]
                if exc_type is not None:
                    exception_str = "".join(traceback.format_exception(exc_type, exc_value, exc_tb))

            processing_queue.put({
                "type": "worker",
                "message": record["message"],
                "level": record["level"].name,
                "process": os.getpid(),
                "thread": threading.current_thread().ident,
                "time": record["time"].isoformat(),
                "file": record["file"].name,
                "line": record["line"],
                "function": record["function"],
                "name": record["name"],
                "exception": exception_str,
            })

        logger.add(queue_sink, level=level.upper())

    @classmethod
    def add_init(cls, log_files: Optional[List[LogFileConfig]] = None,
                 console_config: Optional[ConsoleConfig] = None):
        """监听进程初始化：设置日志格式和输出目标.

        :param log_files: 日志文件配置列表
        :type log_files: Optional[List[LogFileConfig]]
        :param console_config: 控制台日志配置对象
        :type console_config: Optional[ConsoleConfig]
        :return: 监听进程专用的 logger
        """
        if console_config is None:
            console_config = ConsoleConfig()

        logger.remove()
        listener_logger = logger.bind(is_listener=True)
        worker_fmt = console_config.format or _DEFAULT_WORKER_FORMAT
        # 打包后的无控制台模式下 sys.stderr 可能为 None
        console_ok = console_config.enabled and sys.stderr is not None

        if console_ok:
            listener_logger.add(
                sys.stderr,
                format="<green>{time:HH:mm:ss.SSS}</green> | <level>{level: <8}</level> | LISTENER - {message}",
                level=console_config.level,
                colorize=console_config.colorize,
                filter=lambda record: "is_listener" in record["extra"],
            )
            logger.add(
                sys.stderr,
                format=worker_fmt,
                level=console_config.level,
                colorize=console_config.colorize,
                filter=lambda record: "is_listener" not in record["extra"],
            )

        for log_config in log_files or []:
            log_dir = os.path.dirname(log_config.file_path)
            if log_dir:
                os.makedirs(log_dir, exist_ok=True)

            add_kwargs = {
                "sink": log_config.file_path,
                "format": log_config.format or worker_fmt,
                "level": log_config.level,
                "filter": lambda record: "is_listener" not in record["extra"],
            }
            if log_config.rotation:
                add_kwargs["rotation"] = log_config.rotation
            if log_config.retention:
                add_kwargs["retention"] = log_config.retention
            if log_config.compression:
                add_kwargs["compression"] = log_config.compression
            logger.add(**add_kwargs)

        return listener_logger

    @classmethod
    def listener_process(cls, processing_queue: multiprocessing.Queue,
                         log_files: Optional[List[LogFileConfig]] = None,
                         console_config: Optional[ConsoleConfig] = None) -> None:
        """日志监听进程函数，收到 None 时退出.

        :param processing_queue: 接收日志信息的队列
        :type processing_queue: multiprocessing.Queue
        :param log_files: 日志文件配置列表
        :type log_files: Optional[List[LogFileConfig]]
        :param console_config: 控制台日志配置对象
        :type console_config: Optional[ConsoleConfig]
        """
        listener_logger = cls.add_init(log_files, console_config)

        while True:
            try:
                message = processing_queue.get()
                if message is None:
                    listener_logger.debug("收到终止信号,监听进程即将退出")
                    break

                if message["type"] == "worker":
                    log_message = message["message"]
                    if message.get("exception"):
                        log_message = f"{log_message}\n{message['exception']}"

                    logger.bind(
                        process=message["process"],
                        thread=message["thread"],
                        file=message["file"],
                        line=message["line"],
                        function=message["function"],
                        name=message["name"],
                        time=message["time"],
                    ).log(message["level"], log_message)
            except Exception as e:
                listener_logger.error(f"处理日志时出错: {e}")

    @classmethod
    def listener_process_start(cls, log_files: Optional[List[LogFileConfig]] = None,
                               console_config: Optional[ConsoleConfig] = None) -> multiprocessing.Queue:
        """开启监听进程.

        :param log_files: 日志文件配置列表
        :type log_files: Optional[List[LogFileConfig]]
        :param console_config: 控制台日志配置对象
        :type console_config: Optional[ConsoleConfig]
        :return: 用于接受日志信息的队列
        :rtype: multiprocessing.Queue
        """
        if cls.hans_loguru_queue is None:
            cls.hans_loguru_queue = multiprocessing.Queue()
        cls.listener = multiprocessing.Process(
            target=HansLoguru.listener_process,
            args=(cls.hans_loguru_queue, log_files, console_config),
            daemon=True,
        )
        cls.listener.start()
        return cls.hans_loguru_queue

    @classmethod
    def listener_process_stop(cls) -> None:
        """停止监听进程：发送终止信号并等待进程结束."""
        if cls.listener is None or cls.hans_loguru_queue is None:
            return
        cls.hans_loguru_queue.put(None)
        cls.listener.join()
        cls.listener = None
