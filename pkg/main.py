# main.py
"""Fox-Wright 恒等式验证工具主程序模块.

此模块是命令行入口，负责解析参数、初始化日志系统和服务容器并分发命令。
"""

import sys
from multiprocessing import freeze_support
from typing import List, Optional

from loguru import logger

from lib.hans_loguru import HansLoguru
from services import ServiceContainer
from services.core import ConfigService
from viewmodels import ExitCode
from views import CliApp, build_parser


def main(argv: Optional[List[str]] = None) -> int:
    """应用主函数.

    日志配置从 --config 指定文件的 logging 节读取，支持：
    - 多个日志文件，每个文件独立配置级别、轮转策略等
    - 控制台输出配置（级别、颜色、格式），固定写 stderr
    - 网格工作进程通过同一个队列汇总日志

    :param argv: 命令行参数，None 使用 sys.argv
    :type argv: Optional[List[str]]
    :return: 退出码 0 通过 / 1 失败 / 2 用法错误
    :rtype: int
    """
    # 用法错误时 argparse 以退出码 2 退出
    args = build_parser().parse_args(argv)

    # 监听进程启动之前只输出警告
    logger.remove()
    logger.add(sys.stderr, level="WARNING")

    # 创建配置服务实例（自动加载配置文件，不存在则使用默认配置）
    config_service = ConfigService(args.config)
    config_service.apply_overrides({"logging.console.level": args.log_level})

    # HANS: B 主进程配置 logger
    queue = HansLoguru.listener_process_start(
        log_files=config_service.get_log_file_configs(),
        console_config=config_service.get_console_config(),
    )
    HansLoguru.add(queue)
    # HANS: E 主进程配置 logger
    logger.debug(f"生效配置:\n{config_service.export_to_json()}")

    # 创建服务容器（注入配置服务与命令行覆盖）
    container = ServiceContainer(
        config=config_service,
        tol=getattr(args, "tol", None),
        jobs=getattr(args, "jobs", None),
        log_queue=queue,
    )
    app = CliApp(container)

    try:
        exit_code = int(app.run(args))
    except Exception as e:
        logger.opt(exception=e).error(f"{args.command} 异常退出")
        exit_code = int(ExitCode.FAILED)
    finally:
        app.cleanup()
        container.cleanup()
        HansLoguru.listener_process_stop()

    return exit_code


if __name__ == "__main__":
    freeze_support()
    sys.exit(main())
