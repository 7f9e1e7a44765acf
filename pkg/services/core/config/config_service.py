# services/core/config/config_service.py
"""配置服务模块.

本模块提供配置的加载、验证和访问功能，并把数值相关的配置节转换为
冻结的选项数据类（OptionBundle）。
采用依赖注入模式，通过构造函数接收配置文件路径。
"""

import datetime
import json
import os
from copy import deepcopy
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Union

from loguru import logger

from models.config_data import ConfigData
from models.options import IdentityOptions, OptionBundle, QuadOptions, SeriesOptions
from .defaults import DEFAULT_CONFIG
from .validators import ConfigValidator


class ConfigService:
    """配置服务类.

    服务层组件，负责配置的加载、验证和访问。

    使用方法：
        # 创建服务实例（自动加载配置文件）
        config_service = ConfigService("./configs/config.json")

        # 通过实例访问配置
        options = config_service.option_bundle()
        jobs = config_service.grid_jobs
        log_files = config_service.get_log_file_configs()
        console_config = config_service.get_console_config()
    """

    def __init__(self, config_path: Optional[str] = None):
        """初始化配置服务实例.

        从指定路径加载配置文件，如果文件不存在或加载失败则使用默认配置。

        :param config_path: 配置文件路径，None 直接使用默认配置
        :type config_path: Optional[str]
        """
        logger.trace("初始化 ConfigService 实例")

        try:
            if config_path and os.path.exists(config_path):
                self._config: ConfigData = self._load_from_file(config_path)
                logger.info(f"已加载配置文件: {config_path}")
            else:
                self._config = self._create_default()
                logger.info("配置文件不存在，使用默认配置")
        except Exception as e:
            logger.opt(exception=e).warning("加载配置文件失败，使用默认配置")
            self._config = self._create_default()

        self._output_paths: Dict[str, Path] = self._init_output_paths()

    # ==================== 实例属性 ====================
    @property
    def config(self) -> ConfigData:
        """获取配置数据对象.

        :return: 配置数据对象
        :rtype: ConfigData
        """
        return self._config

    @property
    def output_paths(self) -> Dict[str, Path]:
        """获取输出路径字典.

        :return: 包含各个输出路径的字典 {"root", "logs"}
        :rtype: Dict[str, Path]
        """
        return self._output_paths

    @property
    def logging_config(self) -> Dict:
        """获取日志配置."""
        return self._config.get("logging", {})

    @property
    def log_level(self) -> str:
        """获取全局日志级别."""
        return self._config.get("logging.level", "INFO")

    @property
    def grid_jobs(self) -> int:
        """网格并发进程数，0 表示可用 CPU 数."""
        return int(self._value("grid.jobs"))

    @property
    def grid_max_points(self) -> int:
        return int(self._value("grid.max_points"))

    # ==================== 数值选项 ====================
    def series_options(self) -> SeriesOptions:
        """构造级数求和选项.

        :return: 冻结的级数选项
        :rtype: SeriesOptions
        """
        return SeriesOptions(
            rel_stop=float(self._value("numerics.series.rel_stop")),
            decreasing_run=int(self._value("numerics.series.decreasing_run")),
            max_terms=int(self._value("numerics.series.max_terms")),
            cancellation_limit=float(self._value("numerics.series.cancellation_limit")),
            extended_enabled=bool(self._value("numerics.series.extended_precision.enabled")),
            extended_trigger=float(self._value("numerics.series.extended_precision.trigger")),
            extended_max_dps=int(self._value("numerics.series.extended_precision.max_dps")),
        )

    def quad_options(self) -> QuadOptions:
        """构造求积选项.

        :return: 冻结的求积选项
        :rtype: QuadOptions
        """
        return QuadOptions(
            gauss_order=int(self._value("numerics.quad.gauss_order")),
            tol=float(self._value("numerics.quad.tol")),
            tail_rel=float(self._value("numerics.quad.tail_rel")),
            max_segments=int(self._value("numerics.quad.max_segments")),
            euler_depth=int(self._value("numerics.quad.euler_depth")),
            de_max_level=int(self._value("numerics.quad.de_max_level")),
            chunk=int(self._value("numerics.quad.chunk")),
        )

    def identity_options(self, tol: Optional[float] = None) -> IdentityOptions:
        """构造验证选项.

        :param tol: 命令行 --tol 覆盖值，同时替换两种默认容差
        :type tol: Optional[float]
        :return: 冻结的验证选项
        :rtype: IdentityOptions
        """
        default_tol = float(self._value("identities.default_tol"))
        series_tol = float(self._value("identities.series_tol"))
        if tol is not None:
            default_tol = series_tol = float(tol)
        return IdentityOptions(
            default_tol=default_tol,
            series_tol=series_tol,
            truncation_rel=float(self._value("identities.truncation_rel")),
            dual_route=bool(self._value("identities.dual_route")),
            max_k=int(self._value("identities.max_k")),
        )

    def option_bundle(self, tol: Optional[float] = None) -> OptionBundle:
        """一次求值所需的全部数值选项.

        :param tol: 可选的容差覆盖
        :type tol: Optional[float]
        :return: 选项集合
        :rtype: OptionBundle
        """
        logger.trace("")
        return OptionBundle(
            series=self.series_options(),
            quad=self.quad_options(),
            identity=self.identity_options(tol),
        )

    # ==================== 日志 ====================
    def get_log_file_configs(self):
        """获取日志文件配置列表.

        从配置数据中提取启用的日志文件配置，并转换为 HansLoguru 的 LogFileConfig 对象列表。
        有启用的日志文件时才创建日志目录。

        :return: LogFileConfig 对象列表
        :rtype: list
        """
        from lib.hans_loguru import LogFileConfig

        logger.trace("获取日志文件配置")
        log_files = []

        for file_cfg in self._config.get("logging.files", []):
            if not file_cfg.get("enabled", True):
                continue

            self._output_paths["logs"].mkdir(parents=True, exist_ok=True)
            file_path = str(self._output_paths["logs"] / file_cfg.get("filename", "app.log"))

            # 为 null 时使用全局级别
            level = file_cfg.get("level") or self.log_level

            log_files.append(LogFileConfig(
                file_path=file_path,
                level=level,
                rotation=file_cfg.get("rotation"),
                retention=file_cfg.get("retention"),
                compression=file_cfg.get("compression"),
                format=file_cfg.get("format")
            ))
            logger.debug(f"已添加日志文件配置: {file_cfg.get('name', 'unknown')} -> {file_path} (级别: {level})")

        return log_files

    def get_console_config(self):
        """获取控制台日志配置.

        :return: ConsoleConfig 对象
        :rtype: ConsoleConfig
        """
        from lib.hans_loguru import ConsoleConfig

        logger.trace("获取控制台日志配置")
        console_dict = self._config.get("logging.console", {})
        level = console_dict.get("level") or self.log_level
        return ConsoleConfig(
            enabled=console_dict.get("enabled", True),
            level=level,
            format=console_dict.get("format"),
            colorize=console_dict.get("colorize", True)
        )

    def validate(self) -> bool:
        """验证配置数据.

        :return: 配置是否有效
        :rtype: bool
        """
        logger.trace("验证配置数据")
        errors = ConfigValidator.validate_full_config(self._config.data)
        self._config.validation_errors = errors
        self._config.is_valid = len(errors) == 0
        return self._config.is_valid

    def export_to_json(self) -> str:
        """导出为JSON字符串."""
        return json.dumps(self._config.data, indent=4, ensure_ascii=False)

    def apply_overrides(self, overrides: Mapping[str, Any]) -> bool:
        """写入命令行覆盖值并重新验证.

        :param overrides: {键路径: 值}，值为 None 的项跳过
        :type overrides: Mapping[str, Any]
        :return: 覆盖后配置是否有效
        :rtype: bool
        """
        for key_path, value in overrides.items():
            if value is None:
                continue
            self._config.set(key_path, value)
            logger.debug(f"命令行覆盖: {key_path} = {value!r}")
        if not self.validate():
            error_msg = "\n".join(self._config.validation_errors)
            logger.warning(f"覆盖后配置验证失败，无效项使用默认值:\n{error_msg}")
        return self._config.is_valid

    # ==================== 内部方法 ====================
    def _value(self, key_path: str) -> Any:
        """配置值；缺失或无效时回退到 DEFAULT_CONFIG."""
        value = self._config.get(key_path)
        if value is None or (not self._config.is_valid and key_path in self._invalid_keys()):
            default = ConfigData(data=DEFAULT_CONFIG).get(key_path)
            return default
        return value

    def _invalid_keys(self) -> set:
        return {message.split(" ", 1)[0] for message in self._config.validation_errors}

    def _init_output_paths(self) -> Dict[str, Path]:
        """计算输出路径（不创建目录）.

        :return: 包含各个输出路径的字典
        :rtype: Dict[str, Path]
        """
        auto_generate = self._config.get("output.auto_generate", False)
        root_dir = self._config.get("output.root_dir", "./output")
        manual_dir = self._config.get("output.manual_dir")
        logs_subdir = self._config.get("output.subdirs.logs", "logs")

        if auto_generate:
            time_str = datetime.datetime.now().strftime("%Y_%m_%d_%H_%M_%S")
            root_path = Path(root_dir) / time_str
        else:
            root_path = Path(manual_dir) if manual_dir else Path(root_dir)

        return {
            "root": root_path,
            "logs": root_path / logs_subdir,
        }

    def _create_default(self) -> ConfigData:
        """创建默认配置数据."""
        logger.trace("创建默认配置")
        return ConfigData(
            data=deepcopy(DEFAULT_CONFIG),
            is_valid=True
        )

    def _load_from_file(self, file_path: Union[str, Path]) -> ConfigData:
        """从文件加载配置.

        :param file_path: 配置文件路径
        :type file_path: Union[str, Path]
        :return: 加载的配置数据对象
        :rtype: ConfigData
        :raises FileNotFoundError: 当配置文件不存在时
        :raises json.JSONDecodeError: 当JSON解析失败时
        """
        logger.trace(f"从文件加载配置: {file_path}")
        file_path = Path(file_path)

        with open(file_path, 'r', encoding='utf-8') as f:
            loaded_data = json.load(f)

        errors = ConfigValidator.validate_full_config(loaded_data)
        if errors:
            error_msg = "\n".join(errors)
            logger.warning(f"配置验证失败，无效项使用默认值:\n{error_msg}")

        return ConfigData(
            data=loaded_data,
            file_path=file_path,
            is_valid=not errors,
            validation_errors=errors
        )
