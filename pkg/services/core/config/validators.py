# services/core/config/validators.py
"""程序配置验证器模块.

检查数值选项、验证选项、网格与日志配置的类型和取值范围。
验证只返回错误信息列表，加载时不抛出异常。
"""

from typing import Any, Dict, List, Optional, Tuple

from loguru import logger

_LOG_LEVELS = ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL")

#: (点路径, 类型, 下界, 下界是否可取)
_NUMERIC_RULES: Tuple[Tuple[str, type, Optional[float], bool], ...] = (
    ("numerics.series.rel_stop", float, 0.0, False),
    ("numerics.series.decreasing_run", int, 1, True),
    ("numerics.series.max_terms", int, 1, True),
    ("numerics.series.cancellation_limit", float, 1.0, True),
    ("numerics.series.extended_precision.trigger", float, 1.0, True),
    ("numerics.series.extended_precision.max_dps", int, 16, True),
    ("numerics.quad.gauss_order", int, 2, True),
    ("numerics.quad.tol", float, 0.0, False),
    ("numerics.quad.tail_rel", float, 0.0, False),
    ("numerics.quad.max_segments", int, 1, True),
    ("numerics.quad.euler_depth", int, 1, True),
    ("numerics.quad.de_max_level", int, 1, True),
    ("numerics.quad.chunk", int, 1, True),
    ("identities.default_tol", float, 0.0, False),
    ("identities.series_tol", float, 0.0, False),
    ("identities.truncation_rel", float, 0.0, False),
    ("identities.max_k", int, 1, True),
    ("grid.jobs", int, 0, True),
    ("grid.max_points", int, 1, True),
)


class ValidationError(Exception):
    """配置验证错误异常类.

    当配置验证失败时抛出此异常。
    """
    pass


def _lookup(config: Dict[str, Any], key_path: str) -> Tuple[bool, Any]:
    value: Any = config
    for key in key_path.split("."):
        if not isinstance(value, dict) or key not in value:
            return False, None
        value = value[key]
    return True, value


class ConfigValidator:
    """程序配置验证器类.

    提供配置数据的验证功能。缺失的键不算错误（使用默认值）。
    """

    @classmethod
    def validate_full_config(cls, config: Dict[str, Any]) -> List[str]:
        """验证完整配置.

        :param config: 待验证的配置字典
        :type config: Dict[str, Any]
        :return: 验证错误信息列表，如果无错误则返回空列表
        :rtype: List[str]
        """
        logger.trace("")
        if not isinstance(config, dict):
            return ["配置根节点必须是对象"]
        all_errors: List[str] = []
        all_errors.extend(cls.validate_numerics(config))
        all_errors.extend(cls.validate_logging(config))
        return all_errors

    @classmethod
    def validate_numerics(cls, config: Dict[str, Any]) -> List[str]:
        """验证数值、验证与网格选项.

        :param config: 待验证的配置字典
        :type config: Dict[str, Any]
        :return: 错误信息列表
        :rtype: List[str]
        """
        errors: List[str] = []
        for key_path, kind, lower, inclusive in _NUMERIC_RULES:
            found, value = _lookup(config, key_path)
            if not found:
                continue
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                errors.append(f"{key_path} 必须是数值，收到 {value!r}")
                continue
            if kind is int and value != int(value):
                errors.append(f"{key_path} 必须是整数，收到 {value!r}")
                continue
            if lower is not None and (value < lower or (not inclusive and value == lower)):
                op = "≥" if inclusive else ">"
                errors.append(f"{key_path} 必须 {op} {lower}，收到 {value!r}")

        for key_path in ("numerics.series.extended_precision.enabled", "identities.dual_route"):
            found, value = _lookup(config, key_path)
            if found and not isinstance(value, bool):
                errors.append(f"{key_path} 必须是布尔值，收到 {value!r}")
        return errors

    @classmethod
    def validate_logging(cls, config: Dict[str, Any]) -> List[str]:
        """验证日志级别与日志文件列表.

        :param config: 待验证的配置字典
        :type config: Dict[str, Any]
        :return: 错误信息列表
        :rtype: List[str]
        """
        errors: List[str] = []
        for key_path in ("logging.level", "logging.console.level"):
            found, value = _lookup(config, key_path)
            if found and value is not None and str(value).upper() not in _LOG_LEVELS:
                errors.append(f"{key_path} 不是有效的日志级别: {value!r}")

        found, files = _lookup(config, "logging.files")
        if found:
            if not isinstance(files, list):
                errors.append("logging.files 必须是列表")
                return errors
            for i, file_cfg in enumerate(files):
                if not isinstance(file_cfg, dict):
                    errors.append(f"logging.files[{i}] 必须是对象")
                    continue
                if not file_cfg.get("filename"):
                    errors.append(f"logging.files[{i}] 缺少 filename")
                level = file_cfg.get("level")
                if level is not None and str(level).upper() not in _LOG_LEVELS:
                    errors.append(f"logging.files[{i}].level 不是有效的日志级别: {level!r}")
        return errors
