# models/config_data.py
"""配置数据模型.

配置文件是带说明键（"_comment"、"_xxx_comment" 等以下划线开头的键）的 JSON；本模块负责存储和点路径访问。
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

_NOTE_PREFIX = "_"


def strip_comments(data: Any) -> Any:
    """递归去掉以下划线开头的说明键."""
    if isinstance(data, dict):
        return {k: strip_comments(v) for k, v in data.items() if not str(k).startswith(_NOTE_PREFIX)}
    if isinstance(data, list):
        return [strip_comments(v) for v in data]
    return data


@dataclass
class ConfigData:
    """配置数据模型.

    属性：
        - data: 配置数据字典（已去掉说明键）
        - file_path: 配置文件路径
        - is_modified: 配置是否已修改
        - is_valid: 配置是否有效
        - validation_errors: 验证错误列表
    """

    data: Dict[str, Any] = field(default_factory=dict)

    file_path: Optional[Path] = None
    is_modified: bool = False
    is_valid: bool = True
    validation_errors: List[str] = field(default_factory=list)

    def __post_init__(self):
        if isinstance(self.file_path, str):
            self.file_path = Path(self.file_path)
        self.data = strip_comments(self.data)

    def get(self, key_path: str, default: Any = None) -> Any:
        """获取配置值.

        支持点号分隔的路径访问嵌套配置，例如 "numerics.quad.gauss_order"。

        :param key_path: 配置键路径，使用点号分隔
        :type key_path: str
        :param default: 默认值，当键不存在时返回
        :type default: Any
        :return: 配置值或默认值
        :rtype: Any
        """
        value = self.data
        try:
            for key in key_path.split('.'):
                value = value[key]
            return value
        except (KeyError, TypeError, IndexError):
            return default

    def set(self, key_path: str, value: Any) -> None:
        """设置配置值，中间路径不存在时自动创建.

        :param key_path: 配置键路径，使用点号分隔
        :type key_path: str
        :param value: 要设置的值
        :type value: Any
        """
        keys = key_path.split('.')
        data_ref = self.data
        for key in keys[:-1]:
            data_ref = data_ref.setdefault(key, {})
        data_ref[keys[-1]] = value
        self.is_modified = True
