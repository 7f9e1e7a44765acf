# views/cli/__init__.py
"""命令行视图."""

from . import formatters
from .app import CliApp, build_parser, parse_list, parse_pairs

__all__ = [
    'CliApp',           # 命令分发
    'build_parser',
    'parse_pairs',
    'parse_list',
    'formatters',       # 规范 JSON 与人类可读输出
]
