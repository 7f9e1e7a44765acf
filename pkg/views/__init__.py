# views/__init__.py
"""视图层.

当前只有命令行视图。
"""
from .cli import CliApp, build_parser

__all__ = [
    'CliApp',
    'build_parser',
]
