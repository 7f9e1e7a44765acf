# viewmodels/__init__.py
"""视图模型层 - ViewModel Layer"""

from .base_viewmodel import BaseViewModel, ExitCode, UsageError
from .eval_viewmodel import FUNCTIONS, EvalOutput, EvalViewModel
from .verify_viewmodel import VerifyViewModel, point_from_mapping
from .grid_viewmodel import GridViewModel, parse_axis

__all__ = [
    'BaseViewModel',
    'ExitCode',         # 0 通过 / 1 失败 / 2 用法错误
    'UsageError',
    'EvalViewModel',
    'EvalOutput',
    'FUNCTIONS',        # eval 函数表
    'VerifyViewModel',
    'point_from_mapping',
    'GridViewModel',
    'parse_axis',
]
