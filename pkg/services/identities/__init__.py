# services/identities/__init__.py
"""恒等式模块.

把每个编号恒等式的左侧（求积 / 求和）与右侧（级数 / 闭式）配对，并按容差生成验证报告。
"""

from .catalog import CATALOG, get_entry, resolve_identity, route_for
from .sequences import SEQUENCES, get_sequence, sequence_names
from .inner import InnerFunction, psi_inner, pfq_inner
from .hurwitz_sum import shifted_psi_sum
from .theorems import SpecialCase, f1_lhs, f1_rhs, f2_lhs, f2_rhs, f3_pair, f4_pair, special_case_pair
from .fourier import FourierCase, FourierFamily, fourier_pair, elementary_pair
from .ramanujan import (
    MellinFamily,
    RamanujanCase,
    mellin_pair,
    moment_pair,
    ramanujan_pair,
    sum_5_7,
    sum_5_8,
)
from .verifier import IdentityService
from .grid import GridRunner

__all__ = [
    # 目录
    "CATALOG",
    "get_entry",
    "resolve_identity",
    "route_for",
    "SEQUENCES",
    "get_sequence",
    "sequence_names",
    # 内层函数
    "InnerFunction",
    "psi_inner",
    "pfq_inner",
    "shifted_psi_sum",
    # 定理与推论
    "SpecialCase",
    "f1_lhs",
    "f1_rhs",
    "f2_lhs",
    "f2_rhs",
    "f3_pair",
    "f4_pair",
    "special_case_pair",
    # Fourier / Ramanujan
    "FourierCase",
    "FourierFamily",
    "fourier_pair",
    "elementary_pair",
    "MellinFamily",
    "RamanujanCase",
    "mellin_pair",
    "moment_pair",
    "ramanujan_pair",
    "sum_5_7",
    "sum_5_8",
    # 服务
    "IdentityService",   # 单点验证
    "GridRunner",        # 网格并发运行
]
