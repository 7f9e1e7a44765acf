"""基础特殊函数模块.

本模块提供标量基础函数，包括：
    - log_gamma / pochhammer_ratio: Γ 函数相关
    - hurwitz_zeta / trigamma: 复偏移的 Hurwitz ζ 与 ψ′
    - gauss_2f1: 实自变量 Gauss 超几何函数
"""

from .gamma import log_gamma, log_abs_gamma, gamma_fn, rgamma, is_gamma_pole, pochhammer_ratio
from .zeta import hurwitz_zeta, trigamma
from .hypergeometric import SeriesSum, hypergeometric_series, gauss_2f1, gauss_2f1_eval, gauss_2f1_array, hypergeometric_array

__all__ = [
    "log_gamma",              # ln Γ(x)，x > 0
    "log_abs_gamma",          # (ln|Γ|, 符号)
    "gamma_fn",
    "rgamma",
    "is_gamma_pole",
    "pochhammer_ratio",       # b/(b+ck)
    "hurwitz_zeta",
    "trigamma",
    "SeriesSum",
    "hypergeometric_series",
    "gauss_2f1",
    "gauss_2f1_eval",
    "gauss_2f1_array",        # 求积节点上的数组版本
    "hypergeometric_array",
]
