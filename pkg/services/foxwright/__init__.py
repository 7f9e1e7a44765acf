"""Fox-Wright 函数引擎.

本模块提供 pΨq 的收敛域分类、级数求值与具名特例，包括：
    - classify / fox_wright_eval: 三分法分类与对数空间求和
    - wright_phi / wright_bessel / mittag_leffler: 单参数族特例
    - p_f_q: 广义超几何函数
    - bessel_j: 第一类 Bessel 函数
    - one_psi_one_theorem1: 定理 1 右侧的 1Ψ1（含 2F1 / Kummer 约化）
"""

from .classifier import classify, check_admissible
from .series import fox_wright_eval, fox_wright_coefficient, fox_wright_coefficients, fox_wright_array
from .bessel import bessel_j, bessel_j_array, bessel_j_reduced, sqrt_bessel_j
from .reductions import (
    wright_phi,
    wright_bessel,
    mittag_leffler,
    p_f_q,
    theorem1_spec,
    one_psi_one_theorem1,
)

__all__ = [
    "classify",                 # Δ、δ、μ* 与收敛域
    "check_admissible",
    "fox_wright_eval",
    "fox_wright_coefficient",   # 单个系数
    "fox_wright_coefficients",  # 求积节点上的内层级数
    "fox_wright_array",
    "bessel_j",
    "bessel_j_array",
    "bessel_j_reduced",
    "sqrt_bessel_j",            # √x·J_ν(x)，求积振荡因子
    "wright_phi",
    "wright_bessel",
    "mittag_leffler",
    "p_f_q",
    "theorem1_spec",
    "one_psi_one_theorem1",
]
