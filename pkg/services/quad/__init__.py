# services/quad/__init__.py
"""半无限区间求积包.

- integrate: 阻尼（可振荡）被积函数的积分
- integrate_bose_moment: Bose 因子矩积分 φ_{S,C}(m, n)
"""

from services.quad.bose import integrate_bose_moment
from services.quad.integrator import integrate
from services.quad.rules import gauss_legendre

__all__ = [
    "integrate",  # 半无限区间积分
    "integrate_bose_moment",  # Bose 矩积分
    "gauss_legendre",  # Gauss–Legendre 节点
]
