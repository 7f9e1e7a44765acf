# services/specfun/zeta.py
"""Hurwitz ζ 函数与三伽马函数（复偏移）.

ζ(s, q) = Σ_{k≥0} (k+q)^{−s}，s > 1 为实数，Re q > 0。
实现：先把 Re q 平移到 ≥ 0.5，再直接求和前 N 项，余项用 Euler–Maclaurin 修正
（Bernoulli 数取到 B_14）。
"""

import math
from typing import Union

import numpy as np

from services.core.errors import DomainError

#: Bernoulli 数 B_{2j}/(2j)!，j = 1..7
_EM_COEFFS = (
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
)
_BLOCK = 16

ComplexLike = Union[complex, float]


def hurwitz_zeta(s: float, q: ComplexLike) -> complex:
    """计算 Hurwitz ζ(s, q).

    :param s: 实数阶，s > 1
    :type s: float
    :param q: 复偏移，Re q > 0
    :type q: complex | float
    :return: ζ(s, q)，绝对误差 ≤ 1e-12
    :rtype: complex
    :raises DomainError: s ≤ 1 或 Re q ≤ 0
    """
    q = complex(q)
    if not s > 1.0 or not math.isfinite(s):
        raise DomainError(f"hurwitz_zeta 要求 s > 1，收到 {s}")
    if not q.real > 0.0 or not math.isfinite(q.real) or not math.isfinite(q.imag):
        raise DomainError(f"hurwitz_zeta 要求 Re(q) > 0，收到 {q}")

    # ζ(s, q) = q^{−s} + ζ(s, q+1)
    head = 0j
    while q.real < 0.5:
        head += q ** (-s)
        q += 1.0

    # 虚部较大时加长直接求和段，保持 |w| 足够大
    block = max(_BLOCK, int(math.ceil(2.0 * abs(q.imag))))
    k = np.arange(block, dtype=float)
    direct = np.sum((q + k) ** (-s))

    w = q + block
    tail = w ** (1.0 - s) / (s - 1.0) + 0.5 * w ** (-s)
    rising = s          # s(s+1)…(s+2j−2)
    w_power = w ** (-s - 1.0)
    inv_w2 = 1.0 / (w * w)
    for j, coeff in enumerate(_EM_COEFFS, start=1):
        tail += coeff * rising * w_power
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        w_power *= inv_w2

    return complex(head + direct + tail)


def trigamma(z: ComplexLike) -> complex:
    """计算三伽马函数 ψ′(z) = ζ(2, z).

    :param z: 复自变量，Re z > 0
    :type z: complex | float
    :return: ψ′(z)
    :rtype: complex
    :raises DomainError: Re z ≤ 0
    """
    z = complex(z)
    if not z.real > 0.0:
        raise DomainError(f"trigamma 要求 Re(z) > 0，收到 {z}")
    return hurwitz_zeta(2.0, z)


__all__ = ["hurwitz_zeta", "trigamma"]
