# models/integrand_data.py
"""被积函数描述模型.

被积函数统一写成::

    x^mu · exp(-decay · x^xi) · W(x) · osc(x) · extra(x)

其中 W(x) 为 1（PureExp）或 1/(e^{s·x} − 1)（BoseFactor，s = bose_scale），
osc 为 1、cos(yx)、sin(yx) 或 √(xy)·J_ν(xy)。
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, Optional

import numpy as np


class OscillationKind(str, Enum):
    """振荡因子类型."""

    NONE = "None"
    COS = "Cos"
    SIN = "Sin"
    BESSEL_SQRT = "BesselSqrt"


class Envelope(str, Enum):
    """包络类型."""

    PURE_EXP = "PureExp"
    BOSE_FACTOR = "BoseFactor"


@dataclass(frozen=True)
class Oscillation:
    """振荡因子.

    属性：
        - kind: 振荡类型
        - y: 频率，振荡时必须为正
        - nu: Bessel 阶数（仅 BesselSqrt 使用）
    """

    kind: OscillationKind = OscillationKind.NONE
    y: float = 0.0
    nu: float = 0.0

    def __post_init__(self):
        if self.kind is not OscillationKind.NONE and not self.y > 0:
            raise ValueError(f"振荡频率必须为正: {self.y}")
        if self.kind is OscillationKind.BESSEL_SQRT and not self.nu > -1:
            raise ValueError(f"Bessel 阶数必须大于 -1: {self.nu}")

    @classmethod
    def none(cls) -> "Oscillation":
        return cls()

    @classmethod
    def cos(cls, y: float) -> "Oscillation":
        return cls(OscillationKind.COS, float(y))

    @classmethod
    def sin(cls, y: float) -> "Oscillation":
        return cls(OscillationKind.SIN, float(y))

    @classmethod
    def bessel_sqrt(cls, nu: float, y: float) -> "Oscillation":
        return cls(OscillationKind.BESSEL_SQRT, float(y), float(nu))

    @property
    def is_oscillatory(self) -> bool:
        return self.kind is not OscillationKind.NONE


@dataclass(frozen=True)
class IntegrandSpec:
    """半无限区间被积函数规格.

    属性：
        - mu: x 的幂次
        - xi: 指数中的伸缩幂 ξ > 0
        - decay: x^ξ 的系数；PureExp 时必须为正，BoseFactor 时可为 0
        - oscillation: 振荡因子
        - envelope: 包络类型
        - bose_scale: BoseFactor 中的 s，默认 2π
    """

    mu: float
    xi: float = 1.0
    decay: float = 1.0
    oscillation: Oscillation = field(default_factory=Oscillation)
    envelope: Envelope = Envelope.PURE_EXP
    bose_scale: float = 2.0 * math.pi

    def __post_init__(self):
        if not self.xi > 0:
            raise ValueError(f"xi 必须为正: {self.xi}")
        if self.envelope is Envelope.PURE_EXP and not self.decay > 0:
            raise ValueError(f"PureExp 包络要求 decay > 0: {self.decay}")
        if self.envelope is Envelope.BOSE_FACTOR:
            if self.decay < 0:
                raise ValueError(f"decay 不能为负: {self.decay}")
            if not self.bose_scale > 0:
                raise ValueError(f"bose_scale 必须为正: {self.bose_scale}")

    @property
    def origin_power(self) -> float:
        """x→0 时被积函数的幂次."""
        p = self.mu
        if self.envelope is Envelope.BOSE_FACTOR:
            p -= 1.0
        kind = self.oscillation.kind
        if kind is OscillationKind.SIN:
            p += 1.0
        elif kind is OscillationKind.BESSEL_SQRT:
            p += self.oscillation.nu + 0.5
        return p

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mu": self.mu,
            "xi": self.xi,
            "decay": self.decay,
            "oscillation": self.oscillation.kind.value,
            "y": self.oscillation.y,
            "nu": self.oscillation.nu,
            "envelope": self.envelope.value,
            "bose_scale": self.bose_scale,
        }


@dataclass(frozen=True)
class ExtraFactor:
    """附加的有界因子.

    属性：
        - func: 作用于 numpy 数组的函数 x -> f(x)
        - bound: 在 (0, ∞) 上 |f| 的声明上界，用于尾部估计
        - label: 日志中显示的名称
    """

    func: Callable[[np.ndarray], np.ndarray]
    bound: float
    label: Optional[str] = None

    def __post_init__(self):
        if not (self.bound >= 0 and math.isfinite(self.bound)):
            raise ValueError(f"附加因子的上界必须为非负有限数: {self.bound}")
