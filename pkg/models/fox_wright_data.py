# models/fox_wright_data.py
"""Fox-Wright 函数参数模型.

定义 pΨq 的上/下参数对、收敛域分类及其报告。
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Sequence, Tuple

from typing_extensions import Self


@dataclass(frozen=True)
class ParamPair:
    """参数对 (shift, stretch)，对应 Γ(shift + k·stretch).

    属性：
        - shift: α_j 或 β_j
        - stretch: A_j 或 B_j，必须非负
    """

    shift: float
    stretch: float

    def __post_init__(self):
        if self.stretch < 0:
            raise ValueError(f"stretch 必须非负: {self.stretch}")

    def argument(self, k: int) -> float:
        """第 k 项的 Γ 参数."""
        return self.shift + k * self.stretch


@dataclass(frozen=True)
class FoxWrightSpec:
    """pΨq 实例.

    属性：
        - upper: 上参数对 (α_j, A_j)，长度 p
        - lower: 下参数对 (β_j, B_j)，长度 q
    """

    upper: Tuple[ParamPair, ...] = field(default_factory=tuple)
    lower: Tuple[ParamPair, ...] = field(default_factory=tuple)

    @classmethod
    def of(cls, upper: Sequence[Tuple[float, float]] = (),
           lower: Sequence[Tuple[float, float]] = ()) -> Self:
        """由 (shift, stretch) 元组序列构造.

        :param upper: 上参数对序列
        :type upper: Sequence[Tuple[float, float]]
        :param lower: 下参数对序列
        :type lower: Sequence[Tuple[float, float]]
        :return: 规格对象
        :rtype: FoxWrightSpec
        """
        return cls(
            upper=tuple(ParamPair(float(a), float(A)) for a, A in upper),
            lower=tuple(ParamPair(float(b), float(B)) for b, B in lower),
        )

    @property
    def p(self) -> int:
        return len(self.upper)

    @property
    def q(self) -> int:
        return len(self.lower)

    def to_dict(self) -> Dict[str, List[List[float]]]:
        return {
            "upper": [[pp.shift, pp.stretch] for pp in self.upper],
            "lower": [[pp.shift, pp.stretch] for pp in self.lower],
        }

    def label(self) -> str:
        """紧凑文本表示，例如 ``1Psi1[(1,2);(0.5,1)]``."""
        up = ",".join(f"({pp.shift:g},{pp.stretch:g})" for pp in self.upper)
        lo = ",".join(f"({pp.shift:g},{pp.stretch:g})" for pp in self.lower)
        return f"{self.p}Psi{self.q}[{up};{lo}]"


class ConvergenceDomain(str, Enum):
    """级数收敛域."""

    ENTIRE_PLANE = "EntirePlane"
    OPEN_DISC = "OpenDisc"
    DISC_WITH_BOUNDARY = "DiscWithBoundary"
    DIVERGENT_SERIES = "DivergentSeries"


@dataclass(frozen=True)
class ConvergenceReport:
    """收敛参数与分类.

    属性：
        - delta_cap: Δ = ΣB_j − ΣA_j
        - radius: δ = ΠA_j^{−A_j}·ΠB_j^{B_j}
        - mu_star: μ* = Σβ_j − Σα_j + (p−q)/2
        - domain: 三分法得到的收敛域
    """

    delta_cap: float
    radius: float
    mu_star: float
    domain: ConvergenceDomain

    def to_dict(self) -> Dict[str, Any]:
        return {
            "delta_cap": self.delta_cap,
            "radius": self.radius,
            "mu_star": self.mu_star,
            "domain": self.domain.value,
        }
