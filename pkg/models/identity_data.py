# models/identity_data.py
"""恒等式验证数据模型.

定义恒等式编号、参数点、Θ(k) 序列和单点验证报告。
"""

import math
from dataclasses import dataclass, field, fields, replace
from enum import Enum
from typing import Any, Callable, Dict, Optional, Tuple

from typing_extensions import Self

from models.eval_result import EvalResult
from models.fox_wright_data import FoxWrightSpec


class IdentityId(str, Enum):
    """可验证的恒等式编号."""

    THM1_2_1 = "Thm1_2_1"
    THM2_3_1 = "Thm2_3_1"
    COR1_3_2 = "Cor1_3_2"
    COR2_3_3 = "Cor2_3_3"
    SC_3_4 = "SC_3_4"
    SC_3_5 = "SC_3_5"
    SC_3_6 = "SC_3_6"
    FC1_4_1 = "FC1_4_1"
    FS1_4_2 = "FS1_4_2"
    FC2_4_3 = "FC2_4_3"
    FS2_4_4 = "FS2_4_4"
    FC3_4_5 = "FC3_4_5"
    FS3_4_6 = "FS3_4_6"
    RAM_5_1 = "Ram_5_1"
    RAM_5_2 = "Ram_5_2"
    RAM_5_3 = "Ram_5_3"
    RAM_5_4 = "Ram_5_4"
    RAM_5_5 = "Ram_5_5"
    RAM_5_6 = "Ram_5_6"
    SUM_5_7 = "Sum_5_7"
    SUM_5_8 = "Sum_5_8"
    MELLIN_COS = "Mellin_cos"
    MELLIN_SIN = "Mellin_sin"
    M_1_7A = "M_1_7a"
    M_1_7B = "M_1_7b"
    ELEM_COS_S2 = "Elem_cos_S2"
    ELEM_SIN_S2 = "Elem_sin_S2"


class GrowthClass(str, Enum):
    """Θ(k) 的增长类别.

    - BOUNDED: |Θ(k)| ≤ declared_bound
    - FACTORIAL: Θ(k) = k!，由 e^{−2πkx} 的几何衰减支配
    - SERIES_COEFFICIENT: Θ(k)/k! 是在单位闭圆盘上收敛的内层级数的系数
    - UNKNOWN: 无法解析地支配
    """

    BOUNDED = "bounded"
    FACTORIAL = "factorial"
    SERIES_COEFFICIENT = "series_coefficient"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class BoundedSequence:
    """序列 Θ(k).

    属性：
        - name: 名称（用于报告）
        - generator: k -> Θ(k)
        - declared_bound: 有界时的上界；无界时为 None
        - growth: 增长类别
        - coefficient: 可选 k -> Θ(k)/k!（避免阶乘溢出）
    """

    name: str
    generator: Callable[[int], float]
    declared_bound: Optional[float] = 1.0
    growth: GrowthClass = GrowthClass.BOUNDED
    coefficient: Optional[Callable[[int], float]] = None

    @property
    def is_bounded(self) -> bool:
        return self.declared_bound is not None

    def __call__(self, k: int) -> float:
        return self.generator(k)

    def over_factorial(self, k: int) -> float:
        """Θ(k)/k!."""
        if self.coefficient is not None:
            return self.coefficient(k)
        return self.generator(k) / math.factorial(k)


@dataclass(frozen=True)
class ParamPoint:
    """参数点.

    只需设置所选恒等式用到的字段；σ 总由 μ、ν、ξ 推导，不单独存储。

    Θ(k) 以名称引用（见序列目录），保证参数点可序列化、可跨进程传递。
    """

    mu: Optional[float] = None
    xi: Optional[float] = None
    a: Optional[float] = None
    b: Optional[float] = None
    c: Optional[float] = None
    nu: Optional[float] = None
    y: Optional[float] = None
    eta: Optional[float] = None
    m: Optional[int] = None
    n: Optional[float] = None

    # ── Θ(k) 与内层函数 ──
    theta: Optional[str] = None
    psi_spec: Optional[FoxWrightSpec] = None
    pfq_upper: Optional[Tuple[float, ...]] = None
    pfq_lower: Optional[Tuple[float, ...]] = None

    # ── 特例 (3.4)–(3.6) ──
    beta1: Optional[float] = None
    big_b1: Optional[float] = None
    gamma: Optional[float] = None
    inner_mu: Optional[float] = None

    #: 可以作为网格轴的标量字段
    SCALAR_FIELDS = ("mu", "xi", "a", "b", "c", "nu", "y", "eta", "m", "n",
                     "beta1", "big_b1", "gamma", "inner_mu")

    def with_values(self, **values: Any) -> Self:
        """返回替换部分字段后的新参数点."""
        if "m" in values and values["m"] is not None:
            values["m"] = int(values["m"])
        return replace(self, **values)

    @property
    def sigma(self) -> float:
        """σ = (2μ + 2ν + 3)/(2ξ)."""
        return (2.0 * self.mu + 2.0 * self.nu + 3.0) / (2.0 * self.xi)

    def is_set(self, name: str) -> bool:
        return getattr(self, name) is not None

    def to_params(self) -> Dict[str, float]:
        """展平为 {名称: 浮点数}，内层参数以点路径命名."""
        params: Dict[str, float] = {}
        for f in fields(self):
            value = getattr(self, f.name)
            if value is None or f.name == "theta":
                continue
            if f.name == "psi_spec":
                for side in ("upper", "lower"):
                    for i, pair in enumerate(getattr(value, side)):
                        params[f"psi.{side}.{i}.shift"] = float(pair.shift)
                        params[f"psi.{side}.{i}.stretch"] = float(pair.stretch)
            elif f.name in ("pfq_upper", "pfq_lower"):
                side = f.name.split("_")[1]
                for i, v in enumerate(value):
                    params[f"pfq.{side}.{i}"] = float(v)
            else:
                params[f.name] = float(value)
        return params

    def describe(self) -> str:
        """用于人类可读输出的简短描述."""
        parts = [f"{k}={v:g}" for k, v in self.to_params().items()]
        if self.theta is not None:
            parts.append(f"theta={self.theta}")
        return " ".join(parts)


@dataclass(frozen=True)
class RoutePair:
    """一个恒等式两侧（以及可选第三条路径）的求值结果.

    可以按 ``lhs, rhs = pair`` 解包。
    """

    lhs: EvalResult
    rhs: EvalResult
    alt: Optional[EvalResult] = None
    alt_route: Optional[str] = None
    note: str = ""

    def __iter__(self):
        yield self.lhs
        yield self.rhs

    def with_note(self, note: str) -> Self:
        if not note:
            return self
        merged = f"{self.note}; {note}" if self.note else note
        return replace(self, note=merged)


@dataclass
class IdentityReport:
    """单个参数点的验证报告.

    属性：
        - id: 恒等式编号
        - point: 参数点
        - lhs / rhs: 两条路径的结果，出错时为 None
        - abs_diff / rel_diff: 差值
        - tol: 容差
        - passed: abs_diff ≤ max(tol, tol·max(|lhs|, |rhs|))
        - note: 注释（勘误、警告、错误说明）
        - alt: 可选的第三条路径
        - alt_route: 第三条路径的名称
        - error: 传播出来的异常类名
    """

    id: IdentityId
    point: ParamPoint
    lhs: Optional[EvalResult]
    rhs: Optional[EvalResult]
    abs_diff: float
    rel_diff: float
    tol: float
    passed: bool
    note: str = ""
    alt: Optional[EvalResult] = None
    alt_route: Optional[str] = None
    error: Optional[str] = None

    @property
    def caveat(self) -> bool:
        """未通过但差值小于两侧误差估计之和（精度不足而非不一致）."""
        if self.passed or self.lhs is None or self.rhs is None:
            return False
        return self.abs_diff < self.lhs.abs_err_est + self.rhs.abs_err_est

    def sort_key(self) -> Tuple[str, Tuple[Tuple[str, float], ...]]:
        return self.id.value, tuple(sorted(self.point.to_params().items()))


@dataclass
class IdentityCatalogEntry:
    """恒等式目录条目.

    属性：
        - id: 编号
        - slug: 命令行名称
        - equation: 公式出处标记，例如 "(2.1)"
        - title: 简短说明
        - required: 必需的参数字段
    """

    id: IdentityId
    slug: str
    equation: str
    title: str
    required: Tuple[str, ...] = field(default_factory=tuple)
