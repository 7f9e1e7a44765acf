# services/identities/catalog.py
"""恒等式目录模块.

每个 IdentityId 对应一个目录条目（命令行名称、公式出处、必需字段）和一个
路径函数 (point, options) -> RoutePair。
"""

from functools import partial
from typing import Callable, Dict, List

from models.identity_data import IdentityCatalogEntry, IdentityId, ParamPoint, RoutePair
from models.options import OptionBundle
from services.core.errors import HypothesisViolation
from services.identities.fourier import FourierCase, FourierFamily, elementary_pair, fourier_pair
from services.identities.ramanujan import (
    MellinFamily,
    RamanujanCase,
    mellin_pair,
    moment_pair,
    ramanujan_pair,
    sum_5_7,
    sum_5_8,
)
from services.identities.theorems import (
    SpecialCase,
    f1_lhs,
    f1_rhs,
    f2_pair,
    f3_pair,
    f4_pair,
    special_case_pair,
)

RouteFn = Callable[[ParamPoint, OptionBundle], RoutePair]

_BESSEL_A = ("mu", "xi", "a", "nu", "y")
_BESSEL_BC = ("mu", "xi", "b", "c", "nu", "y")
_FOURIER = ("eta", "b", "c", "y")

CATALOG: List[IdentityCatalogEntry] = [
    IdentityCatalogEntry(IdentityId.THM1_2_1, "thm1", "(2.1)", "F₁ 与 1Ψ1 表示", _BESSEL_A),
    IdentityCatalogEntry(IdentityId.THM2_3_1, "thm2", "(3.1)", "F₂：有界 Θ(k) 的 k 级数", _BESSEL_BC + ("theta",)),
    IdentityCatalogEntry(IdentityId.COR1_3_2, "cor1", "(3.2)", "内层 rΨs", _BESSEL_BC + ("psi_spec",)),
    IdentityCatalogEntry(IdentityId.COR2_3_3, "cor2", "(3.3)", "内层 rFs",
                         _BESSEL_BC + ("pfq_upper", "pfq_lower")),
    IdentityCatalogEntry(IdentityId.SC_3_4, "sc-3-4", "(3.4)", "内层 Wright 函数", _BESSEL_BC + ("beta1", "big_b1")),
    IdentityCatalogEntry(IdentityId.SC_3_5, "sc-3-5", "(3.5)", "内层 Wright 广义 Bessel 函数",
                         _BESSEL_BC + ("gamma", "inner_mu")),
    IdentityCatalogEntry(IdentityId.SC_3_6, "sc-3-6", "(3.6)", "内层 Mittag-Leffler 函数",
                         _BESSEL_BC + ("beta1", "big_b1")),
    IdentityCatalogEntry(IdentityId.FC1_4_1, "fc1-4-1", "(4.1)", "余弦变换，Θ(k)", _FOURIER + ("theta",)),
    IdentityCatalogEntry(IdentityId.FS1_4_2, "fs1-4-2", "(4.2)", "正弦变换，Θ(k)", _FOURIER + ("theta",)),
    IdentityCatalogEntry(IdentityId.FC2_4_3, "fc2-4-3", "(4.3)", "余弦变换，内层 rΨs", _FOURIER + ("psi_spec",)),
    IdentityCatalogEntry(IdentityId.FS2_4_4, "fs2-4-4", "(4.4)", "正弦变换，内层 rΨs", _FOURIER + ("psi_spec",)),
    IdentityCatalogEntry(IdentityId.FC3_4_5, "fc3-4-5", "(4.5)", "余弦变换，内层 rFs",
                         _FOURIER + ("pfq_upper", "pfq_lower")),
    IdentityCatalogEntry(IdentityId.FS3_4_6, "fs3-4-6", "(4.6)", "正弦变换，内层 rFs",
                         _FOURIER + ("pfq_upper", "pfq_lower")),
    IdentityCatalogEntry(IdentityId.RAM_5_1, "ram-5-1", "(5.1)", "Ramanujan 余弦积分", ("m", "n")),
    IdentityCatalogEntry(IdentityId.RAM_5_2, "ram-5-2", "(5.2)", "Ramanujan 正弦积分", ("m", "n")),
    IdentityCatalogEntry(IdentityId.RAM_5_3, "ram-5-3", "(5.3)", "余弦，内层 rΨs(e^{−2πx})", ("m", "n", "psi_spec")),
    IdentityCatalogEntry(IdentityId.RAM_5_4, "ram-5-4", "(5.4)", "正弦，内层 rΨs(e^{−2πx})", ("m", "n", "psi_spec")),
    IdentityCatalogEntry(IdentityId.RAM_5_5, "ram-5-5", "(5.5)", "余弦，内层 rFs(e^{−2πx})",
                         ("m", "n", "pfq_upper", "pfq_lower")),
    IdentityCatalogEntry(IdentityId.RAM_5_6, "ram-5-6", "(5.6)", "正弦，内层 rFs(e^{−2πx})",
                         ("m", "n", "pfq_upper", "pfq_lower")),
    IdentityCatalogEntry(IdentityId.SUM_5_7, "sum-5-7", "(5.7)", "1Ψ1 求和的双曲闭式", ("n",)),
    IdentityCatalogEntry(IdentityId.SUM_5_8, "sum-5-8", "(5.8)", "1Ψ1 求和的三伽马闭式", ("n",)),
    IdentityCatalogEntry(IdentityId.MELLIN_COS, "mellin-cos", "§1 Mellin", "Bose 余弦积分的 Hurwitz ζ 形式",
                         ("mu", "a", "b")),
    IdentityCatalogEntry(IdentityId.MELLIN_SIN, "mellin-sin", "§1 Mellin", "Bose 正弦积分的 Hurwitz ζ 形式",
                         ("mu", "a", "b")),
    IdentityCatalogEntry(IdentityId.M_1_7A, "m-1-7a", "(1.7a)", "φ_c(1, n) 的初等闭式", ("n",)),
    IdentityCatalogEntry(IdentityId.M_1_7B, "m-1-7b", "(1.7b)", "φ_s(1, n) 的三伽马闭式", ("n",)),
    IdentityCatalogEntry(IdentityId.ELEM_COS_S2, "elem-cos", "§2", "∫x^{η−1}e^{−ax}cos(xy)dx 的闭式", ("eta", "a", "y")),
    IdentityCatalogEntry(IdentityId.ELEM_SIN_S2, "elem-sin", "§2", "∫x^{η−1}e^{−ax}sin(xy)dx 的闭式", ("eta", "a", "y")),
]

#: 级数对闭式（无求积）的恒等式，默认使用 series_tol
SERIES_ONLY = frozenset({IdentityId.SUM_5_7, IdentityId.SUM_5_8})


def _theorem1(point: ParamPoint, options: OptionBundle) -> RoutePair:
    return RoutePair(f1_lhs(point, options), f1_rhs(point, options))


ROUTES: Dict[IdentityId, RouteFn] = {
    IdentityId.THM1_2_1: _theorem1,
    IdentityId.THM2_3_1: f2_pair,
    IdentityId.COR1_3_2: f3_pair,
    IdentityId.COR2_3_3: f4_pair,
    IdentityId.SC_3_4: partial(special_case_pair, SpecialCase.WRIGHT_3_4),
    IdentityId.SC_3_5: partial(special_case_pair, SpecialCase.WRIGHT_BESSEL_3_5),
    IdentityId.SC_3_6: partial(special_case_pair, SpecialCase.MITTAG_LEFFLER_3_6),
    IdentityId.FC1_4_1: partial(fourier_pair, FourierCase.F4_1),
    IdentityId.FS1_4_2: partial(fourier_pair, FourierCase.F4_2),
    IdentityId.FC2_4_3: partial(fourier_pair, FourierCase.F4_3),
    IdentityId.FS2_4_4: partial(fourier_pair, FourierCase.F4_4),
    IdentityId.FC3_4_5: partial(fourier_pair, FourierCase.F4_5),
    IdentityId.FS3_4_6: partial(fourier_pair, FourierCase.F4_6),
    IdentityId.RAM_5_1: partial(ramanujan_pair, RamanujanCase.R5_1),
    IdentityId.RAM_5_2: partial(ramanujan_pair, RamanujanCase.R5_2),
    IdentityId.RAM_5_3: partial(ramanujan_pair, RamanujanCase.R5_3),
    IdentityId.RAM_5_4: partial(ramanujan_pair, RamanujanCase.R5_4),
    IdentityId.RAM_5_5: partial(ramanujan_pair, RamanujanCase.R5_5),
    IdentityId.RAM_5_6: partial(ramanujan_pair, RamanujanCase.R5_6),
    IdentityId.SUM_5_7: sum_5_7,
    IdentityId.SUM_5_8: sum_5_8,
    IdentityId.MELLIN_COS: partial(mellin_pair, MellinFamily.COS),
    IdentityId.MELLIN_SIN: partial(mellin_pair, MellinFamily.SIN),
    IdentityId.M_1_7A: partial(moment_pair, MellinFamily.COS),
    IdentityId.M_1_7B: partial(moment_pair, MellinFamily.SIN),
    IdentityId.ELEM_COS_S2: partial(elementary_pair, FourierFamily.COS),
    IdentityId.ELEM_SIN_S2: partial(elementary_pair, FourierFamily.SIN),
}

_BY_ID: Dict[IdentityId, IdentityCatalogEntry] = {entry.id: entry for entry in CATALOG}
_BY_SLUG: Dict[str, IdentityCatalogEntry] = {entry.slug: entry for entry in CATALOG}


def get_entry(identity: IdentityId) -> IdentityCatalogEntry:
    return _BY_ID[identity]


def resolve_identity(name: str) -> IdentityId:
    """按命令行名称或枚举值查找恒等式（不区分大小写）.

    :param name: "thm1"、"sum-5-7" 或 "Thm1_2_1" 等
    :type name: str
    :return: 恒等式编号
    :rtype: IdentityId
    :raises HypothesisViolation: 名称未知
    """
    key = name.strip().lower()
    if key in _BY_SLUG:
        return _BY_SLUG[key].id
    for identity in IdentityId:
        if identity.value.lower() == key:
            return identity
    raise HypothesisViolation(f"未知的恒等式 '{name}'，可用 list 查看目录")


def route_for(identity: IdentityId) -> RouteFn:
    return ROUTES[identity]


__all__ = ["CATALOG", "SERIES_ONLY", "ROUTES", "get_entry", "resolve_identity", "route_for"]
