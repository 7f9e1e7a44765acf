# services/identities/verifier.py
"""恒等式验证服务.

职责：
    - 按目录调度两侧求值
    - 按容差判定并生成 IdentityReport
    - 把数值异常转换为带注释的失败报告（不向上抛出）
"""

import math
from typing import Optional

from loguru import logger

from models.eval_result import EvalResult
from models.identity_data import IdentityId, IdentityReport, ParamPoint, RoutePair
from models.options import OptionBundle
from services.core.errors import NumericError
from services.identities.catalog import SERIES_ONLY, get_entry, route_for
from services.identities.hypotheses import require


def agrees(left: float, right: float, tol: float) -> bool:
    """|left − right| ≤ max(tol, tol·max(|left|, |right|))."""
    return abs(left - right) <= max(tol, tol * max(abs(left), abs(right)))


class IdentityService:
    """恒等式验证服务.

    只持有 OptionBundle，可以在网格工作进程中重新构造。
    """

    def __init__(self, options: Optional[OptionBundle] = None):
        """初始化验证服务.

        :param options: 数值选项，None 使用默认值
        :type options: Optional[OptionBundle]
        """
        logger.trace("")
        self._options = options or OptionBundle()

    @property
    def options(self) -> OptionBundle:
        return self._options

    def default_tol(self, identity: IdentityId) -> float:
        """级数对闭式的恒等式用 series_tol，其余用 default_tol."""
        if identity in SERIES_ONLY:
            return self._options.identity.series_tol
        return self._options.identity.default_tol

    def evaluate(self, identity: IdentityId, point: ParamPoint) -> RoutePair:
        """求出恒等式的各条路径，异常直接抛出.

        :param identity: 恒等式编号
        :type identity: IdentityId
        :param point: 参数点
        :type point: ParamPoint
        :return: 两侧与可选的第三条路径
        :rtype: RoutePair
        :raises HypothesisViolation: 参数点不完整或不满足假设
        :raises NumericError: 求值失败
        """
        logger.trace(f"{identity.value} @ {point.describe()}")
        require(point, get_entry(identity).required)
        return route_for(identity)(point, self._options)

    def verify(self, identity: IdentityId, point: ParamPoint, tol: Optional[float] = None) -> IdentityReport:
        """验证单个参数点.

        数值异常、ValueError 与 ArithmeticError 被转换为 passed=False 的报告，
        error 为异常类名，note 为异常信息。

        :param identity: 恒等式编号
        :type identity: IdentityId
        :param point: 参数点
        :type point: ParamPoint
        :param tol: 容差，None 使用默认值
        :type tol: Optional[float]
        :return: 验证报告
        :rtype: IdentityReport
        """
        tol = self.default_tol(identity) if tol is None else float(tol)
        try:
            pair = self.evaluate(identity, point)
        except (NumericError, ValueError, ArithmeticError) as e:
            logger.debug(f"{identity.value} @ {point.describe()} 失败: {type(e).__name__}: {e}")
            return IdentityReport(
                id=identity, point=point, lhs=None, rhs=None,
                abs_diff=math.nan, rel_diff=math.nan, tol=tol, passed=False,
                note=str(e), error=type(e).__name__,
            )
        return self.build_report(identity, point, pair, tol)

    @staticmethod
    def build_report(identity: IdentityId, point: ParamPoint, pair: RoutePair, tol: float) -> IdentityReport:
        """由各路径结果生成报告.

        第三条路径必须与两侧都一致才算通过。

        :param identity: 恒等式编号
        :type identity: IdentityId
        :param point: 参数点
        :type point: ParamPoint
        :param pair: 路径结果
        :type pair: RoutePair
        :param tol: 容差
        :type tol: float
        :return: 验证报告
        :rtype: IdentityReport
        """
        lhs, rhs = pair
        abs_diff = abs(lhs.value - rhs.value)
        scale = max(abs(lhs.value), abs(rhs.value))
        rel_diff = abs_diff / max(scale, 1e-300)
        passed = abs_diff <= max(tol, tol * scale)
        notes = [pair.note] if pair.note else []

        if pair.alt is not None:
            alt: EvalResult = pair.alt
            if not (agrees(alt.value, lhs.value, tol) and agrees(alt.value, rhs.value, tol)):
                passed = False
                notes.append(f"第三条路径 {pair.alt_route} = {alt.value:.17g} 与两侧不一致")

        report = IdentityReport(
            id=identity, point=point, lhs=lhs, rhs=rhs,
            abs_diff=abs_diff, rel_diff=rel_diff, tol=tol, passed=passed,
            note="; ".join(notes), alt=pair.alt, alt_route=pair.alt_route,
        )
        if report.caveat:
            logger.warning(f"{identity.value} @ {point.describe()} 未通过，但差值在误差估计之内")
            report.note = "; ".join(notes + ["差值小于两侧误差估计之和（精度不足而非不一致）"])
        return report


__all__ = ["IdentityService", "agrees"]
