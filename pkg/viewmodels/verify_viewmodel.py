# viewmodels/verify_viewmodel.py
"""验证 ViewModel.

职责：
    - 把命令行参数映射为 ParamPoint
    - 区分用法错误（缺少字段、未知恒等式）与验证失败
    - 调用 IdentityService.verify 并给出退出码
"""

from typing import Any, Mapping, Optional, Sequence, Tuple

from loguru import logger

from models.fox_wright_data import FoxWrightSpec
from models.identity_data import IdentityCatalogEntry, IdentityId, IdentityReport, ParamPoint
from services.core.errors import HypothesisViolation
from services.identities import CATALOG, get_entry, resolve_identity
from viewmodels.base_viewmodel import BaseViewModel, ExitCode, UsageError

#: 非标量的参数点字段（命令行 / 网格 fixed 映射中的键）
STRUCTURED_KEYS = ("theta", "upper", "lower", "pfq_upper", "pfq_lower")


def _pairs(value: Any, key: str) -> Tuple[Tuple[float, float], ...]:
    try:
        pairs = tuple((float(shift), float(stretch)) for shift, stretch in value)
    except (TypeError, ValueError):
        raise UsageError(f"'{key}' 需要 (shift, stretch) 参数对列表，收到 {value!r}") from None
    return pairs


def _values(value: Any, key: str) -> Tuple[float, ...]:
    try:
        return tuple(float(v) for v in value)
    except (TypeError, ValueError):
        raise UsageError(f"'{key}' 需要数值列表，收到 {value!r}") from None


def point_from_mapping(params: Mapping[str, Any]) -> ParamPoint:
    """由 {名称: 取值} 构造参数点.

    标量字段直接取值；``upper`` / ``lower`` 组成内层 rΨs 规格，
    ``pfq_upper`` / ``pfq_lower`` 为内层 rFs 参数，``theta`` 为序列名称。

    :param params: 参数映射，值为 None 的键被忽略
    :type params: Mapping[str, Any]
    :return: 参数点
    :rtype: ParamPoint
    :raises UsageError: 未知键或取值无法解析
    """
    values = {}
    for key, value in params.items():
        if value is None:
            continue
        if key in ParamPoint.SCALAR_FIELDS:
            try:
                values[key] = float(value)
            except (TypeError, ValueError):
                raise UsageError(f"参数 '{key}' 需要数值，收到 {value!r}") from None
            if key == "m" and not float(values[key]).is_integer():
                raise UsageError(f"m 必须为整数，收到 {value!r}")
        elif key not in STRUCTURED_KEYS:
            raise UsageError(f"未知参数 '{key}'")

    if params.get("theta") is not None:
        values["theta"] = str(params["theta"])
    if params.get("upper") is not None or params.get("lower") is not None:
        values["psi_spec"] = FoxWrightSpec.of(
            upper=_pairs(params.get("upper") or (), "upper"),
            lower=_pairs(params.get("lower") or (), "lower"),
        )
    for key in ("pfq_upper", "pfq_lower"):
        if params.get(key) is not None:
            values[key] = _values(params[key], key)

    return ParamPoint().with_values(**values)


def resolve(name: str) -> IdentityId:
    """按命令行名称查找恒等式，未知名称按用法错误处理."""
    try:
        return resolve_identity(name)
    except HypothesisViolation as e:
        raise UsageError(str(e)) from None


def missing_fields(identity: IdentityId, point: ParamPoint,
                   provided: Sequence[str] = ()) -> Tuple[str, ...]:
    """恒等式必需但参数点与 provided 都没有给出的字段."""
    return tuple(name for name in get_entry(identity).required
                 if not point.is_set(name) and name not in provided)


class VerifyViewModel(BaseViewModel):
    """单点验证 ViewModel."""

    def catalog(self) -> Sequence[IdentityCatalogEntry]:
        """恒等式目录（list 命令）."""
        return CATALOG

    def verify(self, name: str, params: Mapping[str, Any],
               tol: Optional[float] = None) -> Tuple[ExitCode, Optional[IdentityReport]]:
        """验证一个参数点.

        :param name: 恒等式名称
        :type name: str
        :param params: 参数映射
        :type params: Mapping[str, Any]
        :param tol: 容差覆盖
        :type tol: Optional[float]
        :return: (退出码, 报告)；用法错误时报告为 None
        :rtype: Tuple[ExitCode, Optional[IdentityReport]]
        """
        logger.trace("")
        try:
            identity = resolve(name)
            point = point_from_mapping(params)
            missing = missing_fields(identity, point)
            if missing:
                raise UsageError(f"{get_entry(identity).slug} 缺少参数: {', '.join(missing)}")
        except ValueError as e:
            # UsageError 以及模型构造时的参数检查
            self.emit_error(str(e))
            return ExitCode.USAGE, None

        report = self._container.identity.verify(identity, point, tol)
        if report.error is not None:
            self.emit_error(f"{identity.value}: {report.error}: {report.note}")
        return (ExitCode.OK if report.passed else ExitCode.FAILED), report
