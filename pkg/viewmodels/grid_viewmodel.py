# viewmodels/grid_viewmodel.py
"""网格 ViewModel.

职责：
    - 从 JSON 规格文件或命令行参数构造 GridSpec
    - 运行 GridRunner，把规格错误映射为用法错误
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from loguru import logger

from models.run_report import GridSpec, RunReport
from services.core.errors import GridSpecError
from viewmodels.base_viewmodel import BaseViewModel, ExitCode, UsageError
from viewmodels.verify_viewmodel import missing_fields, point_from_mapping, resolve


def parse_axis(text: str) -> Tuple[str, List[float]]:
    """解析 ``name=v1,v2,...`` 形式的参数轴.

    >>> parse_axis("mu=0,0.5,1")
    ('mu', [0.0, 0.5, 1.0])
    """
    name, sep, values = text.partition("=")
    if not sep or not name.strip():
        raise UsageError(f"参数轴格式应为 name=v1,v2，收到 '{text}'")
    try:
        parsed = [float(v) for v in values.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"参数轴 '{name}' 含有非数值: '{values}'") from None
    return name.strip(), parsed


class GridViewModel(BaseViewModel):
    """网格运行 ViewModel."""

    def build_spec(self, name: str, axes: Mapping[str, Sequence[float]],
                   fixed: Optional[Mapping[str, Any]] = None,
                   tol: Optional[float] = None) -> GridSpec:
        """构造并检查网格规格.

        :param name: 恒等式名称
        :type name: str
        :param axes: 参数轴
        :type axes: Mapping[str, Sequence[float]]
        :param fixed: 各点共享的固定参数
        :type fixed: Optional[Mapping[str, Any]]
        :param tol: 容差
        :type tol: Optional[float]
        :return: 网格规格
        :rtype: GridSpec
        :raises UsageError: 未知恒等式、缺少字段或网格不合法
        """
        identity = resolve(name)
        base = point_from_mapping(fixed or {})
        try:
            spec = GridSpec(
                identity=identity,
                axes={axis: [float(v) for v in values] for axis, values in axes.items()},
                tol=None if tol is None else float(tol),
                base=base,
            )
        except (TypeError, ValueError) as e:
            raise UsageError(f"网格取值不合法: {e}") from None
        try:
            self._container.grid.check(spec)
        except GridSpecError as e:
            raise UsageError(str(e)) from None
        missing = missing_fields(identity, base, provided=list(spec.axes))
        if missing:
            raise UsageError(f"网格缺少参数: {', '.join(missing)}")
        return spec

    def spec_from_axes(self, name: str, axis_args: Sequence[str],
                       fixed: Optional[Mapping[str, Any]] = None,
                       tol: Optional[float] = None) -> GridSpec:
        """由 ``--id`` 与若干 ``--axis name=v1,v2`` 构造规格."""
        axes: Dict[str, List[float]] = {}
        for text in axis_args:
            axis, values = parse_axis(text)
            axes[axis] = values
        return self.build_spec(name, axes, fixed, tol)

    def load_spec(self, path: Union[str, Path], tol: Optional[float] = None) -> GridSpec:
        """读取 JSON 网格规格文件.

        格式：``{"identity": "thm1", "axes": {"mu": [0, 1]}, "tol": 1e-7, "fixed": {"theta": "one"}}``；
        命令行 ``--tol`` 优先于文件中的 tol。

        :param path: 文件路径
        :type path: Union[str, Path]
        :param tol: 容差覆盖
        :type tol: Optional[float]
        :return: 网格规格
        :rtype: GridSpec
        :raises UsageError: 文件不可读或内容不合法
        """
        logger.trace("")
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise UsageError(f"无法读取网格规格 {path}: {e}") from None
        if not isinstance(data, dict) or "identity" not in data:
            raise UsageError(f"网格规格 {path} 缺少 identity")
        axes = data.get("axes") or {}
        if not isinstance(axes, dict):
            raise UsageError("axes 必须是 {参数名: 取值列表} 映射")
        return self.build_spec(
            str(data["identity"]),
            axes,
            data.get("fixed"),
            tol if tol is not None else data.get("tol"),
        )

    def run(self, spec: GridSpec) -> Tuple[ExitCode, RunReport]:
        """运行网格.

        :param spec: 已检查的网格规格
        :type spec: GridSpec
        :return: (退出码, 汇总报告)，有任何失败点时退出码为 FAILED
        :rtype: Tuple[ExitCode, RunReport]
        """
        report = self._container.grid.run(spec)
        if report.failed:
            self.emit_error(f"{spec.identity.value}: {report.failed}/{report.total} 个点未通过")
        return (ExitCode.OK if report.failed == 0 else ExitCode.FAILED), report
