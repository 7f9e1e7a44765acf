# views/cli/formatters.py
"""命令行输出格式.

JSON 输出是规范形式：键顺序固定，浮点数统一用 %.17g，非有限值写为 null，
因此解析后重新序列化得到逐字节相同的文本。
"""

import json
import math
from typing import Any, Dict, Optional

from models.eval_result import EvalResult
from models.identity_data import IdentityCatalogEntry, IdentityReport
from models.run_report import RunReport
from viewmodels.eval_viewmodel import EvalOutput

_INDENT = "  "


# ==================== 规范 JSON ====================
def format_float(value: float) -> str:
    """17 位有效数字；NaN 与 ±inf 写为 null."""
    if not math.isfinite(value):
        return "null"
    if value == 0.0 and math.copysign(1.0, value) < 0.0:
        # "-0" 会被解析为整数 0
        return "-0.0"
    return "%.17g" % value


def _encode(obj: Any, level: int) -> str:
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return format_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    pad = _INDENT * (level + 1)
    end = _INDENT * level
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k), ensure_ascii=False)}: {_encode(v, level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [f"{pad}{_encode(v, level + 1)}" for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"无法序列化类型 {type(obj).__name__}")


def canonical_json(obj: Any) -> str:
    """序列化为规范 JSON 文本（以换行结尾）.

    >>> canonical_json({"value": 0.1, "pass": True})
    '{\\n  "value": 0.10000000000000001,\\n  "pass": true\\n}\\n'
    """
    return _encode(obj, 0) + "\n"


# ==================== 报告字典 ====================
def _side(result: Optional[EvalResult]) -> Optional[Dict[str, float]]:
    if result is None:
        return None
    return {"value": float(result.value), "err": float(result.abs_err_est)}


def report_dict(report: IdentityReport) -> Dict[str, Any]:
    """单点报告，alt 与 error 只在存在时写出."""
    data: Dict[str, Any] = {
        "id": report.id.value,
        "params": dict(sorted(report.point.to_params().items())),
    }
    if report.point.theta is not None:
        data["theta"] = report.point.theta
    data.update({
        "lhs": _side(report.lhs),
        "rhs": _side(report.rhs),
        "abs_diff": float(report.abs_diff),
        "rel_diff": float(report.rel_diff),
        "tol": float(report.tol),
        "pass": bool(report.passed),
        "note": report.note,
    })
    if report.alt is not None:
        data["alt"] = {
            "value": float(report.alt.value),
            "err": float(report.alt.abs_err_est),
            "route": report.alt_route or "",
        }
    if report.error is not None:
        data["error"] = report.error
    return data


def run_report_dict(run: RunReport) -> Dict[str, Any]:
    return {
        "tool_version": run.tool_version,
        "identity": run.identity.value,
        "total": run.total,
        "passed": run.passed,
        "failed": run.failed,
        "wall_time_s": float(run.wall_time_s),
        "reports": [report_dict(r) for r in run.reports],
    }


def eval_dict(output: EvalOutput) -> Dict[str, Any]:
    data: Dict[str, Any] = {"func": output.func, "params": _params_for_json(output.params)}
    data.update({
        "value": float(output.result.value),
        "abs_err_est": float(output.result.abs_err_est),
        "work": int(output.result.work),
        "method": output.result.method.value,
    })
    if output.imag is not None:
        data["imag"] = float(output.imag)
    return data


def _params_for_json(params: Dict[str, Any]) -> Dict[str, Any]:
    out: Dict[str, Any] = {}
    for key in sorted(params):
        value = params[key]
        if isinstance(value, (list, tuple)):
            out[key] = [list(map(float, v)) if isinstance(v, (list, tuple)) else float(v) for v in value]
        elif isinstance(value, str):
            out[key] = value
        else:
            out[key] = float(value)
    return out


# ==================== 人类可读 ====================
def eval_line(output: EvalOutput) -> str:
    r = output.result
    line = f"{output.func}: value={r.value:.17g}"
    if output.imag is not None:
        line += f" imag={output.imag:.17g}"
    return line + f" abs_err_est={r.abs_err_est:.3g} work={r.work} method={r.method.value}"


def report_line(report: IdentityReport) -> str:
    status = "PASS" if report.passed else "FAIL"
    line = f"{status} {report.id.value} [{report.point.describe()}]"
    if report.lhs is not None and report.rhs is not None:
        line += (f" lhs={report.lhs.value:.15g} rhs={report.rhs.value:.15g}"
                 f" rel_diff={report.rel_diff:.3g} tol={report.tol:g}")
    if report.alt is not None:
        line += f" alt[{report.alt_route}]={report.alt.value:.15g}"
    if report.note:
        line += f" -- {report.note}"
    return line


def summary_line(run: RunReport) -> str:
    return (f"{run.identity.value}: total={run.total} passed={run.passed} failed={run.failed}"
            f" wall_time={run.wall_time_s:.2f}s")


def catalog_line(entry: IdentityCatalogEntry) -> str:
    return f"{entry.id.value:<14} {entry.slug:<10} {entry.equation:<10} {entry.title}"
