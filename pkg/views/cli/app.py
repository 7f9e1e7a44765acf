# views/cli/app.py
"""命令行前端.

子命令：
    - eval: 求值单个特殊函数
    - verify: 验证单个参数点上的恒等式
    - grid: 在参数网格上批量验证，输出 RunReport JSON
    - list: 列出恒等式目录

stdout 只写结果；诊断信息写 stderr，日志由 HansLoguru 负责。
"""

import argparse
import sys
from pathlib import Path
from typing import TYPE_CHECKING, Any, Dict, List, Optional, TextIO, Tuple

from loguru import logger

from models.identity_data import ParamPoint
from version import APP_TITLE
from viewmodels import ExitCode, EvalViewModel, GridViewModel, UsageError, VerifyViewModel
from views.cli import formatters

if TYPE_CHECKING:
    from services.container import ServiceContainer

#: 构成 ParamPoint 的命令行参数
POINT_KEYS: Tuple[str, ...] = ParamPoint.SCALAR_FIELDS + ("theta", "upper", "lower", "pfq_upper", "pfq_lower")
#: 只用于 eval 的参数
EVAL_KEYS: Tuple[str, ...] = ("alpha", "beta", "z", "z_im", "x", "s", "q_re", "q_im", "family")
LOG_LEVELS = ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL")


# ==================== 参数解析 ====================
def parse_pairs(text: str) -> List[Tuple[float, float]]:
    """解析 ``"α,A;α,A"`` 形式的参数对列表，空串表示空列表.

    >>> parse_pairs("1,2;0.5,1")
    [(1.0, 2.0), (0.5, 1.0)]
    """
    pairs = []
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        parts = chunk.split(",")
        if len(parts) != 2:
            raise argparse.ArgumentTypeError(f"参数对应为 'shift,stretch'，收到 '{chunk}'")
        try:
            pairs.append((float(parts[0]), float(parts[1])))
        except ValueError:
            raise argparse.ArgumentTypeError(f"参数对含有非数值: '{chunk}'") from None
    return pairs


def parse_list(text: str) -> List[float]:
    """解析 ``"a1,a2"`` 形式的数值列表，空串表示空列表."""
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"数值列表含有非数值: '{text}'") from None


def _param_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    point = parent.add_argument_group("参数点")
    for name in ParamPoint.SCALAR_FIELDS:
        point.add_argument(f"--{name.replace('_', '-')}", dest=name, type=float)
    point.add_argument("--theta", help="Θ(k) 序列名称: delta, one, alternating, harmonic, factorial")
    point.add_argument("--upper", type=parse_pairs, help="内层 rΨs 上参数 'α,A;α,A'")
    point.add_argument("--lower", type=parse_pairs, help="内层 rΨs 下参数 'β,B;β,B'")
    point.add_argument("--pfq-upper", dest="pfq_upper", type=parse_list, help="内层 rFs 上参数 'a1,a2'")
    point.add_argument("--pfq-lower", dest="pfq_lower", type=parse_list, help="内层 rFs 下参数 'b1'")

    extra = parent.add_argument_group("eval 参数")
    for name in ("alpha", "beta", "z", "z_im", "x", "s", "q_re", "q_im"):
        extra.add_argument(f"--{name.replace('_', '-')}", dest=name, type=float)
    extra.add_argument("--family", choices=("cos", "sin"), help="ramanujan-phi 的振荡因子")
    return parent


def build_parser() -> argparse.ArgumentParser:
    """构造命令行解析器.

    :return: 解析器；用法错误时 argparse 以退出码 2 退出
    :rtype: argparse.ArgumentParser
    """
    parser = argparse.ArgumentParser(prog="foxwright", description=APP_TITLE, allow_abbrev=False)
    parser.add_argument("--config", default="./configs/config.json", help="配置文件路径")
    parser.add_argument("--log-level", dest="log_level", type=str.upper, choices=LOG_LEVELS,
                        help="覆盖控制台日志级别")
    sub = parser.add_subparsers(dest="command", required=True)
    params = _param_parent()

    p_eval = sub.add_parser("eval", parents=[params], allow_abbrev=False, help="求值特殊函数")
    p_eval.add_argument("--func", required=True, choices=EvalViewModel.function_names())
    p_eval.add_argument("--json", action="store_true", help="输出 JSON")

    p_verify = sub.add_parser("verify", parents=[params], allow_abbrev=False, help="验证单个参数点")
    p_verify.add_argument("--id", dest="identity", required=True, help="恒等式名称（见 list）")
    p_verify.add_argument("--tol", type=float)
    p_verify.add_argument("--json", action="store_true", help="输出完整 JSON 报告")

    p_grid = sub.add_parser("grid", parents=[params], allow_abbrev=False, help="网格验证")
    source = p_grid.add_mutually_exclusive_group(required=True)
    source.add_argument("--spec", type=Path, help="JSON 网格规格文件")
    source.add_argument("--id", dest="identity", help="恒等式名称（配合 --axis）")
    p_grid.add_argument("--axis", action="append", default=[], help="参数轴 name=v1,v2（可重复）")
    p_grid.add_argument("--tol", type=float)
    p_grid.add_argument("--jobs", type=int, help="并发进程数，0 表示可用 CPU 数")
    p_grid.add_argument("--out", type=Path, help="RunReport 写入的文件，缺省写 stdout")

    sub.add_parser("list", help="列出恒等式目录")
    return parser


def _collect(args: argparse.Namespace, keys: Tuple[str, ...]) -> Dict[str, Any]:
    return {key: getattr(args, key, None) for key in keys if getattr(args, key, None) is not None}


# ==================== 应用 ====================
class CliApp:
    """命令分发.

    :param container: 服务容器
    :type container: ServiceContainer
    :param stdout: 结果输出流
    :type stdout: Optional[TextIO]
    :param stderr: 诊断输出流
    :type stderr: Optional[TextIO]
    """

    def __init__(self, container: "ServiceContainer", stdout: Optional[TextIO] = None,
                 stderr: Optional[TextIO] = None):
        logger.trace("")
        self._container = container
        self._out = stdout or sys.stdout
        self._err = stderr or sys.stderr

        self.eval_vm = EvalViewModel(container)
        self.verify_vm = VerifyViewModel(container)
        self.grid_vm = GridViewModel(container)
        for vm in (self.eval_vm, self.verify_vm, self.grid_vm):
            vm.connect_error(self._diagnostic)

    def _diagnostic(self, message: str) -> None:
        print(f"error: {message}", file=self._err)

    def run(self, args: argparse.Namespace) -> int:
        """执行一个已解析的命令.

        :param args: build_parser() 的解析结果
        :type args: argparse.Namespace
        :return: 退出码
        :rtype: int
        """
        handler = {
            "eval": self.cmd_eval,
            "verify": self.cmd_verify,
            "grid": self.cmd_grid,
            "list": self.cmd_list,
        }[args.command]
        return int(handler(args))

    def cleanup(self) -> None:
        for vm in (self.eval_vm, self.verify_vm, self.grid_vm):
            vm.cleanup()

    # ==================== 子命令 ====================
    def cmd_eval(self, args: argparse.Namespace) -> ExitCode:
        params = _collect(args, POINT_KEYS + EVAL_KEYS)
        code, output = self.eval_vm.run(args.func, params)
        if output is not None:
            if args.json:
                self._out.write(formatters.canonical_json(formatters.eval_dict(output)))
            else:
                print(formatters.eval_line(output), file=self._out)
        return code

    def cmd_verify(self, args: argparse.Namespace) -> ExitCode:
        code, report = self.verify_vm.verify(args.identity, _collect(args, POINT_KEYS), args.tol)
        if report is not None:
            if args.json:
                print(formatters.report_line(report), file=self._err)
                self._out.write(formatters.canonical_json(formatters.report_dict(report)))
            else:
                print(formatters.report_line(report), file=self._out)
        return code

    def cmd_grid(self, args: argparse.Namespace) -> ExitCode:
        fixed = _collect(args, POINT_KEYS)
        try:
            if args.spec is not None:
                if fixed or args.axis:
                    raise UsageError("--spec 不能与 --axis 或参数点选项同时使用")
                spec = self.grid_vm.load_spec(args.spec, args.tol)
            else:
                spec = self.grid_vm.spec_from_axes(args.identity, args.axis, fixed, args.tol)
        except ValueError as e:
            self._diagnostic(str(e))
            return ExitCode.USAGE

        code, run = self.grid_vm.run(spec)
        text = formatters.canonical_json(formatters.run_report_dict(run))
        if args.out is not None:
            args.out.parent.mkdir(parents=True, exist_ok=True)
            args.out.write_text(text, encoding="utf-8")
            print(formatters.summary_line(run), file=self._out)
        else:
            self._out.write(text)
            print(formatters.summary_line(run), file=self._err)
        return code

    def cmd_list(self, args: argparse.Namespace) -> ExitCode:
        for entry in self.verify_vm.catalog():
            print(formatters.catalog_line(entry), file=self._out)
        return ExitCode.OK
