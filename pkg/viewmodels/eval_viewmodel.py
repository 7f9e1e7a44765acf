# viewmodels/eval_viewmodel.py
"""求值 ViewModel.

职责：
    - 维护 eval 命令可用的函数表及其必需参数
    - 调用数值服务，把数值异常映射为退出码 1、用法问题映射为退出码 2
"""

import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Mapping, Optional, Tuple

from loguru import logger

from models.eval_result import EvalMethod, EvalResult
from models.fox_wright_data import FoxWrightSpec
from models.identity_data import ParamPoint
from models.integrand_data import Oscillation
from models.options import OptionBundle
from services.core.errors import NumericError
from services.foxwright import bessel_j, fox_wright_eval, mittag_leffler, p_f_q, wright_bessel, wright_phi
from services.identities import f1_lhs
from services.quad import integrate_bose_moment
from services.specfun import gauss_2f1_eval, hurwitz_zeta, trigamma
from viewmodels.base_viewmodel import BaseViewModel, ExitCode, UsageError

_ZETA_ABS_ERR = 1e-12


@dataclass(frozen=True)
class EvalOutput:
    """eval 命令的结果.

    属性：
        - func: 函数名
        - params: 实际使用的参数
        - result: 求值结果（复数结果取实部）
        - imag: 复数结果的虚部，实数函数为 None
    """

    func: str
    params: Dict[str, Any]
    result: EvalResult
    imag: Optional[float] = None


@dataclass(frozen=True)
class EvalFunction:
    """函数表条目."""

    required: Tuple[str, ...]
    run: Callable[[Dict[str, Any], OptionBundle], Tuple[EvalResult, Optional[float]]]
    optional: Dict[str, Any] = field(default_factory=dict)


# ==================== 函数表 ====================
def _real(result: EvalResult) -> Tuple[EvalResult, Optional[float]]:
    return result, None


def _complex(value: complex) -> Tuple[EvalResult, Optional[float]]:
    err = _ZETA_ABS_ERR * max(1.0, abs(value))
    return EvalResult(value.real, err, 1, EvalMethod.DIRECT_SERIES), value.imag


def _bose_moment(p: Dict[str, Any], options: OptionBundle) -> Tuple[EvalResult, Optional[float]]:
    family = str(p["family"]).lower()
    if family not in ("cos", "sin"):
        raise UsageError(f"--family 只能是 cos 或 sin，收到 '{family}'")
    freq = math.pi * p["n"]
    oscillation = Oscillation.cos(freq) if family == "cos" else Oscillation.sin(freq)
    return _real(integrate_bose_moment(p["m"], oscillation, options=options.quad).as_eval())


FUNCTIONS: Dict[str, EvalFunction] = {
    "fox-wright": EvalFunction(
        ("upper", "lower", "z"),
        lambda p, o: _real(fox_wright_eval(FoxWrightSpec.of(p["upper"], p["lower"]), p["z"], o.series)),
    ),
    "wright-phi": EvalFunction(
        ("alpha", "beta", "z"),
        lambda p, o: _real(wright_phi(p["alpha"], p["beta"], p["z"], o.series)),
    ),
    "wright-bessel": EvalFunction(
        ("mu", "gamma", "z"),
        lambda p, o: _real(wright_bessel(p["mu"], p["gamma"], p["z"], o.series)),
    ),
    "mittag-leffler": EvalFunction(
        ("alpha", "beta", "z"),
        lambda p, o: _real(mittag_leffler(p["alpha"], p["beta"], p["z"], o.series)),
    ),
    "bessel-j": EvalFunction(
        ("nu", "x"),
        lambda p, o: _real(bessel_j(p["nu"], p["x"], o.series)),
    ),
    "pfq": EvalFunction(
        ("pfq_upper", "pfq_lower", "z"),
        lambda p, o: _real(p_f_q(p["pfq_upper"], p["pfq_lower"], p["z"], o.series)),
    ),
    "hurwitz-zeta": EvalFunction(
        ("s", "q_re"),
        lambda p, o: _complex(hurwitz_zeta(p["s"], complex(p["q_re"], p["q_im"]))),
        {"q_im": 0.0},
    ),
    "trigamma": EvalFunction(
        ("z",),
        lambda p, o: _complex(trigamma(complex(p["z"], p["z_im"]))),
        {"z_im": 0.0},
    ),
    "gauss-2f1": EvalFunction(
        ("a", "b", "c", "x"),
        lambda p, o: _real(gauss_2f1_eval(p["a"], p["b"], p["c"], p["x"], o.series.max_terms)),
    ),
    "integrate-f1": EvalFunction(
        ("mu", "xi", "a", "nu", "y"),
        lambda p, o: _real(f1_lhs(ParamPoint(mu=p["mu"], xi=p["xi"], a=p["a"], nu=p["nu"], y=p["y"]), o)),
    ),
    "ramanujan-phi": EvalFunction(
        ("family", "m", "n"),
        _bose_moment,
    ),
}


class EvalViewModel(BaseViewModel):
    """eval 命令 ViewModel."""

    @staticmethod
    def function_names() -> Tuple[str, ...]:
        return tuple(FUNCTIONS)

    def evaluate(self, func: str, params: Mapping[str, Any]) -> EvalOutput:
        """求值，异常直接抛出.

        :param func: 函数名
        :type func: str
        :param params: 参数映射，值为 None 的键视为未给出
        :type params: Mapping[str, Any]
        :return: 求值结果
        :rtype: EvalOutput
        :raises UsageError: 未知函数或缺少参数
        :raises NumericError: 求值失败
        """
        logger.trace("")
        entry = FUNCTIONS.get(func)
        if entry is None:
            raise UsageError(f"未知函数 '{func}'，可选: {', '.join(FUNCTIONS)}")

        missing = [name for name in entry.required if params.get(name) is None]
        if missing:
            raise UsageError(f"{func} 缺少参数: {', '.join('--' + m.replace('_', '-') for m in missing)}")

        used: Dict[str, Any] = dict(entry.optional)
        used.update({name: params[name] for name in entry.required})
        used.update({name: params[name] for name in entry.optional if params.get(name) is not None})

        result, imag = entry.run(used, self._container.options)
        logger.debug(f"{func}: method={result.method.value} work={result.work}")
        return EvalOutput(func=func, params=used, result=result, imag=imag)

    def run(self, func: str, params: Mapping[str, Any]) -> Tuple[ExitCode, Optional[EvalOutput]]:
        """求值并给出退出码.

        :param func: 函数名
        :type func: str
        :param params: 参数映射
        :type params: Mapping[str, Any]
        :return: (退出码, 结果)；失败时结果为 None
        :rtype: Tuple[ExitCode, Optional[EvalOutput]]
        """
        try:
            return ExitCode.OK, self.evaluate(func, params)
        except UsageError as e:
            self.emit_error(str(e))
            return ExitCode.USAGE, None
        except (NumericError, ArithmeticError) as e:
            self.emit_error(f"{type(e).__name__}: {e}")
            return ExitCode.FAILED, None
        except ValueError as e:
            # 模型构造时的参数检查（例如拉伸系数非正）
            self.emit_error(f"参数不合法: {e}")
            return ExitCode.USAGE, None
