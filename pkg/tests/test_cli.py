# tests/test_cli.py
"""命令行前端测试：退出码、输出流与规范 JSON."""

import io
import json
import math

import pytest

from services.identities import CATALOG
from viewmodels import ExitCode, UsageError
from viewmodels.grid_viewmodel import parse_axis
from viewmodels.verify_viewmodel import point_from_mapping
from views.cli import formatters
from views.cli.app import CliApp, build_parser, parse_list, parse_pairs


def run_cli(container, *argv):
    """运行一条命令，返回 (退出码, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    args = build_parser().parse_args(list(argv))
    app = CliApp(container, stdout=out, stderr=err)
    try:
        code = app.run(args)
    finally:
        app.cleanup()
    return code, out.getvalue(), err.getvalue()


def assert_canonical(text):
    """解析后重新序列化必须逐字节相同."""
    assert formatters.canonical_json(json.loads(text)) == text


# ==================== 参数解析 ====================
def test_parse_pairs():
    assert parse_pairs("1,2;0.5,1") == [(1.0, 2.0), (0.5, 1.0)]
    assert parse_pairs("") == []
    assert parse_pairs("1,2;") == [(1.0, 2.0)]


@pytest.mark.parametrize('text', ['1', '1,2,3', 'a,1'])
def test_parse_pairs_rejects(text):
    import argparse

    with pytest.raises(argparse.ArgumentTypeError):
        parse_pairs(text)


def test_parse_list():
    assert parse_list("0.5, 1.5") == [0.5, 1.5]
    assert parse_list("") == []


def test_parse_axis():
    assert parse_axis("mu=0,0.5,1") == ("mu", [0.0, 0.5, 1.0])
    assert parse_axis(" n = 2 ") == ("n", [2.0])
    assert parse_axis("n=") == ("n", [])
    for text in ("n", "=1,2", "n=1,x"):
        with pytest.raises(UsageError):
            parse_axis(text)


def test_point_from_mapping():
    point = point_from_mapping({"mu": "0.5", "theta": "one", "upper": [(1, 1)], "pfq_lower": [1.5], "b": None})
    assert point.mu == 0.5
    assert point.theta == "one"
    assert point.psi_spec.p == 1 and point.psi_spec.q == 0
    assert point.pfq_lower == (1.5,)
    assert point.b is None
    assert point_from_mapping({"m": 2.0}).m == 2
    with pytest.raises(UsageError):
        point_from_mapping({"m": 1.5})
    with pytest.raises(UsageError):
        point_from_mapping({"sigma": 1.0})
    with pytest.raises(UsageError):
        point_from_mapping({"mu": "abc"})


@pytest.mark.parametrize('argv', [
    [],
    ['bogus'],
    ['eval'],
    ['eval', '--func', 'nope'],
    ['eval', '--fun', 'bessel-j'],
    ['verify', '--n', '1'],
    ['grid', '--axis', 'n=1'],
    ['grid', '--id', 'sum-5-7', '--spec', 'x.json'],
    ['--log-level', 'LOUD', 'list'],
])
def test_parser_usage_errors(argv):
    with pytest.raises(SystemExit) as exc:
        build_parser().parse_args(argv)
    assert exc.value.code == 2


# ==================== eval ====================
def test_eval_bessel_json(container):
    code, out, err = run_cli(container, "eval", "--func", "bessel-j", "--nu", "0", "--x", "2", "--json")
    assert code == ExitCode.OK
    assert err == ""
    data = json.loads(out)
    assert data["func"] == "bessel-j"
    assert data["params"] == {"nu": 0, "x": 2}
    assert math.isclose(data["value"], 0.22389077914123567, rel_tol=1e-13)
    assert "imag" not in data
    assert_canonical(out)


def test_eval_fox_wright_exponential(container):
    """空参数列表的 0Ψ0 就是 e^z."""
    code, out, _ = run_cli(container, "eval", "--func", "fox-wright", "--upper", "", "--lower", "", "--z", "1")
    assert code == ExitCode.OK
    assert out.startswith("fox-wright: value=")
    value = float(out.split("value=")[1].split()[0])
    assert math.isclose(value, math.e, rel_tol=1e-14)


def test_eval_fox_wright_on_boundary(container):
    """|z| = δ = 1/4，μ* = 2：Gauss 求和给出 (π/2)/(Γ(9/4)Γ(7/4))."""
    code, out, _ = run_cli(container, "eval", "--func", "fox-wright", "--upper", "0.5,2", "--lower", "2.5,1",
                           "--z", "0.25", "--json")
    assert code == ExitCode.OK
    data = json.loads(out)
    assert data["method"] == "BoundarySeries"
    expected = math.pi / 2.0 / (math.gamma(2.25) * math.gamma(1.75))
    assert math.isclose(data["value"], expected, rel_tol=1e-10)


def test_eval_complex_result(container):
    code, out, _ = run_cli(container, "eval", "--func", "trigamma", "--z", "1", "--z-im", "0.5", "--json")
    assert code == ExitCode.OK
    data = json.loads(out)
    assert "imag" in data
    assert data["params"] == {"z": 1, "z_im": 0.5}


def test_eval_missing_parameter(container):
    code, out, err = run_cli(container, "eval", "--func", "wright-phi", "--alpha", "1", "--beta", "1")
    assert code == ExitCode.USAGE
    assert out == ""
    assert err.startswith("error: ")
    assert "--z" in err


@pytest.mark.parametrize('argv', [
    ['--func', 'bessel-j', '--nu', '-1', '--x', '1'],
    ['--func', 'bessel-j', '--nu', '0', '--x', '20.5'],
    ['--func', 'fox-wright', '--upper', '1,1', '--lower', '', '--z', '2'],
])
def test_eval_numeric_failure(container, argv):
    code, out, err = run_cli(container, "eval", *argv)
    assert code == ExitCode.FAILED
    assert out == ""
    assert err.startswith("error: ")


def test_eval_bad_model_argument(container):
    """拉伸系数非正在模型构造时被拒绝，按用法错误处理."""
    code, _, err = run_cli(container, "eval", "--func", "fox-wright", "--upper", "1,-1", "--lower", "", "--z", "0.1")
    assert code == ExitCode.USAGE
    assert err.startswith("error: ")


# ==================== verify ====================
def test_verify_pass(container):
    code, out, err = run_cli(container, "verify", "--id", "sum-5-7", "--n", "1")
    assert code == ExitCode.OK
    assert out.startswith("PASS Sum_5_7")
    assert err == ""


def test_verify_json(container):
    code, out, err = run_cli(container, "verify", "--id", "m-1-7a", "--n", "2", "--json")
    assert code == ExitCode.OK
    assert err.startswith("PASS M_1_7a")
    data = json.loads(out)
    assert list(data)[:3] == ["id", "params", "lhs"]
    assert data["pass"] is True
    assert data["alt"]["route"] == "hurwitz_mellin"
    assert "error" not in data and "theta" not in data
    assert_canonical(out)


def test_verify_hypothesis_failure(container):
    code, out, err = run_cli(container, "verify", "--id", "thm1", "--mu", "0.5", "--xi", "0.5",
                             "--a", "1", "--nu", "0", "--y", "1", "--json")
    assert code == ExitCode.FAILED
    data = json.loads(out)
    assert data["pass"] is False
    assert data["error"] == "HypothesisViolation"
    assert data["lhs"] is None and data["abs_diff"] is None
    assert "error: " in err
    assert_canonical(out)


def test_verify_tol_override(container):
    code, out, _ = run_cli(container, "verify", "--id", "sum-5-8", "--n", "3", "--tol", "1e-6", "--json")
    assert code == ExitCode.OK
    assert json.loads(out)["tol"] == 1e-6


@pytest.mark.parametrize('argv', [
    ['--id', 'thm9', '--n', '1'],
    ['--id', 'sum-5-7'],
    ['--id', 'ram-5-1', '--m', '1.5', '--n', '1'],
    ['--id', 'thm2', '--mu', '0.5', '--xi', '1', '--b', '1', '--c', '1', '--nu', '0', '--y', '1'],
])
def test_verify_usage_errors(container, argv):
    code, out, err = run_cli(container, "verify", *argv)
    assert code == ExitCode.USAGE
    assert out == ""
    assert err.startswith("error: ")


# ==================== grid ====================
def test_grid_to_stdout(container):
    code, out, err = run_cli(container, "grid", "--id", "sum-5-7", "--axis", "n=2,0.5")
    assert code == ExitCode.OK
    data = json.loads(out)
    assert data["identity"] == "Sum_5_7"
    assert (data["total"], data["passed"], data["failed"]) == (2, 2, 0)
    assert [r["params"]["n"] for r in data["reports"]] == [0.5, 2]
    assert "total=2 passed=2 failed=0" in err
    assert_canonical(out)


def test_grid_to_file(container, tmp_path):
    target = tmp_path / "runs" / "report.json"
    code, out, _ = run_cli(container, "grid", "--id", "m-1-7b", "--axis", "n=1,2", "--out", str(target))
    assert code == ExitCode.OK
    assert out.startswith("M_1_7b: total=2")
    text = target.read_text(encoding="utf-8")
    assert json.loads(text)["passed"] == 2
    assert_canonical(text)


def test_grid_spec_file(container, tmp_path):
    spec = tmp_path / "grid.json"
    spec.write_text(json.dumps({
        "identity": "elem-sin",
        "axes": {"eta": [0.5, 1.5], "y": [1.0]},
        "fixed": {"a": 1.0},
        "tol": 1e-7,
    }), encoding="utf-8")
    code, out, _ = run_cli(container, "grid", "--spec", str(spec))
    assert code == ExitCode.OK
    data = json.loads(out)
    assert data["total"] == 2
    assert all(r["tol"] == 1e-7 for r in data["reports"])


def test_grid_with_failures(container):
    code, out, err = run_cli(container, "grid", "--id", "thm1", "--axis", "xi=0.5,1",
                             "--mu", "0.5", "--a", "1", "--nu", "0", "--y", "1")
    assert code == ExitCode.FAILED
    data = json.loads(out)
    assert (data["passed"], data["failed"]) == (1, 1)
    assert "error: " in err
    assert_canonical(out)


@pytest.mark.parametrize('argv', [
    ['--id', 'sum-5-7', '--axis', 'n='],
    ['--id', 'sum-5-7', '--axis', 'sigma=1'],
    ['--id', 'sum-5-7'],
    ['--id', 'ram-5-1', '--axis', 'm=1,1.5', '--n', '1'],
    ['--id', 'thm1', '--axis', 'mu=0.5'],
    ['--id', 'nope', '--axis', 'n=1'],
])
def test_grid_usage_errors(container, argv):
    code, out, err = run_cli(container, "grid", *argv)
    assert code == ExitCode.USAGE
    assert out == ""
    assert err.startswith("error: ")


def test_grid_spec_conflicts(container, tmp_path):
    spec = tmp_path / "grid.json"
    spec.write_text(json.dumps({"identity": "sum-5-7", "axes": {"n": [1.0]}}), encoding="utf-8")
    code, _, _ = run_cli(container, "grid", "--spec", str(spec), "--axis", "n=2")
    assert code == ExitCode.USAGE
    code, _, _ = run_cli(container, "grid", "--spec", str(tmp_path / "missing.json"))
    assert code == ExitCode.USAGE


# ==================== list ====================
def test_list(container):
    code, out, _ = run_cli(container, "list")
    assert code == ExitCode.OK
    lines = out.splitlines()
    assert len(lines) == len(CATALOG)
    assert lines[0].startswith("Thm1_2_1")
    assert any(" sum-5-8 " in line for line in lines)


# ==================== 规范 JSON ====================
@pytest.mark.parametrize('value, text', [
    (0.1, "0.10000000000000001"),
    (1.0, "1"),
    (-0.0, "-0.0"),
    (math.nan, "null"),
    (math.inf, "null"),
])
def test_format_float(value, text):
    assert formatters.format_float(value) == text


def test_canonical_json_layout():
    text = formatters.canonical_json({"a": [1, 2.5], "b": {}, "c": None, "d": "ξ"})
    assert text == '{\n  "a": [\n    1,\n    2.5\n  ],\n  "b": {},\n  "c": null,\n  "d": "ξ"\n}\n'
    with pytest.raises(TypeError):
        formatters.canonical_json({"x": object()})
