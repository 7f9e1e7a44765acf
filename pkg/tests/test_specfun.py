# tests/test_specfun.py
"""Γ、Pochhammer 比值、Hurwitz ζ、三伽马与 2F1 的测试."""

import math

import mpmath
import pytest
from numpy.testing import assert_allclose

from services.core.errors import DomainError
from services.specfun import (
    gamma_fn, gauss_2f1, gauss_2f1_eval, hurwitz_zeta, is_gamma_pole, log_abs_gamma, log_gamma,
    pochhammer_ratio, rgamma, trigamma,
)


# ==================== Γ ====================
@pytest.mark.parametrize('x, expected', [
    (1.0, 0.0),
    (2.0, 0.0),
    (0.5, 0.5723649429247001),
    (5.0, 3.1780538303479458),
])
def test_log_gamma_values(x, expected):
    """ln Γ 在整数与半整数处的已知值."""
    assert_allclose(log_gamma(x), expected, rtol=1e-14, atol=1e-15)


@pytest.mark.parametrize('x', [1e-8, 0.013, 0.3, 1.7, 9.25, 42.0, 171.5, 1e5])
def test_log_gamma_against_mpmath(x):
    with mpmath.workdps(40):
        expected = float(mpmath.loggamma(x))
    assert_allclose(log_gamma(x), expected, rtol=1e-14, atol=1e-15)


@pytest.mark.parametrize('x', [0.0, -1.0, -2.5])
def test_log_gamma_rejects_nonpositive(x):
    with pytest.raises(DomainError):
        log_gamma(x)


@pytest.mark.parametrize('x', [-0.5, -1.5, -2.25, 0.75, 3.5])
def test_log_abs_gamma_reflection(x):
    """负自变量走反射公式，符号与 mpmath 一致."""
    lg, sign = log_abs_gamma(x)
    expected = float(mpmath.gamma(x))
    assert sign == (1 if expected > 0 else -1)
    assert_allclose(sign * math.exp(lg), expected, rtol=1e-13)


def test_gamma_poles():
    assert is_gamma_pole(0.0)
    assert is_gamma_pole(-3.0)
    assert not is_gamma_pole(-2.5)
    assert not is_gamma_pole(1.0)
    assert rgamma(-4.0) == 0.0
    with pytest.raises(DomainError):
        gamma_fn(-2.0)
    assert_allclose(gamma_fn(0.5), math.sqrt(math.pi), rtol=1e-14)
    assert gamma_fn(200.0) == math.inf


# ==================== Pochhammer 比值 ====================
@pytest.mark.parametrize('b, c, k, expected', [
    (1.0, 1.0, 0, 1.0),
    (1.0, 1.0, 3, 0.25),
    (2.0, 0.5, 4, 0.5),
])
def test_pochhammer_ratio_values(b, c, k, expected):
    assert_allclose(pochhammer_ratio(b, c, k), expected, rtol=1e-15)


@pytest.mark.parametrize('b', [0.3, 1.0, 2.0, 7.5])
@pytest.mark.parametrize('c', [0.25, 1.0, 3.0])
@pytest.mark.parametrize('k', [0, 1, 5, 30])
def test_pochhammer_ratio_matches_product(b, c, k):
    """与 (b/c)_k / (1+b/c)_k 的逐项乘积一致."""
    t = b / c
    product = 1.0
    for j in range(k):
        product *= (t + j) / (t + 1.0 + j)
    assert_allclose(pochhammer_ratio(b, c, k), product, rtol=1e-13)


@pytest.mark.parametrize('b, c, k', [(0.0, 1.0, 1), (1.0, -1.0, 1), (1.0, 1.0, -1)])
def test_pochhammer_ratio_domain(b, c, k):
    with pytest.raises(DomainError):
        pochhammer_ratio(b, c, k)


# ==================== Hurwitz ζ ====================
def test_hurwitz_zeta_known_values():
    assert_allclose(hurwitz_zeta(2.0, 1.0).real, math.pi ** 2 / 6.0, rtol=1e-14)
    assert_allclose(hurwitz_zeta(2.0, 0.5).real, math.pi ** 2 / 2.0, rtol=1e-14)
    assert_allclose(hurwitz_zeta(4.0, 1.0).real, math.pi ** 4 / 90.0, rtol=1e-14)
    assert abs(hurwitz_zeta(3.0, 2.0).imag) < 1e-15


@pytest.mark.parametrize('s', [1.5, 2.0, 3.25, 6.0])
@pytest.mark.parametrize('q', [0.2, 1.0, complex(1.0, 0.5), complex(1.0, -3.0), complex(0.3, 12.0)])
def test_hurwitz_zeta_against_mpmath(s, q):
    with mpmath.workdps(30):
        expected = complex(mpmath.zeta(s, mpmath.mpmathify(q)))
    got = hurwitz_zeta(s, q)
    assert abs(got - expected) <= 1e-12 * max(1.0, abs(expected))


@pytest.mark.parametrize('s', [1.5, 2.0, 4.0])
@pytest.mark.parametrize('q', [0.7, complex(1.0, 2.0), complex(2.5, -0.75)])
def test_hurwitz_zeta_shift(s, q):
    """ζ(s, q) − ζ(s, q+1) = q^{−s}."""
    diff = hurwitz_zeta(s, q) - hurwitz_zeta(s, complex(q) + 1.0)
    expected = complex(q) ** (-s)
    assert abs(diff - expected) <= 2e-12 * max(1.0, abs(expected))


@pytest.mark.parametrize('s, q', [(1.0, 1.0), (0.5, 1.0), (2.0, 0.0), (2.0, complex(-1.0, 1.0))])
def test_hurwitz_zeta_domain(s, q):
    with pytest.raises(DomainError):
        hurwitz_zeta(s, q)


# ==================== 三伽马 ====================
def test_trigamma_known_values():
    assert_allclose(trigamma(1.0).real, math.pi ** 2 / 6.0, rtol=1e-14)
    assert_allclose(trigamma(0.5).real, math.pi ** 2 / 2.0, rtol=1e-14)
    # ψ′(1+i) 的虚部由 mpmath 给出
    expected = complex(mpmath.psi(1, mpmath.mpc(1.0, 1.0)))
    assert abs(trigamma(complex(1.0, 1.0)) - expected) <= 1e-12


@pytest.mark.parametrize('z', [complex(1.0, 0.5), complex(0.25, 3.0), complex(4.0, -7.5)])
def test_trigamma_conjugate_symmetry(z):
    assert abs(trigamma(z.conjugate()) - trigamma(z).conjugate()) <= 1e-13


@pytest.mark.parametrize('z', [0.0, -1.0, complex(-0.5, 2.0)])
def test_trigamma_domain(z):
    with pytest.raises(DomainError):
        trigamma(z)


# ==================== 2F1 ====================
@pytest.mark.parametrize('x', [-0.9, -0.5, -0.1, 0.1, 0.5, 0.8])
def test_gauss_2f1_log(x):
    """2F1(1, 1; 2; x) = −ln(1−x)/x."""
    assert_allclose(gauss_2f1(1.0, 1.0, 2.0, x), -math.log1p(-x) / x, rtol=1e-13)


@pytest.mark.parametrize('a', [0.5, 1.0, 2.5])
@pytest.mark.parametrize('x', [-3.0, -0.5, 0.4])
def test_gauss_2f1_binomial(a, x):
    """2F1(a, b; b; x) = (1−x)^{−a}."""
    assert_allclose(gauss_2f1(a, 1.75, 1.75, x), (1.0 - x) ** (-a), rtol=1e-13)


@pytest.mark.parametrize('a, b, c', [(0.5, 1.0, 0.5), (1.5, 0.25, 2.0), (0.75, 1.25, 3.5)])
@pytest.mark.parametrize('x', [-0.99, -0.5, 0.3, 0.6])
def test_gauss_2f1_against_mpmath(a, b, c, x):
    expected = float(mpmath.hyp2f1(a, b, c, x))
    result = gauss_2f1_eval(a, b, c, x)
    assert_allclose(result.value, expected, rtol=1e-12)
    assert result.abs_err_est <= 1e-11 * max(1.0, abs(expected))


@pytest.mark.parametrize('x', [-2.0, -0.5, 0.3])
def test_gauss_2f1_euler_transformation(x):
    """2F1(a,b;c;x) = (1−x)^{c−a−b}·2F1(c−a,c−b;c;x)."""
    a, b, c = 0.5, 1.0, 1.5
    left = gauss_2f1(a, b, c, x)
    right = (1.0 - x) ** (c - a - b) * gauss_2f1(c - a, c - b, c, x)
    assert_allclose(left, right, rtol=1e-10)


def test_gauss_2f1_terminating():
    """a 为非正整数时是多项式：2F1(−2, b; c; x) = 1 − 2bx/c + b(b+1)x²/(c(c+1))."""
    b, c, x = 1.5, 2.5, -0.7
    expected = 1.0 - 2.0 * b * x / c + b * (b + 1.0) * x * x / (c * (c + 1.0))
    assert_allclose(gauss_2f1(-2.0, b, c, x), expected, rtol=1e-13)


@pytest.mark.parametrize('c, x', [(0.0, 0.5), (-2.0, 0.5), (1.0, 1.0), (1.0, 1.5)])
def test_gauss_2f1_domain(c, x):
    with pytest.raises(DomainError):
        gauss_2f1(0.5, 0.5, c, x)
