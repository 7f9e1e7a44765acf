# tests/test_foxwright.py
"""pΨq 收敛分类、直接级数、具名特例与 1Ψ1 约化的测试."""

import math
from dataclasses import replace

import mpmath
import numpy as np
import pytest
from numpy.testing import assert_allclose

from models.eval_result import EvalMethod
from models.fox_wright_data import ConvergenceDomain, FoxWrightSpec
from models.options import SeriesOptions
from services.core.errors import DivergentSeries, DomainError, DomainRejected, GammaPole, OutOfRange
from services.foxwright import (
    bessel_j, bessel_j_array, check_admissible, classify, fox_wright_eval, mittag_leffler,
    one_psi_one_theorem1, p_f_q, theorem1_spec, wright_bessel, wright_phi,
)


# ==================== 收敛分类 ====================
@pytest.mark.parametrize('sigma', [0.5, 1.0, 3.0])
@pytest.mark.parametrize('nu', [-0.5, 0.0, 2.5])
def test_classify_theorem1_shape(sigma, nu):
    """(σ, 2)/(ν+1, 1)：Δ = −1，δ = 1/4，μ* = ν + 1 − σ."""
    report = classify(theorem1_spec(sigma, 2.0, nu))
    assert report.delta_cap == -1.0
    assert_allclose(report.radius, 0.25, rtol=1e-14)
    assert_allclose(report.mu_star, nu + 1.0 - sigma, rtol=1e-15, atol=1e-15)
    expected = ConvergenceDomain.DISC_WITH_BOUNDARY if nu + 1.0 - sigma > 0.5 else ConvergenceDomain.OPEN_DISC
    assert report.domain is expected


@pytest.mark.parametrize('m', [1, 2, 5])
def test_classify_moment_shapes(m):
    """(m+1, 2)/(1/2, 1) 与 (m+2, 2)/(3/2, 1) 的 μ* = −1/2 − m."""
    cos_shape = classify(FoxWrightSpec.of(upper=[(m + 1.0, 2.0)], lower=[(0.5, 1.0)]))
    sin_shape = classify(FoxWrightSpec.of(upper=[(m + 2.0, 2.0)], lower=[(1.5, 1.0)]))
    for report in (cos_shape, sin_shape):
        assert_allclose(report.mu_star, -0.5 - m)
        assert report.domain is ConvergenceDomain.OPEN_DISC


@pytest.mark.parametrize('eta', [0.5, 1.5, 3.0])
def test_classify_fourier_shapes(eta):
    """(η, 2)/(1/2, 1) 与 (η+1, 2)/(3/2, 1)：δ = 1/4，μ* = 1/2 − η."""
    cos_shape = classify(FoxWrightSpec.of(upper=[(eta, 2.0)], lower=[(0.5, 1.0)]))
    sin_shape = classify(FoxWrightSpec.of(upper=[(eta + 1.0, 2.0)], lower=[(1.5, 1.0)]))
    for report in (cos_shape, sin_shape):
        assert report.delta_cap == -1.0
        assert_allclose(report.radius, 0.25, rtol=1e-14)
        assert_allclose(report.mu_star, 0.5 - eta, atol=1e-15)
        assert report.domain is ConvergenceDomain.OPEN_DISC
        with pytest.raises(DomainRejected):
            check_admissible(report, -0.25)


@pytest.mark.parametrize('alpha', [0.5, 1.0, 2.0])
def test_classify_mittag_leffler_shape(alpha):
    """(1, 1)/(β, α)：Δ = α − 1 > −1，整个平面收敛."""
    report = classify(FoxWrightSpec.of(upper=[(1.0, 1.0)], lower=[(1.0, alpha)]))
    assert_allclose(report.delta_cap, alpha - 1.0)
    assert report.domain is ConvergenceDomain.ENTIRE_PLANE


def test_classify_disc_with_boundary():
    report = classify(FoxWrightSpec.of(upper=[(-0.5, 1.0)]))
    assert report.delta_cap == -1.0
    assert_allclose(report.radius, 1.0)
    assert_allclose(report.mu_star, 1.0)
    assert report.domain is ConvergenceDomain.DISC_WITH_BOUNDARY
    check_admissible(report, 1.0)
    check_admissible(report, -1.0)
    with pytest.raises(DomainRejected):
        check_admissible(report, 1.01)


def test_check_admissible_rejections():
    geometric = classify(FoxWrightSpec.of(upper=[(1.0, 1.0)]))
    assert geometric.domain is ConvergenceDomain.OPEN_DISC
    check_admissible(geometric, 0.999)
    with pytest.raises(DomainRejected):
        check_admissible(geometric, 1.0)
    with pytest.raises(DomainRejected):
        check_admissible(geometric, -1.5)

    divergent = classify(FoxWrightSpec.of(upper=[(1.0, 1.0), (1.0, 1.0)]))
    assert divergent.domain is ConvergenceDomain.DIVERGENT_SERIES
    check_admissible(divergent, 0.0)
    with pytest.raises(DivergentSeries):
        check_admissible(divergent, 1e-3)


@pytest.mark.parametrize('scale', [0.5, 2.0, 3.0])
def test_classify_scale_consistency(scale):
    """所有拉伸系数同乘 c 时 Δ 乘 c，δ 按 c^{cΔ}·δ^c 变化."""
    base = FoxWrightSpec.of(upper=[(1.0, 2.0)], lower=[(0.5, 1.0), (2.0, 0.5)])
    scaled = FoxWrightSpec.of(upper=[(1.0, 2.0 * scale)], lower=[(0.5, scale), (2.0, 0.5 * scale)])
    r0, r1 = classify(base), classify(scaled)
    assert_allclose(r1.delta_cap, scale * r0.delta_cap, atol=1e-15)
    assert_allclose(r1.radius, scale ** (scale * r0.delta_cap) * r0.radius ** scale, rtol=1e-13)
    assert_allclose(r1.mu_star, r0.mu_star)


# ==================== 直接级数 ====================
@pytest.mark.parametrize('z', [-3.0, -0.5, 0.25, 1.0, 4.0])
def test_fox_wright_empty_is_exp(z):
    """0Ψ0(z) = e^z."""
    assert_allclose(fox_wright_eval(FoxWrightSpec.of(), z).value, math.exp(z), rtol=1e-13)


@pytest.mark.parametrize('z', [-0.9, -0.5, 0.3, 0.75])
def test_fox_wright_geometric(z):
    """1Ψ0[(1, 1)] = 1/(1 − z)，|z| < 1."""
    result = fox_wright_eval(FoxWrightSpec.of(upper=[(1.0, 1.0)]), z)
    assert_allclose(result.value, 1.0 / (1.0 - z), rtol=1e-12)
    assert result.abs_err_est <= 1e-11 * abs(result.value)


def test_fox_wright_binomial():
    """1Ψ0[(−1/2, 1)](z) = Γ(−1/2)·√(1 − z)."""
    result = fox_wright_eval(FoxWrightSpec.of(upper=[(-0.5, 1.0)]), 0.5)
    assert_allclose(result.value, -2.5066282746310002, rtol=1e-12)


@pytest.mark.parametrize('sigma, nu', [(0.5, -0.5), (1.0, 0.0), (2.5, 1.5), (4.0, 0.25)])
@pytest.mark.parametrize('z', [-0.2, -0.05, 0.1, 0.2])
def test_fox_wright_theorem1_against_2f1(sigma, nu, z):
    """1Ψ1[(σ, 2); (ν+1, 1) | z] = Γ(σ)/Γ(ν+1)·2F1(σ/2, (σ+1)/2; ν+1; 4z)."""
    with mpmath.workdps(30):
        expected = float(mpmath.gamma(sigma) * mpmath.rgamma(nu + 1)
                         * mpmath.hyp2f1(sigma / 2, (sigma + 1) / 2, nu + 1, 4 * z))
    result = fox_wright_eval(theorem1_spec(sigma, 2.0, nu), z)
    assert_allclose(result.value, expected, rtol=1e-11)


def test_fox_wright_z_zero():
    result = fox_wright_eval(FoxWrightSpec.of(upper=[(2.0, 1.0)], lower=[(3.0, 1.0)]), 0.0)
    assert_allclose(result.value, 0.5, rtol=1e-15)
    assert result.work == 1


def test_fox_wright_poles():
    with pytest.raises(GammaPole):
        fox_wright_eval(FoxWrightSpec.of(upper=[(-1.0, 0.0)], lower=[(1.0, 1.0)]), 0.5)
    zero = fox_wright_eval(FoxWrightSpec.of(upper=[(1.0, 1.0)], lower=[(0.0, 0.0)]), 0.5)
    assert zero.value == 0.0


def test_fox_wright_outside_domain():
    with pytest.raises(DivergentSeries):
        fox_wright_eval(FoxWrightSpec.of(upper=[(1.0, 1.0), (1.0, 1.0)]), 0.1)
    with pytest.raises(DomainRejected):
        fox_wright_eval(theorem1_spec(1.0, 2.0, 0.0), -0.3)


@pytest.mark.parametrize('sigma, nu', [(0.5, 1.5), (1.0, 1.0), (2.0, 2.5)])
@pytest.mark.parametrize('z', [0.25, -0.25])
def test_fox_wright_on_boundary(sigma, nu, z):
    """|z| = δ 且 μ* > 1/2：1Ψ1[(σ,2);(ν+1,1)|z] = Γ(σ)/Γ(ν+1)·2F1(σ/2, (σ+1)/2; ν+1; 4z)."""
    spec = theorem1_spec(sigma, 2.0, nu)
    assert classify(spec).domain is ConvergenceDomain.DISC_WITH_BOUNDARY
    result = fox_wright_eval(spec, z)
    expected = float(mpmath.gamma(sigma) * mpmath.rgamma(nu + 1.0)
                      * mpmath.hyp2f1(sigma / 2.0, (sigma + 1.0) / 2.0, nu + 1.0, 4.0 * z))
    assert result.method is EvalMethod.BOUNDARY_SERIES
    assert_allclose(result.value, expected, rtol=1e-10)
    assert result.abs_err_est < 1e-8 * max(1.0, abs(expected))


def test_fox_wright_extended_precision():
    """强抵消时切换到扩展精度；关闭后误差估计随抵消放大."""
    z = -20.0
    spec = FoxWrightSpec.of(upper=[(1.0, 1.0)], lower=[(1.0, 1.0)])
    result = fox_wright_eval(spec, z)
    assert result.method is EvalMethod.EXTENDED_SERIES
    assert_allclose(result.value, math.exp(z), rtol=1e-12)

    plain = fox_wright_eval(spec, z, replace(SeriesOptions(), extended_enabled=False))
    assert plain.method is EvalMethod.DIRECT_SERIES
    assert plain.abs_err_est > 1e-9


# ==================== 具名特例 ====================
def test_wright_phi_values():
    """Φ(1, ν+1, z) = z^{−ν/2} I_ν(2√z)."""
    assert_allclose(wright_phi(1.0, 1.0, 1.0).value, 2.2795853023360673, rtol=1e-13)
    assert_allclose(wright_phi(1.0, 2.0, 1.0).value, 1.590636854637329, rtol=1e-13)
    with pytest.raises(DomainError):
        wright_phi(0.0, 1.0, 1.0)


@pytest.mark.parametrize('alpha', [0.3, 1.0, 2.5])
@pytest.mark.parametrize('beta', [0.5, 1.0, 3.0])
@pytest.mark.parametrize('z', [-4.0, -0.5, 0.7, 5.0])
def test_wright_phi_against_mpmath(alpha, beta, z):
    with mpmath.workdps(40):
        expected = float(mpmath.nsum(lambda k: mpmath.power(z, k) / mpmath.factorial(k)
                                     * mpmath.rgamma(beta + alpha * k), [0, mpmath.inf]))
    assert_allclose(wright_phi(alpha, beta, z).value, expected, rtol=1e-10, atol=1e-14)


@pytest.mark.parametrize('nu', [0.0, 0.5, 1.0, 2.25])
@pytest.mark.parametrize('x', [0.5, 1.0, 2.0, 6.0])
def test_wright_bessel_reduces_to_bessel(nu, x):
    """(x/2)^ν·J_ν^1(x²/4) = J_ν(x)."""
    value = (0.5 * x) ** nu * wright_bessel(1.0, nu, 0.25 * x * x).value
    assert_allclose(value, float(mpmath.besselj(nu, x)), rtol=1e-11, atol=1e-14)


def test_wright_bessel_values():
    assert_allclose(wright_bessel(1.0, 0.0, 1.0).value, 0.22389077914123567, rtol=1e-13)
    with pytest.raises(DomainError):
        wright_bessel(1.0, 0.0, -1.0)
    with pytest.raises(DomainError):
        wright_bessel(-1.0, 0.0, 1.0)


@pytest.mark.parametrize('z', [-10.0, -2.0, 0.0, 1.0, 5.0])
def test_mittag_leffler_exp(z):
    """E_{1,1}(z) = e^z."""
    assert_allclose(mittag_leffler(1.0, 1.0, z).value, math.exp(z), rtol=1e-12)


@pytest.mark.parametrize('z', [-9.0, -1.0, 0.5, 4.0])
def test_mittag_leffler_cosh(z):
    """E_{2,1}(z) = cosh √z，z < 0 时为 cos √−z."""
    expected = math.cosh(math.sqrt(z)) if z >= 0 else math.cos(math.sqrt(-z))
    assert_allclose(mittag_leffler(2.0, 1.0, z).value, expected, rtol=1e-11, atol=1e-14)


# ==================== Bessel ====================
@pytest.mark.parametrize('x', [0.1, 1.0, 3.3, 12.0])
def test_bessel_j_half_integer(x):
    sin_form = bessel_j(0.5, x)
    cos_form = bessel_j(-0.5, x)
    assert sin_form.method is EvalMethod.ELEMENTARY
    assert_allclose(sin_form.value, math.sqrt(2.0 / (math.pi * x)) * math.sin(x), rtol=1e-15)
    assert_allclose(cos_form.value, math.sqrt(2.0 / (math.pi * x)) * math.cos(x), rtol=1e-15)


@pytest.mark.parametrize('nu', [0.0, 0.3, 1.0, 4.5])
@pytest.mark.parametrize('x', [0.2, 2.0, 9.0, 19.5])
def test_bessel_j_against_mpmath(nu, x):
    expected = float(mpmath.besselj(nu, x))
    result = bessel_j(nu, x)
    assert abs(result.value - expected) <= max(1e-12, 1e-10 * abs(expected))


def test_bessel_j_edges():
    assert_allclose(bessel_j(0.0, 2.0).value, 0.22389077914123567, rtol=1e-13)
    assert_allclose(bessel_j(1.0, 1.0).value, 0.44005058574493355, rtol=1e-13)
    assert bessel_j(0.0, 0.0).value == 1.0
    assert bessel_j(2.0, 0.0).value == 0.0
    with pytest.raises(DomainError):
        bessel_j(-1.0, 1.0)
    with pytest.raises(DomainError):
        bessel_j(-0.3, 0.0)
    with pytest.raises(OutOfRange):
        bessel_j(0.0, 20.5)


@pytest.mark.parametrize('nu', [-0.25, 0.0, 1.5, 3.0])
def test_bessel_j_array_against_mpmath(nu):
    """数组版本覆盖幂级数、Miller 递推与 Hankel 展开三段."""
    x = np.array([0.05, 1.0, 7.9, 8.1, 15.0, 24.9, 25.1, 40.0, 120.0])
    expected = np.array([float(mpmath.besselj(nu, v)) for v in x])
    assert_allclose(bessel_j_array(nu, x), expected, rtol=1e-9, atol=1e-12)


# ==================== pFq ====================
def test_p_f_q_values():
    assert_allclose(p_f_q([], [], 1.0).value, math.e, rtol=1e-14)
    assert_allclose(p_f_q([], [1.5], -0.25).value, math.sin(1.0) / 1.0, rtol=1e-13)
    assert_allclose(p_f_q([1.0, 1.0], [2.0], -0.5).value, 2.0 * math.log(1.5), rtol=1e-13)
    # Gauss 求和：2F1(1/2, 1/2; 2; 1) = Γ(2)Γ(1)/Γ(3/2)²
    assert_allclose(p_f_q([0.5, 0.5], [2.0], 1.0).value, 4.0 / math.pi, rtol=1e-13)


@pytest.mark.parametrize('upper, lower, z', [
    ([0.5, 1.5, 2.0], [3.0, 1.25], 0.6),
    ([1.0], [2.5], -7.0),
    ([-3.0, 1.0, 2.0], [0.5], 5.0),
    ([0.25, 0.5], [1.5, 2.0, 0.75], -30.0),
])
def test_p_f_q_against_mpmath(upper, lower, z):
    expected = float(mpmath.hyper(upper, lower, z))
    assert_allclose(p_f_q(upper, lower, z).value, expected, rtol=1e-11)


def test_p_f_q_domain():
    with pytest.raises(DomainError):
        p_f_q([1.0], [-2.0], 0.5)
    with pytest.raises(DomainRejected):
        p_f_q([1.0, 1.0], [1.5], 1.5)
    with pytest.raises(DomainRejected):
        p_f_q([1.0, 1.0], [1.5], 1.0)
    with pytest.raises(DivergentSeries):
        p_f_q([1.0, 1.0, 1.0], [], 0.1)


# ==================== 1Ψ1 约化 ====================
def test_one_psi_one_reduced_value():
    """σ = 1, ξ = 1, ν = −1/2, z = −1/4：Γ(1)/Γ(1/2)·2F1(1/2, 1; 1/2; −1) = 1/(2√π)."""
    result = one_psi_one_theorem1(1.0, 2.0, -0.5, -0.25)
    assert result.method is EvalMethod.REDUCED_2F1
    assert_allclose(result.value, 0.28209479177387814, rtol=1e-14)


def test_one_psi_one_kummer():
    """σ = ν + 1 时系数比为 1，结果为 e^z."""
    result = one_psi_one_theorem1(1.5, 1.0, 0.5, -1.0)
    assert result.method is EvalMethod.REDUCED_KUMMER
    assert_allclose(result.value, math.exp(-1.0), rtol=1e-14)


@pytest.mark.parametrize('sigma', [0.5, 1.0, 2.5])
@pytest.mark.parametrize('nu', [-0.5, 0.0, 1.5])
@pytest.mark.parametrize('z', [-0.24, -0.1, -0.01])
def test_one_psi_one_reduction_matches_direct(sigma, nu, z):
    """|4z| < 1 时约化与直接级数一致."""
    reduced = one_psi_one_theorem1(sigma, 2.0, nu, z)
    direct = fox_wright_eval(theorem1_spec(sigma, 2.0, nu), z)
    assert_allclose(reduced.value, direct.value, rtol=1e-9)


@pytest.mark.parametrize('sigma, nu, z', [(2.0, 0.5, -3.0), (0.5, 1.0, -12.0)])
def test_one_psi_one_kummer_matches_direct(sigma, nu, z):
    reduced = one_psi_one_theorem1(sigma, 1.0, nu, z)
    direct = fox_wright_eval(theorem1_spec(sigma, 1.0, nu), z)
    assert_allclose(reduced.value, direct.value, rtol=1e-10)


def test_one_psi_one_edges():
    at_zero = one_psi_one_theorem1(2.0, 2.0, 2.0, 0.0)
    assert_allclose(at_zero.value, 0.5, rtol=1e-15)
    with pytest.raises(DivergentSeries):
        one_psi_one_theorem1(1.0, 2.5, 0.0, -0.1)
    with pytest.raises(DomainError):
        one_psi_one_theorem1(1.0, 2.0, 0.0, 0.1)
    with pytest.raises(DomainError):
        one_psi_one_theorem1(-1.0, 2.0, 0.0, -0.1)
    with pytest.raises(DomainError):
        one_psi_one_theorem1(1.0, 2.0, -1.0, -0.1)
