# tests/test_identities.py
"""恒等式目录、单点验证与网格运行的测试."""

import math

import pytest
from numpy.testing import assert_allclose

from models.fox_wright_data import FoxWrightSpec
from models.identity_data import IdentityId, ParamPoint
from models.options import OptionBundle
from models.run_report import GridSpec
from services.core.errors import GridSpecError, HypothesisViolation
from services.identities import (
    CATALOG, GridRunner, IdentityService, f1_lhs, f1_rhs, f2_lhs, f2_rhs, get_entry, get_sequence,
    resolve_identity, route_for,
)
from services.identities.fourier import FourierFamily, elementary_closed_form
from services.identities.ramanujan import inverse_square_minus_csch_square
from services.identities.theorems import FACTORIAL_NOTE
from services.identities.verifier import agrees


@pytest.fixture
def service() -> IdentityService:
    return IdentityService(OptionBundle())


# ==================== 目录 ====================
def test_catalog_is_complete():
    """每个编号都有唯一的目录条目与路径函数."""
    assert {entry.id for entry in CATALOG} == set(IdentityId)
    slugs = [entry.slug for entry in CATALOG]
    assert len(slugs) == len(set(slugs))
    for identity in IdentityId:
        assert callable(route_for(identity))


@pytest.mark.parametrize('name, expected', [
    ('thm1', IdentityId.THM1_2_1),
    ('SUM-5-7', IdentityId.SUM_5_7),
    ('Ram_5_3', IdentityId.RAM_5_3),
    (' mellin-cos ', IdentityId.MELLIN_COS),
])
def test_resolve_identity(name, expected):
    assert resolve_identity(name) is expected


def test_resolve_identity_unknown():
    with pytest.raises(HypothesisViolation):
        resolve_identity("thm9")


def test_sequences():
    assert get_sequence("delta")(0) == 1.0
    assert get_sequence("delta")(3) == 0.0
    assert get_sequence("alternating")(5) == -1.0
    assert get_sequence("factorial").over_factorial(30) == 1.0
    assert not get_sequence("factorial").is_bounded
    with pytest.raises(HypothesisViolation):
        get_sequence("fibonacci")


def test_agrees():
    assert agrees(1.0, 1.0 + 1e-9, 1e-8)
    assert not agrees(1.0, 1.0 + 1e-7, 1e-8)
    # 接近 0 时按绝对容差比较
    assert agrees(1e-12, -1e-12, 1e-8)


# ==================== 定理 1 ====================
@pytest.mark.parametrize('a, y', [(1.0, 1.0), (1.0, 2.0), (0.5, 0.3), (3.0, 5.0)])
def test_f1_laplace_closed_form(a, y):
    """μ = 1/2, ν = 0, ξ = 1：F₁ = √y·a/(a²+y²)^{3/2}."""
    point = ParamPoint(mu=0.5, xi=1.0, a=a, nu=0.0, y=y)
    expected = math.sqrt(y) * a / (a * a + y * y) ** 1.5
    options = OptionBundle()
    assert_allclose(f1_rhs(point, options).value, expected, rtol=1e-12)
    assert_allclose(f1_lhs(point, options).value, expected, rtol=1e-8)


@pytest.mark.parametrize('point', [
    ParamPoint(mu=0.5, xi=1.0, a=1.0, nu=0.0, y=1.0),
    ParamPoint(mu=0.0, xi=1.0, a=2.0, nu=0.5, y=0.7),
    ParamPoint(mu=0.5, xi=2.0, a=1.0, nu=0.5, y=1.5),
    ParamPoint(mu=1.0, xi=3.0, a=0.8, nu=1.0, y=1.2),
    ParamPoint(mu=2.0, xi=1.5, a=1.0, nu=-0.25, y=0.5),
])
def test_thm1_passes(service, point):
    report = service.verify(IdentityId.THM1_2_1, point)
    assert report.passed, report.note
    assert report.error is None
    assert report.rel_diff <= report.tol


def test_thm1_hypothesis_violation(service):
    """ξ < 1 时右侧级数发散，报告注明违反的假设."""
    report = service.verify(IdentityId.THM1_2_1, ParamPoint(mu=0.5, xi=0.5, a=1.0, nu=0.0, y=1.0))
    assert not report.passed
    assert report.error == "HypothesisViolation"
    assert "ξ" in report.note
    assert report.lhs is None and report.rhs is None
    assert math.isnan(report.abs_diff)


def test_missing_field_is_reported(service):
    report = service.verify(IdentityId.THM1_2_1, ParamPoint(mu=0.5, xi=1.0, a=1.0, nu=0.0))
    assert not report.passed
    assert report.error == "HypothesisViolation"
    assert "y" in report.note


def test_tol_override(service):
    point = ParamPoint(n=1.0)
    assert service.verify(IdentityId.SUM_5_7, point).tol == OptionBundle().identity.series_tol
    assert service.verify(IdentityId.SUM_5_7, point, tol=1e-6).tol == 1e-6
    assert service.verify(IdentityId.M_1_7A, point).tol == OptionBundle().identity.default_tol


# ==================== 定理 2 ====================
def test_f2_delta_collapses_to_f1():
    """Θ = δ_{k0} 时 F₂ 只剩 k = 0 项，即 F₁(b)."""
    options = OptionBundle()
    point = ParamPoint(mu=0.5, xi=1.0, b=1.5, c=1.0, nu=0.0, y=1.0, theta="delta")
    single = ParamPoint(mu=0.5, xi=1.0, a=1.5, nu=0.0, y=1.0)
    assert_allclose(f2_rhs(point, options).value, f1_rhs(single, options).value, rtol=1e-14)
    assert_allclose(f2_lhs(point, options).value, f1_lhs(single, options).value, rtol=1e-12)


@pytest.mark.parametrize('theta', ['one', 'alternating', 'harmonic'])
def test_thm2_bounded_sequences(service, theta):
    point = ParamPoint(mu=0.5, xi=1.0, b=1.0, c=1.0, nu=0.0, y=1.0, theta=theta)
    report = service.verify(IdentityId.THM2_3_1, point)
    assert report.passed, report.note


# 定理 2 与推论共用的参数点，含 ξ ≠ 1 的非 Bessel 约化路径
_BC_POINTS = [
    ParamPoint(mu=0.5, xi=1.0, b=1.0, c=1.0, nu=0.0, y=1.0),
    ParamPoint(mu=1.0, xi=2.0, b=1.0, c=0.5, nu=0.5, y=2.0),
    ParamPoint(mu=0.0, xi=1.5, b=1.5, c=0.5, nu=0.0, y=0.5),
    ParamPoint(mu=2.0, xi=3.0, b=1.0, c=0.5, nu=-0.5, y=1.0),
    ParamPoint(mu=0.5, xi=2.0, b=2.0, c=1.0, nu=1.5, y=2.0),
]


@pytest.mark.slow
@pytest.mark.parametrize('point', _BC_POINTS, ids=lambda p: p.describe())
@pytest.mark.parametrize('theta', ['one', 'alternating'])
def test_thm2_points(service, point, theta):
    report = service.verify(IdentityId.THM2_3_1, point.with_values(theta=theta))
    assert report.passed, report.note


def test_thm2_factorial_is_annotated(service):
    point = ParamPoint(mu=0.5, xi=1.0, b=2.0, c=1.0, nu=0.0, y=1.0, theta="factorial")
    report = service.verify(IdentityId.THM2_3_1, point)
    assert report.passed, report.note
    assert FACTORIAL_NOTE in report.note


def test_thm2_factorial_requires_xi_one(service):
    point = ParamPoint(mu=0.5, xi=2.0, b=2.0, c=1.0, nu=0.0, y=1.0, theta="factorial")
    report = service.verify(IdentityId.THM2_3_1, point)
    assert not report.passed
    assert report.error == "TruncationUncertain"


# ==================== 推论与特例 ====================
_COR_BASES = [
    ParamPoint(mu=0.5, xi=1.0, b=1.0, c=1.0, nu=0.0, y=1.0),
    ParamPoint(mu=1.0, xi=2.0, b=1.0, c=0.5, nu=0.5, y=2.0),
]


@pytest.mark.slow
@pytest.mark.parametrize('base', _COR_BASES, ids=['xi1', 'xi2'])
@pytest.mark.parametrize('identity, extra', [
    (IdentityId.COR1_3_2, {"psi_spec": FoxWrightSpec.of(upper=[(1.0, 1.0)], lower=[(2.0, 1.0)])}),
    (IdentityId.COR2_3_3, {"pfq_upper": (0.5,), "pfq_lower": (1.5,)}),
    (IdentityId.SC_3_4, {"beta1": 1.0, "big_b1": 0.5}),
    (IdentityId.SC_3_5, {"gamma": 0.5, "inner_mu": 1.0}),
    (IdentityId.SC_3_6, {"beta1": 1.5, "big_b1": 1.0}),
])
def test_corollaries_pass(service, base, identity, extra):
    report = service.verify(identity, base.with_values(**extra))
    assert report.passed, report.note
    assert report.alt_route == "term_by_term"


@pytest.mark.slow
@pytest.mark.parametrize('point', _BC_POINTS, ids=lambda p: p.describe())
@pytest.mark.parametrize('identity, extra', [
    (IdentityId.COR1_3_2, {"psi_spec": FoxWrightSpec.of(upper=[(1.0, 1.0)], lower=[(2.0, 1.0)])}),
    (IdentityId.COR2_3_3, {"pfq_upper": (1.0,), "pfq_lower": (2.0,)}),
])
def test_corollaries_points(service, point, identity, extra):
    """推论 1、2 在与定理 2 相同的参数点上成立."""
    report = service.verify(identity, point.with_values(**extra))
    assert report.passed, report.note


# ==================== Fourier 与 Ramanujan ====================
@pytest.mark.parametrize('n', [0.5, 1.0, 2.0, 3.0, 5.0])
@pytest.mark.parametrize('identity', [IdentityId.SUM_5_7, IdentityId.SUM_5_8])
def test_series_sums_match_closed_forms(service, identity, n):
    report = service.verify(identity, ParamPoint(n=n))
    assert report.passed, report.note
    assert report.rel_diff <= 1e-10


def test_sum_5_7_small_argument():
    """1/u² − csch²u 在 u → 0 时趋于 1/3."""
    assert_allclose(inverse_square_minus_csch_square(1e-6), 1.0 / 3.0, rtol=1e-12)
    assert_allclose(inverse_square_minus_csch_square(0.06),
                    1.0 / 0.06 ** 2 - 1.0 / math.sinh(0.06) ** 2, rtol=1e-8)


@pytest.mark.parametrize('identity', [IdentityId.M_1_7A, IdentityId.M_1_7B])
@pytest.mark.parametrize('n', [0.5, 1.0, 2.5])
def test_moment_closed_forms(service, identity, n):
    report = service.verify(identity, ParamPoint(n=n))
    assert report.passed, report.note
    assert report.alt_route == "hurwitz_mellin"


@pytest.mark.parametrize('identity', [IdentityId.MELLIN_COS, IdentityId.MELLIN_SIN])
@pytest.mark.parametrize('mu, a, b', [(2.0, 2.0 * math.pi, math.pi), (3.5, 1.0, 0.5), (1.5, 3.0, 2.0)])
def test_mellin_forms(service, identity, mu, a, b):
    report = service.verify(identity, ParamPoint(mu=mu, a=a, b=b))
    assert report.passed, report.note


def test_mellin_requires_mu_above_one(service):
    report = service.verify(IdentityId.MELLIN_COS, ParamPoint(mu=1.0, a=1.0, b=1.0))
    assert report.error == "HypothesisViolation"


@pytest.mark.parametrize('identity', [IdentityId.RAM_5_1, IdentityId.RAM_5_2])
@pytest.mark.parametrize('m, n', [(1, 1.0), (2, 0.5), (3, 2.0)])
def test_ramanujan_moments(service, identity, m, n):
    report = service.verify(identity, ParamPoint(m=m, n=n))
    assert report.passed, report.note


def test_ramanujan_rejects_bad_m(service):
    report = service.verify(IdentityId.RAM_5_1, ParamPoint(m=0, n=1.0))
    assert report.error == "HypothesisViolation"


@pytest.mark.parametrize('identity', [IdentityId.FC1_4_1, IdentityId.FS1_4_2])
@pytest.mark.parametrize('theta', ['delta', 'one', 'harmonic'])
def test_fourier_theta(service, identity, theta):
    point = ParamPoint(eta=1.5, b=1.0, c=1.0, y=1.0, theta=theta)
    report = service.verify(identity, point)
    assert report.passed, report.note


_PSI_INNER = {"psi_spec": FoxWrightSpec.of(upper=[(1.0, 1.0)], lower=[(2.0, 1.0)])}
_PFQ_INNER = {"pfq_upper": (1.0,), "pfq_lower": (2.0,)}


@pytest.mark.parametrize('identity, inner', [
    (IdentityId.FC2_4_3, _PSI_INNER),
    (IdentityId.FS2_4_4, _PSI_INNER),
    (IdentityId.FC3_4_5, _PFQ_INNER),
    (IdentityId.FS3_4_6, _PFQ_INNER),
])
@pytest.mark.parametrize('eta, y', [(1.5, 1.0), (2.0, 0.5)])
def test_fourier_inner(service, identity, inner, eta, y):
    """内层 1Ψ1 / 1F1 的 Fourier 族：求积、级数与逐项三条路径一致."""
    point = ParamPoint(eta=eta, b=1.0, c=1.0, y=y).with_values(**inner)
    report = service.verify(identity, point)
    assert report.passed, report.note


@pytest.mark.parametrize('identity, inner', [
    (IdentityId.RAM_5_3, _PSI_INNER),
    (IdentityId.RAM_5_4, _PSI_INNER),
    (IdentityId.RAM_5_5, _PFQ_INNER),
    (IdentityId.RAM_5_6, _PFQ_INNER),
])
@pytest.mark.parametrize('m, n', [(2, 1.0), (1, 0.5)])
def test_ramanujan_inner(service, identity, inner, m, n):
    report = service.verify(identity, ParamPoint(m=m, n=n).with_values(**inner))
    assert report.passed, report.note
    assert report.alt_route == "term_by_term"
    if identity in (IdentityId.RAM_5_5, IdentityId.RAM_5_6):
        assert "Pochhammer" in report.note


@pytest.mark.parametrize('eta', [0.5, 1.0, 2.5])
@pytest.mark.parametrize('y', [0.5, 2.0])
def test_elementary_closed_form_against_complex_power(eta, y):
    """Γ(η)·(a − iy)^{−η} 的实部与虚部."""
    a = 1.25
    z = math.gamma(eta) * complex(a, -y) ** (-eta)
    assert_allclose(elementary_closed_form(FourierFamily.COS, eta, a, y).value, z.real, rtol=1e-13)
    assert_allclose(elementary_closed_form(FourierFamily.SIN, eta, a, y).value, z.imag, rtol=1e-13)


def test_elementary_sine_limit():
    """η = 0 的正弦形式取极限 arctan(y/a)."""
    assert_allclose(elementary_closed_form(FourierFamily.SIN, 0.0, 1.0, 1.0).value, math.pi / 4.0)
    with pytest.raises(HypothesisViolation):
        elementary_closed_form(FourierFamily.COS, 0.0, 1.0, 1.0)


# ==================== 网格 ====================
def test_elementary_grid_all_pass(service):
    runner = GridRunner(service, jobs=1)
    spec = GridSpec(IdentityId.ELEM_COS_S2, {"eta": [0.5, 1.0, 2.5], "a": [1.0, 2.0], "y": [0.5, 1.5]})
    run = runner.run(spec)
    assert run.total == 12
    assert run.passed == run.total
    assert run.failed == 0
    assert all(r.alt_route == "gauss_2f1" for r in run.reports)


def test_grid_reports_are_sorted(service):
    runner = GridRunner(service, jobs=1)
    spec = GridSpec(IdentityId.SUM_5_7, {"n": [3.0, 0.5, 2.0, 1.0]})
    run = runner.run(spec)
    assert [r.point.n for r in run.reports] == [0.5, 1.0, 2.0, 3.0]
    assert run.total == run.passed + run.failed == 4


def test_grid_keeps_failures(service):
    """网格中个别点失败不影响其余点."""
    runner = GridRunner(service, jobs=1)
    spec = GridSpec(IdentityId.THM1_2_1, {"xi": [0.5, 1.0]},
                    base=ParamPoint(mu=0.5, a=1.0, nu=0.0, y=1.0))
    run = runner.run(spec)
    assert run.total == 2
    assert run.passed == 1
    failed = [r for r in run.reports if not r.passed]
    assert failed[0].error == "HypothesisViolation"


@pytest.mark.slow
def test_grid_parallel_matches_serial(service):
    spec = GridSpec(IdentityId.M_1_7B, {"n": [0.5, 1.0, 1.5, 2.0, 3.0, 4.0]})
    serial = GridRunner(service, jobs=1).run(spec)
    parallel = GridRunner(service, jobs=2).run(spec)
    assert [r.point for r in serial.reports] == [r.point for r in parallel.reports]
    assert [r.lhs.value for r in serial.reports] == [r.lhs.value for r in parallel.reports]
    assert parallel.passed == serial.passed == 6


@pytest.mark.parametrize('axes', [
    {},
    {"n": []},
    {"sigma": [1.0]},
    {"m": [1.0, 1.5], "n": [1.0]},
])
def test_grid_spec_errors(service, axes):
    with pytest.raises(GridSpecError):
        GridRunner(service, jobs=1).run(GridSpec(IdentityId.RAM_5_1, axes))


def test_grid_point_limit(service):
    runner = GridRunner(service, jobs=1, max_points=3)
    with pytest.raises(GridSpecError):
        runner.check(GridSpec(IdentityId.SUM_5_7, {"n": [1.0, 2.0], "m": [1, 2]}))


# ==================== 完整网格 ====================
@pytest.mark.slow
def test_theorem1_full_grid(service):
    """μ+ν > −1/2 的全部网格点相对差 ≤ 1e-7."""
    spec = GridSpec(IdentityId.THM1_2_1, {
        "mu": [0.0, 0.5, 1.0, 2.0],
        "xi": [1.0, 1.5, 2.0, 3.0],
        "a": [0.5, 1.0, 2.0],
        "nu": [-0.5, 0.0, 0.5, 1.5],
        "y": [0.5, 1.0, 2.0, 5.0],
    }, tol=1e-7)
    checked = 0
    for point in spec.points():
        if not point.mu + point.nu > -0.5:
            continue
        report = service.verify(spec.identity, point, spec.tol)
        assert report.passed, f"{point.describe()}: {report.note}"
        checked += 1
    assert checked == 720


@pytest.mark.slow
@pytest.mark.parametrize('identity', [IdentityId.ELEM_COS_S2, IdentityId.ELEM_SIN_S2])
def test_elementary_full_grid(service, identity):
    spec = GridSpec(identity, {"eta": [0.5, 1.0, 2.0, 3.5], "a": [0.5, 1.0, 2.0], "y": [0.5, 1.0, 4.0]}, tol=1e-9)
    run = GridRunner(service, jobs=1).run(spec)
    assert run.total == 36
    assert run.failed == 0, [r.note for r in run.reports if not r.passed]


@pytest.mark.parametrize('n', [1.0, 2.0, 3.0])
@pytest.mark.parametrize('identity', [IdentityId.M_1_7A, IdentityId.M_1_7B])
def test_ramanujan_chain(service, identity, n):
    """求积、Hurwitz ζ 的 Mellin 形式与初等 / 三伽马闭式两两相差不超过 1e-9."""
    report = service.verify(identity, ParamPoint(n=n), tol=1e-9)
    assert report.passed, report.note
    values = [report.lhs.value, report.rhs.value, report.alt.value]
    for left in values:
        for right in values:
            assert agrees(left, right, 1e-9)


@pytest.mark.slow
@pytest.mark.parametrize('identity, extra', [
    (IdentityId.COR1_3_2, {"psi_spec": FoxWrightSpec.of(lower=[(1.5, 1.0)])}),
    (IdentityId.COR1_3_2, {"psi_spec": FoxWrightSpec.of(upper=[(0.5, 1.0)], lower=[(2.0, 0.5)])}),
    (IdentityId.COR2_3_3, {"pfq_upper": (1.0,), "pfq_lower": (2.5,)}),
    (IdentityId.COR2_3_3, {"pfq_upper": (0.5, 0.25), "pfq_lower": (1.5,)}),
])
def test_corollary_inner_shapes(service, identity, extra):
    """内层 0Ψ1、1Ψ1、1F1 与 2F1 的三条路径一致."""
    point = ParamPoint(mu=1.0, xi=1.0, b=1.5, c=1.0, nu=0.5, y=2.0).with_values(**extra)
    report = service.verify(identity, point)
    assert report.passed, report.note
    assert report.alt is not None


def test_catalog_required_fields_exist():
    for entry in CATALOG:
        for name in entry.required:
            assert hasattr(ParamPoint(), name), f"{entry.slug}: {name}"
    assert get_entry(IdentityId.SUM_5_7).required == ("n",)
