# tests/test_properties.py
"""基于 hypothesis 的性质测试."""

import json
import math

import numpy as np
from hypothesis import assume, given, settings
from hypothesis.strategies import complex_numbers, dictionaries, floats, integers, sampled_from, text

from models.fox_wright_data import FoxWrightSpec
from services.foxwright import bessel_j_array, fox_wright_eval
from services.identities.verifier import agrees
from services.specfun import hurwitz_zeta, pochhammer_ratio, trigamma
from views.cli.formatters import canonical_json, format_float

_SETTINGS = settings(max_examples=60, deadline=None)


@_SETTINGS
@given(floats(0.01, 50.0), floats(0.01, 50.0), integers(0, 400))
def test_pochhammer_ratio_bounds(b, c, k):
    """比值落在 (0, 1] 内且随 k 不增."""
    r = pochhammer_ratio(b, c, k)
    assert 0.0 < r <= 1.0
    assert pochhammer_ratio(b, c, k + 1) <= r * (1.0 + 1e-15)


@_SETTINGS
@given(floats(1.2, 8.0), floats(0.1, 20.0))
def test_hurwitz_zeta_shift(s, q):
    """ζ(s, q) − ζ(s, q+1) = q^{−s}."""
    diff = (hurwitz_zeta(s, q) - hurwitz_zeta(s, q + 1.0)).real
    expected = q ** (-s)
    assert abs(diff - expected) <= 1e-11 * max(1.0, abs(hurwitz_zeta(s, q)))


@_SETTINGS
@given(complex_numbers(min_magnitude=0.5, max_magnitude=30.0, allow_nan=False, allow_infinity=False))
def test_trigamma_recurrence(z):
    """ψ′(z+1) = ψ′(z) − 1/z²."""
    assume(z.real > 0.1)
    lhs = trigamma(z + 1.0)
    rhs = trigamma(z) - 1.0 / (z * z)
    assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(trigamma(z)))


@_SETTINGS
@given(floats(-0.95, 0.95))
def test_geometric_series(z):
    """1Ψ0[(1,1)](z) = 1/(1−z)."""
    result = fox_wright_eval(FoxWrightSpec.of(upper=[(1.0, 1.0)]), z)
    assert math.isclose(result.value, 1.0 / (1.0 - z), rel_tol=1e-12)
    assert result.abs_err_est <= 1e-10


@_SETTINGS
@given(floats(1.0, 2.0), floats(0.5, 40.0))
def test_bessel_recurrence(nu, x):
    """J_{ν−1}(x) + J_{ν+1}(x) = (2ν/x)·J_ν(x)，覆盖三个计算区间."""
    xs = np.array([x])
    left = bessel_j_array(nu - 1.0, xs) + bessel_j_array(nu + 1.0, xs)
    right = 2.0 * nu / x * bessel_j_array(nu, xs)
    assert abs(left[0] - right[0]) <= 1e-9


@_SETTINGS
@given(floats(allow_nan=False, allow_infinity=False))
def test_format_float_is_exact(x):
    assert float(format_float(x)) == x


@_SETTINGS
@given(dictionaries(text(min_size=1, max_size=8),
                    floats(allow_nan=False, allow_infinity=False) | integers(-10**6, 10**6) | sampled_from([None, True]),
                    max_size=6))
def test_canonical_json_round_trip(data):
    """解析后重新序列化逐字节相同."""
    once = canonical_json(data)
    assert canonical_json(json.loads(once)) == once


@_SETTINGS
@given(floats(-1e6, 1e6), floats(-1e6, 1e6), floats(1e-14, 1e-2))
def test_agrees_is_symmetric(left, right, tol):
    assert agrees(left, right, tol) == agrees(right, left, tol)
