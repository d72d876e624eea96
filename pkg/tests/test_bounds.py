import math
import warnings

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from specbounds.bounds import (
    POLY_FAMILIES,
    BoundRequest,
    HypothesisWarning,
    Validity,
    bound,
    compare_bounds,
    eigen_sum_lower_bound,
    four_term_from_profile,
    neg_power_sum_upper_bound,
    power_sum_lower_bound,
    stokes_sum_lower_bound,
    weyl_reference,
)
from specbounds.geometry import Domain, GeometrySummary, inertia_floor, rearrangement_constants, summarize

SQUARE = summarize(Domain.box([1, 1]))


def req(k, l=1, geom=SQUARE, **kw):
    return BoundRequest(geom, k, l, **kw)


def test_bly_unit_volume_k1():
    g = GeometrySummary(1.0, 1.0, 2)
    assert eigen_sum_lower_bound("bly", BoundRequest(g, 1)).value == pytest.approx(2 * math.pi, rel=1e-15)


def test_bly_against_mpmath_formula():
    geom = summarize(Domain.ball(1.3, 3))
    k = 17
    mp = mpmath.mpf
    n = 3
    g = mpmath.gamma(mp(1) + mp(n) / 2)
    want = mp(n) / (n + 2) * 4 * mpmath.pi * (g / mp(geom.volume)) ** (mp(2) / n) * mp(k) ** (1 + mp(2) / n)
    got = eigen_sum_lower_bound("berezin_li_yau", req(k, geom=geom)).value
    assert got == pytest.approx(float(want), rel=1e-13)


def test_melas_adds_inertia_term():
    k = 10
    diff = eigen_sum_lower_bound("melas", req(k)).value - eigen_sum_lower_bound("bly", req(k)).value
    assert diff == pytest.approx(SQUARE.volume / (24 * 4 * SQUARE.inertia) * k, rel=1e-12)


@settings(max_examples=100, deadline=None)
@given(
    n=st.integers(2, 8),
    vol=st.floats(0.1, 10),
    excess=st.floats(1.0, 5.0),
    k=st.integers(1, 10_000),
)
def test_four_term_reduces_to_yolcu_yolcu(n, vol, excess, k):
    geom = GeometrySummary(vol, excess * inertia_floor(vol, n), n)
    a = eigen_sum_lower_bound("four_term", req(k, geom=geom)).value
    b = eigen_sum_lower_bound("yolcu_yolcu", req(k, geom=geom)).value
    assert a == pytest.approx(b, rel=1e-12)
    s1 = stokes_sum_lower_bound("four_term_stokes", req(k, geom=geom, operator="stokes")).value
    s2 = stokes_sum_lower_bound("yolcu_yolcu_stokes", req(k, geom=geom, operator="stokes")).value
    assert s1 == pytest.approx(s2, rel=1e-12)


@settings(max_examples=100, deadline=None)
@given(n=st.integers(2, 9), l=st.integers(1, 4), k=st.integers(1, 5000), vol=st.floats(0.2, 5), excess=st.floats(1, 4))
def test_profile_route_matches_closed_form(n, l, k, vol, excess):
    geom = GeometrySummary(vol, excess * inertia_floor(vol, n), n)
    c = rearrangement_constants(geom)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", HypothesisWarning)
        closed = eigen_sum_lower_bound("four_term", req(k, l, geom)).value
        closed_s = stokes_sum_lower_bound("four_term_stokes", req(k, l, geom, operator="stokes")).value
    assert four_term_from_profile(n, l, k, c.m, c.lcap) == pytest.approx(closed, rel=1e-10)
    assert four_term_from_profile(n, l, k, c.m_s, c.l_s) == pytest.approx(closed_s, rel=1e-10)


def test_out_of_range_order_is_flagged():
    with pytest.warns(HypothesisWarning):
        bv = eigen_sum_lower_bound("four_term", req(5, l=2))
    assert bv.validity is Validity.VIOLATED
    with pytest.warns(HypothesisWarning):
        assert eigen_sum_lower_bound("melas", req(5, l=2)).validity is Validity.VIOLATED


def test_leading_forms_are_asymptotic():
    assert eigen_sum_lower_bound("cswz", req(5, l=2)).validity is Validity.ASYMPTOTIC
    assert stokes_sum_lower_bound("ilyin_higher_leading", req(5, l=2, operator="stokes")).validity is Validity.ASYMPTOTIC
    assert power_sum_lower_bound(req(5, exponent=0.5), two_term=True).validity is Validity.ASYMPTOTIC


def test_as_printed_forms_differ():
    for fam in ("yolcu_yolcu", "cswz_leading"):
        a = eigen_sum_lower_bound(fam, req(50, l=1 if fam == "yolcu_yolcu" else 2))
        b = eigen_sum_lower_bound(fam, req(50, l=1 if fam == "yolcu_yolcu" else 2), as_printed=True)
        assert a.value != pytest.approx(b.value)
    a = power_sum_lower_bound(req(50, exponent=0.5))
    b = power_sum_lower_bound(req(50, exponent=0.5), as_printed=True)
    assert a.value != pytest.approx(b.value)


def test_power_sum_q1_is_bly():
    for k in (1, 7, 200):
        assert power_sum_lower_bound(req(k, exponent=1.0)).value == pytest.approx(
            eigen_sum_lower_bound("bly", req(k)).value, rel=1e-12
        )


def test_neg_power_sum_small_p_returns_k():
    for k in (1, 9, 300):
        assert neg_power_sum_upper_bound(req(k, exponent=1e-15)).value == pytest.approx(k, rel=1e-12)


def test_exponent_ranges():
    with pytest.raises(ValueError):
        power_sum_lower_bound(req(3, exponent=1.5))
    with pytest.raises(ValueError):
        neg_power_sum_upper_bound(req(3, exponent=1.0))


def test_request_validation():
    with pytest.raises(ValueError):
        BoundRequest(SQUARE, 0)
    with pytest.raises(ValueError):
        BoundRequest(SQUARE, 1, operator="maxwell")
    with pytest.raises(ValueError):
        bound("nonsense", req(1))


def test_weyl_reference():
    assert weyl_reference("polyharmonic", 2, 1, 1.0, 10) == pytest.approx(40 * math.pi)
    assert weyl_reference("stokes", 2, 2, 1.0, 10) is None


def test_compare_bounds_sorted():
    rows = compare_bounds(["melas", "bly", "yy"], SQUARE, [3, 1, 2])
    keys = [(r.k, r.family) for r in rows]
    assert keys == sorted(keys)
    assert len(rows) == 9
    with pytest.raises(ValueError):
        compare_bounds([], SQUARE, [1])


@settings(max_examples=50, deadline=None)
@given(c=st.floats(0.2, 5.0), k=st.integers(1, 1000))
def test_scaling_covariance(c, k):
    # eigenvalues of (-Delta)^l scale like c^(-2l), and so must the bounds
    dom = Domain.box([1, 2])
    for fam in POLY_FAMILIES:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", HypothesisWarning)
            a = bound(fam, BoundRequest(summarize(dom), k, 1)).value
            b = bound(fam, BoundRequest(summarize(dom.scaled(c)), k, 1)).value
        assert b == pytest.approx(a / c**2, rel=1e-11)
