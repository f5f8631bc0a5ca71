import pytest
from hypothesis import given, settings, strategies as st

from hrcn import invariants
from hrcn.invariants import extension_over_q, higher_relative_class_number, quadratic_subfield_discs, wm

from helpers import ext_over, quadratic_base


def test_catalog_polynomials_are_expected(catalog):
    # the deltas below are written in these power bases
    assert quadratic_base(catalog, 8).field.poly == (-2, 0, 1)
    assert quadratic_base(catalog, 12).field.poly == (-3, 0, 1)
    assert quadratic_base(catalog, 60).field.poly == (-15, 0, 1)
    assert quadratic_base(catalog, 120).field.poly == (-30, 0, 1)


@pytest.mark.parametrize("D,m,w", [(-3, 3, 18), (-4, 3, 4), (-4, 5, 4), (-3, 5, 6), (-7, 3, 14), (-8, 3, 2)])
def test_wm_imaginary_quadratic(D, m, w):
    assert wm(extension_over_q(D).K, m) == w


@settings(max_examples=12, deadline=None)
@given(st.sampled_from([-3, -4, -7, -8, -11, -15, -19, -20, -23, -24, -39, -40]), st.sampled_from([3, 5, 7]))
def test_wm_even_and_dividing_zeta_denominators(D, m):
    w = wm(extension_over_q(D).K, m, 300)
    assert w % 2 == 0
    res = higher_relative_class_number(extension_over_q(D), m, euler_cutoff=3000, wm_bound=300)
    assert res.h_low >= 1


@pytest.mark.parametrize("D,m,h,reason", [
    (-3, 3, 1, "odd-ramified"),
    (-4, 5, 5, "unique-2-adic-prime"),
    (-7, 3, 8, "odd-ramified"),
    (-3, 7, 7, "odd-ramified"),
])
def test_h_over_q(D, m, h, reason):
    r = higher_relative_class_number(extension_over_q(D), m)
    assert (r.h_low, r.h_high, r.q_m.reason) == (h, h, reason)


def test_zeta12(catalog):
    ext = ext_over(catalog, 12, (-1, 0))
    assert ext.d_K == 144
    assert higher_relative_class_number(ext, 3).h == 1
    assert higher_relative_class_number(ext, 5).h == 5


def test_sqrt30_resolved_by_subfield(catalog):
    ext = ext_over(catalog, 120, (-2, 0))
    assert sorted(quadratic_subfield_discs(ext)) == [-15, -8]
    r = higher_relative_class_number(ext, 3)
    assert (r.h_low, r.h_high, r.q_m.reason) == (24, 24, "divisibility-forced")
    unresolved = higher_relative_class_number(ext, 3, resolve=False)
    assert (unresolved.h_low, unresolved.h_high) == (12, 24)


def test_ambiguous_pair_stays_open(catalog):
    r = higher_relative_class_number(ext_over(catalog, 60, (-1, 0)), 3)
    assert r.ambiguous and (r.h_low, r.h_high) == (4, 8)
    assert r.q_m.reason == "undetermined"


def test_qm_status_rejects_inconsistent_reason():
    with pytest.raises(ValueError):
        invariants.QmStatus(invariants.ONE, "undetermined")
