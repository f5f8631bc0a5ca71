from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hrcn import bounds, enumeration


def test_gamma_values():
    assert bounds.gamma_lower(3).lo >= 0.8463
    assert bounds.gamma_lower(5).lo >= 0.9653
    assert bounds.gamma_lower(7).lo >= 0.9917
    g = bounds.gamma_euler(3)
    assert g.hi >= bounds.gamma_lower(3).lo


@pytest.mark.parametrize("m,printed", [(3, 7.3517), (5, 3.8332), (7, 2.6336), (9, 2.011)])
def test_c_of_m(m, printed):
    c = bounds.c_of_m(m)
    assert c.hi <= printed
    assert c.lo > printed - 10 ** -3


def test_c_decreasing():
    cs = [bounds.c_of_m(m).approx for m in range(3, 25, 2)]
    assert all(a > b for a, b in zip(cs, cs[1:]))


def test_m3_caps():
    sb = bounds.search_bounds(3, 16)
    assert sb.n_max == 6
    assert [sb.caps[n] for n in range(1, 7)] == [29, 216, 1589, 11684, 85900, 631511]


def test_empty_space():
    assert bounds.search_bounds(21, 16).empty
    assert not bounds.search_bounds(19, 16).empty
    assert bounds.max_degree(11) == 1


@given(st.integers(1, 6), st.sampled_from([3, 5, 7]), st.integers(1, 64))
def test_root_disc_monotone_in_h(n, m, h):
    assert bounds.root_disc_bound(m, n, h).hi <= bounds.root_disc_bound(m, n, h + 1).hi


def test_dk_bound():
    assert bounds.dk_bound(1, 1, 3) == 29
    assert bounds.dk_bound(8, 2, 3) >= 1088


def test_estimates_bracket_known_values():
    # Q(omega), m = 3: h = 1, w = 18
    assert bounds.hm_lower_estimate(3, 1, 1, 3).hi <= 1 <= bounds.hm_upper_estimate(3, 1, 1, 3, 18).lo
    # Q(sqrt2)(sqrt(-5-2 sqrt2)), m = 3: h = 16, w = 2
    assert bounds.hm_lower_estimate(3, 2, 8, 1088).hi <= 16 <= bounds.hm_upper_estimate(3, 2, 8, 1088, 2).lo


def test_nf_m_small(catalog):
    nf7 = enumeration.nf_m(7, catalog)
    assert sorted(e.disc for n in nf7 for e in nf7[n]) == [1, 5, 8]
    nf9 = enumeration.nf_m(9, catalog)
    assert sorted(e.disc for n in nf9 for e in nf9[n]) == [1, 5]


def test_odlyzko_table():
    assert bounds.odlyzko_min_root_disc(2) == Fraction(2223, 1000)
    with pytest.raises(ValueError):
        bounds.odlyzko_min_root_disc(0)
