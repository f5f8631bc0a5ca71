from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from hrcn import lvalue
from hrcn.ball import BoundedReal
from hrcn.invariants import extension_over_q
from hrcn.nf_core import maximal_order

# D, m, L(chi_D, 1-m) = -B_{m,chi}/m
KNOWN = [(-3, 3, Fraction(-2, 9)), (-4, 5, Fraction(5, 2)), (-7, 3, Fraction(-16, 7)),
         (-4, 3, Fraction(-1, 2)), (-3, 7, Fraction(-14, 3))]


@pytest.mark.parametrize("D,m,value", KNOWN)
def test_bernoulli_oracle_known(D, m, value):
    assert lvalue.bernoulli_oracle(D, m) == value


@pytest.mark.parametrize("D,m,value", KNOWN)
def test_functional_equation_matches_oracle(D, m, value):
    ext = extension_over_q(D)
    res = lvalue.l_chi_1_minus_m(ext.F, ext.K, m)
    assert res.l_at_1_minus_m.contains(value)
    assert res.l_at_1_minus_m.err < 1e-6
    assert res.sign == lvalue.sign_law(1, m)


def test_l_at_3_closed_form():
    ext = extension_over_q(-3)
    res = lvalue.l_chi_1_minus_m(ext.F, ext.K, 3)
    with mpmath.workprec(200):
        exact = 4 * mpmath.pi ** 3 / (81 * mpmath.sqrt(3))
        assert abs(res.l_at_m.approx - exact) < 1e-9
        assert res.l_at_m.lo <= exact <= res.l_at_m.hi


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([-3, -4, -7, -8, -11, -15, -19, -20, -23, -24]), st.sampled_from([3, 5]))
def test_oracle_agreement_random(D, m):
    ext = extension_over_q(D)
    res = lvalue.l_chi_1_minus_m(ext.F, ext.K, m, cutoff=3000)
    assert res.l_at_1_minus_m.contains(lvalue.bernoulli_oracle(D, m))


@pytest.mark.parametrize("s", [3, 5, 7, 9])
def test_zeta_enclosure(s):
    z = lvalue.zeta(s)
    with mpmath.workprec(200):
        assert z.lo <= mpmath.zeta(s) <= z.hi
    assert z.err < 1e-12


@given(st.integers(1, 6), st.sampled_from([3, 5, 7, 9, 11]))
def test_sign_law(n, m):
    assert lvalue.sign_law(n, m) == (-1) ** (n * (m - 1) // 2)


def test_tail_bound_decreases():
    a = lvalue.euler_tail_bound(2, 3, 10**4)
    b = lvalue.euler_tail_bound(2, 3, 10**5)
    assert 0 < b < a
    assert a == Fraction(2 * 2, 2) * Fraction(1, 10**8)


def test_local_factors():
    # split, inert and ramified primes in Q(i)/Q at p = 5, 3, 2
    assert lvalue.local_factor([(1, 1), (1, 1)], [(1, 1)], 5, 3) == 1 / (1 - Fraction(1, 125))
    assert lvalue.local_factor([(1, 2)], [(1, 1)], 3, 3) == 1 / (1 + Fraction(1, 27))
    assert lvalue.local_factor([(2, 1)], [(1, 1)], 2, 3) == 1


def test_default_cutoffs():
    assert lvalue.default_euler_cutoff(3) == 10**5
    assert lvalue.default_euler_cutoff(5) == 10**4


def test_fundamental_discriminants():
    assert [d for d in range(-24, 0) if lvalue.is_fundamental_discriminant(d)] == [
        -24, -23, -20, -19, -15, -11, -8, -7, -4, -3]
