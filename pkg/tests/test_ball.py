import pickle
from fractions import Fraction

import mpmath
from hypothesis import given, strategies as st

from hrcn import ball
from hrcn.ball import BoundedReal

fracs = st.fractions(min_value=-1000, max_value=1000, max_denominator=1000)


@given(fracs, fracs)
def test_arithmetic_encloses_exact(a, b):
    x, y = BoundedReal(a), BoundedReal(b)
    assert (x + y).contains(a + b)
    assert (x * y).contains(a * b)
    assert (x - y).contains(a - b)
    if b:
        assert (x / y).contains(a / b)


@given(st.fractions(min_value=Fraction(1, 100), max_value=100, max_denominator=100))
def test_exp_log_roundtrip(a):
    assert ball.exp(ball.log(BoundedReal(a))).contains(a)


def test_pi_enclosure():
    ball.set_precision(128)
    p = ball.pi()
    with mpmath.workprec(300):
        assert p.lo <= mpmath.pi <= p.hi
    assert p.err < 1e-35


def test_comparisons():
    one = BoundedReal(1)
    two = BoundedReal(2)
    assert one.certainly_lt(two)
    assert not BoundedReal(1, Fraction(2)).certainly_lt(two)
    assert (two - one).sign() == 1


def test_pickle_roundtrip():
    x = ball.pi() / 3
    y = pickle.loads(pickle.dumps(x))
    assert (x.lo, x.hi) == (y.lo, y.hi)


def test_precision_floor():
    import pytest

    with pytest.raises(ValueError):
        ball.set_precision(32)
    ball.set_precision(128)
