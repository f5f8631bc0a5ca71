"""Real numbers carried with a rigorous absolute error bound.

A thin wrapper over mpmath's interval context: the value is an interval with
outward-rounded endpoints, reported as (midpoint, radius).
"""
from fractions import Fraction

from mpmath import iv, mp, mpf

DEFAULT_PRECISION = 128


def set_precision(bits: int):
    if bits < 64:
        raise ValueError("working precision must be at least 64 bits")
    iv.prec = bits


set_precision(DEFAULT_PRECISION)


def _to_iv(x):
    if isinstance(x, BoundedReal):
        return x.iv
    if isinstance(x, Fraction):
        return iv.mpf(x.numerator) / x.denominator
    return iv.mpf(x)


class BoundedReal:
    """Interval [approx - err, approx + err] known to contain the true value."""

    __slots__ = ("iv",)

    def __init__(self, value, err=0):
        v = _to_iv(value)
        if err:
            e = _to_iv(err)
            v = v + iv.mpf([-e.b, e.b])
        self.iv = v

    @classmethod
    def from_interval(cls, lo, hi):
        out = cls.__new__(cls)
        out.iv = iv.mpf([lo, hi])
        return out

    @classmethod
    def _wrap(cls, v):
        out = cls.__new__(cls)
        out.iv = v
        return out

    def __reduce__(self):
        # iv instances do not pickle across processes; ship the raw endpoints
        a, b = self.iv._mpi_
        return (_rebuild, (_raw(a), _raw(b)))

    @property
    def lo(self):
        return self.iv.a

    @property
    def hi(self):
        return self.iv.b

    @property
    def approx(self):
        with mp.workprec(iv.prec):
            return +mpf(self.iv.mid.a)

    @property
    def err(self):
        # radius, rounded up
        with mp.workprec(iv.prec):
            return mpf(self.iv.delta.b) / 2

    def __float__(self):
        return float(self.approx)

    def __add__(self, o):
        return BoundedReal._wrap(self.iv + _to_iv(o))

    __radd__ = __add__

    def __sub__(self, o):
        return BoundedReal._wrap(self.iv - _to_iv(o))

    def __rsub__(self, o):
        return BoundedReal._wrap(_to_iv(o) - self.iv)

    def __mul__(self, o):
        return BoundedReal._wrap(self.iv * _to_iv(o))

    __rmul__ = __mul__

    def __truediv__(self, o):
        return BoundedReal._wrap(self.iv / _to_iv(o))

    def __rtruediv__(self, o):
        return BoundedReal._wrap(_to_iv(o) / self.iv)

    def __neg__(self):
        return BoundedReal._wrap(-self.iv)

    def __abs__(self):
        return BoundedReal._wrap(abs(self.iv))

    def __pow__(self, k):
        if isinstance(k, int):
            return BoundedReal._wrap(self.iv**k)
        return exp(log(self) * k)

    def inflate(self, err):
        """Widen by an extra absolute error."""
        e = _to_iv(err).b
        return BoundedReal._wrap(self.iv + iv.mpf([-e, e]))

    def contains(self, x) -> bool:
        v = _to_iv(x)
        return self.iv.a <= v.a and v.b <= self.iv.b

    def certainly_lt(self, o) -> bool:
        return self.iv.b < _to_iv(o).a

    def certainly_gt(self, o) -> bool:
        return self.iv.a > _to_iv(o).b

    def certainly_le(self, o) -> bool:
        return self.iv.b <= _to_iv(o).a

    def certainly_ge(self, o) -> bool:
        return self.iv.a >= _to_iv(o).b

    def sign(self) -> int:
        """+1/-1 when the sign is certain, else 0."""
        if self.iv.a > 0:
            return 1
        if self.iv.b < 0:
            return -1
        return 0

    def __repr__(self):
        return "BoundedReal(%s +/- %s)" % (
            _short(self.approx),
            _short(self.err, 3),
        )


def _short(x, digits=20):
    from mpmath import nstr

    with mp.workprec(iv.prec):
        return nstr(x, digits)


def exp(x):
    return BoundedReal._wrap(iv.exp(_to_iv(x)))


def log(x):
    return BoundedReal._wrap(iv.log(_to_iv(x)))


def pi():
    return BoundedReal._wrap(iv.pi)


def rational(num, den=1):
    return BoundedReal(Fraction(num, den))


def _raw(t):
    sign, man, exp, bc = t
    return (int(sign), int(man), int(exp), int(bc))


def _rebuild(a, b):
    from mpmath.libmp import from_man_exp

    ends = [from_man_exp(-t[1] if t[0] else t[1], t[2]) if t[1] else t for t in (a, b)]
    v = iv.mpf(0)
    v._mpi_ = (ends[0], ends[1])
    return BoundedReal._wrap(v)
