"""Search bounds: gamma(m), C(m), root-discriminant cutoffs and discriminant caps.

All quantities are rounded outward so that the search region is never shrunk.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import wraps
from math import factorial, floor
from typing import Dict

from sympy import primerange

from . import ball
from .ball import BoundedReal
from .lvalue import zeta

# minimal root discriminants of totally real fields, by degree (7 stands for n >= 7)
ODLYZKO = {1: Fraction(1), 2: Fraction("2.223"), 3: Fraction("3.610"), 4: Fraction("5.067"),
           5: Fraction("6.523"), 6: Fraction("7.941"), 7: Fraction("9.301")}


def _per_precision(fn):
    cache = {}

    @wraps(fn)
    def inner(m):
        key = (m, ball.iv.prec)
        if key not in cache:
            cache[key] = fn(m)
        return cache[key]

    return inner


@_per_precision
def gamma_lower(m: int) -> BoundedReal:
    """prod_p (1 + p^-m)^-1, evaluated as zeta(2m)/zeta(m)."""
    return zeta(2 * m) / zeta(m)


def gamma_euler(m: int, cutoff: int = 10**4) -> BoundedReal:
    """The same constant from its Euler product; tail in [exp(-sum_{k>P} k^-m), 1]."""
    acc = Fraction(1)
    out = BoundedReal(1)
    for i, p in enumerate(primerange(2, cutoff + 1)):
        acc /= 1 + Fraction(1, p**m)
        if i % 64 == 63:
            out, acc = out * BoundedReal(acc), Fraction(1)
    out = out * BoundedReal(acc)
    tail = ball.exp(-BoundedReal(Fraction(1, (m - 1) * cutoff ** (m - 1))))
    return BoundedReal.from_interval(out.lo * tail.lo, out.hi)


@_per_precision
def c_of_m(m: int) -> BoundedReal:
    """((2 pi)^m / (gamma(m) (m-1)!))^(1/(m-1/2))."""
    base = (2 * ball.pi()) ** m / (gamma_lower(m) * factorial(m - 1))
    return ball.exp(ball.log(base) * Fraction(2, 2 * m - 1))


def root_disc_bound(m: int, n: int, h_max: int = 16) -> BoundedReal:
    """Upper bound for the root discriminant of F when h_m^-(K) <= h_max."""
    scale = ball.exp(ball.log(BoundedReal(2 * h_max)) * Fraction(2, (2 * m - 1) * n))
    return scale * c_of_m(m)


def odlyzko_min_root_disc(n: int) -> Fraction:
    if n < 1:
        raise ValueError("degree must be positive")
    return ODLYZKO[min(n, 7)]


def _floor_hi(x: BoundedReal) -> int:
    return int(floor(x.hi))


@dataclass(frozen=True)
class SearchBounds:
    m: int
    h_max: int
    n_max: int
    cutoffs: Dict[int, BoundedReal] = field(default_factory=dict)
    caps: Dict[int, int] = field(default_factory=dict)

    @property
    def empty(self) -> bool:
        return self.n_max == 0


def search_bounds(m: int, h_max: int = 16) -> SearchBounds:
    """Degrees n with cutoff(n) above the Odlyzko bound, and the d_F caps for them."""
    cutoffs, caps = {}, {}
    n = 1
    while True:
        c = root_disc_bound(m, n, h_max)
        # non-strict comparison, keeping anything the rounding cannot rule out
        if not c.hi > ball._to_iv(odlyzko_min_root_disc(n)).a:
            break
        cutoffs[n] = c
        caps[n] = _floor_hi(c**n)
        n += 1
    return SearchBounds(m, h_max, n - 1, cutoffs, caps)


def max_degree(m: int, h_max: int = 16) -> int:
    return search_bounds(m, h_max).n_max


def dk_bound(d_F: int, n: int, m: int, h_max: int = 16) -> int:
    """floor((2 h_max)^(2/(2m-1)) C(m)^n) * d_F."""
    scale = ball.exp(ball.log(BoundedReal(2 * h_max)) * Fraction(2, 2 * m - 1))
    return _floor_hi(scale * c_of_m(m) ** n) * d_F


def _disc_power(ratio: int, m: int) -> BoundedReal:
    r = BoundedReal(ratio)
    return r ** (m - 1) * BoundedReal._wrap(ball.iv.sqrt(r.iv))


def hm_lower_estimate(m: int, n: int, d_F: int, d_K: int) -> BoundedReal:
    """Lower bound for h_m^-(K) from L(chi, m) >= gamma(m)^n."""
    ratio = abs(d_K) // d_F
    per = gamma_lower(m) * factorial(m - 1) / (ball.pi() * 2) ** m
    return _disc_power(ratio, m) * per ** n / 2


def hm_upper_estimate(m: int, n: int, d_F: int, d_K: int, w_m: int) -> BoundedReal:
    """Upper bound for h_m^-(K) from L(chi, m) <= zeta(m)^n."""
    ratio = abs(d_K) // d_F
    return _disc_power(ratio, m) * zeta(m) ** n * w_m
