"""Rigorous values of L(chi, m) and L(chi, 1-m) for a CM extension K/F.

chi is the quadratic character of K/F, so L(chi, s) = zeta_K(s) / zeta_F(s) and
its Euler factor at a rational prime p only needs the splitting types of p in
K and in F.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, isqrt

from sympy import Rational, bernoulli, factorint, primerange
from sympy.functions.combinatorial.numbers import kronecker_symbol

from . import ball
from .ball import BoundedReal
from .nf_core import NumberField, splitting_type

BLOCK = 64


def default_euler_cutoff(m: int) -> int:
    return 10**5 if m == 3 else 10**4


def sign_law(n: int, m: int) -> int:
    return -1 if (n * (m - 1) // 2) % 2 else 1


def local_factor(k_split, f_split, p: int, m: int) -> Fraction:
    """Exact ratio of the local zeta factors of K and F at p."""
    out = Fraction(1)
    for _e, f in k_split:
        out /= 1 - Fraction(1, p ** (f * m))
    for _e, f in f_split:
        out *= 1 - Fraction(1, p ** (f * m))
    return out


def chi_euler_factor(F: NumberField, K: NumberField, p: int, m: int) -> BoundedReal:
    return BoundedReal(local_factor(splitting_type(K, p), splitting_type(F, p), p, m))


def euler_tail_bound(n: int, m: int, cutoff: int) -> Fraction:
    """Bound on |log| of the omitted tail of the Euler product beyond ``cutoff``."""
    return Fraction(2 * n, (m - 1) * cutoff ** (m - 1))


def l_chi_m(F: NumberField, K: NumberField, m: int, cutoff: int) -> BoundedReal:
    """L(chi, m) from the Euler product over p <= cutoff, tail folded into the error."""
    if cutoff < 100:
        raise ValueError("Euler cutoff must be at least 100")
    n = F.degree
    acc = BoundedReal(1)
    block = Fraction(1)
    count = 0
    for p in primerange(2, cutoff + 1):
        block *= local_factor(splitting_type(K, p), splitting_type(F, p), p, m)
        count += 1
        if count == BLOCK:
            acc = acc * BoundedReal(block)
            block, count = Fraction(1), 0
    acc = acc * BoundedReal(block)
    t = BoundedReal(euler_tail_bound(n, m, cutoff))
    lo = ball.exp(-t).lo
    hi = ball.exp(t).hi
    return BoundedReal.from_interval(acc.lo * lo, acc.hi * hi)


@dataclass(frozen=True)
class LValueResult:
    l_at_m: BoundedReal
    l_at_1_minus_m: BoundedReal
    sign: int
    euler_cutoff: int
    tail_bound: Fraction
    # the class number formula used downstream holds under the 2-adic main conjecture
    assumption: str = "2-adic main conjecture"


def transport_factor(n: int, m: int, disc_ratio: int) -> BoundedReal:
    """(d_K/d_F)^(m-1/2) * (2 (m-1)! / (2 pi)^m)^n."""
    r = BoundedReal(disc_ratio)
    root = BoundedReal._wrap(ball.iv.sqrt(r.iv))
    gamma_part = 2 * factorial(m - 1) / (2 * ball.pi()) ** m
    return r ** (m - 1) * root * gamma_part**n


def l_chi_1_minus_m(F: NumberField, K: NumberField, m: int, cutoff=None) -> LValueResult:
    if m < 3 or m % 2 == 0:
        raise ValueError("m must be odd and at least 3")
    cutoff = cutoff or default_euler_cutoff(m)
    n = F.degree
    lm = l_chi_m(F, K, m, cutoff)
    ratio = Fraction(abs(K.disc), abs(F.disc))
    assert ratio.denominator == 1
    s = sign_law(n, m)
    val = lm * transport_factor(n, m, int(ratio)) * s
    return LValueResult(lm, val, s, cutoff, euler_tail_bound(n, m, cutoff))


# --- constants --------------------------------------------------------------------

def zeta(s: int, terms: int = 1000) -> BoundedReal:
    """zeta(s) for integer s >= 2.

    Partial sum to N, then the Euler-Maclaurin tail
    N^(1-s)/(s-1) - N^(-s)/2 + t with 0 <= t <= s N^(-s-1)/12.
    """
    acc = BoundedReal(0)
    for k in range(1, terms):
        acc = acc + BoundedReal(1) / BoundedReal(k) ** s
    N = terms
    base = Fraction(1, (s - 1) * N ** (s - 1)) + Fraction(1, 2 * N**s)
    lo = acc + BoundedReal(base)
    hi = lo + BoundedReal(Fraction(s, 12 * N ** (s + 1)))
    return BoundedReal.from_interval(lo.lo, hi.hi)


# --- exact oracle for F = Q ------------------------------------------------------------

def is_fundamental_discriminant(D: int) -> bool:
    if D in (0, 1):
        return False
    if D % 4 == 1:
        return _squarefree(D)
    if D % 4 == 0:
        d = D // 4
        return d % 4 in (2, 3) and _squarefree(d)
    return False


def _squarefree(d: int) -> bool:
    return all(e == 1 for e in factorint(abs(d)).values())


def bernoulli_oracle(D: int, m: int) -> Fraction:
    """L(chi_D, 1-m) = -B_{m,chi}/m exactly, via Bernoulli polynomials."""
    if not is_fundamental_discriminant(D):
        raise ValueError("%d is not a fundamental discriminant" % D)
    f = abs(D)
    total = Rational(0)
    for a in range(1, f + 1):
        c = kronecker_symbol(D, a)
        if c:
            total += c * bernoulli(m, Rational(a, f))
    b = total * f ** (m - 1)
    val = -b / m
    return Fraction(int(val.p), int(val.q))
