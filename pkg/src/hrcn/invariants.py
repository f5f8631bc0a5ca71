"""w_m(K), the index Q_m(K) and the higher relative class number h_m^-(K)."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Optional, Tuple

from mpmath import floor as mfloor, mpf
from sympy import factorint, primerange, totient

from . import lvalue
from .ball import BoundedReal
from .extension import CatalogEntry, CMExtension
from .nf_core import absolute_field, elt_norm, elt_trace, rationals, splitting_type

log = logging.getLogger(__name__)

DEFAULT_WM_SAMPLE_BOUND = 1000
INTEGRALITY_TOL = Fraction(1, 100)
MAX_ERR = mpf(1) / 200


class IntegralityError(ArithmeticError):
    pass


ONE, TWO, UNKNOWN = "One", "Two", "Unknown"


@dataclass(frozen=True)
class QmStatus:
    value: str
    reason: str

    def __post_init__(self):
        if self.value in (ONE, TWO) and self.reason == "undetermined":
            raise ValueError("a determined Q_m needs a reason")

    @property
    def q(self) -> Optional[int]:
        return {ONE: 1, TWO: 2}.get(self.value)


@dataclass(frozen=True)
class HigherClassResult:
    m: int
    extension: CMExtension
    w_m: int
    q_m: QmStatus
    h_low: int
    h_high: int
    lvalue: lvalue.LValueResult
    ratio: BoundedReal  # h / Q_m

    @property
    def ambiguous(self) -> bool:
        return self.h_low != self.h_high

    @property
    def h(self):
        return self.h_low if not self.ambiguous else (self.h_low, self.h_high)


# --- w_m --------------------------------------------------------------------------

def _candidate_prime_powers(K, m):
    deg = K.degree
    out = {}
    for ell in primerange(2, m * deg + 2):
        k, best = 1, []
        while True:
            q = ell**k
            phi = q - q // ell
            if phi > m * deg:
                break
            # Q(zeta_q)^(m) is then a nontrivial extension ramified at ell
            if phi > m and K.disc % ell:
                break
            best.append(q)
            k += 1
        if best:
            out[ell] = best
    return out


def _passes(K, q, ell, m, sample_bound):
    if q == 2:
        return True
    for p in primerange(2, sample_bound + 1):
        if p == ell or K.disc % p == 0:
            continue
        for _e, f in splitting_type(K, p):
            N = pow(p, f, q)
            if ell == 2:
                if N != 1:
                    return False
            elif pow(N, m, q) != 1:
                return False
    return True


def wm(K, m: int, sample_bound: int = DEFAULT_WM_SAMPLE_BOUND) -> int:
    """Order of the higher roots of unity of K, by the norm test on primes <= bound.

    A failed congruence certainly excludes q; passing every sampled prime accepts it.
    """
    w = 1
    for ell, qs in _candidate_prime_powers(K, m).items():
        for q in qs:
            if not _passes(K, q, ell, m, sample_bound):
                break
            w = w // (q // ell) * q if w % (q // ell) == 0 else w * q
    return w


# --- Q_m ---------------------------------------------------------------------------

def _odd_part_gt1(N: int) -> bool:
    while N % 2 == 0:
        N //= 2
    return N > 1


def _nearest_half_odd(x: BoundedReal):
    t = x.approx * 2
    k = int(mfloor(t + mpf(1) / 2))
    if k % 2 == 0:
        return None
    return Fraction(k, 2)


def _near(x: BoundedReal, target: Fraction, tol=INTEGRALITY_TOL) -> bool:
    return abs(x.approx - mpf(target.numerator) / target.denominator) < mpf(tol.numerator) / tol.denominator


def qm_status(ext: CMExtension, m: int, h_F_odd: Optional[bool], ratio: BoundedReal) -> QmStatus:
    """Cascade of sufficient criteria for Q_m; Unknown when none applies."""
    if _odd_part_gt1(ext.rel_disc_norm):
        return QmStatus(ONE, "odd-ramified")
    above_two = len(splitting_type(ext.F, 2))
    if h_F_odd is None:
        log.warning("class number parity of F unknown for %s", ext)
    elif above_two == 1 and h_F_odd:
        return QmStatus(TWO, "unique-2-adic-prime")
    half = _nearest_half_odd(ratio)
    if half is not None and _near(ratio, half) and ratio.err < MAX_ERR:
        return QmStatus(TWO, "half-integer-forced")
    return QmStatus(UNKNOWN, "undetermined")


# --- divisibility by imaginary quadratic subfields -----------------------------------------

def _squarefree_core(r: Fraction) -> int:
    n = r.numerator * r.denominator
    sign = -1 if n < 0 else 1
    core = 1
    for p, e in factorint(abs(n)).items():
        if e % 2:
            core *= p
    return sign * core


def _core_to_disc(core: int) -> int:
    return core if core % 4 == 1 else 4 * core


def quadratic_subfield_discs(ext: CMExtension):
    """Discriminants of the quadratic subfields of K other than F, when K/Q is
    biquadratic; empty otherwise."""
    F = ext.F
    if F.degree != 2:
        return []
    delta = ext.delta
    if delta[1] == 0:
        a = Fraction(delta[0])
        cores = [_squarefree_core(a), _squarefree_core(a * F.disc)]
    else:
        N = elt_norm(F, delta)
        if N < 0:
            return []
        s_num, s_den = isqrt(N.numerator), isqrt(N.denominator)
        if s_num * s_num != N.numerator or s_den * s_den != N.denominator:
            return []
        s = Fraction(s_num, s_den)
        tr = elt_trace(F, delta)
        cores = [_squarefree_core(tr + 2 * s), _squarefree_core(tr - 2 * s)]
    return sorted(_core_to_disc(c) for c in cores)


def _two_part(x: int) -> int:
    return x & -x


@lru_cache(maxsize=None)
def imaginary_quadratic_hm(D: int, m: int, euler_cutoff=None, wm_bound=DEFAULT_WM_SAMPLE_BOUND):
    """(h_m^-, w_m) for Q(sqrt D)/Q."""
    ext = extension_over_q(D)
    res = higher_relative_class_number(ext, m, euler_cutoff, wm_bound, resolve=False)
    assert not res.ambiguous
    return res.h_low, res.w_m


def extension_over_q(delta: int) -> CMExtension:
    Q = rationals()
    base = CatalogEntry(1, 1, (0, 1), 1, "1.1.1.1", (), Q)
    K = absolute_field(Q, [delta])
    return CMExtension(base, (Fraction(delta),), K, abs(K.disc))


def resolve_by_divisibility(ext: CMExtension, m: int, candidates: Tuple[int, int], w_K: int,
                            euler_cutoff=None, wm_bound=DEFAULT_WM_SAMPLE_BOUND):
    """Keep the candidates divisible by h_m^- of each usable imaginary quadratic subfield.

    A subfield k is used only when the 2-parts of w_m(k) and w_m(K) agree.
    Returns the unique survivor or None.
    """
    discs = [D for D in quadratic_subfield_discs(ext) if D < 0]
    if not discs:
        return None
    alive = list(candidates)
    for D in discs:
        hk, wk = imaginary_quadratic_hm(D, m, euler_cutoff, wm_bound)
        if _two_part(wk) != _two_part(w_K):
            continue
        alive = [h for h in alive if h % hk == 0]
    if len(alive) == 1:
        return alive[0]
    return None


# --- assembly ----------------------------------------------------------------------------

def _nearest_int(x: BoundedReal, what) -> int:
    k = int(mfloor(x.approx + mpf(1) / 2))
    if not _near(x, Fraction(k)) or x.err >= MAX_ERR or k <= 0:
        raise IntegralityError("no integer within tolerance for %s: %r" % (what, x))
    return k


def higher_relative_class_number(ext: CMExtension, m: int, euler_cutoff=None,
                                 wm_bound=DEFAULT_WM_SAMPLE_BOUND, resolve=True) -> HigherClassResult:
    F, K = ext.F, ext.K
    n = F.degree
    lv = lvalue.l_chi_1_minus_m(F, K, m, euler_cutoff)
    w = wm(K, m, wm_bound)
    ratio = abs(lv.l_at_1_minus_m) * w / 2 ** (n + 1)
    h_F = ext.base.h
    status = qm_status(ext, m, None if h_F is None else h_F % 2 == 1, ratio)
    if status.value == ONE:
        h = _nearest_int(ratio, ext)
        return HigherClassResult(m, ext, w, status, h, h, lv, ratio)
    if status.value == TWO:
        h = _nearest_int(ratio * 2, ext)
        return HigherClassResult(m, ext, w, status, h, h, lv, ratio)
    h0 = _nearest_int(ratio, ext)
    if resolve:
        hit = resolve_by_divisibility(ext, m, (h0, 2 * h0), w, euler_cutoff, wm_bound)
        if hit is not None:
            st = QmStatus(ONE if hit == h0 else TWO, "divisibility-forced")
            return HigherClassResult(m, ext, w, st, hit, hit, lv, ratio)
    return HigherClassResult(m, ext, w, status, h0, 2 * h0, lv, ratio)
