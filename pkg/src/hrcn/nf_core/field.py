"""Number fields of small degree: maximal orders, splitting types, elements.

Elements of a field are tuples of ``Fraction`` giving coordinates in the power
basis 1, y, ..., y^(n-1) of the defining polynomial's root y.
"""
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt, lcm
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import factorint
from sympy import sieve

from . import modp, order, polys, roots
from .polys import IntPoly

SplittingType = Tuple[Tuple[int, int], ...]


class ReducibleError(ValueError):
    pass


class DegenerateExtension(ValueError):
    pass


@dataclass(frozen=True)
class NumberField:
    poly: IntPoly
    signature: Tuple[int, int]
    disc: int
    basis_rows: Tuple[Tuple[int, ...], ...]
    basis_den: int
    poly_disc: int
    _cache: Dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @property
    def degree(self):
        return len(self.poly) - 1

    @property
    def index(self) -> int:
        idx = order.index_of(self.basis_rows, self.basis_den)
        assert idx.denominator == 1
        return int(idx)

    @property
    def order_basis(self):
        """Maximal-order basis as rational rows in the power basis."""
        return [[Fraction(x, self.basis_den) for x in r] for r in self.basis_rows]

    @property
    def arith(self):
        a = self._cache.get("arith")
        if a is None:
            a = order.OrderArithmetic(self.poly, self.basis_rows, self.basis_den)
            self._cache["arith"] = a
        return a

    def __str__(self):
        return "NumberField(%s, disc=%d)" % (polys.format_poly(self.poly), self.disc)


def _prime_factors(n):
    return sorted(factorint(abs(n)).keys()) if abs(n) > 1 else []


def maximal_order(f: Sequence[int], start=None, primes=None, check_irreducible=True) -> NumberField:
    """Maximal order of Q[x]/(f) for monic irreducible integer f.

    ``start`` may give an order ``(rows, den)`` to enlarge from, and ``primes``
    the only primes at which it can fail to be maximal; otherwise Z[x] is used
    and the primes are those whose square divides disc(f).
    """
    f = polys.to_int_poly(f)
    n = len(f) - 1
    if n < 1 or f[-1] != 1:
        raise ValueError("defining polynomial must be monic of degree >= 1")
    if check_irreducible and not polys.is_irreducible(f):
        raise ReducibleError("%s is reducible over Q" % polys.format_poly(f))
    pd = polys.poly_disc(f)
    if start is None:
        rows, den = order.power_order(n)
        use_dedekind = True
    else:
        rows, den = order.normalize(start[0], start[1], n)
        use_dedekind = False
    if primes is None:
        fac = factorint(abs(pd)) if abs(pd) > 1 else {}
        primes = sorted(p for p, e in fac.items() if e >= 2)
    for p in primes:
        rows, den = order.p_maximal(f, rows, den, p, use_dedekind=use_dedekind)
    idx = order.index_of(rows, den)
    disc_q = Fraction(pd) / idx**2
    if disc_q.denominator != 1:
        raise ArithmeticError("order index inconsistent with discriminant")
    r1 = roots.count_real_roots(f)
    return NumberField(f, (r1, (n - r1) // 2), int(disc_q), rows, den, pd)


RATIONALS = None


def rationals() -> NumberField:
    global RATIONALS
    if RATIONALS is None:
        RATIONALS = NumberField((0, 1), (1, 0), 1, ((1,),), 1, 1)
    return RATIONALS


# --- elements ---------------------------------------------------------------

def elt(F, coords):
    c = [Fraction(x) for x in coords] + [Fraction(0)] * (F.degree - len(coords))
    return tuple(c[: F.degree])


def elt_mul(F, a, b):
    r = polys.rem_monic(polys.mul(a, b), F.poly)
    return elt(F, r)


def elt_pow(F, a, e):
    out = elt(F, [1])
    for _ in range(e):
        out = elt_mul(F, out, a)
    return out


def elt_norm(F, a) -> Fraction:
    a = polys.trim(a)
    if F.degree == 1:
        return Fraction(a[0]) if a else Fraction(0)
    return Fraction(polys.resultant(F.poly, a))


def elt_trace(F, a) -> Fraction:
    # trace of y^k is the k-th power sum of the roots (Newton)
    n, f = F.degree, F.poly
    s = [Fraction(n)]
    e = [Fraction(f[n - k]) for k in range(n + 1)]  # coefficients from the top
    for k in range(1, n):
        acc = -k * e[k]
        for i in range(1, k):
            acc -= e[i] * s[k - i]
        s.append(acc)
    return sum(Fraction(c) * s[k] for k, c in enumerate(a))


def elt_inv(F, a):
    """Inverse via the multiplication matrix."""
    n = F.degree
    mat = [list(elt_mul(F, a, elt(F, [0] * i + [1]))) for i in range(n)]
    # coefficients c with sum c_i * (a*y^i) = 1
    cols = [[mat[i][j] for i in range(n)] + [Fraction(1 if j == 0 else 0)] for j in range(n)]
    sol = _solve(cols, n)
    return tuple(sol)


def _solve(aug, n):
    aug = [r[:] for r in aug]
    for c in range(n):
        piv = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                u = aug[i][c]
                aug[i] = [x - u * y for x, y in zip(aug[i], aug[c])]
    return [aug[i][n] for i in range(n)]


def order_coords(F, a):
    """Coordinates of a in the maximal-order basis (Fractions)."""
    return order.solve_upper(F.basis_rows, [Fraction(x) * F.basis_den for x in a])


def from_order_coords(F, c):
    n = F.degree
    return tuple(sum(Fraction(c[i]) * F.basis_rows[i][j] for i in range(n)) / F.basis_den for j in range(n))


def is_integral(F, a) -> bool:
    return all(x.denominator == 1 for x in order_coords(F, a))


def is_square(F, a) -> bool:
    """Whether a is a square in F (factor x^2 - a over F via the norm trick)."""
    n = F.degree
    a = elt(F, a)
    d = 1
    for x in a:
        d = lcm(d, x.denominator)
    a = tuple(x * d * d for x in a)
    if n == 1:
        q = Fraction(a[0])
        return q >= 0 and isqrt(q.numerator) ** 2 == q.numerator and isqrt(q.denominator) ** 2 == q.denominator
    for c in range(0, 20):
        charpoly = _charpoly_sqrt(F, a, c)
        if polys.is_squarefree(charpoly):
            break
    # with a squarefree char poly, sqrt(a) + c*y generates F(sqrt a), which has
    # degree 2n exactly when that polynomial is irreducible
    return not polys.is_irreducible(polys.to_int_poly(charpoly))


# --- real embeddings ----------------------------------------------------------

def is_totally_real(F) -> bool:
    return roots.count_real_roots(F.poly) == F.degree


def _root_intervals(F):
    """Isolating intervals of the real roots of f, pre-refined to width < 2^-40."""
    hit = F._cache.get("root_intervals")
    if hit is None:
        hit = []
        for iv in roots.isolate_real_roots(F.poly):
            while iv[1] - iv[0] > Fraction(1, 2**40):
                iv = roots.refine(F.poly, iv)
            hit.append(iv)
        F._cache["root_intervals"] = hit
    return hit


def embedding_signs(F, a) -> List[int]:
    """Signs of a under the real embeddings, ordered by the real roots of f."""
    g = polys.trim(a)
    return [roots.sign_at_root(F.poly, iv, g) for iv in _root_intervals(F)]


def is_totally_negative(F, a) -> bool:
    if F.degree == 1:
        return Fraction(a[0]) < 0
    if F.signature[1] != 0:
        return False
    # float rejection first; the exact check decides anything that survives
    vals = real_embeddings(F)
    fa = [float(x) for x in a]
    scale = max(1.0, max(abs(x) for x in fa)) * max(1.0, float(abs(vals).max())) ** len(fa)
    for r in vals:
        v = sum(c * r**k for k, c in enumerate(fa))
        if v > 1e-9 * scale:
            return False
    return all(s < 0 for s in embedding_signs(F, a))


def real_embeddings(F):
    """Floating-point real roots of f (ascending), for quick prefilters."""
    hit = F._cache.get("real_roots")
    if hit is None:
        import numpy as np

        r = np.roots(list(reversed(F.poly)))
        hit = np.sort(r.real[np.abs(r.imag) < 1e-9])
        F._cache["real_roots"] = hit
    return hit


# --- splitting ----------------------------------------------------------------

def splitting_type(F: NumberField, p: int) -> SplittingType:
    """Sorted multiset of (e, f) for the primes of F above p."""
    if F.degree == 1:
        return ((1, 1),)
    key = ("split", p)
    hit = F._cache.get(key)
    if hit is not None:
        return hit
    if F.index % p:
        st = tuple(sorted((e, d) for d, e in modp.degree_pattern(F.poly, p)))
    else:
        st = tuple(sorted(_split_via_algebra(F, p)))
    if len(F._cache) < 50000:
        F._cache[key] = st
    return st


def _frobenius_power(arith, p, q):
    n = arith.n
    out = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        out.append(arith.pow_mod(e, q, p))
    return out


def _min_poly_mod(arith, b, p):
    """Minimal polynomial over F_p of b in O/pO (ascending coefficients)."""
    powers = [list(arith.one())]
    while True:
        nxt = arith.mul(powers[-1], b, p)
        rows = powers + [nxt]
        ker = modp.nullspace(rows, p)
        if ker:
            v = ker[0]
            inv = pow(v[-1], -1, p)
            return [x * inv % p for x in v]
        powers.append(nxt)


def _idempotent_split(arith, e, b, p):
    """Split idempotent e along the F_p-values of b (b in the Frobenius-fixed part)."""
    eb = arith.mul(e, b, p)
    mp = _min_poly_mod(arith, eb, p)
    rts = [g[0] for g, _ in modp.factor_fast(mp, p)]
    rts = [(-c) % p for c in rts]
    if len(rts) <= 1:
        return [e]
    out = []
    for c in rts:
        acc = list(e)
        for c2 in rts:
            if c2 == c:
                continue
            shifted = [(x - c2 * o) % p for x, o in zip(eb, e)]
            inv = pow((c - c2) % p, -1, p)
            acc = [x * inv % p for x in arith.mul(acc, shifted, p)]
        if any(acc):
            out.append(acc)
    return out


@dataclass(frozen=True)
class PrimeIdeal:
    """A prime of F above p, held as a primitive idempotent of O/pO."""
    p: int
    e: int
    f: int
    idempotent: Tuple[int, ...]

    @property
    def norm(self):
        return self.p**self.f


def prime_decomposition(F: NumberField, p: int) -> List[PrimeIdeal]:
    """Primes above p via primitive idempotents of O/pO.

    The Frobenius-fixed subalgebra is F_p^g, one factor per prime above p.  For a
    primitive idempotent e, dim(eO/pO) = e_P f_P and the image of x -> (ex)^q
    with q >= n a power of p is the residue field, of dimension f_P.
    """
    key = ("primes", p)
    hit = F._cache.get(key)
    if hit is not None:
        return hit
    arith = F.arith
    n = F.degree
    frob = _frobenius_power(arith, p, p)
    fixed_rows = [[(frob[i][j] - (1 if i == j else 0)) % p for j in range(n)] for i in range(n)]
    basis = modp.nullspace(fixed_rows, p)
    idem = [list(arith.one())]
    for b in basis:
        nxt = []
        for e in idem:
            nxt.extend(_idempotent_split(arith, e, list(b), p))
        idem = nxt
        if len(idem) == len(basis):
            break
    q = _power_at_least(p, n)
    out = []
    for e in idem:
        dim = modp.rank(arith.mult_matrix(e, p), p)
        images = []
        for i in range(n):
            w = [0] * n
            w[i] = 1
            images.append(arith.pow_mod(arith.mul(e, w, p), q, p))
        fdeg = modp.rank(images, p)
        out.append(PrimeIdeal(p, dim // fdeg, fdeg, tuple(e)))
    if sum(P.e * P.f for P in out) != n:
        raise ArithmeticError("inconsistent decomposition of O/%dO" % p)
    out.sort(key=lambda P: (P.f, P.e, P.idempotent))
    F._cache[key] = out
    return out


def _power_at_least(p, n):
    q = p
    while q < n:
        q *= p
    return q


def in_prime(F: NumberField, P: PrimeIdeal, a) -> bool:
    """Whether the algebraic integer a lies in P (a*e_P nilpotent mod p)."""
    c = order_coords(F, a)
    if any(x.denominator != 1 for x in c):
        raise ValueError("element is not integral")
    arith = F.arith
    x = arith.mul([int(v) % P.p for v in c], list(P.idempotent), P.p)
    return not any(arith.pow_mod(x, _power_at_least(P.p, F.degree), P.p))


def _split_via_algebra(F, p):
    return [(P.e, P.f) for P in prime_decomposition(F, p)]


def residue_norms(F, p) -> List[int]:
    return sorted(p**f for e, f in splitting_type(F, p))


def fingerprint(F, count=50):
    """Splitting types at the first ``count`` primes not dividing the field
    discriminant; equal for isomorphic fields."""
    key = ("fingerprint", count)
    hit = F._cache.get(key)
    if hit is not None:
        return hit
    out = []
    for p in sieve.primerange(2, 10**7):
        if F.disc % p == 0:
            continue
        out.append(splitting_type(F, p))
        if len(out) == count:
            break
    out = tuple(out)
    F._cache[key] = out
    return out


def is_isomorphic(F, G, count=50) -> bool:
    """Equal degree, signed discriminant and splitting fingerprint."""
    if F.degree != G.degree or F.disc != G.disc:
        return False
    return fingerprint(F, count) == fingerprint(G, count)


# --- quadratic extensions -------------------------------------------------------

def _charpoly_sqrt(F, delta, c):
    """Characteristic polynomial over Q of sqrt(delta) + c*y in F(sqrt(delta))."""
    n = F.degree
    xs = list(range(2 * n + 1))
    ys = []
    for x0 in xs:
        # g(y) = (x0 - c*y)^2 - delta(y), reduced mod f
        g = polys.sub(polys.mul((x0, -c), (x0, -c)), tuple(delta))
        if n == 1:
            ys.append(polys.evaluate(g, -F.poly[0]))
        else:
            ys.append(polys.resultant(F.poly, g))
    return polys.interpolate(xs, ys)


def _relative_to_power(F, delta, c):
    """Matrix whose rows express theta^k (theta = t + c*y, t^2 = delta) in the
    relative basis (y^0..y^(n-1), y^0 t..y^(n-1) t)."""
    n = F.degree
    one = elt(F, [1])
    a, b = one, elt(F, [])  # theta^k = a + b t
    ya = elt(F, [0, 1]) if n > 1 else elt(F, [-F.poly[0]])
    cy = tuple(Fraction(c) * x for x in ya)
    rows = []
    for _ in range(2 * n):
        rows.append(list(a) + list(b))
        # (a + b t)(cy + t) = a*cy + b*delta + (a + b*cy) t
        a, b = (
            tuple(x + y for x, y in zip(elt_mul(F, a, cy), elt_mul(F, b, delta))),
            tuple(x + y for x, y in zip(a, elt_mul(F, b, cy))),
        )
    return rows


def _invert(mat):
    n = len(mat)
    aug = [list(map(Fraction, mat[i])) + [Fraction(1 if j == i else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(i for i in range(col, n) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                u = aug[i][col]
                aug[i] = [x - u * y for x, y in zip(aug[i], aug[col])]
    return [r[n:] for r in aug]


def absolute_field(F: NumberField, delta) -> NumberField:
    """K = F(sqrt(delta)) as an absolute field with its maximal order.

    delta is a nonzero algebraic integer of F (power-basis coordinates).
    """
    n = F.degree
    delta = elt(F, delta)
    if not any(delta):
        raise DegenerateExtension("delta must be nonzero")
    if not is_integral(F, delta):
        raise ValueError("delta must be an algebraic integer")
    if is_square(F, delta):
        raise DegenerateExtension("delta is a square in F")
    for c in [0, 1, -1, 2, -2, 3, -3, 4, 5]:
        if n > 1 and c == 0 and not _generates(F, delta):
            continue
        cp = _charpoly_sqrt(F, delta, c)
        if polys.is_squarefree(cp):
            break
    else:
        raise ArithmeticError("no primitive element found")
    P = polys.to_int_poly(cp)
    # the order O_F[t] in theta-power coordinates
    inv = _invert(_relative_to_power(F, delta, c))
    gens, den = [], 1
    rel_rows = []
    for r in F.order_basis:
        rel_rows.append(list(r) + [Fraction(0)] * n)
        rel_rows.append([Fraction(0)] * n + list(r))
    theta_rows = [[sum(row[k] * inv[k][j] for k in range(2 * n)) for j in range(2 * n)] for row in rel_rows]
    for r in theta_rows:
        for x in r:
            den = lcm(den, x.denominator)
    gens = [[int(x * den) for x in r] for r in theta_rows]
    norm_delta = elt_norm(F, delta)
    primes = sorted(set(_prime_factors(int(norm_delta))) | {2})
    return maximal_order(P, start=(gens, den), primes=primes, check_irreducible=False)


def _generates(F, a):
    # a generates F iff its characteristic polynomial is squarefree
    return polys.is_squarefree(_charpoly_elt(F, a))


def _charpoly_elt(F, a):
    n = F.degree
    xs = list(range(n + 1))
    ys = [polys.resultant(F.poly, polys.sub((x0,), tuple(a))) for x0 in xs]
    return polys.interpolate(xs, ys)
