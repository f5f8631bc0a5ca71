"""Dense univariate polynomials with exact coefficients.

Polynomials are tuples of coefficients in ascending degree; the zero
polynomial is ``()``.  Coefficients may be ``int`` or ``Fraction``.
"""
from fractions import Fraction
from math import gcd
from typing import Sequence, Tuple

IntPoly = Tuple[int, ...]


def trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return tuple(f)


def degree(f):
    return len(trim(f)) - 1


def add(f, g):
    n = max(len(f), len(g))
    return trim((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n))


def sub(f, g):
    n = max(len(f), len(g))
    return trim((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0) for i in range(n))


def scale(f, c):
    return trim(c * a for a in f)


def mul(f, g):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim(out)


def derivative(f):
    return trim(i * f[i] for i in range(1, len(f)))


def evaluate(f, x):
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def divmod_poly(f, g):
    """Quotient and remainder over the rationals (exact)."""
    f, g = trim(f), trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in f]
    dg, lc = len(g) - 1, Fraction(g[-1])
    if len(rem) - 1 < dg:
        return (), trim(rem)
    quo = [Fraction(0)] * (len(rem) - dg)
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k] / lc
        if c:
            quo[k - dg] = c
            for j in range(dg + 1):
                rem[k - dg + j] -= c * g[j]
    return trim(quo), trim(rem[:dg])


def rem_monic(f, g):
    """Remainder of f modulo a monic g; stays integral for integral f."""
    f = list(f)
    dg = len(g) - 1
    for k in range(len(f) - 1, dg - 1, -1):
        c = f[k]
        if c:
            for j in range(dg + 1):
                f[k - dg + j] -= c * g[j]
    return trim(f[:dg])


def content(f):
    c = 0
    for a in f:
        c = gcd(c, int(a))
    return c


def resultant(f, g):
    """Res(f, g) by the Euclidean recurrence over the rationals."""
    f, g = trim(f), trim(g)
    if not f or not g:
        return 0
    df, dg = len(f) - 1, len(g) - 1
    if dg == 0:
        return Fraction(g[0]) ** df
    if df == 0:
        return Fraction(f[0]) ** dg
    sign = 1
    if df < dg:
        f, g, df, dg = g, f, dg, df
        sign = (-1) ** (df * dg)
    res = Fraction(sign)
    while dg > 0:
        _, r = divmod_poly(f, g)
        if not r:
            return 0
        dr = len(r) - 1
        res *= (-1) ** (df * dg) * Fraction(g[-1]) ** (df - dr)
        f, g, df, dg = g, r, dg, dr
    return res * Fraction(g[0]) ** df


def poly_disc(f: Sequence[int]) -> int:
    """Discriminant of a monic integer polynomial; zero iff f has a repeated root."""
    f = trim(f)
    n = len(f) - 1
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    if n == 1:
        return 1
    r = resultant(f, derivative(f)) / f[-1]
    r *= (-1) ** (n * (n - 1) // 2)
    if r.denominator != 1:
        raise ValueError("non-integral discriminant; polynomial not integral")
    return int(r)


def gcd_poly(f, g):
    """Monic gcd over the rationals."""
    f, g = trim(f), trim(g)
    while g:
        _, r = divmod_poly(f, g)
        f, g = g, r
    if not f:
        return ()
    lc = Fraction(f[-1])
    return tuple(Fraction(c) / lc for c in f)


def is_squarefree(f):
    return degree(gcd_poly(f, derivative(f))) == 0


def interpolate(xs, ys):
    """Lagrange interpolation through (xs[i], ys[i]) over the rationals."""
    out = ()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if not yi:
            continue
        basis, denom = (Fraction(1),), Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = mul(basis, (-xj, 1))
                denom *= xi - xj
        out = add(out, scale(basis, Fraction(yi) / denom))
    return out


def to_int_poly(f) -> IntPoly:
    out = []
    for c in trim(f):
        c = Fraction(c)
        if c.denominator != 1:
            raise ValueError("polynomial has non-integral coefficient %s" % c)
        out.append(int(c))
    return tuple(out)


def is_irreducible(f) -> bool:
    """Irreducibility over Q (Zassenhaus/van Hoeij via FLINT)."""
    import flint

    f = trim(f)
    if len(f) <= 2:
        return len(f) == 2
    _, factors = flint.fmpz_poly([int(c) for c in f]).factor()
    return len(factors) == 1 and factors[0][1] == 1


def format_poly(f, var="x"):
    terms = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else "%s^%d" % (var, i))
        if mono and c == 1:
            s = mono
        elif mono and c == -1:
            s = "-" + mono
        else:
            s = str(c) + ("*" + mono if mono else "")
        terms.append(s)
    if not terms:
        return "0"
    return " + ".join(terms).replace("+ -", "- ")
