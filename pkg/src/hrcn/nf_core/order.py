"""Orders in Q[x]/(f) and their p-maximalization.

An order is stored as ``(rows, den)``: ``rows`` is an n x n integer matrix in
Hermite normal form, row i holding the power-basis coordinates of the i-th
basis element scaled by ``den``.  Rows are upper triangular, so coordinates
with respect to the order are recovered by back substitution.
"""
from fractions import Fraction
from math import gcd

import flint

from . import modp, polys


def hnf(gens, n):
    """HNF (upper triangular, n x n) of the lattice spanned by integer rows."""
    h = flint.fmpz_mat([list(map(int, g)) for g in gens]).hnf()
    rows = [[int(h[i, j]) for j in range(n)] for i in range(h.nrows())]
    rows = [r for r in rows if any(r)]
    if len(rows) != n:
        raise ValueError("generators do not span a full-rank lattice")
    return rows


def normalize(rows, den, n):
    rows = hnf(rows, n)
    g = den
    for r in rows:
        for x in r:
            g = gcd(g, x)
    if g > 1:
        rows = [[x // g for x in r] for r in rows]
        den //= g
    return tuple(tuple(r) for r in rows), den


def solve_upper(rows, v):
    """x with x * rows = v for an upper-triangular invertible integer matrix."""
    n = len(rows)
    x = [Fraction(0)] * n
    for j in range(n):
        acc = Fraction(v[j])
        for i in range(j):
            if x[i]:
                acc -= x[i] * rows[i][j]
        x[j] = acc / rows[j][j]
    return x


def index_of(rows, den):
    """[O : Z[theta]] as a Fraction (an integer for orders containing Z[theta])."""
    det = 1
    for i, r in enumerate(rows):
        det *= r[i]
    return Fraction(den ** len(rows), det)


class OrderArithmetic:
    """Multiplication table of an order, for repeated use."""

    def __init__(self, f, rows, den):
        self.f = tuple(f)
        self.n = len(f) - 1
        self.rows = rows
        self.den = den
        self.table = self._table()

    def coords(self, power_coords_times_den2):
        # power_coords_times_den2 / den^2 expressed in the order basis
        x = solve_upper(self.rows, [Fraction(c, self.den) for c in power_coords_times_den2])
        out = []
        for c in x:
            if c.denominator != 1:
                raise ValueError("product left the order; basis is not a ring")
            out.append(int(c))
        return out

    def _table(self):
        n, f = self.n, self.f
        tab = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                prod = polys.rem_monic(polys.mul(self.rows[i], self.rows[j]), f)
                prod = list(prod) + [0] * (n - len(prod))
                tab[i][j] = tab[j][i] = self.coords(prod)
        return tab

    def mul(self, a, b, p=None):
        n = self.n
        out = [0] * n
        for i in range(n):
            if a[i]:
                for j in range(n):
                    if b[j]:
                        c = a[i] * b[j]
                        t = self.table[i][j]
                        for k in range(n):
                            out[k] += c * t[k]
        if p is not None:
            out = [x % p for x in out]
        return out

    def pow_mod(self, a, e, p):
        result = list(self.one())
        base = [x % p for x in a]
        while e:
            if e & 1:
                result = self.mul(result, base, p)
            base = self.mul(base, base, p)
            e >>= 1
        return result

    def one(self):
        c = self._one if hasattr(self, "_one") else None
        if c is None:
            x = solve_upper(self.rows, [self.den] + [0] * (self.n - 1))
            if any(v.denominator != 1 for v in x):
                raise ValueError("lattice does not contain 1")
            c = self._one = tuple(int(v) for v in x)
        return c

    def mult_matrix(self, a, p=None):
        """Matrix of x -> a*x on the order basis (row i = a * w_i)."""
        n = self.n
        rows = []
        for i in range(n):
            e = [0] * n
            e[i] = 1
            rows.append(self.mul(a, e, p))
        return rows


def dedekind_test(f, p):
    """Dedekind criterion for Z[theta] at p.

    Returns None when Z[theta] is p-maximal, else the polynomial U with
    Z[theta] + U(theta)/p Z[theta] strictly larger.
    """
    facs = modp.factor_fast(f, p)
    g = [1]
    for t, _ in facs:
        g = modp.mul(g, list(t), p)
    h = modp.divmod_p(list(f), g, p)[0]
    # F = (f - g*h)/p computed with integer lifts
    gh = polys.mul(tuple(g), tuple(h))
    diff = polys.sub(tuple(f), gh)
    big_f = [c // p for c in diff]
    assert all(c % p == 0 for c in diff)
    z = modp.gcd(modp.gcd(big_f, g, p), h, p)
    if len(z) <= 1:
        return None
    u = modp.divmod_p(list(f), z, p)[0]
    return tuple(u)


def dedekind_enlarge(f, p, u, rows=None, den=1):
    """The order (rows/den) + U(theta)/p Z[theta]; rows default to Z[theta]."""
    n = len(f) - 1
    if rows is None:
        rows, den = power_order(n)
    gens = [[p * x for x in r] for r in rows]
    cur = tuple(u)
    for _ in range(n):
        r = polys.rem_monic(cur, f)
        gens.append([den * x for x in r] + [0] * (n - len(r)))
        cur = polys.mul(cur, (0, 1))
    return normalize(gens, p * den, n)


def _radical(arith, p):
    """HNF rows (order coordinates) of the p-radical of the order."""
    n = arith.n
    q = p
    while q < n:
        q *= p
    images = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        images.append(arith.pow_mod(e, q, p))
    kernel = modp.nullspace(images, p)
    gens = [list(v) for v in kernel] + [[p if i == j else 0 for j in range(n)] for i in range(n)]
    return hnf(gens, n), len(kernel)


def round2_step(f, rows, den, p, arith=None):
    """One enlargement step at p; returns (rows, den, enlarged?)."""
    n = len(f) - 1
    arith = arith or OrderArithmetic(f, rows, den)
    rad, _ = _radical(arith, p)
    # images of rad basis under multiplication by each order basis element
    big = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        row = []
        for r in rad:
            prod = arith.mul(e, r)
            y = solve_upper(rad, prod)
            for c in y:
                if c.denominator != 1:
                    raise ValueError("radical is not an ideal")
                row.append(int(c) % p)
        big.append(row)
    kernel = modp.nullspace(big, p)
    if not kernel:
        return rows, den, False
    gens = []
    for v in kernel:
        gens.append([sum(v[i] * rows[i][j] for i in range(n)) for j in range(n)])
    for r in rows:
        gens.append([p * x for x in r])
    new_rows, new_den = normalize(gens, p * den, n)
    return new_rows, new_den, True


def p_maximal(f, rows, den, p, use_dedekind=False):
    """Enlarge the order until it is p-maximal."""
    n = len(f) - 1
    if use_dedekind:
        u = dedekind_test(f, p)
        if u is None:
            return rows, den
        rows, den = dedekind_enlarge(f, p, u, rows, den)
    while True:
        rows, den, grew = round2_step(f, rows, den, p)
        if not grew:
            return rows, den


def power_order(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), 1
