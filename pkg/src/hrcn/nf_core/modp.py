"""Polynomial arithmetic and factorization over the field with p elements.

Polynomials are lists of residues in ascending degree.  ``factor`` is a
squarefree / distinct-degree / equal-degree (Cantor-Zassenhaus) split with a
fixed seed; ``factor_fast`` hands the same job to FLINT and is what the Euler
products use.  The two are cross-checked in the test suite.
"""
import random

import flint


def norm(f, p):
    f = [c % p for c in f]
    while f and f[-1] == 0:
        f.pop()
    return f


def monic(f, p):
    f = norm(f, p)
    if not f:
        return f
    inv = pow(f[-1], -1, p)
    return [c * inv % p for c in f]


def add(f, g, p):
    n = max(len(f), len(g))
    return norm([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)], p)


def sub(f, g, p):
    n = max(len(f), len(g))
    return norm([(f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0) for i in range(n)], p)


def mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return norm(out, p)


def divmod_p(f, g, p):
    f, g = norm(f, p), norm(g, p)
    if not g:
        raise ZeroDivisionError
    dg = len(g) - 1
    inv = pow(g[-1], -1, p)
    rem = list(f)
    if len(rem) - 1 < dg:
        return [], rem
    quo = [0] * (len(rem) - dg)
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k] * inv % p
        if c:
            quo[k - dg] = c
            for j in range(dg + 1):
                rem[k - dg + j] = (rem[k - dg + j] - c * g[j]) % p
    return norm(quo, p), norm(rem[:dg], p)


def rem(f, g, p):
    return divmod_p(f, g, p)[1]


def gcd(f, g, p):
    f, g = norm(f, p), norm(g, p)
    while g:
        f, g = g, rem(f, g, p)
    return monic(f, p)


def derivative(f, p):
    return norm([i * f[i] for i in range(1, len(f))], p)


def powmod(f, e, g, p):
    result, base = [1], rem(f, g, p)
    while e:
        if e & 1:
            result = rem(mul(result, base, p), g, p)
        base = rem(mul(base, base, p), g, p)
        e >>= 1
    return result


def _pth_root(f, p):
    # f has only exponents divisible by p; in F_p the coefficient map is trivial
    return [f[i] for i in range(0, len(f), p)]


def squarefree_decomposition(f, p):
    """Return [(g, e)] with f = lc * prod g^e, each g squarefree and monic."""
    f = monic(f, p)
    out = []
    if len(f) <= 1:
        return out
    df = derivative(f, p)
    if not df:
        for g, e in squarefree_decomposition(_pth_root(f, p), p):
            out.append((g, e * p))
        return out
    c = gcd(f, df, p)
    w = divmod_p(f, c, p)[0]
    i = 1
    while len(w) > 1:
        y = gcd(w, c, p)
        z = divmod_p(w, y, p)[0]
        if len(z) > 1:
            out.append((monic(z, p), i))
        i += 1
        w = y
        c = divmod_p(c, y, p)[0]
    if len(c) > 1:
        for g, e in squarefree_decomposition(_pth_root(c, p), p):
            out.append((g, e * p))
    return out


def distinct_degree(f, p):
    """DDF of a monic squarefree f: [(product of degree-d factors, d)]."""
    out = []
    h = [0, 1]
    d = 0
    f = monic(f, p)
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = powmod(h, p, f, p)
        g = gcd(f, sub(h, [0, 1], p), p)
        if len(g) > 1:
            out.append((g, d))
            f = divmod_p(f, g, p)[0]
            h = rem(h, f, p)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def equal_degree(f, d, p, rng):
    """Split a monic squarefree f whose irreducible factors all have degree d."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = norm([rng.randrange(p) for _ in range(n)], p)
        if len(a) <= 1:
            continue
        if p == 2:
            # trace map a + a^2 + ... + a^(2^(d-1)) of GF(2^d)
            t, cur = list(a), list(a)
            for _ in range(d - 1):
                cur = rem(mul(cur, cur, p), f, p)
                t = add(t, cur, p)
            b = t
        else:
            b = sub(powmod(a, (p**d - 1) // 2, f, p), [1], p)
        g = gcd(f, b, p)
        if 1 < len(g) < len(f):
            h = divmod_p(f, g, p)[0]
            return equal_degree(g, d, p, rng) + equal_degree(h, d, p, rng)


def factor(f, p, seed=0):
    """Complete factorization of f mod p as [(monic irreducible, multiplicity)],
    sorted by (degree, coefficients)."""
    rng = random.Random(seed)
    out = []
    for g, e in squarefree_decomposition(f, p):
        for part, d in distinct_degree(g, p):
            for irr in equal_degree(part, d, p, rng):
                out.append((tuple(irr), e))
    out.sort(key=lambda t: (len(t[0]), t[0]))
    return out


def factor_fast(f, p):
    """Same contract as ``factor`` using FLINT's nmod_poly."""
    _, facs = flint.nmod_poly([int(c) % p for c in f], p).factor()
    out = [(tuple(int(c) for c in g.coeffs()), e) for g, e in facs]
    out.sort(key=lambda t: (len(t[0]), t[0]))
    return out


def degree_pattern(f, p):
    """Sorted list of (degree, multiplicity) of the irreducible factors of f mod p."""
    _, facs = flint.nmod_poly([int(c) % p for c in f], p).factor()
    return sorted((g.degree(), e) for g, e in facs)


def charpoly(mat, p):
    """Characteristic polynomial det(xI - M) over F_p (Hessenberg reduction)."""
    n = len(mat)
    a = [[x % p for x in row] for row in mat]
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if a[i][m - 1]), None)
        if piv is None:
            continue
        if piv != m:
            a[piv], a[m] = a[m], a[piv]
            for row in a:
                row[piv], row[m] = row[m], row[piv]
        inv = pow(a[m][m - 1], -1, p)
        for i in range(m + 1, n):
            u = a[i][m - 1] * inv % p
            if u:
                for j in range(n):
                    a[i][j] = (a[i][j] - u * a[m][j]) % p
                for row in a:
                    row[m] = (row[m] + u * row[i]) % p
    polys = [[1]]
    for k in range(n):
        nxt = mul([-a[k][k] % p, 1], polys[k], p)
        t = 1
        for i in range(k - 1, -1, -1):
            t = t * a[i + 1][i] % p
            nxt = sub(nxt, [c * t * a[i][k] % p for c in polys[i]], p)
        polys.append(nxt)
    return polys[n]


def nullspace(rows, p):
    """Basis of {x : x * M = 0} for an r x c matrix M over F_p (left kernel)."""
    r = len(rows)
    if r == 0:
        return []
    c = len(rows[0])
    # augment with identity to track row combinations
    aug = [[x % p for x in rows[i]] + [1 if j == i else 0 for j in range(r)] for i in range(r)]
    lead = 0
    for col in range(c):
        piv = next((i for i in range(lead, r) if aug[i][col]), None)
        if piv is None:
            continue
        aug[lead], aug[piv] = aug[piv], aug[lead]
        inv = pow(aug[lead][col], -1, p)
        aug[lead] = [x * inv % p for x in aug[lead]]
        for i in range(r):
            if i != lead and aug[i][col]:
                u = aug[i][col]
                aug[i] = [(x - u * y) % p for x, y in zip(aug[i], aug[lead])]
        lead += 1
        if lead == r:
            break
    return [row[c:] for row in aug[lead:]]


def rank(rows, p):
    return len(rows) - len(nullspace(rows, p)) if rows else 0
