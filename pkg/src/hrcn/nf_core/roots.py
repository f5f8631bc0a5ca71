"""Real root isolation with exact rational arithmetic (Sturm sequences)."""
from fractions import Fraction

from . import polys

MIN_WIDTH = Fraction(1, 2**64)


def sturm_sequence(f):
    seq = [polys.trim(f), polys.derivative(f)]
    while polys.degree(seq[-1]) > 0:
        _, r = polys.divmod_poly(seq[-2], seq[-1])
        if not r:
            break
        seq.append(polys.scale(r, -1))
    return seq


def _sign_changes(values):
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _changes_at(seq, x):
    return _sign_changes([polys.evaluate(s, x) for s in seq])


def _changes_at_infinity(seq, positive):
    vals = []
    for s in seq:
        d = len(s) - 1
        lc = s[-1]
        vals.append(lc if positive or d % 2 == 0 else -lc)
    return _sign_changes(vals)


def count_real_roots(f):
    seq = sturm_sequence(f)
    return _changes_at_infinity(seq, False) - _changes_at_infinity(seq, True)


def cauchy_bound(f):
    lc = abs(Fraction(f[-1]))
    return 1 + max(abs(Fraction(c)) for c in f[:-1]) / lc


def isolate_real_roots(f):
    """Disjoint rational intervals (a, b], one per real root of squarefree f, ascending."""
    f = polys.trim(f)
    seq = sturm_sequence(f)
    bound = cauchy_bound(f)
    out = []
    stack = [(-bound, bound)]
    while stack:
        a, b = stack.pop()
        k = _changes_at(seq, a) - _changes_at(seq, b)
        if k == 0:
            continue
        if k == 1:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        stack.append((a, mid))
        stack.append((mid, b))
    out.sort()
    return out


def refine(f, interval):
    """Halve an isolating interval (a, b] of a simple root, keeping the root."""
    a, b = interval
    fb = polys.evaluate(f, b)
    if fb == 0:
        return (b, b)
    mid = (a + b) / 2
    fm = polys.evaluate(f, mid)
    if fm == 0:
        return (mid, mid)
    if (fm > 0) != (fb > 0):
        return (mid, b)
    return (a, mid)


def _interval_eval(g, a, b):
    lo = hi = Fraction(0)
    for c in reversed(g):
        cands = (lo * a, lo * b, hi * a, hi * b)
        lo, hi = min(cands) + c, max(cands) + c
    return lo, hi


def sign_at_root(f, interval, g, max_bits=512):
    """Sign (+1 or -1) of g at the unique root of f inside ``interval``.

    The interval is refined until g's enclosure excludes zero; past 2^-64 width
    refinement continues only for a nonvanishing g (we stop at 2^-max_bits).
    """
    a, b = interval
    floor = Fraction(1, 2**max_bits)
    while True:
        lo, hi = _interval_eval(g, a, b)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        if a == b:
            return 0
        if b - a < floor:
            raise ArithmeticError("could not separate g from zero at a root of f")
        a, b = refine(f, (a, b))


def real_root_signs(f, g):
    """Signs of g at every real root of f, ordered by root."""
    return [sign_at_root(f, iv, g) for iv in isolate_real_roots(f)]
