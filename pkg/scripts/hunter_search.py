"""Totally real Hunter search for small degree (dev tooling, feeds build_catalog.py).

Coefficients are chosen top-down; at each stage the relevant derivative of the
candidate polynomial must stay real-rooted, which confines the next coefficient
to an interval read off from the critical values.
"""
import math
import sys
from math import factorial

import numpy as np

HERMITE = {1: 1.0, 2: (4 / 3) ** 0.5, 3: 2 ** (1 / 3), 4: 2 ** 0.5, 5: 8 ** (1 / 5),
           6: (64 / 3) ** (1 / 6), 7: 64 ** (1 / 7)}
EPS = 1e-7


def _eval(coeffs, x):
    acc = 0.0
    for c in coeffs:
        acc = acc * x + c
    return acc


def _deriv_coeffs(c, n, k):
    # (n-k)-th derivative of x^n + c1 x^{n-1} + ... restricted to c[0..k]
    return [c[j] * factorial(n - j) / factorial(k - j) for j in range(k + 1)]


def real_rooted_polys(n, t2_max, a1):
    """Yield coefficient lists [1, c1, ..., cn] of real-rooted polys with
    trace a1 and sum of squared roots <= t2_max."""
    bound = math.sqrt(t2_max) + EPS
    c = [1, -a1] + [0] * (n - 1)

    def rec(k):
        prev = _deriv_coeffs(c, n, k - 1)
        crit = np.roots(prev) if k - 1 >= 1 else np.array([])
        if len(crit) and np.max(np.abs(crit.imag)) > 1e-6:
            return
        crit = np.sort(crit.real)
        scale = factorial(n - k)
        c[k] = 0
        h = _deriv_coeffs(c, n, k)
        lo, hi = -math.inf, math.inf
        for i, beta in enumerate(crit, start=1):
            v = -_eval(h, beta)
            if (k - i) % 2 == 0:
                lo = max(lo, v)
            else:
                hi = min(hi, v)
        lo = max(lo, -_eval(h, bound))
        v = -_eval(h, -bound)
        if k % 2 == 0:
            lo = max(lo, v)
        else:
            hi = min(hi, v)
        if k == 2:
            lo = max(lo, (a1 * a1 - t2_max) / 2 * scale)
        tol = EPS * (1 + abs(lo) + abs(hi))
        lo_i = math.ceil(lo / scale - tol)
        hi_i = math.floor(hi / scale + tol)
        for ck in range(lo_i, hi_i + 1):
            if k == n and ck == 0:
                continue
            c[k] = ck
            if k == n:
                yield list(c)
            else:
                yield from rec(k + 1)

    yield from rec(2)


def hunter_candidates(n, disc_cap):
    gamma = HERMITE[n - 1]
    for a1 in range(0, n // 2 + 1):
        t2 = a1 * a1 / n + gamma * (disc_cap / n) ** (1 / (n - 1))
        yield from real_rooted_polys(n, t2, a1)


if __name__ == "__main__":
    n, cap = int(sys.argv[1]), int(sys.argv[2])
    count = sum(1 for _ in hunter_candidates(n, cap))
    print(n, cap, count)
