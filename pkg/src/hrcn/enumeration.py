"""Base-field catalog, the sets NF_m, and enumeration of CM quadratic extensions.

Extensions K = F(sqrt(delta)) with delta totally negative.  Writing
(delta) = a * b^2 with a squarefree, a divides the relative discriminant, so
N(a) <= |d_K| / d_F^2.  When h_F = 1 every such a is principal and delta can be
taken as u * alpha with alpha a generator of a and u a unit modulo squares; the
enumeration runs over products of prime generators.  Quadratic fields with
h_F > 1 use a scan over totally negative elements of bounded norm instead.
"""
import itertools
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from pathlib import Path
from typing import Dict, List, Optional

import numpy as np
from sympy import factorint, primerange

from . import ball, bounds, invariants, lvalue
from .extension import CatalogEntry, CMExtension
from .nf_core import (
    DegenerateExtension,
    absolute_field,
    elt_norm,
    fingerprint,
    from_order_coords,
    in_prime,
    is_integral,
    is_totally_negative,
    is_totally_real,
    maximal_order,
    prime_decomposition,
    rationals,
)
from .nf_core.field import ReducibleError, elt_mul, real_embeddings

log = logging.getLogger(__name__)

DEFAULT_CATALOG = Path(__file__).resolve().parents[2] / "data" / "totally_real.catalog"


class CatalogError(ValueError):
    pass


# --- catalog -------------------------------------------------------------------------

def rational_entry() -> CatalogEntry:
    return CatalogEntry(1, 1, (0, 1), 1, "1.1.1.1", (), rationals())


def _parse_entry(rec, lineno) -> CatalogEntry:
    try:
        coeffs = tuple(int(c) for c in rec["coeffs"])
        degree, disc = int(rec["degree"]), int(rec["disc"])
        h = rec.get("h")
        units = tuple(tuple(Fraction(x) for x in u) for u in rec.get("units", []))
        label = str(rec.get("label", "%d.%d.%d" % (degree, degree, disc)))
    except (KeyError, TypeError, ValueError) as exc:
        raise CatalogError("line %d: malformed record (%s)" % (lineno, exc)) from exc
    if len(coeffs) != degree + 1 or coeffs[-1] != 1:
        raise CatalogError("line %d: polynomial is not monic of degree %d" % (lineno, degree))
    try:
        F = maximal_order(coeffs)
    except ReducibleError as exc:
        raise CatalogError("line %d: %s" % (lineno, exc)) from exc
    if not is_totally_real(F):
        raise CatalogError("line %d: field is not totally real" % lineno)
    if F.disc != disc:
        raise CatalogError("line %d: discriminant %d, recomputed %d" % (lineno, disc, F.disc))
    for u in units:
        if len(u) != degree or not is_integral(F, u) or abs(elt_norm(F, u)) != 1:
            raise CatalogError("line %d: listed unit is not a unit" % lineno)
    return CatalogEntry(degree, disc, coeffs, None if h is None else int(h), label, units, F)


def load_catalog(path=None) -> List[CatalogEntry]:
    """Read and revalidate a line-delimited JSON catalog of totally real fields."""
    path = Path(path or DEFAULT_CATALOG)
    out, seen = [], {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CatalogError("line %d: %s" % (lineno, exc)) from exc
            entry = _parse_entry(rec, lineno)
            key = (entry.degree, entry.disc, fingerprint(entry.field))
            if key in seen:
                raise CatalogError("line %d: duplicate of line %d" % (lineno, seen[key]))
            seen[key] = lineno
            out.append(entry)
    return out


def nf_m(m: int, catalog, h_max: int = 16) -> Dict[int, List[CatalogEntry]]:
    """Catalog fields (plus Q) whose discriminant is within the degree caps for m."""
    sb = bounds.search_bounds(m, h_max)
    out = {}
    if sb.empty:
        return out
    out[1] = [rational_entry()]
    for e in catalog:
        if 2 <= e.degree <= sb.n_max and e.disc <= sb.caps[e.degree]:
            out.setdefault(e.degree, []).append(e)
    for n in out:
        out[n].sort(key=lambda e: (e.disc, e.label))
    return out


# --- generators of small primes ----------------------------------------------------------

def _basis_embeddings(F):
    """Matrix B with B[i, j] = j-th real embedding of the i-th order basis element."""
    if F.degree == 1:
        return np.ones((1, 1))
    r = real_embeddings(F)
    rows = []
    for b in F.order_basis:
        rows.append([sum(float(c) * x**k for k, c in enumerate(b)) for x in r])
    return np.array(rows)


def _box_vectors(n, B):
    rng = np.arange(-B, B + 1)
    grids = np.meshgrid(*([rng] * n), indexing="ij")
    v = np.stack([g.ravel() for g in grids], axis=1)
    # keep one of +-v: first nonzero coordinate positive
    nz = v != 0
    first = np.where(nz.any(axis=1), np.argmax(nz, axis=1), 0)
    lead = v[np.arange(len(v)), first]
    return v[lead > 0]


def _unit_reduced_box(F, units, norm):
    """Per-coordinate limits containing a unit multiple of every element of norm +-norm.

    Reducing the log embeddings modulo the unit lattice bounds each embedding by
    norm^(1/n) * exp(sum_j |log|sigma_i(eps_j)|| / 2).
    """
    n = F.degree
    r = np.array(real_embeddings(F))
    logs = np.zeros(n)
    for u in units:
        vals = np.array([sum(float(c) * x**k for k, c in enumerate(u)) for x in r])
        logs += np.abs(np.log(np.abs(vals))) / 2
    S = norm ** (1 / n) * np.exp(logs) * (1 + 1e-9)
    inv = np.linalg.inv(_basis_embeddings(F))  # coords = sigma @ inv
    return np.ceil(np.abs(inv).T @ S).astype(int), S


def _search_unit_box(F, units, wanted, gens, max_points=5 * 10**7):
    emb = _basis_embeddings(F)
    n = F.degree
    for P in wanted:
        if P in gens:
            continue
        lim, S = _unit_reduced_box(F, units, P.norm)
        if np.prod(2 * lim.astype(float) + 1) > max_points:
            continue
        head = [np.arange(-b, b + 1) for b in lim[1:]]
        tail = np.stack([g.ravel() for g in np.meshgrid(*head, indexing="ij")], axis=1) if n > 1 else None
        for c0 in range(0, lim[0] + 1):
            vecs = np.hstack([np.full((len(tail), 1), c0), tail])
            sig = vecs @ emb
            ok = (np.abs(sig) <= S).all(axis=1)
            norms = np.prod(sig[ok], axis=1)
            hit = vecs[ok][np.abs(np.abs(norms) - P.norm) < 1e-6 * P.norm]
            found = False
            for v in hit:
                a = from_order_coords(F, [int(x) for x in v])
                if abs(elt_norm(F, a)) == P.norm and in_prime(F, P, a):
                    gens[P] = a
                    found = True
                    break
            if found:
                break


def prime_generators(F, norm_cap: int, max_box: int = 40, units=()) -> Dict:
    """One generator (power-basis coordinates) for every prime of norm <= norm_cap.

    Requires every such prime to be principal; raises if a generator is not found.
    A small coordinate box is tried first; primes it misses are searched in the
    box that the fundamental units guarantee to contain a generator.
    """
    wanted = []
    for p in primerange(2, norm_cap + 1):
        for P in prime_decomposition(F, p):
            if P.norm <= norm_cap:
                wanted.append(P)
    if not wanted:
        return {}
    if F.degree == 1:
        return {P: (Fraction(P.p),) for P in wanted}
    emb = _basis_embeddings(F)
    n = F.degree
    gens = {}
    targets = {P.norm for P in wanted}
    B = 1
    while len(gens) < len(wanted):
        if B > max_box:
            if units:
                _search_unit_box(F, units, wanted, gens)
            missing = [(P.p, P.f) for P in wanted if P not in gens]
            if missing:
                raise ArithmeticError("no generator found for primes %s of %s" % (missing, F))
            break
        vecs = _box_vectors(n, B)
        if B > 1:
            vecs = vecs[np.abs(vecs).max(axis=1) == B]
        norms = np.prod(vecs @ emb, axis=1)
        rounded = np.rint(np.abs(norms))
        mask = np.isin(rounded, list(targets)) & (np.abs(np.abs(norms) - rounded) < 1e-6 * np.maximum(1, rounded))
        cand = vecs[mask]
        cand = cand[np.argsort(np.abs(cand).sum(axis=1), kind="stable")]
        for v in cand:
            a = from_order_coords(F, [int(x) for x in v])
            N = abs(elt_norm(F, a))
            for P in wanted:
                if P in gens or P.norm != N:
                    continue
                if in_prime(F, P, a):
                    gens[P] = a
                    break
        B += 1
    return gens


def unit_classes(entry: CatalogEntry):
    """Representatives of the units modulo squares: -1 and the listed fundamental units."""
    F = entry.field
    one = tuple(Fraction(int(i == 0)) for i in range(F.degree))
    gens = [tuple(-x for x in one)] + [tuple(u) for u in entry.units]
    out = []
    for bits in itertools.product((0, 1), repeat=len(gens)):
        u = one
        for b, g in zip(bits, gens):
            if b:
                u = elt_mul(F, u, g) if F.degree > 1 else (u[0] * g[0],)
        out.append(u)
    return out


def _squarefree_products(items, cap):
    """All (product of norms, subset) over subsets of items with product <= cap."""
    items = sorted(items, key=lambda t: t[0])
    out = []

    def rec(start, norm, chosen):
        out.append((norm, list(chosen)))
        for i in range(start, len(items)):
            nn = norm * items[i][0]
            if nn > cap:
                break
            chosen.append(items[i][1])
            rec(i + 1, nn, chosen)
            chosen.pop()

    rec(0, 1, [])
    return out


def _mul(F, a, b):
    return elt_mul(F, a, b) if F.degree > 1 else (a[0] * b[0],)


def _deltas_principal(entry, norm_cap):
    """Totally negative u * alpha, alpha over generators of squarefree ideals."""
    F = entry.field
    gens = prime_generators(F, norm_cap, units=entry.units)
    items = [(P.norm, a) for P, a in gens.items()]
    units = unit_classes(entry)
    if entry.degree > 1 and len(units) != 2**entry.degree:
        raise CatalogError("%s: need %d unit generators" % (entry.label, entry.degree - 1))
    one = tuple(Fraction(int(i == 0)) for i in range(F.degree))
    for _norm, subset in _squarefree_products(items, norm_cap):
        alpha = one
        for a in subset:
            alpha = _mul(F, alpha, a)
        for u in units:
            d = _mul(F, u, alpha)
            if is_totally_negative(F, d):
                yield d


def _deltas_hyperbolic(entry, norm_cap, scale):
    """Totally negative delta in a quadratic field, up to unit squares, with
    |N(delta)| <= 2^n * norm_cap * M^2 * scale (M the Minkowski bound)."""
    F = entry.field
    if F.degree != 2:
        raise NotImplementedError("scan for h_F > 1 is implemented for quadratic F only")
    emb = _basis_embeddings(F)  # 2 x 2
    mink = F.disc / 4.0  # M^2 with M = sqrt(d)/2
    bound = 4 * norm_cap * mink * scale
    u = entry.units[0]
    r = real_embeddings(F)
    e1 = abs(sum(float(c) * r[0] ** k for k, c in enumerate(u)))
    e1 = max(e1, 1 / e1)
    # delta -> delta * eps^2 multiplies |s1/s2| by e1^4, so [e1^-2, e1^2) is a
    # fundamental domain, and there |s_i| <= e1 * sqrt(bound)
    ratio_min, ratio_max = e1**-2, e1**2
    smax = e1 * np.sqrt(bound)
    # lattice points x*w0 + y*w1 with both embeddings in [-smax, 0)
    inv = np.linalg.inv(emb.T)
    corners = np.array([[a, b] for a in (-smax, 0) for b in (-smax, 0)])
    coords = corners @ inv.T
    lo = np.floor(coords.min(axis=0)).astype(int)
    hi = np.ceil(coords.max(axis=0)).astype(int)
    seen = set()
    for x in range(lo[0], hi[0] + 1):
        ys = np.arange(lo[1], hi[1] + 1)
        s = np.outer(np.array([x] * len(ys)), emb[0]) + np.outer(ys, emb[1])
        ok = (s[:, 0] < 0) & (s[:, 1] < 0)
        prodn = s[:, 0] * s[:, 1]
        ratio = s[:, 0] / np.where(s[:, 1] == 0, 1, s[:, 1])
        ok &= (prodn <= bound * (1 + 1e-9)) & (ratio >= ratio_min * (1 - 1e-9)) & (ratio < ratio_max * (1 + 1e-9))
        for y in ys[ok]:
            d = from_order_coords(F, [x, int(y)])
            N = int(elt_norm(F, d))
            odd = prod(p for p, e in factorint(N).items() if e % 2 and p != 2) if N > 1 else 1
            if odd > norm_cap * scale:
                continue
            d = _strip_rational_squares(F, d)
            if d in seen:
                continue
            seen.add(d)
            if is_totally_negative(F, d):
                yield d


def _strip_rational_squares(F, d):
    g = 0
    c = [int(x) for x in d] if all(Fraction(x).denominator == 1 for x in d) else None
    if c is None:
        return tuple(d)
    for x in c:
        g = gcd(g, x)
    sq = 1
    for p, e in factorint(g).items() if g > 1 else []:
        sq *= p ** (e // 2)
    out = tuple(Fraction(x, sq * sq) for x in c)
    return out if is_integral(F, out) else tuple(d)


def cm_extensions(entry: CatalogEntry, dk_cap: int, scale: int = 1) -> List[CMExtension]:
    """All totally imaginary quadratic K/F with |d_K| <= dk_cap, up to isomorphism of K."""
    F = entry.field
    if dk_cap < entry.disc**2:
        return []
    norm_cap = (dk_cap // entry.disc**2) * scale
    if entry.h == 1:
        deltas = _deltas_principal(entry, norm_cap)
    else:
        deltas = _deltas_hyperbolic(entry, dk_cap // entry.disc**2, scale)
    found = {}
    for d in deltas:
        try:
            K = absolute_field(F, d)
        except DegenerateExtension:
            continue
        if abs(K.disc) > dk_cap:
            continue
        if K.signature[0] != 0:
            raise ArithmeticError("extension by a totally negative element is not totally imaginary")
        key = (K.disc, fingerprint(K))
        ext = CMExtension(entry, tuple(d), K, abs(K.disc) // entry.disc**2)
        old = found.get(key)
        if old is None or _delta_key(ext) < _delta_key(old):
            found[key] = ext
    return sorted(found.values(), key=lambda e: (e.d_K, _delta_key(e)))


def _delta_key(ext):
    return (sum(abs(x) for x in ext.delta), tuple(ext.delta))


def all_extensions(m: int, catalog, h_max: int = 16, scale: int = 1) -> List[CMExtension]:
    """Candidate extensions for m over every F in NF_m, sorted by (d_F, d_K)."""
    out = []
    for n, entries in sorted(nf_m(m, catalog, h_max).items()):
        for e in entries:
            cap = bounds.dk_bound(e.disc, n, m, h_max)
            out.extend(cm_extensions(e, cap, scale))
    return out


def extensions_by_m(ms, catalog, h_max: int = 16, scale: int = 1) -> Dict[int, List[CMExtension]]:
    """Candidate extensions for several m, enumerated once at the smallest m.

    Both the d_F caps and the d_K caps shrink as m grows, so the extensions for
    larger m are a filter of those for the smallest one.
    """
    ms = sorted(ms)
    live = [m for m in ms if not bounds.search_bounds(m, h_max).empty]
    out = {m: [] for m in ms}
    if not live:
        return out
    base = all_extensions(live[0], catalog, h_max, scale)
    for m in live:
        sb = bounds.search_bounds(m, h_max)
        caps = {}
        for ext in base:
            n = ext.base.degree
            if n > sb.n_max or ext.d_F > sb.caps[n]:
                continue
            key = (ext.d_F, n)
            if key not in caps:
                caps[key] = bounds.dk_bound(ext.d_F, n, m, h_max)
            if ext.d_K <= caps[key]:
                out[m].append(ext)
    return out


def _survey_one(args):
    ext, m, cutoff, wm_bound, prec = args
    ball.set_precision(prec)
    return invariants.higher_relative_class_number(ext, m, cutoff, wm_bound)


def survey_rows(extensions, m, euler_cutoff=None, wm_bound=invariants.DEFAULT_WM_SAMPLE_BOUND, jobs=1):
    """Higher relative class numbers for a list of extensions (in input order)."""
    cutoff = euler_cutoff or lvalue.default_euler_cutoff(m)
    work = [(e, m, cutoff, wm_bound, ball.iv.prec) for e in extensions]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_survey_one, work, chunksize=1))
    return [_survey_one(w) for w in work]


def result_key(r):
    return (r.m, r.h_low, r.extension.d_F, r.extension.d_K, r.h_high)


def survey(m, h_max: int = 16, catalog=None, euler_cutoff=None,
           wm_bound=invariants.DEFAULT_WM_SAMPLE_BOUND, jobs=1, scale=1, extensions=None):
    """All results for m with lower candidate <= 2*h_max, sorted by (m, h_low, d_F, d_K)."""
    if extensions is None:
        extensions = extensions_by_m([m], catalog, h_max, scale)[m]
    rows = survey_rows(extensions, m, euler_cutoff, wm_bound, jobs)
    return sorted((r for r in rows if r.h_low <= 2 * h_max), key=result_key)
