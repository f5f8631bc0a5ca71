"""Regenerate data/totally_real.catalog.

Needs the ``cypari`` wheel (self-contained PARI/GP); the library itself never
imports it.  Fields come from PARI's ``nflist`` (degrees 3, 4 and imprimitive
sextics) merged with the Hunter search in ``hunter_search.py`` (degrees 3, 5, 6),
then each field is reduced with ``polredabs`` and its class number certified.
"""
import argparse
import json
import sys
from pathlib import Path

import cypari

sys.path.insert(0, str(Path(__file__).resolve().parent))
from hunter_search import hunter_candidates  # noqa: E402

pari = cypari.pari
pari.allocatemem(2 * 10**9)

CAPS = {2: 216, 3: 1589, 4: 11684, 5: 85899, 6: 631505}
NFLIST = {
    3: ['"C3"', '"S3"'],
    4: ['"C4"', '"V4"', '"D4"', '"A4"', '"S4"'],
    6: ["[6,%d]" % k for k in range(1, 12)] + ["[6,13]"],
}


def is_fundamental(d):
    if d % 4 == 1:
        return all(d % (q * q) for q in range(3, int(d**0.5) + 1, 2))
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and all(m % (q * q) for q in range(2, int(m**0.5) + 1))
    return False


def quadratic_polys(cap):
    for d in range(5, cap + 1):
        if is_fundamental(d):
            yield pari("x^2 - x - %d" % ((d - 1) // 4)) if d % 4 == 1 else pari("x^2 - %d" % (d // 4))


def candidate_polys(n, cap):
    if n == 2:
        yield from quadratic_polys(cap)
        return
    for group in NFLIST.get(n, []):
        yield from pari("nflist(%s,[1,%d],0)" % (group, cap))
    if n in (3, 5, 6):
        for c in hunter_candidates(n, cap):
            yield pari.Pol(c)


def coeffs_ascending(poly, n):
    return [str(pari.polcoef(poly, i)) for i in range(n)]


def field_record(poly, n, index):
    bnf = pari.bnfinit(poly, 1)
    if int(pari.bnfcertify(bnf)) != 1:
        raise RuntimeError("class group not certified for %s" % poly)
    disc = int(bnf.nf_get_disc() if hasattr(bnf, "nf_get_disc") else pari("(b)->b.disc")(bnf))
    units = [coeffs_ascending(pari.lift(u), n) for u in pari("(b)->b.fu")(bnf)]
    return {
        "degree": n,
        "disc": disc,
        "coeffs": [int(pari.polcoef(poly, i)) for i in range(n + 1)],
        "h": int(pari("(b)->b.no")(bnf)),
        "units": units,
        "label": "%d.%d.%d.%d" % (n, n, disc, index),
    }


def build(degrees):
    records = []
    for n in degrees:
        cap = CAPS[n]
        reduced = {}
        for f in candidate_polys(n, cap):
            if not pari.polisirreducible(f) or int(pari.polsturm(f)) != n:
                continue
            if int(pari.nfdisc(f)) > cap:
                continue
            g = pari.polredabs(f)
            reduced[str(g)] = g
        fields = sorted(reduced.values(), key=lambda g: (int(pari.nfdisc(g)), str(g)))
        per_disc = {}
        for g in fields:
            d = int(pari.nfdisc(g))
            per_disc[d] = per_disc.get(d, 0) + 1
            records.append(field_record(g, n, per_disc[d]))
        print("degree %d: %d fields" % (n, len(fields)), file=sys.stderr)
    return records


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(Path(__file__).resolve().parents[1] / "data" / "totally_real.catalog"))
    args = ap.parse_args()
    records = build([2, 3, 4, 5, 6])
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write("# Totally real fields of degree 2..6 with d_F up to the m=3, h<=16 caps\n")
        fh.write("# (216, 1589, 11684, 85899, 631505).  One JSON record per line:\n")
        fh.write("# degree, disc, coeffs (ascending), h (class number), units (power-basis\n")
        fh.write("# coordinates of fundamental units, ascending, rationals as strings), label.\n")
        fh.write("# Regenerate with scripts/build_catalog.py.\n")
        for r in records:
            fh.write(json.dumps(r, separators=(", ", ": ")) + "\n")


if __name__ == "__main__":
    main()
