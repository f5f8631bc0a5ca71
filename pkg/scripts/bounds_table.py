"""Print the root-discriminant cutoffs and d_F caps for each odd m.

    python3 scripts/bounds_table.py --ms 3 5 7 9 11 21
"""
import argparse

from hrcn import bounds, enumeration


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ms", type=int, nargs="*", default=[3, 5, 7, 9, 11, 13, 15, 17, 19, 21])
    ap.add_argument("--h-max", type=int, default=16)
    args = ap.parse_args(argv)
    catalog = enumeration.load_catalog()
    print("m\tn\tcutoff\todlyzko\tcap\tcount")
    for m in args.ms:
        sb = bounds.search_bounds(m, args.h_max)
        if sb.empty:
            print("%d\t-\tempty search space" % m)
            continue
        nf = enumeration.nf_m(m, catalog, args.h_max)
        for n in range(1, sb.n_max + 2):
            cut = bounds.root_disc_bound(m, n, args.h_max)
            odl = bounds.odlyzko_min_root_disc(n)
            cap = sb.caps.get(n, "-")
            print("%d\t%d\t%.3f\t%.3f\t%s\t%s" % (m, n, float(cut.approx), float(odl), cap, len(nf.get(n, []))))


if __name__ == "__main__":
    main()
