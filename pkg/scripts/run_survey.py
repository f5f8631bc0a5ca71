"""Run the full survey and write every result (h_low <= 2 h_max) as TSV.

    python3 scripts/run_survey.py --out survey.tsv --jobs 4
"""
import argparse
import sys
import time

from hrcn import ball, enumeration
from hrcn.cli import ROW_COLUMNS, result_row
from hrcn.config import RunConfig

EXTRA = ["w_m", "L(chi,1-m)"]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--h-max", type=int, default=16)
    ap.add_argument("--ms", type=int, nargs="*", default=[3, 5, 7, 9, 11])
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--scale", type=int, default=1, help="delta scan widening factor")
    ap.add_argument("--euler-cutoff", type=int, default=None)
    ap.add_argument("--out", default="-")
    args = ap.parse_args(argv)

    cfg = RunConfig(h_max=args.h_max, jobs=args.jobs, scan_scale=args.scale, euler_cutoff=args.euler_cutoff)
    ball.set_precision(cfg.precision_bits)
    catalog = enumeration.load_catalog(cfg.catalog_path)
    t0 = time.perf_counter()
    exts = enumeration.extensions_by_m(args.ms, catalog, cfg.h_max, cfg.scan_scale)
    print("candidates %s (%.1f s)" % ({m: len(v) for m, v in exts.items()}, time.perf_counter() - t0),
          file=sys.stderr)
    out = sys.stdout if args.out == "-" else open(args.out, "w")
    out.write("\t".join(ROW_COLUMNS + EXTRA) + "\n")
    for m in args.ms:
        t = time.perf_counter()
        rows = enumeration.survey(m, cfg.h_max, catalog, cfg.euler_cutoff, cfg.wm_sample_bound, cfg.jobs,
                                  extensions=exts[m])
        for r in rows:
            rec = result_row(r)
            out.write("\t".join([str(rec[c]) for c in ROW_COLUMNS]
                                + [str(r.w_m), "%.10f" % float(r.lvalue.l_at_1_minus_m.approx)]) + "\n")
        print("m=%d: %d rows (%.1f s)" % (m, len(rows), time.perf_counter() - t), file=sys.stderr)
    if out is not sys.stdout:
        out.close()


if __name__ == "__main__":
    main()
