"""Command-line front end: enumerate, compute, lvalue, bounds, verify-tables, catalog."""
import csv
import json
import logging
import sys
from collections import Counter
from fractions import Fraction
from pathlib import Path

import click
import sympy

from . import ball, bounds, enumeration, invariants, lvalue
from .config import DEFAULT_GOLDEN, RunConfig
from .enumeration import CatalogError
from .extension import CatalogEntry, CMExtension, format_delta
from .nf_core import (
    DegenerateExtension,
    ReducibleError,
    absolute_field,
    fingerprint,
    is_totally_negative,
    is_totally_real,
    maximal_order,
    rationals,
)

EXIT_MISMATCH = 1
EXIT_ERROR = 2
ASSUMPTION = "h_m^- assumes the 2-adic main conjecture (class number formula exact)"
ROW_COLUMNS = ["m", "d_F", "F_label", "d_K", "N", "delta", "h_low", "h_high", "q_m_reason"]

log = logging.getLogger("hrcn")


class ComputationError(click.ClickException):
    exit_code = EXIT_ERROR


def _parse_m(ctx, param, value):
    if value is None or str(value).lower() == "all":
        return None
    try:
        m = int(value)
    except ValueError:
        raise click.BadParameter("expected an odd integer >= 3 or 'all'")
    if m < 3 or m % 2 == 0:
        raise click.BadParameter("m must be odd and at least 3")
    return m


def common_options(default_m="all"):
    opts = [
        click.option("--m", "m", default=default_m, callback=_parse_m, envvar="HRCN_M", show_default=True,
                     help="odd weight m >= 3, or 'all'"),
        click.option("--h-max", default=16, envvar="HRCN_H_MAX", show_default=True, type=click.IntRange(min=1)),
        click.option("--precision-bits", default=128, envvar="HRCN_PRECISION_BITS", show_default=True,
                     type=click.IntRange(min=64)),
        click.option("--euler-cutoff", default=None, envvar="HRCN_EULER_CUTOFF", type=click.IntRange(min=100),
                     help="Euler product cutoff (default 10^5 for m=3, 10^4 otherwise)"),
        click.option("--wm-sample-bound", default=invariants.DEFAULT_WM_SAMPLE_BOUND, envvar="HRCN_WM_SAMPLE_BOUND",
                     show_default=True, type=click.IntRange(min=2)),
        click.option("--scan-scale", default=1, envvar="HRCN_SCAN_SCALE", show_default=True,
                     type=click.IntRange(min=1), help="widen the delta scan by this factor"),
        click.option("--catalog", "catalog_path", default=str(enumeration.DEFAULT_CATALOG), envvar="HRCN_CATALOG",
                     type=click.Path(exists=True, dir_okay=False)),
        click.option("--golden", "golden_path", default=str(DEFAULT_GOLDEN), envvar="HRCN_GOLDEN",
                     type=click.Path(dir_okay=False)),
        click.option("--jobs", default=1, envvar="HRCN_JOBS", show_default=True, type=click.IntRange(min=1)),
        click.option("--format", "output_format", default="tsv", envvar="HRCN_FORMAT", show_default=True,
                     type=click.Choice(["tsv", "json"])),
    ]

    def deco(fn):
        for o in reversed(opts):
            fn = o(fn)
        return fn

    return deco


def _config(kw) -> RunConfig:
    cfg = RunConfig(
        m=kw["m"], h_max=kw["h_max"], precision_bits=kw["precision_bits"], euler_cutoff=kw["euler_cutoff"],
        wm_sample_bound=kw["wm_sample_bound"], scan_scale=kw["scan_scale"], catalog_path=Path(kw["catalog_path"]),
        golden_path=Path(kw["golden_path"]), jobs=kw["jobs"], output_format=kw["output_format"],
    )
    ball.set_precision(cfg.precision_bits)
    return cfg


def _load_catalog(cfg):
    try:
        return enumeration.load_catalog(cfg.catalog_path)
    except (CatalogError, OSError) as exc:
        raise ComputationError("catalog: %s" % exc)


# --- rows -------------------------------------------------------------------------------

def result_row(r) -> dict:
    e = r.extension
    return {
        "m": r.m, "d_F": e.d_F, "F_label": e.base.label, "d_K": e.d_K, "N": e.rel_disc_norm,
        "delta": e.delta_str(), "h_low": r.h_low, "h_high": r.h_high, "q_m_reason": r.q_m.reason,
    }


def run_survey(cfg, catalog, ms=None):
    """Survey rows (h_low <= 2 h_max) for every requested m, sorted."""
    ms = tuple(ms or cfg.ms)
    try:
        exts = enumeration.extensions_by_m(ms, catalog, cfg.h_max, cfg.scan_scale)
        rows = []
        for m in ms:
            rows.extend(enumeration.survey(m, cfg.h_max, catalog, cfg.euler_cutoff, cfg.wm_sample_bound,
                                           cfg.jobs, extensions=exts[m]))
    except (ArithmeticError, NotImplementedError) as exc:
        raise ComputationError(str(exc))
    return sorted(rows, key=enumeration.result_key), {m: len(exts[m]) for m in ms}


def emit_rows(rows, fmt, out=None, meta=None):
    out = out or sys.stdout
    if fmt == "json":
        json.dump({"meta": meta or {}, "rows": rows}, out, indent=1)
        out.write("\n")
        return
    out.write("\t".join(ROW_COLUMNS) + "\n")
    for r in rows:
        out.write("\t".join(str(r[c]) for c in ROW_COLUMNS) + "\n")


# --- commands -------------------------------------------------------------------------------

@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("-v", "--verbose", is_flag=True)
def main(verbose):
    """Higher relative class numbers of CM extensions."""
    logging.basicConfig(level=logging.INFO if verbose else logging.WARNING, format="%(levelname)s %(message)s")


@main.command("enumerate")
@common_options()
def cmd_enumerate(**kw):
    """Print every CM extension with h_m^- <= h_max (lower candidate)."""
    cfg = _config(kw)
    catalog = _load_catalog(cfg)
    rows, counts = run_survey(cfg, catalog)
    keep = [result_row(r) for r in rows if r.h_low <= cfg.h_max]
    meta = {"assumption": ASSUMPTION, "candidate_counts": counts, "h_max": cfg.h_max}
    emit_rows(keep, cfg.output_format, meta=meta)


def _parse_poly(text, var):
    x = sympy.Symbol(var)
    try:
        p = sympy.Poly(sympy.sympify(text, locals={var: x}), x)
    except (sympy.SympifyError, sympy.PolynomialError, TypeError) as exc:
        raise click.BadParameter("cannot parse %r as a polynomial in %s (%s)" % (text, var, exc))
    coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(p.all_coeffs())]
    return coeffs


def _match_catalog(F, catalog):
    if F.degree == 1:
        return enumeration.rational_entry()
    for e in catalog:
        if e.degree == F.degree and e.disc == F.disc and fingerprint(e.field) == fingerprint(F):
            return e
    return None


def build_extension(base_poly, delta_text, k_poly, catalog) -> CMExtension:
    """The CM extension given on the command line."""
    coeffs = _parse_poly(base_poly or "x", "x")
    if any(c.denominator != 1 for c in coeffs) or coeffs[-1] != 1:
        raise click.BadParameter("base polynomial must be monic with integer coefficients")
    try:
        F = maximal_order([int(c) for c in coeffs])
    except ReducibleError as exc:
        raise click.BadParameter(str(exc))
    if not is_totally_real(F):
        raise click.BadParameter("base field is not totally real")
    if k_poly is not None:
        if F.degree != 1:
            raise click.BadParameter("--k-poly is supported for base field Q only")
        kc = _parse_poly(k_poly, "x")
        if len(kc) != 3 or kc[-1] != 1:
            raise click.BadParameter("--k-poly must be a monic quadratic")
        disc = kc[1] ** 2 - 4 * kc[0]
        delta = [disc]
    else:
        if delta_text is None:
            raise click.BadParameter("give --delta or --k-poly")
        dc = _parse_poly(delta_text, "y")
        if F.degree == 1:
            delta = [sum(c * (-F.poly[0]) ** k for k, c in enumerate(dc))]
        else:
            from .nf_core import polys

            delta = list(polys.rem_monic(tuple(dc), F.poly)) if len(dc) > F.degree else dc
    delta = tuple(Fraction(x) for x in delta) + (Fraction(0),) * (F.degree - len(delta))
    if not is_totally_negative(F, delta):
        raise click.BadParameter("delta is not totally negative: K/F is not a CM extension")
    hit = _match_catalog(F, catalog)
    if hit is None:
        log.warning("base field not in catalog; class number parity unknown")
    entry = CatalogEntry(F.degree, F.disc, F.poly, hit.h if hit else None,
                         hit.label if hit else "custom", (), F)
    try:
        K = absolute_field(F, delta)
    except (DegenerateExtension, ValueError) as exc:
        raise click.BadParameter(str(exc))
    return CMExtension(entry, delta, K, abs(K.disc) // F.disc**2)


def _ext_options(fn):
    fn = click.option("--k-poly", default=None, help="defining polynomial of K (base field Q only)")(fn)
    fn = click.option("--delta", default=None, help="delta as a polynomial in y, the root of the base polynomial")(fn)
    fn = click.option("--base-poly", default="x", show_default=True, help="defining polynomial of F in x")(fn)
    return fn


@main.command("compute")
@_ext_options
@common_options(default_m="3")
def cmd_compute(base_poly, delta, k_poly, **kw):
    """h_m^- of a single extension K = F(sqrt(delta))."""
    cfg = _config(kw)
    m = cfg.m or 3
    catalog = _load_catalog(cfg)
    ext = build_extension(base_poly, delta, k_poly, catalog)
    try:
        r = invariants.higher_relative_class_number(ext, m, cfg.euler_cutoff, cfg.wm_sample_bound)
    except ArithmeticError as exc:
        raise ComputationError(str(exc))
    lv = r.lvalue
    info = {
        "m": m, "d_F": ext.d_F, "d_K": ext.d_K, "N": ext.rel_disc_norm, "delta": ext.delta_str(),
        "w_m": r.w_m, "Q_m": r.q_m.value, "Q_m_reason": r.q_m.reason,
        "L(chi,m)": repr(lv.l_at_m), "L(chi,1-m)": repr(lv.l_at_1_minus_m), "euler_cutoff": lv.euler_cutoff,
        "h": r.h_low if not r.ambiguous else "%d or %d" % (r.h_low, r.h_high), "assumption": ASSUMPTION,
    }
    _print_mapping(info, cfg.output_format)


def _print_mapping(info, fmt):
    if fmt == "json":
        click.echo(json.dumps(info, indent=1))
    else:
        for k, v in info.items():
            click.echo("%s\t%s" % (k, v))


@main.command("lvalue")
@_ext_options
@common_options(default_m="3")
def cmd_lvalue(base_poly, delta, k_poly, **kw):
    """Error-bounded L(chi, m) and L(chi, 1-m)."""
    cfg = _config(kw)
    m = cfg.m or 3
    catalog = _load_catalog(cfg)
    ext = build_extension(base_poly, delta, k_poly, catalog)
    lv = lvalue.l_chi_1_minus_m(ext.F, ext.K, m, cfg.euler_cutoff)
    info = {"m": m, "d_F": ext.d_F, "d_K": ext.d_K, "sign": lv.sign, "L(chi,m)": repr(lv.l_at_m),
            "L(chi,1-m)": repr(lv.l_at_1_minus_m), "euler_cutoff": lv.euler_cutoff,
            "tail_bound": float(lv.tail_bound)}
    if ext.F.degree == 1:
        D = ext.K.disc
        info["bernoulli_oracle"] = str(lvalue.bernoulli_oracle(D, m))
    _print_mapping(info, cfg.output_format)


@main.command("bounds")
@common_options(default_m="3")
def cmd_bounds(**kw):
    """Root-discriminant cutoffs, Odlyzko bounds, d_F caps and NF_m counts."""
    cfg = _config(kw)
    m = cfg.m or 3
    sb = bounds.search_bounds(m, cfg.h_max)
    click.echo("# m=%d h_max=%d gamma(m)=%s C(m)=%s" % (m, cfg.h_max, bounds.gamma_lower(m), bounds.c_of_m(m)))
    if sb.empty:
        click.echo("empty search space")
        return
    catalog = _load_catalog(cfg)
    nf = enumeration.nf_m(m, catalog, cfg.h_max)
    rows = []
    for n in range(1, sb.n_max + 1):
        rows.append({"n": n, "root_disc_cutoff": "%.3f" % float(sb.cutoffs[n].hi),
                     "odlyzko": str(float(bounds.odlyzko_min_root_disc(n))), "d_F_cap": sb.caps[n],
                     "count": len(nf.get(n, []))})
    if cfg.output_format == "json":
        click.echo(json.dumps({"m": m, "n_max": sb.n_max, "rows": rows}, indent=1))
    else:
        click.echo("\t".join(rows[0].keys()))
        for r in rows:
            click.echo("\t".join(str(v) for v in r.values()))


# --- golden verification ---------------------------------------------------------------

GOLDEN_KEY = ("m", "d_F", "d_K", "N", "h_low", "h_high")


def golden_notes(path):
    """Header lines of the golden file that annotate corrected misprints."""
    with open(path, encoding="utf-8") as fh:
        return [ln[1:].strip() for ln in fh if ln.startswith("# Note:")]


def read_golden(path):
    with open(path, encoding="utf-8") as fh:
        lines = [ln for ln in fh if ln.strip() and not ln.startswith("#")]
    reader = csv.DictReader(lines, delimiter="\t")
    rows = []
    for rec in reader:
        rows.append({k: (int(v) if k in GOLDEN_KEY else v) for k, v in rec.items()})
    return rows


def compare_tables(golden, computed):
    """Multiset comparison on (m, d_F, d_K, N, h_low, h_high); returns (missing, extra)."""
    g = Counter(tuple(r[k] for k in GOLDEN_KEY) for r in golden)
    c = Counter(tuple(r[k] for k in GOLDEN_KEY) for r in computed)
    return sorted((g - c).elements()), sorted((c - g).elements())


@main.command("verify-tables")
@common_options()
def cmd_verify_tables(**kw):
    """Recompute the golden table and diff every row."""
    cfg = _config(kw)
    try:
        golden = read_golden(cfg.golden_path)
        notes = golden_notes(cfg.golden_path)
    except (OSError, KeyError, ValueError) as exc:
        raise ComputationError("golden file: %s" % exc)
    catalog = _load_catalog(cfg)
    ms = sorted({r["m"] for r in golden}) if cfg.m is None else [cfg.m]
    golden = [r for r in golden if r["m"] in ms]
    rows, _ = run_survey(cfg, catalog, ms)
    computed = [result_row(r) for r in rows if r.h_low <= cfg.h_max]
    missing, extra = compare_tables(golden, computed)
    for note in notes:
        click.echo("# " + note)
    click.echo("# %s" % ASSUMPTION)
    click.echo("checked %d golden rows against %d computed rows" % (len(golden), len(computed)))
    for key in missing:
        near = [r for r in computed if (r["m"], r["d_F"], r["d_K"]) == key[:3]]
        got = "; ".join("h=%s/%s" % (r["h_low"], r["h_high"]) for r in near) or "no such extension"
        click.echo("MISMATCH golden %s: computed %s" % (dict(zip(GOLDEN_KEY, key)), got))
    for key in extra:
        click.echo("EXTRA computed %s" % dict(zip(GOLDEN_KEY, key)))
    if missing or extra:
        click.echo("FAIL")
        sys.exit(EXIT_MISMATCH)
    click.echo("PASS")


@main.group("catalog")
def catalog_group():
    """Base-field catalog tools."""


@catalog_group.command("verify")
@click.option("--catalog", "catalog_path", default=str(enumeration.DEFAULT_CATALOG), envvar="HRCN_CATALOG",
              type=click.Path(exists=True, dir_okay=False))
def cmd_catalog_verify(catalog_path):
    """Revalidate every record (irreducible, totally real, discriminant, units)."""
    try:
        cat = enumeration.load_catalog(catalog_path)
    except CatalogError as exc:
        click.echo("FAIL %s" % exc)
        sys.exit(EXIT_MISMATCH)
    counts = Counter(e.degree for e in cat)
    click.echo("ok: %d fields; by degree %s" % (len(cat), dict(sorted(counts.items()))))


if __name__ == "__main__":
    main()
