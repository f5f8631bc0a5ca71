import json

import pytest
from click.testing import CliRunner

from hrcn import cli
from hrcn.config import DEFAULT_GOLDEN


@pytest.fixture
def runner():
    return CliRunner()


def _golden_subset(tmp_path, m, edit=None):
    lines = DEFAULT_GOLDEN.read_text().splitlines()
    head = [ln for ln in lines if ln.startswith("#") or ln.startswith("m\t")]
    body = [ln for ln in lines if ln.split("\t")[0] == str(m)]
    if edit:
        body = [edit(ln) for ln in body]
    path = tmp_path / "golden.tsv"
    path.write_text("\n".join(head + body) + "\n")
    return path


def test_bounds_m21_empty(runner):
    res = runner.invoke(cli.main, ["bounds", "--m", "21"])
    assert res.exit_code == 0
    assert "empty search space" in res.output


def test_bounds_json(runner):
    res = runner.invoke(cli.main, ["bounds", "--m", "7", "--format", "json"])
    data = json.loads(res.output.split("\n", 1)[1])
    assert data["n_max"] == 2
    assert [r["count"] for r in data["rows"]] == [1, 2]


def test_bad_m_rejected(runner):
    res = runner.invoke(cli.main, ["bounds", "--m", "4"])
    assert res.exit_code == 2


def test_env_override(runner):
    res = runner.invoke(cli.main, ["bounds"], env={"HRCN_M": "21"})
    assert "empty search space" in res.output


def test_compute_qomega(runner):
    res = runner.invoke(cli.main, ["compute", "--delta", "-3"])
    assert res.exit_code == 0, res.output
    fields = dict(ln.split("\t", 1) for ln in res.output.strip().splitlines())
    assert fields["h"] == "1"
    assert fields["w_m"] == "18"
    assert "2-adic main conjecture" in fields["assumption"]


def test_compute_k_poly(runner):
    res = runner.invoke(cli.main, ["compute", "--m", "5", "--k-poly", "x^2+1", "--format", "json"])
    data = json.loads(res.output)
    assert data["h"] == 5 and data["Q_m"] == "Two"


def test_compute_quadratic_base(runner):
    res = runner.invoke(cli.main, ["compute", "--base-poly", "x^2-2", "--delta", "2*y-5", "--format", "json"])
    data = json.loads(res.output)
    assert (data["d_K"], data["N"], data["h"]) == (1088, 17, 16)


def test_compute_rejects_non_cm(runner):
    res = runner.invoke(cli.main, ["compute", "--base-poly", "x^2-2", "--delta", "y"])
    assert res.exit_code == 2
    assert "totally negative" in res.output


def test_lvalue_oracle(runner):
    res = runner.invoke(cli.main, ["lvalue", "--m", "3", "--delta", "-7", "--format", "json"])
    data = json.loads(res.output)
    assert data["bernoulli_oracle"] == "-16/7"


def test_catalog_verify(runner):
    res = runner.invoke(cli.main, ["catalog", "verify"])
    assert res.exit_code == 0
    assert "191 fields" in res.output


def test_bad_catalog_is_computation_error(runner, tmp_path):
    bad = tmp_path / "bad.catalog"
    bad.write_text('{"degree": 2, "disc": 6, "coeffs": [-2, 0, 1], "h": 1, "units": [], "label": "x"}\n')
    res = runner.invoke(cli.main, ["bounds", "--m", "7", "--catalog", str(bad)])
    assert res.exit_code == 2


def test_verify_tables_m7_passes(runner, tmp_path):
    path = _golden_subset(tmp_path, 7)
    res = runner.invoke(cli.main, ["verify-tables", "--golden", str(path)])
    assert res.exit_code == 0, res.output
    assert "PASS" in res.output
    assert "misprint" in res.output


def test_verify_tables_reports_injected_fault(runner, tmp_path):
    # corrupt h for Q(sqrt-7), m = 5 (16 -> 12)
    def edit(ln):
        f = ln.split("\t")
        if f[3] == "7":
            f[6] = f[7] = "12"
        return "\t".join(f)

    path = _golden_subset(tmp_path, 5, edit)
    res = runner.invoke(cli.main, ["verify-tables", "--golden", str(path)])
    assert res.exit_code == 1
    assert "MISMATCH" in res.output and "'d_K': 7" in res.output and "h=16/16" in res.output


def test_enumerate_m7(runner):
    res = runner.invoke(cli.main, ["enumerate", "--m", "7"])
    assert res.exit_code == 0
    lines = res.output.strip().splitlines()
    assert lines[0].split("\t") == cli.ROW_COLUMNS
    assert len(lines) == 2 and lines[1].split("\t")[3] == "3"


def test_compare_tables_multiset():
    a = [{"m": 3, "d_F": 60, "d_K": 3600, "N": 1, "h_low": 4, "h_high": 8}] * 2
    missing, extra = cli.compare_tables(a, a[:1])
    assert len(missing) == 1 and not extra
