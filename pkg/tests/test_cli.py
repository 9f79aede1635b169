import csv
import io
import json
import subprocess
import sys

import jsonschema
import pytest

from cyclohull.cli import SCHEMAS, main
from cyclohull.cyclic_core import code_space


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, command, *argv):
    code, out, _ = run(capsys, command, *argv, "--format", "json")
    data = json.loads(out)
    jsonschema.validate(data, SCHEMAS[command])
    return code, data


def factor_set(data):
    return {f["factor_str"] for f in data["factors"]}


def test_factor_examples(capsys):
    code, data = run_json(capsys, "factor", "--q", "2", "--n", "9")
    assert code == 0
    assert factor_set(data) == {"x + 1", "x^2 + x + 1", "x^6 + x^3 + 1"}
    assert all(f["self_reciprocal"] for f in data["factors"])

    code, data = run_json(capsys, "factor", "--q", "3", "--n", "10")
    assert factor_set(data) == {"x + 1", "x + 2", "x^4 + x^3 + x^2 + x + 1",
                                "x^4 + 2*x^3 + x^2 + 2*x + 1"}
    assert all(f["self_reciprocal"] for f in data["factors"])

    code, data = run_json(capsys, "factor", "--q", "2", "--n", "1")
    assert [f["factor"] for f in data["factors"]] == [[1, 1]]


def test_factor_table_and_csv(capsys):
    code, out, _ = run(capsys, "factor", "--q", "2", "--n", "7")
    lines = out.splitlines()
    assert code == 0 and lines[0].split() == ["leader", "coset", "size", "factor", "self_reciprocal"]
    assert len(lines) == 2 + 3
    code, out, _ = run(capsys, "factor", "--q", "2", "--n", "7", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[1] == ["0", "0", "1", "x + 1", "true"]


@pytest.mark.parametrize("argv", [
    ["factor", "--q", "6", "--n", "5"],
    ["factor", "--q", "2", "--n", "6"],
    ["factor", "--q", "8192", "--n", "3"],
    ["factor", "--q", "2", "--n", "0"],
    ["cosets", "--q", "2", "--n", "7", "--m", "3"],
    ["cosets", "--q", "2"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_splitting_field_limit(capsys):
    code, _, err = run(capsys, "factor", "--q", "2", "--n", str(2**25 - 1))
    assert code == 2 and "too large" in err


def test_cosets(capsys):
    code, data = run_json(capsys, "cosets", "--q", "2", "--n", "7")
    assert code == 0
    assert [c["leader"] for c in data["cosets"]] == [0, 1, 3]
    assert data["cosets"][1]["neg_pair"] == 3
    code, data = run_json(capsys, "cosets", "--q", "3", "--m", "2")
    assert data["n"] == 8


def test_classify_counts(capsys):
    for q, n in [(2, 7), (2, 9), (3, 10), (4, 3)]:
        code, data = run_json(capsys, "classify", "--q", str(q), "--n", str(n))
        assert code == 0
        assert data["count"] == 2 ** len(code_space(q, n).leaders)
        for r in data["records"]:
            assert r["lcd"] == (r["hull_dim"] == 0)
            assert r["one_dim_hull"] == (r["hull_dim"] == 1)
    _, data = run_json(capsys, "classify", "--q", "2", "--n", "9")
    assert data["count"] == 8 and all(r["lcd"] for r in data["records"])


def test_classify_filters(capsys):
    _, data = run_json(capsys, "classify", "--q", "4", "--n", "3", "--hull-dim", "1")
    assert data["count"] > 0 and all(r["hull_dim"] == 1 for r in data["records"])
    assert [2, 3, 1] in [r["generator"] for r in data["records"]]
    _, data = run_json(capsys, "classify", "--q", "2", "--n", "7", "--hull-dim", "1")
    assert data["count"] == 0
    _, data = run_json(capsys, "classify", "--q", "2", "--n", "7", "--lcd-only")
    assert data["count"] > 0 and all(r["lcd"] for r in data["records"])


def test_classify_mask_order(capsys):
    _, data = run_json(capsys, "classify", "--q", "2", "--n", "7")
    # bit i of the mask selects the i-th leader's factor in the generator
    assert data["records"][0]["generator"] == [1]
    assert data["records"][-1]["generator"] == [1, 0, 0, 0, 0, 0, 0, 1]
    assert data["records"][1]["generator"] == [1, 1]


def test_classify_csv_columns(capsys, tmp_path):
    out = tmp_path / "codes.csv"
    code, stdout, _ = run(capsys, "classify", "--q", "2", "--n", "7", "--format", "csv", "--out", str(out))
    assert code == 0 and stdout == ""
    rows = list(csv.reader(out.open()))
    assert rows[0] == ["generator", "dim", "bz_dual", "hull_dim", "lcd", "one_dim_hull"]
    assert len(rows) == 1 + 8
    assert rows[1] == ["1", "7", "0 1 3", "0", "true", "false"]


def test_classify_jobs_deterministic(capsys):
    _, one = run_json(capsys, "classify", "--q", "2", "--n", "31")
    _, many = run_json(capsys, "classify", "--q", "2", "--n", "31", "--jobs", "3")
    assert one == many and one["count"] == 128


def test_classify_too_many_leaders(capsys):
    # x^n - 1 splits completely over F_q when n | q - 1; here t = 25 > 24
    code, _, err = run(capsys, "classify", "--q", "101", "--n", "25")
    assert code == 2 and "2^25" in err


def test_hull(capsys):
    code, data = run_json(capsys, "hull", "--q", "2", "--n", "7", "--gen", "1,1,0,1")
    assert code == 0
    assert data["hull_dim"] == 3 and data["agree"] and data["oracle"]["hull_dim"] == 3
    code, data = run_json(capsys, "hull", "--q", "4", "--n", "3", "--gen", "2,3,1")
    assert data["one_dim_hull"] and data["one_dim_hull_leader"] == 1
    code, _, err = run(capsys, "hull", "--q", "2", "--n", "7", "--gen", "1,1,1")
    assert code == 2 and "remainder" in err
    code, _, err = run(capsys, "hull", "--q", "2", "--n", "7", "--gen", "1,x")
    assert code == 2


def test_hull_table_format(capsys):
    code, out, _ = run(capsys, "hull", "--q", "2", "--n", "7", "--gen", "1,1,0,1", "--format", "table")
    assert code == 0 and "hull_dim: 3" in out


def test_lcp(capsys):
    sp = code_space(2, 7)
    c = (sp.minpoly(0) * sp.minpoly(1)).to_text()
    d = sp.minpoly(3).to_text()
    code, data = run_json(capsys, "lcp", "--q", "2", "--n", "7", "--gen-c", c, "--gen-d", d)
    assert code == 0 and data["lcp"] and data["generator_product_is_xn_minus_1"] and data["agree"]
    code, data = run_json(capsys, "lcp", "--q", "2", "--n", "7", "--gen-c", c, "--gen-d", c)
    assert code == 0 and not data["lcp"] and data["agree"]


def test_intersect(capsys):
    code, data = run_json(capsys, "intersect", "--q", "2", "--n", "7",
                          "--gen-c", "1,1,0,1", "--gen-d", "1,1,0,1")
    assert code == 0 and data["intersection_dim"] == 4 == data["c"]["dim"]
    code, data = run_json(capsys, "intersect", "--q", "2", "--n", "7",
                          "--gen-c", "1,1", "--gen-d", "1,0,1,1")
    assert data["intersection_dim"] == 3 and data["agree"]


def test_verify_and_trace_check(capsys):
    code, data = run_json(capsys, "verify", "--q", "2", "--m", "3", "--samples", "50")
    assert code == 0 and data["ok"]
    assert data["checks"]["trace_code_equals_generator_code"]["passed"] == 8
    code, data = run_json(capsys, "verify", "--q", "3", "--m", "2", "--samples", "50")
    assert code == 0 and data["one_dim_hull_count"] == 0
    code, data = run_json(capsys, "verify", "--q", "2", "--n", "9")
    assert code == 0 and (data["lcd_count"], data["codes"]) == (8, 8)
    assert "trace_code_equals_generator_code" not in data["checks"]
    code, data = run_json(capsys, "trace-check", "--q", "4", "--m", "2", "--samples", "50")
    assert code == 0 and data["ok"]
    code, _, err = run(capsys, "trace-check", "--q", "2", "--n", "9")
    assert code == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "cyclohull", "factor", "--q", "2", "--n", "3",
                          "--format", "json"], capture_output=True, text=True, check=True)
    assert json.loads(res.stdout)["n"] == 3
