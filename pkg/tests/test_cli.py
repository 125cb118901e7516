import csv
import io
import json

import pytest

from alghyp.cli import main, run_atlas, run_classify, run_genus_bound
from alghyp.config import parse_config
from alghyp.errors import InvalidInputError, LimitError


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def pn_config(n, degrees, curve=None):
    rows = ", ".join(f"[{d}]" for d in degrees)
    text = f"[ambient]\nN = [{n}]\nfull_product = true\n[bundle]\nsplit = [{rows}]\n"
    if curve is not None:
        text += f"[curve]\ne = {list(curve)}\n"
    return text


def atlas_config(n, k, d_max):
    return f"[atlas]\nn = [{n[0]}, {n[1]}]\nk = [{k[0]}, {k[1]}]\nd_max = {d_max}\n"


def run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if code == 0 else out


# -- classify ----------------------------------------------------------------------


def test_classify_examples():
    r = run_classify(parse_config(pn_config(4, [7]))).to_dict()
    assert r["verdict"]["kind"] == "Hyperbolic"
    assert r["verdict"]["certificate"]["eps"] == "1/7"
    r = run_classify(parse_config(pn_config(4, [6]))).to_dict()
    assert r["verdict"]["kind"] == "Undetermined"
    r = run_classify(parse_config(pn_config(5, [4, 4]))).to_dict()
    assert r["verdict"]["kind"] == "Hyperbolic"


def test_json_report_has_recheck_fields(tmp_path, capsys):
    path = write(tmp_path, "pp.cfg", "[ambient]\nN = [2, 2]\nfull_product = true\n[bundle]\nsplit = [[5, 5]]\n")
    code, report = run_json(capsys, ["classify", path, "--format", "json"])
    assert code == 0
    cert = report["verdict"]["certificate"]
    assert (cert["eps_numerator"], cert["eps_denominator"]) == (1, 5)
    assert cert["witnesses"] == {"1": [0, 0], "2": [0, 0]}
    assert [t["strict"] for t in report["thresholds"]] == [5, 5]
    assert [t["lines"] for t in report["thresholds"]] == [3, 3]
    assert report["instance"]["d_alpha"] == [{"alpha": [0, 1], "coeff": 5}, {"alpha": [1, 0], "coeff": 5}]
    assert len(report["assumptions"]["standing"]) == 2


def test_classify_with_curve_summary():
    r = run_classify(parse_config(pn_config(4, [7], curve=[1]))).to_dict()
    assert r["genus"]["summary"]["two_g_minus_2"] == "1/7"


def test_text_report(tmp_path, capsys):
    path = write(tmp_path, "p4.cfg", pn_config(4, [6]))
    assert main(["classify", path]) == 0
    out = capsys.readouterr().out
    assert "verdict: Undetermined" in out
    assert "not to the geometry" in out


def test_unresolved_domination_reported(tmp_path, capsys):
    text = "[ambient]\nN = [3, 3]\nfull_product = true\n[bundle]\nsplit = [[9, 0], [0, 9]]\n"
    code, report = run_json(capsys, ["classify", write(tmp_path, "z.cfg", text), "--format", "json"])
    assert code == 0
    assert report["assumptions"]["section_dominating"] == "unresolved"
    assert report["verdict"]["kind"] == "Undetermined"
    assert any("assumption unverified" == r["code"] for r in report["reasons"])


# -- genus bound --------------------------------------------------------------------


def test_genus_bound_p3_quintic():
    r = run_genus_bound(parse_config(pn_config(3, [5], curve=[1]))).to_dict()
    table = r["genus"]["table"]
    assert [row["type"] for row in table] == [[0], [1]]
    assert [row["basic"] for row in table] == ["1/1", "0/1"]
    assert r["genus"]["summary"]["g"] == 2


def test_genus_bound_p2xp2():
    text = "[ambient]\nN = [2, 2]\nfull_product = true\n[bundle]\nsplit = [[5, 5]]\n[curve]\ne = [1, 1]\n"
    r = run_genus_bound(parse_config(text)).to_dict()
    assert r["genus"]["certified"]
    assert r["genus"]["summary"]["two_g_minus_2"] == "2/1"
    assert any(row["scroll_source"] and "lambda=(0, 0)" in row["scroll_source"] for row in r["genus"]["table"])


def test_genus_bound_non_certifying_table():
    r = run_genus_bound(parse_config(pn_config(4, [6], curve=[1])))
    d = r.to_dict()
    assert not d["genus"]["certified"] and d["genus"]["summary"] is None
    assert "non-certifying" in r.to_text()


def test_genus_bound_needs_curve():
    with pytest.raises(InvalidInputError):
        run_genus_bound(parse_config(pn_config(4, [7])))


def test_genus_bound_zero_profile_exit_code(tmp_path):
    assert main(["genus-bound", write(tmp_path, "z.cfg", pn_config(4, [7], curve=[0]))]) == 2


# -- atlas --------------------------------------------------------------------------


def rows_of(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_atlas_n5_k2():
    rows = rows_of(run_atlas(parse_config(atlas_config((5, 5), (2, 2), 5))))
    by_deg = {r["degrees"]: r for r in rows}
    assert by_deg["3;4"]["verdict"] == "Undetermined" and by_deg["3;4"]["sum"] == "7"
    assert by_deg["3;3"]["verdict"] == "NotHyperbolic"
    assert by_deg["4;4"]["verdict"] == "Hyperbolic"
    assert by_deg["5;5"]["verdict"] == "Hyperbolic"
    assert all(r["agreement"] == "true" for r in rows)


def test_atlas_n4_k1_known_column():
    rows = rows_of(run_atlas(parse_config(atlas_config((4, 4), (1, 1), 7))))
    pick = {r["degrees"]: (r["verdict"], r["known_status"], r["agreement"]) for r in rows}
    assert pick["5"] == ("NotHyperbolic", "KnownNotHyperbolic", "true")
    assert pick["6"] == ("Undetermined", "Open", "true")
    assert pick["7"] == ("Hyperbolic", "KnownHyperbolic", "true")
    assert rows[0].keys() == {"n", "k", "degrees", "sum", "verdict", "epsilon", "known_status", "agreement"}


def test_atlas_empty_grid_is_header_only():
    text = run_atlas(parse_config(atlas_config((3, 3), (2, 2), 5)))
    assert text == "n,k,degrees,sum,verdict,epsilon,known_status,agreement\n"


def test_atlas_limit(tmp_path, capsys):
    with pytest.raises(LimitError):
        run_atlas(parse_config(atlas_config((8, 8), (1, 6), 16)), row_cap=100)
    path = write(tmp_path, "a.cfg", atlas_config((8, 8), (1, 6), 16))
    assert main(["atlas", path, "--row-cap", "100"]) == 3


def test_atlas_output_file_is_deterministic(tmp_path):
    path = write(tmp_path, "a.cfg", atlas_config((3, 6), (1, 4), 8))
    out1, out2 = tmp_path / "one.csv", tmp_path / "two.csv"
    assert main(["atlas", path, "--output", str(out1)]) == 0
    assert main(["atlas", path, "--output", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


# -- known table and exit codes ---------------------------------------------------------


def test_known_table_json(capsys):
    code, rows = run_json(capsys, ["known-table", "--n", "4", "--format", "json"])
    assert code == 0
    by_d = {r["d"]: r for r in rows}
    assert by_d[6]["known_status"] == "Open" and by_d[6]["verdict"] == "Undetermined"
    assert by_d[7]["epsilon"] == "1/7"
    assert all(r["consistent"] for r in rows)


def test_known_table_csv(capsys):
    assert main(["known-table", "--n", "3", "--format", "csv"]) == 0
    rows = rows_of(capsys.readouterr().out)
    assert len(rows) == 9


@pytest.mark.parametrize(
    "argv_builder, code",
    [
        (lambda p: ["classify", p("ok.cfg", pn_config(4, [7]))], 0),
        (lambda p: ["classify", p("und.cfg", pn_config(4, [6]))], 0),
        (lambda p: ["classify", p("bad.cfg", "[ambient]\nN = [3, 4]\nD = 7\na = [-4]\n")], 2),
        (lambda p: ["classify", p("rank.cfg", pn_config(3, [1, 1, 1]))], 2),
        (lambda p: ["classify", "/nonexistent/file.cfg"], 2),
        (lambda p: ["classify", p("ok2.cfg", pn_config(4, [7])), "--format", "csv"], 2),
        (lambda p: ["atlas", p("noat.cfg", pn_config(4, [7]))], 2),
        (lambda p: ["frobnicate"], 2),
        (lambda p: ["known-table", "--n", "2"], 2),
    ],
)
def test_exit_codes(tmp_path, capsys, argv_builder, code):
    assert main(argv_builder(lambda name, text: write(tmp_path, name, text))) == code


def test_lines_only_rank(tmp_path, capsys):
    # k = D - 1 is allowed for the lines test alone
    code, report = run_json(capsys, ["classify", write(tmp_path, "l.cfg", pn_config(4, [1, 1, 1])), "--format", "json"])
    assert code == 0
    assert report["verdict"]["kind"] == "NotHyperbolic"
    assert report["reasons"][0]["data"]["surplus"] == 0
