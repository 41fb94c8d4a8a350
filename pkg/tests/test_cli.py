import json

import pytest

from affineq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    doc = json.loads(out) if out else None
    return code, doc


def test_list_twist3(capsys):
    code, doc = run(capsys, "list", "--twist", "3")
    assert code == 0
    assert doc["schema_version"] == "1"
    rows = doc["payload"]["algebras"]
    assert len(rows) == 1
    assert rows[0]["algebra"] == "D4~3"
    assert rows[0]["horizontal"] == "G2"
    assert rows[0]["weyl_order"] == "12"


def test_list_default(capsys):
    code, doc = run(capsys, "list")
    assert code == 0
    names = [r["algebra"] for r in doc["payload"]["algebras"]]
    assert "E6~1" in names and "A7~2" in names and "D4~3" in names


def test_qseries_eta_e6(capsys):
    code, doc = run(capsys, "qseries", "E6~1", "-T", "9")
    assert code == 0
    assert doc["algebra"] == "E6~1"
    coeffs = [int(x) for x in doc["payload"]["coefficients"]]
    assert coeffs == [51840 * c for c in (1, 1, 1, 1, 2, 3, 3, 4, 6, 7)]


def test_qseries_product_matches_eta(capsys):
    code1, d1 = run(capsys, "qseries", "A2~1", "--source", "eta", "-T", "15")
    code2, d2 = run(capsys, "qseries", "A2~1", "--source", "product", "-T", "15")
    assert code1 == code2 == 0
    assert d1["payload"]["coefficients"] == d2["payload"]["coefficients"]


def test_qseries_bott(capsys):
    code, doc = run(capsys, "qseries", "A1~1", "--source", "bott", "-T", "5")
    assert code == 0
    assert doc["payload"]["coefficients"] == ["1", "2", "2", "2", "2", "2"]


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "qseries", "Z9~1")[0] == 2
    assert run(capsys, "qseries", "F4~1", "--source", "product")[0] == 2
    assert run(capsys, "qseries", "A1~1", "--source", "bott",
               "--bott-convention", "exponents")[0] == 2


def test_orbit_both_match(capsys):
    code, doc = run(capsys, "orbit", "C2~1", "-M", "8", "--method", "both")
    assert code == 0
    assert doc["payload"]["match"] is True
    assert doc["payload"]["bfs"]["counts"] == doc["payload"]["permw"]["counts"]
    assert doc["payload"]["bfs"]["counts"][0] == "8"


def test_orbit_budget_exit_3(capsys):
    code = main(["orbit", "E8~1", "-M", "10", "--method", "bfs",
                 "--node-budget", "1000"])
    assert code == 3
    assert capsys.readouterr().out == ""


def test_permw_words(capsys):
    code, doc = run(capsys, "permw", "E6~1", "-M", "3", "--words")
    assert code == 0
    records = doc["payload"]["records"]
    assert [r["depth"] for r in records] == [1, 2, 3]
    assert records[0]["word"] == [0]
    assert all(r["orbit_size"] == "51840" for r in records)
    code, doc = run(capsys, "permw", "E6~1", "-M", "3")
    assert "word" not in doc["payload"]["records"][0]


def test_verify_single(capsys):
    code, doc = run(capsys, "verify", "A4~2", "-M", "10")
    assert code == 0
    assert doc["payload"]["all_passed"] is True
    report = doc["payload"]["reports"][0]
    assert report["resolved_config"]["hvee_interp"] == "affine"
    statuses = {c["name"]: c["status"] for c in report["checks"]}
    assert statuses["census_vs_eta"] == "pass"
    assert statuses["phase_cancellation"] == "pass"


def test_verify_all_small(capsys):
    code, doc = run(capsys, "verify", "--all", "--max-rank", "2", "-M", "6")
    assert code == 0
    names = [r["algebra"] for r in doc["payload"]["reports"]]
    assert "A1~1" in names and "A2~2" in names and "C2~1" in names


def test_verify_missing_algebra_exit_2(capsys):
    assert main(["verify"]) == 2


def test_pretty_output_parses(capsys):
    code, doc = run(capsys, "list", "--twist", "3", "--pretty")
    assert code == 0
    assert doc["payload"]["algebras"][0]["algebra"] == "D4~3"


def test_unknown_subcommand_raises_system_exit():
    with pytest.raises(SystemExit):
        main(["frobnicate"])
