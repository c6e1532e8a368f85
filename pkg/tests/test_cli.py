"""Command-line interface: outputs, exit codes, determinism."""

import json

import pytest

from simplexpoly.cli import EX_CONFIG, EX_ERRATUM, EX_FAIL, EX_OK, EX_USAGE, main


SMALL_CONFIG = {
    "jobs": 1,
    "suites": {
        "ladder1d": {"degree": 3, "params": [["0", "0"], ["1/3", "-1/2"]]},
        "three-term": {"degree": 2, "params": [["0", "0", "0", "0", "0", "0"]]},
    },
}


@pytest.fixture
def config_path(tmp_path):
    path = tmp_path / "sweep.json"
    path.write_text(json.dumps(SMALL_CONFIG))
    return str(path)


def test_print_poly_simplex(capsys):
    code = main(
        ["print-poly", "--family", "simplex", "--index", "1,0,0",
         "--params", "0,0,0,0,0,0"]
    )
    assert code == EX_OK
    assert capsys.readouterr().out.strip() == "4 * x^1 - 1"


def test_print_poly_rational_params(capsys):
    code = main(
        ["print-poly", "--family", "jacobi", "--index", "1", "--params", "1/3,1/2"]
    )
    assert code == EX_OK
    assert capsys.readouterr().out.strip() == "17/6 * x^1 - 3/2"


def test_print_poly_monic(capsys):
    code = main(
        ["print-poly", "--family", "triangle", "--index", "1,0",
         "--params", "0,0,0,0", "--monic"]
    )
    assert code == EX_OK
    assert capsys.readouterr().out.strip() == "1 * x^1 - 1/3"


def test_verify_passes_and_writes_report(config_path, tmp_path, capsys):
    out = tmp_path / "report.json"
    code = main(
        ["verify", "--suite", "ladder1d", "--config", config_path, "--out", str(out)]
    )
    assert code == EX_OK
    payload = json.loads(out.read_text())
    assert payload["summary"]["totals"]["fail"] == 0
    assert payload["summary"]["erratum_candidates"] == []
    statuses = {r["status"] for r in payload["reports"]}
    assert statuses <= {"pass", "not_applicable"}
    assert "suite ladder1d" in capsys.readouterr().out


def test_verify_deterministic_reports(config_path, tmp_path):
    out1 = tmp_path / "r1.json"
    out2 = tmp_path / "r2.json"
    main(["verify", "--suite", "three-term", "--config", config_path, "--out", str(out1)])
    main(["verify", "--suite", "three-term", "--config", config_path, "--out", str(out2)])
    assert out1.read_bytes() == out2.read_bytes()


def test_verify_default_config_is_shipped(capsys):
    # smallest suite to keep runtime down
    code = main(["verify", "--suite", "three-term"])
    assert code == EX_OK
    assert "0 fail" in capsys.readouterr().out


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as err:
        main(["verify"])  # missing --suite
    assert err.value.code == EX_USAGE


def test_bad_params_exit_usage(capsys):
    code = main(
        ["print-poly", "--family", "simplex", "--index", "1,0,0", "--params", "0,0"]
    )
    assert code == EX_USAGE


def test_missing_config_exit_code(capsys):
    code = main(["verify", "--suite", "ladder1d", "--config", "/does/not/exist.json"])
    assert code == EX_CONFIG


def test_malformed_config_exit_code(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code = main(["verify", "--suite", "ladder1d", "--config", str(path)])
    assert code == EX_CONFIG


def test_config_missing_suite_section(tmp_path, capsys):
    path = tmp_path / "partial.json"
    path.write_text(json.dumps({"suites": {}}))
    code = main(["verify", "--suite", "ladder1d", "--config", str(path)])
    assert code == EX_CONFIG


def test_gram_csv_output(capsys, tmp_path):
    code = main(["gram", "--N", "0", "--params", "0,0,0,0,0,0"])
    assert code == EX_OK
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "index;0,0,0"
    assert out[1] == "0,0,0;0.166666666667"
    path = tmp_path / "g.csv"
    code = main(["gram", "--N", "1", "--params", "0,0,0,0,0,0", "--out", str(path)])
    assert code == EX_OK
    rows = path.read_text().splitlines()
    assert len(rows) == 5  # header + four members


def test_connect_alpha_json(capsys):
    code = main(
        ["connect", "--mode", "alpha", "--index", "1,0,0",
         "--params", "0,0,0,0,0,0", "--xi", "1/2"]
    )
    assert code == EX_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["reassembles_exactly"] is True
    assert [t["coeff"] for t in payload["terms"]] == ["8/9", "1/3"]


def test_connect_general_identity(capsys):
    code = main(
        ["connect", "--mode", "general", "--index", "0,1,0",
         "--params", "0,0,0,0,0,0", "--target", "0,0,0,0"]
    )
    assert code == EX_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["reassembles_exactly"] is True
    assert len(payload["terms"]) == 1 and payload["terms"][0]["coeff"] == "1"


def test_exit_code_constants():
    assert (EX_OK, EX_FAIL, EX_ERRATUM, EX_USAGE, EX_CONFIG) == (0, 1, 2, 64, 65)
