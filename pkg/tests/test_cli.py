"""Command-line interface: dispatch, schemas, exit codes, round trips."""

import json

import pytest

from cremona.cli import main
from cremona.ratmap import parse_ratmap


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, (json.loads(out) if out.strip().startswith("{") else None)


def test_compose_identity(capsys):
    code, data = run_json(capsys, "compose",
                          "--f", "y*z:x*z:x*y", "--g", "y*z:x*z:x*y")
    assert code == 0
    assert data["is_identity"] and data["degree"] == 1
    assert data["tool_version"] and data["command"] == "compose"
    assert data["field_discriminant"] == 0


def test_classify_quadratic(capsys):
    code, data = run_json(capsys, "classify-quadratic", "--f", "x*y:z^2:y*z")
    assert code == 0 and data["stratum"] == "Sigma2"


def test_weyl_classify(capsys):
    code, data = run_json(capsys, "weyl", "--n", "10",
                          "--standard", "--classify")
    assert code == 0
    assert data["salem_class"] == "Salem"
    assert abs(data["dominant_root"] - 1.17628081) < 1e-6


def test_invert_failure_exit_code(capsys):
    code, _ = run(capsys, "invert", "--f", "x^2:y^2:z^2", "--degree", "2")
    assert code == 1


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["not-a-command"])
    assert exc.value.code == 2


def test_growth_csv(capsys):
    code, out = run(capsys, "growth", "--f", "y*z:x*z:x*y",
                    "--n", "4", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "k,degree"
    assert lines[1] == "1,2" and lines[2] == "2,1"


def test_map_round_trip(capsys):
    code, data = run_json(capsys, "invert", "--f",
                          "y^2*z : x^2*z + x*y^2 : x*y*z + y^3",
                          "--degree", "3")
    assert code == 0
    reparsed = parse_ratmap(data["map"])
    assert reparsed == parse_ratmap("y*z^2 - x*y^2 : z^3 - x*y*z : x*z^2")


def test_catalog_verify(capsys):
    code, data = run_json(capsys, "catalog", "verify", "sigma")
    assert code == 0 and data["all_ok"]


def test_catalog_list(capsys):
    code, data = run_json(capsys, "catalog", "list")
    assert code == 0 and "sigma" in data["entries"]


def test_jung(capsys):
    code, data = run_json(capsys, "jung", "--f", "y, y^2 - x")
    assert code == 0 and data["is_henon"] and data["dyn_degree"] == 2


def test_noether(capsys):
    code, data = run_json(capsys, "noether", "--nu", "2")
    assert code == 0 and data["profiles"] == [[1, 1, 1]]


def test_orbit_csv(tmp_path, capsys):
    out = tmp_path / "cloud.csv"
    code, _ = run(capsys, "orbit", "--family", "fab",
                  "--alpha", "exp(2*i*sqrt(3))", "--beta", "exp(2*i*sqrt(2))",
                  "--seed", "1e-4*i,1e-4*i", "--n", "10",
                  "--proj", "omega1", "--out", str(out))
    assert code == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "n,u,v" and len(lines) == 11
