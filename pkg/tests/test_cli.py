"""End-to-end CLI runs: generate, validate, sweep, and exit codes."""

import json

import pytest

from agol_links.cli import EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, main


def _generate(tmp_path, *extra):
    out = tmp_path / "out"
    argv = ["generate", "--n", "4", "--l", "1", "--out", str(out), *extra]
    return main(argv), out


def test_generate_writes_all_artifacts(tmp_path, capsys):
    code, out = _generate(
        tmp_path, "--formats", "braid,pd,gauss,dt,svg"
    )
    assert code == EXIT_OK
    for name in (
        "template.json",
        "diagram.braid",
        "diagram.pd",
        "diagram.gauss",
        "diagram.dt",
        "diagram.svg",
        "report.json",
    ):
        assert (out / name).exists(), name
    report = json.loads((out / "report.json").read_text())
    assert report["n"] == 4 and report["l"] == 1
    assert report["path_length"] == 14
    assert report["loop_census"] == {"2": 7, "3": 7}
    assert report["bound"]["passed"] is True
    assert report["components"] == 1
    assert report["bridge_upper_bound"] == 4
    assert report["crossing_census"] == report["bound"]["census"]
    printed = json.loads(capsys.readouterr().out)
    assert printed == report


def test_generate_is_deterministic(tmp_path):
    _, out1 = _generate(tmp_path / "a", "--formats", "braid,svg")
    _, out2 = _generate(tmp_path / "b", "--formats", "braid,svg")
    for name in ("template.json", "diagram.braid", "diagram.svg", "report.json"):
        assert (out1 / name).read_bytes() == (out2 / name).read_bytes()


def test_generate_uniform_slope_override(tmp_path):
    code, out = _generate(tmp_path, "--slope", "1", "--formats", "braid")
    assert code == EXIT_OK
    report = json.loads((out / "report.json").read_text())
    assert report["slopes"]["s_q"] == 1 and report["slopes"]["uniform"] is True
    assert report["crossing_census"] < 4000  # slope 1 shrinks the twist regions


def test_generate_slope_file(tmp_path):
    slopes = tmp_path / "slopes.json"
    slopes.write_text(json.dumps({"s_q": 2, "loops": {"0": 5}}))
    code, out = _generate(
        tmp_path, "--slope-file", str(slopes), "--formats", "braid"
    )
    assert code == EXIT_OK
    report = json.loads((out / "report.json").read_text())
    assert report["slopes"]["s_q"] == 2
    assert report["slopes"]["uniform"] is False


@pytest.mark.parametrize(
    "argv",
    [
        ["generate", "--n", "5", "--l", "2"],  # l does not divide n
        ["generate", "--n", "3", "--l", "1"],  # n too small
        ["generate", "--n", "4", "--l", "0"],
        ["generate", "--n", "4", "--l", "1", "--slope", "0"],
        ["generate", "--n", "4", "--l", "1", "--formats", "png"],
        ["sweep", "--sweep", "nonsense"],
        ["sweep", "--sweep", "6:4"],
    ],
)
def test_usage_errors_exit_2(argv, tmp_path, capsys):
    assert main(argv + ["--out", str(tmp_path)] if argv[0] == "generate" else argv) == EXIT_USAGE
    err = capsys.readouterr().err
    assert json.loads(err)["error"] == "usage"


def test_slope_and_slope_file_conflict(tmp_path):
    slopes = tmp_path / "slopes.json"
    slopes.write_text("{}")
    code, _ = _generate(tmp_path, "--slope", "1", "--slope-file", str(slopes))
    assert code == EXIT_USAGE


def test_validate_accepts_generated_template(tmp_path, capsys):
    _, out = _generate(tmp_path, "--formats", "braid")
    capsys.readouterr()
    assert main(["validate", str(out / "template.json")]) == EXIT_OK
    result = json.loads(capsys.readouterr().out)
    assert result["valid"] is True and result["problems"] == []


def test_validate_rejects_tampered_template(tmp_path, capsys):
    _, out = _generate(tmp_path, "--formats", "braid")
    data = json.loads((out / "template.json").read_text())
    data["monodromy_shift"] = 3
    path = tmp_path / "tampered.json"
    path.write_text(json.dumps(data))
    capsys.readouterr()
    assert main(["validate", str(path)]) == EXIT_VALIDATION
    result = json.loads(capsys.readouterr().out)
    assert result["valid"] is False
    assert any(p["pointer"] == "/monodromy_shift" for p in result["problems"])


def test_validate_rejects_unreadable_and_schema_errors(tmp_path, capsys):
    missing = tmp_path / "nope.json"
    assert main(["validate", str(missing)]) == EXIT_VALIDATION
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"n": 4}))
    capsys.readouterr()
    assert main(["validate", str(bad)]) == EXIT_VALIDATION
    assert json.loads(capsys.readouterr().out)["error"] == "schema"


def test_sweep_table(capsys):
    assert main(["sweep", "--sweep", "4:5", "--l", "all"]) == EXIT_OK
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].split("\t") == [
        "n", "l", "m", "crossings", "bound", "margin", "components"
    ]
    rows = [line.split("\t") for line in lines[1:]]
    # n=4 admits l in {1, 2, 4}; n=5 admits l in {1, 5}
    assert [(r[0], r[1]) for r in rows] == [
        ("4", "1"), ("4", "2"), ("4", "4"), ("5", "1"), ("5", "5")
    ]
    for r in rows:
        assert int(r[2]) == (2 * int(r[0]) - int(r[1])) * (int(r[0]) - 2)


def test_output_dir_env_var(tmp_path, monkeypatch, capsys):
    target = tmp_path / "env_out"
    monkeypatch.setenv("AGOL_LINKS_OUT", str(target))
    assert main(["generate", "--n", "4", "--l", "2", "--formats", "braid"]) == EXIT_OK
    assert (target / "report.json").exists()
