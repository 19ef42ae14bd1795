import json

import pytest

from rmproduct import cli

FAST_ARGS = [
    "--code", "rm(2,1)xrm(1,1)", "--decoder", "soft", "--iterations", "1",
    "--ebno", "8:9:1", "--min-errors", "5", "--max-frames", "400", "--seed", "7",
]


def test_parse_ebno_range_inclusive():
    assert cli.parse_ebno_grid("2:6:0.5") == tuple(2.0 + 0.5 * i for i in range(9))
    assert cli.parse_ebno_grid("3:3:1") == (3.0,)


def test_parse_ebno_comma_list():
    assert cli.parse_ebno_grid("1.5,2,4") == (1.5, 2.0, 4.0)
    assert cli.parse_ebno_grid("") == ()


def test_parse_ebno_rejects_bad_specs():
    for bad in ("1:2:0", "1:2:-1", "1:2", "1:2:3:4", "a,b"):
        with pytest.raises(ValueError):
            cli.parse_ebno_grid(bad)


def test_help_documents_every_flag(capsys):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["--help"])
    assert excinfo.value.code == 0
    text = capsys.readouterr().out
    for flag in ("--code", "--decoder", "--iterations", "--ebno", "--min-errors",
                 "--max-frames", "--seed", "--workers", "--format", "--out"):
        assert flag in text


def test_unparseable_flags_exit_nonzero(capsys):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["--code", "rm(2,1)", "--ebno", "1:2:1", "--decoder", "bogus"])
    assert excinfo.value.code != 0
    assert capsys.readouterr().err


def test_missing_required_flags_exit_nonzero(capsys):
    with pytest.raises(SystemExit) as excinfo:
        cli.main([])
    assert excinfo.value.code != 0
    assert capsys.readouterr().err


def test_bad_descriptor_reports_error(capsys):
    code = cli.main(["--code", "rm(3,2)xrm(2,1)", "--ebno", "1:1:1",
                     "--min-errors", "1", "--max-frames", "10"])
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_bad_ebno_reports_error(capsys):
    code = cli.main(["--code", "rm(2,1)xrm(1,1)", "--ebno", "1:2:0"])
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_csv_sweep_to_stdout(capsys):
    assert cli.main(FAST_ARGS) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("ebno_db,snr_db,frames,")
    assert len(lines) == 3  # header + two grid points


def test_csv_sweep_to_file(tmp_path):
    out = tmp_path / "sweep.csv"
    assert cli.main(FAST_ARGS + ["--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 3
    assert float(lines[1].split(",")[0]) == 8.0


def test_json_sweep_to_file(tmp_path):
    out = tmp_path / "sweep.json"
    assert cli.main(FAST_ARGS + ["--format", "json", "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["config"]["code"] == "rm(2,1)xrm(1,1)"
    assert len(payload["points"]) == 2


def test_unwritable_output_path_reports_error(tmp_path, capsys):
    missing_dir = tmp_path / "no" / "such" / "dir" / "out.csv"
    assert cli.main(FAST_ARGS + ["--out", str(missing_dir)]) == 2
    assert "error:" in capsys.readouterr().err


def test_workers_auto_accepted(capsys):
    assert cli.main(FAST_ARGS + ["--workers", "auto"]) == 0
    capsys.readouterr()


def test_workers_validation():
    assert cli._parse_workers("3") == 3
    assert cli._parse_workers("auto") >= 1
    with pytest.raises(ValueError):
        cli._parse_workers("0")


def test_large_bfmap_code_constructs_and_runs(capsys):
    # the (2^14, 84) construction: a couple of near-noiseless frames end to end
    code = cli.main([
        "--code", "rm(11,1)xrm(3,2):bfmap", "--decoder", "soft", "--iterations", "1",
        "--ebno", "6", "--min-errors", "1", "--max-frames", "4", "--seed", "3",
    ])
    assert code == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 2
    assert int(lines[1].split(",")[2]) == 4  # frames column
