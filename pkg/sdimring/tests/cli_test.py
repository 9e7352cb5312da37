import json

from sdimring.cli import main
from sdimring.harness import canonical_specs


def test_analyze(tmp_path, capsys):
    report_path = tmp_path / "report.json"
    dot_path = tmp_path / "srg.gv"
    code = main(
        ["analyze", "--ring", "0,0,0", "--json", str(report_path), "--dot", str(dot_path)]
    )
    assert code == 0
    report = json.loads(report_path.read_text())
    assert report["computed"]["sdim"] == 3
    assert report["spec"] == [0, 0, 0]
    assert dot_path.read_text().count(" -- ") == 6
    out = capsys.readouterr().out
    assert "C6" in out and "PASS" in out


def test_analyze_reported_failures_keep_exit_zero(capsys):
    assert main(["analyze", "--ring", "1,0"]) == 0
    assert "FAIL" in capsys.readouterr().out


def test_analyze_with_oracle(capsys):
    assert main(["analyze", "--ring", "1,0", "--oracle"]) == 0
    assert "brute_sdim=2" in capsys.readouterr().out


def test_operational_errors():
    assert main(["analyze", "--ring", "two,two"]) == 2
    assert main(["--vertex-budget", "10", "analyze", "--ring", "2,2"]) == 2
    assert main(["--solver-node-budget", "0", "analyze", "--ring", "2,2"]) == 2


def test_sweep(tmp_path):
    out = tmp_path / "sweep.jsonl"
    code = main(["sweep", "--max-vertices", "14", "--out", str(out), "--no-progress"])
    assert code == 0
    lines = out.read_text().splitlines()
    assert len(lines) == len(canonical_specs(14))
    assert (tmp_path / "sweep.csv").exists()


def test_sweep_is_byte_identical(tmp_path, capsys):
    first, second = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    assert main(["sweep", "--max-vertices", "128", "--out", str(first), "--no-progress"]) == 0
    out = capsys.readouterr().out
    assert "mixed(m=0, n=3) vs reduced" in out
    assert "reduced(n=2)" in out
    assert main(
        ["sweep", "--max-vertices", "128", "--out", str(second), "--no-progress", "--jobs", "2"]
    ) == 0
    assert first.read_bytes() == second.read_bytes()
    assert len(first.read_text().splitlines()) == len(canonical_specs(128))


def test_sweep_case_filter(tmp_path):
    out = tmp_path / "reduced.jsonl"
    csv = tmp_path / "summary" / "reduced.csv"
    args = ["sweep", "--max-vertices", "30", "--case", "reduced", "--out", str(out)]
    assert main(args + ["--csv", str(csv), "--no-progress"]) == 0
    specs = [json.loads(line)["spec"] for line in out.read_text().splitlines()]
    assert specs == [[0] * n for n in (2, 3, 4, 5)]
    assert csv.exists()


def test_export(tmp_path):
    out = tmp_path / "base.json"
    assert main(
        ["export", "--ring", "0,0", "--what", "base", "--format", "json", "--out", str(out)]
    ) == 0
    data = json.loads(out.read_text())
    assert data == {"edges": [], "spec": [0, 0], "vertices": ["(0,1)", "(1,0)"]}
