import json
import statistics

import pytest

from kleincut.cli import main
from kleincut.complexity import large_s_expansion, log_factor
from kleincut.harness import (
    SweepSpec,
    emit_complexity_surface,
    read_rows,
    run_single,
    run_sweep,
    soft_report,
    summarize,
    sweep_manifest,
    write_rows,
)


def test_run_single_envelope_and_determinism():
    row = run_single(4, 1.0, 2.0, 1e-3, 0.8, 0.55, seed=1)
    assert row.queries <= 465
    assert row.gap_norm <= 1e-3
    assert row.theorem_n == 465
    again = run_single(4, 1.0, 2.0, 1e-3, 0.8, 0.55, seed=1)
    assert row == again


def test_run_single_d1_dispatch():
    row = run_single(1, 1.0, 1.0, 1e-2, 0.4, 0.55, seed=0)
    assert row.gap_norm <= 1e-2
    assert row.queries <= row.theorem_n


def test_sweep_rows_and_summary():
    spec = SweepSpec(swept="d", values=(2, 3), num_seeds=4)
    rows, summaries = run_sweep(spec)
    assert len(rows) == 8
    assert rows == sorted(rows, key=lambda r: (r.value, r.seed))
    for row in rows:
        assert row.queries <= row.theorem_n
        assert row.gap_norm <= 1e-3
    # summary matches an independent recomputation
    for summary in summaries:
        group = [r.queries for r in rows if r.value == summary.value]
        assert summary.mean_queries == pytest.approx(statistics.fmean(group), abs=1e-12)
        assert summary.std_queries == pytest.approx(statistics.stdev(group), abs=1e-12)
        assert summary.max_queries == max(group)


def test_single_value_single_seed_reduces_to_run_single():
    spec = SweepSpec(swept="s", values=(1.5,), num_seeds=1, base_seed=3)
    rows, _ = run_sweep(spec)
    direct = run_single(4, 1.0, 1.5, 1e-3, 0.8, 0.55, seed=3, sweep="s", value=1.5)
    assert rows == [direct]


def test_accuracy_sweep_means_increase(tmp_path):
    spec = SweepSpec(swept="eps", values=(1e-1, 1e-2, 1e-3), d=3, s=1.5, num_seeds=5)
    _, summaries = run_sweep(spec)
    means = [s.mean_queries for s in sorted(summaries, key=lambda s: -s.value)]
    assert means[0] < means[1] < means[2]


def test_csv_round_trip(tmp_path):
    rows, _ = run_sweep(SweepSpec(swept="d", values=(2,), num_seeds=3))
    path = tmp_path / "rows.csv"
    write_rows(path, rows)
    assert read_rows(path) == rows
    header = path.read_text().splitlines()[0]
    assert header == "sweep,value,seed,queries,gap_norm,theorem_n,terminated_by"


def test_emit_complexity_surface(tmp_path):
    path = tmp_path / "surface.csv"
    emit_complexity_surface([2.0], [1e-3], path)
    lines = path.read_text().splitlines()
    assert lines[0] == "s,eps,log_factor,large_s_expansion"
    _, _, lf, exp = lines[1].split(",")
    assert float(lf) == pytest.approx(11.6005669, abs=1e-6)
    assert float(exp) == large_s_expansion(2.0, 1e-3)

    path4 = tmp_path / "surface4.csv"
    emit_complexity_surface([4.0], [1e-3], path4)
    _, _, lf4, exp4 = path4.read_text().splitlines()[1].split(",")
    assert abs(float(lf4) - float(exp4)) <= 2e-7

    with pytest.raises(ValueError):
        emit_complexity_surface([], [1e-3], tmp_path / "bad.csv")


def test_soft_report_only_for_reference_protocol():
    spec = SweepSpec(swept="d", values=(4,), num_seeds=2)
    summaries = summarize(
        [run_single(4, 1.0, 2.0, 1e-3, 0.8, 0.55, seed=s, sweep="d", value=4.0) for s in (0, 1)]
    )
    # in-band means produce no notes; a fabricated outlier is flagged
    assert soft_report(spec, summaries) == []
    outlier = summaries[0].__class__(
        sweep="d", value=4.0, mean_queries=500.0, std_queries=0.0, max_queries=500, theorem_n=465
    )
    assert len(soft_report(spec, [outlier])) == 1
    off_protocol = SweepSpec(swept="d", values=(4,), num_seeds=2, tau=0.5)
    assert soft_report(off_protocol, [outlier]) == []


def test_manifest_contents():
    spec = SweepSpec(swept="s", values=(1.0, 2.0), num_seeds=3, base_seed=10)
    manifest = sweep_manifest(spec)
    assert manifest["seeds"] == list(range(10, 16))
    by_value = {run["value"]: run for run in manifest["runs"]}
    assert by_value[2.0]["N"] == 465
    assert by_value[2.0]["R_s"] == pytest.approx(0.9640276, abs=1e-7)
    assert by_value[1.0]["eta"] == pytest.approx(1e-3)


def test_cli_sweep_writes_csv_and_manifest(tmp_path, capsys):
    out = tmp_path / "out.csv"
    code = main(
        [
            "--sweep", "d", "--values", "2,3", "--seeds", "2",
            "--r", "1.5", "--out", str(out),
        ]
    )
    assert code == 0
    rows = read_rows(out)
    assert len(rows) == 4
    manifest = json.loads((tmp_path / "out.csv.manifest.json").read_text())
    assert manifest["swept"] == "d"
    assert "mean" in capsys.readouterr().out


def test_cli_surface_mode(tmp_path):
    out = tmp_path / "surface.csv"
    assert main(["--surface", "--values", "1,2", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "s,eps,log_factor,large_s_expansion"
    assert len(lines) == 1 + 2 * 4  # two s values, four default accuracies


def test_cli_validation_errors(tmp_path):
    assert main(["--surface"]) == 2
    assert main(["--sweep", "d"]) == 2
