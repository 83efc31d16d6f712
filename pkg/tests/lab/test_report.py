"""Tests for property reports and their rendering"""

import csv

from robustlab.lab import PropertyReport, format_report_details, format_report_table, write_reports_csv


def _report(pid, metric, violation, tolerance=0.0):
    return PropertyReport(property_id=pid, metric=metric, samples=10, max_violation=violation,
                          tolerance=tolerance, witness=[1.0, 2.0], detail="d")


def test_passed_is_derived():
    """Test: passed follows max_violation <= tolerance, whatever is given"""
    assert _report("P1", "m", 0.0).passed
    assert not _report("P1", "m", 0.1, tolerance=0.01).passed
    forced = PropertyReport(property_id="P2", metric="m", samples=1, max_violation=1.0,
                            tolerance=0.0, passed=True)
    assert not forced.passed
    assert forced.mark == "✗"


def test_table_rows_and_columns():
    """Test: One row per metric, properties in table order"""
    reports = [_report("P3", "ag", 1.0), _report("P1", "ag", 0.0), _report("P1", "new(nu=3)", 0.0)]
    lines = format_report_table(reports).splitlines()
    assert lines[0].split() == ["metric", "P1", "P3"]
    assert lines[2].split() == ["ag", "✓", "✗"]
    assert lines[3].split() == ["new(nu=3)", "✓"]


def test_details_and_csv(tmp_path):
    """Test: Detail lines and CSV rows"""
    reports = [_report("P6", "ag", 0.5), _report("P6", "traditional", 0.0)]
    assert format_report_details(reports).count("\n") == 2

    path = tmp_path / "reports.csv"
    write_reports_csv(reports, path)
    with open(path, encoding="utf-8", newline="") as f:
        rows = list(csv.reader(f))
    assert rows[0] == ["property", "metric", "samples", "max_violation", "tolerance",
                       "passed", "witness", "detail"]
    assert rows[1][:6] == ["P6", "ag", "10", "0.5", "0", "0"]
    assert rows[2][5] == "1"
    assert rows[1][6] == "1 2"
