import json

from betti_fibers.config import FiberConfig
from betti_fibers.core import BettiCurve
from betti_fibers.crosscheck import (
    METHODS,
    CurveReport,
    check_curve,
    curve_grid,
    format_report,
    run_crosscheck,
)

from conftest import curve


def test_curve_grid_order_and_size():
    grid = curve_grid(2, 1)
    assert [str(b) for b in grid] == ["0", "1", "0,0", "0,1", "1,0", "1,1"]
    assert len(curve_grid(4, 3)) == 4 + 16 + 64 + 256


def test_check_curve_232():
    report = check_curve(curve("2,3,2"), cap=1000)
    assert report.counts == {m: 13 for m in METHODS}
    assert report.sigma_roundtrip and report.inverse_roundtrip
    assert report.ok
    assert report.mismatches() == []


def test_check_curve_records_refusal():
    report = check_curve(curve("2,3,2"), cap=3)
    assert not report.ok
    assert report.error.startswith("EnumerationCapError")


def test_mismatches_name_the_failing_check():
    report = CurveReport(
        curve=curve("1,1"),
        counts={"recursion": 2, "brute": 2, "kostant": 3},
        sigma_roundtrip=False,
    )
    records = report.mismatches()
    assert [r.check for r in records] == ["kostant", "sigma_roundtrip"]
    assert records[0].expected == 2 and records[0].actual == 3


def test_run_crosscheck_serial_and_parallel_agree():
    serial = run_crosscheck(FiberConfig(crosscheck_max_n=3, crosscheck_max_entry=2))
    parallel = run_crosscheck(FiberConfig(crosscheck_max_n=3, crosscheck_max_entry=2, workers=4))
    assert [r.curve for r in serial] == [r.curve for r in parallel]
    assert [r.counts for r in serial] == [r.counts for r in parallel]
    assert all(r.ok for r in serial)


def test_run_crosscheck_writes_failures(tmp_path):
    report_file = tmp_path / "out" / "mismatches.jsonl"
    config = FiberConfig(
        crosscheck_max_n=2, crosscheck_max_entry=1, enumeration_cap=1, report_file=report_file,
    )
    reports = run_crosscheck(config)
    failing = [r for r in reports if not r.ok]
    assert failing
    lines = report_file.read_text(encoding="utf-8").splitlines()
    assert len(lines) == sum(len(r.mismatches()) for r in failing)
    first = json.loads(lines[0])
    assert {"timestamp", "curve", "check", "expected", "actual", "notes"} <= first.keys()


def test_format_report():
    reports = [
        check_curve(BettiCurve((1,)), cap=100),
        CurveReport(curve=curve("1,1"), counts={"recursion": 2, "kostant": 3}),
    ]
    text = format_report(reports)
    lines = text.splitlines()
    assert lines[0].split() == ["curve", *METHODS, "sigma", "verdict"]
    assert lines[1].split() == ["1", "1", "1", "1", "1", "1", "ok", "pass"]
    assert lines[2].split() == ["1,1", "2", "-", "3", "-", "-", "ok", "FAIL"]
    assert lines[-1] == "1/2 curves pass"


def test_check_curve_skips_brute_force_past_limit():
    report = check_curve(curve("1,1,1"), cap=100, brute_max_n=2)
    assert "brute" not in report.counts
    assert report.counts["recursion"] == 4
    assert report.ok


def test_run_crosscheck_honours_brute_force_limit():
    reports = run_crosscheck(FiberConfig(crosscheck_max_n=3, crosscheck_max_entry=1, brute_force_max_n=2))
    assert all(r.ok for r in reports)
    assert ["brute" in r.counts for r in reports] == [len(r.curve) <= 2 for r in reports]
