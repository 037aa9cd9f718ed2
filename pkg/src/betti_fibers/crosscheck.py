"""Sweep a grid of Betti curves and check that every counting path agrees.

For each curve: the overlay recursion, the brute-force oracle, the Kostant
partition function, Kostant-by-juggling, the number of juggling sequences
from delta(beta) to <0>, and both sigma round trips. Mismatches go to the
JSONL report file when one is configured.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from itertools import product

from .config import FiberConfig
from .core import BettiCurve
from .errors import BettiFibersError, MismatchRecord, log_mismatch_jsonl
from .fiber import brute_force_barcodes, count_barcodes, enumerate_barcodes
from .juggling import (
    ZERO_STATE,
    differential,
    enumerate_sequences,
    kostant_via_juggling,
    sigma,
    sigma_inverse,
)
from .kostant import kostant_count, weight_of_betti

logger = logging.getLogger(__name__)

_MAX_SWEEP_WORKERS = 10

METHODS = ("recursion", "brute", "kostant", "juggling", "sequences")


@dataclass
class CurveReport:
    """Results of every check on one curve."""
    curve: BettiCurve
    counts: dict[str, int] = field(default_factory=dict)
    sigma_roundtrip: bool = True      # sigma_inverse(sigma(B)) == B on the fiber
    inverse_roundtrip: bool = True    # sigma(sigma_inverse(T)) == T on JS(delta, 0, n)
    error: str = ""

    @property
    def ok(self) -> bool:
        return (
            not self.error
            and len(set(self.counts.values())) == 1
            and self.sigma_roundtrip
            and self.inverse_roundtrip
        )

    def mismatches(self) -> list[MismatchRecord]:
        curve = list(self.curve.values)
        expected = self.counts.get("recursion")
        records = [
            MismatchRecord(curve=curve, check=method, expected=expected, actual=count)
            for method, count in self.counts.items()
            if count != expected
        ]
        if not self.sigma_roundtrip:
            records.append(MismatchRecord(curve, "sigma_roundtrip", True, False))
        if not self.inverse_roundtrip:
            records.append(MismatchRecord(curve, "inverse_roundtrip", True, False))
        if self.error:
            records.append(MismatchRecord(curve, "error", None, self.error))
        return records


def curve_grid(max_n: int, max_entry: int) -> list[BettiCurve]:
    """Every curve of length 1..max_n with entries in 0..max_entry, by length then lexicographic."""
    return [
        BettiCurve(values)
        for n in range(1, max_n + 1)
        for values in product(range(max_entry + 1), repeat=n)
    ]


def check_curve(beta: BettiCurve, cap: int, *, brute_max_n: int | None = None) -> CurveReport:
    """Run every check on beta. Brute force is skipped for curves longer than brute_max_n."""
    report = CurveReport(curve=beta)
    n = len(beta)
    try:
        report.counts["recursion"] = count_barcodes(beta)
        fiber = enumerate_barcodes(beta, cap=cap)
        if brute_max_n is None or n <= brute_max_n:
            report.counts["brute"] = len(brute_force_barcodes(beta))
        report.counts["kostant"] = kostant_count(weight_of_betti(beta))
        report.counts["juggling"] = kostant_via_juggling(weight_of_betti(beta), cap=cap)
        sequences = enumerate_sequences(differential(beta).state, ZERO_STATE, n, cap=cap)
        report.counts["sequences"] = len(sequences)
        report.sigma_roundtrip = all(sigma_inverse(sigma(b, n)) == b for b in fiber)
        report.inverse_roundtrip = all(sigma(sigma_inverse(t), n) == t for t in sequences)
    except BettiFibersError as exc:
        report.error = f"{type(exc).__name__}: {exc}"
    return report


def run_crosscheck(config: FiberConfig) -> list[CurveReport]:
    """Check the configured grid; reports come back in grid order whatever the worker count."""
    grid = curve_grid(config.crosscheck_max_n, config.crosscheck_max_entry)
    cap, brute_max_n = config.enumeration_cap, config.brute_force_max_n
    logger.debug("crosscheck over %d curves (workers=%d)", len(grid), config.workers)

    if config.workers > 0:
        max_workers = min(config.workers, os.cpu_count() or 4, _MAX_SWEEP_WORKERS)
        results: dict[BettiCurve, CurveReport] = {}
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            futures = {pool.submit(check_curve, beta, cap, brute_max_n=brute_max_n): beta for beta in grid}
            for future in as_completed(futures):
                results[futures[future]] = future.result()
        reports = [results[beta] for beta in grid]
    else:
        reports = [check_curve(beta, cap, brute_max_n=brute_max_n) for beta in grid]

    if config.report_file is not None:
        for report in reports:
            for record in report.mismatches():
                log_mismatch_jsonl(config.report_file, record)
    return reports


def format_report(reports: list[CurveReport]) -> str:
    """One row per curve (counts per method, round trips, verdict) and a summary line."""
    header = ["curve", *METHODS, "sigma", "verdict"]
    table = [header]
    for r in reports:
        table.append([
            str(r.curve),
            *(str(r.counts.get(m, "-")) for m in METHODS),
            "ok" if r.sigma_roundtrip and r.inverse_roundtrip else "FAIL",
            "pass" if r.ok else "FAIL",
        ])
    widths = [max(len(row[c]) for row in table) for c in range(len(header))]
    lines = ["  ".join(cell.ljust(widths[c]) for c, cell in enumerate(row)).rstrip() for row in table]
    failed = sum(1 for r in reports if not r.ok)
    lines.append(f"{len(reports) - failed}/{len(reports)} curves pass")
    return "\n".join(lines) + "\n"
