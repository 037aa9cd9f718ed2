"""Exception hierarchy and JSONL mismatch records.

No imports from other betti_fibers modules (avoids circular deps). Every
domain failure derives from BettiFibersError; the CLI turns those into exit
code 1.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from datetime import datetime
from pathlib import Path
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from .juggling import Verdict


# ---------------------------------------------------------------------------
# Exceptions
# ---------------------------------------------------------------------------

class BettiFibersError(Exception):
    """Base class for invalid input and refused computations."""


class InvalidBettiCurveError(BettiFibersError):
    pass


class InvalidIntervalError(BettiFibersError):
    pass


class BarOutOfRangeError(BettiFibersError):
    """A bar does not fit inside [1, n+1)."""

    def __init__(self, message: str, birth: int = 0, death: int = 0, n: int = 0):
        super().__init__(message)
        self.birth = birth
        self.death = death
        self.n = n


class InvalidWeightError(BettiFibersError):
    pass


class InvalidJugglingStateError(BettiFibersError):
    pass


class InvalidSequenceError(BettiFibersError):
    """Carries the verdict that rejected the sequence."""

    def __init__(self, message: str, verdict: Verdict | None = None):
        super().__init__(message)
        self.verdict = verdict


class EnumerationCapError(BettiFibersError):
    """Enumeration refused: the result would exceed the configured cap.

    `count` is the exact size when known up front, otherwise a lower bound
    (`exact` is False).
    """

    def __init__(self, what: str, count: int, cap: int, exact: bool = True):
        size = f"{count}" if exact else f"more than {count}"
        super().__init__(
            f"refusing to enumerate {what}: {size} results exceed the cap of {cap}"
        )
        self.count = count
        self.cap = cap
        self.exact = exact


class ConfigError(BettiFibersError):
    pass


# ---------------------------------------------------------------------------
# Mismatch records
# ---------------------------------------------------------------------------

@dataclass
class MismatchRecord:
    """One failed identity within a crosscheck sweep."""
    curve: list[int]
    check: str            # e.g. "kostant", "sigma_roundtrip"
    expected: Any
    actual: Any
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def log_mismatch_jsonl(
    report_file: Path,
    record: MismatchRecord,
    *,
    extra: dict[str, Any] | None = None,
) -> dict[str, Any]:
    """Append a mismatch record to a JSONL file. Returns the record dict."""
    data: dict[str, Any] = {"timestamp": datetime.now().isoformat()}
    data.update(record.to_dict())
    if extra:
        data.update(extra)

    report_file.parent.mkdir(parents=True, exist_ok=True)
    with open(report_file, "a", encoding="utf-8") as f:
        f.write(json.dumps(data, default=str) + "\n")

    return data
