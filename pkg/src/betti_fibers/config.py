"""FiberConfig: enumeration limits, parallelism and rendering choices."""

from __future__ import annotations

import json
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any

from .errors import ConfigError

DEFAULT_ENUMERATION_CAP = 1_000_000


@dataclass
class FiberConfig:
    """Tunables shared by the library entry points and the CLI."""

    # Refusal threshold for every enumerating operation
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP

    # 0 = serial
    workers: int = 0

    # Rendering
    ascii_glyphs: bool = False

    # Crosscheck sweep bounds
    crosscheck_max_n: int = 4
    crosscheck_max_entry: int = 3

    # `count --method brute` refuses curves longer than this
    brute_force_max_n: int = 6

    # JSONL mismatch log for crosscheck (None = no file)
    report_file: Path | None = None

    def __post_init__(self) -> None:
        if self.enumeration_cap < 1:
            raise ValueError(f"enumeration_cap must be >= 1, got {self.enumeration_cap}")
        if self.workers < 0:
            raise ValueError(f"workers must be >= 0, got {self.workers}")
        if self.crosscheck_max_n < 1:
            raise ValueError(f"crosscheck_max_n must be >= 1, got {self.crosscheck_max_n}")
        if self.crosscheck_max_entry < 0:
            raise ValueError(
                f"crosscheck_max_entry must be >= 0, got {self.crosscheck_max_entry}"
            )
        if self.brute_force_max_n < 0:
            raise ValueError(f"brute_force_max_n must be >= 0, got {self.brute_force_max_n}")
        if self.report_file is not None:
            self.report_file = Path(self.report_file)

    def with_overrides(self, **overrides: Any) -> FiberConfig:
        """Copy with every non-None override applied (CLI flags win over the file)."""
        known = {f.name for f in fields(self)}
        changes = {k: v for k, v in overrides.items() if v is not None and k in known}
        return replace(self, **changes)


def load_config(path: Path) -> FiberConfig:
    """Read a JSON config file into a FiberConfig."""
    from dacite import Config, DaciteError, from_dict

    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError(f"config {path} must hold a JSON object")

    try:
        return from_dict(
            data_class=FiberConfig,
            data=data,
            config=Config(cast=[Path], strict=True),
        )
    except (DaciteError, ValueError) as exc:
        raise ConfigError(f"invalid config {path}: {exc}") from exc
