"""BettiCurve, Interval and Barcode values, plus the map from barcodes to Betti curves.

Intervals are half-open and 1-based: [i, j) = {i, ..., j-1}. A barcode does
not know its ambient length n; it is valid for every n >= max_death - 1.
"""

from __future__ import annotations

import json
from collections import Counter
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

from .errors import (
    BarOutOfRangeError,
    InvalidBettiCurveError,
    InvalidIntervalError,
    InvalidWeightError,
)

if TYPE_CHECKING:
    from .kostant import Weight


# ---------------------------------------------------------------------------
# Betti curves
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BettiCurve:
    """Dimension at each index 1..n. Trailing zeros are significant."""
    values: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        values = tuple(self.values)
        for v in values:
            if isinstance(v, bool) or not isinstance(v, int):
                raise InvalidBettiCurveError(f"Betti curve entries must be integers, got {v!r}")
            if v < 0:
                raise InvalidBettiCurveError(f"Betti curve entries must be >= 0, got {v}")
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, i: int) -> int:
        """0-based access; use `at(i)` for the 1-based index."""
        return self.values[i]

    def at(self, i: int) -> int:
        """Value at the 1-based index i."""
        return self.values[i - 1]

    def __add__(self, other: BettiCurve) -> BettiCurve:
        if len(other) != len(self):
            raise InvalidBettiCurveError(
                f"cannot add Betti curves of lengths {len(self)} and {len(other)}"
            )
        return BettiCurve(tuple(a + b for a, b in zip(self.values, other.values)))

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.values)

    # ----- Serialization -----

    @classmethod
    def parse(cls, text: str) -> BettiCurve:
        """Parse a comma-separated literal such as "2,3,2" ("" is the empty curve)."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(part) for part in text.split(",")))
        except ValueError as exc:
            raise InvalidBettiCurveError(f"malformed Betti curve literal {text!r}") from exc

    def to_json(self) -> list[int]:
        return list(self.values)

    @classmethod
    def from_json(cls, data: Any) -> BettiCurve:
        if not isinstance(data, list):
            raise InvalidBettiCurveError(f"Betti curve JSON must be an array, got {data!r}")
        return cls(tuple(data))


# ---------------------------------------------------------------------------
# Intervals and barcodes
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Interval:
    """The half-open integer interval [birth, death)."""
    birth: int
    death: int

    def __post_init__(self) -> None:
        if not (1 <= self.birth < self.death):
            raise InvalidIntervalError(
                f"interval [{self.birth},{self.death}) needs 1 <= birth < death"
            )

    @property
    def length(self) -> int:
        return self.death - self.birth

    def __contains__(self, i: int) -> bool:
        return self.birth <= i < self.death

    def __str__(self) -> str:
        return f"[{self.birth},{self.death})"


@dataclass(frozen=True)
class Barcode:
    """Multiset of intervals, stored canonically as sorted (interval, multiplicity) pairs.

    Build with `Barcode.from_counts`; two barcodes are equal iff their
    canonical forms are.
    """
    bars: tuple[tuple[Interval, int], ...] = ()
    _index: dict[Interval, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        merged: Counter[Interval] = Counter()
        for interval, mult in self.bars:
            if mult < 0:
                raise InvalidIntervalError(f"negative multiplicity {mult} for {interval}")
            merged[interval] += mult
        canonical = tuple(sorted((iv, m) for iv, m in merged.items() if m > 0))
        object.__setattr__(self, "bars", canonical)
        object.__setattr__(self, "_index", dict(canonical))

    @classmethod
    def from_counts(cls, counts: Mapping[Interval, int] | Iterable[tuple[Interval, int]]) -> Barcode:
        items = counts.items() if isinstance(counts, Mapping) else counts
        return cls(tuple(items))

    @classmethod
    def from_triples(cls, triples: Iterable[Sequence[int]]) -> Barcode:
        return cls(tuple((Interval(b, d), m) for b, d, m in triples))

    # ----- Queries -----

    def __iter__(self) -> Iterator[tuple[Interval, int]]:
        return iter(self.bars)

    def __len__(self) -> int:
        """Number of distinct intervals."""
        return len(self.bars)

    def __bool__(self) -> bool:
        return bool(self.bars)

    def multiplicity(self, interval: Interval) -> int:
        return self._index.get(interval, 0)

    @property
    def size(self) -> int:
        """Number of bars counted with multiplicity."""
        return sum(m for _, m in self.bars)

    @property
    def max_death(self) -> int:
        return max((iv.death for iv, _ in self.bars), default=1)

    def bars_starting_at(self, birth: int) -> Barcode:
        return Barcode(tuple((iv, m) for iv, m in self.bars if iv.birth == birth))

    def triples(self) -> tuple[tuple[int, int, int], ...]:
        """Canonical (birth, death, multiplicity) triples; also the sort key."""
        return tuple((iv.birth, iv.death, m) for iv, m in self.bars)

    def sort_key(self) -> tuple[tuple[int, int, int], ...]:
        return self.triples()

    # ----- Multiset operations -----

    def union(self, other: Barcode) -> Barcode:
        """Disjoint union of multisets (multiplicities add)."""
        return Barcode(self.bars + other.bars)

    __or__ = union

    def difference(self, other: Barcode) -> Barcode:
        counts = Counter(dict(self.bars))
        for iv, m in other.bars:
            if counts[iv] < m:
                raise InvalidIntervalError(f"{other} is not a sub-multiset of {self}")
            counts[iv] -= m
        return Barcode.from_counts(counts)

    def shift(self, k: int) -> Barcode:
        """Move every bar k steps right (k may be negative)."""
        return Barcode(tuple((Interval(iv.birth + k, iv.death + k), m) for iv, m in self.bars))

    # ----- Serialization -----

    def to_json(self) -> list[list[int]]:
        return [list(t) for t in self.triples()]

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: Any) -> Barcode:
        if not isinstance(data, list):
            raise InvalidIntervalError(f"barcode JSON must be an array of triples, got {data!r}")
        triples = []
        for item in data:
            if (
                not isinstance(item, list)
                or len(item) != 3
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)
            ):
                raise InvalidIntervalError(
                    f"barcode entries must be [birth, death, multiplicity], got {item!r}"
                )
            if item[2] < 1:
                raise InvalidIntervalError(f"multiplicity must be >= 1, got {item!r}")
            triples.append(item)
        return cls.from_triples(triples)

    def __str__(self) -> str:
        if not self.bars:
            return "{}"
        return "{" + ", ".join(f"{iv}:{m}" for iv, m in self.bars) + "}"


EMPTY_BARCODE = Barcode()


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def check_in_range(barcode: Barcode, n: int) -> None:
    """Raise BarOutOfRangeError unless every bar lies inside [1, n+1)."""
    for iv, _ in barcode:
        if iv.death > n + 1:
            raise BarOutOfRangeError(
                f"bar {iv} exceeds the index range [1,{n + 1}) for n={n}",
                birth=iv.birth, death=iv.death, n=n,
            )


def betti_of(barcode: Barcode, n: int) -> BettiCurve:
    """Betti curve of length n: entry i sums the multiplicities of bars containing i."""
    if n < 0:
        raise InvalidBettiCurveError(f"n must be >= 0, got {n}")
    check_in_range(barcode, n)
    values = [0] * n
    for iv, m in barcode:
        for i in range(iv.birth, iv.death):
            values[i - 1] += m
    return BettiCurve(tuple(values))


def unit_barcode(beta: BettiCurve) -> Barcode:
    """beta_i copies of [i, i+1) for every i."""
    return Barcode(tuple((Interval(i, i + 1), v) for i, v in enumerate(beta, start=1)))


def overlay_bars(overlay: Sequence[int]) -> Barcode:
    """The unique multiset of bars born at 1 whose Betti curve is the non-increasing `overlay`."""
    heights = list(overlay) + [0]
    bars = []
    for k in range(1, len(heights)):
        drop = heights[k - 1] - heights[k]
        if drop < 0:
            raise InvalidBettiCurveError(f"overlay {tuple(overlay)} is not non-increasing")
        bars.append((Interval(1, k + 1), drop))
    return Barcode(tuple(bars))


def interval_to_root(interval: Interval, n: int | None = None) -> Weight:
    """[i, j) -> alpha_i + ... + alpha_{j-1} = e_i - e_j, as a weight of rank n."""
    from .kostant import Weight

    rank = interval.death - 1 if n is None else n
    if interval.death > rank + 1:
        raise BarOutOfRangeError(
            f"bar {interval} does not fit rank {rank}",
            birth=interval.birth, death=interval.death, n=rank,
        )
    return Weight(tuple(1 if i in interval else 0 for i in range(1, rank + 1)))


def root_to_interval(weight: Weight) -> Interval:
    """Inverse of `interval_to_root`: the support of a 0/1 weight with one run of ones."""
    coords = weight.simple_coords
    support = [i for i, z in enumerate(coords, start=1) if z]
    if (
        not support
        or any(coords[i - 1] != 1 for i in support)
        or support[-1] - support[0] + 1 != len(support)
    ):
        raise InvalidWeightError(f"weight {coords} is not a positive root")
    return Interval(support[0], support[-1] + 1)
