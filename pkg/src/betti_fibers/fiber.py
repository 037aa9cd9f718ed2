"""Counting and enumerating Barc(beta), the barcodes whose Betti curve is beta.

The count follows the overlay recursion

    |Barc(beta)| = sum over Y fitting beta of |Barc(beta - Y)|

where Y is non-increasing, starts at beta_1 and stays under beta. Each
beta - Y begins with a zero, which is stripped before recursing. Curves with
an interior zero factor into independent blocks before the memo lookup.
Both the overlays and the memo are filled without recursion, so curve
length is bounded only by time and memory.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import groupby
from operator import sub

from .config import DEFAULT_ENUMERATION_CAP
from .core import EMPTY_BARCODE, Barcode, BettiCurve, Interval, betti_of, overlay_bars
from .errors import EnumerationCapError, InvalidBettiCurveError

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Young overlays
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class YoungOverlay:
    """Non-increasing Y with y_1 = x_1 and y_i <= x_i, paired with its reference curve X."""
    values: tuple[int, ...]
    reference: BettiCurve

    def __post_init__(self) -> None:
        y, x = tuple(self.values), self.reference.values
        object.__setattr__(self, "values", y)
        if len(y) != len(x):
            raise InvalidBettiCurveError(f"overlay {y} and curve {x} differ in length")
        if not y:
            raise InvalidBettiCurveError("overlays need a nonempty reference curve")
        if y[0] != x[0]:
            raise InvalidBettiCurveError(f"overlay {y} must start at {x[0]}")
        if any(a < b for a, b in zip(y, y[1:])):
            raise InvalidBettiCurveError(f"overlay {y} is not non-increasing")
        if any(a < 0 or a > b for a, b in zip(y, x)):
            raise InvalidBettiCurveError(f"overlay {y} does not fit under {x}")

    @property
    def bars(self) -> Barcode:
        """The multiset of bars born at 1 with column heights Y."""
        return overlay_bars(self.values)

    @property
    def difference(self) -> BettiCurve:
        return BettiCurve(tuple(b - a for a, b in zip(self.values, self.reference.values)))

    @property
    def residual(self) -> BettiCurve:
        """beta - Y with its leading zero stripped: a curve of length n - 1."""
        return BettiCurve(self.difference.values[1:])


def _overlay_values(x: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Overlay sequences under x in lexicographically decreasing order.

    Odometer: lower the rightmost positive y_k (k >= 2) by one, then refill
    the columns after it as high as the constraints allow.
    """
    n = len(x)
    y = [x[0]]
    for i in range(1, n):
        y.append(min(y[-1], x[i]))
    last = n - 1
    while last >= 0 and y[last] == 0:
        last -= 1
    while True:
        yield tuple(y)
        if last < 1:
            return
        k = last
        y[k] -= 1
        # y[k-1] >= the old y[k] >= 1, so it stays positive
        last = k if y[k] else k - 1
        for i in range(k + 1, n):
            v = min(y[i - 1], x[i])
            if not v:
                break
            y[i] = v
            last = i


def young_overlays(beta: BettiCurve) -> list[YoungOverlay]:
    """All Y fitting under beta, lexicographically decreasing."""
    if not beta.values:
        raise InvalidBettiCurveError("young_overlays needs a nonempty Betti curve")
    return [YoungOverlay(y, beta) for y in _overlay_values(beta.values)]


def _residual(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(map(sub, x[1:], y[1:]))


def _zero_free_blocks(x: tuple[int, ...]) -> list[tuple[int, ...]]:
    if 0 not in x:
        return [x] if x else []
    return [tuple(block) for nonzero, block in groupby(x, key=bool) if nonzero]


def _residual_blocks(x: tuple[int, ...], y: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Zero-free blocks of the residual of a zero-free x under y."""
    try:
        p = y.index(0)
    except ValueError:
        p = len(y)
    # Past column p the residual is x itself
    if x[1:p] == y[1:p]:
        return [x[p:]] if p < len(x) else []
    return _zero_free_blocks(tuple(map(sub, x[1:p], y[1:p])) + x[p:])


def split_at_zeros(beta: BettiCurve) -> list[BettiCurve]:
    """Maximal zero-free blocks of beta, left to right."""
    return [BettiCurve(block) for block in _zero_free_blocks(beta.values)]


# ---------------------------------------------------------------------------
# Counting
# ---------------------------------------------------------------------------

# Zero-free curve -> |Barc|. Shared by every thread; all writers store
# identical values for a key. Grows until clear_count_cache().
_COUNT_MEMO: dict[tuple[int, ...], int] = {}


def clear_count_cache() -> None:
    """Drop every memoized count. Long sessions over many curves should call this now and then."""
    _COUNT_MEMO.clear()


def count_cache_size() -> int:
    return len(_COUNT_MEMO)


def _fill(root: tuple[int, ...]) -> None:
    """Memoize |Barc(root)| for a zero-free root, children first, without recursion."""
    stack = [root]
    while stack:
        x = stack[-1]
        if x in _COUNT_MEMO:
            stack.pop()
            continue
        missing: dict[tuple[int, ...], None] = {}
        total = 0
        for y in _overlay_values(x):
            blocks = _residual_blocks(x, y)
            for block in blocks:
                if block not in _COUNT_MEMO:
                    missing[block] = None
            if not missing:
                total += math.prod(_COUNT_MEMO[block] for block in blocks)
        if missing:
            # Shortest on top: each block then finds its children done
            stack.extend(sorted(missing, key=len, reverse=True))
            continue
        _COUNT_MEMO[x] = total
        stack.pop()


def _count(x: tuple[int, ...]) -> int:
    blocks = _zero_free_blocks(x)
    for block in blocks:
        if block not in _COUNT_MEMO:
            _fill(block)
    return math.prod(_COUNT_MEMO[block] for block in blocks)


def _count_parallel(x: tuple[int, ...], workers: int) -> int:
    total = 1
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for block in _zero_free_blocks(x):
            branches = [_residual(block, y) for y in _overlay_values(block)]
            total *= sum(pool.map(_count, branches))
    return total


def count_barcodes(beta: BettiCurve, *, workers: int = 0) -> int:
    """|Barc(beta)|, exact. The empty curve has exactly one barcode (the empty one).

    With workers >= 1 the top-level overlay branches run on a thread pool
    sharing the memo table.
    """
    if workers > 0 and beta.values:
        count = _count_parallel(beta.values, workers)
    else:
        count = _count(beta.values)
    logger.debug("|Barc(%s)| = %d (memo holds %d curves)", beta, count, len(_COUNT_MEMO))
    return count


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def _enumerate(
    x: tuple[int, ...], memo: dict[tuple[int, ...], list[Barcode]],
) -> list[Barcode]:
    """Barcodes of x built block by block; zeros in x only move the blocks."""
    found = [EMPTY_BARCODE]
    offset = 0
    for nonzero, group in groupby(x, key=bool):
        block = tuple(group)
        if nonzero:
            shifted = [b.shift(offset) for b in _enumerate_block(block, memo)]
            found = [a | b for a in found for b in shifted]
        offset += len(block)
    return found


def _enumerate_block(
    x: tuple[int, ...], memo: dict[tuple[int, ...], list[Barcode]],
) -> list[Barcode]:
    found = memo.get(x)
    if found is not None:
        return found
    out: list[Barcode] = []
    for y in _overlay_values(x):
        born_at_one = overlay_bars(y)
        for rest in _enumerate(_residual(x, y), memo):
            out.append(born_at_one | rest.shift(1))
    memo[x] = out
    return out


def enumerate_barcodes(beta: BettiCurve, *, cap: int = DEFAULT_ENUMERATION_CAP) -> list[Barcode]:
    """Every barcode with Betti curve beta, once each, in canonical order."""
    count = count_barcodes(beta)
    if count > cap:
        raise EnumerationCapError(f"Barc({beta})", count, cap)
    logger.debug("enumerating %d barcodes of %s", count, beta)
    return sorted(_enumerate(beta.values, {}), key=Barcode.sort_key)


def fiber_classes(
    beta: BettiCurve, *, cap: int = DEFAULT_ENUMERATION_CAP,
) -> dict[YoungOverlay, list[Barcode]]:
    """Barc(beta) grouped by the multiset of bars born at 1, keyed by overlay."""
    classes: dict[YoungOverlay, list[Barcode]] = {y: [] for y in young_overlays(beta)}
    by_bars = {y.bars: y for y in classes}
    for barcode in enumerate_barcodes(beta, cap=cap):
        classes[by_bars[barcode.bars_starting_at(1)]].append(barcode)
    return classes


# ---------------------------------------------------------------------------
# Brute-force oracle
# ---------------------------------------------------------------------------

def brute_force_barcodes(beta: BettiCurve) -> list[Barcode]:
    """Independent oracle: search multiplicity assignments over all intervals in [1, n+1).

    Intervals are visited in (birth, death) order; each multiplicity is bounded
    by the minimum of beta over the interval. Meant for n <= 6 and small entries.
    """
    n = len(beta)
    x = beta.values
    intervals = [Interval(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 2)]
    bounds = [min(x[iv.birth - 1 : iv.death - 1]) for iv in intervals]
    residual = list(x)
    chosen: list[tuple[Interval, int]] = []
    found: list[Barcode] = []

    def assign(k: int) -> None:
        if k == len(intervals):
            barcode = Barcode(tuple(chosen))
            if betti_of(barcode, n) == beta:
                found.append(barcode)
            return
        iv = intervals[k]
        for m in range(bounds[k] + 1):
            if any(residual[i - 1] < m for i in range(iv.birth, iv.death)):
                break
            for i in range(iv.birth, iv.death):
                residual[i - 1] -= m
            last_from_birth = k + 1 == len(intervals) or intervals[k + 1].birth != iv.birth
            # Nothing born later can cover index `birth` again
            if not last_from_birth or residual[iv.birth - 1] == 0:
                if m:
                    chosen.append((iv, m))
                assign(k + 1)
                if m:
                    chosen.pop()
            for i in range(iv.birth, iv.death):
                residual[i - 1] += m

    assign(0)
    return sorted(found, key=Barcode.sort_key)
