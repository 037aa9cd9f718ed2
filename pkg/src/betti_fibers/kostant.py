"""Type A_n roots, weights in simple/standard coordinates, and the Kostant partition function.

The partition function here enumerates root multiplicities directly and never
calls into the fiber recursion, so the two counts are independent checks of
each other.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from typing import Any, Literal

from .core import Barcode, BettiCurve, Interval
from .errors import InvalidWeightError

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Weights
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Weight:
    """Element of the A_n root lattice, stored in simple-root coordinates z_1..z_n."""
    simple_coords: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coords = tuple(self.simple_coords)
        for z in coords:
            if isinstance(z, bool) or not isinstance(z, int):
                raise InvalidWeightError(f"weight coordinates must be integers, got {z!r}")
        object.__setattr__(self, "simple_coords", coords)

    @property
    def rank(self) -> int:
        return len(self.simple_coords)

    @property
    def standard_coords(self) -> tuple[int, ...]:
        """(mu_1, ..., mu_{n+1}) with mu_i = z_i - z_{i-1}, z_0 = z_{n+1} = 0."""
        padded = (0, *self.simple_coords, 0)
        return tuple(padded[i] - padded[i - 1] for i in range(1, len(padded)))

    @classmethod
    def from_standard(cls, mu: Sequence[int]) -> Weight:
        mu = tuple(mu)
        if not mu:
            raise InvalidWeightError("standard coordinates need at least one entry")
        if sum(mu) != 0:
            raise InvalidWeightError(
                f"standard coordinates must sum to 0 to lie in the root lattice, got {mu}"
            )
        coords: list[int] = []
        running = 0
        for m in mu[:-1]:
            running += m
            coords.append(running)
        return cls(tuple(coords))

    @property
    def is_positive(self) -> bool:
        """True iff every simple coordinate is >= 0 (the positive cone)."""
        return all(z >= 0 for z in self.simple_coords)

    def require_positive(self) -> None:
        if not self.is_positive:
            raise InvalidWeightError(
                f"weight {self.simple_coords} has a negative simple coordinate; "
                "the Kostant partition function vanishes outside the positive cone, "
                "and only weights inside it are accepted"
            )

    def __add__(self, other: Weight) -> Weight:
        if other.rank != self.rank:
            raise InvalidWeightError(f"cannot add weights of ranks {self.rank} and {other.rank}")
        return Weight(tuple(a + b for a, b in zip(self.simple_coords, other.simple_coords)))

    # ----- Serialization -----

    def to_json(self, basis: Literal["simple", "standard"] = "simple") -> dict[str, Any]:
        coords = self.simple_coords if basis == "simple" else self.standard_coords
        return {"basis": basis, "coords": list(coords)}

    @classmethod
    def from_json(cls, data: Any) -> Weight:
        from dacite import Config, DaciteError, from_dict

        if not isinstance(data, dict):
            raise InvalidWeightError(f"weight JSON must be an object, got {data!r}")
        try:
            spec = from_dict(data_class=WeightSpec, data=data, config=Config(strict=True))
        except (DaciteError, TypeError) as exc:
            raise InvalidWeightError(f"invalid weight JSON {data!r}: {exc}") from exc
        return spec.to_weight()

    @classmethod
    def parse(cls, text: str, basis: Literal["simple", "standard"] = "simple") -> Weight:
        try:
            coords = [int(part) for part in text.split(",")] if text.strip() else []
        except ValueError as exc:
            raise InvalidWeightError(f"malformed weight literal {text!r}") from exc
        return WeightSpec(basis=basis, coords=coords).to_weight()


@dataclass
class WeightSpec:
    """Wire form of a weight: {"basis": "simple"|"standard", "coords": [...]}."""
    basis: Literal["simple", "standard"]
    coords: list[int]

    def to_weight(self) -> Weight:
        if self.basis == "standard":
            return Weight.from_standard(self.coords)
        return Weight(tuple(self.coords))


def weight_of_betti(beta: BettiCurve) -> Weight:
    """mu = sum beta_i alpha_i."""
    return Weight(beta.values)


# ---------------------------------------------------------------------------
# Positive roots
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class PositiveRoot:
    """e_i - e_j with i < j; the same index pair as the interval [i, j)."""
    i: int
    j: int

    def __post_init__(self) -> None:
        if not (1 <= self.i < self.j):
            raise InvalidWeightError(f"positive root ({self.i},{self.j}) needs 1 <= i < j")

    @property
    def length(self) -> int:
        return self.j - self.i

    def to_interval(self) -> Interval:
        return Interval(self.i, self.j)

    @classmethod
    def from_interval(cls, interval: Interval) -> PositiveRoot:
        return cls(interval.birth, interval.death)

    def to_weight(self, n: int) -> Weight:
        return Weight(tuple(1 if self.i <= k < self.j else 0 for k in range(1, n + 1)))

    def __str__(self) -> str:
        return f"e{self.i}-e{self.j}"


RootPartition = tuple[tuple[PositiveRoot, int], ...]


def positive_roots(n: int) -> list[PositiveRoot]:
    """All n(n+1)/2 positive roots of A_n in lexicographic order."""
    if n < 1:
        raise InvalidWeightError(f"A_n needs n >= 1, got {n}")
    return [PositiveRoot(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 2)]


def simple_roots(n: int) -> list[PositiveRoot]:
    return [PositiveRoot(i, i + 1) for i in range(1, n + 1)]


def highest_root(n: int) -> PositiveRoot:
    if n < 1:
        raise InvalidWeightError(f"A_n needs n >= 1, got {n}")
    return PositiveRoot(1, n + 1)


# ---------------------------------------------------------------------------
# Kostant partition function
# ---------------------------------------------------------------------------

# (length, multiplicity) of the roots starting at one index
Choice = tuple[tuple[int, int], ...]


def _choices_at_first_index(
    remaining: tuple[int, ...],
) -> Iterator[tuple[Choice, tuple[int, ...]]]:
    """Every way to absorb remaining[0] with roots e_1 - e_{1+L}.

    Yields the chosen (L, multiplicity) pairs and what is left at indices
    2..n. Longer roots are decided first; the simple root takes the rest.
    """
    stack: list[tuple[int, int, tuple[int, ...], Choice]] = [
        (len(remaining), remaining[0], remaining[1:], ())
    ]
    while stack:
        length, budget, rest, chosen = stack.pop()
        if length == 1:
            yield (chosen + ((1, budget),) if budget else chosen), rest
            continue
        # A root of this length also covers rest[:length - 1]
        span = rest[: length - 1]
        for m in range(min(budget, min(span)), -1, -1):
            covered = tuple(z - m for z in span) if m else span
            picked = chosen + ((length, m),) if m else chosen
            stack.append((length - 1, budget - m, covered + rest[length - 1 :], picked))


def kostant_partitions(mu: Weight) -> list[RootPartition]:
    """Every multiset of positive roots summing to mu, in canonical order."""
    mu.require_positive()
    layer: list[tuple[tuple[int, ...], list[tuple[PositiveRoot, int]]]] = [(mu.simple_coords, [])]
    for i in range(1, mu.rank + 1):
        layer = [
            (rest, chosen + [(PositiveRoot(i, i + length), m) for length, m in choice])
            for remaining, chosen in layer
            for choice, rest in _choices_at_first_index(remaining)
        ]
    return sorted(tuple(sorted(chosen)) for _, chosen in layer)


def kostant_count(mu: Weight) -> int:
    """K(mu): number of ways to write mu as a sum of positive roots. K(0) = 1.

    Sweeps the indices left to right, tracking how many ways reach each remainder.
    """
    mu.require_positive()
    layer: dict[tuple[int, ...], int] = {mu.simple_coords: 1}
    for _ in range(mu.rank):
        nxt: defaultdict[tuple[int, ...], int] = defaultdict(int)
        for remaining, ways in layer.items():
            for _, rest in _choices_at_first_index(remaining):
                nxt[rest] += ways
        layer = nxt
    count = sum(layer.values())
    logger.debug("K%s = %d", mu.simple_coords, count)
    return count


# ---------------------------------------------------------------------------
# Partitions <-> barcodes
# ---------------------------------------------------------------------------

def partition_to_barcode(partition: RootPartition) -> Barcode:
    """Root e_i - e_j with multiplicity m becomes the bar [i, j) with multiplicity m."""
    return Barcode(tuple((root.to_interval(), m) for root, m in partition))


def barcode_to_partition(barcode: Barcode) -> RootPartition:
    return tuple(sorted((PositiveRoot.from_interval(iv), m) for iv, m in barcode))


def partition_weight(partition: RootPartition, n: int) -> Weight:
    total = Weight((0,) * n)
    for root, m in partition:
        step = root.to_weight(n)
        total = total + Weight(tuple(m * z for z in step.simple_coords))
    return total


def format_partition(partition: RootPartition) -> str:
    """e.g. "(e1-e3) + 2*(e2-e3)"; the empty partition is "0"."""
    if not partition:
        return "0"
    return " + ".join(f"({root})" if m == 1 else f"{m}*({root})" for root, m in partition)
