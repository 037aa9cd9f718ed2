"""Magic juggling states and sequences, and the bijection with barcodes.

A state <s_1, ..., s_h> is zero-padded forever; s_k is the signed number of
balls landing k steps from now (negative entries are magic balls). A
sequence (s^0, ..., s^n) is valid iff every state holds the same number of
balls and s^{i-1}_{k+1} <= s^i_k for all 1 <= i <= n, k >= 1.

sigma sends a barcode B to the differentials of its truncations, and a bar
[i, i+j) of multiplicity m is exactly m throws to height j at step i.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from typing import Any, Literal

from .config import DEFAULT_ENUMERATION_CAP
from .core import Barcode, BettiCurve, Interval, betti_of, check_in_range
from .errors import (
    EnumerationCapError,
    InvalidBettiCurveError,
    InvalidJugglingStateError,
    InvalidSequenceError,
    InvalidWeightError,
)
from .kostant import Weight

logger = logging.getLogger(__name__)


def _trim(entries: Sequence[int]) -> tuple[int, ...]:
    end = len(entries)
    while end and entries[end - 1] == 0:
        end -= 1
    return tuple(entries[:end])


# ---------------------------------------------------------------------------
# States and sequences
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class JugglingState:
    """Zero-padded integer vector, stored with trailing zeros trimmed (<0> is empty)."""
    entries: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for s in self.entries:
            if isinstance(s, bool) or not isinstance(s, int):
                raise InvalidJugglingStateError(f"state entries must be integers, got {s!r}")
        entries = _trim(tuple(self.entries))
        if sum(entries) < 0:
            raise InvalidJugglingStateError(
                f"state {entries} holds {sum(entries)} balls; a state needs >= 0"
            )
        object.__setattr__(self, "entries", entries)

    @property
    def balls(self) -> int:
        return sum(self.entries)

    @property
    def height(self) -> int:
        """Index of the last nonzero entry (0 for <0>)."""
        return len(self.entries)

    def get(self, k: int) -> int:
        """s_k with the padding convention: zero for k < 1 and k > height."""
        return self.entries[k - 1] if 1 <= k <= len(self.entries) else 0

    def pad(self, h: int) -> tuple[int, ...]:
        return tuple(self.get(k) for k in range(1, max(h, self.height) + 1))

    def __str__(self) -> str:
        return "<" + ",".join(str(s) for s in (self.entries or (0,))) + ">"


ZERO_STATE = JugglingState()


@dataclass(frozen=True)
class JugglingSequence:
    """States (s^0, ..., s^n); validity is checked by `is_valid`, not here."""
    states: tuple[JugglingState, ...]

    def __post_init__(self) -> None:
        states = tuple(self.states)
        if not states:
            raise InvalidJugglingStateError("a juggling sequence needs at least one state")
        object.__setattr__(self, "states", states)

    @property
    def n(self) -> int:
        return len(self.states) - 1

    @property
    def height(self) -> int:
        return max(s.height for s in self.states)

    def __getitem__(self, i: int) -> JugglingState:
        return self.states[i]

    def __len__(self) -> int:
        return len(self.states)

    def sort_key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(s.entries for s in self.states)

    def to_json(self) -> list[list[int]]:
        """States as trimmed integer arrays; <0> is written [0]."""
        return [list(s.entries) or [0] for s in self.states]

    @classmethod
    def from_json(cls, data: Any) -> JugglingSequence:
        if not isinstance(data, list) or not all(isinstance(s, list) for s in data):
            raise InvalidJugglingStateError(
                f"juggling sequence JSON must be an array of integer arrays, got {data!r}"
            )
        return cls(tuple(JugglingState(tuple(s)) for s in data))

    def __str__(self) -> str:
        return "(" + ", ".join(str(s) for s in self.states) + ")"


@dataclass(frozen=True)
class Differential:
    """delta(beta) = (beta_1, beta_2 - beta_1, ..., -beta_n), length n + 1."""
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        if sum(self.entries) != 0:
            raise InvalidJugglingStateError(f"differential {self.entries} must sum to 0")

    @property
    def state(self) -> JugglingState:
        return JugglingState(self.entries)


@dataclass(frozen=True)
class Verdict:
    """Outcome of the validity check; the first violation when invalid."""
    valid: bool
    clause: Literal["i", "ii"] | None = None
    step: int | None = None
    height: int | None = None
    message: str = "valid"

    def __bool__(self) -> bool:
        return self.valid


# ---------------------------------------------------------------------------
# Differentials and truncations
# ---------------------------------------------------------------------------

def differential(beta: BettiCurve) -> Differential:
    padded = (0, *beta.values, 0)
    return Differential(tuple(padded[i] - padded[i - 1] for i in range(1, len(padded))))


def integrate(entries: Sequence[int]) -> BettiCurve:
    """Inverse of `differential`: prefix sums, which must be >= 0 and end at 0."""
    entries = tuple(entries)
    if not entries:
        raise InvalidBettiCurveError("cannot integrate an empty differential")
    if sum(entries) != 0:
        raise InvalidBettiCurveError(f"{entries} sums to {sum(entries)}, not 0")
    values, running = [], 0
    for s in entries[:-1]:
        running += s
        if running < 0:
            raise InvalidBettiCurveError(f"{entries} has a negative prefix sum")
        values.append(running)
    return BettiCurve(tuple(values))


def truncate(barcode: Barcode, i: int) -> Barcode:
    """Drop bars born at or before i, shift the rest i steps left."""
    if i < 0:
        raise InvalidBettiCurveError(f"truncation index must be >= 0, got {i}")
    return Barcode(tuple(
        (Interval(iv.birth - i, iv.death - i), m) for iv, m in barcode if iv.birth >= i + 1
    ))


# ---------------------------------------------------------------------------
# Validity
# ---------------------------------------------------------------------------

def is_valid(seq: JugglingSequence) -> Verdict:
    """Check constant ball counts (clause i), then the shift inequality (clause ii)."""
    total = seq[0].balls
    for i, state in enumerate(seq.states):
        if state.balls != total:
            return Verdict(
                False, "i", step=i,
                message=f"clause (i) at step {i}: state holds {state.balls} balls, "
                        f"state 0 holds {total}",
            )
    for i in range(1, len(seq)):
        prev, cur = seq[i - 1], seq[i]
        for k in range(1, max(prev.height, cur.height) + 1):
            if prev.get(k + 1) > cur.get(k):
                return Verdict(
                    False, "ii", step=i, height=k,
                    message=f"clause (ii) at i={i}, k={k}: "
                            f"s^{i - 1}_{k + 1} = {prev.get(k + 1)} > s^{i}_{k} = {cur.get(k)}",
                )
    return Verdict(True)


def _require_valid(seq: JugglingSequence) -> None:
    verdict = is_valid(seq)
    if not verdict:
        raise InvalidSequenceError(f"invalid: {verdict.message}", verdict)


def throws_at(seq: JugglingSequence, i: int) -> dict[int, int]:
    """Nonzero throw counts {height: count} for the transition into step i."""
    _require_valid(seq)
    if not 1 <= i <= seq.n:
        raise InvalidSequenceError(f"step {i} outside 1..{seq.n}")
    prev, cur = seq[i - 1], seq[i]
    throws = {}
    for j in range(1, max(prev.height, cur.height) + 1):
        t = cur.get(j) - prev.get(j + 1)
        if t:
            throws[j] = t
    return throws


# ---------------------------------------------------------------------------
# The juggling map and its inverse
# ---------------------------------------------------------------------------

def sigma(barcode: Barcode, n: int) -> JugglingSequence:
    """(<delta(B^0)>, ..., <delta(B^n)>) with B^i the i-truncation of B."""
    if n < 0:
        raise InvalidBettiCurveError(f"n must be >= 0, got {n}")
    check_in_range(barcode, n)
    return JugglingSequence(tuple(
        differential(betti_of(truncate(barcode, i), n)).state for i in range(n + 1)
    ))


def sigma_inverse(seq: JugglingSequence) -> Barcode:
    """Read the barcode off a sequence: [i, i+j) has multiplicity s^i_j - s^{i-1}_{j+1}."""
    _require_valid(seq)
    n = seq.n
    if seq[-1] != ZERO_STATE:
        raise InvalidSequenceError(f"terminal state {seq[-1]} is not <0>")
    if seq[0].height > n + 1:
        raise InvalidSequenceError(
            f"initial state {seq[0]} is nonzero beyond entry {n + 1}"
        )
    bars = []
    for i in range(1, n + 1):
        for j, t in throws_at(seq, i).items():
            bars.append((Interval(i, i + j), t))
    barcode = Barcode(tuple(bars))
    if sigma(barcode, n) != seq:
        raise InvalidSequenceError(f"{seq} is not the image of a barcode")
    return barcode


def initial_betti(seq: JugglingSequence) -> BettiCurve:
    """beta with <delta(beta)> = s^0, for a valid sequence ending at <0>."""
    _require_valid(seq)
    if seq[-1] != ZERO_STATE:
        raise InvalidSequenceError(f"terminal state {seq[-1]} is not <0>")
    return integrate(seq[0].pad(seq.n + 1))


# ---------------------------------------------------------------------------
# Sequence enumeration
# ---------------------------------------------------------------------------

def _distributions(balls: int, heights: int) -> Iterator[tuple[int, ...]]:
    """All ways to throw `balls` to heights 1..`heights` (nonnegative counts)."""
    if heights == 1:
        yield (balls,)
        return
    for t in range(balls, -1, -1):
        for rest in _distributions(balls - t, heights - 1):
            yield (t, *rest)


def enumerate_sequences(
    a: JugglingState, b: JugglingState, n: int, *, cap: int = DEFAULT_ENUMERATION_CAP,
) -> list[JugglingSequence]:
    """JS(a, b, n): every magic juggling sequence of length n from a to b, canonical order."""
    if n < 0:
        raise InvalidSequenceError(f"length must be >= 0, got {n}")
    if a.balls != b.balls:
        return []
    target = b.entries
    found: list[JugglingSequence] = []
    path: list[JugglingState] = [a]

    def fits_target(state: tuple[int, ...], remaining: int) -> bool:
        # Entries past `remaining` never reach the hand again, and throws only add
        for k in range(remaining + 1, len(state) + 1):
            land = k - remaining
            if state[k - 1] > (target[land - 1] if land <= len(target) else 0):
                return False
        return True

    def expand(i: int, state: tuple[int, ...]) -> None:
        if i == n:
            if _trim(state) == target:
                found.append(JugglingSequence(tuple(path)))
                if len(found) > cap:
                    raise EnumerationCapError("juggling sequences", cap, cap, exact=False)
            return
        hand = state[0] if state else 0
        if hand < 0:
            return
        step = i + 1
        rest = list(state[1:])
        limit = max(len(target) + n - step, len(a.entries) - step + 1, 1) if hand else 0
        if len(rest) < limit:
            rest.extend([0] * (limit - len(rest)))
        throws = _distributions(hand, limit) if hand else iter([()])
        for t in throws:
            nxt = list(rest)
            for j, count in enumerate(t):
                nxt[j] += count
            nxt_state = _trim(nxt)
            if not fits_target(nxt_state, n - step):
                continue
            path.append(JugglingState(nxt_state))
            expand(step, nxt_state)
            path.pop()

    expand(0, a.entries)
    logger.debug("JS(%s, %s, %d) has %d sequences", a, b, n, len(found))
    return sorted(found, key=JugglingSequence.sort_key)


def kostant_via_juggling(
    mu: Weight, n: int | None = None, *, cap: int = DEFAULT_ENUMERATION_CAP,
) -> int:
    """K(mu) as |JS(<mu_1..mu_n>, <mu_1 + ... + mu_n>, n)| in standard coordinates."""
    mu.require_positive()
    rank = mu.rank if n is None else n
    if rank != mu.rank:
        raise InvalidWeightError(f"weight has rank {mu.rank}, not {rank}")
    standard = mu.standard_coords
    head = standard[:rank]
    a = JugglingState(head)
    b = JugglingState((sum(head),))
    return len(enumerate_sequences(a, b, rank, cap=cap))
