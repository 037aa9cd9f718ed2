"""Text rendering of barcodes, juggling bucket diagrams and Young overlays.

Every renderer is a pure function of its input; outputs are byte-identical
across runs so they can be compared against golden text.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Barcode, BettiCurve, check_in_range
from .errors import InvalidSequenceError
from .fiber import YoungOverlay
from .juggling import JugglingSequence, is_valid


@dataclass(frozen=True)
class Glyphs:
    bar: str
    filled: str      # ordinary ball
    hollow: str      # magic ball
    overlay: str     # Young overlay cell
    cell: str        # Betti curve cell outside the overlay


_UNICODE = Glyphs(bar="━", filled="●", hollow="○", overlay="■", cell="□")
_ASCII = Glyphs(bar="=", filled="*", hollow="o", overlay="#", cell=".")


def glyphs_for(ascii_glyphs: bool) -> Glyphs:
    return _ASCII if ascii_glyphs else _UNICODE


@dataclass(frozen=True)
class Canvas:
    """Rectangular block of text; shorter rows are right-padded with spaces."""
    rows: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        rows = tuple(self.rows)
        width = max((len(r) for r in rows), default=0)
        object.__setattr__(self, "rows", tuple(r.ljust(width) for r in rows))

    @property
    def width(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def height(self) -> int:
        return len(self.rows)

    def text(self) -> str:
        return "".join(r + "\n" for r in self.rows)

    def __str__(self) -> str:
        return self.text()


# ---------------------------------------------------------------------------
# Barcodes
# ---------------------------------------------------------------------------

def render_barcode(barcode: Barcode, n: int, *, ascii_glyphs: bool = False) -> Canvas:
    """One row per bar copy in canonical order, then an index axis."""
    check_in_range(barcode, n)
    g = glyphs_for(ascii_glyphs)
    w = max(2, len(str(n)) + 1)
    rows = []
    for iv, m in barcode:
        row = "".join(g.bar * w if c in iv else " " * w for c in range(1, n + 1))
        rows.extend([row] * m)
    rows.append("".join(str(c).ljust(w) for c in range(1, n + 1)))
    return Canvas(tuple(rows))


# ---------------------------------------------------------------------------
# Bucket diagrams
# ---------------------------------------------------------------------------

def render_buckets(seq: JugglingSequence, *, ascii_glyphs: bool = False) -> Canvas:
    """Column i shows state s^i, row k (top = highest) shows |s^i_k| balls.

    Ordinary balls are filled glyphs, magic balls hollow ones.
    """
    verdict = is_valid(seq)
    if not verdict:
        raise InvalidSequenceError(f"invalid: {verdict.message}", verdict)
    g = glyphs_for(ascii_glyphs)
    top = seq.height
    cw = max(
        [1, len(str(seq.n))] + [abs(s.get(k)) for s in seq.states for k in range(1, top + 1)]
    )
    lw = len(str(top)) if top else 1

    def cell(v: int) -> str:
        return (g.filled * v if v > 0 else g.hollow * -v).ljust(cw)

    rows = []
    for k in range(top, 0, -1):
        rows.append(f"{str(k).rjust(lw)} | " + " ".join(cell(s.get(k)) for s in seq.states))
    body = len(seq.states) * cw + len(seq.states) - 1
    rows.append(" " * lw + " +" + "-" * (body + 1))
    rows.append(" " * lw + "   " + " ".join(str(i).ljust(cw) for i in range(len(seq.states))))
    return Canvas(tuple(rows))


# ---------------------------------------------------------------------------
# Young overlays
# ---------------------------------------------------------------------------

def render_overlay(overlay: YoungOverlay, *, ascii_glyphs: bool = False) -> Canvas:
    """Columns of beta_i cells stacked bottom-up; the lowest y_i of them belong to Y."""
    g = glyphs_for(ascii_glyphs)
    beta: BettiCurve = overlay.reference
    top = max(beta.values, default=0)
    n = len(beta)
    w = len(str(n))

    def cell(i: int, r: int) -> str:
        if r <= overlay.values[i]:
            return g.overlay.ljust(w)
        if r <= beta.values[i]:
            return g.cell.ljust(w)
        return " " * w

    rows = [" ".join(cell(i, r) for i in range(n)) for r in range(top, 0, -1)]
    rows.append(" ".join(str(c).ljust(w) for c in range(1, n + 1)))
    return Canvas(tuple(rows))
