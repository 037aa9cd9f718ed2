import pytest

from betti_fibers.core import EMPTY_BARCODE
from betti_fibers.errors import BarOutOfRangeError, InvalidSequenceError
from betti_fibers.fiber import YoungOverlay
from betti_fibers.juggling import JugglingSequence, sigma
from betti_fibers.render import Canvas, glyphs_for, render_barcode, render_buckets, render_overlay

from conftest import DATA, barcode, curve


def test_canvas_pads_rows():
    canvas = Canvas(("ab", "c", ""))
    assert canvas.rows == ("ab", "c ", "  ")
    assert (canvas.width, canvas.height) == (2, 3)
    assert canvas.text() == "ab\nc \n  \n"
    assert Canvas().text() == ""


def test_render_single_bar():
    canvas = render_barcode(barcode((1, 4, 1)), 3)
    assert canvas.rows == ("━━━━━━", "1 2 3 ")


def test_render_barcode_repeats_rows_by_multiplicity():
    canvas = render_barcode(barcode((1, 2, 2), (2, 4, 1)), 3, ascii_glyphs=True)
    assert canvas.text() == (
        "==    \n"
        "==    \n"
        "  ====\n"
        "1 2 3 \n"
    )


def test_render_barcode_wide_axis():
    canvas = render_barcode(barcode((9, 11, 1)), 10, ascii_glyphs=True)
    assert canvas.rows[0] == " " * 24 + "======"
    assert canvas.rows[1].startswith("1  2  3  ")
    assert canvas.rows[1].rstrip().endswith("9  10")


def test_render_empty_barcode():
    assert render_barcode(EMPTY_BARCODE, 2).rows == ("1 2 ",)


def test_render_barcode_rejects_out_of_range():
    with pytest.raises(BarOutOfRangeError):
        render_barcode(barcode((1, 5, 1)), 3)


def test_render_buckets_golden():
    s = JugglingSequence.from_json([[1, 0, -1], [0], [0]])
    expected = (DATA / "juggle_buckets.out").read_text(encoding="utf-8")
    assert render_buckets(s).text() == expected


def test_render_buckets_ascii():
    s = sigma(barcode((1, 2, 1), (2, 3, 1)), 2)
    assert render_buckets(s, ascii_glyphs=True).text() == (
        "3 | o    \n"
        "2 |   o  \n"
        "1 | * *  \n"
        "  +------\n"
        "    0 1 2\n"
    )


def test_render_buckets_rejects_invalid():
    with pytest.raises(InvalidSequenceError):
        render_buckets(JugglingSequence.from_json([[0, 1], [0, 1]]))


def test_render_overlay():
    y = YoungOverlay((2, 1, 0), curve("2,3,2"))
    assert render_overlay(y, ascii_glyphs=True).text() == (
        "  .  \n"
        "# . .\n"
        "# # .\n"
        "1 2 3\n"
    )


def test_glyph_sets_differ():
    assert glyphs_for(True).bar == "="
    assert glyphs_for(False).hollow == "○"
