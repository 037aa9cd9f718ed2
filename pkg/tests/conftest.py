import pathlib

import pytest
from click.testing import CliRunner

from betti_fibers.core import Barcode, BettiCurve
from betti_fibers.fiber import clear_count_cache

ROOT = pathlib.Path(__file__).parent
DATA = ROOT / "data"


@pytest.fixture(autouse=True)
def fresh_count_cache():
    clear_count_cache()
    yield
    clear_count_cache()


@pytest.fixture
def runner():
    return CliRunner()


def curve(text):
    return BettiCurve.parse(text)


def barcode(*triples):
    return Barcode.from_triples(triples)
