import pytest

from betti_fibers.core import betti_of
from betti_fibers.errors import InvalidWeightError
from betti_fibers.fiber import count_barcodes, enumerate_barcodes
from betti_fibers.kostant import (
    PositiveRoot,
    Weight,
    barcode_to_partition,
    format_partition,
    highest_root,
    kostant_count,
    kostant_partitions,
    partition_to_barcode,
    partition_weight,
    positive_roots,
    simple_roots,
    weight_of_betti,
)

from conftest import curve


def test_standard_and_simple_coordinates():
    mu = Weight.from_standard((1, 1, -1, -1))
    assert mu.simple_coords == (1, 2, 1)
    assert mu.standard_coords == (1, 1, -1, -1)
    assert mu.rank == 3


@pytest.mark.parametrize("coords", [(), (1, 1)])
def test_from_standard_rejects(coords):
    with pytest.raises(InvalidWeightError):
        Weight.from_standard(coords)


def test_weight_json():
    assert Weight.from_json({"basis": "standard", "coords": [1, 0, -1]}) == Weight((1, 1))
    assert Weight.from_json({"basis": "simple", "coords": [1, 1]}).to_json("standard") == {
        "basis": "standard",
        "coords": [1, 0, -1],
    }
    with pytest.raises(InvalidWeightError):
        Weight.from_json({"basis": "fundamental", "coords": [1]})
    with pytest.raises(InvalidWeightError):
        Weight.from_json({"coords": [1]})


def test_weight_parse():
    assert Weight.parse("1,2,1") == Weight((1, 2, 1))
    assert Weight.parse("1,1,-1,-1", "standard") == Weight((1, 2, 1))
    with pytest.raises(InvalidWeightError):
        Weight.parse("1,a")


def test_positive_roots_of_a3():
    roots = positive_roots(3)
    assert len(roots) == 6
    assert [str(r) for r in roots] == ["e1-e2", "e1-e3", "e1-e4", "e2-e3", "e2-e4", "e3-e4"]
    assert simple_roots(3) == [PositiveRoot(1, 2), PositiveRoot(2, 3), PositiveRoot(3, 4)]
    assert highest_root(3).to_weight(3) == Weight((1, 1, 1))
    with pytest.raises(InvalidWeightError):
        positive_roots(0)


def test_root_weight_is_sum_of_simple_roots():
    assert PositiveRoot(2, 4).to_weight(4).simple_coords == (0, 1, 1, 0)


def test_kostant_example_five_partitions():
    mu = Weight.from_standard((1, 1, -1, -1))
    partitions = kostant_partitions(mu)
    assert kostant_count(mu) == len(partitions) == 5
    assert [format_partition(p) for p in partitions] == [
        "(e1-e2) + (e2-e3) + (e2-e4)",
        "(e1-e2) + 2*(e2-e3) + (e3-e4)",
        "(e1-e3) + (e2-e3) + (e3-e4)",
        "(e1-e3) + (e2-e4)",
        "(e1-e4) + (e2-e3)",
    ]


def test_kostant_of_zero_and_simple_root():
    assert kostant_count(Weight((0, 0, 0))) == 1
    assert kostant_partitions(Weight((0, 0))) == [()]
    assert format_partition(()) == "0"
    assert kostant_count(Weight((1,))) == 1
    assert kostant_count(Weight(())) == 1


def test_kostant_rejects_outside_positive_cone():
    with pytest.raises(InvalidWeightError):
        kostant_count(Weight((1, -1)))
    with pytest.raises(InvalidWeightError):
        kostant_partitions(Weight((0, -1)))


@pytest.mark.parametrize("text,expected", [("2,3,2", 13), ("2,3,1,1,1", 32)])
def test_kostant_counts(text, expected):
    assert kostant_count(weight_of_betti(curve(text))) == expected


def test_partitions_are_barcodes():
    beta = curve("2,3,2")
    mu = weight_of_betti(beta)
    barcodes = [partition_to_barcode(p) for p in kostant_partitions(mu)]
    assert sorted(b.triples() for b in barcodes) == [b.triples() for b in enumerate_barcodes(beta)]
    for p in kostant_partitions(mu):
        assert partition_weight(p, 3) == mu
        b = partition_to_barcode(p)
        assert betti_of(b, 3) == beta
        assert barcode_to_partition(b) == p


def test_kostant_matches_fiber_count_on_longer_curves():
    for text in ["1,2,3,2,1", "3,1,3,1", "2,2,2,2,2"]:
        beta = curve(text)
        assert kostant_count(weight_of_betti(beta)) == count_barcodes(beta)


def test_weight_json_rejects_non_objects():
    for data in ([1, 2], "1,2", None):
        with pytest.raises(InvalidWeightError):
            Weight.from_json(data)


def test_kostant_on_high_rank():
    assert kostant_count(Weight((0,) * 40)) == 1
    assert kostant_partitions(Weight((0,) * 40)) == [()]
    ones = Weight((1,) * 23)
    assert kostant_count(ones) == 2**22
    assert kostant_count(ones) == count_barcodes(curve(",".join(["1"] * 23)))
