import json

import pytest

from betti_fibers.cli import cli
from betti_fibers.fiber import clear_count_cache

from conftest import DATA

DATA_PATHS = sorted(DATA.glob("*.in"))


@pytest.fixture(params=DATA_PATHS, ids=lambda p: p.name)
def data(request):
    inp = request.param
    outp = inp.with_suffix(".out")
    with inp.open(encoding="utf-8") as inf, outp.open(encoding="utf-8") as outf:
        return next(inf).rstrip(), inf.read(), outf.read()


def test_data(data, runner):
    args, input, output = data
    for _ in range(3):
        clear_count_cache()
        result = runner.invoke(cli, args, input, catch_exceptions=False)
        assert result.output == output


@pytest.mark.parametrize("method", ["recursion", "brute", "kostant", "juggling"])
def test_count_methods_agree(runner, method):
    result = runner.invoke(cli, ["count", "1,2,2,1", "--method", method])
    assert result.exit_code == 0
    assert result.output == "18\n"


def test_count_with_workers(runner):
    result = runner.invoke(cli, ["--workers", "3", "count", "2,3,1,1,1"])
    assert result.exit_code == 0
    assert result.output == "32\n"


@pytest.mark.parametrize("literal", ["2,-1", "a,b", "1,,2"])
def test_bad_curve_is_usage_error(runner, literal):
    result = runner.invoke(cli, ["count", literal])
    assert result.exit_code == 2


def test_enumerate_refuses_past_cap(runner):
    result = runner.invoke(cli, ["--cap", "10", "enumerate", "2,3,2"])
    assert result.exit_code == 1
    assert "refusing to enumerate" in result.output
    assert "13" in result.output


def test_brute_refuses_long_curves(runner):
    result = runner.invoke(cli, ["count", "1,1,1,1,1,1,1", "--method", "brute"])
    assert result.exit_code == 1
    assert "brute force" in result.output


def test_enumerate_render(runner):
    result = runner.invoke(cli, ["enumerate", "1,1", "--format", "render", "--ascii"])
    assert result.exit_code == 0
    assert result.output == (
        "#1 {[1,2):1, [2,3):1}\n"
        "==  \n"
        "  ==\n"
        "1 2 \n"
        "\n"
        "#2 {[1,3):1}\n"
        "====\n"
        "1 2 \n"
    )


def test_kostant_simple_basis(runner):
    result = runner.invoke(cli, ["kostant", "2,3,2"])
    assert result.output == "13\n"


def test_kostant_rejects_negative_weight(runner):
    result = runner.invoke(cli, ["kostant", "1,-1"])
    assert result.exit_code == 1
    assert "positive cone" in result.output


def test_kostant_rejects_unbalanced_standard_weight(runner):
    result = runner.invoke(cli, ["kostant", "--basis", "standard", "1,0"])
    assert result.exit_code == 1


def test_juggle_validate_valid(runner):
    result = runner.invoke(cli, ["juggle", "--to", "validate"], "[[1, 0, -1], [0], [0]]")
    assert result.exit_code == 0
    assert result.output == "valid\n"


def test_juggle_validate_invalid_exit_code(runner):
    result = runner.invoke(cli, ["juggle", "--to", "validate"], "[[0, 1], [0, 1]]")
    assert result.exit_code == 1


def test_juggle_from_file(runner, tmp_path):
    path = tmp_path / "bars.json"
    path.write_text("[[1, 2, 1], [1, 3, 1], [3, 4, 1], [3, 6, 1]]", encoding="utf-8")
    result = runner.invoke(cli, ["juggle", str(path), "--to", "sequence"])
    assert result.exit_code == 0
    assert json.loads(result.output) == [
        [2, -1, 1, -1, 0, -1],
        [0, 2, -1, 0, -1],
        [2, -1, 0, -1],
        [0],
        [0],
        [0],
    ]


def test_juggle_round_trip_through_cli(runner):
    seq = runner.invoke(cli, ["juggle", "--to", "sequence", "--n", "3"], "[[1, 3, 2], [2, 4, 1], [3, 4, 1]]")
    back = runner.invoke(cli, ["juggle", "--to", "barcode"], seq.output)
    assert back.output == "[[1, 3, 2], [2, 4, 1], [3, 4, 1]]\n"


def test_juggle_barcode_rejects_non_image(runner):
    result = runner.invoke(cli, ["juggle", "--to", "barcode"], "[[1], [1]]")
    assert result.exit_code == 1
    assert "not <0>" in result.output


def test_juggle_bad_json(runner):
    result = runner.invoke(cli, ["juggle", "--to", "barcode"], "[[1, 0")
    assert result.exit_code == 1
    assert "not valid JSON" in result.output


def test_juggle_out_of_range_bar(runner):
    result = runner.invoke(cli, ["juggle", "--to", "sequence", "--n", "2"], "[[1, 5, 1]]")
    assert result.exit_code == 1
    assert "exceeds" in result.output


def test_config_file_sets_cap(runner, tmp_path):
    path = tmp_path / "fibers.json"
    path.write_text(json.dumps({"enumeration_cap": 5}), encoding="utf-8")
    result = runner.invoke(cli, ["--config", str(path), "enumerate", "2,3,2"])
    assert result.exit_code == 1
    assert "cap of 5" in result.output

    result = runner.invoke(cli, ["--config", str(path), "--cap", "20", "enumerate", "2,3,2"])
    assert result.exit_code == 0
    assert len(result.output.splitlines()) == 13


def test_config_file_rejects_unknown_field(runner, tmp_path):
    path = tmp_path / "fibers.json"
    path.write_text(json.dumps({"enumeration_limit": 5}), encoding="utf-8")
    result = runner.invoke(cli, ["--config", str(path), "count", "1"])
    assert result.exit_code == 1
    assert "invalid config" in result.output


def test_crosscheck_small_grid(runner, tmp_path):
    report = tmp_path / "mismatches.jsonl"
    result = runner.invoke(cli, [
        "crosscheck", "--max-n", "2", "--max-entry", "2", "--report-file", str(report),
    ])
    assert result.exit_code == 0
    assert result.output.splitlines()[-1] == "12/12 curves pass"
    assert not report.exists()
