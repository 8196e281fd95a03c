"""
This test suite implements the tests for the module :mod:`cli._commands`.

"""

# === Imports ===

import json
from fractions import Fraction
from io import StringIO
from pathlib import Path
from typing import List

import numpy as np
import pandas as pd
import pytest
from click.testing import CliRunner

from self_descriptive import __version__
from self_descriptive.cli import cli

# === Constants ===

# the exact frequencies of the BJM sequence
BJM_F1 = (7.0 - np.sqrt(17.0)) / 4.0
BJM_DFREQ = (1.0 + np.sqrt(17.0)) / 8.0

# the deviation caused by rounding to 12 significant digits
ROUNDING_ATOL = 1e-11

# === Auxiliary Functions ===


def _invoke(args: List[str]):
    return CliRunner().invoke(cli, args, catch_exceptions=False)


def _parse_fraction(text: str) -> Fraction:
    numerator, denominator = text.split("/")
    return Fraction(int(numerator), int(denominator))


def _read_csv(text: str) -> pd.DataFrame:
    residual_columns = {f"e_{letter}": str for letter in "abcd"}
    return pd.read_csv(
        StringIO(text),
        dtype={"x1": str, "x2": str, "word": str, **residual_columns},
    )


# === Tests ===


@pytest.mark.parametrize(
    "x1, x2, n, expected",
    [
        ("121", "12", "9", "221112122\n"),  # Test 0: the worked example
        ("12", "1", "10", "2211121112\n"),  # Test 1: the BJM sequence
        ("1", "1", "1e1", "2211111111\n"),  # Test 2: scientific notation
        ("2", "2", "2", "22\n"),  # Test 3: only the seed
    ],
)
def test_generate_raw(x1: str, x2: str, n: str, expected: str) -> None:
    """
    This test checks whether ``generate`` writes the letters of ``u``.

    """

    result = _invoke(["generate", "--t1", x1, "--t2", x2, "--n", n])
    assert result.exit_code == 0
    assert result.stdout == expected


def test_generate_runs() -> None:
    """
    This test checks whether ``generate --format runs`` writes one CSV row per run
    that starts before ``n``.

    """

    result = _invoke(
        ["generate", "--t1", "121", "--t2", "12", "--n", "9", "--format", "runs"]
    )
    assert result.exit_code == 0
    assert result.stdout == (
        "k,length,letter,start,source\n"
        "0,2,2,0,SEED\n"
        "1,2,1,2,T2\n"
        "2,1,1,4,T1\n"
        "3,1,2,5,T1\n"
        "4,1,1,6,T1\n"
        "5,2,2,7,T2\n"
    )


def test_generate_long_output_matches_chunks(tmp_path: Path) -> None:
    """
    This test checks whether a long output that is written in chunks and into a file
    is identical to the output on the standard output.

    """

    out = tmp_path / "letters.txt"
    args = ["generate", "--t1", "12", "--t2", "1", "--n", "3e6"]
    to_file = _invoke(args + ["--out", str(out)])
    to_stdout = _invoke(args)

    assert to_file.exit_code == 0 and to_stdout.exit_code == 0
    text = out.read_text(encoding="utf-8")
    assert len(text) == 3_000_001
    assert text == to_stdout.stdout


@pytest.mark.parametrize(
    "args",
    [
        ["generate", "--t1", "12", "--t2", "1", "--n", "1"],  # Test 0: n too small
        ["generate", "--t1", "13", "--t2", "1", "--n", "10"],  # Test 1: bad word
        ["generate", "--t1", "", "--t2", "1", "--n", "10"],  # Test 2: empty word
        ["generate", "--t1", "12", "--t2", "1", "--n", "1.5"],  # Test 3: fraction
        ["generate", "--t1", "12", "--t2", "1", "--n", "-3"],  # Test 4: negative
        ["generate", "--t2", "1", "--n", "10"],  # Test 5: missing director
        ["freq", "--t1", "12", "--t2", "1", "--n", "999"],  # Test 6: n too small
        ["freq", "--t1", "12", "--t2", "1", "--n", "1e4", "--checkpoints", "1e4,1e3"],
        ["freq", "--t1", "12", "--t2", "1", "--n", "1e4", "--checkpoints", "1e5"],
        ["blocks", "--t1", "12", "--t2", "1", "--levels", "61"],  # Test 9
        ["blocks", "--t1", "2", "--t2", "2", "--levels", "40", "--words"],  # Test 10
        ["cut", "--t1", "12", "--t2", "1", "--n", "100"],  # Test 11: n too small
        ["sweep", "--max-period", "7"],  # Test 12: period too large
        ["sweep", "--max-period", "1", "--n", "1e4"],  # Test 13: n too small
    ],
)
def test_invalid_arguments(args: List[str]) -> None:
    """
    This test checks whether invalid arguments make the commands exit with the code 2.

    """

    result = CliRunner().invoke(cli, args)
    assert result.exit_code == 2


def test_unwritable_output(tmp_path: Path) -> None:
    """
    This test checks whether an output that cannot be written makes the commands exit
    with the code 3.

    """

    out = tmp_path / "missing" / "letters.txt"
    for args in (
        ["generate", "--t1", "12", "--t2", "1", "--n", "10"],
        ["theory", "--t1", "12", "--t2", "1"],
    ):
        result = CliRunner().invoke(cli, args + ["--out", str(out)])
        assert result.exit_code == 3


def test_theory_bjm() -> None:
    """
    This test checks whether ``theory`` reports the exact BJM frequencies.

    """

    result = _invoke(["theory", "--t1", "12", "--t2", "1"])
    assert result.exit_code == 0
    report = json.loads(result.stdout)

    assert report["t1"] == "12" and report["t2"] == "1"
    assert report["p1"] == "1/2"
    assert report["q2"] == "0/1"
    assert report["delta_rational"] == "17/4"
    assert report["delta"] == 4.25
    assert report["f1"] == pytest.approx(BJM_F1, abs=ROUNDING_ATOL)
    assert report["f2"] == pytest.approx(1.0 - BJM_F1, abs=ROUNDING_ATOL)
    assert report["dfreq"] == pytest.approx(BJM_DFREQ, abs=ROUNDING_ATOL)
    assert report["alpha1"] == pytest.approx((1 + np.sqrt(17.0)) / 4, abs=1e-11)
    assert report["alpha2"] == pytest.approx((1 - np.sqrt(17.0)) / 4, abs=1e-11)
    assert report["primitive"] is False


@pytest.mark.parametrize(
    "x1, x2, expected_f1, expected_primitive",
    [
        ("1", "1", 1.0, False),  # Test 0: all ones
        ("12", "12", 0.5, True),  # Test 1: balanced densities
        ("2", "1", 2.0 - np.sqrt(2.0), False),  # Test 2: corner with |α2| = α1
    ],
)
def test_theory(x1: str, x2: str, expected_f1: float, expected_primitive) -> None:
    """
    This test checks whether ``theory`` reports the frequency and the primitivity.

    """

    result = _invoke(["theory", "--t1", x1, "--t2", x2])
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report["f1"] == pytest.approx(expected_f1, abs=ROUNDING_ATOL)
    assert report["primitive"] is expected_primitive


def test_freq() -> None:
    """
    This test checks whether ``freq`` writes the rows of ``u`` followed by the rows of
    ``δ`` and whether the error of the directors 1 and 1 is ``2 / n``.

    """

    result = _invoke(["freq", "--t1", "1", "--t2", "1", "--n", "1e4"])
    assert result.exit_code == 0
    assert result.stdout.splitlines()[0] == "n,count1,emp,theory,err,series,decay"

    table = _read_csv(result.stdout)
    assert table["series"].tolist() == ["u", "u", "delta", "delta"]
    assert table["n"].tolist() == [1_000, 10_000, 1_000, 10_000]
    assert table["count1"].tolist() == [998, 9_998, 999, 9_999]
    assert table["err"].iloc[1] == pytest.approx(2e-4, rel=1e-10)
    assert np.isnan(table["decay"].iloc[0])
    assert table["decay"].iloc[1] == pytest.approx(0.1, rel=1e-10)


def test_freq_theory_agrees_with_theory() -> None:
    """
    This test checks whether the theory column of ``freq`` agrees with ``theory``.

    """

    args = ["--t1", "121", "--t2", "12"]
    theory = json.loads(_invoke(["theory"] + args).stdout)
    table = _read_csv(
        _invoke(["freq"] + args + ["--n", "2e3", "--checkpoints", "1e3,2e3"]).stdout
    )

    u_theory = table.loc[table["series"] == "u", "theory"]
    delta_theory = table.loc[table["series"] == "delta", "theory"]
    assert np.allclose(u_theory, theory["f1"], atol=1e-12, rtol=0.0)
    assert np.allclose(delta_theory, theory["dfreq"], atol=1e-12, rtol=0.0)


def test_blocks_worked_example() -> None:
    """
    This test checks whether ``blocks`` reproduces the first count vectors, their
    residuals, and the spelled out blocks.

    """

    result = _invoke(
        ["blocks", "--t1", "121", "--t2", "12", "--levels", "3", "--words"]
    )
    assert result.exit_code == 0
    assert result.stdout == (
        "n,length,n_a,n_b,n_c,n_d,e_a,e_b,e_c,e_d,word\n"
        "0,2,0,0,2,0,-1/3,1/3,0/1,0/1,cc\n"
        "1,2,1,1,0,0,1/3,-1/3,-1/1,1/1,ab\n"
        "2,3,1,0,0,2,,,,,add\n"
    )


def test_blocks_constant_directors() -> None:
    """
    This test checks whether the blocks of the directors 1 and 1 are constant from the
    level 1 on.

    """

    result = _invoke(["blocks", "--t1", "1", "--t2", "1", "--levels", "3"])
    table = _read_csv(result.stdout)
    assert "word" not in table.columns
    counts = table[["n_a", "n_b", "n_c", "n_d"]].values.tolist()
    assert counts == [[0, 0, 2, 0], [2, 0, 0, 0], [2, 0, 0, 0]]


def test_blocks_deep_levels() -> None:
    """
    This test checks whether ``blocks`` reports 30 levels of the BJM sequence with
    bounded residuals.

    """

    result = _invoke(["blocks", "--t1", "12", "--t2", "1", "--levels", "30"])
    table = _read_csv(result.stdout)
    assert len(table) == 30
    residuals = table[["e_a", "e_b", "e_c", "e_d"]].iloc[:-1]
    magnitudes = residuals.map(lambda text: abs(_parse_fraction(text)))
    assert magnitudes.values.max() <= 0.5


def test_cut() -> None:
    """
    This test checks whether ``cut`` reports the cut at the position 0 followed by the
    cuts at the checkpoints.

    """

    result = _invoke(["cut", "--t1", "12", "--t2", "1", "--n", "1e4"])
    assert result.exit_code == 0
    table = _read_csv(result.stdout)

    assert table.columns.tolist() == [
        "n",
        "l",
        "prefix_len",
        "g_len",
        "g_count1",
        "g_freq",
    ]
    assert table["n"].tolist() == [0, 999, 9_999]
    assert table["l"].iloc[0] == 0
    assert np.isnan(table["g_freq"].iloc[0])
    assert table["g_len"].is_monotonic_increasing
    assert table["prefix_len"].iloc[-1] ** 2 <= 10_000


def test_sweep(tmp_path: Path) -> None:
    """
    This test checks whether ``sweep`` writes the 4 corner cases of the period 1.

    """

    out = tmp_path / "sweep.csv"
    result = _invoke(["sweep", "--max-period", "1", "--out", str(out)])
    assert result.exit_code == 0
    table = pd.read_csv(out, dtype={"x1": str, "x2": str, "p1": str, "q2": str})

    assert table["x1"].tolist() == ["1", "1", "2", "2"]
    assert table["x2"].tolist() == ["1", "2", "1", "2"]
    assert table["p1"].tolist() == ["1/1", "1/1", "0/1", "0/1"]
    assert np.allclose(
        table["f1_theory"], [1.0, 0.0, 2.0 - np.sqrt(2.0), 0.0], atol=1e-11
    )
    assert table["primitive"].tolist() == [False] * 4


def test_version() -> None:
    """
    This test checks whether ``--version`` reports the version of the package.

    """

    result = _invoke(["--version"])
    assert result.exit_code == 0
    assert result.stdout.strip() == f"self-descriptive, version {__version__}"


@pytest.mark.parametrize(
    "args",
    [
        ["generate", "--t1", "112", "--t2", "21", "--n", "5e4"],
        ["theory", "--t1", "112", "--t2", "21"],
        ["freq", "--t1", "112", "--t2", "21", "--n", "5e4"],
        ["blocks", "--t1", "112", "--t2", "21", "--levels", "12", "--words"],
        ["cut", "--t1", "112", "--t2", "21", "--n", "5e4"],
    ],
)
def test_determinism(args: List[str]) -> None:
    """
    This test checks whether identical invocations give byte-identical outputs.

    """

    first = _invoke(args)
    second = _invoke(args)
    assert first.exit_code == 0
    assert first.stdout_bytes == second.stdout_bytes
